#ifndef QLANDSCAPE_ERRORS_HPP
#define QLANDSCAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlandscape {

// Base for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct TimeMismatch : Error { using Error::Error; };
struct NotCoplanar : Error { using Error::Error; };
struct ZeroInPlaneVector : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct BumpOutOfWindow : Error { using Error::Error; };
struct EpsNotOnGrid : Error { using Error::Error; };
struct NonTracelessV : Error { using Error::Error; };
struct ZeroCoupling : Error { using Error::Error; };
struct DegenerateDrift : Error { using Error::Error; };
struct TimeTooShort : Error { using Error::Error; };

// CLI-facing errors, mapped to process exit codes by the front end.
struct ConfigError : Error { using Error::Error; };   // exit 2
struct DataFileError : Error { using Error::Error; }; // exit 3

} // namespace qlandscape

#endif

#ifndef QLANDSCAPE_THEOREMS_HPP
#define QLANDSCAPE_THEOREMS_HPP

#include <map>
#include <string>
#include <vector>

#include "qlandscape/landscape.hpp"

namespace qlandscape {

/// Tri-state for strict-inequality hypotheses: values inside the numerical
/// margin are reported as boundary, not as a definite answer.
enum class HypothesisStatus { holds, fails, boundary };

std::string to_string(HypothesisStatus s);

struct Hypothesis {
    std::string name;
    double value = 0.0;
    HypothesisStatus status = HypothesisStatus::fails;
};

struct TheoremReport {
    std::string theorem_id; // "T1", "T2", "T3"
    std::vector<Hypothesis> hypotheses;
    std::string conclusion;
    bool all_hold = false;
    std::map<std::string, double> numbers;
};

/// Shifted-resonance threshold: f0 = -Tr(H0 V)/Tr(V^2) and
/// T0 = pi / ||H0 - (1/2) Tr H0 + f0 V|| (spectral norm). Requires Tr V = 0.
struct Theorem1Threshold {
    double f0 = 0.0;
    double T0 = 0.0;
};
Theorem1Threshold theorem1_threshold(const Hermitian2& h0, const Hermitian2& v);

/// Evaluates the trap hypotheses at final time T:
///   cond1: [(v x r0)_z cos 2T + (v . r0) sin 2T] (v x a)_z > 0
///   cond2: (r0 x a)_z cos 2T < (r0 . a) sin 2T
///   coplanarity of r0, a, v with respect to h0.
TheoremReport theorem2_conditions(const BlochVector& r0, const BlochVector& a,
                                  const BlochVector& v, const BlochVector& h0, double T);

/// For T > pi/2 certifies that f = 0 is not a trap: the classification is a
/// saddle, a global extremum, not critical, or constant — never a trap
/// candidate. Throws TimeTooShort for T <= pi/2.
TheoremReport theorem3_certificate(const ControlTask& task, std::size_t n);

} // namespace qlandscape

#endif

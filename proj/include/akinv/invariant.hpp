#pragma once

#include "akinv/expmap.hpp"

namespace akinv {

/// A pool element of minimal positive phi-degree, with that degree.
struct MinimalDegreeResult {
    AlgebraElement x;
    unsigned n;
};

/// Deterministic (first in pool order among minima). Throws ValidationError
/// when every pool element is invariant ("map acts trivially on pool").
MinimalDegreeResult minimal_positive_degree(const ExponentialMap& phi,
                                            const std::vector<AlgebraElement>& pool);

/// Default candidate pool: generators plus monomials in the generators up to
/// the given total degree, in a fixed deterministic order.
std::vector<AlgebraElement> default_candidate_pool(const AlgebraPtr& A, unsigned max_degree = 3);

/// Verifies n | deg_phi(a) for each nonzero sample. A counterexample proves
/// the candidate pool missed the true minimum; it is reported, not raised.
struct DivisibilityReport {
    struct Counterexample {
        std::string sample;
        int degree;
    };
    unsigned n = 1;
    unsigned checked = 0;
    std::vector<Counterexample> counterexamples;
    bool passed() const { return counterexamples.empty(); }
};

DivisibilityReport check_degree_divisibility(const ExponentialMap& phi, unsigned n,
                                             const std::vector<AlgebraElement>& samples);

/// Fraction-free certificate that a lies in A^phi[c^-1][x]:
///   c^power * a = sum_l coefficients[l] * x^l
/// with every coefficient invariant. Produced by the descending induction on
/// phi-degree; the certificate is normalized so that power is at least
/// deg_phi(a)/n.
struct InvariantRewrite {
    AlgebraElement x;
    unsigned n;
    AlgebraElement c;
    unsigned power;                            // L
    std::vector<AlgebraElement> coefficients;  // e_0 .. e_top, indices are x-powers

    /// Re-expands the identity and compares normal forms.
    bool reconstruction_holds(const ExponentialMap& phi, const AlgebraElement& a) const;
};

/// The rewriting induction: with d = deg_phi(r) = l*n, either absorb the
/// leading coefficient D^{ln}(r) directly when c^l divides it exactly, or
/// multiply through by c^l and subtract D^{ln}(r) x^l; recurse on the
/// remainder of strictly smaller degree. Throws ValidationError when an
/// intermediate degree is not divisible by n (the supplied x was not a
/// global minimum).
InvariantRewrite rewrite_in_invariants(const ExponentialMap& phi, const AlgebraElement& a,
                                       const AlgebraElement& x, unsigned n,
                                       const AlgebraElement& c);

}  // namespace akinv

#pragma once

#include <vector>

#include "akinv/polynomial.hpp"

namespace akinv {

/// Resource limits for Buchberger and normal-form computations. Exceeding a
/// cap raises ResourceError ("presentation too hard"), never a wrong answer.
struct GroebnerConfig {
    long max_reductions = 100000;
};

/// A reduced Groebner basis: generators are monic, no term of any generator
/// is divisible by the leading term of another, and the list is sorted by
/// leading monomial (descending) so the presentation is canonical.
class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, long characteristic);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    long characteristic() const { return p_; }
    bool empty() const { return gens_.empty(); }

    bool operator==(const GroebnerBasis& o) const {
        return p_ == o.p_ && order_ == o.order_ && gens_ == o.gens_;
    }

  private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    long p_;
};

/// Reduced Groebner basis of the ideal generated by gens. Deterministic for
/// fixed input and order: normal pair selection (lowest lcm degree first)
/// with both Buchberger criteria, then full inter-reduction and sorting.
/// characteristic_hint covers the empty-generator case (the zero ideal of an
/// F_p ring); -1 means infer from the generators.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerConfig& config = {}, long characteristic_hint = -1);

/// The unique remainder of f modulo gb: no term of the result is divisible
/// by any leading term of the basis. Linear and idempotent.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                       const GroebnerConfig& config = {});

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb,
                         const GroebnerConfig& config = {}) {
    return normal_form(f, gb, config).is_zero();
}

}  // namespace akinv

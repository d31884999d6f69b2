#pragma once

#include "akinv/expmap.hpp"

namespace akinv {

/// A point avoiding the zero set of a designated product polynomial, with
/// the nonzero witness value stored for re-checking.
struct SpecializationPoint {
    std::map<std::string, Scalar> values;
    Polynomial avoided;  // the product of all avoid polynomials
    Scalar witness;      // avoided evaluated at values; nonzero
};

/// Deterministic search (coordinates tried 0, 1, 2, ... in ascending
/// variable order, with backtracking) for a point where the product of the
/// avoid polynomials does not vanish. Over Q this always terminates; over
/// F_p exhaustion of the finite grid raises a "field too small" error.
SpecializationPoint find_good_point(const std::vector<Polynomial>& avoid, long characteristic);

/// The evaluation map sigma: A ⊗ B -> B sending each A-side generator to the
/// given constant and fixing B. The values must kill every relation of A;
/// otherwise the offending relation is named ("values not on the variety").
/// Keys are the (renamed) A-side variables of the tensor algebra.
AlgebraHom sigma_hom(const TensorProduct& T, const std::map<std::string, Scalar>& values);

/// psi = sigma . phi on B, with the full axiom verification re-run and the
/// iterative property re-checked on the generators. An axiom failure is
/// surfaced as a diagnostic that phi does not fix A.
struct PushResult {
    ExponentialMap psi;
    IterativityReport iterativity;
};

PushResult push_expmap(const ExponentialMap& phi, const TensorProduct& T, const AlgebraHom& sigma,
                       unsigned iterativity_bound = 6);

}  // namespace akinv

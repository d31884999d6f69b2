#pragma once

#include <memory>
#include <mutex>

#include "akinv/algebra.hpp"

namespace akinv {

/// One violated exponential-map axiom, with the witnessing generator or
/// relation and the nonzero defect polynomial.
struct AxiomFailure {
    enum class Kind {
        Epsilon0,              // setting t=0 does not recover the generator
        Comultiplication,      // phi_s phi_t != phi_{s+t} on a generator
        RelationPreservation,  // a defining relation does not map to 0
        NotLocallyNilpotent,   // derivation iterate fails to vanish in bound
    };
    Kind kind;
    std::string subject;  // generator name or relation rendering
    Polynomial witness;

    std::string describe() const;
};

struct ExpmapError : ValidationError {
    ExpmapError(const std::string& what, std::vector<AxiomFailure> f)
        : ValidationError(what), failures(std::move(f)) {}
    std::vector<AxiomFailure> failures;
};

/// A verified homomorphism phi: A -> A[t] satisfying the exponential-map
/// axioms: eps_0 phi = id and phi_s phi_t = phi_{s+t}. Exposes the
/// higher-derivation coefficients D^i (the t^i-coefficients of phi), the
/// phi-degree, and the invariant test. Values of phi are memoized per
/// element representative; the cache is synchronized so concurrent queries
/// behave as pure calls.
class ExponentialMap {
  public:
    const AlgebraPtr& algebra() const { return algebra_; }
    const std::map<std::string, Polynomial>& generator_images() const { return images_; }

    /// phi of an element, as a normal-form polynomial in the ring variables
    /// and t. The input representative must be t-free.
    Polynomial phi(const Polynomial& rep) const;
    Polynomial phi(const AlgebraElement& a) const { return phi(a.rep()); }

    /// D^i(a): the t^i-coefficient of phi(a). D^0 is the identity.
    AlgebraElement derivation_coeff(const AlgebraElement& a, unsigned i) const;

    /// deg_phi(a) = deg_t(phi(a)); -infinity for a = 0. Invariants are
    /// exactly the elements of non-positive degree.
    Degree phi_degree(const AlgebraElement& a) const;

    bool is_invariant(const AlgebraElement& a) const;
    bool is_trivial() const;

    friend ExponentialMap make_expmap(AlgebraPtr, const std::map<std::string, Polynomial>&);

  private:
    ExponentialMap(AlgebraPtr algebra, std::map<std::string, Polynomial> images)
        : algebra_(std::move(algebra)),
          images_(std::move(images)),
          cache_(std::make_shared<Cache>()) {}

    struct Cache {
        std::mutex mu;
        std::map<Polynomial, Polynomial> phi;
    };

    AlgebraPtr algebra_;
    std::map<std::string, Polynomial> images_;
    std::shared_ptr<Cache> cache_;
};

/// Check the axioms for candidate generator images (polynomials in the ring
/// variables and t). Returns all failures; empty means verified.
std::vector<AxiomFailure> verify_expmap(const AlgebraPtr& A,
                                        const std::map<std::string, Polynomial>& images);

/// Verified construction; throws ExpmapError carrying the failures.
ExponentialMap make_expmap(AlgebraPtr A, const std::map<std::string, Polynomial>& images);

/// The trivial (inclusion) exponential map phi(a) = a.
ExponentialMap trivial_expmap(AlgebraPtr A);

/// exp(t D) for a locally nilpotent derivation D given on generators;
/// characteristic 0 only. Generator images are sum_i D^i(g) t^i / i!,
/// followed by full verification.
ExponentialMap from_lnd(const AlgebraPtr& A, const std::map<std::string, Polynomial>& derivation,
                        unsigned nilpotency_bound);

/// Sample check of the iterative property D^i D^j = C(i+j, i) D^{i+j} for
/// i + j <= bound; binomials are taken mod p in characteristic p.
struct IterativityReport {
    struct Counterexample {
        std::string sample;
        unsigned i, j;
        Polynomial lhs, rhs;
    };
    unsigned bound = 0;
    unsigned checks = 0;
    std::vector<Counterexample> counterexamples;
    bool passed() const { return counterexamples.empty(); }
};

IterativityReport check_iterative(const ExponentialMap& phi,
                                  const std::vector<AlgebraElement>& samples, unsigned bound);

enum class TensorSide { Left, Right };

/// Extend phi on one tensor factor to A ⊗ B by fixing the other factor;
/// the axioms are re-verified on the tensor algebra.
ExponentialMap extend_to_tensor(const ExponentialMap& phi, const TensorProduct& T,
                                TensorSide side);

/// eps_1 phi (evaluation of phi at t=1) together with its inverse
/// eps_1 phi_{-t}; both directions compose to the identity.
struct Eps1Automorphism {
    AlgebraHom forward;
    AlgebraHom inverse;
};

Eps1Automorphism eps1_automorphism(const ExponentialMap& phi);

/// Membership in the intersection of the invariant rings of the supplied
/// family: a computable upper bound for ak(A).
bool invariant_under_all(const std::vector<ExponentialMap>& maps, const AlgebraElement& a);

}  // namespace akinv

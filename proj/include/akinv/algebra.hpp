#pragma once

#include <memory>
#include <string>
#include <vector>

#include "akinv/groebner.hpp"

namespace akinv {

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Names reserved for the deformation variables of exponential maps.
bool is_reserved_variable(const std::string& name);

/// A finitely presented algebra k[X_1..X_m]/I with I stored as a reduced
/// Groebner basis, so every element has a canonical normal-form
/// representative. Immutable after construction; all queries are pure.
class PresentedAlgebra {
  public:
    /// Validates variable names (reserved names t, s rejected), computes the
    /// reduced basis, and rejects presentations with 1 in the ideal ("zero
    /// algebra").
    static AlgebraPtr present(std::vector<std::string> variables,
                              const std::vector<Polynomial>& relations, long characteristic,
                              MonomialOrder::Kind order_kind = MonomialOrder::Kind::GrevLex,
                              const GroebnerConfig& config = {});

    const std::vector<std::string>& variables() const { return vars_; }
    long characteristic() const { return p_; }
    const GroebnerBasis& relations() const { return relations_; }
    const GroebnerConfig& config() const { return config_; }
    bool is_free() const { return relations_.empty(); }

    bool has_variable(const std::string& name) const;

    /// Normal form of an arbitrary polynomial over the algebra's variables,
    /// possibly involving the deformation variables t and s.
    Polynomial reduce(const Polynomial& f) const;

    std::string describe() const;  // "Q[x, y, z]/(x*y - z^2 + 1)"

    /// Structural identity of presentations (same variables, relations,
    /// field). Distinct shared_ptr instances may satisfy this.
    static bool same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b);

  private:
    PresentedAlgebra(std::vector<std::string> vars, GroebnerBasis relations, long p,
                     GroebnerConfig config)
        : vars_(std::move(vars)), relations_(std::move(relations)), p_(p), config_(config) {}

    std::vector<std::string> vars_;
    GroebnerBasis relations_;
    long p_;
    GroebnerConfig config_;
};

/// An element of a presented algebra; the stored representative is always in
/// normal form, so equality of elements is equality of representatives.
class AlgebraElement {
  public:
    AlgebraElement(AlgebraPtr owner, const Polynomial& raw_rep);

    const AlgebraPtr& owner() const { return owner_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const Scalar& c) const;
    AlgebraElement pow(unsigned e) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    bool operator<(const AlgebraElement& o) const { return rep_ < o.rep_; }

    std::string str() const { return rep_.str(); }

  private:
    AlgebraPtr owner_;
    Polynomial rep_;

    void check_same_owner(const AlgebraElement& o) const;
};

AlgebraElement make_element(AlgebraPtr owner, const Polynomial& rep);
AlgebraElement var_element(AlgebraPtr owner, const std::string& name);
AlgebraElement scalar_element(AlgebraPtr owner, const Scalar& c);
AlgebraElement zero_element(AlgebraPtr owner);
AlgebraElement one_element(AlgebraPtr owner);

/// A verified homomorphism between presented algebras, given by generator
/// images. Construction checks that every source relation maps to zero.
class AlgebraHom {
  public:
    static AlgebraHom make(AlgebraPtr source, AlgebraPtr target,
                           const std::map<std::string, AlgebraElement>& images);
    static AlgebraHom identity(AlgebraPtr algebra);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::map<std::string, AlgebraElement>& images() const { return images_; }

    AlgebraElement apply(const AlgebraElement& a) const;
    /// Substitution on a raw polynomial: source variables are replaced by
    /// their image representatives, all other variables (t, s) pass through;
    /// the result is reduced in the target.
    Polynomial apply_poly(const Polynomial& f) const;

    static AlgebraHom compose(const AlgebraHom& outer, const AlgebraHom& inner);
    /// True if this endomorphism fixes every generator.
    bool is_identity() const;

  private:
    AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::map<std::string, AlgebraElement> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

    AlgebraPtr source_;
    AlgebraPtr target_;
    std::map<std::string, AlgebraElement> images_;
};

/// A ⊗ B presented on the disjoint union of variables; name collisions are
/// resolved by the _L/_R suffix scheme and recorded, and the canonical
/// injections are returned as verified homomorphisms.
struct TensorProduct {
    AlgebraPtr algebra;
    AlgebraPtr left_factor;
    AlgebraPtr right_factor;
    std::map<std::string, std::string> left_renaming;   // factor var -> tensor var
    std::map<std::string, std::string> right_renaming;  // factor var -> tensor var
    AlgebraHom left_injection;
    AlgebraHom right_injection;
};

TensorProduct tensor(AlgebraPtr A, AlgebraPtr B);

}  // namespace akinv

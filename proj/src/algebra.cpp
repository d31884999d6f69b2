#include "akinv/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace akinv {

bool is_reserved_variable(const std::string& name) { return name == "t" || name == "s"; }

namespace {

void validate_variable_name(const std::string& name) {
    if (name.empty()) throw ValidationError("empty variable name");
    if (is_reserved_variable(name))
        throw ValidationError("variable name '" + name + "' is reserved for deformation");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        throw ValidationError("invalid variable name '" + name + "'");
    for (char ch : name)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            throw ValidationError("invalid variable name '" + name + "'");
}

}  // namespace

AlgebraPtr PresentedAlgebra::present(std::vector<std::string> variables,
                                     const std::vector<Polynomial>& relations,
                                     long characteristic, MonomialOrder::Kind order_kind,
                                     const GroebnerConfig& config) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        validate_variable_name(v);
        if (!seen.insert(v).second) throw ValidationError("duplicate variable '" + v + "'");
    }
    for (const auto& r : relations) {
        if (r.characteristic() != characteristic)
            throw ValidationError("relation over wrong field: " + r.str());
        for (const auto& v : r.variables())
            if (!seen.count(v))
                throw ValidationError("relation uses undeclared variable '" + v + "': " + r.str());
    }
    MonomialOrder order(order_kind, variables);
    GroebnerBasis gb = buchberger(relations, order, config, characteristic);
    if (!gb.empty() && ideal_member(Polynomial::constant(Scalar::one(characteristic)), gb, config))
        throw ValidationError("zero algebra: 1 lies in the relation ideal");
    return AlgebraPtr(
        new PresentedAlgebra(std::move(variables), std::move(gb), characteristic, config));
}

bool PresentedAlgebra::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

Polynomial PresentedAlgebra::reduce(const Polynomial& f) const {
    if (f.characteristic() != p_) throw ValidationError("element over wrong field");
    for (const auto& v : f.variables())
        if (!has_variable(v) && !is_reserved_variable(v))
            throw ValidationError("polynomial uses unknown variable '" + v + "'");
    return normal_form(f, relations_, config_);
}

std::string PresentedAlgebra::describe() const {
    std::ostringstream os;
    os << (p_ == 0 ? "Q" : "Fp(" + std::to_string(p_) + ")") << "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i > 0) os << ", ";
        os << vars_[i];
    }
    os << "]";
    if (!relations_.empty()) {
        os << "/(";
        const auto& gens = relations_.generators();
        for (size_t i = 0; i < gens.size(); ++i) {
            if (i > 0) os << ", ";
            os << gens[i].str();
        }
        os << ")";
    }
    return os.str();
}

bool PresentedAlgebra::same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b) {
    return a.p_ == b.p_ && a.vars_ == b.vars_ && a.relations_ == b.relations_;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(AlgebraPtr owner, const Polynomial& raw_rep)
    : owner_(std::move(owner)), rep_(owner_->reduce(raw_rep)) {
    for (const auto& v : rep_.variables())
        if (is_reserved_variable(v))
            throw ValidationError("algebra element must not involve deformation variables");
}

void AlgebraElement::check_same_owner(const AlgebraElement& o) const {
    if (owner_ == o.owner_) return;
    if (!PresentedAlgebra::same_presentation(*owner_, *o.owner_))
        throw ValidationError("elements of different algebras");
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(owner_, -rep_); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same_owner(o);
    return AlgebraElement(owner_, rep_ + o.rep_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same_owner(o);
    return AlgebraElement(owner_, rep_ - o.rep_);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same_owner(o);
    return AlgebraElement(owner_, rep_ * o.rep_);
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
    return AlgebraElement(owner_, rep_ * c);
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
    AlgebraElement out = one_element(owner_);
    AlgebraElement base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_same_owner(o);
    return rep_ == o.rep_;
}

AlgebraElement make_element(AlgebraPtr owner, const Polynomial& rep) {
    return AlgebraElement(std::move(owner), rep);
}

AlgebraElement var_element(AlgebraPtr owner, const std::string& name) {
    if (!owner->has_variable(name))
        throw ValidationError("no variable '" + name + "' in " + owner->describe());
    long p = owner->characteristic();
    return AlgebraElement(std::move(owner), Polynomial::variable(name, p));
}

AlgebraElement scalar_element(AlgebraPtr owner, const Scalar& c) {
    return AlgebraElement(std::move(owner), Polynomial::constant(c));
}

AlgebraElement zero_element(AlgebraPtr owner) {
    long p = owner->characteristic();
    return AlgebraElement(std::move(owner), Polynomial::zero(p));
}

AlgebraElement one_element(AlgebraPtr owner) {
    long p = owner->characteristic();
    return AlgebraElement(std::move(owner), Polynomial::constant(Scalar::one(p)));
}

// ---------------------------------------------------------------------------
// AlgebraHom

AlgebraHom AlgebraHom::make(AlgebraPtr source, AlgebraPtr target,
                            const std::map<std::string, AlgebraElement>& images) {
    if (source->characteristic() != target->characteristic())
        throw ValidationError("homomorphism between algebras over different fields");
    for (const auto& v : source->variables())
        if (!images.count(v)) throw ValidationError("no image for generator '" + v + "'");
    for (const auto& [v, img] : images) {
        if (!source->has_variable(v))
            throw ValidationError("image given for unknown generator '" + v + "'");
        if (img.owner() != target &&
            !PresentedAlgebra::same_presentation(*img.owner(), *target))
            throw ValidationError("image of '" + v + "' lives in the wrong algebra");
    }
    AlgebraHom h(source, target, images);
    for (const auto& r : source->relations().generators()) {
        Polynomial image = h.apply_poly(r);
        if (!image.is_zero())
            throw ValidationError("not well defined: relation " + r.str() +
                                  " maps to " + image.str());
    }
    return h;
}

AlgebraHom AlgebraHom::identity(AlgebraPtr algebra) {
    std::map<std::string, AlgebraElement> images;
    for (const auto& v : algebra->variables()) images.emplace(v, var_element(algebra, v));
    return AlgebraHom(algebra, algebra, std::move(images));
}

Polynomial AlgebraHom::apply_poly(const Polynomial& f) const {
    std::map<std::string, Polynomial> sub;
    for (const auto& [v, img] : images_) sub.emplace(v, img.rep());
    return target_->reduce(f.substitute(sub));
}

AlgebraElement AlgebraHom::apply(const AlgebraElement& a) const {
    if (a.owner() != source_ && !PresentedAlgebra::same_presentation(*a.owner(), *source_))
        throw ValidationError("element not in the source algebra");
    return AlgebraElement(target_, apply_poly(a.rep()));
}

AlgebraHom AlgebraHom::compose(const AlgebraHom& outer, const AlgebraHom& inner) {
    if (inner.target_ != outer.source_ &&
        !PresentedAlgebra::same_presentation(*inner.target_, *outer.source_))
        throw ValidationError("composition mismatch");
    std::map<std::string, AlgebraElement> images;
    for (const auto& [v, img] : inner.images_) images.emplace(v, outer.apply(img));
    return AlgebraHom(inner.source_, outer.target_, std::move(images));
}

bool AlgebraHom::is_identity() const {
    if (source_ != target_ && !PresentedAlgebra::same_presentation(*source_, *target_))
        return false;
    for (const auto& [v, img] : images_)
        if (img.rep() != Polynomial::variable(v, source_->characteristic())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Tensor product

TensorProduct tensor(AlgebraPtr A, AlgebraPtr B) {
    if (A->characteristic() != B->characteristic())
        throw ValidationError("tensor factors over different fields");

    std::set<std::string> a_names(A->variables().begin(), A->variables().end());
    std::set<std::string> b_names(B->variables().begin(), B->variables().end());

    std::map<std::string, std::string> lren, rren;
    std::vector<std::string> vars;
    std::set<std::string> taken;
    for (const auto& v : A->variables()) {
        std::string name = v;
        if (b_names.count(name)) name += "_L";
        while (taken.count(name) || (name != v && (a_names.count(name) || b_names.count(name))))
            name += "_L";
        lren[v] = name;
        vars.push_back(name);
        taken.insert(name);
    }
    for (const auto& v : B->variables()) {
        std::string name = v;
        if (a_names.count(name)) name += "_R";
        while (taken.count(name) || (name != v && (a_names.count(name) || b_names.count(name))))
            name += "_R";
        rren[v] = name;
        vars.push_back(name);
        taken.insert(name);
    }

    std::vector<Polynomial> relations;
    for (const auto& r : A->relations().generators()) relations.push_back(r.rename_variables(lren));
    for (const auto& r : B->relations().generators()) relations.push_back(r.rename_variables(rren));

    AlgebraPtr T = PresentedAlgebra::present(vars, relations, A->characteristic(),
                                             A->relations().order().kind(), A->config());

    std::map<std::string, AlgebraElement> limg, rimg;
    for (const auto& [v, w] : lren) limg.emplace(v, var_element(T, w));
    for (const auto& [v, w] : rren) rimg.emplace(v, var_element(T, w));
    AlgebraHom inj_a = AlgebraHom::make(A, T, limg);
    AlgebraHom inj_b = AlgebraHom::make(B, T, rimg);

    return TensorProduct{T, A, B, std::move(lren), std::move(rren), std::move(inj_a),
                         std::move(inj_b)};
}

}  // namespace akinv

#include "akinv/expmap.hpp"

#include <sstream>

namespace akinv {

namespace {

const std::string kT = "t";
const std::string kS = "s";

std::string axiom_name(AxiomFailure::Kind k) {
    switch (k) {
        case AxiomFailure::Kind::Epsilon0: return "eps0";
        case AxiomFailure::Kind::Comultiplication: return "comultiplication";
        case AxiomFailure::Kind::RelationPreservation: return "relation";
        case AxiomFailure::Kind::NotLocallyNilpotent: return "not-locally-nilpotent";
    }
    return "?";
}

}  // namespace

std::string AxiomFailure::describe() const {
    std::ostringstream os;
    os << axiom_name(kind) << " failure on " << subject << ", witness " << witness.str();
    return os.str();
}

std::vector<AxiomFailure> verify_expmap(const AlgebraPtr& A,
                                        const std::map<std::string, Polynomial>& images) {
    for (const auto& v : A->variables())
        if (!images.count(v)) throw ValidationError("no image for generator '" + v + "'");
    for (const auto& [v, f] : images) {
        if (!A->has_variable(v))
            throw ValidationError("image given for unknown generator '" + v + "'");
        if (f.characteristic() != A->characteristic())
            throw ValidationError("image of '" + v + "' over wrong field");
        for (const auto& name : f.variables())
            if (!A->has_variable(name) && name != kT)
                throw ValidationError("image of '" + v + "' uses unknown variable '" + name +
                                      "'");
    }

    std::map<std::string, Polynomial> img;
    for (const auto& [v, f] : images) img.emplace(v, A->reduce(f));

    std::vector<AxiomFailure> failures;
    const long p = A->characteristic();

    // Relation preservation: r(phi(X_1), ..., phi(X_m)) = 0 in A[t].
    for (const auto& r : A->relations().generators()) {
        Polynomial image = A->reduce(r.substitute(img));
        if (!image.is_zero())
            failures.push_back(
                {AxiomFailure::Kind::RelationPreservation, r.str(), image});
    }

    // eps0: setting t = 0 recovers each generator.
    std::map<std::string, Polynomial> t_to_zero{{kT, Polynomial::zero(p)}};
    for (const auto& v : A->variables()) {
        Polynomial at0 = A->reduce(img.at(v).substitute(t_to_zero));
        Polynomial defect = at0 - A->reduce(Polynomial::variable(v, p));
        if (!defect.is_zero())
            failures.push_back({AxiomFailure::Kind::Epsilon0, v, defect});
    }

    // Comultiplication: phi_s(phi_t(g)) = phi_{s+t}(g) in A[s,t]. phi_s
    // sends each ring variable to its image with t renamed to s and fixes t.
    std::map<std::string, Polynomial> img_s;
    for (const auto& [v, f] : img)
        img_s.emplace(v, f.substitute({{kT, Polynomial::variable(kS, p)}}));
    Polynomial s_plus_t = Polynomial::variable(kS, p) + Polynomial::variable(kT, p);
    for (const auto& v : A->variables()) {
        Polynomial lhs = A->reduce(img.at(v).substitute(img_s));
        Polynomial rhs = A->reduce(img.at(v).substitute({{kT, s_plus_t}}));
        Polynomial defect = lhs - rhs;
        if (!defect.is_zero())
            failures.push_back({AxiomFailure::Kind::Comultiplication, v, defect});
    }
    return failures;
}

ExponentialMap make_expmap(AlgebraPtr A, const std::map<std::string, Polynomial>& images) {
    std::vector<AxiomFailure> failures = verify_expmap(A, images);
    if (!failures.empty()) {
        std::ostringstream os;
        os << "not an exponential map on " << A->describe() << ": ";
        for (size_t i = 0; i < failures.size(); ++i) {
            if (i > 0) os << "; ";
            os << failures[i].describe();
        }
        throw ExpmapError(os.str(), std::move(failures));
    }
    std::map<std::string, Polynomial> img;
    for (const auto& [v, f] : images) img.emplace(v, A->reduce(f));
    return ExponentialMap(std::move(A), std::move(img));
}

ExponentialMap trivial_expmap(AlgebraPtr A) {
    std::map<std::string, Polynomial> images;
    for (const auto& v : A->variables())
        images.emplace(v, Polynomial::variable(v, A->characteristic()));
    return make_expmap(std::move(A), images);
}

Polynomial ExponentialMap::phi(const Polynomial& rep) const {
    if (rep.variables().count(kT) || rep.variables().count(kS))
        throw ValidationError("phi expects a t-free representative");
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->phi.find(rep);
        if (it != cache_->phi.end()) return it->second;
    }
    Polynomial out = algebra_->reduce(rep.substitute(images_));
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->phi.emplace(rep, out);
    }
    return out;
}

AlgebraElement ExponentialMap::derivation_coeff(const AlgebraElement& a, unsigned i) const {
    return AlgebraElement(algebra_, phi(a).coeff_in(kT, static_cast<int>(i)));
}

Degree ExponentialMap::phi_degree(const AlgebraElement& a) const {
    return phi(a).degree_in(kT);
}

bool ExponentialMap::is_invariant(const AlgebraElement& a) const { return phi(a) == a.rep(); }

bool ExponentialMap::is_trivial() const {
    for (const auto& [v, f] : images_)
        if (f != Polynomial::variable(v, algebra_->characteristic())) return false;
    return true;
}

ExponentialMap from_lnd(const AlgebraPtr& A, const std::map<std::string, Polynomial>& derivation,
                        unsigned nilpotency_bound) {
    if (A->characteristic() != 0)
        throw ValidationError("from_lnd requires characteristic 0; construct the map directly "
                              "in characteristic p");
    for (const auto& v : A->variables())
        if (!derivation.count(v))
            throw ValidationError("no derivation image for generator '" + v + "'");

    std::map<std::string, Polynomial> der;
    for (const auto& [v, f] : derivation) {
        for (const auto& name : f.variables())
            if (!A->has_variable(name))
                throw ValidationError("derivation image of '" + v + "' uses unknown variable '" +
                                      name + "'");
        der.emplace(v, A->reduce(f));
    }

    // D(p) = sum_v d p/d v * D(v), reduced after each application.
    auto apply_derivation = [&](const Polynomial& f) {
        Polynomial out = Polynomial::zero(0);
        for (const auto& [v, dv] : der) out = out + f.derivative(v) * dv;
        return A->reduce(out);
    };

    std::map<std::string, Polynomial> images;
    Polynomial t = Polynomial::variable(kT, 0);
    for (const auto& v : A->variables()) {
        Polynomial iter = A->reduce(Polynomial::variable(v, 0));
        Polynomial image = Polynomial::zero(0);
        Rational factorial(1);
        unsigned i = 0;
        while (!iter.is_zero()) {
            if (i >= nilpotency_bound) {
                std::vector<AxiomFailure> failures{
                    {AxiomFailure::Kind::NotLocallyNilpotent, v, iter}};
                throw ExpmapError("derivation not locally nilpotent within bound " +
                                      std::to_string(nilpotency_bound) + ": D^" +
                                      std::to_string(i) + "(" + v + ") = " + iter.str(),
                                  std::move(failures));
            }
            image = image + iter * Scalar::rational(Rational(1) / factorial) * t.pow(i);
            iter = apply_derivation(iter);
            ++i;
            factorial *= i;
        }
        images.emplace(v, image);
    }
    return make_expmap(A, images);
}

IterativityReport check_iterative(const ExponentialMap& phi,
                                  const std::vector<AlgebraElement>& samples, unsigned bound) {
    IterativityReport report;
    report.bound = bound;
    const long p = phi.algebra()->characteristic();
    for (const auto& a : samples) {
        std::vector<AlgebraElement> d;
        d.reserve(bound + 1);
        for (unsigned j = 0; j <= bound; ++j) d.push_back(phi.derivation_coeff(a, j));
        for (unsigned j = 0; j <= bound; ++j) {
            for (unsigned i = 0; i + j <= bound; ++i) {
                AlgebraElement lhs = phi.derivation_coeff(d[j], i);
                Scalar binom = binomial_in_field(Natural(i + j), Natural(i), p);
                AlgebraElement rhs = d[i + j] * binom;
                ++report.checks;
                if (lhs != rhs)
                    report.counterexamples.push_back(
                        {a.str(), i, j, lhs.rep(), rhs.rep()});
            }
        }
    }
    return report;
}

ExponentialMap extend_to_tensor(const ExponentialMap& phi, const TensorProduct& T,
                                TensorSide side) {
    const AlgebraPtr& factor = side == TensorSide::Left ? T.left_factor : T.right_factor;
    const auto& renaming = side == TensorSide::Left ? T.left_renaming : T.right_renaming;
    const auto& other_renaming = side == TensorSide::Left ? T.right_renaming : T.left_renaming;
    if (phi.algebra() != factor)
        throw ValidationError("tensor product was not built from the map's algebra");

    std::map<std::string, Polynomial> images;
    for (const auto& [v, f] : phi.generator_images())
        images.emplace(renaming.at(v), f.rename_variables(renaming));
    for (const auto& [v, w] : other_renaming)
        images.emplace(w, Polynomial::variable(w, T.algebra->characteristic()));
    return make_expmap(T.algebra, images);
}

Eps1Automorphism eps1_automorphism(const ExponentialMap& phi) {
    const AlgebraPtr& A = phi.algebra();
    const long p = A->characteristic();
    std::map<std::string, Polynomial> at1{{kT, Polynomial::constant(Scalar::one(p))}};
    std::map<std::string, Polynomial> at_minus1{{kT, Polynomial::constant(-Scalar::one(p))}};

    std::map<std::string, AlgebraElement> fwd, inv;
    for (const auto& [v, f] : phi.generator_images()) {
        fwd.emplace(v, make_element(A, f.substitute(at1)));
        inv.emplace(v, make_element(A, f.substitute(at_minus1)));
    }
    AlgebraHom forward = AlgebraHom::make(A, A, fwd);
    AlgebraHom inverse = AlgebraHom::make(A, A, inv);
    if (!AlgebraHom::compose(forward, inverse).is_identity() ||
        !AlgebraHom::compose(inverse, forward).is_identity())
        throw Error("eps1 automorphism inverse check failed for a verified map");
    return {std::move(forward), std::move(inverse)};
}

bool invariant_under_all(const std::vector<ExponentialMap>& maps, const AlgebraElement& a) {
    for (const auto& phi : maps)
        if (!phi.is_invariant(a)) return false;
    return true;
}

}  // namespace akinv

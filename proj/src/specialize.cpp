#include "akinv/specialize.hpp"

#include <sstream>

namespace akinv {

namespace {

// Candidates per coordinate: 0, 1, 2, ... — the whole field for F_p, enough
// values to outrun the per-variable degree over Q.
bool search_point(const Polynomial& product, std::vector<std::string> vars,
                  std::map<std::string, Scalar>& values, long p) {
    if (vars.empty()) return !product.is_zero();
    std::string v = vars.front();
    vars.erase(vars.begin());
    Degree dv = product.degree_in(v);
    long candidates = p > 0 ? p : (dv ? *dv : 0) + 1;
    for (long c = 0; c < candidates; ++c) {
        Scalar value = Scalar::from_integer(c, p);
        Polynomial next = product.substitute({{v, Polynomial::constant(value)}});
        if (next.is_zero()) continue;
        values[v] = value;
        if (search_point(next, vars, values, p)) return true;
        values.erase(v);
    }
    return false;
}

}  // namespace

SpecializationPoint find_good_point(const std::vector<Polynomial>& avoid, long characteristic) {
    Polynomial product = Polynomial::constant(Scalar::one(characteristic));
    for (const auto& f : avoid) {
        if (f.characteristic() != characteristic)
            throw ValidationError("avoid polynomial over wrong field: " + f.str());
        if (f.is_zero())
            throw ValidationError("avoid polynomial is identically zero");
        product = product * f;
    }

    std::set<std::string> var_set = product.variables();
    std::vector<std::string> vars(var_set.begin(), var_set.end());

    SpecializationPoint point;
    point.avoided = product;
    if (!search_point(product, vars, point.values, characteristic))
        throw ValidationError("field F_" + std::to_string(characteristic) +
                              " too small: every point is a zero of the avoid product");
    // Fill coordinates the recursion never needed (variables absent from the
    // remaining factor) with 0 so the point covers all variables.
    for (const auto& v : vars)
        if (!point.values.count(v)) point.values[v] = Scalar::zero(characteristic);
    point.witness = product.evaluate(point.values);
    if (point.witness.is_zero()) throw Error("good-point witness vanished; search is broken");
    return point;
}

AlgebraHom sigma_hom(const TensorProduct& T, const std::map<std::string, Scalar>& values) {
    const AlgebraPtr& B = T.right_factor;
    for (const auto& [v, tensor_name] : T.left_renaming)
        if (!values.count(tensor_name))
            throw ValidationError("no value for A-side generator '" + tensor_name + "'");

    // Check the values kill every relation before building the hom, so the
    // diagnostic names the offending relation.
    std::map<std::string, Polynomial> sub;
    for (const auto& [tensor_name, c] : values) {
        if (c.characteristic() != T.algebra->characteristic())
            throw ValidationError("specialization value over wrong field");
        sub.emplace(tensor_name, Polynomial::constant(c));
    }
    for (const auto& r : T.algebra->relations().generators()) {
        Polynomial image = r.substitute(sub);
        // Rename surviving B-side variables back into B and reduce there.
        std::map<std::string, std::string> back;
        for (const auto& [bv, tv] : T.right_renaming) back.emplace(tv, bv);
        Polynomial in_b = B->reduce(image.rename_variables(back));
        if (!in_b.is_zero())
            throw ValidationError("values not on the variety: relation " + r.str() +
                                  " evaluates to " + in_b.str());
    }

    std::map<std::string, AlgebraElement> images;
    for (const auto& [v, tensor_name] : T.left_renaming)
        images.emplace(tensor_name, scalar_element(B, values.at(tensor_name)));
    for (const auto& [v, tensor_name] : T.right_renaming)
        images.emplace(tensor_name, var_element(B, v));
    return AlgebraHom::make(T.algebra, B, images);
}

PushResult push_expmap(const ExponentialMap& phi, const TensorProduct& T,
                       const AlgebraHom& sigma, unsigned iterativity_bound) {
    if (phi.algebra() != T.algebra)
        throw ValidationError("map does not live on the tensor algebra");
    if (sigma.source() != T.algebra || sigma.target() != T.right_factor)
        throw ValidationError("sigma is not an evaluation A ⊗ B -> B for this tensor");

    const AlgebraPtr& B = T.right_factor;
    std::map<std::string, Polynomial> images;
    for (const auto& [bv, tv] : T.right_renaming)
        images.emplace(bv, sigma.apply_poly(phi.generator_images().at(tv)));

    ExponentialMap psi = [&] {
        try {
            return make_expmap(B, images);
        } catch (const ExpmapError& e) {
            throw ExpmapError(std::string("sigma.phi is not an exponential map on B — phi "
                                          "likely does not fix A: ") +
                                  e.what(),
                              e.failures);
        }
    }();

    std::vector<AlgebraElement> samples;
    for (const auto& v : B->variables()) samples.push_back(var_element(B, v));
    IterativityReport iter = check_iterative(psi, samples, iterativity_bound);
    if (!iter.passed()) {
        std::ostringstream os;
        os << "sigma.phi fails the iterative property on B (phi likely does not fix A); "
           << iter.counterexamples.size() << " counterexample(s), first on "
           << iter.counterexamples.front().sample;
        throw ValidationError(os.str());
    }
    return PushResult{std::move(psi), std::move(iter)};
}

}  // namespace akinv

#include "akinv/groebner.hpp"

#include <algorithm>
#include <set>

namespace akinv {

namespace {

struct StepCounter {
    long remaining;
    void tick() {
        if (--remaining < 0)
            throw ResourceError("Groebner reduction step cap exceeded; presentation too hard "
                                "for the configured limit");
    }
};

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return f;
    auto [m, c] = leading_term(f, order);
    return f * c.inverse();
}

// Full normal form: repeatedly reduce the order-largest reducible term by the
// first basis element whose leading term divides it.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, StepCounter& steps) {
    if (basis.empty()) return f;
    std::vector<std::pair<Monomial, Scalar>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leading_term(g, order));

    Polynomial r = f;
    while (!r.is_zero()) {
        const Monomial* best = nullptr;
        const Scalar* best_coeff = nullptr;
        size_t reducer = 0;
        for (const auto& [m, c] : r.terms()) {
            for (size_t k = 0; k < basis.size(); ++k) {
                if (!lts[k].first.divides(m)) continue;
                if (best == nullptr || order.greater(m, *best)) {
                    best = &m;
                    best_coeff = &c;
                    reducer = k;
                }
                break;  // first dividing generator wins for this term
            }
        }
        if (best == nullptr) break;
        steps.tick();
        Monomial shift = best->divide_by(lts[reducer].first);
        Scalar factor = *best_coeff / lts[reducer].second;
        r = r - basis[reducer] * Polynomial::term(shift, factor);
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [mf, cf] = leading_term(f, order);
    auto [mg, cg] = leading_term(g, order);
    Monomial l = Monomial::lcm(mf, mg);
    Polynomial a = f * Polynomial::term(l.divide_by(mf), cf.inverse());
    Polynomial b = g * Polynomial::term(l.divide_by(mg), cg.inverse());
    return a - b;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                             long characteristic)
    : gens_(std::move(generators)), order_(std::move(order)), p_(characteristic) {}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerConfig& config, long characteristic_hint) {
    StepCounter steps{config.max_reductions};

    long p = characteristic_hint >= 0 ? characteristic_hint : 0;
    bool p_known = characteristic_hint >= 0;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (!p_known) {
            p = g.characteristic();
            p_known = true;
        } else if (g.characteristic() != p) {
            throw ValidationError("generators over mixed fields");
        }
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    }

    using Pair = std::pair<size_t, size_t>;
    auto pair_degree = [&](const Pair& pr) {
        Monomial l = Monomial::lcm(leading_term(basis[pr.first], order).first,
                                   leading_term(basis[pr.second], order).first);
        return l.total_degree();
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        int da = pair_degree(a), db = pair_degree(b);
        if (da != db) return da < db;
        return a < b;
    };

    std::vector<Pair> queue;
    std::set<Pair> processed;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        processed.insert(pr);

        const Monomial lt_i = leading_term(basis[pr.first], order).first;
        const Monomial lt_j = leading_term(basis[pr.second], order).first;
        if (Monomial::coprime(lt_i, lt_j)) continue;  // first Buchberger criterion

        // Chain criterion: skip if some k has LT(k) | lcm(i,j) and both
        // (i,k), (j,k) were already handled.
        Monomial l = Monomial::lcm(lt_i, lt_j);
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.first || k == pr.second) continue;
            if (!leading_term(basis[k], order).first.divides(l)) continue;
            Pair a{std::min(pr.first, k), std::max(pr.first, k)};
            Pair b{std::min(pr.second, k), std::max(pr.second, k)};
            if (processed.count(a) && processed.count(b)) skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[pr.first], basis[pr.second], order);
        Polynomial h = reduce_full(s, basis, order, steps);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h, order));
        for (size_t i = 0; i + 1 < basis.size(); ++i) queue.emplace_back(i, basis.size() - 1);
    }

    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = reduce_full(basis[i], others, order, steps);
            if (r != basis[i]) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    basis[i] = make_monic(r, order);
                }
            }
        }
    }

    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(leading_term(a, order).first, leading_term(b, order).first);
    });
    return GroebnerBasis(std::move(basis), order, p);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                       const GroebnerConfig& config) {
    StepCounter steps{config.max_reductions};
    return reduce_full(f, gb.generators(), gb.order(), steps);
}

}  // namespace akinv

#include "akinv/invariant.hpp"

namespace akinv {

MinimalDegreeResult minimal_positive_degree(const ExponentialMap& phi,
                                            const std::vector<AlgebraElement>& pool) {
    if (pool.empty()) throw ValidationError("empty candidate pool");
    const AlgebraElement* best = nullptr;
    int best_degree = 0;
    for (const auto& a : pool) {
        Degree d = phi.phi_degree(a);
        if (!d || *d <= 0) continue;
        if (best == nullptr || *d < best_degree) {
            best = &a;
            best_degree = *d;
        }
    }
    if (best == nullptr)
        throw ValidationError("map acts trivially on pool: no element of positive phi-degree");
    return {*best, static_cast<unsigned>(best_degree)};
}

std::vector<AlgebraElement> default_candidate_pool(const AlgebraPtr& A, unsigned max_degree) {
    std::vector<AlgebraElement> pool;
    for (const auto& v : A->variables()) pool.push_back(var_element(A, v));
    const size_t gen_count = pool.size();

    // Monomials in the generators of total degree 2..max_degree, built level
    // by level in a deterministic order; duplicates after normal form are
    // dropped.
    std::vector<AlgebraElement> level(pool.begin(), pool.end());
    std::set<Polynomial> seen;
    for (const auto& a : pool) seen.insert(a.rep());
    for (unsigned d = 2; d <= max_degree; ++d) {
        std::vector<AlgebraElement> next;
        for (const auto& m : level) {
            for (size_t i = 0; i < gen_count; ++i) {
                AlgebraElement prod = m * pool[i];
                if (prod.is_zero()) continue;
                if (seen.insert(prod.rep()).second) next.push_back(prod);
            }
        }
        pool.insert(pool.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return pool;
}

DivisibilityReport check_degree_divisibility(const ExponentialMap& phi, unsigned n,
                                             const std::vector<AlgebraElement>& samples) {
    if (n == 0) throw ValidationError("degree divisor must be positive");
    DivisibilityReport report;
    report.n = n;
    for (const auto& a : samples) {
        Degree d = phi.phi_degree(a);
        if (!d) continue;  // zero element
        ++report.checked;
        if (*d % static_cast<int>(n) != 0)
            report.counterexamples.push_back({a.str(), *d});
    }
    return report;
}

bool InvariantRewrite::reconstruction_holds(const ExponentialMap& phi,
                                            const AlgebraElement& a) const {
    AlgebraElement lhs = c.pow(power) * a;
    AlgebraElement rhs = zero_element(a.owner());
    for (size_t l = 0; l < coefficients.size(); ++l)
        rhs = rhs + coefficients[l] * x.pow(static_cast<unsigned>(l));
    if (lhs != rhs) return false;
    for (const auto& e : coefficients)
        if (!phi.is_invariant(e)) return false;
    return true;
}

InvariantRewrite rewrite_in_invariants(const ExponentialMap& phi, const AlgebraElement& a,
                                       const AlgebraElement& x, unsigned n,
                                       const AlgebraElement& c) {
    if (n == 0) throw ValidationError("rewrite needs a positive minimal degree n");
    if (c.is_zero() || !phi.is_invariant(c))
        throw ValidationError("c must be a nonzero invariant");
    if (c != phi.derivation_coeff(x, n))
        throw ValidationError("c must equal D^n(x)");
    {
        Degree dx = phi.phi_degree(x);
        if (!dx || *dx != static_cast<int>(n))
            throw ValidationError("x must have phi-degree n");
    }

    Degree da = phi.phi_degree(a);
    const unsigned l_top =
        (da && *da > 0) ? static_cast<unsigned>(*da) / n : 0;
    if (da && *da > 0 && *da % static_cast<int>(n) != 0)
        throw ValidationError("pool minimum not global: deg_phi(a) = " + std::to_string(*da) +
                              " is not divisible by n = " + std::to_string(n));

    InvariantRewrite out{x, n, c, 0, {}};
    out.coefficients.assign(l_top + 1, zero_element(a.owner()));

    // Invariant of the loop: c^L_acc * a = sum_l e_l x^l + r.
    AlgebraElement r = a;
    unsigned l_acc = 0;
    unsigned steps = 0;
    int prev_degree = da ? *da : 0;
    while (true) {
        Degree dr = phi.phi_degree(r);
        if (!dr || *dr <= 0) break;  // r invariant: absorb into e_0
        if (++steps > l_top + 1)
            throw Error("rewrite recursion exceeded deg_phi(a)/n + 1 steps");
        if (*dr % static_cast<int>(n) != 0)
            throw ValidationError("pool minimum not global: intermediate degree " +
                                  std::to_string(*dr) + " not divisible by n = " +
                                  std::to_string(n));
        const unsigned l = static_cast<unsigned>(*dr) / n;
        AlgebraElement lead = phi.derivation_coeff(r, static_cast<unsigned>(*dr));
        AlgebraElement xl = x.pow(l);

        // Fast path: when c^l divides the leading coefficient exactly, the
        // x^l term is absorbed without enlarging the denominator.
        bool absorbed = false;
        std::optional<Polynomial> q = exact_divide(lead.rep(), c.pow(l).rep());
        if (q) {
            AlgebraElement quot = make_element(a.owner(), *q);
            if (phi.is_invariant(quot)) {
                out.coefficients[l] = out.coefficients[l] + quot;
                r = r - quot * xl;
                absorbed = true;
            }
        }
        if (!absorbed) {
            AlgebraElement cl = c.pow(l);
            for (auto& e : out.coefficients) e = e * cl;
            out.coefficients[l] = out.coefficients[l] + lead;
            r = cl * r - lead * xl;
            l_acc += l;
        }

        Degree dnext = phi.phi_degree(r);
        if (dnext && *dnext >= prev_degree)
            throw Error("rewrite failed to decrease phi-degree");
        prev_degree = dnext ? *dnext : 0;
    }
    out.coefficients[0] = out.coefficients[0] + r;

    // Normalize the certificate to the lemma's nominal denominator exponent.
    if (l_acc < l_top) {
        AlgebraElement scale = c.pow(l_top - l_acc);
        for (auto& e : out.coefficients) e = e * scale;
        l_acc = l_top;
    }
    out.power = l_acc;

    if (!out.reconstruction_holds(phi, a))
        throw Error("rewrite reconstruction identity failed");
    return out;
}

}  // namespace akinv

#include "akinv/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace akinv {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(const std::string& name, int exp) {
    Monomial m;
    if (exp < 0) throw ValidationError("negative exponent");
    if (exp > 0) m.factors_.emplace_back(name, exp);
    return m;
}

Monomial Monomial::from_factors(Factors factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto& [name, e] : factors) {
        if (e < 0) throw ValidationError("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == name)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(name, e);
    }
    return m;
}

int Monomial::exponent(const std::string& name) const {
    for (const auto& [n, e] : factors_)
        if (n == name) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [n, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [n, e] : factors_)
        if (o.exponent(n) < e) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Factors out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end()) {
        if (b == o.factors_.end() || a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            throw ValidationError("monomial division not exact");
        } else {
            int e = a->second - b->second;
            if (e < 0) throw ValidationError("monomial division not exact");
            if (e > 0) out.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    if (b != o.factors_.end()) throw ValidationError("monomial division not exact");
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Factors out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
            out.push_back(*i++);
        else if (i == a.factors_.end() || j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, std::max(i->second, j->second));
            ++i, ++j;
        }
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (const auto& [n, e] : a.factors_)
        if (b.exponent(n) > 0) return false;
    return true;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << n;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::string> priority)
    : kind_(kind), priority_(std::move(priority)) {}

namespace {

// Exponents of m on the given variables, plus the leftover factors not
// covered by them (sorted by name already).
std::vector<int> exponents_on(const Monomial& m, const std::vector<std::string>& vars) {
    std::vector<int> out(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) out[i] = m.exponent(vars[i]);
    return out;
}

std::vector<std::pair<std::string, int>> extra_factors(const Monomial& m,
                                                       const std::vector<std::string>& vars) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& f : m.factors())
        if (std::find(vars.begin(), vars.end(), f.first) == vars.end()) out.push_back(f);
    return out;
}

int compare_block(MonomialOrder::Kind kind, const std::vector<int>& a, const std::vector<int>& b) {
    if (kind == MonomialOrder::Kind::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    // graded reverse lexicographic
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger trailing exponent is smaller
    }
    return 0;
}

// Lex by variable name over the factors outside the priority list.
int compare_extras(const std::vector<std::pair<std::string, int>>& a,
                   const std::vector<std::pair<std::string, int>>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i == a.size()) return -1;
        if (j == b.size()) return 1;
        if (a[i].first != b[j].first) {
            // The monomial owning the alphabetically earlier variable has the
            // higher power of it (the other has power 0).
            return a[i].first < b[j].first ? 1 : -1;
        }
        if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
        ++i, ++j;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    int c = compare_block(kind_, exponents_on(a, priority_), exponents_on(b, priority_));
    if (c != 0) return c;
    return compare_extras(extra_factors(a, priority_), extra_factors(b, priority_));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial f(c.characteristic());
    if (!c.is_zero()) f.terms_.emplace(Monomial::one(), c);
    return f;
}

Polynomial Polynomial::variable(const std::string& name, long characteristic) {
    Polynomial f(characteristic);
    f.terms_.emplace(Monomial::var(name), Scalar::one(characteristic));
    return f;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
    Polynomial f(c.characteristic());
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m.factors()) out.insert(n);
    return out;
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (p_ != o.p_)
        throw ValidationError("mixed characteristics: " + std::to_string(p_) + " vs " +
                              std::to_string(o.p_));
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.characteristic() != p_) throw ValidationError("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(p_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_field(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    Polynomial out(p_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.characteristic() != p_) throw ValidationError("coefficient field mismatch");
    Polynomial out(p_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) {
        Scalar v = k * c;
        if (!v.is_zero()) out.terms_.emplace(m, v);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(Scalar::one(p_));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return out;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    for (const auto& [v, img] : images)
        if (img.characteristic() != p_)
            throw ValidationError("substitution image field mismatch for " + v);
    Polynomial out(p_);
    for (const auto& [m, c] : terms_) {
        Polynomial acc = Polynomial::constant(c);
        for (const auto& [n, e] : m.factors()) {
            auto it = images.find(n);
            const Polynomial base =
                it != images.end() ? it->second : Polynomial::variable(n, p_);
            acc = acc * base.pow(static_cast<unsigned>(e));
        }
        out = out + acc;
    }
    return out;
}

Polynomial Polynomial::rename_variables(const std::map<std::string, std::string>& renaming) const {
    Polynomial out(p_);
    for (const auto& [m, c] : terms_) {
        Monomial::Factors fs;
        for (const auto& [n, e] : m.factors()) {
            auto it = renaming.find(n);
            fs.emplace_back(it != renaming.end() ? it->second : n, e);
        }
        out.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return out;
}

Polynomial Polynomial::coeff_in(const std::string& v, int i) const {
    Polynomial out(p_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != i) continue;
        Monomial::Factors fs;
        for (const auto& [n, e] : m.factors())
            if (n != v) fs.emplace_back(n, e);
        out.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return out;
}

Degree Polynomial::degree_in(const std::string& v) const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Degree Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Polynomial Polynomial::derivative(const std::string& v) const {
    Polynomial out(p_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial::Factors fs;
        for (const auto& [n, k] : m.factors()) {
            if (n == v) {
                if (k > 1) fs.emplace_back(n, k - 1);
            } else {
                fs.emplace_back(n, k);
            }
        }
        out.add_term(Monomial::from_factors(std::move(fs)),
                     c * Scalar::from_integer(e, p_));
    }
    return out;
}

Scalar Polynomial::evaluate(const std::map<std::string, Scalar>& values) const {
    Scalar acc = Scalar::zero(p_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (const auto& [n, e] : m.factors()) {
            auto it = values.find(n);
            if (it == values.end())
                throw ValidationError("evaluate: no value for variable " + n);
            Scalar base = it->second;
            for (int k = 0; k < e; ++k) v = v * base;
        }
        acc = acc + v;
    }
    return acc;
}

std::string degree_str(const Degree& d) {
    return d.has_value() ? std::to_string(*d) : std::string("-inf");
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        int da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ordered) {
        const Monomial& m = t->first;
        Scalar c = t->second;
        bool negative = false;
        if (c.characteristic() == 0 && sgn(c.value()) < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (m.is_one()) {
            os << c.str();
        } else if (c.is_one()) {
            os << m.str();
        } else {
            os << c.str() << "*" << m.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

std::pair<Monomial, Scalar> leading_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw ValidationError("leading term of zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::pair<Polynomial, Polynomial> divide_monic_in_var(const Polynomial& f,
                                                      const Polynomial& divisor,
                                                      const std::string& v) {
    Degree dd = divisor.degree_in(v);
    if (!dd) throw ValidationError("division by zero polynomial");
    int n = *dd;
    if (divisor.coeff_in(v, n) != Polynomial::constant(Scalar::one(f.characteristic())))
        throw ValidationError("divisor is not monic in " + v);
    Polynomial q(f.characteristic()), r = f;
    while (true) {
        Degree dr = r.degree_in(v);
        if (!dr || *dr < n) break;
        Polynomial lead = r.coeff_in(v, *dr);  // coefficient ring element
        Polynomial shift = lead * Polynomial::variable(v, f.characteristic()).pow(
                                      static_cast<unsigned>(*dr - n));
        q = q + shift;
        r = r - shift * divisor;
    }
    return {q, r};
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Polynomial::zero(f.characteristic());
    if (f.characteristic() != g.characteristic()) return std::nullopt;
    std::set<std::string> vars = f.variables();
    for (const auto& v : g.variables()) vars.insert(v);
    MonomialOrder order(MonomialOrder::Kind::GrevLex,
                        std::vector<std::string>(vars.begin(), vars.end()));
    auto [gm, gc] = leading_term(g, order);
    Polynomial q(f.characteristic());
    Polynomial r = f;
    while (!r.is_zero()) {
        auto [rm, rc] = leading_term(r, order);
        if (!gm.divides(rm)) return std::nullopt;
        Polynomial t = Polynomial::term(rm.divide_by(gm), rc / gc);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

Polynomial gcd_univariate(Polynomial a, Polynomial b, const std::string& v) {
    auto make_monic = [&](const Polynomial& f) {
        if (f.is_zero()) return f;
        Degree d = f.degree_in(v);
        Polynomial lead = f.coeff_in(v, *d);
        if (!lead.is_constant())
            throw ValidationError("gcd_univariate: input not univariate in " + v);
        return f * lead.constant_term().inverse();
    };
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        auto [q, r] = divide_monic_in_var(a, b, v);
        a = b;
        b = make_monic(r);
    }
    return a;
}

}  // namespace akinv

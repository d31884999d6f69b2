#include "akinv/runner.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "akinv/conductor.hpp"
#include "akinv/invariant.hpp"
#include "akinv/specialize.hpp"

namespace akinv {

using json = nlohmann::ordered_json;

namespace {

Scalar scalar_from_rational(const Rational& q, long p) {
    if (p == 0) return Scalar::rational(q);
    Scalar num = Scalar::from_integer(q.get_num(), p);
    Scalar den = Scalar::from_integer(q.get_den(), p);
    if (den.is_zero())
        throw ValidationError("literal " + q.get_str() + " has denominator divisible by " +
                              std::to_string(p));
    return num / den;
}

// Elaborate an expression tree into a polynomial; variable names must pass
// the supplied predicate ("undeclared identifier" otherwise).
Polynomial elaborate(const dsl::ExprPtr& e, long p,
                     const std::function<bool(const std::string&)>& allowed) {
    using K = dsl::Expr::Kind;
    switch (e->kind) {
        case K::Number: return Polynomial::constant(scalar_from_rational(e->number, p));
        case K::Variable:
            if (!allowed(e->name))
                throw ValidationError("undeclared identifier '" + e->name + "'");
            return Polynomial::variable(e->name, p);
        case K::Add: return elaborate(e->lhs, p, allowed) + elaborate(e->rhs, p, allowed);
        case K::Sub: return elaborate(e->lhs, p, allowed) - elaborate(e->rhs, p, allowed);
        case K::Neg: return -elaborate(e->lhs, p, allowed);
        case K::Mul: return elaborate(e->lhs, p, allowed) * elaborate(e->rhs, p, allowed);
        case K::Pow: return elaborate(e->lhs, p, allowed).pow(e->exponent);
    }
    throw Error("unreachable expression kind");
}

struct RingEntry {
    AlgebraPtr algebra;
    std::optional<TensorProduct> tensor;
};

struct MapEntry {
    std::optional<ExponentialMap> map;  // empty when verification failed
    std::vector<AxiomFailure> failures;
    std::string failure_message;
};

struct Environment {
    std::map<std::string, RingEntry> rings;
    std::map<std::string, MapEntry> maps;
    std::map<std::string, AlgebraHom> homs;
    std::map<std::string, std::shared_ptr<CurveSubalgebra>> subalgebras;

    const RingEntry& ring(const std::string& n) const { return rings.at(n); }
    const MapEntry& map_entry(const std::string& n) const { return maps.at(n); }
    const ExponentialMap& verified_map(const std::string& n) const {
        const MapEntry& e = maps.at(n);
        if (!e.map)
            throw ValidationError("expmap '" + n + "' failed verification; see check-exp");
        return *e.map;
    }
};

json failures_to_json(const std::vector<AxiomFailure>& failures) {
    json out = json::array();
    for (const auto& f : failures) {
        json j;
        switch (f.kind) {
            case AxiomFailure::Kind::Epsilon0: j["axiom"] = "eps0"; break;
            case AxiomFailure::Kind::Comultiplication: j["axiom"] = "comultiplication"; break;
            case AxiomFailure::Kind::RelationPreservation: j["axiom"] = "relation"; break;
            case AxiomFailure::Kind::NotLocallyNilpotent:
                j["axiom"] = "not-locally-nilpotent";
                break;
        }
        j["subject"] = f.subject;
        j["witness"] = f.witness.str();
        out.push_back(std::move(j));
    }
    return out;
}

std::string degree_json_value(const Degree& d) { return degree_str(d); }

class Runner {
  public:
    explicit Runner(const RunOptions& options) : opts_(options) {}

    Report run(const dsl::Script& script) {
        Report report;
        size_t index = 0;
        for (const auto& st : script.statements) {
            ++index;
            auto started = std::chrono::steady_clock::now();
            ReportEntry entry;
            entry.index = index;
            entry.statement = dsl::print_statement(st);
            bool is_command = std::holds_alternative<dsl::Command>(st);
            try {
                if (const auto* d = std::get_if<dsl::FieldDecl>(&st)) {
                    exec(*d);
                    continue;  // silent declaration
                } else if (const auto* d = std::get_if<dsl::RingDecl>(&st)) {
                    exec(*d);
                    continue;
                } else if (const auto* d = std::get_if<dsl::ExpmapDecl>(&st)) {
                    exec(*d);
                    continue;
                } else if (const auto* d = std::get_if<dsl::SubalgebraDecl>(&st)) {
                    exec(*d);
                    continue;
                } else if (const auto* d = std::get_if<dsl::HomDecl>(&st)) {
                    exec(*d);
                    continue;
                } else {
                    exec_command(std::get<dsl::Command>(st), entry);
                }
            } catch (const ResourceError& e) {
                entry.status = ReportEntry::Status::Error;
                entry.detail = std::string("resource cap: ") + e.what();
                entry.data = json{{"error", e.what()}, {"kind", "resource"}}.dump();
            } catch (const Error& e) {
                entry.status = ReportEntry::Status::Error;
                entry.detail = e.what();
                entry.data = json{{"error", e.what()}}.dump();
            } catch (const std::exception& e) {
                entry.status = ReportEntry::Status::Error;
                entry.detail = std::string("internal error: ") + e.what();
                entry.data = json{{"error", e.what()}, {"kind", "internal"}}.dump();
            }
            auto finished = std::chrono::steady_clock::now();
            entry.millis =
                std::chrono::duration<double, std::milli>(finished - started).count();
            if (!is_command && entry.status == ReportEntry::Status::Pass) continue;
            switch (entry.status) {
                case ReportEntry::Status::Pass: ++report.passed; break;
                case ReportEntry::Status::Fail: ++report.failed; break;
                case ReportEntry::Status::Error: ++report.errored; break;
            }
            report.entries.push_back(std::move(entry));
        }
        return report;
    }

  private:
    RunOptions opts_;
    Environment env_;

    long field_char(const dsl::FieldSpec& f) const { return f.p; }

    void exec(const dsl::FieldDecl&) { /* fields carry no state beyond the spec */ }

    void exec(const dsl::RingDecl& d) {
        if (d.is_tensor) {
            const RingEntry& left = env_.ring(d.left);
            const RingEntry& right = env_.ring(d.right);
            TensorProduct t = tensor(left.algebra, right.algebra);
            env_.rings.emplace(d.name, RingEntry{t.algebra, std::move(t)});
            return;
        }
        long p = field_char(d.field);
        std::set<std::string> declared(d.vars.begin(), d.vars.end());
        auto allowed = [&](const std::string& v) { return declared.count(v) > 0; };
        std::vector<Polynomial> relations;
        for (const auto& r : d.relations) relations.push_back(elaborate(r, p, allowed));
        AlgebraPtr A = PresentedAlgebra::present(d.vars, relations, p,
                                                 MonomialOrder::Kind::GrevLex, opts_.groebner);
        env_.rings.emplace(d.name, RingEntry{A, std::nullopt});
    }

    void exec(const dsl::ExpmapDecl& d) {
        const RingEntry& ring = env_.ring(d.ring);
        const AlgebraPtr& A = ring.algebra;
        long p = A->characteristic();
        auto allowed_with_t = [&](const std::string& v) {
            return A->has_variable(v) || (!d.from_derivation && v == "t");
        };
        std::map<std::string, Polynomial> images;
        for (const auto& [v, e] : d.images) images.emplace(v, elaborate(e, p, allowed_with_t));

        MapEntry entry;
        try {
            if (d.from_derivation) {
                unsigned bound = d.has_bound ? d.bound : opts_.default_nilpotency_bound;
                entry.map = from_lnd(A, images, bound);
            } else {
                entry.map = make_expmap(A, images);
            }
        } catch (const ExpmapError& e) {
            entry.failures = e.failures;
            entry.failure_message = e.what();
        }
        env_.maps.emplace(d.name, std::move(entry));
    }

    void exec(const dsl::SubalgebraDecl& d) {
        long p = field_char(d.field);
        auto allowed = [](const std::string& v) { return v == "y"; };
        std::vector<Polynomial> gens;
        for (const auto& e : d.gens) gens.push_back(elaborate(e, p, allowed));
        env_.subalgebras.emplace(d.name, std::make_shared<CurveSubalgebra>(gens, "y"));
    }

    void exec(const dsl::HomDecl& d) {
        const AlgebraPtr& src = env_.ring(d.source).algebra;
        const AlgebraPtr& tgt = env_.ring(d.target).algebra;
        long p = tgt->characteristic();
        auto allowed = [&](const std::string& v) { return tgt->has_variable(v); };
        std::map<std::string, AlgebraElement> images;
        for (const auto& [v, e] : d.images)
            images.emplace(v, make_element(tgt, elaborate(e, p, allowed)));
        env_.homs.emplace(d.name, AlgebraHom::make(src, tgt, images));
    }

    AlgebraElement element_arg(const ExponentialMap& phi, const dsl::ExprPtr& e) {
        const AlgebraPtr& A = phi.algebra();
        auto allowed = [&](const std::string& v) { return A->has_variable(v); };
        return make_element(A, elaborate(e, A->characteristic(), allowed));
    }

    void exec_command(const dsl::Command& c, ReportEntry& out) {
        using K = dsl::Command::Kind;
        json data;
        switch (c.kind) {
            case K::CheckExp: {
                const MapEntry& m = env_.map_entry(c.names[0]);
                if (m.map) {
                    out.status = ReportEntry::Status::Pass;
                    out.detail = "exponential map verified on " +
                                 m.map->algebra()->describe();
                    data["verified"] = true;
                    data["trivial"] = m.map->is_trivial();
                } else {
                    out.status = ReportEntry::Status::Fail;
                    out.detail = m.failure_message;
                    data["verified"] = false;
                    data["failures"] = failures_to_json(m.failures);
                }
                break;
            }
            case K::Deg: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                AlgebraElement a = element_arg(phi, c.args[0]);
                Degree deg = phi.phi_degree(a);
                out.detail = "deg_phi(" + a.str() + ") = " + degree_str(deg);
                data["element"] = a.str();
                data["deg_phi"] = degree_json_value(deg);
                break;
            }
            case K::DCoeff: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                AlgebraElement a = element_arg(phi, c.args[0]);
                AlgebraElement d = phi.derivation_coeff(a, c.index);
                out.detail = "D^" + std::to_string(c.index) + "(" + a.str() + ") = " + d.str();
                data["element"] = a.str();
                data["i"] = c.index;
                data["coefficient"] = d.str();
                break;
            }
            case K::Invariant: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                AlgebraElement a = element_arg(phi, c.args[0]);
                bool inv = phi.is_invariant(a);
                out.detail = a.str() + (inv ? " is invariant" : " is not invariant");
                data["element"] = a.str();
                data["invariant"] = inv;
                break;
            }
            case K::Iterative: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                std::vector<AlgebraElement> samples;
                for (const auto& e : c.args) samples.push_back(element_arg(phi, e));
                unsigned bound = c.has_bound ? c.bound : opts_.default_iterative_bound;
                IterativityReport rep = check_iterative(phi, samples, bound);
                data["bound"] = rep.bound;
                data["checks"] = rep.checks;
                data["passed"] = rep.passed();
                if (rep.passed()) {
                    out.status = ReportEntry::Status::Pass;
                    out.detail = "iterative property holds to bound " + std::to_string(bound) +
                                 " (" + std::to_string(rep.checks) + " checks)";
                } else {
                    out.status = ReportEntry::Status::Fail;
                    const auto& ce = rep.counterexamples.front();
                    out.detail = "iterativity fails on " + ce.sample + " at (i, j) = (" +
                                 std::to_string(ce.i) + ", " + std::to_string(ce.j) + ")";
                    json ces = json::array();
                    for (const auto& x : rep.counterexamples)
                        ces.push_back(json{{"sample", x.sample},
                                           {"i", x.i},
                                           {"j", x.j},
                                           {"lhs", x.lhs.str()},
                                           {"rhs", x.rhs.str()}});
                    data["counterexamples"] = std::move(ces);
                }
                break;
            }
            case K::Rewrite: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                AlgebraElement a = element_arg(phi, c.args[0]);
                unsigned pool_degree =
                    c.has_pool_degree ? c.pool_degree : opts_.default_pool_degree;
                auto pool = default_candidate_pool(phi.algebra(), pool_degree);
                MinimalDegreeResult min = minimal_positive_degree(phi, pool);
                AlgebraElement cinv = phi.derivation_coeff(min.x, min.n);
                InvariantRewrite rw = rewrite_in_invariants(phi, a, min.x, min.n, cinv);
                out.detail = "c^" + std::to_string(rw.power) + " * (" + a.str() +
                             ") rewritten over invariants with x = " + rw.x.str() +
                             ", n = " + std::to_string(rw.n) + ", c = " + rw.c.str();
                data["element"] = a.str();
                data["x"] = rw.x.str();
                data["n"] = rw.n;
                data["c"] = rw.c.str();
                data["power"] = rw.power;
                json coeffs = json::array();
                for (const auto& e : rw.coefficients) coeffs.push_back(e.str());
                data["coefficients"] = std::move(coeffs);
                data["reconstruction"] = true;  // rewrite_in_invariants verifies or throws
                break;
            }
            case K::Conductor: {
                const auto& A = env_.subalgebras.at(c.names[0]);
                ConductorResult res = conductor_generator(*A);
                CertificateReport cert =
                    res.n > 1 ? certificate_ideal(*A, res.g, res.h)
                              : CertificateReport{res.n, res.member_bound, 0, 0, true,
                                                  "trivial: deg h <= 1"};
                out.detail = "u = " + res.u.str() + ", h = " + res.h.str() +
                             ", n = " + std::to_string(res.n) + "; " + cert.detail;
                if (!cert.passed) out.status = ReportEntry::Status::Fail;
                data["u"] = res.u.str();
                data["g"] = res.g.str();
                data["h"] = res.h.str();
                data["n"] = res.n;
                data["finite_test_degree"] = res.finite_test_degree;
                data["member_bound"] = res.member_bound;
                data["u_divides_h_power"] = res.u_divides_h_power;
                data["certificate"] = json{{"passed", cert.passed},
                                           {"direct_checks", cert.direct_checks},
                                           {"replayed", cert.replayed},
                                           {"detail", cert.detail}};
                break;
            }
            case K::TensorExtend: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                const RingEntry& ring = env_.ring(c.names[1]);
                if (!ring.tensor)
                    throw ValidationError("'" + c.names[1] + "' is not a tensor ring");
                TensorSide side = ring.tensor->left_factor == phi.algebra()
                                      ? TensorSide::Left
                                      : TensorSide::Right;
                ExponentialMap ext = extend_to_tensor(phi, *ring.tensor, side);
                env_.maps.emplace(c.result_name, MapEntry{ext, {}, ""});
                out.detail = "extended " + c.names[0] + " to " +
                             ring.tensor->algebra->describe() + " as " + c.result_name;
                data["result"] = c.result_name;
                data["verified"] = true;
                data["side"] = side == TensorSide::Left ? "left" : "right";
                break;
            }
            case K::Specialize: {
                const RingEntry& ring = env_.ring(c.names[0]);
                if (!ring.tensor)
                    throw ValidationError("'" + c.names[0] + "' is not a tensor ring");
                long p = ring.algebra->characteristic();
                std::map<std::string, Scalar> values;
                json jvals;
                for (const auto& [v, e] : c.bindings) {
                    Polynomial val = elaborate(e, p, [](const std::string&) { return false; });
                    if (!val.is_constant())
                        throw ValidationError("specialization value for '" + v +
                                              "' is not a constant");
                    values.emplace(v, val.constant_term());
                    jvals[v] = val.constant_term().str();
                }
                AlgebraHom sigma = sigma_hom(*ring.tensor, values);
                env_.homs.emplace(c.result_name, sigma);
                out.detail = "specialization " + c.result_name + " : " +
                             ring.tensor->algebra->describe() + " -> " +
                             ring.tensor->right_factor->describe();
                data["values"] = std::move(jvals);
                data["result"] = c.result_name;
                break;
            }
            case K::Push: {
                const ExponentialMap& phi = env_.verified_map(c.names[0]);
                const AlgebraHom& sigma = env_.homs.at(c.names[1]);
                const RingEntry* tensor_ring = nullptr;
                for (const auto& [name, ring] : env_.rings)
                    if (ring.tensor && ring.algebra == phi.algebra()) tensor_ring = &ring;
                if (!tensor_ring)
                    throw ValidationError("push requires a map on a declared tensor ring");
                unsigned bound = c.has_bound ? c.bound : opts_.default_iterative_bound;
                try {
                    PushResult res = push_expmap(phi, *tensor_ring->tensor, sigma, bound);
                    env_.maps.emplace(c.result_name, MapEntry{res.psi, {}, ""});
                    out.detail = "pushed " + c.names[0] + " to " +
                                 res.psi.algebra()->describe() + " as " + c.result_name +
                                 "; iterative to bound " + std::to_string(bound);
                    data["result"] = c.result_name;
                    data["verified"] = true;
                    data["iterative_bound"] = bound;
                    data["iterative_checks"] = res.iterativity.checks;
                } catch (const ExpmapError& e) {
                    out.status = ReportEntry::Status::Fail;
                    out.detail = e.what();
                    data["verified"] = false;
                    data["failures"] = failures_to_json(e.failures);
                }
                break;
            }
            case K::AkUpperBound: {
                std::vector<ExponentialMap> family;
                for (const auto& n : c.names) family.push_back(env_.verified_map(n));
                const AlgebraPtr& A = family.front().algebra();
                for (const auto& m : family)
                    if (m.algebra() != A &&
                        !PresentedAlgebra::same_presentation(*m.algebra(), *A))
                        throw ValidationError("ak-upper-bound maps live on different algebras");
                auto allowed = [&](const std::string& v) { return A->has_variable(v); };
                AlgebraElement a =
                    make_element(A, elaborate(c.args[0], A->characteristic(), allowed));
                bool member = invariant_under_all(family, a);
                out.detail = a.str() + (member ? " lies in" : " is outside") +
                             " the intersection of the invariant rings";
                data["element"] = a.str();
                data["member"] = member;
                json names = json::array();
                for (const auto& n : c.names) names.push_back(n);
                data["maps"] = std::move(names);
                break;
            }
        }
        out.data = data.is_null() ? json(json::value_t::object).dump() : data.dump();
    }
};

}  // namespace

int Report::exit_code() const {
    if (errored > 0) return 2;
    if (failed > 0) return 1;
    return 0;
}

std::string Report::to_json(const std::string& source_name) const {
    json out;
    out["source"] = source_name;
    json entries_json = json::array();
    for (const auto& e : entries) {
        json j;
        j["index"] = e.index;
        j["statement"] = e.statement;
        switch (e.status) {
            case ReportEntry::Status::Pass: j["status"] = "pass"; break;
            case ReportEntry::Status::Fail: j["status"] = "fail"; break;
            case ReportEntry::Status::Error: j["status"] = "error"; break;
        }
        j["detail"] = e.detail;
        j["data"] = json::parse(e.data.empty() ? "{}" : e.data);
        entries_json.push_back(std::move(j));
    }
    out["entries"] = std::move(entries_json);
    out["summary"] = json{{"pass", passed}, {"fail", failed}, {"error", errored}};
    out["exit_code"] = exit_code();
    return out.dump(2) + "\n";
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << std::left << std::setw(5) << "#" << std::setw(8) << "status" << std::setw(10)
       << "time(ms)" << "statement / detail\n";
    os << std::string(78, '-') << "\n";
    for (const auto& e : entries) {
        const char* status = e.status == ReportEntry::Status::Pass   ? "pass"
                             : e.status == ReportEntry::Status::Fail ? "FAIL"
                                                                     : "ERROR";
        os << std::left << std::setw(5) << e.index << std::setw(8) << status << std::setw(10)
           << std::fixed << std::setprecision(1) << e.millis << e.statement << "\n";
        if (!e.detail.empty()) os << std::string(23, ' ') << e.detail << "\n";
    }
    os << std::string(78, '-') << "\n";
    os << "pass " << passed << ", fail " << failed << ", error " << errored << "\n";
    return os.str();
}

Report run_script(const dsl::Script& script, const RunOptions& options) {
    return Runner(options).run(script);
}

}  // namespace akinv

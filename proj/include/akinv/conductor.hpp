#pragma once

#include <mutex>

#include "akinv/expmap.hpp"

namespace akinv {

/// A subalgebra A ⊆ k[y] given by univariate generators. Membership in the
/// linear span of bounded-degree products of generators is decided by exact
/// row reduction; bases are cached per degree bound (pure-query contract).
class CurveSubalgebra {
  public:
    explicit CurveSubalgebra(std::vector<Polynomial> generators, std::string variable = "y");

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::string& variable() const { return var_; }
    long characteristic() const { return p_; }
    int max_generator_degree() const { return max_degree_; }

    /// Default span bound for a membership query of the given degree.
    long default_member_bound(int query_degree) const;

    struct MembershipCertificate {
        bool member = false;
        long bound = 0;
        /// f as a linear combination of generator products; each entry is
        /// (exponent per generator, coefficient).
        std::vector<std::pair<std::vector<unsigned>, Scalar>> combination;
    };

    /// True iff f lies in the span of products of generators with product
    /// degree <= degree_bound (degree_bound < 0 uses the default). False may
    /// mean "not within bound"; the bound used is recorded.
    MembershipCertificate member(const Polynomial& f, long degree_bound = -1) const;
    bool contains(const Polynomial& f, long degree_bound = -1) const {
        return member(f, degree_bound).member;
    }

    struct Row {
        std::vector<Scalar> coeffs;             // dense over y-degrees 0..bound
        std::map<size_t, Scalar> combination;   // over the product list
        int pivot = 0;                          // highest nonzero degree, coefficient 1
    };
    struct SpanBasis {
        long bound = 0;
        std::vector<std::vector<unsigned>> products;  // exponent tuples, enumeration order
        std::vector<Row> rows;
        std::map<int, size_t> row_of_pivot;
    };

    std::shared_ptr<const SpanBasis> basis_for(long bound) const;

  private:
    std::vector<Polynomial> gens_;
    std::string var_;
    long p_;
    int max_degree_ = 0;
    mutable std::mutex mu_;
    mutable std::map<long, std::shared_ptr<const SpanBasis>> cache_;
};

/// g, h ∈ A with y*h = g, h monic of minimal degree among pairs found within
/// the search bound. n = deg h.
struct FractionForY {
    Polynomial g;
    Polynomial h;
    int n = 0;
    long member_bound = 0;
};

/// Throws ResourceError if no pair is found within the bound (which does not
/// disprove existence).
FractionForY fraction_for_y(const CurveSubalgebra& A, int max_denominator_degree = -1);

/// Verification that k[y] h^{n-1} ⊆ A: direct membership for m = 0..2n-1,
/// then a symbolic replay of the reduction y^m h^{n-1} = y^{m-n} h^n +
/// p_m(y) h^{n-1} up to the requested power.
struct CertificateReport {
    int n = 0;
    long bound = 0;
    unsigned direct_checks = 0;
    unsigned replayed = 0;
    bool passed = false;
    std::string detail;
};

CertificateReport certificate_ideal(const CurveSubalgebra& A, const Polynomial& g,
                                    const Polynomial& h, int replay_bound = -1);

/// The monic generator u of the conductor {f ∈ k[y] : k[y] f ⊆ A}, found by
/// degree-by-degree linear algebra over the finite test y^j f ∈ A for
/// j < deg(h^{n-1}), plus the witnessing membership certificates.
struct ConductorResult {
    Polynomial u;
    Polynomial g;
    Polynomial h;
    int n = 0;                   // deg h
    int finite_test_degree = 0;  // D = deg(h^{n-1})
    long member_bound = 0;
    bool u_divides_h_power = false;
    std::vector<CurveSubalgebra::MembershipCertificate> certificates;  // y^j u, j < D
};

ConductorResult conductor_generator(const CurveSubalgebra& A);

/// Lemma 4.4 harness. Requires the tensor's left factor to be the free ring
/// k[y]; checks the hypothesis that phi restricts to an exponential map of
/// A ⊗ B (each t-coefficient of phi on an A-generator lies in A ⊗ B), and
/// only then divides D^i(u) by u in k[y] ⊗ B for i <= deg_phi(u).
/// Hypothesis violations are flagged, never silently divided.
struct Lemma44Report {
    bool hypothesis_ok = false;
    std::vector<std::string> hypothesis_violations;
    struct DivisionCheck {
        unsigned i = 0;
        Polynomial numerator;
        bool divides = false;
        Polynomial quotient;
    };
    unsigned phi_degree_of_u = 0;
    std::vector<DivisionCheck> divisions;
    bool passed() const {
        if (!hypothesis_ok) return false;
        for (const auto& d : divisions)
            if (!d.divides) return false;
        return true;
    }
};

Lemma44Report check_u_divides_dn_u(const ExponentialMap& phi, const TensorProduct& T,
                                   const CurveSubalgebra& A, const Polynomial& u,
                                   long member_bound = -1);

}  // namespace akinv

#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwahori/field.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

// Laurent polynomial on the coweight lattice Z^n with Fq coefficients:
// finitely many terms c_lambda e^lambda. Zero coefficients never stored.
struct Laurent {
    std::map<Coweight, scalar_t> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Laurent& o) const { return terms == o.terms; }
};

Laurent laurent_monomial(const Fq& F, const Coweight& lam, scalar_t c);
Laurent laurent_const(const Fq& F, int n, scalar_t c);
Laurent laurent_add(const Fq& F, const Laurent& a, const Laurent& b);
Laurent laurent_scale(const Fq& F, scalar_t c, const Laurent& a);
Laurent laurent_mul(const Fq& F, const Laurent& a, const Laurent& b);
Laurent laurent_perm(const Laurent& a, const Perm& w);  // e^lambda -> e^{w lambda}
bool laurent_w_invariant(const Fq& F, const Laurent& a, int n);

// Evaluate at a point of the dual torus: e^lambda -> prod x_i^{lambda_i}.
scalar_t laurent_eval(const Fq& F, const Laurent& a, const std::vector<scalar_t>& x);

// e_i(X_1..X_n), the i-th elementary symmetric function (1 <= i <= n).
Laurent elementary_symmetric(const Fq& F, int n, int i);

// Truncated polynomial ring Lambda[t_1..t_n]/(t_1..t_n)^N: the model of the
// completed local ring of the dual torus at a point, truncated at order N.
class TruncRing {
public:
    TruncRing(const Fq* F, int nvars, int order);

    int nvars() const { return n_; }
    int order() const { return N_; }
    size_t dim() const { return monos_.size(); }
    const Fq& field() const { return *F_; }
    // Exponent tuple of basis index m, graded-lex ordered (total degree, lex).
    const std::vector<int>& mono(size_t m) const { return monos_[m]; }
    size_t mono_index(const std::vector<int>& e) const;

    using Elt = std::vector<scalar_t>;  // coordinates over monos_

    Elt zero() const { return Elt(dim(), 0); }
    Elt constant(scalar_t c) const;
    Elt variable(int i) const;  // t_i
    Elt add(const Elt& a, const Elt& b) const;
    Elt scale(scalar_t c, const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, std::int64_t e) const;  // negative e for units
    Elt inv(const Elt& a) const;                  // a must be a unit
    bool is_zero(const Elt& a) const;
    bool is_unit(const Elt& a) const { return a[0] != 0; }

    // Degree-d homogeneous truncation threshold: indices with |mono| >= d.
    std::vector<size_t> indices_of_degree_at_least(int d) const;

private:
    const Fq* F_;
    int n_, N_;
    std::vector<std::vector<int>> monos_;
    std::map<std::vector<int>, size_t> index_;
    // mult_table_[i][j] = index of mono_i * mono_j, or npos if truncated away
    std::vector<std::vector<size_t>> mult_table_;
    static constexpr size_t npos = size_t(-1);
};

// Taylor expansion at a lift: X_i -> x_i + t_i, extended multiplicatively to
// Laurent monomials (negative exponents use that x_i + t_i is a unit).
TruncRing::Elt taylor_at(const TruncRing& R, const Laurent& f, const std::vector<scalar_t>& x);

std::string laurent_str(const Fq& F, const Laurent& a);

}  // namespace iwahori

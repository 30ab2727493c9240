#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwahori {

// Error taxonomy mirrored by the CLI exit codes.
struct NonBanalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonRegularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

// Element of F_{ell^k}, encoded as an integer in [0, ell^k).
// The coefficient vector (c0,...,c_{k-1}) w.r.t. the power basis of the
// modulus is packed with c0 most significant, so that the integer order
// on codes equals the lexicographic order on coefficient vectors. That
// order is the canonical scalar order used everywhere for determinism.
using scalar_t = std::uint32_t;

class Fq {
public:
    // Canonical modulus: lexicographically smallest irreducible of the
    // given degree (coefficient vectors compared c0 first).
    Fq(std::int64_t ell, int degree);
    Fq(std::int64_t ell, int degree, std::vector<std::int64_t> modulus_low_coeffs);

    std::int64_t ell() const { return ell_; }
    int degree() const { return deg_; }
    std::uint64_t card() const { return q_; }
    // Low coefficients c0..c_{k-1} of the monic modulus X^k + sum c_i X^i.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    scalar_t zero() const { return 0; }
    scalar_t one() const { return one_; }
    scalar_t from_int(std::int64_t v) const;      // image of an integer
    scalar_t gen() const { return gen_; }         // a multiplicative generator

    std::vector<std::int64_t> coeffs(scalar_t a) const;  // c0..c_{k-1}
    scalar_t from_coeffs(const std::vector<std::int64_t>& c) const;

    scalar_t add(scalar_t a, scalar_t b) const {
        if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    scalar_t neg(scalar_t a) const { return neg_table_[a]; }
    scalar_t sub(scalar_t a, scalar_t b) const { return add(a, neg(b)); }
    scalar_t mul(scalar_t a, scalar_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    scalar_t inv(scalar_t a) const {
        if (a == 0) throw InternalError("Fq: division by zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    scalar_t div(scalar_t a, scalar_t b) const { return mul(a, inv(b)); }
    scalar_t pow(scalar_t a, std::int64_t e) const;
    scalar_t frobenius(scalar_t a) const { return pow(a, ell_); }

    // Multiplicative order; 0 is rejected.
    std::uint64_t order(scalar_t a) const;

    bool is_square(scalar_t a) const;
    // The canonical square root (lex-least coefficient vector); throws if none.
    scalar_t sqrt(scalar_t a) const;

    std::string str(scalar_t a) const;

private:
    void build_tables();
    scalar_t add_slow(scalar_t a, scalar_t b) const;
    scalar_t mul_slow(scalar_t a, scalar_t b) const;

    std::int64_t ell_ = 0;
    int deg_ = 0;
    std::uint64_t q_ = 0;
    scalar_t one_ = 0;
    scalar_t gen_ = 0;
    std::vector<std::int64_t> modulus_;  // low coeffs, length deg_
    std::vector<std::uint64_t> pow_ell_; // ell^i for digit packing
    std::vector<scalar_t> exp_;          // exp_[i] = gen^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;     // log_[a] for a != 0
    std::vector<scalar_t> neg_table_;
    std::vector<scalar_t> add_table_;    // only when q small enough
};

// Polynomials over Fq: coefficient vectors, low degree first, no trailing zeros.
using FqPoly = std::vector<scalar_t>;

FqPoly poly_trim(FqPoly p);
FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
scalar_t poly_eval(const Fq& F, const FqPoly& p, scalar_t x);
// Divide by (X - r); remainder must vanish.
FqPoly poly_divide_root(const Fq& F, const FqPoly& p, scalar_t r);
// All roots in F with multiplicity, canonically ordered; also reports
// whether p splits completely over F.
std::pair<std::vector<scalar_t>, bool> poly_roots(const Fq& F, const FqPoly& p);

bool is_prime(std::int64_t p);
// q = p^e with p prime; returns p, or 0 if q is not a prime power.
std::int64_t prime_power_base(std::int64_t q);

// ell | #GL_n(F_q) test, exact integer arithmetic (spec: banal iff not).
bool banal_check(int n, std::int64_t q, std::int64_t ell);

// A fixed coefficient field with the pinned data the rest of the library
// consumes: the image of q, a chosen sqrt(q), and the GL_n rank n.
struct FieldSpec {
    Fq F;
    std::int64_t q_int = 0;
    int n = 0;
    scalar_t q_image = 0;
    scalar_t sqrt_q = 0;

    FieldSpec(Fq field, std::int64_t q, int n_);
    void validate() const;  // banality, sqrt_q^2 = q, ord(q) > n
};

// Smallest-degree field containing sqrt(q mod ell) and a full set of roots
// of every required polynomial (given over the prime field as integer
// coefficient vectors, low degree first).
FieldSpec build_field(std::int64_t ell, std::int64_t q, int n,
                      const std::vector<std::vector<std::int64_t>>& required_roots = {});

}  // namespace iwahori

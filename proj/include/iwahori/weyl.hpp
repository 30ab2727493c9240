#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwahori/field.hpp"

namespace iwahori {

// Symmetric group element in one-line notation, 0-based internally.
// window[i] = w(i). Serialized 1-based.
using Perm = std::vector<int>;
// Element of the coweight lattice Z^n.
using Coweight = std::vector<std::int64_t>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
int perm_length(const Perm& a);  // inversion count
Perm perm_transposition(int n, int i, int j);
std::vector<Perm> all_perms(int n);  // lex order on windows

// w acting on a coweight: (w.mu)_i = mu_{w^{-1}(i)}.
Coweight perm_act(const Perm& w, const Coweight& mu);

// t_lambda * w in the extended affine Weyl group of GL_n.
struct AffineElt {
    Coweight t;
    Perm w;

    bool operator==(const AffineElt& o) const { return t == o.t && w == o.w; }
    bool operator<(const AffineElt& o) const {
        if (t != o.t) return t < o.t;
        return w < o.w;
    }
};

AffineElt aff_identity(int n);
AffineElt aff_mul(const AffineElt& a, const AffineElt& b);
AffineElt aff_inverse(const AffineElt& a);
AffineElt aff_from_perm(const Perm& w);
AffineElt aff_translation(const Coweight& lam);

// Simple reflections s_1..s_{n-1}; s_0 = t_{e1-en}(1 n); pi = t_{e1} * n-cycle.
AffineElt aff_simple(int n, int i);  // i in 0..n-1, 0 means the affine one
AffineElt aff_pi(int n);
AffineElt aff_pi_pow(int n, std::int64_t k);

// Iwahori-Matsumoto length on the extended group (length 0 on <pi>).
std::int64_t aff_length(const AffineElt& g);

// g = pi^k s_{i1} ... s_{im} with m = length(g).
struct AffineWord {
    std::int64_t pi_power = 0;
    std::vector<int> letters;  // simple indices in 0..n-1
};
AffineWord aff_reduced_word(const AffineElt& g);

// <lambda, 2 rho> with 2 rho = (n-1, n-3, ..., 1-n).
std::int64_t pair_two_rho(const Coweight& lam);

bool is_antidominant(const Coweight& lam);  // weakly increasing entries
// Canonical split lambda = mu - nu, both antidominant: nu_1 = 0 and
// nu_{i+1} = nu_i + max(0, lambda_i - lambda_{i+1}).
std::pair<Coweight, Coweight> antidominant_split(const Coweight& lam);

// Composition (n_1,...,n_t) of n.
struct Composition {
    std::vector<int> parts;
    int n() const;
    void validate() const;
    // Indices i (1-based, in 1..n-1) with i, i+1 in the same block; these are
    // the simple reflections generating W_M.
    std::vector<int> internal_simples() const;
};

// ^{W_M}W: minimal length representatives of the left cosets W_M \ w,
// sorted by (length, lex window). |result| * |W_M| = n!.
std::vector<Perm> minimal_coset_reps(const Composition& M);
// Minimal length representatives of the right cosets w W_M, same sort.
std::vector<Perm> minimal_right_coset_reps(const Composition& M);

std::string perm_str(const Perm& w);
std::string coweight_str(const Coweight& c);
std::string aff_str(const AffineElt& g);

}  // namespace iwahori

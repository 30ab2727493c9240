#include "iwahori/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iwahori {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = int(i);
    return c;
}

int perm_length(const Perm& a) {
    int n = int(a.size()), l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i] > a[j]) ++l;
    return l;
}

Perm perm_transposition(int n, int i, int j) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[j]);
    return p;
}

std::vector<Perm> all_perms(int n) {
    Perm p = perm_identity(n);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Coweight perm_act(const Perm& w, const Coweight& mu) {
    Perm wi = perm_inverse(w);
    Coweight r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) r[i] = mu[wi[i]];
    return r;
}

AffineElt aff_identity(int n) { return {Coweight(n, 0), perm_identity(n)}; }

AffineElt aff_mul(const AffineElt& a, const AffineElt& b) {
    Coweight t = a.t;
    Coweight wb = perm_act(a.w, b.t);
    for (size_t i = 0; i < t.size(); ++i) t[i] += wb[i];
    return {t, perm_compose(a.w, b.w)};
}

AffineElt aff_inverse(const AffineElt& a) {
    Perm wi = perm_inverse(a.w);
    Coweight t = perm_act(wi, a.t);
    for (auto& x : t) x = -x;
    return {t, wi};
}

AffineElt aff_from_perm(const Perm& w) { return {Coweight(w.size(), 0), w}; }
AffineElt aff_translation(const Coweight& lam) { return {lam, perm_identity(int(lam.size()))}; }

AffineElt aff_simple(int n, int i) {
    check_internal(0 <= i && i < n, "aff_simple: index");
    if (i == 0) {
        Coweight lam(n, 0);
        lam[0] = 1;
        lam[n - 1] = -1;
        return {lam, perm_transposition(n, 0, n - 1)};
    }
    return aff_from_perm(perm_transposition(n, i - 1, i));
}

AffineElt aff_pi(int n) {
    Coweight lam(n, 0);
    lam[0] = 1;
    Perm c(n);  // i -> i+1 cyclically
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return {lam, c};
}

AffineElt aff_pi_pow(int n, std::int64_t k) {
    AffineElt p = k >= 0 ? aff_pi(n) : aff_inverse(aff_pi(n));
    AffineElt r = aff_identity(n);
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) r = aff_mul(r, p);
    return r;
}

std::int64_t aff_length(const AffineElt& g) {
    int n = int(g.t.size());
    Perm wi = perm_inverse(g.w);
    std::int64_t l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::int64_t pair = g.t[i] - g.t[j];  // <lambda, e_i - e_j>
            bool pos = wi[i] < wi[j];             // w^{-1}(e_i - e_j) > 0
            l += pos ? std::llabs(pair) : std::llabs(pair - 1);
        }
    return l;
}

AffineWord aff_reduced_word(const AffineElt& g) {
    int n = int(g.t.size());
    AffineWord word;
    word.pi_power = std::accumulate(g.t.begin(), g.t.end(), std::int64_t(0));
    AffineElt cur = aff_mul(aff_pi_pow(n, -word.pi_power), g);
    std::int64_t len = aff_length(cur);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < n; ++i) {
            AffineElt nxt = aff_mul(aff_simple(n, i), cur);
            std::int64_t nl = aff_length(nxt);
            if (nl < len) {
                word.letters.push_back(i);
                cur = nxt;
                len = nl;
                found = true;
                break;
            }
        }
        check_internal(found, "aff_reduced_word: no descent");
    }
    check_internal(cur == aff_identity(n), "aff_reduced_word: nontrivial kernel remainder");
    return word;
}

std::int64_t pair_two_rho(const Coweight& lam) {
    int n = int(lam.size());
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += lam[i] * std::int64_t(n - 1 - 2 * i);
    return s;
}

bool is_antidominant(const Coweight& lam) {
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] > lam[i + 1]) return false;
    return true;
}

std::pair<Coweight, Coweight> antidominant_split(const Coweight& lam) {
    int n = int(lam.size());
    Coweight nu(n, 0);
    for (int i = 0; i + 1 < n; ++i)
        nu[i + 1] = nu[i] + std::max<std::int64_t>(0, lam[i] - lam[i + 1]);
    Coweight mu(n);
    for (int i = 0; i < n; ++i) mu[i] = lam[i] + nu[i];
    check_internal(is_antidominant(mu) && is_antidominant(nu), "antidominant_split");
    return {mu, nu};
}

int Composition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

void Composition::validate() const {
    check_internal(!parts.empty(), "Composition: empty");
    for (int p : parts) check_internal(p >= 1, "Composition: nonpositive part");
}

std::vector<int> Composition::internal_simples() const {
    std::vector<int> s;
    int pos = 0;
    for (int p : parts) {
        for (int i = 1; i < p; ++i) s.push_back(pos + i);  // 1-based simple index
        pos += p;
    }
    return s;
}

namespace {
std::vector<Perm> coset_reps(const Composition& M, bool left) {
    M.validate();
    int n = M.n();
    auto simples = M.internal_simples();
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n)) {
        bool ok = true;
        Perm wi = perm_inverse(w);
        for (int s : simples) {
            // left cosets W_M w: minimal iff w^{-1}(alpha_s) > 0, i.e.
            // w^{-1}(s-1) < w^{-1}(s) (0-based); right cosets w W_M:
            // minimal iff w(s-1) < w(s).
            bool cond = left ? (wi[s - 1] < wi[s]) : (w[s - 1] < w[s]);
            if (!cond) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) {
        int la = perm_length(a), lb = perm_length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}
}  // namespace

std::vector<Perm> minimal_coset_reps(const Composition& M) { return coset_reps(M, true); }
std::vector<Perm> minimal_right_coset_reps(const Composition& M) { return coset_reps(M, false); }

std::string perm_str(const Perm& w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
    os << "]";
    return os.str();
}

std::string coweight_str(const Coweight& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

std::string aff_str(const AffineElt& g) {
    return "t" + coweight_str(g.t) + perm_str(g.w);
}

}  // namespace iwahori

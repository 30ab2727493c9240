#include "iwahori/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace iwahori {

Laurent laurent_monomial(const Fq& F, const Coweight& lam, scalar_t c) {
    (void)F;
    Laurent a;
    if (c) a.terms[lam] = c;
    return a;
}

Laurent laurent_const(const Fq& F, int n, scalar_t c) {
    return laurent_monomial(F, Coweight(n, 0), c);
}

Laurent laurent_add(const Fq& F, const Laurent& a, const Laurent& b) {
    Laurent c = a;
    for (const auto& [lam, v] : b.terms) {
        auto it = c.terms.find(lam);
        if (it == c.terms.end()) {
            c.terms[lam] = v;
        } else {
            it->second = F.add(it->second, v);
            if (!it->second) c.terms.erase(it);
        }
    }
    return c;
}

Laurent laurent_scale(const Fq& F, scalar_t s, const Laurent& a) {
    Laurent c;
    if (!s) return c;
    for (const auto& [lam, v] : a.terms) c.terms[lam] = F.mul(s, v);
    return c;
}

Laurent laurent_mul(const Fq& F, const Laurent& a, const Laurent& b) {
    Laurent c;
    for (const auto& [la, va] : a.terms)
        for (const auto& [lb, vb] : b.terms) {
            Coweight l = la;
            for (size_t i = 0; i < l.size(); ++i) l[i] += lb[i];
            scalar_t prod = F.mul(va, vb);
            auto it = c.terms.find(l);
            if (it == c.terms.end()) {
                if (prod) c.terms[l] = prod;
            } else {
                it->second = F.add(it->second, prod);
                if (!it->second) c.terms.erase(it);
            }
        }
    return c;
}

Laurent laurent_perm(const Laurent& a, const Perm& w) {
    Laurent c;
    for (const auto& [lam, v] : a.terms) c.terms[perm_act(w, lam)] = v;
    return c;
}

bool laurent_w_invariant(const Fq& F, const Laurent& a, int n) {
    for (int i = 1; i < n; ++i) {
        Perm s = perm_transposition(n, i - 1, i);
        if (!(laurent_perm(a, s) == a)) {
            (void)F;
            return false;
        }
    }
    return true;
}

scalar_t laurent_eval(const Fq& F, const Laurent& a, const std::vector<scalar_t>& x) {
    scalar_t s = 0;
    for (const auto& [lam, v] : a.terms) {
        scalar_t m = v;
        for (size_t i = 0; i < x.size(); ++i)
            if (lam[i]) m = F.mul(m, F.pow(x[i], lam[i]));
        s = F.add(s, m);
    }
    return s;
}

Laurent elementary_symmetric(const Fq& F, int n, int i) {
    check_internal(1 <= i && i <= n, "elementary_symmetric: index");
    Laurent e;
    std::vector<int> idx(i);
    // iterate over i-subsets of {0..n-1}
    for (int j = 0; j < i; ++j) idx[j] = j;
    while (true) {
        Coweight lam(n, 0);
        for (int j : idx) lam[j] = 1;
        e.terms[lam] = F.one();
        int j = i - 1;
        while (j >= 0 && idx[j] == n - i + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int k = j + 1; k < i; ++k) idx[k] = idx[k - 1] + 1;
    }
    return e;
}

TruncRing::TruncRing(const Fq* F, int nvars, int order) : F_(F), n_(nvars), N_(order) {
    check_internal(order >= 1 && nvars >= 1, "TruncRing: parameters");
    // monomials of total degree < N, graded lex
    std::vector<int> e(n_, 0);
    std::vector<std::vector<int>> all;
    // enumerate by total degree
    for (int d = 0; d < N_; ++d) {
        std::vector<int> cur(n_, 0);
        cur[n_ - 1] = d;
        // enumerate compositions of d into n parts in lex order of tuples
        std::vector<int> t(n_, 0);
        // recursive enumeration, iterative style
        std::vector<std::vector<int>> stack;
        std::vector<int> work(n_, 0);
        // simple odometer over tuples with sum d
        std::vector<int> v(n_, 0);
        v[0] = d;
        while (true) {
            all.push_back(v);
            // next composition of d in colex-ish order: standard algorithm
            int i = n_ - 2;
            while (i >= 0 && v[i] == 0) --i;
            if (i < 0) break;
            int rest = v[n_ - 1];
            v[i] -= 1;
            v[i + 1] = rest + 1;
            if (i + 1 != n_ - 1) {
                v[i + 1] = 1 + rest;
                for (int k = i + 2; k < n_; ++k) v[k] = 0;
                v[n_ - 1] = 0;
                std::swap(v[i + 1], v[i + 1]);  // keep value at i+1
                // move the remainder to position i+1 entirely
            }
            // normalize: everything after i+1 collapses into position i+1? No:
            // the standard next-composition puts (rest+1) at i+1 and zeros after.
            if (i + 1 < n_ - 1) {
                int val = v[i + 1];
                for (int k = i + 2; k < n_; ++k) {
                    val += v[k];
                    v[k] = 0;
                }
                v[i + 1] = val;
            }
        }
    }
    monos_ = std::move(all);
    std::sort(monos_.begin(), monos_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });
    monos_.erase(std::unique(monos_.begin(), monos_.end()), monos_.end());
    for (size_t m = 0; m < monos_.size(); ++m) index_[monos_[m]] = m;
    mult_table_.assign(monos_.size(), std::vector<size_t>(monos_.size(), npos));
    for (size_t i = 0; i < monos_.size(); ++i)
        for (size_t j = 0; j < monos_.size(); ++j) {
            std::vector<int> s(n_);
            int tot = 0;
            for (int k = 0; k < n_; ++k) {
                s[k] = monos_[i][k] + monos_[j][k];
                tot += s[k];
            }
            if (tot < N_) mult_table_[i][j] = index_.at(s);
        }
}

size_t TruncRing::mono_index(const std::vector<int>& e) const {
    auto it = index_.find(e);
    check_internal(it != index_.end(), "TruncRing: monomial out of range");
    return it->second;
}

TruncRing::Elt TruncRing::constant(scalar_t c) const {
    Elt e = zero();
    e[0] = c;
    return e;
}

TruncRing::Elt TruncRing::variable(int i) const {
    Elt e = zero();
    if (N_ == 1) return e;  // t_i = 0 at order 1
    std::vector<int> m(n_, 0);
    m[i] = 1;
    e[mono_index(m)] = F_->one();
    return e;
}

TruncRing::Elt TruncRing::add(const Elt& a, const Elt& b) const {
    Elt c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = F_->add(a[i], b[i]);
    return c;
}

TruncRing::Elt TruncRing::scale(scalar_t s, const Elt& a) const {
    Elt c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = F_->mul(s, a[i]);
    return c;
}

TruncRing::Elt TruncRing::mul(const Elt& a, const Elt& b) const {
    Elt c(dim(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (!b[j]) continue;
            size_t k = mult_table_[i][j];
            if (k != npos) c[k] = F_->add(c[k], F_->mul(a[i], b[j]));
        }
    }
    return c;
}

TruncRing::Elt TruncRing::inv(const Elt& a) const {
    check_internal(is_unit(a), "TruncRing: not a unit");
    // a = c (1 + m), inverse = c^{-1} sum (-m)^k
    scalar_t c = a[0];
    Elt m = scale(F_->inv(c), a);
    m[0] = 0;  // m is the nilpotent part
    Elt acc = constant(F_->one());
    Elt pw = constant(F_->one());
    for (int k = 1; k < N_; ++k) {
        pw = mul(pw, m);
        Elt term = scale((k % 2) ? F_->neg(F_->one()) : F_->one(), pw);
        acc = add(acc, term);
    }
    return scale(F_->inv(c), acc);
}

TruncRing::Elt TruncRing::pow(const Elt& a, std::int64_t e) const {
    Elt base = e >= 0 ? a : inv(a);
    std::uint64_t k = std::uint64_t(e >= 0 ? e : -e);
    Elt r = constant(F_->one());
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool TruncRing::is_zero(const Elt& a) const {
    for (auto x : a)
        if (x) return false;
    return true;
}

std::vector<size_t> TruncRing::indices_of_degree_at_least(int d) const {
    std::vector<size_t> out;
    for (size_t m = 0; m < monos_.size(); ++m) {
        int tot = 0;
        for (int x : monos_[m]) tot += x;
        if (tot >= d) out.push_back(m);
    }
    return out;
}

TruncRing::Elt taylor_at(const TruncRing& R, const Laurent& f, const std::vector<scalar_t>& x) {
    const Fq& F = R.field();
    TruncRing::Elt acc = R.zero();
    for (const auto& [lam, c] : f.terms) {
        TruncRing::Elt m = R.constant(c);
        for (size_t i = 0; i < x.size(); ++i) {
            if (!lam[i]) continue;
            TruncRing::Elt xi = R.add(R.constant(x[i]), R.variable(int(i)));
            m = R.mul(m, R.pow(xi, lam[i]));
        }
        acc = R.add(acc, m);
    }
    (void)F;
    return acc;
}

std::string laurent_str(const Fq& F, const Laurent& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << F.str(c) << "*e^" << coweight_str(lam);
    }
    return os.str();
}

}  // namespace iwahori

#include "iwahori/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iwahori {

namespace {

constexpr std::uint64_t kMaxCard = std::uint64_t(1) << 22;
constexpr std::uint64_t kAddTableCap = 1u << 12;  // full add table when q <= 4096

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::int64_t> factor(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomial arithmetic over the prime field Z/ell, used only while
// hunting for the canonical modulus.
using PPoly = std::vector<std::int64_t>;

PPoly ptrim(PPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::int64_t ell) {
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
    // reduce mod monic f
    size_t k = f.size() - 1;
    for (size_t d = c.size(); d-- > k;) {
        std::int64_t top = c[d] % ell;
        if (!top) continue;
        for (size_t j = 0; j < k; ++j) c[d - k + j] = mod_pos(c[d - k + j] - top * f[j], ell);
        c[d] = 0;
    }
    c.resize(k, 0);
    return c;
}

PPoly ppowmod_x(std::uint64_t e, const PPoly& f, std::int64_t ell) {
    // X^e mod f by square-and-multiply
    PPoly base = {0, 1}, acc = {1};
    size_t k = f.size() - 1;
    base.resize(std::max<size_t>(k, 2), 0);
    acc.resize(k, 0);
    if (k == 1) {  // X reduces immediately
        base = pmulmod({1}, {0, 1}, f, ell);
    }
    while (e) {
        if (e & 1) acc = pmulmod(acc, base, f, ell);
        base = pmulmod(base, base, f, ell);
        e >>= 1;
    }
    return acc;
}

PPoly pgcd(PPoly a, PPoly b, std::int64_t ell) {
    a = ptrim(a);
    b = ptrim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        std::int64_t lead = b.back(), li = 1;
        for (std::int64_t t = 1; t < ell; ++t)
            if (lead * t % ell == 1) {
                li = t;
                break;
            }
        PPoly bm(b);
        for (auto& c : bm) c = c * li % ell;
        PPoly r(a);
        while (r.size() >= bm.size()) {
            std::int64_t top = r.back();
            size_t off = r.size() - bm.size();
            if (top)
                for (size_t j = 0; j < bm.size(); ++j)
                    r[off + j] = mod_pos(r[off + j] - top * bm[j], ell);
            r = ptrim(r);
            if (r.empty()) break;
        }
        a = b;
        b = r;
    }
    return a;
}

bool irreducible(const PPoly& low, std::int64_t ell) {
    // low = c0..c_{k-1} of the monic candidate
    int k = int(low.size());
    PPoly f(low);
    f.push_back(1);
    if (k == 1) return true;
    // X^{ell^k} == X mod f
    std::uint64_t e = 1;
    for (int i = 0; i < k; ++i) e *= std::uint64_t(ell);
    PPoly xq = ppowmod_x(e, f, ell);
    PPoly x = {0, 1};
    x.resize(xq.size(), 0);
    if (ptrim(pmulmod({1}, xq, f, ell)) != ptrim(x)) {
        // compare xq with X directly
        PPoly d(xq);
        if (d.size() < 2) d.resize(2, 0);
        d[1] = mod_pos(d[1] - 1, ell);
        if (!ptrim(d).empty()) return false;
    }
    for (std::int64_t p : factor(k)) {
        std::uint64_t e2 = 1;
        for (int i = 0; i < k / p; ++i) e2 *= std::uint64_t(ell);
        PPoly g = ppowmod_x(e2, f, ell);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = mod_pos(g[1] - 1, ell);
        if (ptrim(pgcd(f, g, ell)).size() != 1) return false;
    }
    return true;
}

std::vector<std::int64_t> canonical_modulus(std::int64_t ell, int k) {
    if (k == 1) return {};  // F_ell itself; modulus X - 0 is never consulted
    // enumerate (c0,...,c_{k-1}) in lex order, c0 most significant
    std::vector<std::int64_t> c(k, 0);
    while (true) {
        if (c[0] != 0 && irreducible(c, ell)) return c;  // c0 = 0 => X | f, reducible
        int i = k - 1;
        while (i >= 0 && c[i] == ell - 1) c[i--] = 0;
        if (i < 0) throw FieldError("no irreducible modulus found");
        ++c[i];
    }
}

}  // namespace

Fq::Fq(std::int64_t ell, int degree) : Fq(ell, degree, canonical_modulus(ell, degree)) {}

Fq::Fq(std::int64_t ell, int degree, std::vector<std::int64_t> modulus_low)
    : ell_(ell), deg_(degree), modulus_(std::move(modulus_low)) {
    if (!is_prime(ell)) throw FieldError("ell must be prime");
    if (degree < 1) throw FieldError("degree must be positive");
    q_ = 1;
    for (int i = 0; i < degree; ++i) {
        q_ *= std::uint64_t(ell);
        if (q_ > kMaxCard) throw FieldError("field too large for table arithmetic");
    }
    if (degree == 1) modulus_.clear();
    if (degree > 1 && int(modulus_.size()) != degree) throw FieldError("bad modulus length");
    pow_ell_.resize(degree + 1);
    pow_ell_[0] = 1;
    for (int i = 1; i <= degree; ++i) pow_ell_[i] = pow_ell_[i - 1] * std::uint64_t(ell);
    for (auto& c : modulus_) c = mod_pos(c, ell);
    one_ = scalar_t(pow_ell_[deg_ - 1]);  // coefficient vector (1,0,...,0)
    build_tables();
}

std::vector<std::int64_t> Fq::coeffs(scalar_t a) const {
    std::vector<std::int64_t> c(deg_);
    std::uint64_t v = a;
    for (int i = deg_ - 1; i >= 0; --i) {  // c0 packed most significant
        c[deg_ - 1 - i] = std::int64_t(v / pow_ell_[i]);
        v %= pow_ell_[i];
    }
    return c;
}

scalar_t Fq::from_coeffs(const std::vector<std::int64_t>& c) const {
    std::uint64_t v = 0;
    for (int i = 0; i < deg_; ++i) {
        std::int64_t ci = i < int(c.size()) ? mod_pos(c[i], ell_) : 0;
        v += std::uint64_t(ci) * pow_ell_[deg_ - 1 - i];
    }
    return scalar_t(v);
}

scalar_t Fq::from_int(std::int64_t v) const {
    return from_coeffs({mod_pos(v, ell_)});
}

scalar_t Fq::add_slow(scalar_t a, scalar_t b) const {
    std::uint64_t r = 0, va = a, vb = b;
    for (int i = deg_ - 1; i >= 0; --i) {
        std::int64_t ca = std::int64_t(va / pow_ell_[i]), cb = std::int64_t(vb / pow_ell_[i]);
        va %= pow_ell_[i];
        vb %= pow_ell_[i];
        r += std::uint64_t((ca + cb) % ell_) * pow_ell_[i];
    }
    return scalar_t(r);
}

scalar_t Fq::mul_slow(scalar_t a, scalar_t b) const {
    // schoolbook product of coefficient vectors, reduced by the modulus
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<std::int64_t> prod(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i)
        if (ca[i])
            for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % ell_;
    for (int d = 2 * deg_ - 2; d >= deg_; --d) {
        std::int64_t top = prod[d];
        if (!top) continue;
        for (int j = 0; j < deg_; ++j)
            prod[d - deg_ + j] = mod_pos(prod[d - deg_ + j] - top * modulus_[j], ell_);
        prod[d] = 0;
    }
    prod.resize(deg_);
    return from_coeffs(prod);
}

void Fq::build_tables() {
    neg_table_.resize(q_);
    for (std::uint64_t a = 0; a < q_; ++a) {
        auto c = coeffs(scalar_t(a));
        for (auto& x : c) x = mod_pos(-x, ell_);
        neg_table_[a] = from_coeffs(c);
    }
    if (q_ <= kAddTableCap) {
        add_table_.resize(q_ * q_);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b)
                add_table_[a * q_ + b] = add_slow(scalar_t(a), scalar_t(b));
    }
    // find a multiplicative generator by brute force over codes
    auto fs = factor(std::int64_t(q_ - 1));
    auto is_gen = [&](scalar_t g) {
        for (auto p : fs) {
            // g^{(q-1)/p} via repeated squaring with mul_slow
            std::uint64_t e = (q_ - 1) / std::uint64_t(p);
            scalar_t acc = one_, base = g;
            while (e) {
                if (e & 1) acc = mul_slow(acc, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (acc == one_) return false;
        }
        return true;
    };
    gen_ = 0;
    for (std::uint64_t g = 1; g < q_; ++g)
        if (is_gen(scalar_t(g))) {
            gen_ = scalar_t(g);
            break;
        }
    check_internal(gen_ != 0, "Fq: no generator found");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    scalar_t cur = one_;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = std::uint32_t(i);
        cur = mul_slow(cur, gen_);
    }
    check_internal(cur == one_, "Fq: generator order wrong");
}

scalar_t Fq::pow(scalar_t a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw InternalError("Fq: 0^nonpositive");
        return 0;
    }
    std::int64_t m = std::int64_t(q_ - 1);
    std::int64_t le = mod_pos(std::int64_t(log_[a]) * mod_pos(e, m) % m, m);
    return exp_[le];
}

std::uint64_t Fq::order(scalar_t a) const {
    if (a == 0) throw InternalError("Fq: order of zero");
    std::uint64_t n = q_ - 1, d = std::gcd<std::uint64_t>(log_[a], n);
    return n / d;
}

bool Fq::is_square(scalar_t a) const {
    if (a == 0) return true;
    if (ell_ == 2) return true;
    return log_[a] % 2 == 0;
}

scalar_t Fq::sqrt(scalar_t a) const {
    if (a == 0) return 0;
    std::vector<scalar_t> roots;
    if (ell_ == 2) {
        roots.push_back(exp_[(std::uint64_t(log_[a]) * ((q_) / 2)) % (q_ - 1)]);  // a^{q/2}
    } else {
        if (log_[a] % 2 != 0) throw FieldError("sqrt: not a square");
        scalar_t r = exp_[log_[a] / 2];
        roots = {r, neg(r)};
    }
    return *std::min_element(roots.begin(), roots.end());
}

std::string Fq::str(scalar_t a) const {
    auto c = coeffs(a);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < deg_; ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

FqPoly poly_trim(FqPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(c);
}

FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return poly_trim(c);
}

scalar_t poly_eval(const Fq& F, const FqPoly& p, scalar_t x) {
    scalar_t r = 0;
    for (size_t i = p.size(); i-- > 0;) r = F.add(F.mul(r, x), p[i]);
    return r;
}

FqPoly poly_divide_root(const Fq& F, const FqPoly& p, scalar_t r) {
    check_internal(poly_eval(F, p, r) == 0, "poly_divide_root: not a root");
    FqPoly q(p.size() - 1, 0);
    scalar_t carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = F.add(p[i], F.mul(carry, r));
        q[i - 1] = carry;
    }
    return poly_trim(q);
}

std::pair<std::vector<scalar_t>, bool> poly_roots(const Fq& F, const FqPoly& p) {
    std::vector<scalar_t> roots;
    FqPoly cur = poly_trim(p);
    check_internal(!cur.empty(), "poly_roots: zero polynomial");
    bool progress = true;
    while (cur.size() > 1 && progress) {
        progress = false;
        for (std::uint64_t a = 0; a < F.card(); ++a) {
            if (poly_eval(F, cur, scalar_t(a)) == 0) {
                roots.push_back(scalar_t(a));
                cur = poly_divide_root(F, cur, scalar_t(a));
                progress = true;
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, cur.size() <= 1};
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t prime_power_base(std::int64_t q) {
    if (q < 2) return 0;
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            std::int64_t m = q;
            while (m % p == 0) m /= p;
            return m == 1 ? p : 0;
        }
    return q;  // q itself prime
}

bool banal_check(int n, std::int64_t q, std::int64_t ell) {
    if (n <= 0) throw FieldError("banal_check: n must be positive");
    if (!is_prime(ell)) throw FieldError("banal_check: ell must be prime");
    std::int64_t p = prime_power_base(q);
    if (p == 0) throw FieldError("banal_check: q must be a prime power");
    if (p == ell) throw FieldError("banal_check: q must be a power of a prime != ell");
    // ell | #GL_n(F_q) = q^{n(n-1)/2} prod (q^i - 1)  iff some factor vanishes mod ell
    std::int64_t qm = mod_pos(q, ell), pw = 1;
    for (int i = 1; i <= n; ++i) {
        pw = pw * qm % ell;
        if (mod_pos(pw - 1, ell) == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(Fq field, std::int64_t q, int n_)
    : F(std::move(field)), q_int(q), n(n_) {
    q_image = F.from_int(q);
    if (q_image == 0) throw FieldError("q vanishes in the coefficient field");
    sqrt_q = F.sqrt(q_image);
    validate();
}

void FieldSpec::validate() const {
    if (!banal_check(n, q_int, F.ell())) throw NonBanalError("ell divides |GL_n(F_q)|");
    check_internal(F.mul(sqrt_q, sqrt_q) == q_image, "FieldSpec: sqrt_q^2 != q");
    check_internal(F.order(q_image) > std::uint64_t(n), "FieldSpec: ord(q) <= n despite banality");
}

FieldSpec build_field(std::int64_t ell, std::int64_t q, int n,
                      const std::vector<std::vector<std::int64_t>>& required_roots) {
    if (!banal_check(n, q, ell))
        throw NonBanalError("ell divides |GL_n(F_q)|: ell=" + std::to_string(ell) +
                            " q=" + std::to_string(q) + " n=" + std::to_string(n));
    constexpr int kMaxDeg = 8;
    for (int k = 1; k <= kMaxDeg; ++k) {
        std::uint64_t card = 1;
        bool overflow = false;
        for (int i = 0; i < k; ++i) {
            card *= std::uint64_t(ell);
            if (card > (std::uint64_t(1) << 22)) overflow = true;
        }
        if (overflow) break;
        Fq F(ell, k);
        scalar_t qi = F.from_int(q);
        if (!F.is_square(qi)) continue;
        bool ok = true;
        for (const auto& ic : required_roots) {
            FqPoly p;
            p.reserve(ic.size());
            for (auto c : ic) p.push_back(F.from_int(c));
            p = poly_trim(p);
            if (p.empty()) throw FieldError("required polynomial is zero");
            if (!poly_roots(F, p).second) {
                ok = false;
                break;
            }
        }
        if (ok) return FieldSpec(F, q, n);
    }
    throw FieldError("no admissible extension of degree <= 8 contains the required roots");
}

}  // namespace iwahori

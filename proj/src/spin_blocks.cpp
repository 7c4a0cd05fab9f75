#include "spinblock/spin_blocks.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinblock {

// ---------------------------------------------------------------- F_{p^2}

namespace {

bool is_square_mod(long long x, int p) {
    for (long long y = 0; y < p; ++y)
        if (y * y % p == x % p) return true;
    return false;
}

}  // namespace

Fp2::Fp2(int p) : p_(p), nu_(0) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
    for (int x = 2; x < p; ++x)
        if (!is_square_mod(x, p)) {
            nu_ = x;
            break;
        }
}

long long Fp2::red(long long x) const {
    x %= p_;
    return x < 0 ? x + p_ : x;
}

Fq Fp2::from_int(long long x) const { return {red(x), 0}; }
Fq Fp2::add(Fq x, Fq y) const { return {red(x.a + y.a), red(x.b + y.b)}; }
Fq Fp2::sub(Fq x, Fq y) const { return {red(x.a - y.a), red(x.b - y.b)}; }
Fq Fp2::neg(Fq x) const { return {red(-x.a), red(-x.b)}; }
Fq Fp2::mul(Fq x, Fq y) const {
    return {red(x.a * y.a + red(x.b * y.b) * nu_), red(x.a * y.b + x.b * y.a)};
}

Fq Fp2::pow(Fq x, long long e) const {
    Fq r = from_int(1);
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Fq Fp2::inv(Fq x) const {
    if (is_zero(x)) throw std::domain_error("division by zero in F_{p^2}");
    const long long norm = red(x.a * x.a - red(x.b * x.b) * nu_);
    const long long ninv = pow(from_int(norm), p_ - 2).a;
    return {red(x.a * ninv), red(-x.b * ninv)};
}

std::optional<Fq> Fp2::sqrt(Fq x) const {
    for (long long a = 0; a < p_; ++a)
        for (long long b = 0; b < p_; ++b)
            if (mul({a, b}, {a, b}) == x) return Fq{a, b};
    return std::nullopt;
}

std::string Fp2::format(Fq x) const {
    if (x.b == 0) return std::to_string(x.a);
    return std::to_string(x.a) + "+" + std::to_string(x.b) + "x";
}

// ---------------------------------------------------------------- sparse vectors

void fq_add_term(const Fp2& f, FqVec& x, std::size_t k, Fq c) {
    if (f.is_zero(c)) return;
    auto it = x.find(k);
    if (it == x.end()) {
        x.emplace(k, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) x.erase(it);
}

FqVec fq_from_int(const Fp2& f, const AlgElement& x) {
    FqVec r;
    for (const auto& [k, c] : x) fq_add_term(f, r, k, f.from_int(c));
    return r;
}

FqVec fq_scale(const Fp2& f, const FqVec& x, Fq c) {
    FqVec r;
    for (const auto& [k, v] : x) fq_add_term(f, r, k, f.mul(v, c));
    return r;
}

FqVec fq_sum(const Fp2& f, const FqVec& x, const FqVec& y) {
    FqVec r = x;
    for (const auto& [k, v] : y) fq_add_term(f, r, k, v);
    return r;
}

FqVec fq_diff(const Fp2& f, const FqVec& x, const FqVec& y) {
    FqVec r = x;
    for (const auto& [k, v] : y) fq_add_term(f, r, k, f.neg(v));
    return r;
}

FqVec fq_multiply(const Fp2& f, const SuperAlgebra& alg, const FqVec& x, const FqVec& y) {
    FqVec r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const Fq ab = f.mul(a, b);
            for (const auto& [k, c] : alg.multiply_basis(i, j)) fq_add_term(f, r, k, f.mul(ab, f.from_int(c)));
        }
    return r;
}

FqVec fq_basis(const Fp2& f, std::size_t k) { return {{k, f.from_int(1)}}; }

// ---------------------------------------------------------------- twisted group algebra

namespace {

// Digits d_k = length of c_k for k = 2..n, stored at position k; mixed radix with k = 2 lowest.
std::vector<int> decode(std::size_t idx, int n) {
    std::vector<int> d(n + 1, 0);
    for (int k = 2; k <= n; ++k) {
        d[k] = (int)(idx % k);
        idx /= k;
    }
    return d;
}

std::size_t encode(const std::vector<int>& d, int n) {
    std::size_t idx = 0;
    for (int k = n; k >= 2; --k) idx = idx * k + d[k];
    return idx;
}

}  // namespace

TwistedGroup::TwistedGroup(int n) : n_(n) {
    if (n < 0 || n > 8) throw std::invalid_argument("twisted group rank out of range");
    std::size_t total = 1;
    for (int k = 2; k <= n; ++k) total *= k;
    words_.resize(total);
    perms_.resize(total);
    by_rank_.assign(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        const auto d = decode(i, n);
        std::vector<int> w;
        for (int k = 2; k <= n; ++k)
            for (int g = k - 1; g > k - 1 - d[k]; --g) w.push_back(g);
        Perm p = identity_perm(n);
        for (int r : w) p = compose(p, transposition(n, r));
        by_rank_[perm_rank(p)] = i;
        words_[i] = std::move(w);
        perms_[i] = std::move(p);
    }
}

std::string TwistedGroup::label(std::size_t i) const {
    const auto& w = words_.at(i);
    if (w.empty()) return "1";
    std::string s = "t[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + "]";
}

std::size_t TwistedGroup::index_of(const Perm& w) const { return by_rank_.at(perm_rank(w)); }

std::size_t TwistedGroup::generator(int r) const {
    if (r < 1 || r >= n_) throw std::invalid_argument("generator index out of range");
    return index_of(transposition(n_, r));
}

std::pair<std::size_t, int> TwistedGroup::rmul_generator(std::size_t w, int r) const {
    if (r < 1 || r >= n_) throw std::invalid_argument("generator index out of range");
    auto d = decode(w, n_);
    int sign = 1;
    for (int m = n_; m >= 2; --m) {
        const int j = m - d[m];  // c_m = s_{m-1} ... s_j
        if (r == j - 1) {
            ++d[m];
            break;
        }
        if (r == j) {
            --d[m];
            break;
        }
        // t_r passes through c_m, anticommuting with each of its letters; a braid move
        // turns it into t_{r-1} when r lies strictly inside the run.
        if ((m - j) % 2) sign = -sign;
        if (r > j) --r;
    }
    return {encode(d, n_), sign};
}

std::pair<std::size_t, int> TwistedGroup::product(std::size_t u, std::size_t v) const {
    int sign = 1;
    for (int r : words_.at(v)) {
        auto [next, s] = rmul_generator(u, r);
        u = next;
        sign *= s;
    }
    return {u, sign};
}

AlgElement TwistedGroup::multiply_basis(std::size_t i, std::size_t j) const {
    auto [k, s] = product(i, j);
    return {{k, s}};
}

FqVec tn_generator(const Fp2& f, const TwistedGroup& t, int r) { return fq_basis(f, t.generator(r)); }

FqVec tn_generator_product(const Fp2& f, const TwistedGroup& t, const FqVec& x, int r) {
    FqVec out;
    for (const auto& [w, c] : x) {
        auto [k, s] = t.rmul_generator(w, r);
        fq_add_term(f, out, k, s > 0 ? c : f.neg(c));
    }
    return out;
}

FqVec tn_multiply(const Fp2& f, const TwistedGroup& t, const FqVec& x, const FqVec& y) {
    FqVec out;
    for (const auto& [v, b] : y) {
        FqVec part = x;
        for (int r : t.word(v)) part = tn_generator_product(f, t, part, r);
        for (const auto& [k, c] : part) fq_add_term(f, out, k, f.mul(c, b));
    }
    return out;
}

FqVec jm(const Fp2& f, const TwistedGroup& t, int r) {
    if (r < 1 || r > t.rank()) throw std::invalid_argument("Jucys-Murphy index out of range");
    FqVec m;
    for (int s = 1; s < r; ++s) {
        const FqVec ts = tn_generator(f, t, s);
        FqVec conj = tn_multiply(f, t, tn_multiply(f, t, ts, m), ts);
        m = fq_sum(f, fq_scale(f, conj, f.from_int(-1)), ts);
    }
    return m;
}

FqVec jm_closed(const Fp2& f, const TwistedGroup& t, int r) {
    if (r < 1 || r > t.rank()) throw std::invalid_argument("Jucys-Murphy index out of range");
    FqVec m;
    for (int s = 1; s < r; ++s) {
        FqVec x = fq_basis(f, 0);
        for (int g = r - 1; g > s; --g) x = tn_generator_product(f, t, x, g);
        for (int g = s; g < r; ++g) x = tn_generator_product(f, t, x, g);
        m = fq_sum(f, m, fq_scale(f, x, f.from_int((r - s - 1) % 2 ? -1 : 1)));
    }
    return m;
}

// ---------------------------------------------------------------- dense linear algebra

namespace {

using Dense = std::vector<Fq>;
using Poly = std::vector<Fq>;  // coefficients, constant term first

bool dense_zero(const Fp2& f, const Dense& v) {
    return std::all_of(v.begin(), v.end(), [&](Fq x) { return f.is_zero(x); });
}

Dense to_dense(const FqVec& x, std::size_t n) {
    Dense v(n);
    for (const auto& [k, c] : x) v[k] = c;
    return v;
}

FqVec to_sparse(const Fp2& f, const Dense& v) {
    FqVec x;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!f.is_zero(v[k])) x.emplace(k, v[k]);
    return x;
}

// Left multiplication by a fixed element, stored by columns.
struct LeftMatrix {
    std::vector<std::vector<std::pair<std::size_t, Fq>>> cols;

    Dense apply(const Fp2& f, const Dense& v) const {
        Dense out(v.size());
        for (std::size_t w = 0; w < v.size(); ++w) {
            if (f.is_zero(v[w])) continue;
            for (const auto& [k, c] : cols[w]) out[k] = f.add(out[k], f.mul(c, v[w]));
        }
        return out;
    }
};

LeftMatrix left_matrix(const Fp2& f, const TwistedGroup& t, const FqVec& x) {
    LeftMatrix m;
    m.cols.resize(t.dim());
    for (std::size_t w = 0; w < t.dim(); ++w) {
        FqVec col;
        for (const auto& [u, c] : x) {
            auto [k, s] = t.product(u, w);
            fq_add_term(f, col, k, s > 0 ? c : f.neg(c));
        }
        m.cols[w].assign(col.begin(), col.end());
    }
    return m;
}

void poly_trim(const Fp2& f, Poly& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

Poly poly_mul(const Fp2& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    poly_trim(f, r);
    return r;
}

Poly poly_sub(const Fp2& f, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    poly_trim(f, a);
    return a;
}

// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> poly_divmod(const Fp2& f, Poly a, const Poly& b) {
    poly_trim(f, a);
    if (a.size() < b.size()) return {{}, a};
    const Fq lead = f.inv(b.back());
    Poly q(a.size() - b.size() + 1);
    for (std::size_t top = a.size(); top >= b.size(); --top) {
        const std::size_t shift = top - b.size();
        const Fq c = f.mul(a[top - 1], lead);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    }
    poly_trim(f, a);
    poly_trim(f, q);
    return {q, a};
}

// Returns s with s a = gcd(a, b) mod b, for coprime a, b.
Poly inverse_mod(const Fp2& f, const Poly& a, const Poly& b) {
    Poly r0 = b, r1 = poly_divmod(f, a, b).second;
    Poly s0, s1{f.from_int(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(f, r0, r1);
        Poly s = poly_sub(f, s0, poly_mul(f, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw std::logic_error("polynomials are not coprime");
    return poly_mul(f, s0, {f.inv(r0[0])});
}

// Minimal polynomial of a linear operator restricted to the cyclic span of v, monic.
Poly krylov_minpoly(const Fp2& f, const LeftMatrix& m, const Dense& v) {
    struct Row {
        Dense vec;
        std::size_t pivot;
        Poly combo;
    };
    std::vector<Row> rows;
    Dense cur = v;
    for (std::size_t k = 0;; ++k) {
        Dense x = cur;
        Poly combo(k + 1);
        combo[k] = f.from_int(1);
        for (const auto& row : rows) {
            const Fq c = x[row.pivot];
            if (f.is_zero(c)) continue;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.sub(x[i], f.mul(c, row.vec[i]));
            for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = f.sub(combo[i], f.mul(c, row.combo[i]));
        }
        std::size_t piv = 0;
        while (piv < x.size() && f.is_zero(x[piv])) ++piv;
        if (piv == x.size()) return combo;
        const Fq inv = f.inv(x[piv]);
        for (auto& e : x) e = f.mul(e, inv);
        for (auto& e : combo) e = f.mul(e, inv);
        rows.push_back({std::move(x), piv, std::move(combo)});
        cur = m.apply(f, cur);
    }
}

Dense apply_poly(const Fp2& f, const LeftMatrix& m, const Poly& a, const Dense& v) {
    Dense out(v.size());
    for (std::size_t t = a.size(); t-- > 0;) {
        out = m.apply(f, out);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.add(out[i], f.mul(a[t], v[i]));
    }
    return out;
}

// Generalized eigenspace projectors of an operator with the given minimal polynomial,
// keyed by residue i with eigenvalue i(i+1)/2.
std::vector<std::pair<int, Poly>> eigen_projectors(const Fp2& f, const Poly& minpoly, int ell) {
    Poly rest = minpoly;
    std::vector<std::pair<int, int>> mult;  // residue, multiplicity
    for (int i = 0; i <= ell; ++i) {
        const Fq lambda = f.from_int(i * (i + 1) / 2);
        const Poly lin{f.neg(lambda), f.from_int(1)};
        int k = 0;
        for (;;) {
            auto [q, r] = poly_divmod(f, rest, lin);
            if (!r.empty()) break;
            rest = q;
            ++k;
        }
        if (k) mult.push_back({i, k});
    }
    if (rest.size() != 1) throw std::runtime_error("eigenvalue outside the residue set");
    std::vector<std::pair<int, Poly>> out;
    for (const auto& [i, k] : mult) {
        Poly local{f.from_int(1)};
        const Poly lin{f.neg(f.from_int(i * (i + 1) / 2)), f.from_int(1)};
        for (int t = 0; t < k; ++t) local = poly_mul(f, local, lin);
        const Poly cofactor = poly_divmod(f, minpoly, local).first;
        const Poly s = inverse_mod(f, cofactor, local);
        out.push_back({i, poly_divmod(f, poly_mul(f, s, cofactor), minpoly).second});
    }
    return out;
}

std::size_t rank_prime_field(const Fp2& f, std::vector<std::vector<std::uint32_t>> m) {
    const std::uint32_t p = (std::uint32_t)f.p();
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::uint32_t inv = (std::uint32_t)f.inv(f.from_int(m[rank][c])).a;
        for (auto& e : m[rank]) e = e * inv % p;
        const std::uint32_t* top = m[rank].data();
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const std::uint32_t x = m[r][c];
            if (x == 0) continue;
            const std::uint32_t neg = p - x;
            std::uint32_t* row = m[r].data();
            for (std::size_t k = c; k < cols; ++k) row[k] = (row[k] + neg * top[k]) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_general(const Fp2& f, std::vector<Dense> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && f.is_zero(m[piv][c])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const Fq inv = f.inv(m[rank][c]);
        for (auto& e : m[rank]) e = f.mul(e, inv);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const Fq x = m[r][c];
            if (f.is_zero(x)) continue;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(x, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_of(const Fp2& f, const std::vector<Dense>& rows) {
    bool prime = true;
    for (const auto& r : rows)
        for (Fq x : r) prime = prime && f.in_prime_field(x);
    if (!prime) return rank_general(f, rows);
    std::vector<std::vector<std::uint32_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::uint32_t> row(r.size());
        for (std::size_t k = 0; k < r.size(); ++k) row[k] = (std::uint32_t)r[k].a;
        m.push_back(std::move(row));
    }
    return rank_prime_field(f, std::move(m));
}

FqVec jm_square(const Fp2& f, const TwistedGroup& t, int r) {
    const FqVec m = jm(f, t, r);
    return tn_multiply(f, t, m, m);
}

}  // namespace

bool fq_in_span(const Fp2& f, const std::vector<FqVec>& spanning, const FqVec& target) {
    std::size_t n = 0;
    for (const auto& v : spanning)
        if (!v.empty()) n = std::max(n, v.rbegin()->first + 1);
    if (!target.empty()) n = std::max(n, target.rbegin()->first + 1);
    std::vector<Dense> rows;
    for (const auto& v : spanning) rows.push_back(to_dense(v, n));
    const std::size_t before = rank_general(f, rows);
    rows.push_back(to_dense(target, n));
    return rank_general(f, rows) == before;
}

bool jm_squares_commute(int n, int p) {
    const Fp2 f(p);
    const TwistedGroup t(n);
    std::vector<LeftMatrix> mats;
    for (int r = 1; r <= n; ++r) mats.push_back(left_matrix(f, t, jm_square(f, t, r)));
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (std::size_t w = 0; w < t.dim(); ++w) {
                Dense e(t.dim());
                e[w] = f.from_int(1);
                if (mats[r].apply(f, mats[s].apply(f, e)) != mats[s].apply(f, mats[r].apply(f, e))) return false;
            }
    return true;
}

std::vector<std::vector<FqVec>> jm_square_powers(int n, int p) {
    const Fp2 f(p);
    const TwistedGroup t(n);
    std::vector<std::vector<FqVec>> out;
    for (int r = 1; r <= n; ++r) {
        const FqVec x = jm_square(f, t, r);
        const Poly mp = krylov_minpoly(f, left_matrix(f, t, x), to_dense(fq_basis(f, 0), t.dim()));
        std::vector<FqVec> pw{fq_basis(f, 0)};
        for (std::size_t k = 1; k + 1 < mp.size(); ++k) pw.push_back(tn_multiply(f, t, pw.back(), x));
        out.push_back(std::move(pw));
    }
    return out;
}

std::vector<WeightIdempotent> weight_idempotents(int n, int p) {
    const Fp2 f(p);
    const TwistedGroup t(n);
    const int ell = ell_of(p);
    const Dense one = to_dense(fq_basis(f, 0), t.dim());
    std::vector<LeftMatrix> mats;
    std::vector<std::vector<std::pair<int, Poly>>> proj;
    for (int r = 1; r <= n; ++r) {
        mats.push_back(left_matrix(f, t, jm_square(f, t, r)));
        proj.push_back(eigen_projectors(f, krylov_minpoly(f, mats.back(), one), ell));
    }
    // The projectors are polynomials in commuting elements, so applying them to 1 in turn
    // produces e(i) itself; zero prefixes are pruned.
    std::vector<WeightIdempotent> out;
    std::vector<int> word;
    std::function<void(int, const Dense&)> rec = [&](int r, const Dense& v) {
        if (r == n) {
            out.push_back({word, to_sparse(f, v)});
            return;
        }
        for (const auto& [i, poly] : proj[r]) {
            Dense next = apply_poly(f, mats[r], poly, v);
            if (dense_zero(f, next)) continue;
            word.push_back(i);
            rec(r + 1, next);
            word.pop_back();
        }
    };
    rec(0, one);
    return out;
}

std::vector<Superblock> superblocks(int n, int p) {
    const Fp2 f(p);
    const TwistedGroup t(n);
    const int ell = ell_of(p);
    std::map<RootVector, Superblock> by_theta;
    for (auto& w : weight_idempotents(n, p)) {
        const RootVector theta = word_content(w.word, ell);
        auto& b = by_theta[theta];
        b.theta = theta;
        b.idempotent = fq_sum(f, b.idempotent, w.element);
        b.words.push_back(std::move(w.word));
    }
    std::vector<Superblock> out;
    for (auto& [theta, b] : by_theta) {
        std::vector<Dense> rows;
        rows.reserve(t.dim());
        for (std::size_t w = 0; w < t.dim(); ++w) {
            Dense row(t.dim());
            for (const auto& [u, c] : b.idempotent) {
                auto [k, s] = t.product(u, w);
                row[k] = f.add(row[k], s > 0 ? c : f.neg(c));
            }
            rows.push_back(std::move(row));
        }
        b.dimension = (long long)rank_of(f, rows);
        out.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------- twisted wreath superproduct

namespace {

int parity(const SuperAlgebra& a, std::size_t i) { return a.bidegree(i).parity; }

// Expansion of 1 x ... x b x ... x 1 with b in slot r (0-based) and units expanded.
TensorTerms slot_terms(const SuperAlgebra& a, int d, int r, const AlgElement& b) {
    TensorTerms acc{{{}, 1}};
    const AlgElement u = a.unit();
    for (int k = 0; k < d; ++k) {
        const AlgElement& factor = k == r ? b : u;
        TensorTerms next;
        for (const auto& [t, c] : acc)
            for (const auto& [x, e] : factor) {
                auto s = t;
                s.push_back(x);
                next[s] += c * e;
            }
        acc.swap(next);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

}  // namespace

TwistedWreathAlgebra::TwistedWreathAlgebra(AlgebraPtr a, int d) : a_(std::move(a)), d_(d), group_(d), tensors_(1) {
    for (int k = 0; k < d_; ++k) tensors_ *= a_->dim();
}

std::size_t TwistedWreathAlgebra::index(const std::vector<std::size_t>& tensor, std::size_t w) const {
    std::size_t t = 0;
    for (std::size_t b : tensor) t = t * a_->dim() + b;
    return t * group_.dim() + w;
}

std::pair<std::vector<std::size_t>, std::size_t> TwistedWreathAlgebra::split(std::size_t k) const {
    const std::size_t w = k % group_.dim();
    std::size_t t = k / group_.dim();
    std::vector<std::size_t> tensor(d_);
    for (int i = d_ - 1; i >= 0; --i) {
        tensor[i] = t % a_->dim();
        t /= a_->dim();
    }
    return {tensor, w};
}

std::string TwistedWreathAlgebra::label(std::size_t i) const {
    auto [t, w] = split(i);
    std::string s;
    for (int k = 0; k < d_; ++k) s += (k ? "|" : "") + a_->label(t[k]);
    return s + ";" + group_.label(w);
}

Bidegree TwistedWreathAlgebra::bidegree(std::size_t i) const {
    auto [t, w] = split(i);
    Bidegree b = group_.bidegree(w);
    for (std::size_t x : t) {
        const Bidegree e = a_->bidegree(x);
        b.degree += e.degree;
        b.parity = (b.parity + e.parity) % 2;
    }
    return b;
}

AlgElement TwistedWreathAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
    auto [x, u] = split(i);
    auto [y, v] = split(j);
    // t_u y = sign (u.y) t_u, moving y left through the letters of t_u from the right.
    long long sign = 1;
    const auto& word = group_.word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int r = *it;
        int outside = 0;
        for (int k = 0; k < d_; ++k)
            if (k != r - 1 && k != r) outside += parity(*a_, y[k]);
        if (outside % 2) sign = -sign;
        auto [ks, moved] = act_on_tensor(*a_, transposition(d_, r), y);
        sign *= ks;
        y = std::move(moved);
    }
    auto [uv, gs] = group_.product(u, v);
    AlgElement r;
    for (const auto& [t, c] : tensor_power_product(*a_, x, y)) add_term(r, index(t, uv), sign * gs * c);
    return r;
}

AlgElement TwistedWreathAlgebra::unit() const {
    AlgElement r;
    const TensorTerms terms = d_ ? slot_terms(*a_, d_, 0, a_->unit()) : TensorTerms{{{}, 1}};
    for (const auto& [t, c] : terms) add_term(r, index(t, 0), c);
    return r;
}

std::shared_ptr<TableAlgebra> ground_field() {
    auto f = std::make_shared<TableAlgebra>(std::vector<std::string>{"1"}, std::vector<Bidegree>{{0, 0}});
    f->set_product(0, 0, {{0, 1}});
    f->set_unit({{0, 1}});
    return f;
}

std::shared_ptr<TwistedWreathAlgebra> twisted_wreath(AlgebraPtr a, int d) {
    if (d < 0 || d > 7) throw std::invalid_argument("wreath rank out of range");
    return std::make_shared<TwistedWreathAlgebra>(std::move(a), d);
}

// ---------------------------------------------------------------- Sergeev isomorphism

namespace {

// Both sides of (A x C_1) wr S_n = (A wr T_n) x C_n with the generator images in each direction.
class SergeevMaps {
public:
    SergeevMaps(AlgebraPtr a, int n, int p)
        : f_(p), n_(n), a_(std::move(a)), b_(std::make_shared<TensorAlgebra>(a_, clifford(1))),
          lhs_(wreath(b_, n)), tw_(twisted_wreath(a_, n)), rhs_(std::make_shared<TensorAlgebra>(tw_, clifford(n))) {
        const auto root = f_.sqrt(f_.from_int(-2));
        if (!root) throw std::logic_error("no square root of -2");
        scale_ = f_.inv(*root);
    }

    const Fp2& field() const { return f_; }
    const WreathAlgebra& lhs() const { return *lhs_; }
    const TensorAlgebra& rhs() const { return *rhs_; }
    const TwistedWreathAlgebra& twisted() const { return *tw_; }
    const SuperAlgebra& base() const { return *a_; }
    const SuperAlgebra& doubled() const { return *b_; }
    int rank() const { return n_; }

    FqVec lmul(const FqVec& x, const FqVec& y) const { return fq_multiply(f_, *lhs_, x, y); }
    FqVec rmul(const FqVec& x, const FqVec& y) const { return fq_multiply(f_, *rhs_, x, y); }

    // Generators of the left side: slot elements of A x C_1 and the transpositions s_r (1-based).
    FqVec lhs_slot(int r, const AlgElement& b) const {
        FqVec out;
        const Perm id = identity_perm(n_);
        for (const auto& [t, c] : slot_terms(*b_, n_, r - 1, b)) fq_add_term(f_, out, lhs_->index(t, id), f_.from_int(c));
        return out;
    }
    FqVec lhs_s(int r) const {
        FqVec out;
        const Perm s = transposition(n_, r);
        for (const auto& [t, c] : slot_terms(*b_, n_, 0, b_->unit())) fq_add_term(f_, out, lhs_->index(t, s), f_.from_int(c));
        return out;
    }
    FqVec lhs_c(int r) const { return lhs_slot(r, b_element(a_->unit(), 1)); }

    // Generators of the right side: slot elements of A, t_r and c_r.
    FqVec rhs_slot(int r, const AlgElement& a) const { return rhs_from_twisted(slot_terms(*a_, n_, r - 1, a), 0, 0); }
    FqVec rhs_t(int r) const {
        return rhs_from_twisted(slot_terms(*a_, n_, 0, a_->unit()), tw_->group().generator(r), 0);
    }
    FqVec rhs_c(int r) const {
        return rhs_from_twisted(slot_terms(*a_, n_, 0, a_->unit()), 0, std::size_t(1) << (r - 1));
    }

    AlgElement b_element(const AlgElement& a, std::size_t x) const {
        AlgElement out;
        for (const auto& [k, c] : a) add_term(out, static_cast<const TensorAlgebra&>(*b_).index(k, x), c);
        return out;
    }

    // Images of the left generators.
    FqVec phi_slot(int r, std::size_t b) const {
        auto [a, x] = static_cast<const TensorAlgebra&>(*b_).split(b);
        FqVec out = rhs_slot(r, {{a, 1}});
        if (x) out = rmul(out, rhs_c(r));
        return (r * parity(*a_, a)) % 2 ? fq_scale(f_, out, f_.from_int(-1)) : out;
    }
    FqVec phi_s(int r) const {
        return fq_scale(f_, rmul(rhs_t(r), fq_diff(f_, rhs_c(r), rhs_c(r + 1))), scale_);
    }
    // Images of the right generators.
    FqVec psi_slot(int r, std::size_t a) const {
        FqVec out = lhs_slot(r, b_element({{a, 1}}, 0));
        return (r * parity(*a_, a)) % 2 ? fq_scale(f_, out, f_.from_int(-1)) : out;
    }
    FqVec psi_c(int r) const { return lhs_c(r); }
    FqVec psi_t(int r) const {
        return fq_scale(f_, lmul(lhs_s(r), fq_diff(f_, lhs_c(r), lhs_c(r + 1))), f_.neg(scale_));
    }

    // Linear extensions through products of generator images on each basis element.
    FqVec phi(const FqVec& x) const {
        FqVec out;
        for (const auto& [k, c] : x) out = fq_sum(f_, out, fq_scale(f_, phi_basis(k), c));
        return out;
    }
    FqVec psi(const FqVec& x) const {
        FqVec out;
        for (const auto& [k, c] : x) out = fq_sum(f_, out, fq_scale(f_, psi_basis(k), c));
        return out;
    }

private:
    FqVec rhs_from_twisted(const TensorTerms& terms, std::size_t w, std::size_t cliff) const {
        FqVec out;
        for (const auto& [t, c] : terms) fq_add_term(f_, out, rhs_->index(tw_->index(t, w), cliff), f_.from_int(c));
        return out;
    }

    const FqVec& phi_basis(std::size_t k) const {
        auto it = phi_cache_.find(k);
        if (it != phi_cache_.end()) return it->second;
        auto [tensor, w] = lhs_->split(k);
        FqVec x = fq_from_int(f_, rhs_->unit());
        for (int r = 1; r <= n_; ++r) x = rmul(x, phi_slot(r, tensor[r - 1]));
        for (int g : tw_->group().word(tw_->group().index_of(w))) x = rmul(x, phi_s(g));
        return phi_cache_.emplace(k, std::move(x)).first->second;
    }

    const FqVec& psi_basis(std::size_t k) const {
        auto it = psi_cache_.find(k);
        if (it != psi_cache_.end()) return it->second;
        auto [i, cliff] = rhs_->split(k);
        auto [tensor, w] = tw_->split(i);
        FqVec x = fq_from_int(f_, lhs_->unit());
        for (int r = 1; r <= n_; ++r) x = lmul(x, psi_slot(r, tensor[r - 1]));
        for (int g : tw_->group().word(w)) x = lmul(x, psi_t(g));
        for (int r = 1; r <= n_; ++r)
            if (cliff >> (r - 1) & 1) x = lmul(x, psi_c(r));
        return psi_cache_.emplace(k, std::move(x)).first->second;
    }

    Fp2 f_;
    int n_;
    AlgebraPtr a_;
    AlgebraPtr b_;
    std::shared_ptr<WreathAlgebra> lhs_;
    std::shared_ptr<TwistedWreathAlgebra> tw_;
    std::shared_ptr<TensorAlgebra> rhs_;
    Fq scale_;
    mutable std::map<std::size_t, FqVec> phi_cache_, psi_cache_;
};

FqVec signed_vec(const Fp2& f, const FqVec& x, bool negate) { return negate ? fq_scale(f, x, f.from_int(-1)) : x; }

FqVec combine(const Fp2& f, const AlgElement& coeffs, const std::function<FqVec(std::size_t)>& gen) {
    FqVec out;
    for (const auto& [k, c] : coeffs) out = fq_sum(f, out, fq_scale(f, gen(k), f.from_int(c)));
    return out;
}

int swap_image(int r, int k) { return k == r ? r + 1 : k == r + 1 ? r : k; }

// Defining relations of a wreath product over a superalgebra B, checked on images of its generators.
// slot(r, b) is the image of b in slot r; perm(r) is the image of the r-th Coxeter generator.
// With twisted = true the Coxeter generators are odd and the twisted relations are used.
bool wreath_relations(const Fp2& f, const SuperAlgebra& target, const SuperAlgebra& b, int n,
                      const std::function<FqVec(int, std::size_t)>& slot, const std::function<FqVec(int)>& perm,
                      bool twisted) {
    auto mul = [&](const FqVec& x, const FqVec& y) { return fq_multiply(f, target, x, y); };
    const FqVec one = fq_from_int(f, target.unit());
    for (int r = 1; r <= n; ++r) {
        if (combine(f, b.unit(), [&](std::size_t k) { return slot(r, k); }) != one) return false;
        for (std::size_t x = 0; x < b.dim(); ++x)
            for (std::size_t y = 0; y < b.dim(); ++y) {
                const FqVec prod = combine(f, b.multiply_basis(x, y), [&](std::size_t k) { return slot(r, k); });
                if (mul(slot(r, x), slot(r, y)) != prod) return false;
                for (int k = r + 1; k <= n; ++k) {
                    const bool neg = parity(b, x) && parity(b, y);
                    if (mul(slot(r, x), slot(k, y)) != signed_vec(f, mul(slot(k, y), slot(r, x)), neg)) return false;
                }
            }
    }
    for (int r = 1; r < n; ++r) {
        const FqVec s = perm(r);
        if (mul(s, s) != one) return false;
        for (int q = r + 2; q < n; ++q)
            if (mul(s, perm(q)) != signed_vec(f, mul(perm(q), s), twisted)) return false;
        if (r + 1 < n) {
            const FqVec s2 = perm(r + 1);
            if (twisted) {
                const FqVec st = mul(s, s2);
                if (mul(mul(st, st), st) != one) return false;
            } else if (mul(mul(s, s2), s) != mul(mul(s2, s), s2)) {
                return false;
            }
        }
        for (int k = 1; k <= n; ++k)
            for (std::size_t x = 0; x < b.dim(); ++x) {
                const bool neg = twisted && k != r && k != r + 1 && parity(b, x);
                if (mul(s, slot(k, x)) != signed_vec(f, mul(slot(swap_image(r, k), x), s), neg)) return false;
            }
    }
    return true;
}

}  // namespace

SergeevReport sergeev_check(AlgebraPtr a, int n, int p) {
    if (n < 1 || n > 5) throw std::invalid_argument("Sergeev check needs 1 <= n <= 5");
    const SergeevMaps m(std::move(a), n, p);
    const Fp2& f = m.field();
    SergeevReport rep;
    rep.dims_agree = m.lhs().dim() == m.rhs().dim();

    // Left relations on the images in (A wr T_n) x C_n.
    rep.forward_relations =
        wreath_relations(f, m.rhs(), m.doubled(), n, [&](int r, std::size_t b) { return m.phi_slot(r, b); },
                         [&](int r) { return m.phi_s(r); }, false);

    // Right relations on the images in (A x C_1) wr S_n: the twisted wreath part, the Clifford
    // part and supercommutation between them.
    bool back = wreath_relations(f, m.lhs(), m.base(), n, [&](int r, std::size_t x) { return m.psi_slot(r, x); },
                                 [&](int r) { return m.psi_t(r); }, true);
    auto lmul = [&](const FqVec& x, const FqVec& y) { return m.lmul(x, y); };
    const FqVec one = fq_from_int(f, m.lhs().unit());
    for (int r = 1; r <= n && back; ++r) {
        const FqVec c = m.psi_c(r);
        if (lmul(c, c) != one) back = false;
        for (int s = r + 1; s <= n; ++s)
            if (lmul(c, m.psi_c(s)) != fq_scale(f, lmul(m.psi_c(s), c), f.from_int(-1))) back = false;
        for (int k = 1; k <= n; ++k)
            for (std::size_t x = 0; x < m.base().dim(); ++x) {
                const FqVec h = m.psi_slot(k, x);
                if (lmul(c, h) != signed_vec(f, lmul(h, c), parity(m.base(), x))) back = false;
            }
        for (int s = 1; s < n; ++s)
            if (lmul(c, m.psi_t(s)) != fq_scale(f, lmul(m.psi_t(s), c), f.from_int(-1))) back = false;
    }
    rep.backward_relations = back;

    bool gens = true;
    for (int r = 1; r <= n; ++r) {
        for (std::size_t b = 0; b < m.doubled().dim(); ++b)
            if (m.psi(m.phi_slot(r, b)) != m.lhs_slot(r, {{b, 1}})) gens = false;
        for (std::size_t x = 0; x < m.base().dim(); ++x)
            if (m.phi(m.psi_slot(r, x)) != m.rhs_slot(r, {{x, 1}})) gens = false;
        if (m.phi(m.psi_c(r)) != m.rhs_c(r)) gens = false;
        if (r < n) {
            if (m.psi(m.phi_s(r)) != m.lhs_s(r)) gens = false;
            if (m.phi(m.psi_t(r)) != m.rhs_t(r)) gens = false;
        }
    }
    rep.generators_round_trip = gens;

    rep.basis_round_trip = true;
    if (m.lhs().dim() <= 400) {
        rep.basis_checked = true;
        for (std::size_t k = 0; k < m.lhs().dim() && rep.basis_round_trip; ++k) {
            if (m.psi(m.phi(fq_basis(f, k))) != fq_basis(f, k)) rep.basis_round_trip = false;
            if (m.phi(m.psi(fq_basis(f, k))) != fq_basis(f, k)) rep.basis_round_trip = false;
        }
    }
    return rep;
}

bool sergeev_iso_check(int n, int p) { return sergeev_check(ground_field(), n, p).ok(); }

bool levelone_jm_check(int n, int p) {
    if (n < 1 || n > 5) throw std::invalid_argument("level one check needs 1 <= n <= 5");
    const SergeevMaps m(ground_field(), n, p);
    const Fp2& f = m.field();
    const TwistedGroup& t = m.twisted().group();
    FqVec x;  // phi(x_1) = 0
    for (int i = 1; i <= n; ++i) {
        if (i > 1) {
            const FqVec s = m.lhs_s(i - 1);
            const FqVec cc = m.lmul(m.lhs_c(i - 1), m.lhs_c(i));
            x = fq_sum(f, fq_sum(f, m.lmul(m.lmul(s, x), s), s), m.lmul(cc, s));
        }
        const FqVec image = m.phi(m.lmul(x, x));
        const FqVec mi = jm(f, t, i);
        FqVec want;
        for (const auto& [w, c] : tn_multiply(f, t, mi, mi))
            fq_add_term(f, want, m.rhs().index(m.twisted().index(std::vector<std::size_t>(n, 0), w), 0),
                        f.mul(c, f.from_int(2)));
        if (image != want) return false;
    }
    return true;
}

}  // namespace spinblock

#include "spinblock/super_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spinblock {

namespace {

int parity_of(const SuperAlgebra& alg, std::size_t i) { return alg.bidegree(i).parity; }

long long checked_factorial(int d) {
    if (d < 0 || d > 12) throw std::out_of_range("rank out of range");
    long long f = 1;
    for (int k = 2; k <= d; ++k) f *= k;
    return f;
}

}  // namespace

std::optional<std::size_t> find_label(const SuperAlgebra& alg, const std::string& label) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (alg.label(i) == label) return i;
    return std::nullopt;
}

std::size_t index_of(const SuperAlgebra& alg, const std::string& label) {
    auto i = find_label(alg, label);
    if (!i) throw std::invalid_argument("unknown basis label " + label);
    return *i;
}

std::string format_element(const SuperAlgebra& alg, const AlgElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << alg.label(k);
    }
    return os.str();
}

LaurentPoly graded_dimension(const SuperAlgebra& alg) {
    LaurentPoly r;
    for (std::size_t i = 0; i < alg.dim(); ++i) r += LaurentPoly::q(alg.bidegree(i).degree);
    return r;
}

// ---------------------------------------------------------------- TableAlgebra

TableAlgebra::TableAlgebra(std::vector<std::string> labels, std::vector<Bidegree> bidegrees)
    : labels_(std::move(labels)), bidegrees_(std::move(bidegrees)) {
    if (labels_.size() != bidegrees_.size()) throw std::invalid_argument("labels and bidegrees differ in length");
    table_.assign(labels_.size() * labels_.size(), AlgElement{});
}

void TableAlgebra::set_product(std::size_t i, std::size_t j, AlgElement value) {
    table_.at(i * dim() + j) = std::move(value);
}

// ---------------------------------------------------------------- TensorAlgebra

TensorAlgebra::TensorAlgebra(AlgebraPtr a, AlgebraPtr b) : a_(std::move(a)), b_(std::move(b)) {}

std::string TensorAlgebra::label(std::size_t i) const {
    auto [x, y] = split(i);
    return a_->label(x) + "|" + b_->label(y);
}

Bidegree TensorAlgebra::bidegree(std::size_t i) const {
    auto [x, y] = split(i);
    const Bidegree p = a_->bidegree(x), q = b_->bidegree(y);
    return {p.degree + q.degree, (p.parity + q.parity) % 2};
}

AlgElement TensorAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
    auto [x, y] = split(i);
    auto [x2, y2] = split(j);
    const long long sign = (parity_of(*b_, y) && parity_of(*a_, x2)) ? -1 : 1;
    AlgElement r;
    const AlgElement left = a_->multiply_basis(x, x2), right = b_->multiply_basis(y, y2);
    for (const auto& [k, c] : left)
        for (const auto& [l, e] : right) add_term(r, index(k, l), sign * c * e);
    return r;
}

AlgElement TensorAlgebra::unit() const {
    AlgElement r;
    for (const auto& [k, c] : a_->unit())
        for (const auto& [l, e] : b_->unit()) add_term(r, index(k, l), c * e);
    return r;
}

// ---------------------------------------------------------------- permutations

Perm identity_perm(int d) {
    Perm w(d);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutations of different size");
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& w) {
    Perm r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[w[i]] = (int)i;
    return r;
}

Perm transposition(int d, int r) {
    if (r < 1 || r >= d) throw std::invalid_argument("transposition index out of range");
    Perm w = identity_perm(d);
    std::swap(w[r - 1], w[r]);
    return w;
}

std::size_t perm_rank(const Perm& w) {
    const int d = (int)w.size();
    std::size_t rank = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j) smaller += w[j] < w[i];
        rank = rank * (d - i) + smaller;
    }
    return rank;
}

Perm perm_unrank(std::size_t rank, int d) {
    std::vector<int> digits(d);
    for (int i = d - 1; i >= 0; --i) {
        digits[i] = (int)(rank % (d - i));
        rank /= (d - i);
    }
    std::vector<int> pool = identity_perm(d);
    Perm w(d);
    for (int i = 0; i < d; ++i) {
        w[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return w;
}

std::vector<Perm> all_perms(int d) {
    std::vector<Perm> out;
    Perm w = identity_perm(d);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int perm_sign(const Perm& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    return inv % 2 ? -1 : 1;
}

int koszul_sign(const Perm& w, const std::vector<int>& parities) {
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) s += parities[i] * parities[j];
    return s % 2 ? -1 : 1;
}

std::pair<int, std::vector<std::size_t>> act_on_tensor(const SuperAlgebra& alg, const Perm& w,
                                                       const std::vector<std::size_t>& tensor) {
    std::vector<int> par(tensor.size());
    std::vector<std::size_t> out(tensor.size());
    for (std::size_t i = 0; i < tensor.size(); ++i) {
        par[i] = parity_of(alg, tensor[i]);
        out[w[i]] = tensor[i];
    }
    return {koszul_sign(w, par), out};
}

TensorTerms tensor_power_product(const SuperAlgebra& alg, const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& y) {
    const std::size_t d = x.size();
    // moving y_k left past x_{k+1},...,x_d
    int s = 0;
    for (std::size_t k = 0; k < d; ++k)
        if (parity_of(alg, y[k]))
            for (std::size_t m = k + 1; m < d; ++m) s += parity_of(alg, x[m]);
    TensorTerms acc{{{}, s % 2 ? -1 : 1}};
    for (std::size_t k = 0; k < d; ++k) {
        const AlgElement f = alg.multiply_basis(x[k], y[k]);
        if (f.empty()) return {};
        TensorTerms next;
        for (const auto& [t, c] : acc)
            for (const auto& [b, e] : f) {
                auto u = t;
                u.push_back(b);
                next[u] += c * e;
            }
        acc.swap(next);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

// ---------------------------------------------------------------- WreathAlgebra

WreathAlgebra::WreathAlgebra(AlgebraPtr a, int d) : a_(std::move(a)), d_(d), perms_(checked_factorial(d)) {
    if (d < 0) throw std::invalid_argument("negative rank");
}

std::size_t WreathAlgebra::dim() const {
    std::size_t n = perms_;
    for (int k = 0; k < d_; ++k) n *= a_->dim();
    return n;
}

std::size_t WreathAlgebra::index(const std::vector<std::size_t>& tensor, const Perm& w) const {
    std::size_t t = 0;
    for (std::size_t b : tensor) t = t * a_->dim() + b;
    return t * perms_ + perm_rank(w);
}

std::pair<std::vector<std::size_t>, Perm> WreathAlgebra::split(std::size_t k) const {
    const Perm w = perm_unrank(k % perms_, d_);
    std::size_t t = k / perms_;
    std::vector<std::size_t> tensor(d_);
    for (int i = d_ - 1; i >= 0; --i) {
        tensor[i] = t % a_->dim();
        t /= a_->dim();
    }
    return {tensor, w};
}

std::string WreathAlgebra::label(std::size_t i) const {
    auto [t, w] = split(i);
    std::string s;
    for (int k = 0; k < d_; ++k) s += (k ? "|" : "") + a_->label(t[k]);
    s += ";";
    for (int x : w) s += std::to_string(x + 1) + (d_ > 9 ? "," : "");
    return s;
}

Bidegree WreathAlgebra::bidegree(std::size_t i) const {
    auto [t, w] = split(i);
    Bidegree b;
    for (std::size_t x : t) {
        const Bidegree e = a_->bidegree(x);
        b.degree += e.degree;
        b.parity = (b.parity + e.parity) % 2;
    }
    return b;
}

AlgElement WreathAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
    auto [x, w] = split(i);
    auto [y, v] = split(j);
    auto [sign, moved] = act_on_tensor(*a_, w, y);
    const Perm wv = compose(w, v);
    AlgElement r;
    for (const auto& [t, c] : tensor_power_product(*a_, x, moved)) add_term(r, index(t, wv), sign * c);
    return r;
}

AlgElement WreathAlgebra::unit() const {
    TensorTerms acc{{{}, 1}};
    const AlgElement u = a_->unit();
    for (int k = 0; k < d_; ++k) {
        TensorTerms next;
        for (const auto& [t, c] : acc)
            for (const auto& [b, e] : u) {
                auto s = t;
                s.push_back(b);
                next[s] += c * e;
            }
        acc.swap(next);
    }
    AlgElement r;
    const Perm id = identity_perm(d_);
    for (const auto& [t, c] : acc) add_term(r, index(t, id), c);
    return r;
}

// ---------------------------------------------------------------- A_l and B_l

namespace {

enum class Kind { Idempotent, Cycle, Arrow, Loop };

struct PathInfo {
    Kind kind;
    int left, right;
};

// Builds a quiver algebra in which nonzero length two paths are cycles at a vertex,
// all equal to the cycle element at that vertex.
std::shared_ptr<TableAlgebra> build_radical_square(const std::vector<std::string>& labels,
                                                   const std::vector<Bidegree>& bidegrees,
                                                   const std::vector<PathInfo>& info, int vertices) {
    auto alg = std::make_shared<TableAlgebra>(labels, bidegrees);
    std::vector<std::size_t> idem(vertices), cycle(vertices);
    for (std::size_t k = 0; k < info.size(); ++k) {
        if (info[k].kind == Kind::Idempotent) idem[info[k].left] = k;
        if (info[k].kind == Kind::Cycle) cycle[info[k].left] = k;
    }
    for (std::size_t i = 0; i < info.size(); ++i)
        for (std::size_t j = 0; j < info.size(); ++j) {
            const PathInfo &x = info[i], &y = info[j];
            if (x.right != y.left) continue;
            AlgElement r;
            if (x.kind == Kind::Idempotent) r[j] = 1;
            else if (y.kind == Kind::Idempotent) r[i] = 1;
            else if ((x.kind == Kind::Arrow || x.kind == Kind::Loop) && (y.kind == Kind::Arrow || y.kind == Kind::Loop) &&
                     x.left == y.right)
                r[cycle[x.left]] = 1;
            alg->set_product(i, j, r);
        }
    AlgElement unit;
    for (int v = 0; v < vertices; ++v) unit[idem[v]] = 1;
    alg->set_unit(unit);
    return alg;
}

std::string pair_label(const std::string& head, const std::string& a, const std::string& b) {
    return head + a + "," + b;
}

}  // namespace

std::shared_ptr<TableAlgebra> build_A(int ell) {
    if (ell < 1) throw std::invalid_argument("l must be positive");
    std::vector<std::string> labels;
    std::vector<Bidegree> deg;
    std::vector<PathInfo> info;
    for (int j = 0; j < ell; ++j) {
        labels.push_back("e" + std::to_string(j));
        deg.push_back({0, 0});
        info.push_back({Kind::Idempotent, j, j});
    }
    for (int j = 0; j < ell; ++j) {
        labels.push_back("c" + std::to_string(j));
        deg.push_back({4, 0});
        info.push_back({Kind::Cycle, j, j});
    }
    for (int k = 0; k + 1 < ell; ++k) {
        labels.push_back(pair_label("a", std::to_string(k), std::to_string(k + 1)));
        deg.push_back({0, 0});
        info.push_back({Kind::Arrow, k, k + 1});
        labels.push_back(pair_label("a", std::to_string(k + 1), std::to_string(k)));
        deg.push_back({4, 0});
        info.push_back({Kind::Arrow, k + 1, k});
    }
    labels.push_back("u");
    deg.push_back({2, 1});
    info.push_back({Kind::Loop, 0, 0});
    return build_radical_square(labels, deg, info, ell);
}

std::shared_ptr<TableAlgebra> build_B(int ell) {
    if (ell < 1) throw std::invalid_argument("l must be positive");
    // vertex j is j, vertex j' is l + j
    auto name = [&](int v) { return v < ell ? std::to_string(v) : std::to_string(v - ell) + "'"; };
    std::vector<std::string> labels;
    std::vector<Bidegree> deg;
    std::vector<PathInfo> info;
    for (int v = 0; v < 2 * ell; ++v) {
        labels.push_back("f" + name(v));
        deg.push_back({0, 0});
        info.push_back({Kind::Idempotent, v, v});
    }
    for (int v = 0; v < 2 * ell; ++v) {
        labels.push_back("w" + name(v));
        deg.push_back({4, 0});
        info.push_back({Kind::Cycle, v, v});
    }
    for (int side = 0; side < 2; ++side)
        for (int k = 0; k + 1 < ell; ++k) {
            const int a = side * ell + k, b = side * ell + k + 1;
            labels.push_back(pair_label("b", name(a), name(b)));
            deg.push_back({0, 0});
            info.push_back({Kind::Arrow, a, b});
            labels.push_back(pair_label("b", name(b), name(a)));
            deg.push_back({4, 0});
            info.push_back({Kind::Arrow, b, a});
        }
    labels.push_back("v");
    deg.push_back({2, 0});
    info.push_back({Kind::Arrow, ell, 0});
    labels.push_back("v'");
    deg.push_back({2, 0});
    info.push_back({Kind::Arrow, 0, ell});
    return build_radical_square(labels, deg, info, 2 * ell);
}

std::vector<std::size_t> b_involution(const SuperAlgebra& b, int ell) {
    auto swap_primes = [](const std::string& s) {
        std::string out;
        // toggle a prime after every vertex number
        for (std::size_t i = 0; i < s.size(); ++i) {
            out += s[i];
            if (std::isdigit((unsigned char)s[i]) && (i + 1 == s.size() || !std::isdigit((unsigned char)s[i + 1]))) {
                if (i + 1 < s.size() && s[i + 1] == '\'') ++i;
                else out += '\'';
            }
        }
        return out;
    };
    std::vector<std::size_t> perm(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const std::string l = b.label(i);
        const std::string target = l == "v" ? "v'" : l == "v'" ? "v" : swap_primes(l);
        perm[i] = index_of(b, target);
    }
    (void)ell;
    return perm;
}

std::shared_ptr<TableAlgebra> clifford(int n) {
    if (n < 0 || n > 12) throw std::invalid_argument("Clifford rank out of range");
    const std::size_t size = std::size_t(1) << n;
    std::vector<std::string> labels;
    std::vector<Bidegree> deg;
    for (std::size_t s = 0; s < size; ++s) {
        std::string l;
        for (int k = 0; k < n; ++k)
            if (s >> k & 1) l += "c" + std::to_string(k + 1);
        labels.push_back(l.empty() ? "1" : l);
        deg.push_back({0, __builtin_popcountll(s) % 2});
    }
    auto alg = std::make_shared<TableAlgebra>(labels, deg);
    for (std::size_t s = 0; s < size; ++s)
        for (std::size_t t = 0; t < size; ++t) {
            int swaps = 0;
            for (int k = 0; k < n; ++k)
                if (t >> k & 1) swaps += __builtin_popcountll(s >> (k + 1));
            alg->set_product(s, t, {{s ^ t, swaps % 2 ? -1 : 1}});
        }
    alg->set_unit({{0, 1}});
    return alg;
}

std::shared_ptr<TableAlgebra> matrix_super(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("matrix size out of range");
    const int N = m + n;
    std::vector<std::string> labels;
    std::vector<Bidegree> deg;
    for (int r = 1; r <= N; ++r)
        for (int s = 1; s <= N; ++s) {
            labels.push_back(pair_label("E", std::to_string(r), std::to_string(s)));
            deg.push_back({0, (r > m) != (s > m) ? 1 : 0});
        }
    auto alg = std::make_shared<TableAlgebra>(labels, deg);
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t)
                for (int u = 0; u < N; ++u)
                    if (s == t) alg->set_product(r * N + s, t * N + u, {{(std::size_t)(r * N + u), 1}});
    AlgElement unit;
    for (int r = 0; r < N; ++r) unit[r * N + r] = 1;
    alg->set_unit(unit);
    return alg;
}

AlgebraPtr tensor(AlgebraPtr a, AlgebraPtr b) { return std::make_shared<TensorAlgebra>(std::move(a), std::move(b)); }

std::shared_ptr<WreathAlgebra> wreath(AlgebraPtr a, int d) { return std::make_shared<WreathAlgebra>(std::move(a), d); }

// ---------------------------------------------------------------- checks

namespace {

bool associative_triple(const SuperAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
    const AlgElement x{{i, 1}}, y{{j, 1}}, z{{k, 1}};
    return multiply(alg, multiply(alg, x, y), z) == multiply(alg, x, multiply(alg, y, z));
}

}  // namespace

bool associative_on_basis(const SuperAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const AlgElement xy = alg.multiply_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const AlgElement z{{k, 1}};
                if (multiply(alg, xy, z) != multiply(alg, AlgElement{{i, 1}}, alg.multiply_basis(j, k))) return false;
            }
        }
    return true;
}

bool associative_on_samples(const SuperAlgebra& alg, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s)
        if (!associative_triple(alg, rng() % alg.dim(), rng() % alg.dim(), rng() % alg.dim())) return false;
    return true;
}

bool unit_laws(const SuperAlgebra& alg) {
    const AlgElement u = alg.unit();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const AlgElement x{{i, 1}};
        if (multiply(alg, u, x) != x || multiply(alg, x, u) != x) return false;
    }
    return true;
}

bool bidegree_additive(const SuperAlgebra& alg) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const Bidegree a = alg.bidegree(i), b = alg.bidegree(j);
            for (const auto& [k, c] : alg.multiply_basis(i, j)) {
                const Bidegree e = alg.bidegree(k);
                if (e.degree != a.degree + b.degree || e.parity != (a.parity + b.parity) % 2) return false;
            }
        }
    return true;
}

std::vector<long long> zigzag_trace(const SuperAlgebra& a, int ell) {
    std::vector<long long> tr(a.dim(), 0);
    for (int j = 0; j < ell; ++j) tr[index_of(a, "c" + std::to_string(j))] = 1;
    return tr;
}

PairTerms zigzag_nabla(const SuperAlgebra& a, int ell) {
    PairTerms n;
    const std::size_t u = index_of(a, "u");
    n[{u, u}] += 1;
    for (int j = 0; j < ell; ++j) {
        const std::size_t c = index_of(a, "c" + std::to_string(j)), e = index_of(a, "e" + std::to_string(j));
        n[{c, e}] += 1;
        n[{e, c}] += 1;
    }
    for (int k = 0; k + 1 < ell; ++k) {
        const std::size_t up = index_of(a, pair_label("a", std::to_string(k + 1), std::to_string(k)));
        const std::size_t down = index_of(a, pair_label("a", std::to_string(k), std::to_string(k + 1)));
        n[{up, down}] += 1;
        n[{down, up}] += 1;
    }
    return n;
}

namespace {

using FracMatrix = std::vector<std::vector<Fraction>>;

FracMatrix gram(const SuperAlgebra& alg, const std::vector<long long>& trace) {
    const std::size_t n = alg.dim();
    FracMatrix g(n, std::vector<Fraction>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : alg.multiply_basis(i, j)) g[i][j] += c * trace[k];
    return g;
}

// Gauss-Jordan elimination; returns the determinant and fills the inverse when it exists.
Fraction invert(FracMatrix m, FracMatrix* inv) {
    const std::size_t n = m.size();
    FracMatrix r(n, std::vector<Fraction>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    Fraction det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == Fraction(0)) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            std::swap(r[piv], r[col]);
            det = -det;
        }
        const Fraction p = m[col][col];
        det *= p;
        for (std::size_t k = 0; k < n; ++k) {
            m[col][k] /= p;
            r[col][k] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == Fraction(0)) continue;
            const Fraction f = m[row][col];
            for (std::size_t k = 0; k < n; ++k) {
                m[row][k] -= f * m[col][k];
                r[row][k] -= f * r[col][k];
            }
        }
    }
    if (inv) *inv = r;
    return det;
}

}  // namespace

Fraction gram_determinant(const SuperAlgebra& alg, const std::vector<long long>& trace) {
    return invert(gram(alg, trace), nullptr);
}

PairTerms dual_basis_nabla(const SuperAlgebra& alg, const std::vector<long long>& trace) {
    FracMatrix x;
    if (invert(gram(alg, trace), &x) == Fraction(0)) throw std::domain_error("trace form is degenerate");
    PairTerms n;
    for (std::size_t c = 0; c < alg.dim(); ++c)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            if (x[k][c] == Fraction(0)) continue;
            if (x[k][c].denominator() != 1) throw std::domain_error("dual basis is not integral");
            n[{c, k}] += x[k][c].numerator();
        }
    return n;
}

// ---------------------------------------------------------------- zigzag isomorphism

namespace {

using FracElement = std::map<std::size_t, Fraction>;

FracElement to_frac(const AlgElement& x) {
    FracElement r;
    for (const auto& [k, c] : x) r[k] = c;
    return r;
}

FracElement scaled(const FracElement& x, const Fraction& c) {
    FracElement r;
    for (const auto& [k, v] : x) add_term(r, k, v * c);
    return r;
}

FracElement sum(const FracElement& x, const FracElement& y) {
    FracElement r = x;
    for (const auto& [k, v] : y) add_term(r, k, v);
    return r;
}

FracElement apply_linear(const std::vector<FracElement>& images, const FracElement& x) {
    FracElement r;
    for (const auto& [k, c] : x)
        for (const auto& [l, e] : images.at(k)) add_term(r, l, c * e);
    return r;
}

}  // namespace

ZigzagIsoReport check_zigzag_iso(int ell) {
    auto a = build_A(ell);
    auto c1 = clifford(1);
    TensorAlgebra t(a, c1);
    auto b = build_B(ell);
    auto fb = [&](const std::string& l) { return FracElement{{index_of(*b, l), 1}}; };
    auto sa = [&](const std::string& l) { return index_of(*a, l); };
    const std::string pr = "'";

    // images of x (x) 1 for the A basis, and of 1 (x) c
    std::vector<FracElement> gen(a->dim());
    for (int j = 0; j < ell; ++j) gen[sa("e" + std::to_string(j))] = sum(fb("f" + std::to_string(j)), fb("f" + std::to_string(j) + pr));
    gen[sa("u")] = sum(fb("v"), scaled(fb("v'"), -1));
    for (int k = 0; k + 1 < ell; ++k) {
        const std::string s = std::to_string(k), s1 = std::to_string(k + 1);
        gen[sa(pair_label("a", s, s1))] = sum(fb(pair_label("b", s, s1)), fb(pair_label("b", s + pr, s1 + pr)));
        gen[sa(pair_label("a", s1, s))] = scaled(sum(fb(pair_label("b", s1, s)), fb(pair_label("b", s1 + pr, s + pr))), -1);
    }
    gen[sa("c0")] = multiply(*b, gen[sa("u")], gen[sa("u")]);
    for (int i = 1; i < ell; ++i) {
        const std::string s = std::to_string(i), s0 = std::to_string(i - 1);
        gen[sa("c" + s)] = multiply(*b, gen[sa(pair_label("a", s, s0))], gen[sa(pair_label("a", s0, s))]);
    }
    FracElement cimg;
    for (int j = 0; j < ell; ++j) cimg = sum(cimg, sum(fb("f" + std::to_string(j)), scaled(fb("f" + std::to_string(j) + pr), -1)));
    std::vector<FracElement> phi(t.dim());
    for (std::size_t x = 0; x < a->dim(); ++x) {
        phi[t.index(x, 0)] = gen[x];
        phi[t.index(x, 1)] = multiply(*b, gen[x], cimg);
    }

    // inverse assignments
    const Fraction half(1, 2);
    auto plus = [&](std::size_t x) { return FracElement{{t.index(x, 0), half}, {t.index(x, 1), half}}; };
    auto minus = [&](std::size_t x) { return FracElement{{t.index(x, 0), half}, {t.index(x, 1), -half}}; };
    std::vector<FracElement> psi(b->dim());
    auto sb = [&](const std::string& l) { return index_of(*b, l); };
    for (int j = 0; j < ell; ++j) {
        psi[sb("f" + std::to_string(j))] = plus(sa("e" + std::to_string(j)));
        psi[sb("f" + std::to_string(j) + pr)] = minus(sa("e" + std::to_string(j)));
    }
    psi[sb("v")] = plus(sa("u"));
    psi[sb("v'")] = scaled(minus(sa("u")), -1);
    for (int k = 0; k + 1 < ell; ++k) {
        const std::string s = std::to_string(k), s1 = std::to_string(k + 1);
        psi[sb(pair_label("b", s, s1))] = plus(sa(pair_label("a", s, s1)));
        psi[sb(pair_label("b", s + pr, s1 + pr))] = minus(sa(pair_label("a", s, s1)));
        psi[sb(pair_label("b", s1, s))] = scaled(plus(sa(pair_label("a", s1, s))), -1);
        psi[sb(pair_label("b", s1 + pr, s + pr))] = scaled(minus(sa(pair_label("a", s1, s))), -1);
    }
    // cycles are products of the arrow images
    psi[sb("w0")] = multiply(t, psi[sb("v'")], psi[sb("v")]);
    psi[sb("w0'")] = multiply(t, psi[sb("v")], psi[sb("v'")]);
    for (int i = 1; i < ell; ++i) {
        const std::string s = std::to_string(i), s0 = std::to_string(i - 1);
        psi[sb("w" + s)] = multiply(t, psi[sb(pair_label("b", s, s0))], psi[sb(pair_label("b", s0, s))]);
        psi[sb("w" + s + pr)] = multiply(t, psi[sb(pair_label("b", s + pr, s0 + pr))], psi[sb(pair_label("b", s0 + pr, s + pr))]);
    }

    ZigzagIsoReport rep;
    rep.phi_hom = rep.psi_hom = rep.round_trip = rep.super = true;
    for (std::size_t x = 0; x < t.dim(); ++x)
        for (std::size_t y = 0; y < t.dim(); ++y)
            if (apply_linear(phi, to_frac(t.multiply_basis(x, y))) != multiply(*b, phi[x], phi[y])) rep.phi_hom = false;
    for (std::size_t x = 0; x < b->dim(); ++x)
        for (std::size_t y = 0; y < b->dim(); ++y)
            if (apply_linear(psi, to_frac(b->multiply_basis(x, y))) != multiply(t, psi[x], psi[y])) rep.psi_hom = false;
    for (std::size_t x = 0; x < t.dim(); ++x)
        if (apply_linear(psi, phi[x]) != FracElement{{x, 1}}) rep.round_trip = false;
    for (std::size_t y = 0; y < b->dim(); ++y)
        if (apply_linear(phi, psi[y]) != FracElement{{y, 1}}) rep.round_trip = false;
    rep.unital = apply_linear(phi, to_frac(t.unit())) == to_frac(b->unit());
    const auto sigma = b_involution(*b, ell);
    for (std::size_t x = 0; x < t.dim(); ++x) {
        FracElement swapped;
        for (const auto& [k, c] : phi[x]) add_term(swapped, sigma[k], c);
        if (swapped != scaled(phi[x], t.bidegree(x).parity ? -1 : 1)) rep.super = false;
    }
    return rep;
}

// ---------------------------------------------------------------- H_d(A_l)

void HdElement::add(const HdMonomial& m, long long c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

HdElement& HdElement::operator+=(const HdElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

HdElement& HdElement::operator-=(const HdElement& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

HdElement operator*(long long c, const HdElement& x) {
    HdElement r;
    for (const auto& [m, v] : x.terms) r.add(m, c * v);
    return r;
}

int HdElement::z_degree() const {
    int best = 0;
    for (const auto& [m, c] : terms) best = std::max(best, std::accumulate(m.z.begin(), m.z.end(), 0));
    return best;
}

AffineZigzag::AffineZigzag(int ell, int d) : ell_(ell), d_(d), a_(build_A(ell)) {
    if (d < 1) throw std::invalid_argument("rank must be positive");
}

namespace {

// Expands a tensor in which some slots hold the unit into basis tensors.
TensorTerms expand_units(const SuperAlgebra& a, const std::vector<std::optional<std::size_t>>& slots) {
    TensorTerms acc{{{}, 1}};
    const AlgElement u = a.unit();
    for (const auto& s : slots) {
        TensorTerms next;
        for (const auto& [t, c] : acc) {
            if (s) {
                auto v = t;
                v.push_back(*s);
                next[v] += c;
            } else {
                for (const auto& [b, e] : u) {
                    auto v = t;
                    v.push_back(b);
                    next[v] += c * e;
                }
            }
        }
        acc.swap(next);
    }
    return acc;
}

}  // namespace

HdElement AffineZigzag::monomial(const HdMonomial& m) const {
    HdElement r;
    r.add(m, 1);
    return r;
}

HdElement AffineZigzag::tensor(const std::vector<std::size_t>& b) const {
    if ((int)b.size() != d_) throw std::invalid_argument("tensor of the wrong rank");
    return monomial({std::vector<int>(d_, 0), b, identity_perm(d_)});
}

HdElement AffineZigzag::one() const {
    HdElement r;
    for (const auto& [t, c] : expand_units(*a_, std::vector<std::optional<std::size_t>>(d_)))
        r.add({std::vector<int>(d_, 0), t, identity_perm(d_)}, c);
    return r;
}

HdElement AffineZigzag::z(int t) const {
    if (t < 1 || t > d_) throw std::invalid_argument("z index out of range");
    return lmul_z(t, one());
}

HdElement AffineZigzag::s(int r) const {
    const Perm w = transposition(d_, r);
    HdElement out;
    for (const auto& [m, c] : one().terms) out.add({m.z, m.b, w}, c);
    return out;
}

HdElement AffineZigzag::slot(int t, std::size_t basis) const {
    if (t < 1 || t > d_) throw std::invalid_argument("slot out of range");
    std::vector<std::optional<std::size_t>> slots(d_);
    slots[t - 1] = basis;
    HdElement r;
    for (const auto& [b, c] : expand_units(*a_, slots)) r.add({std::vector<int>(d_, 0), b, identity_perm(d_)}, c);
    return r;
}

HdElement AffineZigzag::idempotent(const std::vector<int>& word) const {
    if ((int)word.size() != d_) throw std::invalid_argument("word of the wrong length");
    std::vector<std::size_t> b;
    for (int j : word) b.push_back(index_of(*a_, "e" + std::to_string(j)));
    return tensor(b);
}

HdElement AffineZigzag::nabla(int r) const {
    if (r < 1 || r >= d_) throw std::invalid_argument("nabla index out of range");
    HdElement out;
    for (const auto& [t, c] : correction(r, r)) out.add({std::vector<int>(d_, 0), t, identity_perm(d_)}, c);
    return out;
}

TensorTerms AffineZigzag::correction(int r, int t) const {
    if (t != r && t != r + 1) return {};
    TensorTerms out;
    for (const auto& [pair, c] : zigzag_nabla(*a_, ell_)) {
        std::vector<std::optional<std::size_t>> slots(d_);
        slots[r - 1] = pair.first;
        slots[r] = pair.second;
        long long coef = c;
        if (t == r + 1) {
            // minus the s_r twist of nabla
            std::swap(slots[r - 1], slots[r]);
            if (a_->bidegree(pair.first).parity && a_->bidegree(pair.second).parity) coef = -coef;
            coef = -coef;
        }
        for (const auto& [b, e] : expand_units(*a_, slots)) out[b] += coef * e;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

HdElement AffineZigzag::lmul_z(int t, const HdElement& x) const {
    HdElement r;
    for (const auto& [m, c] : x.terms) {
        HdMonomial n = m;
        ++n.z[t - 1];
        r.add(n, c);
    }
    return r;
}

HdElement AffineZigzag::lmul_tensor(const std::vector<std::size_t>& b, long long c, const HdElement& x) const {
    HdElement r;
    for (const auto& [m, v] : x.terms) {
        int flips = 0;
        for (int t = 0; t < d_; ++t) flips += a_->bidegree(b[t]).parity * m.z[t];
        const long long sign = flips % 2 ? -1 : 1;
        for (const auto& [prod, e] : tensor_power_product(*a_, b, m.b)) r.add({m.z, prod, m.w}, sign * c * v * e);
    }
    return r;
}

HdElement AffineZigzag::lmul_s(int r, const HdElement& x) const {
    HdElement out;
    const Perm sr = transposition(d_, r);
    for (const auto& [m, c] : x.terms) {
        int t = 0;
        while (t < d_ && m.z[t] == 0) ++t;
        if (t == d_) {
            auto [sign, moved] = act_on_tensor(*a_, sr, m.b);
            out.add({m.z, moved, compose(sr, m.w)}, sign * c);
            continue;
        }
        // s_r z_t Y = z_{s_r(t)} s_r Y + R_t Y
        HdMonomial y = m;
        --y.z[t];
        HdElement ye;
        ye.add(y, c);
        out += lmul_z(sr[t] + 1, lmul_s(r, ye));
        for (const auto& [b, e] : correction(r, t + 1)) out += lmul_tensor(b, e, ye);
    }
    return out;
}

HdElement AffineZigzag::lmul_perm(const Perm& w, const HdElement& x) const {
    const Perm inv = inverse(w);
    for (int r = 1; r < d_; ++r)
        if (inv[r - 1] > inv[r]) return lmul_s(r, lmul_perm(compose(transposition(d_, r), w), x));
    return x;
}

HdElement AffineZigzag::multiply(const HdElement& x, const HdElement& y) const {
    HdElement out;
    for (const auto& [m, c] : x.terms) {
        HdElement t = lmul_tensor(m.b, c, lmul_perm(m.w, y));
        for (int k = 0; k < d_; ++k)
            for (int e = 0; e < m.z[k]; ++e) t = lmul_z(k + 1, t);
        out += t;
    }
    return out;
}

std::string AffineZigzag::format(const HdElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        for (int t = 0; t < d_; ++t)
            if (m.z[t]) os << "z" << t + 1 << (m.z[t] > 1 ? "^" + std::to_string(m.z[t]) : "") << " ";
        for (int t = 0; t < d_; ++t) os << (t ? "|" : "") << a_->label(m.b[t]);
        os << " [";
        for (int t = 0; t < d_; ++t) os << m.w[t] + 1;
        os << "]";
    }
    return os.str();
}

HdElement szid_rhs(const AffineZigzag& h, int r, int t, const std::vector<int>& word, bool include_stray_term) {
    const SuperAlgebra& a = h.base();
    const HdElement e = h.idempotent(word);
    const int ir = word[r - 1], ir1 = word[r];
    const long long coef = (t == r ? 1 : 0) - (t == r + 1 ? 1 : 0);
    HdElement out;
    if (ir == ir1) {
        HdElement c;
        for (int j = 0; j < h.ell(); ++j) {
            const std::size_t cj = index_of(a, "c" + std::to_string(j));
            c += h.slot(r, cj);
            c += h.slot(r + 1, cj);
        }
        out += coef * h.multiply(c, e);
        if (ir == 0 && (include_stray_term || coef != 0)) {
            const std::size_t u = index_of(a, "u");
            out += h.multiply(h.multiply(h.slot(r, u), h.slot(r + 1, u)), e);
        }
    } else if (std::abs(ir - ir1) == 1) {
        const std::size_t x = index_of(a, pair_label("a", std::to_string(ir1), std::to_string(ir)));
        const std::size_t y = index_of(a, pair_label("a", std::to_string(ir), std::to_string(ir1)));
        out += coef * h.multiply(h.multiply(h.slot(r, x), h.slot(r + 1, y)), e);
    }
    return out;
}

long long hd_quotient_wreath_dim(int ell, int d) {
    if (d < 0) throw std::invalid_argument("negative rank");
    // count the z-free normal monomials
    const long long a = 4LL * ell - 1;
    long long n = checked_factorial(d);
    for (int k = 0; k < d; ++k) n *= a;
    return n;
}

bool hd_matches_wreath(int ell, int d, int samples, unsigned seed) {
    AffineZigzag h(ell, d);
    auto w = wreath(build_A(ell), d);
    std::mt19937_64 rng(seed);
    auto to_h = [&](std::size_t k) {
        auto [t, p] = w->split(k);
        return h.monomial({std::vector<int>(d, 0), t, p});
    };
    auto check = [&](std::size_t i, std::size_t j) {
        const HdElement prod = h.multiply(to_h(i), to_h(j));
        AlgElement conv;
        for (const auto& [m, c] : prod.terms) {
            if (std::any_of(m.z.begin(), m.z.end(), [](int x) { return x != 0; })) return false;
            add_term(conv, w->index(m.b, m.w), c);
        }
        return conv == w->multiply_basis(i, j);
    };
    if (samples <= 0) {
        for (std::size_t i = 0; i < w->dim(); ++i)
            for (std::size_t j = 0; j < w->dim(); ++j)
                if (!check(i, j)) return false;
        return true;
    }
    for (int s = 0; s < samples; ++s)
        if (!check(rng() % w->dim(), rng() % w->dim())) return false;
    return true;
}

}  // namespace spinblock

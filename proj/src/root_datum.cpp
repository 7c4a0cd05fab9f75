#include "spinblock/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace spinblock {

namespace {

void check_ell(int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be at least 1");
}

void check_same(const RootVector& a, const RootVector& b) {
    if (a.ell != b.ell || a.twice.size() != b.twice.size())
        throw std::invalid_argument("root vectors with different ell");
}

// Doubled simple-root coordinates of sum f_i e_i given doubled e-coordinates.
RootVector from_orthogonal_twice(int ell, const std::vector<long long>& f2) {
    // e_i = alpha_i + ... + alpha_{l-1} + alpha_l / 2
    RootVector r(ell);
    long long partial = 0;
    for (int k = 1; k <= ell - 1; ++k) {
        partial += f2[k - 1];
        r.twice[k] = partial;
    }
    long long total = 0;
    for (int i = 0; i < ell; ++i) total += f2[i];
    if (total % 2 != 0) throw std::logic_error("orthogonal vector outside the doubled lattice");
    r.twice[ell] = total / 2;
    return r;
}

// Doubled e-coordinates of the alpha_1..alpha_l part of v.
std::vector<long long> orthogonal_twice(const RootVector& v) {
    const int ell = v.ell;
    std::vector<long long> f(ell, 0);
    if (ell == 1) {
        f[0] = 2 * v.twice[1];
        return f;
    }
    f[0] = v.twice[1];
    for (int k = 2; k <= ell - 1; ++k) f[k - 1] = v.twice[k] - v.twice[k - 1];
    f[ell - 1] = 2 * v.twice[ell] - v.twice[ell - 1];
    return f;
}

std::vector<std::vector<long long>> finite_roots_orthogonal(int ell) {
    // Type C_l in e-coordinates: +-2e_i (long), +-e_i +- e_j (short).
    std::vector<std::vector<long long>> roots;
    for (int i = 0; i < ell; ++i)
        for (int s : {1, -1}) {
            std::vector<long long> v(ell, 0);
            v[i] = 2 * s;
            roots.push_back(v);
        }
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            for (int s : {1, -1})
                for (int t : {1, -1}) {
                    std::vector<long long> v(ell, 0);
                    v[i] = s;
                    v[j] = t;
                    roots.push_back(v);
                }
    return roots;
}

bool is_long(const std::vector<long long>& f) {
    int nz = 0;
    for (auto x : f) nz += x != 0;
    return nz == 1;
}

bool positive_in_standard(const std::vector<long long>& f) {
    // Standard positive system: first nonzero coordinate positive.
    for (auto x : f)
        if (x != 0) return x > 0;
    return false;
}

}  // namespace

RootVector RootVector::simple(int l, int i) {
    check_ell(l);
    if (i < 0 || i > l) throw std::invalid_argument("simple root index out of range");
    RootVector r(l);
    r.twice[i] = 2;
    return r;
}

RootVector RootVector::delta(int l) {
    check_ell(l);
    RootVector r(l);
    for (int i = 0; i < l; ++i) r.twice[i] = 4;
    r.twice[l] = 2;
    return r;
}

RootVector RootVector::from_coords(int l, const std::vector<long long>& coords) {
    check_ell(l);
    if ((int)coords.size() != l + 1) throw std::invalid_argument("root vector must have l+1 coordinates");
    RootVector r(l);
    for (int i = 0; i <= l; ++i) r.twice[i] = 2 * coords[i];
    return r;
}

bool RootVector::is_integral() const {
    return std::all_of(twice.begin(), twice.end(), [](long long x) { return x % 2 == 0; });
}

bool RootVector::in_q_plus() const {
    return std::all_of(twice.begin(), twice.end(), [](long long x) { return x >= 0 && x % 2 == 0; });
}

bool RootVector::is_zero() const {
    return std::all_of(twice.begin(), twice.end(), [](long long x) { return x == 0; });
}

long long RootVector::twice_height() const {
    long long s = 0;
    for (auto x : twice) s += x;
    return s;
}

std::vector<long long> RootVector::coords() const {
    if (!is_integral()) throw std::domain_error("root vector is not integral");
    std::vector<long long> c(twice.size());
    for (size_t i = 0; i < twice.size(); ++i) c[i] = twice[i] / 2;
    return c;
}

RootVector& RootVector::operator+=(const RootVector& o) {
    check_same(*this, o);
    for (size_t i = 0; i < twice.size(); ++i) twice[i] += o.twice[i];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
    check_same(*this, o);
    for (size_t i = 0; i < twice.size(); ++i) twice[i] -= o.twice[i];
    return *this;
}

RootVector operator*(long long k, RootVector a) {
    for (auto& x : a.twice) x *= k;
    return a;
}

std::string RootVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < twice.size(); ++i) {
        if (i) os << ",";
        if (twice[i] % 2 == 0)
            os << twice[i] / 2;
        else
            os << twice[i] << "/2";
    }
    os << ")";
    return os.str();
}

std::vector<std::vector<long long>> gram_matrix(int ell) {
    check_ell(ell);
    std::vector<std::vector<long long>> g(ell + 1, std::vector<long long>(ell + 1, 0));
    if (ell == 1) {
        g = {{2, -4}, {-4, 8}};
        return g;
    }
    g[0][0] = 2;
    for (int i = 1; i < ell; ++i) g[i][i] = 4;
    g[ell][ell] = 8;
    for (int i = 0; i + 1 < ell; ++i) g[i][i + 1] = g[i + 1][i] = -2;
    g[ell - 1][ell] = g[ell][ell - 1] = -4;
    return g;
}

long long pairing(const RootVector& a, const RootVector& b) {
    check_same(a, b);
    const auto g = gram_matrix(a.ell);
    long long s = 0;
    for (int i = 0; i <= a.ell; ++i)
        for (int j = 0; j <= a.ell; ++j) s += a.twice[i] * b.twice[j] * g[i][j];
    if (s % 4 != 0) throw std::domain_error("pairing is not integral");
    return s / 4;
}

int half_norm(int ell, int i) {
    if (i == 0) return 1;
    if (i == ell) return 4;
    return 2;
}

int dual_mark(int /*ell*/, int i) { return i == 0 ? 1 : 2; }

long long coroot_pairing_lambda0_minus(const RootVector& theta, int i) {
    const long long num = 2 * pairing(RootVector::simple(theta.ell, i), theta);
    const long long den = 2 * half_norm(theta.ell, i);
    if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
    return (i == 0 ? 1 : 0) - num / den;
}

std::vector<int> Word::expand() const {
    std::vector<int> out;
    for (size_t k = 0; k < letters.size(); ++k)
        for (int r = 0; r < exponent(k); ++r) out.push_back(letters[k]);
    return out;
}

void Word::validate(int ell) const {
    if (!exponents.empty() && exponents.size() != letters.size())
        throw std::invalid_argument("divided exponents do not align with letters");
    for (int x : letters)
        if (x < 0 || x > ell) throw std::invalid_argument("letter outside I");
    for (int e : exponents)
        if (e < 1) throw std::invalid_argument("divided exponent must be positive");
}

Word Word::concat(const Word& o) const {
    Word w;
    w.letters = letters;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    if (divided() || o.divided()) {
        for (size_t k = 0; k < letters.size(); ++k) w.exponents.push_back(exponent(k));
        for (size_t k = 0; k < o.letters.size(); ++k) w.exponents.push_back(o.exponent(k));
    }
    return w;
}

std::string format_word(const std::vector<int>& w, int ell) {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (ell > 9 && k) os << ",";
        os << w[k];
    }
    return os.str();
}

std::vector<int> parse_word(const std::string& s, int ell) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos || ell > 9) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            w.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("word must be a digit string");
            w.push_back(c - '0');
        }
    }
    for (int x : w)
        if (x < 0 || x > ell) throw std::invalid_argument("letter outside I");
    return w;
}

RootVector word_content(const Word& w, int ell) {
    w.validate(ell);
    RootVector r(ell);
    for (size_t k = 0; k < w.letters.size(); ++k) r.twice[w.letters[k]] += 2 * w.exponent(k);
    return r;
}

RootVector word_content(const std::vector<int>& w, int ell) { return word_content(Word(w), ell); }

std::vector<PositiveRoot> positive_roots_up_to(int h, int ell) {
    check_ell(ell);
    const int p = p_of(ell);
    const RootVector delta = RootVector::delta(ell);
    std::vector<PositiveRoot> out;
    const long long h2 = 2LL * h;
    auto push = [&](const std::vector<long long>& f2, long long delta_twice, RootKind kind) {
        RootVector r = from_orthogonal_twice(ell, f2);
        // add (delta_twice / 2) * delta
        for (size_t i = 0; i < r.twice.size(); ++i) {
            long long add = delta_twice * delta.twice[i];
            if (add % 2 != 0) throw std::logic_error("half-integral root");
            r.twice[i] += add / 2;
        }
        if (r.twice_height() > h2 || r.twice_height() <= 0) return;
        out.push_back({r, kind, f2, Fraction(delta_twice, 2)});
    };
    const auto finite = finite_roots_orthogonal(ell);
    for (const auto& a : finite) {
        std::vector<long long> f2(ell);
        for (int i = 0; i < ell; ++i) f2[i] = 2 * a[i];
        if (positive_in_standard(a)) push(f2, 0, RootKind::Real);
    }
    // Heights grow by at least p per step in n, so n <= h suffices.
    for (int n = 1; n <= h + 1; ++n) {
        for (const auto& a : finite) {
            std::vector<long long> f2(ell);
            for (int i = 0; i < ell; ++i) f2[i] = 2 * a[i];
            if (is_long(a)) {
                std::vector<long long> half(ell);
                for (int i = 0; i < ell; ++i) half[i] = a[i];
                push(half, 2 * n - 1, RootKind::Real);
                push(f2, 4LL * n, RootKind::Real);
            } else {
                push(f2, 2LL * n, RootKind::Real);
            }
        }
        if ((long long)n * p <= h) push(std::vector<long long>(ell, 0), 2LL * n, RootKind::Imaginary);
    }
    std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.root.twice_height() != b.root.twice_height()) return a.root.twice_height() < b.root.twice_height();
        return a.root.twice < b.root.twice;
    });
    return out;
}

bool is_positive_root(const RootVector& beta) {
    if (!beta.in_q_plus() || beta.is_zero()) return false;
    const long long h = beta.twice_height() / 2;
    for (const auto& r : positive_roots_up_to((int)h, beta.ell))
        if (r.root == beta) return true;
    return false;
}

ChiValue chi(const RootVector& beta) {
    const int ell = beta.ell;
    const auto& m = beta.twice;
    ChiValue v(ell + 2, 0);
    long long first = 0;
    for (int j = 1; j <= ell - 1; ++j) {
        v[j] = 2 * (m[j] - 2 * m[ell]);
        first += v[j];
    }
    v[ell] = m[0] - 2 * m[ell];
    first += v[ell];
    v[0] = first;
    v[ell + 1] = m[0];
    return v;
}

Order compare_preorder(const RootVector& beta, const RootVector& gamma) {
    check_same(beta, gamma);
    if (!is_positive_root(beta) || !is_positive_root(gamma))
        throw std::invalid_argument("compare_preorder requires positive roots");
    const long long hb = beta.twice_height(), hg = gamma.twice_height();
    ChiValue cb = chi(beta), cg = chi(gamma);
    for (size_t k = 0; k < cb.size(); ++k) {
        const long long l = hg * cb[k], r = hb * cg[k];
        if (l < r) return Order::Less;
        if (l > r) return Order::Greater;
    }
    return Order::Equal;
}

DeltaSide classify_vs_delta(const RootVector& beta) {
    if (!is_positive_root(beta)) throw std::invalid_argument("classify_vs_delta requires a positive root");
    const int ell = beta.ell;
    // Remove the delta part: delta contributes 2 to the alpha_0 coordinate.
    RootVector finite = beta;
    const RootVector delta = RootVector::delta(ell);
    const long long s2 = beta.twice[0];  // 2 * (alpha_0 coefficient) = 4 * s
    for (int i = 0; i <= ell; ++i) {
        long long sub = s2 * delta.twice[i];
        if (sub % 4 != 0) throw std::logic_error("unexpected delta coefficient");
        finite.twice[i] -= sub / 4;
    }
    const auto f = orthogonal_twice(finite);
    bool zero = std::all_of(f.begin(), f.end(), [](long long x) { return x == 0; });
    if (zero) return DeltaSide::Imaginary;
    // The positive system with simple roots alpha_1..alpha_{l-1}, -2e_1 is cut
    // out by the functional e_i -> -i.
    long long val = 0;
    for (int i = 0; i < ell; ++i) val += -(long long)(i + 1) * f[i];
    if (val == 0) throw std::logic_error("functional vanishes on a root");
    return val > 0 ? DeltaSide::Above : DeltaSide::Below;
}

ConeOracle::ConeOracle(int ell) : ell_(ell) { check_ell(ell); }

void ConeOracle::ensure_roots(long long height) {
    if (height <= roots_height_) return;
    below_.clear();
    above_.clear();
    for (const auto& r : positive_roots_up_to((int)height, ell_)) {
        auto c = r.root.coords();
        if (r.kind == RootKind::Imaginary) {
            below_.push_back(c);
            above_.push_back(c);
            continue;
        }
        (classify_vs_delta(r.root) == DeltaSide::Below ? below_ : above_).push_back(c);
    }
    roots_height_ = height;
}

bool ConeOracle::reach(const std::vector<long long>& coords, Cone side) {
    if (std::all_of(coords.begin(), coords.end(), [](long long x) { return x == 0; })) return true;
    auto& memo = memo_[side == Cone::AtMostDelta ? 0 : 1];
    auto it = memo.find(coords);
    if (it != memo.end()) return it->second;
    const auto& roots = side == Cone::AtMostDelta ? below_ : above_;
    bool ok = false;
    std::vector<long long> rest(coords.size());
    for (const auto& r : roots) {
        bool fits = true;
        for (size_t i = 0; i < coords.size(); ++i) {
            rest[i] = coords[i] - r[i];
            if (rest[i] < 0) {
                fits = false;
                break;
            }
        }
        if (fits && reach(rest, side)) {
            ok = true;
            break;
        }
    }
    memo[coords] = ok;
    return ok;
}

bool ConeOracle::member(const RootVector& theta, Cone side) {
    if (theta.ell != ell_) throw std::invalid_argument("cone oracle ell mismatch");
    if (!theta.in_q_plus()) throw std::invalid_argument("cone membership requires theta in Q_+");
    ensure_roots(theta.twice_height() / 2);
    return reach(theta.coords(), side);
}

bool cone_member(const RootVector& theta, Cone side) {
    ConeOracle o(theta.ell);
    return o.member(theta, side);
}

bool is_cuspidal(const std::vector<int>& word, int ell, ConeOracle& oracle) {
    const RootVector content = word_content(word, ell);
    const RootVector delta = RootVector::delta(ell);
    const long long d = content.twice[ell] / 2;
    if (d < 1 || content != (long long)d * delta)
        throw std::invalid_argument("cuspidality is defined for words of content d*delta");
    RootVector prefix(ell);
    for (size_t k = 0; k <= word.size(); ++k) {
        if (k > 0) prefix.twice[word[k - 1]] += 2;
        if (!oracle.member(prefix, Cone::AtMostDelta)) return false;
        if (!oracle.member(content - prefix, Cone::AtLeastDelta)) return false;
    }
    return true;
}

bool is_cuspidal(const std::vector<int>& word, int ell) {
    ConeOracle o(ell);
    return is_cuspidal(word, ell, o);
}

namespace {

void shuffles(const std::vector<int>& a, const std::vector<int>& b, size_t i, size_t j, std::vector<int>& cur,
              std::set<std::vector<int>>& out) {
    if (i == a.size() && j == b.size()) {
        out.insert(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffles(a, b, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffles(a, b, i, j + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::set<std::vector<int>> cuspidal_shuffle_set(int ell) {
    check_ell(ell);
    std::set<std::vector<int>> out;
    for (int i = 1; i <= ell; ++i) {
        std::vector<int> jw, kw;
        for (int x = ell - 1; x >= 1; --x) jw.push_back(x);
        jw.push_back(0);
        jw.push_back(0);
        for (int x = 1; x <= i - 1; ++x) jw.push_back(x);
        for (int x = ell - 1; x >= i; --x) kw.push_back(x);
        std::set<std::vector<int>> sh;
        std::vector<int> cur;
        shuffles(jw, kw, 0, 0, cur, sh);
        for (auto w : sh) {
            w.insert(w.begin(), ell);
            out.insert(w);
        }
    }
    return out;
}

std::vector<std::vector<int>> words_of_content(const RootVector& theta) {
    if (!theta.in_q_plus()) throw std::invalid_argument("content must lie in Q_+");
    std::vector<int> letters;
    auto c = theta.coords();
    for (int i = 0; i <= theta.ell; ++i)
        for (long long k = 0; k < c[i]; ++k) letters.push_back(i);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

Word gg_word(const std::vector<int>& seq, int ell) {
    check_ell(ell);
    Word out;
    for (int i : seq) {
        if (i < 0 || i >= ell) throw std::invalid_argument("Gelfand-Graev index must lie in J");
        Word g;
        g.letters.push_back(ell);
        g.exponents.push_back(1);
        for (int x = ell - 1; x >= i + 1; --x) {
            g.letters.push_back(x);
            g.exponents.push_back(2);
        }
        for (int x = i; x >= 1; --x) {
            g.letters.push_back(x);
            g.exponents.push_back(1);
        }
        g.letters.push_back(0);
        g.exponents.push_back(2);
        for (int x = 1; x <= i; ++x) {
            g.letters.push_back(x);
            g.exponents.push_back(1);
        }
        out = out.concat(g);
    }
    return out;
}

}  // namespace spinblock

#include "spinblock/dims.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace spinblock {

namespace {

bool content_matches(const std::vector<int>& w, const RootVector& theta, int p) {
    return word_content(w, ell_of(p)) == theta;
}

void check_j(int i, int ell) {
    if (i < 0 || i >= ell) throw std::invalid_argument("index must lie in J");
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

LaurentPoly q_pow(int e) { return LaurentPoly::q(e); }

}  // namespace

LaurentPoly graded_dim(int level, const RootVector& theta, const std::vector<int>& word_i,
                       const std::vector<int>& word_j, int p, bool* mismatch) {
    const bool bad = !content_matches(word_i, theta, p) || !content_matches(word_j, theta, p);
    if (mismatch) *mismatch = bad;
    if (bad) return LaurentPoly();
    return fv_form(word_i, word_j, level, p, FormMode::Direct);
}

LaurentPoly graded_dim_tableaux(int level, const RootVector& theta, const std::vector<int>& word_i,
                                const std::vector<int>& word_j, int p) {
    if (!content_matches(word_i, theta, p) || !content_matches(word_j, theta, p)) return LaurentPoly();
    LaurentPoly total;
    for (const auto& lam : p_strict_multipartitions(level, (int)word_i.size(), p)) {
        if (content_multi(lam, p) != theta) continue;
        const auto ss = enumerate_std(lam, p, word_i);
        if (ss.empty()) continue;
        const auto ts = enumerate_std(lam, p, word_j);
        const LaurentPoly norm = norm_poly_multi(lam, p);
        for (const auto& s : ss) {
            const LaurentPoly ds = tableau_degree(s, p);
            for (const auto& t : ts) total += ds * tableau_degree(t, p) * norm;
        }
    }
    return total;
}

long long ungraded_dim(int level, const RootVector& theta, const std::vector<int>& word_i,
                       const std::vector<int>& word_j, int p) {
    if (!content_matches(word_i, theta, p) || !content_matches(word_j, theta, p)) return 0;
    const long long m0 = theta.twice[0] / 2;
    long long total = 0;
    for (const auto& lam : p_strict_multipartitions(level, (int)word_i.size(), p)) {
        bool strict = true;
        for (const auto& c : lam) strict = strict && is_strict(c);
        if (!strict || content_multi(lam, p) != theta) continue;
        const long long a = (long long)enumerate_std(lam, p, word_i, true).size();
        if (a == 0) continue;
        const long long b = (long long)enumerate_std(lam, p, word_j, true).size();
        const long long e = m0 - total_rows(lam);
        if (e < 0) throw std::logic_error("negative power of two in the ungraded sum");
        total += a * b * (1LL << e);
    }
    return total;
}

LaurentPoly cyclotomic_dim(int level, const RootVector& theta, int p) {
    // Sum over all words of F-applications, built one letter at a time.
    std::map<RootVector, FockVector> memo;
    std::function<FockVector(const RootVector&)> sum_words = [&](const RootVector& t) -> FockVector {
        if (t.is_zero()) return FockVector::vacuum(p, level);
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        FockVector v(p, level);
        for (int i = 0; i <= t.ell; ++i) {
            if (t.twice[i] <= 0) continue;
            v += apply_F(i, sum_words(t - RootVector::simple(t.ell, i)));
        }
        memo[t] = v;
        return v;
    };
    if (!theta.in_q_plus()) throw std::invalid_argument("theta must lie in Q_+");
    const FockVector v = sum_words(theta);
    return form(v, v);
}

LaurentPoly word_factorial(const Word& w, int ell) {
    w.validate(ell);
    LaurentPoly r(1);
    for (size_t k = 0; k < w.letters.size(); ++k) r *= quantum_factorial(w.exponent(k), half_norm(ell, w.letters[k]));
    return r;
}

long long word_bracket(const Word& w, int ell) {
    w.validate(ell);
    long long s = 0;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        const long long m = w.exponent(k);
        s += (long long)half_norm(ell, w.letters[k]) * m * (m - 1) / 2;
    }
    return s;
}

LaurentPoly divided_power_dim(int level, const RootVector& theta, const Word& word_i, const Word& word_j, int p) {
    const int ell = ell_of(p);
    const LaurentPoly full = graded_dim(level, theta, word_i.expand(), word_j.expand(), p);
    const LaurentPoly divisor = word_factorial(word_i, ell).shifted((int)word_bracket(word_i, ell)) *
                                word_factorial(word_j, ell).shifted(-(int)word_bracket(word_j, ell));
    return full.divide_exact(divisor);
}

Word divide_runs(const std::vector<int>& word) {
    std::vector<int> letters, exps;
    for (int x : word) {
        if (!letters.empty() && letters.back() == x) {
            ++exps.back();
        } else {
            letters.push_back(x);
            exps.push_back(1);
        }
    }
    return Word(letters, exps);
}

std::optional<Word> find_unit_divided_word(int level, const RootVector& theta, int p) {
    for (const auto& w : words_of_content(theta)) {
        const Word d = divide_runs(w);
        if (divided_power_dim(level, theta, d, d, p) == LaurentPoly(1)) return d;
    }
    return std::nullopt;
}

LaurentPoly m_ij(int i, int j, int ell) {
    check_j(i, ell);
    check_j(j, ell);
    return (1 + q_pow(2)) * (1 + q_pow(-2)) * (1 + q_pow(4)).pow(ell - i - 1) * (1 + q_pow(-4)).pow(ell - j - 1);
}

LaurentPoly chi_poly(int i, int k, int ell) {
    check_j(i, ell);
    if (k < 0 || k > ell) throw std::invalid_argument("k must lie in I");
    const LaurentPoly common = (q_pow(2) + q_pow(-2)).pow(ell - i - 1) * (q_pow(2) + 1);
    if (i == k - 1) return q_pow(1) * common;
    if (i == k) return q_pow(-1) * common;
    return LaurentPoly();
}

LaurentPoly zigzag_block_dim(int ell, int i, int j) {
    check_j(i, ell);
    check_j(j, ell);
    if (i == 0 && j == 0) return 1 + q_pow(2) + q_pow(4);
    if (i == j) return 1 + q_pow(4);
    if (j == i + 1) return LaurentPoly(1);
    if (j == i - 1) return q_pow(4);
    return LaurentPoly();
}

LaurentPoly dim_Y1(int level, int ell, int i, int j) {
    LaurentPoly s;
    for (int t = 0; t < level; ++t) s += q_pow(4 * t);
    return s * zigzag_block_dim(ell, i, j);
}

Partition slide_down_runner(const Partition& core, int p, int k) {
    if (k < 0 || k > ell_of(p)) throw std::invalid_argument("runner must lie in I");
    Abacus a = to_abacus(core, p, (int)core.size() + 1);
    int from = -1;
    for (const auto& [pos, mult] : a.beads)
        if (pos % p == k && mult > 0) from = std::max(from, pos);
    if (from < 0) throw std::invalid_argument("no bead on the requested runner");
    return from_abacus(slide(a, from, SlideDirection::Down, false));
}

Multipartition slide_down_component(const Partition& core, int p, int level, int s, int k) {
    if (s < 1 || s > level) throw std::invalid_argument("component out of range");
    Multipartition m(level, core);
    m[s - 1] = slide_down_runner(core, p, k);
    return m;
}

LaurentPoly slide_family_degree_sum(const Multipartition& shape, const Tableau& u, int i, int p) {
    const int ell = ell_of(p);
    const std::vector<int> tail = gg_word({i}, ell).expand();
    std::vector<int> word = word_of(u, p);
    word.insert(word.end(), tail.begin(), tail.end());
    const LaurentPoly du = tableau_degree(u, p);
    LaurentPoly total;
    // Extend U node by node inside the target shape.
    Tableau cur = u;
    Multipartition now = u.shape;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == word.size()) {
            if (now != shape) return;
            Tableau s{shape, cur.filling};
            total += tableau_degree(s, p).divide_exact(du);
            return;
        }
        for (int t = 1; t <= (int)shape.size(); ++t) {
            const Partition& target = shape[t - 1];
            const Partition& part = now[t - 1];
            for (int r = 1; r <= (int)part.size() + 1 && r <= (int)target.size(); ++r) {
                const int len = r <= (int)part.size() ? part[r - 1] : 0;
                if (len >= target[r - 1]) continue;
                if (r > 1 && part[r - 2] <= len) continue;
                const Node b{r, len + 1, t};
                if (residue(b.col, p) != word[k]) continue;
                Multipartition next = add_node(now, b);
                if (!is_p_strict(next[t - 1], p)) continue;
                std::swap(now, next);
                cur.filling.push_back(b);
                rec(k + 1);
                cur.filling.pop_back();
                std::swap(now, next);
            }
        }
    };
    rec(u.filling.size());
    return total;
}

LaurentPoly slide_family_degree_sum(const Partition& core, int p, const Tableau& u, int i, int k, int s) {
    if (!is_rouquier(core, p, 1)) throw std::invalid_argument("core must be 1-Rouquier");
    const Multipartition shape = slide_down_component(core, p, (int)u.shape.size(), s, k);
    return slide_family_degree_sum(shape, u, i, p);
}

LaurentPoly weight_one_double_sum(const Partition& core, int p, int level, int i, int j, const Tableau& u,
                                  const Tableau& v) {
    LaurentPoly total;
    const auto ones = block_partitions(core, p, 1);
    for (int s = 1; s <= level; ++s)
        for (const auto& lam : ones) {
            Multipartition shape(level, core);
            shape[s - 1] = lam;
            total += norm_poly_multi(shape, p) * slide_family_degree_sum(shape, u, i, p) *
                     slide_family_degree_sum(shape, v, j, p);
        }
    return total;
}

LaurentPoly gg_truncated_dim(const Partition& core, int p, int level, int i, int j) {
    const int ell = ell_of(p);
    if (!is_rouquier(core, p, 1)) throw std::invalid_argument("core must be 1-Rouquier");
    const RootVector base = (long long)level * content(core, p);
    const Word gi = gg_word({i}, ell), gj = gg_word({j}, ell);
    const auto words = words_of_content(base);
    std::vector<FockVector> vi, vj;
    for (const auto& k : words) {
        vi.push_back(apply_word(concat(k, gi.expand()), level, p));
        vj.push_back(apply_word(concat(k, gj.expand()), level, p));
    }
    const LaurentPoly divisor = word_factorial(gi, ell).shifted((int)word_bracket(gi, ell)) *
                                word_factorial(gj, ell).shifted(-(int)word_bracket(gj, ell));
    LaurentPoly total;
    for (size_t a = 0; a < words.size(); ++a)
        for (size_t b = 0; b < words.size(); ++b) {
            // divided power dimension for the words k g^i and l g^j
            total += form(vi[a], vj[b]).divide_exact(divisor);
        }
    return total;
}

long long factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
    long long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

long long multinomial(const std::vector<int>& parts) {
    long long r = 1;
    int total = 0;
    for (int m : parts) {
        if (m < 0) throw std::invalid_argument("negative multinomial part");
        for (int k = 1; k <= m; ++k) {
            ++total;
            r = r * total / k;
        }
    }
    return r;
}

long long dim_Yd_closed(int p, int d) {
    if (d < 0) throw std::invalid_argument("negative d");
    long long r = factorial(d);
    for (int k = 0; k < d; ++k) r *= (2LL * p - 3);
    return r;
}

long long dim_Yd_sum(int p, int d, const Partition& core) {
    const int ell = ell_of(p);
    long long total = 0;
    for (const auto& lam : strict_block_partitions(core, p, d)) {
        const auto quot = bar_quotient(lam, p);
        std::vector<int> sizes;
        for (const auto& c : quot) sizes.push_back(partition_size(c));
        const int e = 2 * d - (int)quot[0].size() - 2 * sizes[ell];
        if (e < 0) throw std::logic_error("negative power of two");
        const long long mult = multinomial(sizes);
        long long prod = strict_kostka(quot[0]);
        for (int j = 1; j <= ell; ++j) prod *= kostka(quot[j]);
        total += (1LL << e) * mult * mult * prod * prod;
    }
    return total;
}

long long dim_Yd_sum(int p, int d) { return dim_Yd_sum(p, d, rouquier_core(p, d)); }

long long kostka(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("kostka requires a partition");
    // hook length formula with exact big-integer-free evaluation via repeated division
    const int n = partition_size(lambda);
    std::vector<int> hooks;
    for (size_t r = 0; r < lambda.size(); ++r)
        for (int c = 1; c <= lambda[r]; ++c) {
            int below = 0;
            for (size_t s = r + 1; s < lambda.size() && lambda[s] >= c; ++s) ++below;
            hooks.push_back(lambda[r] - c + below + 1);
        }
    // n! / prod hooks; accumulate the numerator factor by factor, dividing when possible
    std::map<int, int> primes;
    auto factor = [&](int x, int sign) {
        for (int f = 2; f * f <= x; ++f)
            while (x % f == 0) {
                primes[f] += sign;
                x /= f;
            }
        if (x > 1) primes[x] += sign;
    };
    for (int k = 2; k <= n; ++k) factor(k, 1);
    for (int h : hooks) factor(h, -1);
    long long r = 1;
    for (const auto& [prime, e] : primes) {
        if (e < 0) throw std::logic_error("hook formula produced a fraction");
        for (int k = 0; k < e; ++k) r *= prime;
    }
    return r;
}

long long strict_kostka(const Partition& lambda) {
    if (!is_partition(lambda) || !is_strict(lambda)) throw std::invalid_argument("strict_kostka requires a strict partition");
    static std::map<Partition, long long> memo;
    if (lambda.empty()) return 1;
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (size_t r = 0; r < lambda.size(); ++r) {
        Partition mu = lambda;
        --mu[r];
        if (mu[r] == 0) mu.pop_back();
        if (r + 1 < lambda.size() && mu.size() > r + 1 && mu[r] <= mu[r + 1]) continue;
        if (!is_partition(mu) || !is_strict(mu)) continue;
        total += strict_kostka(mu);
    }
    memo[lambda] = total;
    return total;
}

namespace {

int step_color(const Multipartition& before, const Multipartition& after) {
    int color = -1;
    for (size_t i = 0; i < before.size(); ++i) {
        const int diff = partition_size(after[i]) - partition_size(before[i]);
        if (diff == 0) continue;
        if (diff != 1 || color != -1) return -2;
        color = (int)i;
    }
    return color;
}

}  // namespace

long long seq_count(const Partition& core, const Partition& lambda, int p,
                    const std::optional<std::vector<int>>& colors) {
    if (!is_strict(lambda) || bar_core(lambda, p) != core)
        throw std::invalid_argument("lambda must be strict with the given core");
    const int d = bar_weight(lambda, p);
    if (colors && (int)colors->size() != d) throw std::invalid_argument("color sequence of the wrong length");
    std::vector<std::vector<Partition>> levels(d + 1);
    for (int c = 0; c <= d; ++c) levels[c] = strict_block_partitions(core, p, c);
    std::map<Partition, long long> ways{{core, 1}};
    for (int c = 1; c <= d; ++c) {
        std::map<Partition, long long> next;
        for (const auto& mu : levels[c]) {
            if (!contains(lambda, mu)) continue;
            const auto qmu = bar_quotient(mu, p);
            long long w = 0;
            for (const auto& [nu, count] : ways) {
                if (!contains(mu, nu)) continue;
                if (colors && step_color(bar_quotient(nu, p), qmu) != (*colors)[c - 1]) continue;
                w += count;
            }
            if (w) next[mu] = w;
        }
        ways.swap(next);
    }
    auto it = ways.find(lambda);
    return it == ways.end() ? 0 : it->second;
}

long long seq_count_formula(const Partition& lambda, int p, const std::optional<std::vector<int>>& colors) {
    const auto quot = bar_quotient(lambda, p);
    std::vector<int> sizes;
    for (const auto& c : quot) sizes.push_back(partition_size(c));
    long long prod = strict_kostka(quot[0]);
    for (size_t j = 1; j < quot.size(); ++j) prod *= kostka(quot[j]);
    if (!colors) return multinomial(sizes) * prod;
    std::vector<int> counts(quot.size(), 0);
    for (int c : *colors) {
        if (c < 0 || c >= (int)quot.size()) return 0;
        ++counts[c];
    }
    return counts == sizes ? prod : 0;
}

}  // namespace spinblock

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "spinblock/dims.hpp"
#include "spinblock/fock.hpp"
#include "spinblock/partitions.hpp"
#include "spinblock/root_datum.hpp"
#include "spinblock/spin_blocks.hpp"
#include "spinblock/super_algebra.hpp"
#include "spinblock/tableaux.hpp"

using namespace spinblock;

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

struct Outcome {
    bool ok = true;
    std::string note;
};

int failures = 0;

// Runs one criterion, prints a single PASS/FAIL line and enforces the time limit (seconds, 0 for none).
void criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
        out.ok = false;
        out.note += (out.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!out.ok) ++failures;
    char bound[32] = "";
    if (limit > 0) std::snprintf(bound, sizeof bound, ", limit %g s", limit);
    std::printf("%s %2d %s (%.3f s%s%s)\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, bound,
                out.note.empty() ? "" : (": " + out.note).c_str());
    std::fflush(stdout);
}

std::vector<std::vector<int>> all_words(int len, int ell) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int i = 0; i <= ell; ++i) {
                next.push_back(w);
                next.back().push_back(i);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> random_word(std::mt19937& rng, int len, int ell) {
    std::vector<int> w(len);
    for (auto& x : w) x = (int)(rng() % (ell + 1));
    return w;
}

Outcome core_quotient() {
    const Partition lam{16, 11, 10, 10, 9, 4, 1};
    const bool ok = bar_core(lam, 5) == Partition{1} && bar_quotient(lam, 5) == Multipartition{{2, 2}, {3, 3, 2}, {}};
    return {ok, ""};
}

Outcome graded_dims() {
    const RootVector t1 = RootVector::from_coords(1, {2, 1});
    const RootVector t2 = RootVector::from_coords(1, {3, 1});
    const RootVector t3 = RootVector::from_coords(1, {4, 2});
    const std::vector<int> wi{0, 1, 0, 0, 1, 0}, wj{0, 1, 0, 0, 0, 1};
    const LaurentPoly a = (qp(5) + qp(3) + qp(1)) * (1 + qp(2));
    const LaurentPoly b = (qp(1) + qp(-1) + qp(-3)) * (1 + qp(2));
    const LaurentPoly s = 1 + qp(2);
    const LaurentPoly dii = s * (qp(2) * s).pow(2) + (qp(1) * s).pow(2) + ((qp(3) + qp(1)) * s).pow(2) +
                            s * (1 - qp(4)) * s.pow(2) + s * (qp(1) + qp(-1)).pow(2);
    bool ok = true;
    ok &= graded_dim(1, t1, {0, 1, 0}, {0, 1, 0}, 3) == 1 + qp(2) + qp(4);
    ok &= graded_dim(1, t2, {0, 1, 0, 0}, {0, 1, 0, 0}, 3) == (1 + qp(2) + qp(4)) * (qp(1) + qp(-1)).pow(2);
    ok &= graded_dim(1, t3, wj, wj, 3) == a * a + b * b;
    ok &= graded_dim(1, t3, wi, wi, 3) == dii;
    return {ok, ""};
}

Outcome specialization() {
    std::mt19937 rng(31);
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int p = trial % 2 ? 5 : 3;
        const int level = 1 + (trial / 2) % 2;
        const int ell = ell_of(p);
        const std::vector<int> wi = random_word(rng, 1 + (int)(rng() % 6), ell);
        std::vector<int> wj = wi;
        std::shuffle(wj.begin(), wj.end(), rng);
        const RootVector theta = word_content(wi, ell);
        if (graded_dim(level, theta, wi, wj, p).at_one() != ungraded_dim(level, theta, wi, wj, p)) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches"};
}

Outcome fock_forms() {
    long long pairs = 0, bad = 0;
    std::mt19937 rng(47);
    for (int p : {3, 5})
        for (int level : {1, 2}) {
            const int ell = ell_of(p);
            for (int len = 0; len <= 5; ++len) {
                std::map<RootVector, std::vector<std::vector<int>>> by_content;
                for (const auto& w : all_words(len, ell)) by_content[word_content(w, ell)].push_back(w);
                for (const auto& [theta, ws] : by_content)
                    for (const auto& a : ws)
                        for (const auto& b : ws) {
                            ++pairs;
                            if (fv_form(a, b, level, p, FormMode::Direct) != fv_form(a, b, level, p, FormMode::TableauSum))
                                ++bad;
                        }
            }
            for (int trial = 0; trial < 50; ++trial) {
                const auto a = random_word(rng, 6, ell);
                auto b = a;
                std::shuffle(b.begin(), b.end(), rng);
                ++pairs;
                if (fv_form(a, b, level, p, FormMode::Direct) != fv_form(a, b, level, p, FormMode::TableauSum)) ++bad;
            }
        }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome fock_example() {
    FockVector want(5, 1);
    want.add({{6, 5, 2}}, 1 - qp(4));
    want.add({{5, 5, 2, 1}}, LaurentPoly(1));
    return {apply_F(0, FockVector::basis({{5, 5, 2}}, 5)) == want, ""};
}

Outcome commutation() {
    long long checks = 0, bad = 0;
    for (int p : {3, 5})
        for (int level : {1, 2})
            for (int n = 0; n <= 8; ++n)
                for (const auto& lam : p_strict_multipartitions(level, n, p)) {
                    const FockVector u = FockVector::basis(lam, p);
                    for (int i = 0; i <= ell_of(p); ++i)
                        for (int j = 0; j <= ell_of(p); ++j) {
                            ++checks;
                            const FockVector lhs = apply_E(i, apply_F(j, u)) - apply_F(j, apply_E(i, u));
                            FockVector rhs(p, level);
                            if (i == j) {
                                const int h = half_norm(ell_of(p), i);
                                const int a = (int)t_exponent(i, lam, p);
                                rhs = (qp(a) - qp(-a)).divide_exact(qp(h) - qp(-h)) * u;
                            }
                            if (lhs != rhs) ++bad;
                        }
                }
    return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"};
}

Outcome cuspidal() {
    bool ok = true;
    for (int ell = 1; ell <= 3; ++ell) {
        ConeOracle oracle(ell);
        std::set<std::vector<int>> found;
        for (const auto& w : words_of_content(RootVector::delta(ell)))
            if (is_cuspidal(w, ell, oracle)) found.insert(w);
        ok &= found == cuspidal_shuffle_set(ell);
    }
    return {ok, ""};
}

Outcome weight_d_dims() {
    bool ok = true;
    for (int p : {3, 5, 7})
        for (int d = 0; d <= 4; ++d) {
            long long closed = factorial(d);
            for (int k = 0; k < d; ++k) closed *= 2 * p - 3;
            const long long wr = d == 0 ? 1 : (long long)wreath(build_A(ell_of(p)), d)->dim();
            ok &= dim_Yd_closed(p, d) == closed && dim_Yd_sum(p, d) == closed && wr == closed;
        }
    return {ok, ""};
}

Outcome strict_kostka_identity() {
    bool ok = true;
    for (int n = 0; n <= 10; ++n) {
        long long total = 0;
        for (const auto& lam : partitions_of(n)) {
            if (!is_strict(lam)) continue;
            const long long k = strict_kostka(lam);
            total += (1LL << (n - (int)lam.size())) * k * k;
        }
        ok &= total == factorial(n);
    }
    return {ok, ""};
}

// Counts shapes where the sequence count and the product formula disagree, with and without colors.
std::pair<long long, long long> seq_mismatches(const Partition& core, int p, int max_d) {
    long long shapes = 0, bad = 0;
    for (int d = 0; d <= max_d; ++d)
        for (const auto& lam : strict_block_partitions(core, p, d)) {
            ++shapes;
            bool ok = seq_count(core, lam, p) == seq_count_formula(lam, p, std::nullopt);
            std::vector<int> colors(d, 0);
            std::function<void(int)> rec = [&](int k) {
                if (k == d) {
                    ok &= seq_count(core, lam, p, colors) == seq_count_formula(lam, p, colors);
                    return;
                }
                for (int c = 0; c <= ell_of(p); ++c) {
                    colors[k] = c;
                    rec(k + 1);
                }
            };
            rec(0);
            if (!ok) ++bad;
        }
    return {shapes, bad};
}

Outcome slide_sequences() {
    const auto [rs, rb] = seq_mismatches(rouquier_core(5, 3), 5, 3);
    const auto [es, eb] = seq_mismatches(Partition{}, 5, 3);
    return {rb == 0 && eb == 0, "Rouquier core " + std::to_string(rb) + "/" + std::to_string(rs) +
                                    " shapes mismatch, empty core " + std::to_string(eb) + "/" + std::to_string(es) +
                                    " shapes mismatch"};
}

Outcome weight_one() {
    bool ok = true;
    for (int p : {3, 5}) {
        const int ell = ell_of(p);
        const Partition core = rouquier_core(p, 1);
        if (!is_rouquier(core, p, 1)) return {false, "core not 1-Rouquier"};
        for (int level : {1, 2}) {
            for (const auto& u : enumerate_std(Multipartition(level, core), p))
                for (int s = 1; s <= level; ++s)
                    for (int i = 0; i < ell; ++i)
                        for (int k = 0; k <= ell; ++k)
                            ok &= slide_family_degree_sum(core, p, u, i, k, s) == chi_poly(i, k, ell) * qp(2 * (level - s));
            const LaurentPoly base = cyclotomic_dim(level, (long long)level * content(core, p), p);
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < ell; ++j)
                    ok &= gg_truncated_dim(core, p, level, i, j) == base * dim_Y1(level, ell, i, j);
        }
    }
    return {ok, ""};
}

Outcome superblock_labels() {
    bool ok = true;
    for (int p : {3, 5})
        for (int n = 1; n <= 6; ++n) {
            const auto blocks = superblocks(n, p);
            long long total = 0;
            std::set<RootVector> labels;
            for (const auto& b : blocks) {
                total += b.dimension;
                labels.insert(b.theta);
            }
            std::set<RootVector> want;
            std::map<RootVector, std::set<Partition>> cores;
            for (const auto& lam : p_strict_partitions(n, p)) {
                want.insert(content(lam, p));
                cores[content(lam, p)].insert(bar_core(lam, p));
            }
            ok &= total == factorial(n) && labels == want;
            std::set<Partition> seen;
            for (const auto& [theta, cs] : cores) ok &= cs.size() == 1 && seen.insert(*cs.begin()).second;
        }
    return {ok, ""};
}

Outcome algebra_engine() {
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
        const auto a = build_A(k);
        ok &= associative_on_basis(*a) && associative_on_basis(*build_B(k)) && associative_on_basis(*clifford(k));
        ok &= check_zigzag_iso(k).ok();
        ok &= gram_determinant(*a, zigzag_trace(*a, k)) != Fraction(0);
    }
    std::mt19937 rng(7);
    for (int ell = 1; ell <= 2; ++ell)
        for (int d = 1; d <= 3; ++d) {
            AffineZigzag h(ell, d);
            std::vector<HdElement> gens;
            for (int t = 1; t <= d; ++t) {
                gens.push_back(h.z(t));
                for (std::size_t b = 0; b < h.base().dim(); ++b) gens.push_back(h.slot(t, b));
            }
            for (int r = 1; r < d; ++r) gens.push_back(h.s(r));
            for (int trial = 0; trial < 200; ++trial) {
                const HdElement& x = gens[rng() % gens.size()];
                const HdElement& y = gens[rng() % gens.size()];
                const HdElement& z = gens[rng() % gens.size()];
                ok &= h.multiply(h.multiply(x, y), z) == h.multiply(x, h.multiply(y, z));
            }
        }
    return {ok, ""};
}

Outcome invariants() {
    bool ok = true;
    long long shapes = 0;
    for (int p : {3, 5, 7}) {
        const int ell = ell_of(p);
        for (int n = 0; n <= 12; ++n)
            for (const auto& lam : p_strict_partitions(n, p)) {
                ++shapes;
                long long total = 0;
                for (int i = 0; i <= ell; ++i) {
                    const auto ns = node_sets({lam}, p, i);
                    total += dual_mark(ell, i) * ((long long)ns.addable.size() - (long long)ns.removable.size());
                }
                ok &= total == 1;
                const auto b = runner_counts(lam, p);
                long long rhs = 0;
                for (int i = ell + 1; i <= p - 1; ++i) rhs += (long long)(p - i) * b[i];
                for (int i = 1; i <= ell; ++i) rhs -= (long long)i * b[i];
                ok &= p * residue_count(lam, p, ell) - n == rhs;
            }
    }
    return {ok, std::to_string(shapes) + " shapes"};
}

Outcome sergeev_levelone() {
    bool ok = true;
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n) ok &= sergeev_iso_check(n, p) && levelone_jm_check(n, p);
    return {ok, ""};
}

}  // namespace

int main() {
    criterion(1, "core and quotient of the worked shape", 0.1, core_quotient);
    criterion(2, "graded dimensions of small blocks", 5, graded_dims);
    criterion(3, "graded dimension at q = 1 equals ungraded dimension", 60, specialization);
    criterion(4, "Fock form direct versus tableau sum", 120, fock_forms);
    criterion(5, "worked F action on the Fock space", 0, fock_example);
    criterion(6, "E F commutation identity on basis vectors", 60, commutation);
    criterion(7, "cuspidal words of content delta", 30, cuspidal);
    criterion(8, "weight d dimension identities", 60, weight_d_dims);
    criterion(9, "strict Kostka identity", 30, strict_kostka_identity);
    criterion(10, "slide sequence counts", 0, slide_sequences);
    criterion(11, "weight one RoCK dimensions", 300, weight_one);
    criterion(12, "superblock labels and dimensions", 600, superblock_labels);
    criterion(13, "algebra engine", 60, algebra_engine);
    criterion(14, "defect and residue count invariants", 60, invariants);
    criterion(15, "Sergeev and level one checks", 60, sergeev_levelone);
    std::printf("%d of 15 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

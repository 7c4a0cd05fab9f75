#include <doctest.h>

#include <random>

#include "spinblock/partitions.hpp"

using namespace spinblock;

namespace {

// Core read off the abacus: each pair of runners keeps only its surplus beads.
Partition abacus_core(const Partition& lambda, int p) {
    auto b = runner_counts(lambda, p);
    Partition out;
    for (int j = 1; j < p; ++j) {
        const int keep = b[j] - std::min(b[j], b[p - j]);
        for (int k = 0; k < keep; ++k) out.push_back(j + p * k);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Greedy removal in a random order.
Partition shuffled_core(const Partition& lambda, int p, std::mt19937& rng) {
    std::vector<int> parts;
    for (int x : lambda)
        if (x % p) parts.push_back(x);
    for (;;) {
        std::vector<std::pair<int, int>> moves;  // (a, b): b=-1 subtract p from a, else remove pair
        for (size_t a = 0; a < parts.size(); ++a) {
            const int x = parts[a];
            if (x > p && std::find(parts.begin(), parts.end(), x - p) == parts.end()) moves.push_back({(int)a, -1});
            for (size_t b = a + 1; b < parts.size(); ++b)
                if (x + parts[b] == p) moves.push_back({(int)a, (int)b});
        }
        if (moves.empty()) break;
        auto [a, b] = moves[rng() % moves.size()];
        if (b < 0) {
            parts[a] -= p;
        } else {
            parts.erase(parts.begin() + b);
            parts.erase(parts.begin() + a);
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

}  // namespace

TEST_CASE("worked example") {
    Partition lam{16, 11, 10, 10, 9, 4, 1};
    CHECK(is_p_strict(lam, 5));
    CHECK_FALSE(is_p_strict({2, 2}, 3));
    CHECK(is_p_strict({}, 3));
    CHECK(is_restricted({}, 3));
    CHECK(bar_core(lam, 5) == Partition{1});
    CHECK(bar_weight(lam, 5) == 12);
    CHECK(bar_quotient(lam, 5) == Multipartition{{2, 2}, {3, 3, 2}, {}});
    CHECK(quotient_inverse({1}, {{2, 2}, {3, 3, 2}, {}}, 5) == lam);
    Abacus a = to_abacus(lam, 5, 10);
    CHECK(a.at(0) == 3);
    CHECK(a.at(10) == 2);
    CHECK(a.at(16) == 1);
    CHECK(from_abacus(a) == lam);
    CHECK(to_abacus({}, 3, 3).at(0) == 3);
}

TEST_CASE("residues, content and norms") {
    CHECK(content({3}, 3) == RootVector::from_coords(1, {2, 1}));
    std::vector<int> row;
    for (int c = 1; c <= 5; ++c) row.push_back(residue(c, 5));
    CHECK(row == std::vector<int>{0, 1, 2, 1, 0});
    CHECK(norm_poly({3}, 3) == 1 + LaurentPoly::q(2));
    CHECK(norm_poly({2, 1}, 3) == LaurentPoly(1));
    CHECK(norm_poly({3, 3}, 3) == (1 + LaurentPoly::q(2)) * (1 - LaurentPoly::q(4)));
}

TEST_CASE("slides") {
    Abacus a = to_abacus({6, 1}, 5, 3);
    CHECK(from_abacus(slide(a, 6, SlideDirection::Down, true)) == Partition{11, 1});
    CHECK_THROWS(slide(a, 1, SlideDirection::Down, false));
    CHECK(slide(slide(a, 6, SlideDirection::Down, true), 11, SlideDirection::Up, true) == a);
    Abacus z = to_abacus({5}, 5, 3);
    CHECK_NOTHROW(slide(z, 0, SlideDirection::Down, false));
    CHECK_THROWS(slide(z, 0, SlideDirection::Down, true));
}

TEST_CASE("core is order independent and matches the abacus") {
    std::mt19937 rng(7);
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 14; ++n)
            for (auto& lam : p_strict_partitions(n, p)) {
                auto core = bar_core(lam, p);
                CHECK(core == abacus_core(lam, p));
                CHECK(core == shuffled_core(lam, p, rng));
                CHECK(is_bar_core(core, p));
                CHECK((n - partition_size(core)) % p == 0);
                // quotient round trip
                auto q = bar_quotient(lam, p);
                CHECK(partition_size(q) == bar_weight(lam, p));
                CHECK(quotient_inverse(core, q, p) == lam);
                // abacus round trip
                auto N = default_bead_count(lam, p);
                CHECK(from_abacus(to_abacus(lam, p, N)) == lam);
            }
}

TEST_CASE("residue count identity") {
    for (int p : {3, 5, 7}) {
        const int ell = ell_of(p);
        for (int n = 0; n <= 12; ++n)
            for (auto& lam : p_strict_partitions(n, p)) {
                auto b = runner_counts(lam, p);
                long long rhs = 0;
                for (int i = ell + 1; i <= p - 1; ++i) rhs += (long long)(p - i) * b[i];
                for (int i = 1; i <= ell; ++i) rhs -= (long long)i * b[i];
                CHECK(p * residue_count(lam, p, ell) - n == rhs);
            }
    }
}

TEST_CASE("core and content determine each other") {
    for (int p : {3, 5})
        for (int n = 0; n <= 10; ++n) {
            auto parts = p_strict_partitions(n, p);
            for (auto& a : parts)
                for (auto& b : parts)
                    CHECK((bar_core(a, p) == bar_core(b, p)) == (content(a, p) == content(b, p)));
        }
}

TEST_CASE("cores are exactly the contents without a delta to subtract") {
    for (int p : {3, 5}) {
        const RootVector delta = RootVector::delta(ell_of(p));
        std::set<RootVector> contents;
        for (int n = 0; n <= 10; ++n)
            for (auto& l : p_strict_partitions(n, p)) contents.insert(content(l, p));
        for (int n = p; n <= 10; ++n)
            for (auto& l : p_strict_partitions(n, p)) {
                RootVector smaller = content(l, p) - delta;
                CHECK(is_bar_core(l, p) == !contents.count(smaller));
            }
    }
}

TEST_CASE("block enumeration") {
    CHECK(block_partitions({}, 3, 1) == std::vector<Partition>{{3}, {2, 1}});
    CHECK(block_partitions({2}, 5, 0) == std::vector<Partition>{{2}});
    for (const Partition& rho : {Partition{}, Partition{1}})
        for (int d = 0; d <= 4; ++d) {
            auto blocks = block_partitions(rho, 5, d);
            CHECK(blocks.size() == multipartitions(3, d).size());
            std::set<Partition> seen(blocks.begin(), blocks.end());
            CHECK(seen.size() == blocks.size());
            for (auto& l : blocks) {
                CHECK(bar_core(l, 5) == rho);
                CHECK(content(l, 5) == content(rho, 5) + (long long)d * RootVector::delta(2));
            }
            // exhaustive count of p-strict partitions with that core
            int count = 0;
            for (auto& l : p_strict_partitions(partition_size(rho) + 5 * d, 5)) count += bar_core(l, 5) == rho;
            CHECK(count == (int)blocks.size());
        }
}

TEST_CASE("rouquier cores") {
    for (int p : {3, 5, 7})
        for (int d = 0; d <= 4; ++d) {
            auto rho = rouquier_core(p, d);
            CHECK(is_bar_core(rho, p));
            CHECK(is_rouquier(rho, p, d));
            auto b = runner_counts(rho, p);
            for (int j = 1; j <= ell_of(p); ++j) CHECK(b[j] == std::max(0, d + (j - 1) * (d - 1)));
        }
    CHECK_FALSE(is_rouquier({}, 5, 1));
    CHECK(is_rouquier({}, 5, 0));
    CHECK_THROWS(is_rouquier({4, 1}, 5, 1));
    CHECK(is_rouquier({6, 1}, 5, 0));
}

TEST_CASE("restricted partitions in Rouquier blocks come from slides on runners below l") {
    for (int p : {3, 5})
        for (int d = 1; d <= 3; ++d) {
            auto rho = rouquier_core(p, d);
            for (int c = 0; c <= d; ++c)
                for (auto& lam : block_partitions(rho, p, c)) {
                    auto q = bar_quotient(lam, p);
                    CHECK(is_restricted(lam, p) == q[ell_of(p)].empty());
                }
        }
}

#include <doctest.h>

#include <algorithm>

#include "spinblock/tableaux.hpp"

using namespace spinblock;

namespace {

const LaurentPoly q1 = LaurentPoly::q(1);

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

bool has(const std::vector<Node>& v, Node n) { return std::find(v.begin(), v.end(), n) != v.end(); }

}  // namespace

TEST_CASE("node sets of small shapes") {
    auto ns = node_sets({{5, 5, 2}}, 5, 0);
    CHECK(ns.proper_removable.size() == 1);
    CHECK(has(ns.proper_removable, {2, 5, 1}));
    CHECK(ns.proper_addable.size() == 2);
    CHECK(has(ns.proper_addable, {4, 1, 1}));
    CHECK(has(ns.proper_addable, {1, 6, 1}));
    auto e = node_sets({{}}, 3, 0);
    CHECK(e.proper_addable.size() == 1);
    CHECK(e.removable.empty());
    CHECK(node_sets({{}}, 3, 1).addable.empty());
}

TEST_CASE("the long worked shape") {
    Multipartition lam{{16, 11, 10, 10, 9, 5, 1}};
    auto ns0 = node_sets(lam, 5, 0);
    CHECK(has(ns0.removable, {1, 15, 1}));
    CHECK_FALSE(has(ns0.proper_removable, {1, 15, 1}));
    CHECK(ns0.removable.size() == 5);
    CHECK(ns0.addable.size() == 2);
    CHECK(d_down({7, 1, 1}, lam, 5) == qp(2));
    CHECK(d_down({6, 5, 1}, lam, 5) == q1 * (1 + qp(2)));
    CHECK(d_down({5, 9, 1}, lam, 5) == qp(-4));
    CHECK(d_down({2, 11, 1}, lam, 5) == qp(2));
    CHECK(d_down({1, 16, 1}, lam, 5) == LaurentPoly(1));
    CHECK(d_up({7, 2, 1}, lam, 5) == LaurentPoly(1));
    CHECK(d_up({6, 6, 1}, lam, 5) == qp(-2) * (1 + qp(2)));
    CHECK(d_up({5, 10, 1}, lam, 5) == qp(-1));
    CHECK(d_up({2, 12, 1}, lam, 5) == LaurentPoly(1));
    CHECK(d_up({1, 17, 1}, lam, 5) == qp(2));
}

TEST_CASE("degree factors of small examples") {
    CHECK(d_up({4, 1, 1}, {{5, 5, 2}}, 5) == LaurentPoly(1));
    CHECK(d_up({1, 6, 1}, {{5, 5, 2}}, 5) == 1 - qp(4));
    CHECK(d_up({1, 6, 1}, {{5}}, 5) == 1 + qp(2));
    Multipartition two{{5, 5}, {6}};
    CHECK(d_up({1, 6, 1}, two, 5) == qp(-1) * (1 - qp(4)));
    CHECK(d_up({2, 1, 2}, two, 5) == LaurentPoly(1));
    CHECK(d_up({3, 1, 1}, two, 5) == qp(-1));
    CHECK(d_down({1, 6, 2}, two, 5) == qp(-1));
    CHECK(d_down({2, 5, 1}, two, 5) == qp(-1) * (1 - qp(4)));
    CHECK_THROWS(d_up({1, 3, 1}, {{1}}, 5));
}

TEST_CASE("tableaux and degrees at p = 3") {
    auto s = enumerate_std({{3}}, 3);
    REQUIRE(s.size() == 1);
    CHECK(tableau_degree(s[0], 3) == q1);
    CHECK(word_of(s[0], 3) == std::vector<int>{0, 1, 0});
    auto t = enumerate_std({{2, 1}}, 3);
    REQUIRE(t.size() == 1);
    CHECK(tableau_degree(t[0], 3) == LaurentPoly(1));
    CHECK(word_of(t[0], 3) == std::vector<int>{0, 1, 0});
    auto u = enumerate_std({{3, 1}}, 3);
    REQUIRE(u.size() == 2);
    std::vector<LaurentPoly> degs;
    for (auto& x : u) {
        CHECK(word_of(x, 3) == std::vector<int>{0, 1, 0, 0});
        degs.push_back(tableau_degree(x, 3));
    }
    std::sort(degs.begin(), degs.end());
    std::vector<LaurentPoly> want{qp(-1), q1};
    std::sort(want.begin(), want.end());
    CHECK(degs == want);
    CHECK(enumerate_std({{}}, 3).size() == 1);
    CHECK(enumerate_std({{3}}, 3, std::vector<int>{0, 1, 1}).empty());
}

TEST_CASE("defect identity over all small p-strict partitions") {
    for (int p : {3, 5, 7}) {
        const int ell = ell_of(p);
        for (int n = 0; n <= 12; ++n)
            for (auto& lam : p_strict_partitions(n, p)) {
                long long total = 0;
                for (int i = 0; i <= ell; ++i) {
                    auto ns = node_sets({lam}, p, i);
                    const long long diff = (long long)ns.addable.size() - (long long)ns.removable.size();
                    CHECK(diff == coroot_pairing_lambda0_minus(content(lam, p), i));
                    total += dual_mark(ell, i) * diff;
                }
                CHECK(total == 1);
            }
    }
}

TEST_CASE("degree recursion and standardness") {
    for (int p : {3, 5})
        for (int n = 0; n <= 7; ++n)
            for (auto& lam : p_strict_multipartitions(2, n, p))
                for (auto& t : enumerate_std(lam, p)) {
                    CHECK(is_p_standard(t, p));
                    if (n == 0) continue;
                    Tableau shorter{remove_node(lam, t.filling.back()), t.filling};
                    shorter.filling.pop_back();
                    CHECK(tableau_degree(t, p) ==
                          d_up(t.filling.back(), shorter.shape, p) * tableau_degree(shorter, p));
                    // adding then removing the same node: d_up and d_down are defined on opposite shapes
                    CHECK_NOTHROW(d_down(t.filling.back(), lam, p));
                }
}

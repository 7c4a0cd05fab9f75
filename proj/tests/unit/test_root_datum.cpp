#include <doctest.h>

#include "spinblock/laurent.hpp"
#include "spinblock/root_datum.hpp"

using namespace spinblock;

TEST_CASE("laurent arithmetic") {
    LaurentPoly a = 1 + LaurentPoly::q(2);
    LaurentPoly b = LaurentPoly::q(-1) - 3;
    CHECK((a * b).to_string() == "q^-1 - 3 + q - 3*q^2");
    CHECK((a * b).divide_exact(a) == b);
    CHECK_THROWS(a.divide_exact(LaurentPoly(2) + LaurentPoly::q(1)));
    CHECK(quantum_int(3) == LaurentPoly::q(-2) + 1 + LaurentPoly::q(2));
    CHECK(a.bar().shifted(2) == a);
    CHECK((a * a).at_one() == 4);
}

TEST_CASE("gram matrix and heights") {
    for (int ell = 1; ell <= 5; ++ell) {
        auto d = RootVector::delta(ell);
        CHECK(pairing(d, d) == 0);
        CHECK(d.height() == Fraction(2 * ell + 1));
        for (int i = 0; i <= ell; ++i) CHECK(pairing(d, RootVector::simple(ell, i)) == 0);
        CHECK(pairing(RootVector::simple(ell, 0), RootVector::simple(ell, 0)) == 2);
        CHECK(pairing(RootVector::simple(ell, ell), RootVector::simple(ell, ell)) == 8);
        // <K, alpha_i> = 0 and <K, Lambda_0> = 1.
        long long k_lambda0 = dual_mark(ell, 0) * 1;
        CHECK(k_lambda0 == 1);
        for (int i = 0; i <= ell; ++i) {
            long long s = 0;
            for (int j = 0; j <= ell; ++j)
                s += dual_mark(ell, j) * 2 * pairing(RootVector::simple(ell, j), RootVector::simple(ell, i)) /
                     (2 * half_norm(ell, j));
            CHECK(s == 0);
        }
    }
}

TEST_CASE("positive roots") {
    for (int ell = 1; ell <= 4; ++ell) {
        auto h1 = positive_roots_up_to(1, ell);
        CHECK((int)h1.size() == ell + 1);
        const int p = p_of(ell);
        auto roots = positive_roots_up_to(4 * p, ell);
        std::set<RootVector> seen;
        int deltas = 0;
        for (auto& r : roots) {
            CHECK(seen.insert(r.root).second);
            CHECK(r.root.in_q_plus());
            if (r.root == RootVector::delta(ell)) ++deltas;
            // Real roots have positive norm, imaginary ones zero.
            if (r.kind == RootKind::Real)
                CHECK(pairing(r.root, r.root) > 0);
            else
                CHECK(pairing(r.root, r.root) == 0);
        }
        CHECK(deltas == 1);
        std::vector<long long> all(ell + 1, 1);
        CHECK(seen.count(RootVector::from_coords(ell, all)));
        // classify agrees with the preorder against delta
        for (auto& r : roots) {
            auto side = classify_vs_delta(r.root);
            auto cmp = compare_preorder(r.root, RootVector::delta(ell));
            if (side == DeltaSide::Imaginary) CHECK(cmp == Order::Equal);
            if (side == DeltaSide::Above) CHECK(cmp == Order::Greater);
            if (side == DeltaSide::Below) CHECK(cmp == Order::Less);
        }
        CHECK(classify_vs_delta(RootVector::simple(ell, 0)) == DeltaSide::Above);
        CHECK(classify_vs_delta(RootVector::delta(ell) - RootVector::simple(ell, 0)) == DeltaSide::Below);
        CHECK(compare_preorder(RootVector::delta(ell), 2 * RootVector::delta(ell)) == Order::Equal);
    }
}

TEST_CASE("convexity of the preorder on sums") {
    for (int ell = 1; ell <= 3; ++ell) {
        const int p = p_of(ell);
        auto roots = positive_roots_up_to(2 * p, ell);
        std::set<RootVector> all;
        for (auto& r : positive_roots_up_to(4 * p, ell)) all.insert(r.root);
        for (auto& b : roots)
            for (auto& g : roots) {
                if (!all.count(b.root + g.root)) continue;
                if (compare_preorder(b.root, g.root) == Order::Greater) continue;
                CHECK(compare_preorder(b.root, b.root + g.root) != Order::Greater);
                CHECK(compare_preorder(b.root + g.root, g.root) != Order::Greater);
            }
    }
}

TEST_CASE("cuspidal words of content delta") {
    for (int ell = 1; ell <= 3; ++ell) {
        ConeOracle oracle(ell);
        std::set<std::vector<int>> found;
        for (auto& w : words_of_content(RootVector::delta(ell)))
            if (is_cuspidal(w, ell, oracle)) found.insert(w);
        CHECK(found == cuspidal_shuffle_set(ell));
    }
    auto g0 = gg_word({0}, 2), g1 = gg_word({1}, 2);
    CHECK(format_word(g0.expand(), 2) == "21100");
    CHECK(format_word(g1.expand(), 2) == "21001");
    CHECK(is_cuspidal(g0.expand(), 2));
    CHECK(is_cuspidal(g1.expand(), 2));
    CHECK(word_content(gg_word({0, 1}, 2), 2) == 2 * RootVector::delta(2));
}

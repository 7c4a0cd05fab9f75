#include <doctest.h>

#include <functional>
#include <set>

#include "spinblock/partitions.hpp"
#include "spinblock/spin_blocks.hpp"

using namespace spinblock;

namespace {

FqVec gen(const Fp2& f, const TwistedGroup& t, int r) { return tn_generator(f, t, r); }

FqVec mul(const Fp2& f, const TwistedGroup& t, const FqVec& x, const FqVec& y) { return tn_multiply(f, t, x, y); }

}  // namespace

TEST_CASE("field with p^2 elements") {
    for (int p : {3, 5, 7, 11}) {
        const Fp2 f(p);
        CHECK(f.sqrt(f.from_int(f.nonresidue())).has_value());
        for (long long x = 1; x < p; ++x) {
            // every element of the prime field is a square in F_{p^2}
            const auto r = f.sqrt(f.from_int(x));
            REQUIRE(r.has_value());
            CHECK(f.mul(*r, *r) == f.from_int(x));
        }
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b) {
                const Fq x{a, b};
                if (f.is_zero(x)) continue;
                CHECK(f.mul(x, f.inv(x)) == f.from_int(1));
            }
        CHECK(f.sqrt(f.from_int(-1)).has_value());
        CHECK(f.sqrt(f.from_int(-2)).has_value());
    }
    CHECK(Fp2(3).nonresidue() == 2);
    CHECK(Fp2(7).nonresidue() == 3);
    CHECK_THROWS(Fp2(9));
}

TEST_CASE("twisted group relations") {
    const Fp2 f(5);
    const TwistedGroup t(4);
    CHECK(t.dim() == 24);
    const FqVec one = fq_basis(f, 0);
    CHECK(mul(f, t, gen(f, t, 1), gen(f, t, 1)) == one);
    CHECK(mul(f, t, gen(f, t, 1), gen(f, t, 3)) == fq_scale(f, mul(f, t, gen(f, t, 3), gen(f, t, 1)), f.from_int(-1)));
    const FqVec t12 = mul(f, t, gen(f, t, 1), gen(f, t, 2));
    CHECK(mul(f, t, mul(f, t, t12, t12), t12) == one);
    for (int n = 1; n <= 5; ++n) {
        const TwistedGroup g(n);
        for (std::size_t u = 0; u < g.dim(); ++u) {
            CHECK(g.word(u).size() % 2 == (std::size_t)g.bidegree(u).parity);
            CHECK(perm_sign(g.perm(u)) == (g.word(u).size() % 2 ? -1 : 1));
            for (int r = 1; r < n; ++r) {
                auto [v, s] = g.rmul_generator(u, r);
                CHECK(g.perm(v) == compose(g.perm(u), transposition(n, r)));
                auto [back, s2] = g.rmul_generator(v, r);
                CHECK(back == u);
                CHECK(s * s2 == 1);
            }
        }
    }
}

TEST_CASE("twisted group is associative and satisfies the relations on every basis element") {
    for (int n = 2; n <= 4; ++n) {
        const TwistedGroup g(n);
        CHECK(associative_on_basis(g));
        const Fp2 f(3);
        for (std::size_t u = 0; u < g.dim(); ++u) {
            const FqVec x = fq_basis(f, u);
            for (int r = 1; r < n; ++r) {
                CHECK(tn_generator_product(f, g, tn_generator_product(f, g, x, r), r) == x);
                for (int s = r + 2; s < n; ++s)
                    CHECK(mul(f, g, x, mul(f, g, gen(f, g, r), gen(f, g, s))) ==
                          fq_scale(f, mul(f, g, x, mul(f, g, gen(f, g, s), gen(f, g, r))), f.from_int(-1)));
                if (r + 1 < n) {
                    FqVec y = x;
                    for (int k = 0; k < 3; ++k) y = tn_generator_product(f, g, tn_generator_product(f, g, y, r), r + 1);
                    CHECK(y == x);
                }
            }
        }
    }
}

TEST_CASE("Jucys-Murphy elements") {
    for (int p : {3, 5}) {
        const Fp2 f(p);
        for (int n = 1; n <= 6; ++n) {
            const TwistedGroup t(n);
            CHECK(jm(f, t, 1).empty());
            if (n >= 2) CHECK(jm(f, t, 2) == gen(f, t, 1));
            for (int r = 1; r <= n; ++r) {
                const FqVec m = jm(f, t, r);
                CHECK(m == jm_closed(f, t, r));
                for (const auto& [w, c] : m) CHECK(t.bidegree(w).parity == 1);
            }
        }
    }
    for (int n = 2; n <= 5; ++n) CHECK(jm_squares_commute(n, 3));
}

TEST_CASE("weight idempotents") {
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n) {
            const Fp2 f(p);
            const TwistedGroup t(n);
            const auto es = weight_idempotents(n, p);
            FqVec total;
            for (std::size_t a = 0; a < es.size(); ++a) {
                total = fq_sum(f, total, es[a].element);
                for (std::size_t b = 0; b < es.size(); ++b) {
                    const FqVec prod = mul(f, t, es[a].element, es[b].element);
                    if (a == b)
                        CHECK(prod == es[a].element);
                    else
                        CHECK(prod.empty());
                }
            }
            CHECK(total == fq_basis(f, 0));
            // each e(i) lies in the span of monomials in the m_r^2
            const auto powers = jm_square_powers(n, p);
            std::vector<FqVec> monomials{fq_basis(f, 0)};
            for (const auto& pw : powers) {
                std::vector<FqVec> next;
                for (const auto& m : monomials)
                    for (const auto& x : pw) next.push_back(mul(f, t, m, x));
                monomials = std::move(next);
            }
            for (const auto& e : es) CHECK(fq_in_span(f, monomials, e.element));
        }
}

TEST_CASE("superblocks of small twisted group algebras") {
    const auto b3 = superblocks(3, 3);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].theta == RootVector::from_coords(1, {2, 1}));
    CHECK(b3[0].dimension == 6);
    for (int p : {3, 5})
        for (int n = 1; n <= 5; ++n) {
            const int ell = ell_of(p);
            const auto blocks = superblocks(n, p);
            long long total = 0;
            std::set<RootVector> labels;
            for (const auto& b : blocks) {
                total += b.dimension;
                labels.insert(b.theta);
                const TwistedGroup t(n);
                for (const auto& [w, c] : b.idempotent) CHECK(t.bidegree(w).parity == 0);
            }
            long long fact = 1;
            for (int k = 2; k <= n; ++k) fact *= k;
            CHECK(total == fact);
            std::set<RootVector> want;
            std::map<RootVector, std::set<Partition>> cores;
            for (const auto& lam : p_strict_partitions(n, p)) {
                want.insert(content(lam, p));
                cores[content(lam, p)].insert(bar_core(lam, p));
            }
            CHECK(labels == want);
            std::set<Partition> seen;
            for (const auto& [theta, cs] : cores) {
                CHECK(cs.size() == 1);
                CHECK(seen.insert(*cs.begin()).second);
            }
            if (n == p) {
                // labels are cont(core) + d delta over bar cores of size n - dp
                std::set<RootVector> alt;
                for (int d = 0; d * p <= n; ++d)
                    for (const auto& rho : p_strict_partitions(n - d * p, p))
                        if (is_bar_core(rho, p)) alt.insert(content(rho, p) + (long long)d * RootVector::delta(ell));
                CHECK(labels == alt);
            }
        }
}

TEST_CASE("twisted wreath superproducts") {
    for (int d = 1; d <= 4; ++d) {
        const auto tw = twisted_wreath(ground_field(), d);
        const TwistedGroup t(d);
        REQUIRE(tw->dim() == t.dim());
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t j = 0; j < t.dim(); ++j) CHECK(tw->multiply_basis(i, j) == t.multiply_basis(i, j));
    }
    const auto c2 = twisted_wreath(clifford(1), 2);
    CHECK(c2->dim() == 8);
    CHECK(associative_on_basis(*c2));
    CHECK(unit_laws(*c2));
    const auto a3 = twisted_wreath(build_A(1), 3);
    CHECK(a3->dim() == 6 * 27);
    CHECK(associative_on_samples(*a3, 300, 7));
}

TEST_CASE("Sergeev isomorphism") {
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n) {
            const auto rep = sergeev_check(ground_field(), n, p);
            CHECK(rep.forward_relations);
            CHECK(rep.backward_relations);
            CHECK(rep.generators_round_trip);
            CHECK(rep.dims_agree);
            CHECK(rep.basis_checked);
            CHECK(rep.basis_round_trip);
        }
    const auto c = sergeev_check(clifford(1), 2, 3);
    CHECK(c.ok());
    CHECK(c.basis_checked);
    CHECK(sergeev_check(build_A(1), 2, 5).ok());
}

TEST_CASE("level one Jucys-Murphy squares") {
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n) CHECK(levelone_jm_check(n, p));
}

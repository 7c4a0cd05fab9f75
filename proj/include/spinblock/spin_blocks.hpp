#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinblock/root_datum.hpp"
#include "spinblock/super_algebra.hpp"

namespace spinblock {

// Element a + b x of F_p[x]/(x^2 - nu).
struct Fq {
    long long a = 0, b = 0;
    friend bool operator==(const Fq&, const Fq&) = default;
    friend auto operator<=>(const Fq&, const Fq&) = default;
};

// The field with p^2 elements; nu is the least quadratic non-residue mod p.
class Fp2 {
public:
    explicit Fp2(int p);
    int p() const { return p_; }
    int nonresidue() const { return nu_; }

    Fq from_int(long long x) const;
    Fq add(Fq x, Fq y) const;
    Fq sub(Fq x, Fq y) const;
    Fq neg(Fq x) const;
    Fq mul(Fq x, Fq y) const;
    Fq inv(Fq x) const;  // throws on zero
    Fq pow(Fq x, long long e) const;
    std::optional<Fq> sqrt(Fq x) const;
    bool is_zero(Fq x) const { return x.a == 0 && x.b == 0; }
    bool in_prime_field(Fq x) const { return x.b == 0; }
    std::string format(Fq x) const;

private:
    long long red(long long x) const;
    int p_, nu_;
};

// Sparse element of an algebra with coefficients in F_{p^2}.
using FqVec = std::map<std::size_t, Fq>;

void fq_add_term(const Fp2& f, FqVec& x, std::size_t k, Fq c);
FqVec fq_from_int(const Fp2& f, const AlgElement& x);
FqVec fq_scale(const Fp2& f, const FqVec& x, Fq c);
FqVec fq_sum(const Fp2& f, const FqVec& x, const FqVec& y);
FqVec fq_diff(const Fp2& f, const FqVec& x, const FqVec& y);
FqVec fq_multiply(const Fp2& f, const SuperAlgebra& alg, const FqVec& x, const FqVec& y);
FqVec fq_basis(const Fp2& f, std::size_t k);

// Twisted group superalgebra of S_n with basis t_w.  Each w has the canonical word
// c_2 c_3 ... c_n with c_k = s_{k-1} s_{k-2} ... s_{j_k}, which fixes all signs.
class TwistedGroup : public SuperAlgebra {
public:
    explicit TwistedGroup(int n);
    int rank() const { return n_; }

    std::size_t dim() const override { return words_.size(); }
    std::string label(std::size_t i) const override;
    Bidegree bidegree(std::size_t i) const override { return {0, (int)(words_.at(i).size() % 2)}; }
    AlgElement multiply_basis(std::size_t i, std::size_t j) const override;
    AlgElement unit() const override { return {{0, 1}}; }

    const std::vector<int>& word(std::size_t i) const { return words_.at(i); }  // 1-based generators
    const Perm& perm(std::size_t i) const { return perms_.at(i); }
    std::size_t index_of(const Perm& w) const;
    std::size_t generator(int r) const;  // index of t_r
    // t_w t_r = sign t_{w'}
    std::pair<std::size_t, int> rmul_generator(std::size_t w, int r) const;
    std::pair<std::size_t, int> product(std::size_t u, std::size_t v) const;

private:
    int n_;
    std::vector<std::vector<int>> words_;
    std::vector<Perm> perms_;
    std::vector<std::size_t> by_rank_;
};

FqVec tn_generator(const Fp2& f, const TwistedGroup& t, int r);
FqVec tn_generator_product(const Fp2& f, const TwistedGroup& t, const FqVec& x, int r);
FqVec tn_multiply(const Fp2& f, const TwistedGroup& t, const FqVec& x, const FqVec& y);
// Odd Jucys-Murphy element by the recursion m_1 = 0, m_{r+1} = -t_r m_r t_r + t_r.
FqVec jm(const Fp2& f, const TwistedGroup& t, int r);
// The same element as the sum over s < r of (-1)^{r-s-1} t_{r-1}...t_{s+1} t_s t_{s+1}...t_{r-1}.
FqVec jm_closed(const Fp2& f, const TwistedGroup& t, int r);
// Left multiplication matrices of the squares m_r^2 commute on the regular module.
bool jm_squares_commute(int n, int p);

struct WeightIdempotent {
    std::vector<int> word;
    FqVec element;
};
// Nonzero e(i) from simultaneous generalized eigenspaces of the m_r^2, eigenvalue i(i+1)/2.
std::vector<WeightIdempotent> weight_idempotents(int n, int p);
// Powers of each m_r^2 up to the degree of its minimal polynomial.
std::vector<std::vector<FqVec>> jm_square_powers(int n, int p);
bool fq_in_span(const Fp2& f, const std::vector<FqVec>& spanning, const FqVec& target);

struct Superblock {
    RootVector theta;
    FqVec idempotent;
    long long dimension = 0;
    std::vector<std::vector<int>> words;
};
std::vector<Superblock> superblocks(int n, int p);

// Twisted wreath superproduct with basis (a_1 x ... x a_d) t_w.
class TwistedWreathAlgebra : public SuperAlgebra {
public:
    TwistedWreathAlgebra(AlgebraPtr a, int d);
    std::size_t dim() const override { return tensors_ * group_.dim(); }
    std::string label(std::size_t i) const override;
    Bidegree bidegree(std::size_t i) const override;
    AlgElement multiply_basis(std::size_t i, std::size_t j) const override;
    AlgElement unit() const override;

    std::size_t index(const std::vector<std::size_t>& tensor, std::size_t w) const;
    std::pair<std::vector<std::size_t>, std::size_t> split(std::size_t k) const;
    const TwistedGroup& group() const { return group_; }
    const SuperAlgebra& base() const { return *a_; }
    int rank() const { return d_; }

private:
    AlgebraPtr a_;
    int d_;
    TwistedGroup group_;
    std::size_t tensors_;
};

std::shared_ptr<TableAlgebra> ground_field();
std::shared_ptr<TwistedWreathAlgebra> twisted_wreath(AlgebraPtr a, int d);

// (A x C_1) wr S_n and (A wr T_n) x C_n related by the generator assignments
// s_r -> t_r (c_r - c_{r+1}) / sqrt(-2) and t_r -> -s_r (c_r - c_{r+1}) / sqrt(-2).
struct SergeevReport {
    bool forward_relations = false;
    bool backward_relations = false;
    bool generators_round_trip = false;
    bool basis_round_trip = false;
    bool basis_checked = false;  // the basis round trip is run only on small algebras
    bool dims_agree = false;
    bool ok() const {
        return forward_relations && backward_relations && generators_round_trip && basis_round_trip && dims_agree;
    }
};
SergeevReport sergeev_check(AlgebraPtr a, int n, int p);
bool sergeev_iso_check(int n, int p);
// The image of phi(x_i)^2 under the Sergeev map equals 2 m_i^2 x 1.
bool levelone_jm_check(int n, int p);

}  // namespace spinblock

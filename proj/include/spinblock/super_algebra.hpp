#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinblock/laurent.hpp"
#include "spinblock/root_datum.hpp"

namespace spinblock {

struct Bidegree {
    int degree = 0;
    int parity = 0;  // 0 or 1
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

using AlgElement = std::map<std::size_t, long long>;

// Finite dimensional graded superalgebra given by a basis and structure constants.
class SuperAlgebra {
public:
    virtual ~SuperAlgebra() = default;
    virtual std::size_t dim() const = 0;
    virtual std::string label(std::size_t i) const = 0;
    virtual Bidegree bidegree(std::size_t i) const = 0;
    virtual AlgElement multiply_basis(std::size_t i, std::size_t j) const = 0;
    virtual AlgElement unit() const = 0;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

template <class C>
void add_term(std::map<std::size_t, C>& x, std::size_t k, const C& c) {
    if (c == C(0)) return;
    auto it = x.find(k);
    if (it == x.end()) {
        x.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == C(0)) x.erase(it);
}

template <class C>
std::map<std::size_t, C> multiply(const SuperAlgebra& alg, const std::map<std::size_t, C>& x,
                                  const std::map<std::size_t, C>& y) {
    std::map<std::size_t, C> r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : alg.multiply_basis(i, j)) add_term(r, k, a * b * C(c));
    return r;
}

template <class C>
std::map<std::size_t, C> basis_element(std::size_t i) {
    return {{i, C(1)}};
}

std::optional<std::size_t> find_label(const SuperAlgebra& alg, const std::string& label);
std::size_t index_of(const SuperAlgebra& alg, const std::string& label);
std::string format_element(const SuperAlgebra& alg, const AlgElement& x);
LaurentPoly graded_dimension(const SuperAlgebra& alg);

// Algebra with an explicit dense multiplication table.
class TableAlgebra : public SuperAlgebra {
public:
    TableAlgebra(std::vector<std::string> labels, std::vector<Bidegree> bidegrees);
    void set_product(std::size_t i, std::size_t j, AlgElement value);
    void set_unit(AlgElement u) { unit_ = std::move(u); }

    std::size_t dim() const override { return labels_.size(); }
    std::string label(std::size_t i) const override { return labels_.at(i); }
    Bidegree bidegree(std::size_t i) const override { return bidegrees_.at(i); }
    AlgElement multiply_basis(std::size_t i, std::size_t j) const override { return table_.at(i * dim() + j); }
    AlgElement unit() const override { return unit_; }

private:
    std::vector<std::string> labels_;
    std::vector<Bidegree> bidegrees_;
    std::vector<AlgElement> table_;
    AlgElement unit_;
};

// Super tensor product, multiplied on demand: (a x b)(a' x b') = (-1)^{|b||a'|} aa' x bb'.
class TensorAlgebra : public SuperAlgebra {
public:
    TensorAlgebra(AlgebraPtr a, AlgebraPtr b);
    std::size_t dim() const override { return a_->dim() * b_->dim(); }
    std::string label(std::size_t i) const override;
    Bidegree bidegree(std::size_t i) const override;
    AlgElement multiply_basis(std::size_t i, std::size_t j) const override;
    AlgElement unit() const override;
    std::size_t index(std::size_t i, std::size_t j) const { return i * b_->dim() + j; }
    std::pair<std::size_t, std::size_t> split(std::size_t k) const { return {k / b_->dim(), k % b_->dim()}; }

private:
    AlgebraPtr a_, b_;
};

// Permutations of {0,...,d-1} stored as image arrays.
using Perm = std::vector<int>;
Perm identity_perm(int d);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& w);
Perm transposition(int d, int r);             // s_r swaps r-1 and r (1-based r)
std::size_t perm_rank(const Perm& w);         // lexicographic rank
Perm perm_unrank(std::size_t rank, int d);
std::vector<Perm> all_perms(int d);
int perm_sign(const Perm& w);

// Sign of the superpermutation moving the factor in position i to position w(i).
int koszul_sign(const Perm& w, const std::vector<int>& parities);
// Left action of w on a tensor of basis labels: returns the sign and the permuted tuple.
std::pair<int, std::vector<std::size_t>> act_on_tensor(const SuperAlgebra& alg, const Perm& w,
                                                       const std::vector<std::size_t>& tensor);

using TensorTerms = std::map<std::vector<std::size_t>, long long>;
// Product of pure tensors in the d-fold super tensor power.
TensorTerms tensor_power_product(const SuperAlgebra& alg, const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& y);

// Wreath superproduct A^{(x)d} (x) FS_d, multiplied on demand.
class WreathAlgebra : public SuperAlgebra {
public:
    WreathAlgebra(AlgebraPtr a, int d);
    std::size_t dim() const override;
    std::string label(std::size_t i) const override;
    Bidegree bidegree(std::size_t i) const override;
    AlgElement multiply_basis(std::size_t i, std::size_t j) const override;
    AlgElement unit() const override;

    std::size_t index(const std::vector<std::size_t>& tensor, const Perm& w) const;
    std::pair<std::vector<std::size_t>, Perm> split(std::size_t k) const;
    int rank() const { return d_; }
    const SuperAlgebra& base() const { return *a_; }

private:
    AlgebraPtr a_;
    int d_;
    std::size_t perms_;
};

// The Brauer tree superalgebra A_l with basis e^j, c^j, a^{k,k+1}, a^{k+1,k}, u.
std::shared_ptr<TableAlgebra> build_A(int ell);
// The Brauer tree algebra B_l on the doubled line of 2l vertices, with path basis.
// Its super structure is the involution b_involution, not a parity on the basis.
std::shared_ptr<TableAlgebra> build_B(int ell);
// Involution of B_l swapping primed and unprimed paths, as a basis permutation.
std::vector<std::size_t> b_involution(const SuperAlgebra& b, int ell);
std::shared_ptr<TableAlgebra> clifford(int n);
std::shared_ptr<TableAlgebra> matrix_super(int m, int n);
AlgebraPtr tensor(AlgebraPtr a, AlgebraPtr b);
std::shared_ptr<WreathAlgebra> wreath(AlgebraPtr a, int d);

// Structural checks.
bool associative_on_basis(const SuperAlgebra& alg);
bool associative_on_samples(const SuperAlgebra& alg, int samples, unsigned seed);
bool unit_laws(const SuperAlgebra& alg);
bool bidegree_additive(const SuperAlgebra& alg);

// Trace form and distinguished element of A_l.
std::vector<long long> zigzag_trace(const SuperAlgebra& a, int ell);
using PairTerms = std::map<std::pair<std::size_t, std::size_t>, long long>;
PairTerms zigzag_nabla(const SuperAlgebra& a, int ell);
// Sum of b x b^dual over the basis, with the dual basis taken for the trace form.
PairTerms dual_basis_nabla(const SuperAlgebra& alg, const std::vector<long long>& trace);
Fraction gram_determinant(const SuperAlgebra& alg, const std::vector<long long>& trace);

// Mutually inverse maps between A_l (x) C_1 and B_l, checked on all basis products.
struct ZigzagIsoReport {
    bool phi_hom = false;
    bool psi_hom = false;
    bool round_trip = false;
    bool unital = false;
    bool super = false;
    bool ok() const { return phi_hom && psi_hom && round_trip && unital && super; }
};
ZigzagIsoReport check_zigzag_iso(int ell);

// Normal form monomial z_1^{a_1}...z_d^{a_d} (b^1 x ... x b^d) w of H_d(A_l).
struct HdMonomial {
    std::vector<int> z;
    std::vector<std::size_t> b;
    Perm w;
    auto operator<=>(const HdMonomial&) const = default;
};

struct HdElement {
    std::map<HdMonomial, long long> terms;
    void add(const HdMonomial& m, long long c);
    HdElement& operator+=(const HdElement& o);
    HdElement& operator-=(const HdElement& o);
    friend HdElement operator+(HdElement a, const HdElement& b) { return a += b; }
    friend HdElement operator-(HdElement a, const HdElement& b) { return a -= b; }
    friend HdElement operator*(long long c, const HdElement& x);
    friend bool operator==(const HdElement& a, const HdElement& b) { return a.terms == b.terms; }
    bool is_zero() const { return terms.empty(); }
    int z_degree() const;
};

// The affine Brauer tree superalgebra H_d(A_l), multiplied in PBW normal form.
class AffineZigzag {
public:
    AffineZigzag(int ell, int d);
    int ell() const { return ell_; }
    int rank() const { return d_; }
    const SuperAlgebra& base() const { return *a_; }

    HdElement one() const;
    HdElement z(int t) const;                                   // 1-based
    HdElement s(int r) const;                                   // 1-based, 1 <= r < d
    HdElement slot(int t, std::size_t basis) const;             // basis element in tensor slot t
    HdElement tensor(const std::vector<std::size_t>& b) const;  // pure tensor, no z, trivial w
    HdElement idempotent(const std::vector<int>& word) const;   // e^{i_1} x ... x e^{i_d}
    HdElement monomial(const HdMonomial& m) const;
    HdElement nabla(int r) const;                                // nabla_{r,r+1}

    HdElement multiply(const HdElement& x, const HdElement& y) const;
    std::string format(const HdElement& x) const;

private:
    HdElement lmul_z(int t, const HdElement& x) const;
    HdElement lmul_tensor(const std::vector<std::size_t>& b, long long c, const HdElement& x) const;
    HdElement lmul_s(int r, const HdElement& x) const;
    HdElement lmul_perm(const Perm& w, const HdElement& x) const;
    // Correction term of s_r z_t - z_{s_r(t)} s_r as an element of the tensor power.
    TensorTerms correction(int r, int t) const;

    int ell_, d_;
    std::shared_ptr<TableAlgebra> a_;
};

// Right hand side of the printed s_r z_t commutation identity on e^i.
HdElement szid_rhs(const AffineZigzag& h, int r, int t, const std::vector<int>& word, bool include_stray_term);

// Dimension of the span of the z-free normal monomials.
long long hd_quotient_wreath_dim(int ell, int d);
// Products of z-free monomials in H_d agree with the wreath superproduct on the given pairs.
bool hd_matches_wreath(int ell, int d, int samples, unsigned seed);

}  // namespace spinblock

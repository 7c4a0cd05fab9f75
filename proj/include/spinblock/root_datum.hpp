#pragma once

#include <boost/rational.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace spinblock {

using Fraction = boost::rational<long long>;

inline int p_of(int ell) { return 2 * ell + 1; }
inline int ell_of(int p) { return (p - 1) / 2; }

// Element of the root lattice of type A_{2l}^{(2)} with coordinates in the
// simple roots alpha_0..alpha_l. Coordinates are stored doubled so that
// half-integral vectors are exact.
struct RootVector {
    int ell = 1;
    std::vector<long long> twice;  // length ell + 1

    RootVector() = default;
    explicit RootVector(int l) : ell(l), twice(l + 1, 0) {}

    static RootVector zero(int l) { return RootVector(l); }
    static RootVector simple(int l, int i);
    static RootVector delta(int l);
    // Integral coordinates m_0..m_l.
    static RootVector from_coords(int l, const std::vector<long long>& coords);

    Fraction coord(int i) const { return Fraction(twice.at(i), 2); }
    bool is_integral() const;
    // Nonnegative integral combination of simple roots.
    bool in_q_plus() const;
    bool is_zero() const;
    // Doubled height; height() is the rational value.
    long long twice_height() const;
    Fraction height() const { return Fraction(twice_height(), 2); }
    // Integral coordinates; throws when some coordinate is half-integral.
    std::vector<long long> coords() const;

    RootVector& operator+=(const RootVector& o);
    RootVector& operator-=(const RootVector& o);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator*(long long k, RootVector a);
    friend bool operator==(const RootVector& a, const RootVector& b) {
        return a.ell == b.ell && a.twice == b.twice;
    }
    friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
    friend bool operator<(const RootVector& a, const RootVector& b) {
        return a.ell != b.ell ? a.ell < b.ell : a.twice < b.twice;
    }
    std::string to_string() const;
};

// Symmetric Gram matrix of the normalized invariant form on simple roots.
std::vector<std::vector<long long>> gram_matrix(int ell);
long long pairing(const RootVector& a, const RootVector& b);
// (alpha_i | alpha_i) / 2, so that q_i = q^{half_norm(i)}.
int half_norm(int ell, int i);
// Coefficient a_i^vee of K = sum a_i^vee h_i.
int dual_mark(int ell, int i);
// <h_i, Lambda_0 - theta> = delta_{i0} - 2 (alpha_i|theta)/(alpha_i|alpha_i).
long long coroot_pairing_lambda0_minus(const RootVector& theta, int i);

// A word over I, optionally with divided-power exponents.
struct Word {
    std::vector<int> letters;
    std::vector<int> exponents;  // empty means all exponents are 1

    Word() = default;
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}
    Word(std::vector<int> l, std::vector<int> e) : letters(std::move(l)), exponents(std::move(e)) {}

    bool divided() const { return !exponents.empty(); }
    int exponent(size_t k) const { return exponents.empty() ? 1 : exponents.at(k); }
    // Replace each divided letter by its repetitions.
    std::vector<int> expand() const;
    void validate(int ell) const;
    Word concat(const Word& o) const;
};

// Digit string for l <= 9 and comma separated otherwise.
std::string format_word(const std::vector<int>& w, int ell);
std::vector<int> parse_word(const std::string& s, int ell);

RootVector word_content(const Word& w, int ell);
RootVector word_content(const std::vector<int>& w, int ell);

enum class RootKind { Real, Imaginary };

struct PositiveRoot {
    RootVector root;
    RootKind kind;
    // Finite part in orthogonal coordinates e_1..e_l, doubled; root = finite + s*delta.
    std::vector<long long> finite_twice;
    Fraction delta_coefficient;
};

// All positive roots of height at most h, sorted by (height, coordinates).
std::vector<PositiveRoot> positive_roots_up_to(int h, int ell);
bool is_positive_root(const RootVector& beta);

// Lexicographically compared image of the linear map chi, scaled by 4.
using ChiValue = std::vector<long long>;
ChiValue chi(const RootVector& beta);

enum class Order { Less, Equal, Greater };
// Compares chi(beta)/ht(beta) with chi(gamma)/ht(gamma). Both must be positive roots.
Order compare_preorder(const RootVector& beta, const RootVector& gamma);

enum class DeltaSide { Below, Above, Imaginary };
// Position of a positive root relative to delta, read from its finite part.
DeltaSide classify_vs_delta(const RootVector& beta);

enum class Cone { AtMostDelta, AtLeastDelta };

// Memoized test of theta being a sum of positive roots on one side of delta
// (imaginary roots allowed on both sides). Instances are not thread-safe.
class ConeOracle {
public:
    explicit ConeOracle(int ell);
    bool member(const RootVector& theta, Cone side);

private:
    bool reach(const std::vector<long long>& coords, Cone side);
    void ensure_roots(long long height);
    int ell_;
    long long roots_height_ = 0;
    std::vector<std::vector<long long>> below_, above_;
    std::map<std::vector<long long>, bool> memo_[2];
};

bool cone_member(const RootVector& theta, Cone side);

// Cuspidality of a word of content d*delta with respect to the fixed preorder.
bool is_cuspidal(const std::vector<int>& word, int ell, ConeOracle& oracle);
bool is_cuspidal(const std::vector<int>& word, int ell);

// Words l followed by a shuffle of the two explicit words for some 1 <= i <= l.
std::set<std::vector<int>> cuspidal_shuffle_set(int ell);
// All words of the given content.
std::vector<std::vector<int>> words_of_content(const RootVector& theta);

// Concatenation of Gelfand-Graev divided words for the given sequence over J.
Word gg_word(const std::vector<int>& seq, int ell);

}  // namespace spinblock

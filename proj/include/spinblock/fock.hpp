#pragma once

#include <map>
#include <vector>

#include "spinblock/laurent.hpp"
#include "spinblock/partitions.hpp"
#include "spinblock/tableaux.hpp"

namespace spinblock {

// Vector of the level N Fock space in the basis of p-strict N-multipartitions.
struct FockVector {
    int p = 3;
    int level = 1;
    std::map<Multipartition, LaurentPoly> terms;

    FockVector() = default;
    FockVector(int p_, int level_) : p(p_), level(level_) {}

    // The highest weight vector u_{(empty,...,empty)}.
    static FockVector vacuum(int p, int level);
    static FockVector basis(const Multipartition& lambdas, int p);

    void add(const Multipartition& lambdas, const LaurentPoly& c);
    bool is_zero() const { return terms.empty(); }
    LaurentPoly coeff(const Multipartition& lambdas) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const LaurentPoly& c, const FockVector& v);
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.p == b.p && a.level == b.level && a.terms == b.terms;
    }
};

FockVector apply_F(int i, const FockVector& v);
FockVector apply_E(int i, const FockVector& v);
// T_i^{exponent} for exponent = +1 or -1.
FockVector apply_T(int i, int exponent, const FockVector& v);
// Exponent of q in T_i u_lambda.
long long t_exponent(int i, const Multipartition& lambdas, int p);

LaurentPoly form(const FockVector& v, const FockVector& w);

// F_{w_n} ... F_{w_1} applied to the vacuum (letters applied left to right).
FockVector apply_word(const std::vector<int>& word, int level, int p);

// Coefficients sum_{T in Std_p(lambda, word)} deg(T) computed from explicit tableaux.
FockVector tableau_expansion(const std::vector<int>& word, int level, int p);

enum class FormMode { Direct, TableauSum };
LaurentPoly fv_form(const std::vector<int>& word_i, const std::vector<int>& word_j, int level, int p, FormMode mode);

}  // namespace spinblock

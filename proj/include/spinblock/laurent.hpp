#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinblock {

// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Coeff = long long;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // NOLINT: constant polynomial

    static LaurentPoly monomial(Coeff c, int exponent);
    static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;
    const std::map<int, Coeff>& terms() const { return terms_; }

    // Value at q = 1.
    Coeff at_one() const;
    // q -> q^{-1}.
    LaurentPoly bar() const;
    // Multiply by q^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned n) const;
    bool nonnegative() const;

    // Exact division; throws std::domain_error when the divisor does not divide.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    // Human readable, e.g. "1 + q^2 - 3*q^-1" in increasing exponent order.
    std::string to_string() const;
    // Sorted [exponent, coefficient] pairs.
    std::vector<std::pair<int, Coeff>> pairs() const;
    static LaurentPoly from_pairs(const std::vector<std::pair<int, Coeff>>& pairs);

private:
    void add_term(int exponent, Coeff c);
    std::map<int, Coeff> terms_;
};

// (q^n - q^{-n}) / (q - q^{-1}) evaluated with q replaced by q^step.
LaurentPoly quantum_int(int n, int step = 1);
LaurentPoly quantum_factorial(int n, int step = 1);

}  // namespace spinblock

#include "spinblock/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace spinblock {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r(1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dtop = divisor.max_exponent();
    const Coeff lead = divisor.terms_.rbegin()->second;
    const int dspan = dtop - divisor.min_exponent();
    while (!rem.is_zero()) {
        const int rtop = rem.max_exponent();
        if (rtop - rem.min_exponent() < dspan) throw std::domain_error("polynomial not divisible");
        const Coeff rc = rem.terms_.rbegin()->second;
        if (rc % lead != 0) throw std::domain_error("polynomial not divisible");
        LaurentPoly step = monomial(rc / lead, rtop - dtop);
        quot += step;
        rem -= step * divisor;
    }
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::pairs() const {
    return {terms_.begin(), terms_.end()};
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, Coeff>>& pairs) {
    LaurentPoly r;
    for (const auto& [e, c] : pairs) r.add_term(e, c);
    return r;
}

LaurentPoly quantum_int(int n, int step) {
    if (n < 0) throw std::domain_error("negative quantum integer");
    LaurentPoly r;
    for (int k = 0; k < n; ++k) r += LaurentPoly::q(step * (n - 1 - 2 * k));
    return r;
}

LaurentPoly quantum_factorial(int n, int step) {
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r *= quantum_int(k, step);
    return r;
}

}  // namespace spinblock

#include "spinblock/fock.hpp"

#include <stdexcept>

namespace spinblock {

namespace {

void check_compatible(const FockVector& a, const FockVector& b) {
    if (a.p != b.p || a.level != b.level) throw std::invalid_argument("Fock vectors of different level or p");
}

void check_letter(int i, int p) {
    if (i < 0 || i > ell_of(p)) throw std::invalid_argument("letter outside I");
}

}  // namespace

FockVector FockVector::vacuum(int p, int level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    FockVector v(p, level);
    v.terms[Multipartition(level)] = LaurentPoly(1);
    return v;
}

FockVector FockVector::basis(const Multipartition& lambdas, int p) {
    if (!is_p_strict_multi(lambdas, p)) throw std::invalid_argument("basis vector needs a p-strict multipartition");
    FockVector v(p, (int)lambdas.size());
    v.terms[lambdas] = LaurentPoly(1);
    return v;
}

void FockVector::add(const Multipartition& lambdas, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if ((int)lambdas.size() != level) throw std::invalid_argument("multipartition of the wrong level");
    auto it = terms.find(lambdas);
    if (it == terms.end()) {
        terms.emplace(lambdas, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly FockVector::coeff(const Multipartition& lambdas) const {
    auto it = terms.find(lambdas);
    return it == terms.end() ? LaurentPoly() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    check_compatible(*this, o);
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    check_compatible(*this, o);
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& v) {
    FockVector r(v.p, v.level);
    for (const auto& [k, x] : v.terms) r.add(k, c * x);
    return r;
}

FockVector apply_F(int i, const FockVector& v) {
    check_letter(i, v.p);
    FockVector r(v.p, v.level);
    for (const auto& [lam, c] : v.terms)
        for (const auto& b : node_sets(lam, v.p, i).proper_addable) r.add(add_node(lam, b), c * d_up(b, lam, v.p));
    return r;
}

FockVector apply_E(int i, const FockVector& v) {
    check_letter(i, v.p);
    FockVector r(v.p, v.level);
    for (const auto& [lam, c] : v.terms)
        for (const auto& a : node_sets(lam, v.p, i).proper_removable)
            r.add(remove_node(lam, a), c * d_down(a, lam, v.p));
    return r;
}

long long t_exponent(int i, const Multipartition& lambdas, int p) {
    const int ell = ell_of(p);
    const long long level_part = i == 0 ? (long long)lambdas.size() : 0;  // (alpha_i | N Lambda_0)
    return level_part - pairing(RootVector::simple(ell, i), content_multi(lambdas, p));
}

FockVector apply_T(int i, int exponent, const FockVector& v) {
    check_letter(i, v.p);
    if (exponent != 1 && exponent != -1) throw std::invalid_argument("T exponent must be +1 or -1");
    FockVector r(v.p, v.level);
    for (const auto& [lam, c] : v.terms) r.add(lam, c.shifted((int)(exponent * t_exponent(i, lam, v.p))));
    return r;
}

LaurentPoly form(const FockVector& v, const FockVector& w) {
    check_compatible(v, w);
    LaurentPoly s;
    for (const auto& [lam, c] : v.terms) {
        auto it = w.terms.find(lam);
        if (it != w.terms.end()) s += c * it->second * norm_poly_multi(lam, v.p);
    }
    return s;
}

FockVector apply_word(const std::vector<int>& word, int level, int p) {
    FockVector v = FockVector::vacuum(p, level);
    for (int i : word) v = apply_F(i, v);
    return v;
}

FockVector tableau_expansion(const std::vector<int>& word, int level, int p) {
    FockVector v(p, level);
    const RootVector theta = word_content(word, ell_of(p));
    for (const auto& lam : p_strict_multipartitions(level, (int)word.size(), p)) {
        if (content_multi(lam, p) != theta) continue;
        for (const auto& t : enumerate_std(lam, p, word)) v.add(lam, tableau_degree(t, p));
    }
    return v;
}

LaurentPoly fv_form(const std::vector<int>& word_i, const std::vector<int>& word_j, int level, int p, FormMode mode) {
    if (word_i.size() != word_j.size()) return LaurentPoly();
    if (word_content(word_i, ell_of(p)) != word_content(word_j, ell_of(p))) return LaurentPoly();
    if (mode == FormMode::Direct) return form(apply_word(word_i, level, p), apply_word(word_j, level, p));
    // Sum over shapes and pairs of tableaux, with the sum over pairs factored.
    const FockVector s = tableau_expansion(word_i, level, p);
    const FockVector t = word_i == word_j ? s : tableau_expansion(word_j, level, p);
    LaurentPoly total;
    for (const auto& [lam, ds] : s.terms) {
        auto it = t.terms.find(lam);
        if (it != t.terms.end()) total += ds * it->second * norm_poly_multi(lam, p);
    }
    return total;
}

}  // namespace spinblock

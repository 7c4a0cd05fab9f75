#include "spinblock/tableaux.hpp"

#include <functional>
#include <stdexcept>

namespace spinblock {

namespace {

// Row r (1-based) changed by delta; returns nullopt unless the result is a p-strict partition.
std::optional<Partition> adjust_row(const Partition& lambda, int r, int delta, int p) {
    Partition mu = lambda;
    if (r == (int)mu.size() + 1) mu.push_back(0);
    if (r < 1 || r > (int)mu.size()) return std::nullopt;
    mu[r - 1] += delta;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    if (!is_p_strict(mu, p)) return std::nullopt;
    return mu;
}

int row_length(const Partition& lambda, int r) { return r <= (int)lambda.size() ? lambda[r - 1] : 0; }

void collect(const Partition& lambda, int comp, int p, int i, NodeSets& out) {
    const int h = (int)lambda.size();
    for (int r = 1; r <= h; ++r) {
        const int len = lambda[r - 1];
        // (R1)
        if (residue(len, p) == i && adjust_row(lambda, r, -1, p)) {
            out.removable.push_back({r, len, comp});
            out.proper_removable.push_back({r, len, comp});
        }
        // (R2)
        if (len >= 2 && residue(len - 1, p) == i && residue(len, p) == i && adjust_row(lambda, r, -1, p) &&
            adjust_row(lambda, r, -2, p))
            out.removable.push_back({r, len - 1, comp});
    }
    for (int r = 1; r <= h + 1; ++r) {
        const int len = row_length(lambda, r);
        // (A1)
        if (residue(len + 1, p) == i && adjust_row(lambda, r, 1, p)) {
            out.addable.push_back({r, len + 1, comp});
            out.proper_addable.push_back({r, len + 1, comp});
        }
        // (A2)
        if (residue(len + 1, p) == i && residue(len + 2, p) == i && adjust_row(lambda, r, 1, p) &&
            adjust_row(lambda, r, 2, p))
            out.addable.push_back({r, len + 2, comp});
    }
}

void check_comp(const Multipartition& lambdas, const Node& n) {
    if (n.comp < 1 || n.comp > (int)lambdas.size()) throw std::invalid_argument("node component out of range");
}

bool contains_node(const std::vector<Node>& nodes, const Node& n) {
    for (const auto& m : nodes)
        if (m == n) return true;
    return false;
}

// 1 - (-q^2)^m
LaurentPoly zeta_factor(int m) { return LaurentPoly(1) - LaurentPoly::monomial(m % 2 ? -1 : 1, 2 * m); }

// Length of the run of rows equal to lambda[r-1] and the rows where it starts and ends.
void run_bounds(const Partition& lambda, int r, int& first, int& last) {
    first = last = r;
    while (first > 1 && lambda[first - 2] == lambda[r - 1]) --first;
    while (last < (int)lambda.size() && lambda[last] == lambda[r - 1]) ++last;
}

}  // namespace

bool node_precedes(const Node& c, const Node& b) {
    return c.comp > b.comp || (c.comp == b.comp && c.col < b.col);
}

bool node_follows(const Node& c, const Node& a) {
    return c.comp < a.comp || (c.comp == a.comp && c.col > a.col);
}

NodeSets node_sets(const Multipartition& lambdas, int p, int i) {
    if (!is_p_strict_multi(lambdas, p)) throw std::invalid_argument("node_sets requires p-strict components");
    if (i < 0 || i > ell_of(p)) throw std::invalid_argument("residue outside I");
    NodeSets out;
    for (size_t t = 0; t < lambdas.size(); ++t) collect(lambdas[t], (int)t + 1, p, i, out);
    return out;
}

Multipartition add_node(const Multipartition& lambdas, const Node& b) {
    check_comp(lambdas, b);
    Multipartition out = lambdas;
    Partition& lam = out[b.comp - 1];
    if (b.col != row_length(lam, b.row) + 1 || b.row > (int)lam.size() + 1)
        throw std::invalid_argument("node is not at the end of its row");
    if (b.row == (int)lam.size() + 1) lam.push_back(0);
    ++lam[b.row - 1];
    if (!is_partition(lam)) throw std::invalid_argument("adding the node breaks the partition shape");
    return out;
}

Multipartition remove_node(const Multipartition& lambdas, const Node& a) {
    check_comp(lambdas, a);
    Multipartition out = lambdas;
    Partition& lam = out[a.comp - 1];
    if (a.row > (int)lam.size() || lam[a.row - 1] != a.col) throw std::invalid_argument("node is not a row end");
    --lam[a.row - 1];
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (!is_partition(lam)) throw std::invalid_argument("removing the node breaks the partition shape");
    return out;
}

LaurentPoly d_up(const Node& b, const Multipartition& lambdas, int p) {
    check_comp(lambdas, b);
    const int i = residue(b.col, p);
    const NodeSets ns = node_sets(lambdas, p, i);
    if (!contains_node(ns.proper_addable, b)) throw std::invalid_argument("node is not properly addable");
    int eta = 0;
    for (const auto& c : ns.addable) eta += node_precedes(c, b);
    for (const auto& c : ns.removable) eta -= node_precedes(c, b);
    LaurentPoly d = LaurentPoly::q(eta * half_norm(ell_of(p), i));
    const Partition& lam = lambdas[b.comp - 1];
    if (b.row <= (int)lam.size() && lam[b.row - 1] % p == 0) {
        int first, last;
        run_bounds(lam, b.row, first, last);
        d *= zeta_factor(last - first + 1);
    }
    return d;
}

LaurentPoly d_down(const Node& a, const Multipartition& lambdas, int p) {
    check_comp(lambdas, a);
    const int i = residue(a.col, p);
    const NodeSets ns = node_sets(lambdas, p, i);
    if (!contains_node(ns.proper_removable, a)) throw std::invalid_argument("node is not properly removable");
    int eta = 0;
    for (const auto& c : ns.removable) eta += node_follows(c, a);
    for (const auto& c : ns.addable) eta -= node_follows(c, a);
    LaurentPoly d = LaurentPoly::q(eta * half_norm(ell_of(p), i));
    const Partition& lam = lambdas[a.comp - 1];
    if (lam[a.row - 1] % p == 0) {
        int first, last;
        run_bounds(lam, a.row, first, last);
        d *= zeta_factor(last - first + 1);
    }
    return d;
}

std::vector<int> word_of(const Tableau& t, int p) {
    std::vector<int> w;
    for (const auto& n : t.filling) w.push_back(residue(n.col, p));
    return w;
}

bool is_p_standard(const Tableau& t, int p) {
    Multipartition cur(t.shape.size());
    try {
        for (const auto& n : t.filling) {
            cur = add_node(cur, n);
            if (!is_p_strict_multi(cur, p)) return false;
        }
    } catch (const std::invalid_argument&) {
        return false;
    }
    return cur == t.shape;
}

LaurentPoly tableau_degree(const Tableau& t, int p) {
    if (!is_p_standard(t, p)) throw std::invalid_argument("tableau is not p-standard");
    Multipartition cur(t.shape.size());
    LaurentPoly deg(1);
    for (const auto& n : t.filling) {
        deg *= d_up(n, cur, p);
        cur = add_node(cur, n);
    }
    return deg;
}

std::vector<Tableau> enumerate_std(const Multipartition& lambdas, int p, const std::optional<std::vector<int>>& word,
                                   bool strict) {
    if (!is_p_strict_multi(lambdas, p)) throw std::invalid_argument("enumerate_std requires a p-strict shape");
    const int n = partition_size(lambdas);
    std::vector<Tableau> out;
    if (word && (int)word->size() != n) return out;
    Tableau cur{lambdas, {}};
    Multipartition shape(lambdas.size());
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int t = 1; t <= (int)lambdas.size(); ++t) {
            const Partition& target = lambdas[t - 1];
            const Partition& now = shape[t - 1];
            for (int r = 1; r <= (int)now.size() + 1 && r <= (int)target.size(); ++r) {
                const int len = row_length(now, r);
                if (len >= target[r - 1]) continue;
                if (r > 1 && row_length(now, r - 1) <= len) continue;
                const Node b{r, len + 1, t};
                if (word && residue(b.col, p) != (*word)[k]) continue;
                Multipartition next = add_node(shape, b);
                if (!is_p_strict(next[t - 1], p)) continue;
                if (strict && !is_strict(next[t - 1])) continue;
                std::swap(shape, next);
                cur.filling.push_back(b);
                rec(k + 1);
                cur.filling.pop_back();
                std::swap(shape, next);
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace spinblock

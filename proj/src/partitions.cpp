#include "spinblock/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinblock {

namespace {

void check_p(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd integer >= 3");
}

void require_partition(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition: " + format_partition(lambda));
}

int row_of(int position, int p) { return position / p; }

}  // namespace

bool is_partition(const Partition& lambda) {
    for (size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] <= 0) return false;
        if (k > 0 && lambda[k] > lambda[k - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

int partition_size(const Multipartition& lambdas) {
    int s = 0;
    for (const auto& l : lambdas) s += partition_size(l);
    return s;
}

int total_rows(const Multipartition& lambdas) {
    int h = 0;
    for (const auto& l : lambdas) h += (int)l.size();
    return h;
}

bool is_strict(const Partition& lambda) {
    for (size_t k = 1; k < lambda.size(); ++k)
        if (lambda[k] == lambda[k - 1]) return false;
    return true;
}

bool is_p_strict(const Partition& lambda, int p) {
    if (!is_partition(lambda)) return false;
    for (size_t k = 1; k < lambda.size(); ++k)
        if (lambda[k] == lambda[k - 1] && lambda[k] % p != 0) return false;
    return true;
}

bool is_p_strict_multi(const Multipartition& lambdas, int p) {
    return std::all_of(lambdas.begin(), lambdas.end(), [p](const Partition& l) { return is_p_strict(l, p); });
}

bool is_restricted(const Partition& lambda, int p) {
    if (!is_p_strict(lambda, p)) return false;
    for (size_t r = 0; r < lambda.size(); ++r) {
        const int next = r + 1 < lambda.size() ? lambda[r + 1] : 0;
        const int gap = lambda[r] - next;
        if (lambda[r] % p == 0 ? gap >= p : gap > p) return false;
    }
    return true;
}

bool contains(const Partition& big, const Partition& small) {
    if (small.size() > big.size()) return false;
    for (size_t k = 0; k < small.size(); ++k)
        if (small[k] > big[k]) return false;
    return true;
}

std::string format_partition(const Partition& lambda) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < lambda.size(); ++k) os << (k ? "," : "") << lambda[k];
    os << ")";
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition out;
    std::string cleaned;
    for (char c : s)
        if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') cleaned.push_back(c);
    std::stringstream ss(cleaned);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
        if (v != 0) out.push_back(v);
    }
    require_partition(out);
    return out;
}

std::string format_multipartition(const Multipartition& lambdas) {
    std::ostringstream os;
    os << "(";
    for (size_t t = 0; t < lambdas.size(); ++t) os << (t ? ";" : "") << format_partition(lambdas[t]);
    os << ")";
    return os.str();
}

int residue(int col, int p) {
    check_p(p);
    if (col < 1) throw std::invalid_argument("columns are 1-based");
    const int r = (col - 1) % p;
    return std::min(r, p - 1 - r);
}

RootVector content(const Partition& lambda, int p) {
    check_p(p);
    require_partition(lambda);
    const int ell = ell_of(p);
    RootVector r(ell);
    for (int part : lambda) {
        // Full periods contribute delta each.
        const int full = part / p;
        r += (long long)full * RootVector::delta(ell);
        for (int col = full * p + 1; col <= part; ++col) r.twice[residue(col, p)] += 2;
    }
    return r;
}

RootVector content_multi(const Multipartition& lambdas, int p) {
    RootVector r(ell_of(p));
    for (const auto& l : lambdas) r += content(l, p);
    return r;
}

int residue_count(const Partition& lambda, int p, int i) {
    return (int)(content(lambda, p).twice.at(i) / 2);
}

LaurentPoly norm_poly(const Partition& lambda, int p) {
    check_p(p);
    require_partition(lambda);
    LaurentPoly r(1);
    size_t k = 0;
    while (k < lambda.size()) {
        size_t end = k;
        while (end < lambda.size() && lambda[end] == lambda[k]) ++end;
        if (lambda[k] % p == 0) {
            const int m = (int)(end - k);
            for (int s = 1; s <= m; ++s) {
                // 1 - (-q^2)^s
                r *= LaurentPoly(1) - LaurentPoly::monomial(s % 2 ? -1 : 1, 2 * s);
            }
        }
        k = end;
    }
    return r;
}

LaurentPoly norm_poly_multi(const Multipartition& lambdas, int p) {
    LaurentPoly r(1);
    for (const auto& l : lambdas) r *= norm_poly(l, p);
    return r;
}

int Abacus::at(int position) const {
    auto it = beads.find(position);
    return it == beads.end() ? 0 : it->second;
}

Abacus to_abacus(const Partition& lambda, int p, int bead_count) {
    check_p(p);
    if (!is_p_strict(lambda, p)) throw std::invalid_argument("abacus requires a p-strict partition");
    if (bead_count < (int)lambda.size()) throw std::invalid_argument("bead count below the number of rows");
    Abacus a;
    a.p = p;
    a.bead_count = bead_count;
    for (int part : lambda) ++a.beads[part];
    const int zeros = bead_count - (int)lambda.size();
    if (zeros > 0) a.beads[0] += zeros;
    return a;
}

Partition from_abacus(const Abacus& a) {
    Partition out;
    int total = 0;
    for (const auto& [pos, mult] : a.beads) {
        if (mult < 0 || pos < 0) throw std::invalid_argument("malformed abacus");
        if (mult > 1 && pos % a.p != 0) throw std::invalid_argument("repeated bead off runner 0");
        total += mult;
        if (pos > 0)
            for (int k = 0; k < mult; ++k) out.push_back(pos);
    }
    if (total != a.bead_count) throw std::invalid_argument("abacus bead count mismatch");
    std::sort(out.rbegin(), out.rend());
    return out;
}

int default_bead_count(const Partition& lambda, int p) {
    return (int)lambda.size() + bar_weight(lambda, p) + 1;
}

Abacus slide(const Abacus& a, int position, SlideDirection dir, bool strict) {
    if (a.at(position) == 0) throw std::invalid_argument("no bead at the given position");
    const int target = dir == SlideDirection::Down ? position + a.p : position - a.p;
    if (target < 0) throw std::invalid_argument("slide leaves the abacus");
    const bool runner_zero = position % a.p == 0;
    if (a.at(target) > 0 && (strict || !runner_zero)) throw std::invalid_argument("target position occupied");
    Abacus b = a;
    if (--b.beads[position] == 0) b.beads.erase(position);
    ++b.beads[target];
    return b;
}

std::vector<int> runner_counts(const Partition& lambda, int p) {
    check_p(p);
    std::vector<int> b(p, 0);
    for (int part : lambda) ++b[part % p];
    return b;
}

Partition bar_core(const Partition& lambda, int p) {
    check_p(p);
    if (!is_p_strict(lambda, p)) throw std::invalid_argument("bar_core requires a p-strict partition");
    std::set<int, std::greater<int>> parts;
    for (int x : lambda)
        if (x % p != 0) parts.insert(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : parts) {
            if (x > p && !parts.count(x - p)) {
                parts.erase(x);
                parts.insert(x - p);
                changed = true;
                break;
            }
            if (x < p && parts.count(p - x)) {
                parts.erase(p - x);
                parts.erase(x);
                changed = true;
                break;
            }
        }
    }
    return Partition(parts.begin(), parts.end());
}

int bar_weight(const Partition& lambda, int p) {
    const int diff = partition_size(lambda) - partition_size(bar_core(lambda, p));
    return diff / p;
}

bool is_bar_core(const Partition& lambda, int p) {
    return is_p_strict(lambda, p) && bar_core(lambda, p) == lambda;
}

namespace {

// Orientation of the pair of runners j, p-j and the charge of the pair.
struct PairSide {
    int positive;
    int negative;
    int charge;
};

PairSide pair_side(const std::vector<int>& b, int j, int p) {
    if (b[j] >= b[p - j]) return {j, p - j, b[j] - b[p - j]};
    return {p - j, j, b[p - j] - b[j]};
}

std::vector<int> rows_on_runner(const Partition& lambda, int runner, int p) {
    std::vector<int> rows;
    for (int part : lambda)
        if (part % p == runner) rows.push_back(row_of(part, p));
    return rows;  // decreasing
}

}  // namespace

Multipartition bar_quotient(const Partition& lambda, int p) {
    check_p(p);
    if (!is_p_strict(lambda, p)) throw std::invalid_argument("bar_quotient requires a p-strict partition");
    const int ell = ell_of(p);
    Multipartition quot(ell + 1);
    for (int part : lambda)
        if (part % p == 0) quot[0].push_back(part / p);
    const auto b = runner_counts(lambda, p);
    for (int j = 1; j <= ell; ++j) {
        const PairSide side = pair_side(b, j, p);
        // Maya diagram: rows of the positive runner, and all negative sites
        // except -1-r for rows r of the negative runner.
        std::set<int, std::greater<int>> maya;
        for (int r : rows_on_runner(lambda, side.positive, p)) maya.insert(r);
        const auto neg_rows = rows_on_runner(lambda, side.negative, p);
        const std::set<int> holes(neg_rows.begin(), neg_rows.end());
        const int depth = neg_rows.empty() ? 0 : neg_rows.front() + 1;
        for (int r = 0; r < depth; ++r)
            if (!holes.count(r)) maya.insert(-1 - r);
        // Everything below -depth is filled; read parts from the first entries.
        Partition mu;
        int k = 1;
        for (int x : maya) {
            const int part = x + k - side.charge;
            if (part > 0) mu.push_back(part);
            ++k;
        }
        // Entries below -depth are c - k for the remaining k, contributing zero.
        require_partition(mu);
        quot[j] = mu;
    }
    return quot;
}

Partition quotient_inverse(const Partition& core, const Multipartition& quot, int p) {
    check_p(p);
    if (!is_bar_core(core, p)) throw std::invalid_argument("quotient_inverse requires a p-bar core");
    const int ell = ell_of(p);
    if ((int)quot.size() != ell + 1) throw std::invalid_argument("quotient must have l+1 components");
    for (const auto& q : quot) require_partition(q);
    Partition out;
    for (int r : quot[0]) out.push_back(p * r);
    const auto b = runner_counts(core, p);
    for (int j = 1; j <= ell; ++j) {
        const PairSide side = pair_side(b, j, p);
        const Partition& mu = quot[j];
        const int len = (int)mu.size();
        std::set<int> maya;
        for (int k = 1; k <= len + side.charge; ++k) {
            const int part = k <= len ? mu[k - 1] : 0;
            maya.insert(part - k + side.charge);
        }
        const int floor_site = -len - 1;  // every site at or below is filled
        for (int x : maya)
            if (x >= 0) out.push_back(side.positive + p * x);
        for (int y = floor_site + 1; y <= -1; ++y)
            if (!maya.count(y)) out.push_back(side.negative + p * (-1 - y));
    }
    std::sort(out.rbegin(), out.rend());
    if (!is_p_strict(out, p)) throw std::logic_error("quotient_inverse produced a non p-strict partition");
    return out;
}

bool is_rouquier(const Partition& core, int p, int d) {
    if (!is_bar_core(core, p)) throw std::invalid_argument("is_rouquier requires a p-bar core");
    if (d < 0) throw std::invalid_argument("negative d");
    if (d == 0) return true;
    const auto b = runner_counts(core, p);
    const int ell = ell_of(p);
    if (b[1] < d) return false;
    for (int j = 2; j <= ell; ++j)
        if (b[j] - b[j - 1] < d - 1) return false;
    return true;
}

Partition rouquier_core(int p, int d) {
    check_p(p);
    if (d < 0) throw std::invalid_argument("negative d");
    Partition out;
    for (int j = 1; j <= ell_of(p); ++j) {
        const int bj = std::max(0, d + (j - 1) * (d - 1));
        for (int k = 0; k < bj; ++k) out.push_back(j + p * k);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rest, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> p_strict_partitions(int n, int p) {
    std::vector<Partition> out;
    for (auto& l : partitions_of(n))
        if (is_p_strict(l, p)) out.push_back(l);
    return out;
}

namespace {

template <class Gen>
std::vector<Multipartition> multi(int components, int n, Gen gen) {
    std::vector<Multipartition> out;
    if (components <= 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    Multipartition cur(components);
    std::function<void(int, int)> rec = [&](int t, int rest) {
        if (t == components - 1) {
            for (auto& l : gen(rest)) {
                cur[t] = l;
                out.push_back(cur);
            }
            return;
        }
        for (int m = rest; m >= 0; --m)
            for (auto& l : gen(m)) {
                cur[t] = l;
                rec(t + 1, rest - m);
            }
    };
    rec(0, n);
    return out;
}

}  // namespace

std::vector<Multipartition> multipartitions(int components, int n) {
    return multi(components, n, [](int m) { return partitions_of(m); });
}

std::vector<Multipartition> p_strict_multipartitions(int components, int n, int p) {
    return multi(components, n, [p](int m) { return p_strict_partitions(m, p); });
}

std::vector<Partition> block_partitions(const Partition& core, int p, int d) {
    if (!is_bar_core(core, p)) throw std::invalid_argument("block_partitions requires a p-bar core");
    std::vector<Partition> out;
    for (auto& q : multipartitions(ell_of(p) + 1, d)) out.push_back(quotient_inverse(core, q, p));
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Partition> strict_block_partitions(const Partition& core, int p, int d) {
    std::vector<Partition> out;
    for (auto& l : block_partitions(core, p, d))
        if (is_strict(l)) out.push_back(l);
    return out;
}

}  // namespace spinblock

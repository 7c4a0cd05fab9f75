#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinblock/laurent.hpp"
#include "spinblock/root_datum.hpp"

namespace spinblock {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

bool is_partition(const Partition& lambda);
int partition_size(const Partition& lambda);
int partition_size(const Multipartition& lambdas);
int total_rows(const Multipartition& lambdas);
bool is_strict(const Partition& lambda);
bool is_p_strict(const Partition& lambda, int p);
bool is_p_strict_multi(const Multipartition& lambdas, int p);
bool is_restricted(const Partition& lambda, int p);
bool contains(const Partition& big, const Partition& small);
std::string format_partition(const Partition& lambda);
Partition parse_partition(const std::string& s);
std::string format_multipartition(const Multipartition& lambdas);

// Residue of any node in column col (1-based).
int residue(int col, int p);
RootVector content(const Partition& lambda, int p);
RootVector content_multi(const Multipartition& lambdas, int p);
// Number of nodes of residue i.
int residue_count(const Partition& lambda, int p, int i);

// Product over maximal runs of equal parts divisible by p.
LaurentPoly norm_poly(const Partition& lambda, int p);
LaurentPoly norm_poly_multi(const Multipartition& lambdas, int p);

// Abacus display with bead_count beads; positions on runner 0 may hold several beads.
struct Abacus {
    int p = 3;
    int bead_count = 0;
    std::map<int, int> beads;  // position -> multiplicity

    int at(int position) const;
    friend bool operator==(const Abacus& a, const Abacus& b) {
        return a.p == b.p && a.bead_count == b.bead_count && a.beads == b.beads;
    }
};

Abacus to_abacus(const Partition& lambda, int p, int bead_count);
Partition from_abacus(const Abacus& a);
// h(lambda) + wt(lambda) + 1.
int default_bead_count(const Partition& lambda, int p);

enum class SlideDirection { Up, Down };
// Moves one bead from position by p; throws std::invalid_argument for illegal moves.
Abacus slide(const Abacus& a, int position, SlideDirection dir, bool strict);

// b_j: number of parts congruent to j modulo p.
std::vector<int> runner_counts(const Partition& lambda, int p);

Partition bar_core(const Partition& lambda, int p);
int bar_weight(const Partition& lambda, int p);
bool is_bar_core(const Partition& lambda, int p);

// Length l+1 multipartition recording runner 0 and the runner pairs j, p-j.
Multipartition bar_quotient(const Partition& lambda, int p);
Partition quotient_inverse(const Partition& core, const Multipartition& quot, int p);

bool is_rouquier(const Partition& core, int p, int d);
Partition rouquier_core(int p, int d);

// Enumerations, lexicographically decreasing in the parts.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> p_strict_partitions(int n, int p);
std::vector<Multipartition> multipartitions(int components, int n);
std::vector<Multipartition> p_strict_multipartitions(int components, int n, int p);
std::vector<Partition> block_partitions(const Partition& core, int p, int d);
std::vector<Partition> strict_block_partitions(const Partition& core, int p, int d);

}  // namespace spinblock

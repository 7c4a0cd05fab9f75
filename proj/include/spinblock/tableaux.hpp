#pragma once

#include <optional>
#include <vector>

#include "spinblock/laurent.hpp"
#include "spinblock/partitions.hpp"

namespace spinblock {

// Node in row, column and component, all 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    friend bool operator==(const Node& a, const Node& b) {
        return a.row == b.row && a.col == b.col && a.comp == b.comp;
    }
    friend bool operator<(const Node& a, const Node& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

// Strict comparisons in the node preorder: later components are smaller,
// and within a component only the column matters.
bool node_precedes(const Node& c, const Node& b);
bool node_follows(const Node& c, const Node& a);

struct NodeSets {
    std::vector<Node> addable;
    std::vector<Node> removable;
    std::vector<Node> proper_addable;
    std::vector<Node> proper_removable;
};

NodeSets node_sets(const Multipartition& lambdas, int p, int i);

// Degree factor for adding a properly addable node, and for removing a
// properly removable node.
LaurentPoly d_up(const Node& b, const Multipartition& lambdas, int p);
LaurentPoly d_down(const Node& a, const Multipartition& lambdas, int p);

Multipartition add_node(const Multipartition& lambdas, const Node& b);
Multipartition remove_node(const Multipartition& lambdas, const Node& a);

struct Tableau {
    Multipartition shape;
    std::vector<Node> filling;  // filling[k-1] = T(k)
};

std::vector<int> word_of(const Tableau& t, int p);
// Throws when some prefix is not p-strict.
LaurentPoly tableau_degree(const Tableau& t, int p);
bool is_p_standard(const Tableau& t, int p);

// All p-standard tableaux of the given shape, optionally with a fixed residue
// word. With strict set, every prefix must be a strict multipartition.
std::vector<Tableau> enumerate_std(const Multipartition& lambdas, int p,
                                   const std::optional<std::vector<int>>& word = std::nullopt,
                                   bool strict = false);

}  // namespace spinblock

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "spinblock/fock.hpp"
#include "spinblock/laurent.hpp"
#include "spinblock/partitions.hpp"
#include "spinblock/root_datum.hpp"
#include "spinblock/spin_blocks.hpp"
#include "spinblock/tableaux.hpp"

namespace spinblock {

using Json = nlohmann::json;

// Laurent polynomials are arrays of [exponent, coefficient] pairs sorted by exponent.
void to_json(Json& j, const LaurentPoly& x);
void from_json(const Json& j, LaurentPoly& x);
// Root vectors are arrays of integral coordinates m_0..m_l.
void to_json(Json& j, const RootVector& x);
void from_json(const Json& j, RootVector& x);
void to_json(Json& j, const Word& x);
void from_json(const Json& j, Word& x);
// Nodes are [component, row, column].
void to_json(Json& j, const Node& x);
void from_json(const Json& j, Node& x);
void to_json(Json& j, const Tableau& x);
void from_json(const Json& j, Tableau& x);
void to_json(Json& j, const FockVector& x);
void from_json(const Json& j, FockVector& x);

struct BlockReport {
    RootVector theta;
    long long dimension = 0;
    long long num_weight_words = 0;
    friend bool operator==(const BlockReport&, const BlockReport&) = default;
};
BlockReport block_report(const Superblock& b);
void to_json(Json& j, const BlockReport& x);
void from_json(const Json& j, BlockReport& x);
// Coefficients of e_theta as [basis index, a, b] for a + b x in F_{p^2}.
Json idempotent_json(const FqVec& x);

// Components separated by '|' or ';', parts by ','.
Multipartition parse_multipartition(const std::string& s);
// Sorted c*q^e terms joined by " + "; "0" for the zero polynomial.
std::string laurent_table_string(const LaurentPoly& x);

}  // namespace spinblock

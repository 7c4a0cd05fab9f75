#include "spinblock/io.hpp"

#include <sstream>
#include <stdexcept>

namespace spinblock {

void to_json(Json& j, const LaurentPoly& x) {
    j = Json::array();
    for (const auto& [e, c] : x.pairs()) j.push_back({e, c});
}

void from_json(const Json& j, LaurentPoly& x) {
    std::vector<std::pair<int, LaurentPoly::Coeff>> pairs;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("polynomial terms are [exponent, coefficient]");
        pairs.push_back({t[0].get<int>(), t[1].get<LaurentPoly::Coeff>()});
    }
    x = LaurentPoly::from_pairs(pairs);
}

void to_json(Json& j, const RootVector& x) { j = x.coords(); }

void from_json(const Json& j, RootVector& x) {
    const auto c = j.get<std::vector<long long>>();
    if (c.size() < 2) throw std::invalid_argument("root vectors need at least two coordinates");
    x = RootVector::from_coords((int)c.size() - 1, c);
}

void to_json(Json& j, const Word& x) {
    j = Json{{"letters", x.letters}};
    if (x.divided()) j["exponents"] = x.exponents;
}

void from_json(const Json& j, Word& x) {
    x.letters = j.at("letters").get<std::vector<int>>();
    x.exponents = j.contains("exponents") ? j["exponents"].get<std::vector<int>>() : std::vector<int>{};
}

void to_json(Json& j, const Node& x) { j = Json::array({x.comp, x.row, x.col}); }

void from_json(const Json& j, Node& x) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("nodes are [component, row, column]");
    x.comp = j[0].get<int>();
    x.row = j[1].get<int>();
    x.col = j[2].get<int>();
}

void to_json(Json& j, const Tableau& x) { j = Json{{"shape", x.shape}, {"filling", x.filling}}; }

void from_json(const Json& j, Tableau& x) {
    x.shape = j.at("shape").get<Multipartition>();
    x.filling = j.at("filling").get<std::vector<Node>>();
}

void to_json(Json& j, const FockVector& x) {
    Json terms = Json::array();
    for (const auto& [shape, c] : x.terms) terms.push_back({{"shape", shape}, {"coeff", c}});
    j = Json{{"p", x.p}, {"level", x.level}, {"terms", terms}};
}

void from_json(const Json& j, FockVector& x) {
    x = FockVector(j.at("p").get<int>(), j.at("level").get<int>());
    for (const auto& t : j.at("terms")) x.add(t.at("shape").get<Multipartition>(), t.at("coeff").get<LaurentPoly>());
}

BlockReport block_report(const Superblock& b) { return {b.theta, b.dimension, (long long)b.words.size()}; }

void to_json(Json& j, const BlockReport& x) {
    j = Json{{"theta", x.theta}, {"dimension", x.dimension}, {"num_weight_words", x.num_weight_words}};
}

void from_json(const Json& j, BlockReport& x) {
    x.theta = j.at("theta").get<RootVector>();
    x.dimension = j.at("dimension").get<long long>();
    x.num_weight_words = j.at("num_weight_words").get<long long>();
}

Json idempotent_json(const FqVec& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x) out.push_back({k, c.a, c.b});
    return out;
}

Multipartition parse_multipartition(const std::string& s) {
    Multipartition out;
    std::string cleaned;
    for (char c : s)
        if (c != ' ') cleaned.push_back(c == ';' ? '|' : c);
    if (!cleaned.empty() && cleaned.front() == '(' && cleaned.back() == ')' && cleaned.find('|') != std::string::npos)
        cleaned = cleaned.substr(1, cleaned.size() - 2);
    std::stringstream ss(cleaned);
    std::string part;
    while (std::getline(ss, part, '|')) out.push_back(parse_partition(part));
    if (!cleaned.empty() && cleaned.back() == '|') out.push_back({});
    if (out.empty()) out.push_back({});
    return out;
}

std::string laurent_table_string(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : x.pairs()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*q^" + std::to_string(e);
    }
    return s;
}

}  // namespace spinblock

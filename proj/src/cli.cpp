#include "spinblock/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>

#include "spinblock/dims.hpp"
#include "spinblock/io.hpp"
#include "spinblock/super_algebra.hpp"

namespace spinblock {

namespace {

constexpr int kMaxPartitionSize = 40;
constexpr int kMaxHeight = 10;
constexpr int kMaxBlockRank = 7;
constexpr int kMaxWeight = 5;

struct Report {
    Json data;
    std::vector<std::vector<std::string>> table;  // first row is the header
};

class PolicyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void cap(long long value, long long bound, const std::string& what, bool force) {
    if (!force && value > bound)
        throw PolicyError(what + " = " + std::to_string(value) + " exceeds the policy bound " + std::to_string(bound) +
                          " (use --force to override)");
}

void print_table(const Report& r, std::ostream& out) {
    std::vector<std::size_t> width;
    for (const auto& row : r.table)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : r.table) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

std::string coords_string(const RootVector& theta) {
    std::string s;
    for (long long c : theta.coords()) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s;
}

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    }
    return out;
}

Report scalar_report(const std::string& name, Json value, const std::string& shown) {
    return {std::move(value), {{"field", "value"}, {name, shown}}};
}

// Parsed options shared by the subcommands.
struct Options {
    int p = 3;
    int level = 1;
    int d = 1;
    int n = 1;
    int ell = 1;
    std::string lambda, shape, word, theta, word_i, word_j, apply, start, check, build;
    bool ungraded = false, form = false, strict = false, idempotents = false;
};

void check_p(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    for (int k = 3; k * k <= p; k += 2)
        if (p % k == 0) throw std::invalid_argument("p must be an odd prime");
}

// Abacus computations are linear in |lambda|, so the size bound is not applied to them.
Report cmd_core(const Options& o, bool) {
    const Partition lam = parse_partition(o.lambda);
    const Partition c = bar_core(lam, o.p);
    return scalar_report("core", c, format_partition(c));
}

Report cmd_quotient(const Options& o, bool) {
    const Partition lam = parse_partition(o.lambda);
    const Multipartition q = bar_quotient(lam, o.p);
    return scalar_report("quotient", q, format_multipartition(q));
}

Report cmd_weight(const Options& o, bool) {
    const Partition lam = parse_partition(o.lambda);
    const int w = bar_weight(lam, o.p);
    return scalar_report("weight", w, std::to_string(w));
}

Report cmd_content(const Options& o, bool) {
    const Partition lam = parse_partition(o.lambda);
    const RootVector c = content(lam, o.p);
    return scalar_report("content", c, coords_string(c));
}

Report cmd_rouquier(const Options& o, bool force) {
    cap(o.d, kMaxWeight, "d", force);
    if (o.d < 0) throw std::invalid_argument("d must be nonnegative");
    if (!o.check.empty()) {
        const Partition rho = parse_partition(o.check);
        cap(partition_size(rho), kMaxPartitionSize, "|rho|", force);
        const bool ok = is_rouquier(rho, o.p, o.d);
        return scalar_report("rouquier", ok, ok ? "true" : "false");
    }
    const Partition rho = rouquier_core(o.p, o.d);
    return scalar_report("core", rho, format_partition(rho));
}

Report cmd_tableaux(const Options& o, bool force) {
    const Multipartition shape = parse_multipartition(o.shape);
    cap(partition_size(shape), kMaxPartitionSize, "|shape|", force);
    cap(partition_size(shape), kMaxHeight, "ht(theta) of the shape", force);
    std::optional<std::vector<int>> word;
    if (!o.word.empty()) word = parse_word(o.word, ell_of(o.p));
    const auto ts = enumerate_std(shape, o.p, word, o.strict);
    Report r;
    r.data = {{"count", ts.size()}, {"tableaux", Json::array()}};
    r.table.push_back({"#", "word", "degree"});
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto w = word_of(ts[k], o.p);
        const LaurentPoly deg = tableau_degree(ts[k], o.p);
        Json t = ts[k];
        t["word"] = w;
        t["degree"] = deg;
        r.data["tableaux"].push_back(t);
        r.table.push_back({std::to_string(k + 1), format_word(w, ell_of(o.p)), laurent_table_string(deg)});
    }
    return r;
}

Report cmd_dim(const Options& o, bool force, std::ostream& err) {
    const int ell = ell_of(o.p);
    const auto wi = parse_word(o.word_i, ell);
    const auto wj = parse_word(o.word_j.empty() ? o.word_i : o.word_j, ell);
    RootVector theta = word_content(wi, ell);
    if (!o.theta.empty()) {
        const auto c = parse_ints(o.theta);
        if ((int)c.size() != ell + 1) throw std::invalid_argument("theta needs l + 1 coordinates");
        theta = RootVector::from_coords(ell, c);
    }
    cap(theta.twice_height() / 2, kMaxHeight, "ht(theta)", force);
    if (o.level < 1) throw std::invalid_argument("level N must be positive");
    if (o.ungraded) {
        const long long v = ungraded_dim(o.level, theta, wi, wj, o.p);
        return scalar_report("dim", v, std::to_string(v));
    }
    bool mismatch = false;
    const LaurentPoly v = graded_dim(o.level, theta, wi, wj, o.p, &mismatch);
    if (mismatch) err << "note: word content differs from theta; the truncation is zero\n";
    return scalar_report("dim", v, laurent_table_string(v));
}

Report cmd_fock(const Options& o, bool force) {
    if (o.level < 1) throw std::invalid_argument("level N must be positive");
    FockVector v = o.start.empty() ? FockVector::vacuum(o.p, o.level)
                                   : FockVector::basis(parse_multipartition(o.start), o.p);
    std::vector<std::pair<char, int>> ops;
    std::stringstream ss(o.apply);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.size() < 2 || (tok[0] != 'F' && tok[0] != 'E'))
            throw std::invalid_argument("operators are F<i> or E<i>: " + tok);
        const int i = std::stoi(tok.substr(1));
        if (i < 0 || i > ell_of(o.p)) throw std::invalid_argument("operator index outside I: " + tok);
        ops.push_back({tok[0], i});
    }
    cap((long long)ops.size(), kMaxHeight, "number of operators", force);
    for (const auto& [kind, i] : ops) v = kind == 'F' ? apply_F(i, v) : apply_E(i, v);
    if (o.form) {
        const LaurentPoly f = form(v, v);
        return scalar_report("form", f, laurent_table_string(f));
    }
    Report r;
    r.data = v;
    r.table.push_back({"shape", "coefficient"});
    for (const auto& [shape, c] : v.terms) r.table.push_back({format_multipartition(shape), laurent_table_string(c)});
    return r;
}

Report cmd_cuspidal(const Options& o, bool force) {
    const int ell = o.ell;
    if (ell < 1) throw std::invalid_argument("l must be positive");
    const auto w = parse_word(o.word, ell);
    cap((long long)w.size(), kMaxHeight, "ht(theta)", force);
    const bool c = is_cuspidal(w, ell);
    return scalar_report("cuspidal", c, c ? "true" : "false");
}

Report cmd_ydim(const Options& o, bool force) {
    cap(o.d, kMaxWeight, "d", force);
    if (o.d < 0) throw std::invalid_argument("d must be nonnegative");
    const long long v = dim_Yd_closed(o.p, o.d);
    return scalar_report("dim", v, std::to_string(v));
}

Report algebra_summary(const std::string& name, const SuperAlgebra& a, bool all_triples) {
    const bool assoc = all_triples ? associative_on_basis(a) : associative_on_samples(a, 200, 1);
    const bool unital = unit_laws(a);
    const LaurentPoly g = graded_dimension(a);
    Report r;
    r.data = {{"algebra", name}, {"dim", a.dim()}, {"graded_dim", g}, {"associative", assoc}, {"unital", unital}};
    r.table = {{"field", "value"},
               {"algebra", name},
               {"dim", std::to_string(a.dim())},
               {"graded_dim", laurent_table_string(g)},
               {"associative", assoc ? "true" : "false"},
               {"unital", unital ? "true" : "false"}};
    return r;
}

Report cmd_algebra(const Options& o, bool force) {
    cap(o.d, kMaxWeight, "d", force);
    cap(o.ell, 4, "l", force);
    if (o.ell < 1 || o.d < 1) throw std::invalid_argument("l and d must be positive");
    if (o.build == "A") {
        auto a = build_A(o.ell);
        Report r = algebra_summary("A", *a, true);
        const bool nondeg = gram_determinant(*a, zigzag_trace(*a, o.ell)) != Fraction(0);
        r.data["trace_nondegenerate"] = nondeg;
        r.table.push_back({"trace_nondegenerate", nondeg ? "true" : "false"});
        return r;
    }
    if (o.build == "B") {
        auto b = build_B(o.ell);
        Report r = algebra_summary("B", *b, true);
        const bool iso = check_zigzag_iso(o.ell).ok();
        r.data["isomorphic_to_A_tensor_C1"] = iso;
        r.table.push_back({"isomorphic_to_A_tensor_C1", iso ? "true" : "false"});
        return r;
    }
    if (o.build == "wreath") return algebra_summary("wreath", *wreath(build_A(o.ell), o.d), false);
    if (o.build == "Hd") {
        const long long dim = hd_quotient_wreath_dim(o.ell, o.d);
        const bool match = hd_matches_wreath(o.ell, o.d, 200, 1);
        Report r;
        r.data = {{"algebra", "Hd"}, {"z_free_dim", dim}, {"matches_wreath", match}};
        r.table = {{"field", "value"},
                   {"algebra", "Hd"},
                   {"z_free_dim", std::to_string(dim)},
                   {"matches_wreath", match ? "true" : "false"}};
        return r;
    }
    throw std::invalid_argument("--build must be one of A, B, Hd, wreath");
}

Report cmd_blocks(const Options& o, bool force) {
    cap(o.n, kMaxBlockRank, "n", force);
    if (o.n < 1) throw std::invalid_argument("n must be positive");
    Report r;
    r.data = Json::array();
    r.table.push_back({"theta", "dimension", "num_weight_words"});
    for (const auto& b : superblocks(o.n, o.p)) {
        const BlockReport br = block_report(b);
        Json j = br;
        if (o.idempotents) j["idempotent"] = idempotent_json(b.idempotent);
        r.data.push_back(j);
        r.table.push_back({coords_string(br.theta), std::to_string(br.dimension), std::to_string(br.num_weight_words)});
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin block combinatorics and algebra checks"};
    app.require_subcommand(1);
    std::string format = "json";
    bool force = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--force", force, "Override policy bounds");
    app.fallthrough();

    Options o;
    std::function<Report()> action;
    auto sub = [&](const std::string& name, const std::string& help, std::function<Report()> f) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, f] { action = f; });
        return s;
    };
    auto add_p = [&](CLI::App* s) { s->add_option("--p", o.p, "Odd prime")->required(); };

    for (const auto& [name, fn] :
         std::vector<std::pair<std::string, std::function<Report(const Options&, bool)>>>{
             {"core", cmd_core}, {"quotient", cmd_quotient}, {"weight", cmd_weight}, {"content", cmd_content}}) {
        auto f = fn;
        CLI::App* s = sub(name, "Bar " + name + " of a partition", [&o, &force, f] { return f(o, force); });
        add_p(s);
        s->add_option("--lambda", o.lambda, "Partition, comma separated")->required();
    }
    {
        CLI::App* s = sub("rouquier", "d-Rouquier bar core, or a Rouquier test",
                          [&o, &force] { return cmd_rouquier(o, force); });
        add_p(s);
        s->add_option("--d", o.d, "Weight")->required();
        s->add_option("--check", o.check, "Core to test");
    }
    {
        CLI::App* s = sub("tableaux", "Standard tableaux of a shape", [&o, &force] { return cmd_tableaux(o, force); });
        add_p(s);
        s->add_option("--shape", o.shape, "Multipartition, components separated by |")->required();
        s->add_option("--word", o.word, "Residue word");
        s->add_flag("--strict", o.strict, "Strictly standard tableaux only");
    }
    {
        CLI::App* s = sub("dim", "Dimension of an idempotent truncation",
                          [&o, &force, &err] { return cmd_dim(o, force, err); });
        add_p(s);
        s->add_option("--N", o.level, "Level");
        s->add_option("--theta", o.theta, "Coordinates m_0,...,m_l");
        s->add_option("--i", o.word_i, "Left word")->required();
        s->add_option("--j", o.word_j, "Right word");
        s->add_flag("--ungraded", o.ungraded, "Ungraded dimension");
    }
    {
        CLI::App* s = sub("fock", "Apply Chevalley operators to the vacuum", [&o, &force] { return cmd_fock(o, force); });
        add_p(s);
        s->add_option("--N", o.level, "Level");
        s->add_option("--apply", o.apply, "Operators applied left to right, e.g. F0,F1")->required();
        s->add_option("--start", o.start, "Starting multipartition instead of the vacuum");
        s->add_flag("--form", o.form, "Print the Shapovalov form of the result with itself");
    }
    {
        CLI::App* s = sub("cuspidal", "Cuspidality of a word of content d delta",
                          [&o, &force] { return cmd_cuspidal(o, force); });
        s->add_option("--l", o.ell, "Rank l")->required();
        s->add_option("--word", o.word, "Word")->required();
    }
    {
        CLI::App* s = sub("ydim", "Dimension of the weight d wreath algebra", [&o, &force] { return cmd_ydim(o, force); });
        add_p(s);
        s->add_option("--d", o.d, "Weight")->required();
    }
    {
        CLI::App* s = sub("algebra", "Build a superalgebra and run structural checks",
                          [&o, &force] { return cmd_algebra(o, force); });
        s->add_option("--build", o.build, "A, B, Hd or wreath")->required()->check(
            CLI::IsMember({"A", "B", "Hd", "wreath"}));
        s->add_option("--l", o.ell, "Rank l")->required();
        s->add_option("--d", o.d, "Wreath rank");
    }
    {
        CLI::App* s = sub("blocks", "Superblocks of the twisted group algebra", [&o, &force] { return cmd_blocks(o, force); });
        add_p(s);
        s->add_option("--n", o.n, "Degree")->required();
        s->add_flag("--idempotents", o.idempotents, "Include e_theta coefficients");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitValidation;
    }

    if (const char* threads = std::getenv("SPINBLOCK_THREADS")) {
        char* end = nullptr;
        const long t = std::strtol(threads, &end, 10);
        if (*threads == '\0' || *end != '\0' || t < 1) {
            err << "error: SPINBLOCK_THREADS must be a positive integer\n";
            return kExitValidation;
        }
    }

    try {
        check_p(o.p);
        if (!action) throw std::logic_error("no subcommand dispatched");
        const Report r = action();
        if (format == "table")
            print_table(r, out);
        else
            out << r.data.dump() << "\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace spinblock

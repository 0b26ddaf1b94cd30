#include "cli.hpp"

#include "fixedpoint/constraints.hpp"
#include "fixedpoint/families.hpp"
#include "fixedpoint/isotropy.hpp"
#include "fixedpoint/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fixedpoint::cli {

namespace {

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path, std::istream &in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot read " + path);
    buf << file.rdbuf();
    return buf.str();
}

Datum load_datum(const std::string &path, std::istream &in) {
    try {
        return parse_datum(read_input(path, in));
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

CheckConfig make_config(const std::string &checks, const std::string &force) {
    try {
        if (checks.empty() || checks == "all") {
            auto cfg = CheckConfig::all();
            for (const auto &name : split_list(force)) {
                auto id = check_from_name(name);
                if (!id)
                    throw std::invalid_argument("unknown check \"" + name + "\"");
                cfg.force(*id);
            }
            return cfg;
        }
        return CheckConfig(split_list(checks), split_list(force));
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
}

std::uint64_t node_cap_from_env(std::uint64_t fallback) {
    const char *env = std::getenv("FIXEDPOINT_NODE_CAP");
    if (!env || !*env)
        return fallback;
    try {
        std::size_t used = 0;
        auto v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument("bad cap");
        return v;
    } catch (const std::exception &) {
        throw InputError(std::string("FIXEDPOINT_NODE_CAP must be a positive integer, got \"") +
                         env + "\"");
    }
}

struct CheckArgs {
    std::string path;
    std::string checks;
    std::string force;
    bool json = false;
};

struct EnumerateArgs {
    std::size_t points = 0;
    std::size_t half_dim = 0;
    Weight max_weight = 0;
    bool dedup = false;
    bool primitive = false;
    bool json = false;
    bool no_prune = false;
    std::string checks;
    std::string force;
    unsigned threads = 1;
    std::uint64_t node_cap = 0;
};

struct FamilyArgs {
    std::string name;
    Weight a = 1;
    Weight b = 1;
};

struct ExpandArgs {
    std::string path;
    int index = 0;
    int degree = -1;
};

int cmd_check(const CheckArgs &args, std::istream &in, std::ostream &out) {
    const auto cfg = make_config(args.checks, args.force);
    const Datum d = load_datum(args.path, in);
    const auto report = run_suite(d, cfg);
    if (args.json)
        out << report_to_json(report).dump() << '\n';
    else
        out << report_to_text(report);
    return report.overall ? kPass : kFail;
}

int cmd_enumerate(const EnumerateArgs &args, std::ostream &out, std::ostream &err) {
    SearchSpace space;
    space.point_count = args.points;
    space.half_dim = args.half_dim;
    space.max_weight = args.max_weight;
    space.config = make_config(args.checks, args.force);
    space.dedup_negation = args.dedup;
    space.primitive_only = args.primitive;
    space.prune = !args.no_prune;
    space.threads = std::max(1u, args.threads);
    space.node_cap = args.node_cap ? args.node_cap : node_cap_from_env(space.node_cap);

    std::vector<Datum> survivors;
    try {
        enumerate(space, [&](const Datum &d) {
            out << serialize_datum(d) << '\n';
            survivors.push_back(d);
        });
    } catch (const SearchOverflow &e) {
        out.flush();
        err << "error: " << e.what() << '\n';
        return kNodeCapExceeded;
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    const auto summary = classify_report(survivors);
    if (args.json) {
        out << nlohmann::ordered_json{{"summary", summary_to_json(summary)}}.dump() << '\n';
    } else {
        std::istringstream lines(summary_to_text(summary));
        for (std::string line; std::getline(lines, line);)
            out << "# " << line << '\n';
    }
    return kPass;
}

int cmd_family(const FamilyArgs &args, std::ostream &out) {
    try {
        out << serialize_datum(family(args.name, args.a, args.b)) << '\n';
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    return kPass;
}

int cmd_expand(const ExpandArgs &args, std::istream &in, std::ostream &out) {
    const Datum d = load_datum(args.path, in);
    if (args.index < 0 || static_cast<std::size_t>(args.index) > d.half_dim())
        throw InputError("--index must lie in 0.." + std::to_string(d.half_dim()));

    const int i = args.index;
    const auto terms = index_identity_terms(d, i);
    const auto verdict = check_index_identity(d, i);
    out << "identity i=" << i << " for " << to_string(d) << '\n';
    for (std::size_t p = 0; p < terms.size(); ++p) {
        out << "  point " << p << " " << to_string(d.point(p)) << ": " << terms[p].to_string()
            << '\n';
    }
    out << "common denominator: " << denominator_to_string(verdict.denominator) << '\n';
    out << "numerator: " << verdict.numerator.to_string() << '\n';
    if (verdict.pass)
        out << "sum: " << verdict.constant << '\n';
    else
        out << "sum: (" << verdict.numerator.to_string() << ") / "
            << denominator_to_string(verdict.denominator) << " (not constant)\n";
    out << "constant: (-1)^" << i << " N^" << i << " = " << verdict.constant << '\n';
    out << "residual: " << verdict.residual.to_string() << '\n';
    if (args.degree >= 0) {
        const auto T = static_cast<std::size_t>(args.degree);
        std::vector<std::int64_t> sum(T + 1, 0);
        for (const auto &f : terms) {
            auto s = series_expand(f, T);
            for (std::size_t j = 0; j <= T; ++j)
                sum[j] += s[j];
        }
        out << "series to t^" << T << ":";
        for (auto c : sum)
            out << ' ' << c;
        out << '\n';
    }
    out << "verdict: " << (verdict.pass ? "PASS" : "FAIL") << '\n';
    return verdict.pass ? kPass : kFail;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Necessary-condition checks and bounded classification of fixed-point data "
                 "of circle actions"};
    app.name("fixedpoint");
    app.require_subcommand(1, 1);

    CheckArgs check_args;
    auto *check = app.add_subcommand("check", "Run the check suite on a datum file");
    check->add_option("path", check_args.path, "Datum JSON file, or - for stdin")->required();
    check->add_option("--checks", check_args.checks, "Comma-separated checks to enable (default: all)");
    check->add_option("--force", check_args.force, "Comma-separated checks whose gates are forced open");
    check->add_flag("--json", check_args.json, "Emit the report as JSON");

    EnumerateArgs en_args;
    auto *en = app.add_subcommand("enumerate", "Enumerate canonical data passing the suite");
    en->add_option("--points", en_args.points, "Number of fixed points")->required()->check(CLI::PositiveNumber);
    en->add_option("--half-dim", en_args.half_dim, "Half-dimension n")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--max-weight", en_args.max_weight, "Largest |weight|")->required()->check(CLI::PositiveNumber);
    en->add_flag("--dedup-negation", en_args.dedup, "Keep one datum per negation pair");
    en->add_flag("--primitive", en_args.primitive, "Keep only data with weight gcd 1");
    en->add_flag("--json", en_args.json, "Emit the summary as a JSON record");
    en->add_flag("--no-prune", en_args.no_prune, "Generate then filter without partial pruning");
    en->add_option("--checks", en_args.checks, "Comma-separated checks to enable (default: all)");
    en->add_option("--force", en_args.force, "Comma-separated checks whose gates are forced open");
    en->add_option("--threads", en_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    en->add_option("--node-cap", en_args.node_cap, "Partial-state cap (overrides FIXEDPOINT_NODE_CAP)")
        ->check(CLI::PositiveNumber);

    FamilyArgs fam_args;
    auto *fam = app.add_subcommand("family", "Print a known family member");
    fam->add_option("name", fam_args.name, "sphere2 | sphere6 | cp2")->required();
    fam->add_option("--a", fam_args.a, "First parameter");
    fam->add_option("--b", fam_args.b, "Second parameter");

    ExpandArgs ex_args;
    auto *ex = app.add_subcommand("expand", "Trace one index identity");
    ex->add_option("path", ex_args.path, "Datum JSON file, or - for stdin")->required();
    ex->add_option("--index", ex_args.index, "Identity index i")->required();
    ex->add_option("--degree", ex_args.degree, "Also print the summed power series to this degree");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (*check)
            return cmd_check(check_args, in, out);
        if (*en)
            return cmd_enumerate(en_args, out, err);
        if (*fam)
            return cmd_family(fam_args, out);
        if (*ex)
            return cmd_expand(ex_args, in, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace fixedpoint::cli

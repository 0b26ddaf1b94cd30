#include "fixedpoint/constraints.hpp"

#include "fixedpoint/checked.hpp"
#include "fixedpoint/isotropy.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fixedpoint {

namespace {

constexpr std::array<std::string_view, check_count> names = {
    "index_identities", "profile_symmetry", "weight_balance", "chern_total",
    "parity",           "adjacent_profile", "abbv",           "minimum_counts",
    "three_point_shape", "modk",
};

// Exact rational with reduced 64-bit components and positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reciprocal_of(std::int64_t x) {
        return x < 0 ? Rational{-1, checked_neg(x)} : Rational{1, x};
    }

    Rational &operator+=(const Rational &o) {
        std::int64_t g = std::gcd(den, o.den);
        std::int64_t lhs = checked_mul(num, o.den / g);
        std::int64_t rhs = checked_mul(o.num, den / g);
        num = checked_add(lhs, rhs);
        den = checked_mul(den / g, o.den);
        std::int64_t r = std::gcd(num, den);
        if (r > 1) {
            num /= r;
            den /= r;
        }
        if (num == 0)
            den = 1;
        return *this;
    }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

nlohmann::ordered_json identity_witness(const IdentityVerdict &v) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto &t : v.residual.terms())
        terms.push_back({t.exponent, t.coefficient});
    nlohmann::ordered_json w = {
        {"index", v.index.value_or(-1)},
        {"constant", v.constant},
        {"residual", v.residual.to_string()},
        {"residual_terms", terms},
        {"denominator", v.denominator},
    };
    return w;
}

void require_index(const Datum &d, int i) {
    if (i < 0 || static_cast<std::size_t>(i) > d.half_dim())
        throw std::out_of_range("identity index " + std::to_string(i) + " outside 0.." +
                                std::to_string(d.half_dim()));
}

} // namespace

std::string_view check_name(CheckId id) { return names[static_cast<std::size_t>(id)]; }

std::optional<CheckId> check_from_name(std::string_view name) {
    for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == name)
            return static_cast<CheckId>(j);
    return std::nullopt;
}

CheckConfig CheckConfig::all() {
    CheckConfig cfg;
    cfg.enabled_.set();
    return cfg;
}

CheckConfig::CheckConfig(const std::vector<std::string> &enabled,
                         const std::vector<std::string> &forced) {
    auto lookup = [](const std::string &name) {
        auto id = check_from_name(name);
        if (!id)
            throw std::invalid_argument("unknown check \"" + name + "\"");
        return *id;
    };
    for (const auto &name : enabled)
        enable(lookup(name));
    for (const auto &name : forced)
        force(lookup(name));
}

CheckConfig::CheckConfig(std::initializer_list<CheckId> enabled) {
    for (auto id : enabled)
        enable(id);
}

CheckConfig &CheckConfig::enable(CheckId id) {
    enabled_.set(index(id));
    return *this;
}

CheckConfig &CheckConfig::force(CheckId id) {
    forced_.set(index(id));
    return *this;
}

std::vector<CheckId> CheckConfig::enabled_checks() const {
    std::vector<CheckId> out;
    for (auto id : report_order)
        if (enabled(id))
            out.push_back(id);
    return out;
}

std::vector<Fraction> index_identity_terms(const Datum &d, int i) {
    require_index(d, i);
    std::vector<Fraction> terms;
    terms.reserve(d.point_count());
    for (const auto &p : d.points())
        terms.push_back(sigma_term(p.weights(), i));
    return terms;
}

std::int64_t index_identity_constant(const Datum &d, int i) {
    require_index(d, i);
    auto n_i = static_cast<std::int64_t>(profile(d).counts[static_cast<std::size_t>(i)]);
    return i % 2 == 0 ? n_i : -n_i;
}

IdentityVerdict check_index_identity(const Datum &d, int i) {
    auto terms = index_identity_terms(d, i);
    IdentityVerdict v = frac_sum_is_constant(terms, index_identity_constant(d, i));
    v.index = i;
    return v;
}

SeriesVerdict check_index_identity_series(const Datum &d, int i) {
    auto terms = index_identity_terms(d, i);
    return series_sum_is_constant(terms, index_identity_constant(d, i));
}

std::vector<IdentityVerdict> check_index_all(const Datum &d) {
    std::vector<IdentityVerdict> out;
    for (int i = 0; static_cast<std::size_t>(i) <= d.half_dim(); ++i)
        out.push_back(check_index_identity(d, i));
    return out;
}

Verdict check_index_identities(const Datum &d) {
    for (int i = 0; static_cast<std::size_t>(i) <= d.half_dim(); ++i) {
        auto v = check_index_identity(d, i);
        if (!v.pass)
            return Verdict::fail(identity_witness(v));
    }
    return Verdict::pass();
}

Verdict check_profile_symmetry(const Datum &d) {
    const auto counts = profile(d).counts;
    const std::size_t n = d.half_dim();
    for (std::size_t i = 0; i <= n; ++i)
        if (counts[i] != counts[n - i])
            return Verdict::fail({{"index", i}, {"count", counts[i]}, {"mirror_count", counts[n - i]}});
    return Verdict::pass();
}

Verdict check_weight_balance(const Datum &d) {
    std::map<Weight, std::int64_t> excess; // keyed by |l|: N(l) - N(-l)
    for (const auto &p : d.points())
        for (auto w : p.weights())
            excess[w < 0 ? checked_neg(w) : w] += w > 0 ? 1 : -1;
    for (auto [l, e] : excess)
        if (e != 0)
            return Verdict::fail({{"weight", l},
                                  {"multiplicity", multiplicity(d, l)},
                                  {"opposite_multiplicity", multiplicity(d, -l)}});
    return Verdict::pass();
}

Verdict check_chern_total(const Datum &d) {
    Weight total = 0;
    for (const auto &p : d.points())
        total = checked_add(total, chern_sum(p));
    if (total != 0)
        return Verdict::fail({{"total", total}});
    return Verdict::pass();
}

Verdict check_parity(const Datum &d) {
    if (d.point_count() % 2 == 1 && d.half_dim() % 2 == 1)
        return Verdict::fail({{"points", d.point_count()}, {"half_dim", d.half_dim()}});
    return Verdict::pass();
}

Verdict check_adjacent_profile(const Datum &d) {
    const auto counts = profile(d).counts;
    if (d.half_dim() == 0)
        return Verdict::pass();
    for (std::size_t i = 0; i + 1 < counts.size(); ++i)
        if (counts[i] > 0 && counts[i + 1] > 0)
            return Verdict::pass();
    return Verdict::fail({{"profile", counts}});
}

Verdict check_abbv(const Datum &d) {
    if (d.half_dim() == 0)
        return Verdict::not_applicable();
    Rational total;
    for (const auto &p : d.points()) {
        Weight product = 1;
        for (auto w : p.weights())
            product = checked_mul(product, w);
        total += Rational::reciprocal_of(product);
    }
    if (total.num != 0)
        return Verdict::fail({{"total", total.to_string()}});
    return Verdict::pass();
}

Verdict check_minimum_counts(const Datum &d) {
    const std::size_t k = d.point_count(), n = d.half_dim();
    nlohmann::ordered_json base = {{"points", k}, {"half_dim", n}};
    if (n >= 1 && k < 2) {
        base["clause"] = "at_least_two_points";
        return Verdict::fail(base);
    }
    if (n >= 4 && k < 3) {
        base["clause"] = "at_least_three_points_from_dim_8";
        return Verdict::fail(base);
    }
    if (n >= 3 && k <= 3) {
        for (std::size_t p = 0; p < k; ++p) {
            Weight c = chern_sum(d.point(p));
            if (c != 0) {
                base["clause"] = "chern_vanishing_from_dim_6";
                base["point"] = p;
                base["chern_sum"] = c;
                return Verdict::fail(base);
            }
        }
    }
    return Verdict::pass();
}

Verdict check_three_point_shape(const Datum &d, bool force) {
    const std::size_t k = d.point_count(), n = d.half_dim();
    if (!force && !(k == 3 && n >= 2 && n % 2 == 0))
        return Verdict::not_applicable();
    std::vector<Weight> all;
    for (const auto &p : d.points())
        all.insert(all.end(), p.weights().begin(), p.weights().end());
    if (all.empty())
        return Verdict::fail({{"clause", "no_weights"}});
    auto [lo, hi] = std::minmax_element(all.begin(), all.end());
    auto max_count = std::count(all.begin(), all.end(), *hi);
    auto min_count = std::count(all.begin(), all.end(), *lo);
    if (max_count != 1)
        return Verdict::fail({{"clause", "largest_weight_unique"}, {"weight", *hi}, {"count", max_count}});
    if (min_count != 1)
        return Verdict::fail({{"clause", "smallest_weight_unique"}, {"weight", *lo}, {"count", min_count}});
    const auto counts = profile(d).counts;
    bool shaped = k == 3 && n >= 2 && n % 2 == 0;
    if (shaped) {
        for (std::size_t i = 0; i <= n; ++i) {
            bool expected = i + 1 == n / 2 || i == n / 2 || i == n / 2 + 1;
            if (counts[i] != (expected ? 1u : 0u))
                shaped = false;
        }
    }
    if (!shaped)
        return Verdict::fail({{"clause", "negative_weight_counts"}, {"profile", counts}});
    return Verdict::pass();
}

Verdict run_check(CheckId id, const Datum &d, const CheckConfig &cfg) {
    try {
        switch (id) {
        case CheckId::IndexIdentities:
            return check_index_identities(d);
        case CheckId::ProfileSymmetry:
            return check_profile_symmetry(d);
        case CheckId::WeightBalance:
            return check_weight_balance(d);
        case CheckId::ChernTotal:
            return check_chern_total(d);
        case CheckId::Parity:
            return check_parity(d);
        case CheckId::AdjacentProfile:
            return check_adjacent_profile(d);
        case CheckId::Abbv:
            return check_abbv(d);
        case CheckId::MinimumCounts:
            return check_minimum_counts(d);
        case CheckId::ThreePointShape:
            return check_three_point_shape(d, cfg.forced(id));
        case CheckId::Modk:
            return check_modk_all(d);
        }
    } catch (const std::exception &e) {
        return Verdict::fail({{"error", e.what()}});
    }
    throw std::logic_error("unhandled check id");
}

const CheckResult *CheckReport::first_failure() const {
    for (const auto &c : checks)
        if (c.verdict.failed())
            return &c;
    return nullptr;
}

const CheckResult *CheckReport::find(CheckId id) const {
    for (const auto &c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

CheckReport run_suite(const Datum &d, const CheckConfig &cfg) {
    CheckReport report;
    for (auto id : cfg.enabled_checks()) {
        report.checks.push_back({id, run_check(id, d, cfg)});
        if (report.checks.back().verdict.failed())
            report.overall = false;
    }
    report.point_count = d.point_count();
    report.half_dim = d.half_dim();
    report.kosniowski_ratio =
        static_cast<double>(report.half_dim) / static_cast<double>(report.point_count);
    report.within_kosniowski_bound = report.half_dim <= 2 * report.point_count;
    report.gcd = weight_gcd(d);
    return report;
}

bool passes_suite(const Datum &d, const CheckConfig &cfg) {
    for (auto id : filter_order)
        if (cfg.enabled(id) && run_check(id, d, cfg).failed())
            return false;
    return true;
}

nlohmann::ordered_json report_to_json(const CheckReport &report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto &c : report.checks)
        checks.push_back({{"name", check_name(c.id)},
                          {"verdict", to_string(c.verdict.status)},
                          {"witness", c.verdict.witness}});
    return {
        {"overall", report.overall},
        {"checks", checks},
        {"info",
         {{"kosniowski_ratio", report.kosniowski_ratio},
          {"within_kosniowski_bound", report.within_kosniowski_bound},
          {"gcd", report.gcd},
          {"points", report.point_count},
          {"half_dim", report.half_dim}}},
    };
}

std::string witness_to_text(const nlohmann::ordered_json &witness) {
    if (witness.is_null())
        return "";
    if (!witness.is_object())
        return witness.dump();
    std::string out;
    for (const auto &[key, value] : witness.items()) {
        if (key == "residual_terms")
            continue;
        if (!out.empty())
            out += ' ';
        out += key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
}

std::string report_to_text(const CheckReport &report) {
    std::ostringstream os;
    for (const auto &c : report.checks) {
        const char *tag = c.verdict.status == Status::Pass   ? "PASS"
                          : c.verdict.status == Status::Fail ? "FAIL"
                                                             : "N-A";
        os << std::left << std::setw(18) << check_name(c.id) << ' ';
        auto w = witness_to_text(c.verdict.witness);
        if (w.empty())
            os << tag << '\n';
        else
            os << std::setw(4) << tag << '\t' << w << '\n';
    }
    os << std::left << std::setw(18) << "overall" << ' ' << (report.overall ? "PASS" : "FAIL")
       << '\n';
    os << "info: points=" << report.point_count << " half_dim=" << report.half_dim
       << " gcd=" << report.gcd << " kosniowski_ratio=" << std::setprecision(6)
       << report.kosniowski_ratio
       << " within_kosniowski_bound=" << (report.within_kosniowski_bound ? "true" : "false")
       << '\n';
    return os.str();
}

} // namespace fixedpoint

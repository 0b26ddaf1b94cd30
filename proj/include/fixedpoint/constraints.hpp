#pragma once

#include "fixedpoint/datum.hpp"
#include "fixedpoint/laurent.hpp"
#include "fixedpoint/verdict.hpp"

#include <array>
#include <bitset>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fixedpoint {

/// Necessary conditions on fixed-point data, in report order.
enum class CheckId {
    IndexIdentities,
    ProfileSymmetry,
    WeightBalance,
    ChernTotal,
    Parity,
    AdjacentProfile,
    Abbv,
    MinimumCounts,
    ThreePointShape,
    Modk,
};

inline constexpr std::size_t check_count = 10;

inline constexpr std::array<CheckId, check_count> report_order = {
    CheckId::IndexIdentities, CheckId::ProfileSymmetry, CheckId::WeightBalance,
    CheckId::ChernTotal,      CheckId::Parity,          CheckId::AdjacentProfile,
    CheckId::Abbv,            CheckId::MinimumCounts,   CheckId::ThreePointShape,
    CheckId::Modk,
};

/// Evaluation order for pure filtering: arithmetic checks first, then the
/// index identities, then the mod-k partition search.
inline constexpr std::array<CheckId, check_count> filter_order = {
    CheckId::Parity,         CheckId::WeightBalance,   CheckId::ChernTotal,
    CheckId::AdjacentProfile, CheckId::ProfileSymmetry, CheckId::MinimumCounts,
    CheckId::Abbv,           CheckId::ThreePointShape, CheckId::IndexIdentities,
    CheckId::Modk,
};

std::string_view check_name(CheckId id);
std::optional<CheckId> check_from_name(std::string_view name);

/// Which checks run, plus gates that are forced open.
///
/// Forcing three_point_shape evaluates it on every datum instead of only
/// on three-point data of even half-dimension.
class CheckConfig {
  public:
    /// Every check enabled, nothing forced.
    static CheckConfig all();
    static CheckConfig none() { return CheckConfig({}); }

    /// Throws std::invalid_argument on an unknown check name.
    explicit CheckConfig(const std::vector<std::string> &enabled,
                         const std::vector<std::string> &forced = {});
    CheckConfig(std::initializer_list<CheckId> enabled);

    bool enabled(CheckId id) const { return enabled_[index(id)]; }
    bool forced(CheckId id) const { return forced_[index(id)]; }
    CheckConfig &enable(CheckId id);
    CheckConfig &force(CheckId id);

    /// Enabled checks in report order.
    std::vector<CheckId> enabled_checks() const;

    friend bool operator==(const CheckConfig &, const CheckConfig &) = default;

  private:
    CheckConfig() = default;
    static std::size_t index(CheckId id) { return static_cast<std::size_t>(id); }

    std::bitset<check_count> enabled_;
    std::bitset<check_count> forced_;
};

/// The normalized terms sigma_i(t^{w_p}) / prod_j (1 - t^{w_p^j}), one per
/// point.
std::vector<Fraction> index_identity_terms(const Datum &d, int i);

/// (-1)^i N^i.
std::int64_t index_identity_constant(const Datum &d, int i);

/// Tests sum_p sigma_i(t^{w_p}) / prod_j (1 - t^{w_p^j}) == (-1)^i N^i by
/// clearing denominators. Throws std::out_of_range unless 0 <= i <= n.
IdentityVerdict check_index_identity(const Datum &d, int i);

/// Same identity decided through truncated power series.
SeriesVerdict check_index_identity_series(const Datum &d, int i);

/// check_index_identity for i = 0..n.
std::vector<IdentityVerdict> check_index_all(const Datum &d);

/// Aggregate of check_index_all; the witness is the first failing identity.
Verdict check_index_identities(const Datum &d);

Verdict check_profile_symmetry(const Datum &d);
Verdict check_weight_balance(const Datum &d);
Verdict check_chern_total(const Datum &d);
Verdict check_parity(const Datum &d);
Verdict check_adjacent_profile(const Datum &d);
/// sum_p 1 / prod_j w_p^j == 0, exactly. Not applicable to the weightless
/// point.
Verdict check_abbv(const Datum &d);
Verdict check_minimum_counts(const Datum &d);
/// Extremal weights occur once and the three points have n/2 - 1, n/2 and
/// n/2 + 1 negative weights. Gated to three points with even n >= 2 unless
/// forced.
Verdict check_three_point_shape(const Datum &d, bool force = false);

/// Runs a single check under the config's gates; exceptions become failing
/// verdicts with an "error" witness.
Verdict run_check(CheckId id, const Datum &d, const CheckConfig &cfg);

struct CheckResult {
    CheckId id;
    Verdict verdict;
};

struct CheckReport {
    bool overall = true;
    /// One entry per enabled check, in report order.
    std::vector<CheckResult> checks;
    std::size_t point_count = 0;
    std::size_t half_dim = 0;
    double kosniowski_ratio = 0.0;
    bool within_kosniowski_bound = true;
    Weight gcd = 0;

    const CheckResult *first_failure() const;
    const CheckResult *find(CheckId id) const;
};

CheckReport run_suite(const Datum &d, const CheckConfig &cfg = CheckConfig::all());

/// Pass/fail of run_suite without assembling witnesses; stops at the first
/// failing check in filter order.
bool passes_suite(const Datum &d, const CheckConfig &cfg);

nlohmann::ordered_json report_to_json(const CheckReport &report);

/// One line per check: padded name, PASS/FAIL/N-A, and the witness after a
/// tab. Followed by an overall line and the informational fields.
std::string report_to_text(const CheckReport &report);

/// key=value rendering of a witness object, used by the text report.
std::string witness_to_text(const nlohmann::ordered_json &witness);

} // namespace fixedpoint

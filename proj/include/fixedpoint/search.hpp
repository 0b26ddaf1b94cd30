#pragma once

#include "fixedpoint/constraints.hpp"
#include "fixedpoint/datum.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixedpoint {

/// Bounds and filter for an exhaustive enumeration of canonical data.
struct SearchSpace {
    std::size_t point_count = 1;
    std::size_t half_dim = 0;
    Weight max_weight = 1;
    CheckConfig config = CheckConfig::all();
    /// Keep one representative of each {d, negate(d)} pair (the canonically
    /// smaller one).
    bool dedup_negation = false;
    /// Keep only data whose weights have gcd 1.
    bool primitive_only = false;
    /// Prune partial assignments that can no longer reach weight balance or
    /// a zero Chern total. Only active for checks that are enabled.
    bool prune = true;
    /// Upper bound on visited partial states.
    std::uint64_t node_cap = 100'000'000;
    /// Worker threads; results do not depend on it.
    unsigned threads = 1;
};

class SearchOverflow : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// All canonical weight sets of the given size with 1 <= |w| <= max_weight,
/// in canonical order.
std::vector<WeightSet> canonical_weight_sets(std::size_t half_dim, Weight max_weight);

/// Every canonical datum in the space that passes the configured checks, in
/// canonical order. Throws SearchOverflow when the node cap is hit and
/// std::invalid_argument on bad bounds.
std::vector<Datum> enumerate(const SearchSpace &space);

/// Same traversal, handing each survivor to `sink` in canonical order as
/// soon as its top-level branch is finished.
void enumerate(const SearchSpace &space, const std::function<void(const Datum &)> &sink);

/// Perturbations of d for negative testing, each canonicalized:
/// every weight incremented by one (skipping 0), every weight sign-flipped,
/// every point dropped, every point duplicated. Dropping is skipped for a
/// single-point datum, since no fixed points would remain.
std::vector<Datum> mutation_battery(const Datum &d);

struct SurvivorGroup {
    std::size_t point_count = 0;
    std::size_t half_dim = 0;
    std::size_t count = 0;
    std::map<Weight, std::size_t> gcd_counts;
    double kosniowski_ratio = 0.0;
    bool exceeds_conjectured_bound = false;
};

struct ClassificationSummary {
    std::vector<SurvivorGroup> groups;
    std::size_t total = 0;
};

/// Groups survivors by (point count, half-dimension).
ClassificationSummary classify_report(const std::vector<Datum> &survivors);

nlohmann::ordered_json summary_to_json(const ClassificationSummary &summary);
std::string summary_to_text(const ClassificationSummary &summary);

} // namespace fixedpoint

#pragma once

#include "fixedpoint/datum.hpp"
#include "fixedpoint/verdict.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fixedpoint {

/// Multiset of weight residues mod k, representatives in [0, k), sorted.
struct ResidueProfile {
    std::vector<Weight> residues;

    friend bool operator==(const ResidueProfile &, const ResidueProfile &) = default;
};

/// Throws std::invalid_argument for modulus < 2.
ResidueProfile residue_profile(const WeightSet &ws, Weight modulus);

/// Point indices of one candidate component of the Z_k-fixed set, ascending.
using Block = std::vector<std::size_t>;
/// Blocks ordered by their smallest index.
using BlockPartition = std::vector<Block>;

/// For each point of the block, the weights divisible by the modulus (kept
/// as S^1-weights, not divided).
///
/// Throws InvalidDatum when the points of the block keep different numbers
/// of weights, or when several points keep none (a zero-dimensional
/// component is a single point).
Datum induced_datum(const Datum &d, std::span<const std::size_t> block, Weight modulus);

/// Whether the block can be the fixed-point set of one component of
/// M^{Z_k}: equal residue profiles, and either no surviving weights on a
/// single point or at least two points whose induced datum passes the
/// global sub-suite (weight balance, Chern total, profile symmetry,
/// adjacency, ABBV, index identities).
Verdict check_block(const Datum &d, std::span<const std::size_t> block, Weight modulus);

class PartitionCapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ModkOptions {
    /// Largest point count for which set partitions are searched.
    std::size_t max_points = 15;
};

struct ModkVerdict {
    bool pass = false;
    Weight modulus = 0;
    /// The lexicographically least feasible partition (by restricted growth
    /// string) when pass is true.
    std::optional<BlockPartition> partition;
};

/// Searches for a partition of the fixed points into blocks that all pass
/// check_block. Throws PartitionCapExceeded above options.max_points.
ModkVerdict check_modk(const Datum &d, Weight modulus, const ModkOptions &options = {});

/// check_modk for every modulus in [2, max |weight|]; larger moduli divide
/// no weight and pass with singleton blocks. The witness of a failure is the
/// smallest failing modulus.
Verdict check_modk_all(const Datum &d, const ModkOptions &options = {});

nlohmann::ordered_json partition_to_json(const BlockPartition &partition);

} // namespace fixedpoint

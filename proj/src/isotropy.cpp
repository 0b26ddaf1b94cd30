#include "fixedpoint/isotropy.hpp"

#include "fixedpoint/checked.hpp"
#include "fixedpoint/constraints.hpp"

#include <algorithm>
#include <map>
#include <bit>
#include <cstdint>
#include <functional>

namespace fixedpoint {

namespace {

void require_modulus(Weight modulus) {
    if (modulus < 2)
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
}

Weight residue(Weight w, Weight modulus) {
    Weight r = w % modulus;
    return r < 0 ? r + modulus : r;
}

std::size_t divisible_count(const WeightSet &ws, Weight modulus) {
    auto w = ws.weights();
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [modulus](Weight x) { return x % modulus == 0; }));
}

// Checks applied to the data induced on a component. Mod-k is not applied
// recursively.
constexpr std::array<CheckId, 6> induced_checks = {
    CheckId::WeightBalance, CheckId::ChernTotal, CheckId::ProfileSymmetry,
    CheckId::AdjacentProfile, CheckId::Abbv, CheckId::IndexIdentities,
};

Block block_of(std::uint32_t mask) {
    Block b;
    for (std::size_t p = 0; mask != 0; ++p, mask >>= 1)
        if (mask & 1u)
            b.push_back(p);
    return b;
}

} // namespace

ResidueProfile residue_profile(const WeightSet &ws, Weight modulus) {
    require_modulus(modulus);
    ResidueProfile out;
    for (auto w : ws.weights())
        out.residues.push_back(residue(w, modulus));
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

Datum induced_datum(const Datum &d, std::span<const std::size_t> block, Weight modulus) {
    require_modulus(modulus);
    if (block.empty())
        throw std::invalid_argument("empty block");
    std::vector<WeightSet> points;
    for (auto p : block) {
        std::vector<Weight> kept;
        for (auto w : d.point(p).weights())
            if (w % modulus == 0)
                kept.push_back(w);
        if (!points.empty() && kept.size() != points.front().size())
            throw InvalidDatum("points " + std::to_string(block.front()) + " and " +
                               std::to_string(p) + " keep different numbers of weights divisible by " +
                               std::to_string(modulus));
        points.emplace_back(std::move(kept));
    }
    if (points.front().empty() && points.size() > 1)
        throw InvalidDatum("a zero-dimensional component holds a single fixed point");
    return Datum(std::move(points));
}

Verdict check_block(const Datum &d, std::span<const std::size_t> block, Weight modulus) {
    require_modulus(modulus);
    if (block.empty())
        throw std::invalid_argument("empty block");
    const auto first = residue_profile(d.point(block.front()), modulus);
    for (auto p : block)
        if (residue_profile(d.point(p), modulus) != first)
            return Verdict::fail(
                {{"reason", "residues_differ"}, {"points", {block.front(), p}}});

    const std::size_t induced_dim = divisible_count(d.point(block.front()), modulus);
    if (induced_dim == 0) {
        if (block.size() == 1)
            return Verdict::pass();
        return Verdict::fail({{"reason", "weightless_component_with_several_points"}});
    }
    if (block.size() < 2)
        return Verdict::fail({{"reason", "single_point_component"},
                              {"point", block.front()},
                              {"half_dim", induced_dim}});

    const Datum induced = induced_datum(d, block, modulus);
    const auto cfg = CheckConfig::all();
    for (auto id : induced_checks) {
        auto v = run_check(id, induced, cfg);
        if (v.failed())
            return Verdict::fail({{"reason", "induced_check_failed"},
                                  {"check", check_name(id)},
                                  {"induced", to_string(induced)},
                                  {"witness", v.witness}});
    }
    return Verdict::pass();
}

ModkVerdict check_modk(const Datum &d, Weight modulus, const ModkOptions &options) {
    require_modulus(modulus);
    const std::size_t k = d.point_count();
    if (k > options.max_points || k > 24)
        throw PartitionCapExceeded("partition search over " + std::to_string(k) +
                                   " points exceeds the cap of " +
                                   std::to_string(options.max_points));

    // Points can only share a block when their residue profiles agree.
    std::vector<std::size_t> cls(k);
    std::vector<ResidueProfile> reps;
    for (std::size_t p = 0; p < k; ++p) {
        auto r = residue_profile(d.point(p), modulus);
        auto it = std::find(reps.begin(), reps.end(), r);
        cls[p] = static_cast<std::size_t>(it - reps.begin());
        if (it == reps.end())
            reps.push_back(std::move(r));
    }
    std::vector<std::uint32_t> class_mask(reps.size(), 0);
    for (std::size_t p = 0; p < k; ++p)
        class_mask[cls[p]] |= 1u << p;

    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::int8_t> block_memo(std::size_t{1} << k, -1);
    auto block_ok = [&](std::uint32_t mask) {
        auto &m = block_memo[mask];
        if (m < 0) {
            auto b = block_of(mask);
            m = check_block(d, b, modulus).failed() ? 0 : 1;
        }
        return m == 1;
    };

    std::vector<std::int8_t> feasible_memo(std::size_t{1} << k, -1);
    std::function<bool(std::uint32_t)> feasible = [&](std::uint32_t mask) -> bool {
        if (mask == 0)
            return true;
        auto &m = feasible_memo[mask];
        if (m >= 0)
            return m == 1;
        const std::uint32_t low = mask & (~mask + 1);
        const std::size_t lowest = static_cast<std::size_t>(std::countr_zero(low));
        // A point keeping no divisible weight can only stand alone.
        const std::uint32_t mates = divisible_count(d.point(lowest), modulus) == 0
                                        ? 0
                                        : mask & class_mask[cls[lowest]] & ~low;
        bool ok = false;
        // Every subset of the same-class mates, including the empty one.
        for (std::uint32_t s = mates;; s = (s - 1) & mates) {
            const std::uint32_t b = low | s;
            if (block_ok(b) && feasible(mask & ~b)) {
                ok = true;
                break;
            }
            if (s == 0)
                break;
        }
        m = ok ? 1 : 0;
        return ok;
    };

    ModkVerdict verdict;
    verdict.modulus = modulus;
    if (!feasible(full))
        return verdict;

    // Lexicographically least restricted growth string. Blocks never mix
    // residue classes, so each class is settled on its own: point j joins the
    // earliest block of its class that still admits a completion, else opens
    // a new one.
    std::vector<std::uint32_t> blocks;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const std::uint32_t members = class_mask[c];
        const std::size_t first = static_cast<std::size_t>(std::countr_zero(members));
        if (divisible_count(d.point(first), modulus) == 0) {
            // Weightless components are single points.
            for (std::uint32_t m = members; m != 0; m &= m - 1)
                blocks.push_back(m & (~m + 1));
            continue;
        }
        std::vector<std::uint32_t> open;
        // Whether the open blocks can absorb part of `rest` with the remainder
        // partitioned on its own.
        auto completable = [&](std::uint32_t rest) {
            std::map<std::pair<std::size_t, std::uint32_t>, bool> memo;
            std::function<bool(std::size_t, std::uint32_t)> fill = [&](std::size_t i,
                                                                       std::uint32_t m) -> bool {
                if (i == open.size())
                    return feasible(m);
                auto key = std::make_pair(i, m);
                if (auto it = memo.find(key); it != memo.end())
                    return it->second;
                bool ok = false;
                for (std::uint32_t s = m;; s = (s - 1) & m) {
                    if (block_ok(open[i] | s) && fill(i + 1, m & ~s)) {
                        ok = true;
                        break;
                    }
                    if (s == 0)
                        break;
                }
                memo[key] = ok;
                return ok;
            };
            return fill(0, rest);
        };
        std::uint32_t rest = members;
        for (std::uint32_t m = members; m != 0; m &= m - 1) {
            const std::uint32_t bit = m & (~m + 1);
            rest &= ~bit;
            bool placed = false;
            for (std::size_t b = 0; b <= open.size() && !placed; ++b) {
                const bool fresh = b == open.size();
                if (fresh)
                    open.push_back(0);
                open[b] |= bit;
                if (completable(rest)) {
                    placed = true;
                } else {
                    open[b] &= ~bit;
                    if (fresh)
                        open.pop_back();
                }
            }
            if (!placed)
                throw std::logic_error("partition search disagrees with feasibility table");
        }
        blocks.insert(blocks.end(), open.begin(), open.end());
    }
    std::sort(blocks.begin(), blocks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });

    verdict.pass = true;
    BlockPartition partition;
    for (auto b : blocks)
        partition.push_back(block_of(b));
    verdict.partition = std::move(partition);
    return verdict;
}

nlohmann::ordered_json partition_to_json(const BlockPartition &partition) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &b : partition)
        out.push_back(b);
    return out;
}

Verdict check_modk_all(const Datum &d, const ModkOptions &options) {
    Weight max_abs = 0;
    for (const auto &p : d.points())
        for (auto w : p.weights())
            max_abs = std::max(max_abs, w < 0 ? checked_neg(w) : w);

    nlohmann::ordered_json partitions = nlohmann::ordered_json::object();
    for (Weight m = 2; m <= max_abs; ++m) {
        auto v = check_modk(d, m, options);
        if (!v.pass)
            return Verdict::fail({{"modulus", m}});
        bool divides_some = std::any_of(d.points().begin(), d.points().end(),
                                        [m](const WeightSet &ws) { return divisible_count(ws, m) > 0; });
        if (divides_some)
            partitions[std::to_string(m)] = partition_to_json(*v.partition);
    }
    if (partitions.empty())
        return Verdict::pass();
    return Verdict::pass({{"partitions", partitions}});
}

} // namespace fixedpoint

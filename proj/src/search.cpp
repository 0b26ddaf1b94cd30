#include "fixedpoint/search.hpp"

#include "fixedpoint/checked.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace fixedpoint {

namespace {

// Per-weight-set data used for pruning partial assignments.
struct Candidate {
    WeightSet weights;
    std::vector<std::int32_t> excess; // index |l|: count(l) - count(-l)
    Weight chern = 0;
};

class Enumerator {
  public:
    explicit Enumerator(const SearchSpace &space) : space_(space) {
        prune_balance_ = space.prune && space.config.enabled(CheckId::WeightBalance);
        prune_chern_ = space.prune && space.config.enabled(CheckId::ChernTotal);
        for (auto &ws : canonical_weight_sets(space.half_dim, space.max_weight)) {
            Candidate c;
            c.excess.assign(static_cast<std::size_t>(space.max_weight) + 1, 0);
            for (auto w : ws.weights())
                c.excess[static_cast<std::size_t>(w < 0 ? -w : w)] += w > 0 ? 1 : -1;
            c.chern = chern_sum(ws);
            c.weights = std::move(ws);
            candidates_.push_back(std::move(c));
        }
    }

    std::size_t top_level_count() const { return candidates_.size(); }

    // All survivors whose first (canonically smallest) point is candidates_[first].
    std::vector<Datum> branch(std::size_t first) {
        std::vector<Datum> out;
        State st;
        st.excess.assign(static_cast<std::size_t>(space_.max_weight) + 1, 0);
        st.chosen.reserve(space_.point_count);
        push(st, first);
        if (viable(st))
            descend(st, first, out);
        return out;
    }

  private:
    struct State {
        std::vector<std::size_t> chosen;
        std::vector<std::int32_t> excess;
        std::int64_t imbalance = 0; // sum of |excess|
        Weight chern = 0;
    };

    void count_node() {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > space_.node_cap)
            throw SearchOverflow("search exceeded the node cap of " +
                                 std::to_string(space_.node_cap) + " partial states");
    }

    void push(State &st, std::size_t idx) {
        count_node();
        const auto &c = candidates_[idx];
        for (std::size_t l = 1; l < c.excess.size(); ++l) {
            if (c.excess[l] == 0)
                continue;
            st.imbalance -= std::abs(st.excess[l]);
            st.excess[l] += c.excess[l];
            st.imbalance += std::abs(st.excess[l]);
        }
        st.chern += c.chern;
        st.chosen.push_back(idx);
    }

    void pop(State &st) {
        const auto &c = candidates_[st.chosen.back()];
        for (std::size_t l = 1; l < c.excess.size(); ++l) {
            if (c.excess[l] == 0)
                continue;
            st.imbalance -= std::abs(st.excess[l]);
            st.excess[l] -= c.excess[l];
            st.imbalance += std::abs(st.excess[l]);
        }
        st.chern -= c.chern;
        st.chosen.pop_back();
    }

    // Whether the remaining points can still fix balance and Chern total.
    bool viable(const State &st) const {
        const auto slots = static_cast<std::int64_t>((space_.point_count - st.chosen.size()) *
                                                     space_.half_dim);
        if (prune_balance_ && (st.imbalance > slots || (slots - st.imbalance) % 2 != 0))
            return false;
        if (prune_chern_ && std::abs(st.chern) > slots * space_.max_weight)
            return false;
        return true;
    }

    void descend(State &st, std::size_t from, std::vector<Datum> &out) {
        if (st.chosen.size() == space_.point_count) {
            accept(st, out);
            return;
        }
        for (std::size_t idx = from; idx < candidates_.size(); ++idx) {
            push(st, idx);
            if (viable(st))
                descend(st, idx, out);
            pop(st);
        }
    }

    void accept(const State &st, std::vector<Datum> &out) const {
        std::vector<WeightSet> points;
        points.reserve(st.chosen.size());
        for (auto idx : st.chosen)
            points.push_back(candidates_[idx].weights);
        Datum d(std::move(points));
        if (space_.primitive_only && weight_gcd(d) != 1)
            return;
        if (space_.dedup_negation && canonical_compare(d, negate(d)) > 0)
            return;
        if (passes_suite(d, space_.config))
            out.push_back(std::move(d));
    }

    const SearchSpace &space_;
    std::vector<Candidate> candidates_;
    bool prune_balance_ = false;
    bool prune_chern_ = false;
    std::atomic<std::uint64_t> nodes_{0};
};

void validate(const SearchSpace &space) {
    if (space.point_count < 1)
        throw std::invalid_argument("point count must be at least 1");
    if (space.max_weight < 1)
        throw std::invalid_argument("max weight must be at least 1");
    if (space.max_weight > 1'000'000)
        throw std::invalid_argument("max weight is out of range");
}

} // namespace

std::vector<WeightSet> canonical_weight_sets(std::size_t half_dim, Weight max_weight) {
    std::vector<Weight> values; // descending, zero excluded
    for (Weight w = max_weight; w >= 1; --w)
        values.push_back(w);
    for (Weight w = -1; w >= -max_weight; --w)
        values.push_back(w);

    std::vector<WeightSet> out;
    std::vector<Weight> current;
    auto rec = [&](auto &&self, std::size_t from) -> void {
        if (current.size() == half_dim) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t j = from; j < values.size(); ++j) {
            current.push_back(values[j]);
            self(self, j);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const WeightSet &a, const WeightSet &b) { return canonical_compare(a, b) < 0; });
    return out;
}

void enumerate(const SearchSpace &space, const std::function<void(const Datum &)> &sink) {
    validate(space);
    if (space.half_dim == 0) {
        // Only the single point has no weights.
        if (space.point_count == 1) {
            Datum point{WeightSet{}};
            if (!space.primitive_only && passes_suite(point, space.config))
                sink(point);
        }
        return;
    }

    Enumerator en(space);
    const std::size_t branches = en.top_level_count();
    const unsigned workers =
        std::max(1u, std::min<unsigned>(space.threads, static_cast<unsigned>(branches)));

    if (workers == 1) {
        for (std::size_t b = 0; b < branches; ++b)
            for (const auto &d : en.branch(b))
                sink(d);
        return;
    }

    // Branches run out of order; results are flushed in branch order.
    std::vector<std::vector<Datum>> results(branches);
    std::vector<char> done(branches, 0);
    std::size_t next_flush = 0;
    std::atomic<std::size_t> next_branch{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex mu;

    auto work = [&] {
        while (!stop.load()) {
            const std::size_t b = next_branch.fetch_add(1);
            if (b >= branches)
                return;
            try {
                auto r = en.branch(b);
                std::lock_guard lock(mu);
                results[b] = std::move(r);
                done[b] = 1;
                while (next_flush < branches && done[next_flush]) {
                    for (const auto &d : results[next_flush])
                        sink(d);
                    results[next_flush].clear();
                    ++next_flush;
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error)
                    error = std::current_exception();
                stop = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(work);
    for (auto &t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<Datum> enumerate(const SearchSpace &space) {
    std::vector<Datum> out;
    enumerate(space, [&out](const Datum &d) { out.push_back(d); });
    return out;
}

std::vector<Datum> mutation_battery(const Datum &d) {
    std::vector<Datum> out;
    const auto &points = d.points();
    auto with_weight = [&](std::size_t p, std::size_t j, Weight w) {
        std::vector<WeightSet> pts = points;
        std::vector<Weight> ws(points[p].weights().begin(), points[p].weights().end());
        ws[j] = w;
        pts[p] = WeightSet(std::move(ws));
        return canonicalize(Datum(std::move(pts)));
    };
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t j = 0; j < points[p].size(); ++j) {
            Weight w = checked_add(points[p].weights()[j], 1);
            out.push_back(with_weight(p, j, w == 0 ? 1 : w));
        }
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t j = 0; j < points[p].size(); ++j)
            out.push_back(with_weight(p, j, checked_neg(points[p].weights()[j])));
    if (points.size() > 1)
        for (std::size_t p = 0; p < points.size(); ++p) {
            std::vector<WeightSet> pts = points;
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(p));
            out.push_back(canonicalize(Datum(std::move(pts))));
        }
    if (d.half_dim() > 0)
        for (std::size_t p = 0; p < points.size(); ++p) {
            std::vector<WeightSet> pts = points;
            pts.push_back(points[p]);
            out.push_back(canonicalize(Datum(std::move(pts))));
        }
    return out;
}

ClassificationSummary classify_report(const std::vector<Datum> &survivors) {
    std::map<std::pair<std::size_t, std::size_t>, SurvivorGroup> groups;
    for (const auto &d : survivors) {
        auto &g = groups[{d.point_count(), d.half_dim()}];
        g.point_count = d.point_count();
        g.half_dim = d.half_dim();
        ++g.count;
        ++g.gcd_counts[weight_gcd(d)];
    }
    ClassificationSummary out;
    for (auto &[key, g] : groups) {
        g.kosniowski_ratio = static_cast<double>(g.half_dim) / static_cast<double>(g.point_count);
        g.exceeds_conjectured_bound = g.half_dim > 2 * g.point_count;
        out.total += g.count;
        out.groups.push_back(g);
    }
    return out;
}

nlohmann::ordered_json summary_to_json(const ClassificationSummary &summary) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto &g : summary.groups) {
        nlohmann::ordered_json gcds = nlohmann::ordered_json::object();
        for (auto [gcd, count] : g.gcd_counts)
            gcds[std::to_string(gcd)] = count;
        nlohmann::ordered_json entry = {
            {"points", g.point_count},
            {"half_dim", g.half_dim},
            {"count", g.count},
            {"gcd_counts", gcds},
            {"kosniowski_ratio", g.kosniowski_ratio},
            {"exceeds_conjectured_bound", g.exceeds_conjectured_bound},
        };
        if (g.exceeds_conjectured_bound)
            entry["flag"] = "exceeds conjectured bound";
        groups.push_back(entry);
    }
    return {
        {"groups", groups},
        {"total", summary.total},
        {"certified", false},
        {"note", "survivors satisfy the enabled necessary conditions only; they are not "
                 "certified to be realized by manifolds"},
    };
}

std::string summary_to_text(const ClassificationSummary &summary) {
    std::ostringstream os;
    os << "survivors: " << summary.total << " (necessary conditions only, not certified)\n";
    for (const auto &g : summary.groups) {
        os << "  k=" << g.point_count << " n=" << g.half_dim << " count=" << g.count
           << " ratio=" << std::setprecision(6) << g.kosniowski_ratio << " gcds=";
        bool first = true;
        for (auto [gcd, count] : g.gcd_counts) {
            os << (first ? "" : ",") << gcd << ':' << count;
            first = false;
        }
        if (g.exceeds_conjectured_bound)
            os << " exceeds conjectured bound";
        os << '\n';
    }
    return os.str();
}

} // namespace fixedpoint

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixedpoint {

using Weight = std::int64_t;

/// Raised for data that violate the datum invariants (zero weights, ragged
/// cardinalities, an empty fixed set, a weightless datum with several points).
class InvalidDatum : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Isotropy weights at one fixed point, stored in descending order.
class WeightSet {
  public:
    WeightSet() = default;
    explicit WeightSet(std::vector<Weight> weights);
    WeightSet(std::initializer_list<Weight> weights)
        : WeightSet(std::vector<Weight>(weights)) {}

    std::span<const Weight> weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    friend bool operator==(const WeightSet &, const WeightSet &) = default;

  private:
    std::vector<Weight> weights_;
};

/// Number of strictly negative weights.
int neg_count(const WeightSet &ws);

/// Sum of the weights, i.e. the first Chern class evaluated at the point.
Weight chern_sum(const WeightSet &ws);

/// Canonical point order: fewer negative weights first, then the
/// lexicographically larger (descending) weight list first.
std::strong_ordering canonical_compare(const WeightSet &a, const WeightSet &b);

/// Fixed-point data of a circle action: one WeightSet per fixed point, all
/// of the same cardinality n (the half-dimension).
///
/// A datum always has at least one point, and n = 0 is only allowed for a
/// single point. The optional name is carried through JSON but does not take
/// part in comparisons.
class Datum {
  public:
    explicit Datum(std::vector<WeightSet> points);
    Datum(std::initializer_list<WeightSet> points)
        : Datum(std::vector<WeightSet>(points)) {}

    const std::vector<WeightSet> &points() const { return points_; }
    const WeightSet &point(std::size_t p) const { return points_.at(p); }
    std::size_t point_count() const { return points_.size(); }
    std::size_t half_dim() const { return points_.front().size(); }

    const std::optional<std::string> &name() const { return name_; }
    void set_name(std::optional<std::string> name) { name_ = std::move(name); }

    friend bool operator==(const Datum &a, const Datum &b) {
        return a.points_ == b.points_;
    }

  private:
    std::vector<WeightSet> points_;
    std::optional<std::string> name_;
};

/// Lexicographic order on point lists under canonical_compare, then by
/// point count. Meaningful on canonical data.
std::strong_ordering canonical_compare(const Datum &a, const Datum &b);

/// (N^0, ..., N^n).
struct NegProfile {
    std::vector<std::size_t> counts;

    friend bool operator==(const NegProfile &, const NegProfile &) = default;
};

NegProfile profile(const Datum &d);

/// Occurrences of the weight l over all points. Throws on l == 0.
std::size_t multiplicity(const Datum &d, Weight l);

/// gcd of all weights; 0 for the weightless point.
Weight weight_gcd(const Datum &d);

Datum canonicalize(const Datum &d);
/// Reverses the circle direction: every weight negated, then canonicalized.
Datum negate(const Datum &d);
/// Multiplies every weight by m >= 1; throws std::invalid_argument otherwise.
Datum scale(const Datum &d, Weight m);

/// Error reading a datum file. Messages carry the offending point index.
class ParseError : public std::runtime_error {
  public:
    enum class Kind { MalformedJson, Schema, ZeroWeight, Ragged, Invariant };

    ParseError(Kind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Parses {"fixed_points": [[...], ...], "name": "..."}.
Datum parse_datum(const std::string &text);

/// Emits the canonical datum as {"fixed_points": [[w,...],...]} (plus
/// "name" when set). Points and weights are written in canonical order.
std::string serialize_datum(const Datum &d);

/// Compact text forms such as {2,1} and [{2,1},{-1,1},{-1,-2}].
std::string to_string(const WeightSet &ws);
std::string to_string(const Datum &d);

} // namespace fixedpoint

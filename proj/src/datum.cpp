#include "fixedpoint/datum.hpp"

#include "fixedpoint/checked.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fixedpoint {

WeightSet::WeightSet(std::vector<Weight> weights) : weights_(std::move(weights)) {
    for (std::size_t j = 0; j < weights_.size(); ++j)
        if (weights_[j] == 0)
            throw InvalidDatum("zero weight at position " + std::to_string(j));
    std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

int neg_count(const WeightSet &ws) {
    auto w = ws.weights();
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](Weight x) { return x < 0; }));
}

Weight chern_sum(const WeightSet &ws) {
    Weight total = 0;
    for (auto w : ws.weights())
        total = checked_add(total, w);
    return total;
}

std::strong_ordering canonical_compare(const WeightSet &a, const WeightSet &b) {
    if (auto c = neg_count(a) <=> neg_count(b); c != 0)
        return c;
    auto wa = a.weights(), wb = b.weights();
    // Descending: the larger list sorts first.
    return std::lexicographical_compare_three_way(wb.begin(), wb.end(), wa.begin(), wa.end());
}

Datum::Datum(std::vector<WeightSet> points) : points_(std::move(points)) {
    if (points_.empty())
        throw InvalidDatum("datum has no fixed points");
    const auto n = points_.front().size();
    for (const auto &p : points_)
        if (p.size() != n)
            throw InvalidDatum("ragged cardinalities");
    if (n == 0 && points_.size() != 1)
        throw InvalidDatum("a weightless datum must have exactly one fixed point");
}

std::strong_ordering canonical_compare(const Datum &a, const Datum &b) {
    const auto &pa = a.points(), &pb = b.points();
    for (std::size_t j = 0; j < std::min(pa.size(), pb.size()); ++j)
        if (auto c = canonical_compare(pa[j], pb[j]); c != 0)
            return c;
    return pa.size() <=> pb.size();
}

NegProfile profile(const Datum &d) {
    NegProfile out{std::vector<std::size_t>(d.half_dim() + 1, 0)};
    for (const auto &p : d.points())
        ++out.counts[static_cast<std::size_t>(neg_count(p))];
    return out;
}

std::size_t multiplicity(const Datum &d, Weight l) {
    if (l == 0)
        throw std::invalid_argument("multiplicity of weight 0 is undefined");
    std::size_t total = 0;
    for (const auto &p : d.points())
        total += static_cast<std::size_t>(std::count(p.weights().begin(), p.weights().end(), l));
    return total;
}

Weight weight_gcd(const Datum &d) {
    Weight g = 0;
    for (const auto &p : d.points())
        for (auto w : p.weights())
            g = std::gcd(g, w);
    return g;
}

Datum canonicalize(const Datum &d) {
    std::vector<WeightSet> points = d.points();
    std::sort(points.begin(), points.end(),
              [](const WeightSet &a, const WeightSet &b) { return canonical_compare(a, b) < 0; });
    Datum out(std::move(points));
    out.set_name(d.name());
    return out;
}

namespace {

Datum map_weights(const Datum &d, const std::function<Weight(Weight)> &f) {
    std::vector<WeightSet> points;
    points.reserve(d.point_count());
    for (const auto &p : d.points()) {
        std::vector<Weight> w(p.weights().begin(), p.weights().end());
        std::transform(w.begin(), w.end(), w.begin(), f);
        points.emplace_back(std::move(w));
    }
    Datum out(std::move(points));
    out.set_name(d.name());
    return canonicalize(out);
}

} // namespace

Datum negate(const Datum &d) {
    return map_weights(d, [](Weight w) { return checked_neg(w); });
}

Datum scale(const Datum &d, Weight m) {
    if (m <= 0)
        throw std::invalid_argument("scale factor must be positive");
    return map_weights(d, [m](Weight w) { return checked_mul(w, m); });
}

Datum parse_datum(const std::string &text) {
    using Kind = ParseError::Kind;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(Kind::MalformedJson, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError(Kind::Schema, "top level must be an object");
    if (!doc.contains("fixed_points"))
        throw ParseError(Kind::Schema, "missing key \"fixed_points\"");
    const auto &fps = doc["fixed_points"];
    if (!fps.is_array())
        throw ParseError(Kind::Schema, "\"fixed_points\" must be an array");
    if (fps.empty())
        throw ParseError(Kind::Invariant, "no fixed points");

    std::vector<WeightSet> points;
    for (std::size_t p = 0; p < fps.size(); ++p) {
        const auto &arr = fps[p];
        if (!arr.is_array())
            throw ParseError(Kind::Schema, "point " + std::to_string(p) + " is not an array");
        std::vector<Weight> w;
        for (std::size_t j = 0; j < arr.size(); ++j) {
            const auto &x = arr[j];
            if (!x.is_number_integer() ||
                (x.is_number_unsigned() &&
                 x.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)))
                throw ParseError(Kind::Schema, "weight " + std::to_string(j) + " at point " +
                                                   std::to_string(p) + " is not a 64-bit integer");
            w.push_back(x.get<Weight>());
            if (w.back() == 0)
                throw ParseError(Kind::ZeroWeight, "zero weight at point " + std::to_string(p));
        }
        if (!points.empty() && w.size() != points.front().size())
            throw ParseError(Kind::Ragged, "ragged cardinalities: point " + std::to_string(p) +
                                               " has " + std::to_string(w.size()) +
                                               " weights, point 0 has " +
                                               std::to_string(points.front().size()));
        points.emplace_back(std::move(w));
    }
    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError(Kind::Schema, "\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    try {
        Datum d(std::move(points));
        d.set_name(std::move(name));
        return d;
    } catch (const InvalidDatum &e) {
        throw ParseError(Kind::Invariant, e.what());
    }
}

std::string serialize_datum(const Datum &d) {
    const Datum c = canonicalize(d);
    std::ostringstream os;
    os << "{\"fixed_points\": [";
    for (std::size_t p = 0; p < c.point_count(); ++p) {
        os << (p ? "," : "") << '[';
        auto w = c.point(p).weights();
        for (std::size_t j = 0; j < w.size(); ++j)
            os << (j ? "," : "") << w[j];
        os << ']';
    }
    os << ']';
    if (c.name())
        os << ", \"name\": " << nlohmann::json(*c.name()).dump();
    os << '}';
    return os.str();
}

std::string to_string(const WeightSet &ws) {
    std::ostringstream os;
    os << '{';
    auto w = ws.weights();
    for (std::size_t j = 0; j < w.size(); ++j)
        os << (j ? "," : "") << w[j];
    os << '}';
    return os.str();
}

std::string to_string(const Datum &d) {
    std::string out = "[";
    for (std::size_t p = 0; p < d.point_count(); ++p)
        out += (p ? "," : "") + to_string(d.point(p));
    return out + ']';
}

} // namespace fixedpoint

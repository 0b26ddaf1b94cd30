#include "fixedpoint/laurent.hpp"

#include "fixedpoint/checked.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fixedpoint {

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
    LaurentPoly out;
    for (const auto &t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
            auto &last = out.terms_.back();
            last.coefficient = checked_add(last.coefficient, t.coefficient);
            if (last.coefficient == 0)
                out.terms_.pop_back();
        } else if (t.coefficient != 0) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, std::int64_t exponent) {
    LaurentPoly out;
    if (coefficient != 0)
        out.terms_.push_back({exponent, coefficient});
    return out;
}

LaurentPoly LaurentPoly::from_coefficients(std::span<const std::int64_t> coeffs) {
    LaurentPoly out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0)
            out.terms_.push_back({static_cast<std::int64_t>(j), coeffs[j]});
    return out;
}

std::int64_t LaurentPoly::coefficient(std::int64_t exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term &t, std::int64_t e) { return t.exponent < e; });
    return (it != terms_.end() && it->exponent == exponent) ? it->coefficient : 0;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag;
        os << 't';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->exponent < i->exponent) {
            out.terms_.push_back(*j++);
        } else {
            std::int64_t c = checked_add(i->coefficient, j->coefficient);
            if (c != 0)
                out.terms_.push_back({i->exponent, c});
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<LaurentPoly::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_)
        for (const auto &y : b.terms_)
            products.push_back({checked_add(x.exponent, y.exponent),
                                checked_mul(x.coefficient, y.coefficient)});
    return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
    if (c == 0)
        return {};
    LaurentPoly out = *this;
    for (auto &t : out.terms_)
        t.coefficient = checked_mul(t.coefficient, c);
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t s) const {
    LaurentPoly out = *this;
    for (auto &t : out.terms_)
        t.exponent = checked_add(t.exponent, s);
    return out;
}

LaurentPoly LaurentPoly::times_one_minus(std::int64_t a) const {
    return *this - shifted(a);
}

LaurentPoly lp_add(const LaurentPoly &a, const LaurentPoly &b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b) { return a * b; }

LaurentPoly one_minus_product(std::span<const std::int64_t> exponents) {
    LaurentPoly out = LaurentPoly::constant(1);
    for (auto a : exponents)
        out = out.times_one_minus(a);
    return out;
}

LaurentPoly elementary_symmetric(std::span<const std::int64_t> weights, int i) {
    if (i < 0 || static_cast<std::size_t>(i) > weights.size())
        throw std::out_of_range("elementary symmetric index out of range");
    // e[r] holds sigma_r of the weights processed so far.
    std::vector<LaurentPoly> e(static_cast<std::size_t>(i) + 1);
    e[0] = LaurentPoly::constant(1);
    for (auto w : weights)
        for (int r = i; r >= 1; --r)
            e[r] = e[r] + e[r - 1].shifted(w);
    return e[i];
}

bool Fraction::is_normalized() const {
    return std::all_of(denominator.begin(), denominator.end(),
                       [](std::int64_t a) { return a > 0; }) &&
           (numerator.is_zero() || numerator.min_exponent() >= 0);
}

std::string denominator_to_string(std::span<const std::int64_t> denominator) {
    if (denominator.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t j = 0; j < denominator.size();) {
        std::size_t run = j;
        while (run < denominator.size() && denominator[run] == denominator[j])
            ++run;
        os << "(1 - t";
        if (denominator[j] != 1)
            os << '^' << denominator[j];
        os << ')';
        if (run - j > 1)
            os << '^' << (run - j);
        j = run;
    }
    return os.str();
}

std::string Fraction::to_string() const {
    return "(" + numerator.to_string() + ") / " + denominator_to_string(denominator);
}

Fraction normalize_term(std::span<const std::int64_t> weights) {
    std::int64_t sign = 1;
    std::int64_t shift = 0;
    Fraction f;
    f.denominator.reserve(weights.size());
    for (auto w : weights) {
        if (w == 0)
            throw std::invalid_argument("zero weight in term");
        if (w < 0) {
            sign = -sign;
            shift = checked_add(shift, checked_neg(w));
            f.denominator.push_back(checked_neg(w));
        } else {
            f.denominator.push_back(w);
        }
    }
    std::sort(f.denominator.begin(), f.denominator.end());
    f.numerator = LaurentPoly::monomial(sign, shift);
    return f;
}

Fraction sigma_term(std::span<const std::int64_t> weights, int i) {
    if (i < 0 || static_cast<std::size_t>(i) > weights.size())
        throw std::out_of_range("sigma index " + std::to_string(i) +
                                " outside 0.." + std::to_string(weights.size()));
    Fraction f = normalize_term(weights);
    f.numerator = f.numerator * elementary_symmetric(weights, i);
    return f;
}

std::vector<std::int64_t> common_denominator(std::span<const Fraction> terms) {
    std::map<std::int64_t, std::size_t> multiplicity;
    for (const auto &f : terms) {
        std::map<std::int64_t, std::size_t> local;
        for (auto a : f.denominator)
            ++local[a];
        for (auto [a, m] : local)
            multiplicity[a] = std::max(multiplicity[a], m);
    }
    std::vector<std::int64_t> out;
    for (auto [a, m] : multiplicity)
        out.insert(out.end(), m, a);
    return out;
}

namespace {

void require_normalized(std::span<const Fraction> terms) {
    if (terms.empty())
        throw std::invalid_argument("empty term list");
    for (const auto &f : terms)
        if (!f.is_normalized())
            throw std::invalid_argument("term is not normalized: " + f.to_string());
}

// Entries of `whole` not accounted for by `part`; both sorted ascending and
// part is a sub-multiset of whole.
std::vector<std::int64_t> multiset_difference(std::span<const std::int64_t> whole,
                                              std::span<const std::int64_t> part) {
    std::vector<std::int64_t> out;
    std::set_difference(whole.begin(), whole.end(), part.begin(), part.end(),
                        std::back_inserter(out));
    return out;
}

} // namespace

IdentityVerdict frac_sum_is_constant(std::span<const Fraction> terms, std::int64_t c) {
    require_normalized(terms);
    IdentityVerdict v;
    v.constant = c;
    v.denominator = common_denominator(terms);
    for (const auto &f : terms) {
        LaurentPoly cleared = f.numerator;
        for (auto a : multiset_difference(v.denominator, f.denominator))
            cleared = cleared.times_one_minus(a);
        v.numerator = v.numerator + cleared;
    }
    v.residual = v.numerator - one_minus_product(v.denominator).scaled(c);
    v.pass = v.residual.is_zero();
    return v;
}

std::vector<std::int64_t> series_expand(const Fraction &f, std::size_t degree) {
    if (!f.is_normalized())
        throw std::invalid_argument("series_expand needs a normalized fraction");
    std::vector<std::int64_t> c(degree + 1, 0);
    for (const auto &[e, coef] : f.numerator.terms())
        if (static_cast<std::uint64_t>(e) <= degree)
            c[static_cast<std::size_t>(e)] = coef;
    // Dividing by (1 - t^a) is a strided prefix sum.
    for (auto a : f.denominator) {
        auto step = static_cast<std::uint64_t>(a);
        for (std::size_t j = 0; j + step <= degree; ++j)
            c[j + step] = checked_add(c[j + step], c[j]);
    }
    return c;
}

std::size_t safe_series_degree(std::span<const Fraction> terms) {
    std::int64_t total = 0;
    for (const auto &f : terms)
        for (auto a : f.denominator)
            total = checked_add(total, a);
    return static_cast<std::size_t>(checked_mul(total, 2));
}

SeriesVerdict series_sum_is_constant(std::span<const Fraction> terms, std::int64_t c) {
    require_normalized(terms);
    SeriesVerdict v;
    v.degree = safe_series_degree(terms);
    std::vector<std::int64_t> sum(v.degree + 1, 0);
    for (const auto &f : terms) {
        auto s = series_expand(f, v.degree);
        for (std::size_t j = 0; j <= v.degree; ++j)
            sum[j] = checked_add(sum[j], s[j]);
    }
    sum[0] = checked_sub(sum[0], c);
    for (std::size_t j = 0; j <= v.degree; ++j) {
        if (sum[j] != 0) {
            v.first_mismatch = j;
            break;
        }
    }
    v.pass = !v.first_mismatch;
    return v;
}

} // namespace fixedpoint

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fixedpoint {

/// Integer Laurent polynomial in one indeterminate t, stored sparsely.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so the zero polynomial has no terms and structural equality is
/// polynomial equality. Arithmetic is checked: any coefficient or exponent
/// leaving the 64-bit range raises ArithmeticOverflow.
class LaurentPoly {
  public:
    struct Term {
        std::int64_t exponent = 0;
        std::int64_t coefficient = 0;

        friend bool operator==(const Term &, const Term &) = default;
    };

    LaurentPoly() = default;

    /// Combines like terms and drops zeros; input order is irrelevant.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly monomial(std::int64_t coefficient, std::int64_t exponent);
    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
    /// Builds sum_j coeffs[j] t^j.
    static LaurentPoly from_coefficients(std::span<const std::int64_t> coeffs);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(std::int64_t exponent) const;
    /// Smallest / largest exponent with a nonzero coefficient. Undefined for
    /// the zero polynomial (callers check is_zero first).
    std::int64_t min_exponent() const { return terms_.front().exponent; }
    std::int64_t max_exponent() const { return terms_.back().exponent; }

    /// Human-readable form in ascending exponents, e.g. "1 - 2t + 2t^4 - t^5".
    std::string to_string() const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly operator-() const;

    /// Multiplies every coefficient by c.
    LaurentPoly scaled(std::int64_t c) const;
    /// Multiplies by t^s.
    LaurentPoly shifted(std::int64_t s) const;
    /// Multiplies by (1 - t^a).
    LaurentPoly times_one_minus(std::int64_t a) const;

  private:
    std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b);

/// prod_j (1 - t^{a_j}) for the given exponents.
LaurentPoly one_minus_product(std::span<const std::int64_t> exponents);

/// sigma_i(t^{w_1}, ..., t^{w_n}) as a Laurent polynomial.
LaurentPoly elementary_symmetric(std::span<const std::int64_t> weights, int i);

/// numerator / prod_a (1 - t^a) with every a > 0.
///
/// The denominator is held as a multiset of positive integers, stored in
/// ascending order. A fraction is normalized when its numerator has no
/// negative exponents.
struct Fraction {
    LaurentPoly numerator;
    std::vector<std::int64_t> denominator;

    bool is_normalized() const;
    std::string to_string() const;

    friend bool operator==(const Fraction &, const Fraction &) = default;
};

/// Renders prod (1 - t^a) compactly, e.g. "(1 - t)^2(1 - t^3)"; "1" if empty.
std::string denominator_to_string(std::span<const std::int64_t> denominator);

/// 1 / prod_j (1 - t^{w_j}), rewritten so every factor has a positive
/// exponent via 1/(1 - t^{-a}) = -t^a / (1 - t^a).
///
/// Throws std::invalid_argument on a zero weight.
Fraction normalize_term(std::span<const std::int64_t> weights);

/// sigma_i(t^{w}) / prod_j (1 - t^{w_j}) in normalized form.
///
/// Throws std::out_of_range unless 0 <= i <= weights.size().
Fraction sigma_term(std::span<const std::int64_t> weights, int i);

/// Outcome of testing sum_p f_p == c for normalized fractions f_p.
///
/// Everything is reported over the common denominator D: the summed
/// numerator P, the denominator multiset of D, and the residual P - c*D.
struct IdentityVerdict {
    bool pass = false;
    std::int64_t constant = 0;
    LaurentPoly numerator;
    std::vector<std::int64_t> denominator;
    LaurentPoly residual;
    /// Index i of the identity when produced by an index-identity check.
    std::optional<int> index;
};

/// Common denominator of the given denominators: each factor (1 - t^a)
/// appears with the largest multiplicity it has in any single term.
std::vector<std::int64_t>
common_denominator(std::span<const Fraction> terms);

/// Decides sum(terms) == c exactly by clearing denominators.
///
/// Throws std::invalid_argument on an empty term list or a non-normalized
/// term.
IdentityVerdict frac_sum_is_constant(std::span<const Fraction> terms,
                                     std::int64_t c);

/// Power series coefficients of a normalized fraction up to t^degree.
std::vector<std::int64_t> series_expand(const Fraction &f, std::size_t degree);

/// Truncation degree at which comparing power series decides equality of
/// sum(terms) with a constant: twice the total of all denominator entries.
std::size_t safe_series_degree(std::span<const Fraction> terms);

struct SeriesVerdict {
    bool pass = false;
    std::size_t degree = 0;
    /// Lowest degree where the summed series differs from the constant.
    std::optional<std::size_t> first_mismatch;
};

/// Independent route for frac_sum_is_constant: expand every term as a power
/// series to safe_series_degree and compare with the constant series c.
SeriesVerdict series_sum_is_constant(std::span<const Fraction> terms,
                                     std::int64_t c);

} // namespace fixedpoint

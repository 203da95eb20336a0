#pragma once

// Exact truncated Laurent series in the nome q with arbitrary-precision
// integer coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace moonshine {

using ExactInt = mpz_class;

/// Raised when a coefficient at or beyond the truncation order is requested.
class TruncationError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Raised when inverting a series whose leading coefficient is not a unit of Z.
class NonUnitError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A q-Laurent series known modulo q^order.
///
/// Nonzero series store coefficients for exponents valuation .. order-1 with a
/// nonzero leading coefficient. The zero series stores no coefficients; its
/// valuation() reports order() so that "zero below the truncation" holds
/// uniformly. Values are immutable once built.
class LaurentSeries {
  public:
    /// The zero series O(q^order).
    static LaurentSeries zero(std::int64_t order);
    /// The constant 1 known modulo q^order (order >= 1).
    static LaurentSeries one(std::int64_t order);
    /// c * q^exponent known modulo q^order.
    static LaurentSeries monomial(const ExactInt& c, std::int64_t exponent, std::int64_t order);
    /// Coefficients for exponents valuation, valuation+1, ...; order is
    /// valuation + coeffs.size(). Leading zeros are stripped.
    static LaurentSeries fromCoefficients(std::int64_t valuation, std::vector<ExactInt> coeffs);
    static LaurentSeries fromCoefficients(std::int64_t valuation, std::initializer_list<long> coeffs);

    bool isZero() const noexcept { return coeffs_.empty(); }
    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t order() const noexcept { return order_; }
    const std::vector<ExactInt>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of q^m. Throws TruncationError when m >= order().
    ExactInt coeff(std::int64_t m) const;

    /// The same series known only modulo q^newOrder (newOrder <= order()).
    LaurentSeries truncated(std::int64_t newOrder) const;

    /// Multiplication by q^k; exact, shifts valuation and order together.
    LaurentSeries shifted(std::int64_t k) const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    std::string toString() const;

  private:
    LaurentSeries(std::int64_t valuation, std::int64_t order, std::vector<ExactInt> coeffs)
        : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {}

    std::int64_t valuation_ = 0;
    std::int64_t order_ = 0;
    std::vector<ExactInt> coeffs_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, const ExactInt& c);

/// Cauchy product, truncated to min(a.order + b.valuation, b.order + a.valuation).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// a^k by repeated squaring. pow(a, 0) is 1 carried to a's relative precision.
LaurentSeries pow(const LaurentSeries& a, std::uint64_t k);

/// Multiplicative inverse; the leading coefficient must be +1 or -1.
LaurentSeries invert(const LaurentSeries& a);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

/// prod_{n>=1} (1 - q^n) mod q^order, by multiplying out the factors.
LaurentSeries eulerProduct(std::int64_t order);

/// Same contract as eulerProduct, via the pentagonal number theorem.
LaurentSeries eulerProductPentagonal(std::int64_t order);

/// Generalized pentagonal numbers k(3k-1)/2, k = 0, 1, -1, 2, -2, ..., below bound.
std::vector<std::int64_t> generalizedPentagonals(std::int64_t bound);

}  // namespace moonshine

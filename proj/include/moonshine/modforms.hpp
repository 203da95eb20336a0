#pragma once

// q-expansions of E4, the discriminant and the j-invariant, plus coefficient
// accessors for tau(m) and c(m).

#include "moonshine/qseries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace moonshine {

enum class SeriesName { J, Delta, E4, Euler };

std::string_view toString(SeriesName name);
std::optional<SeriesName> parseSeriesName(std::string_view text);

/// Padding added to the working order of E4 and Delta when dividing by Delta.
inline constexpr std::int64_t kDefaultOrderPadding = 2;

/// sum_{d | n} d^k by trial division up to sqrt(n).
ExactInt sigma(unsigned k, std::uint64_t n);

/// 1 + 240 sum sigma_3(n) q^n, modulo q^order.
LaurentSeries eisensteinE4(std::int64_t order);

/// q prod (1 - q^n)^24, modulo q^order (order >= 2).
LaurentSeries delta(std::int64_t order);

/// E4^3 / Delta modulo q^order. E4 and Delta are expanded to order + padding
/// internally; padding must be at least 2 to cover the pole.
LaurentSeries jInvariant(std::int64_t order, std::int64_t padding = kDefaultOrderPadding);

/// Ramanujan tau(m), m >= 1. Served from a process-wide cache.
ExactInt tau(std::int64_t m);

/// c(m), the coefficient of q^m in j, m >= -1. Served from a process-wide cache.
ExactInt jCoeff(std::int64_t m);

struct CoefficientTable {
    SeriesName name;
    std::int64_t order = 0;
    std::int64_t valuation = 0;
    std::map<std::int64_t, ExactInt> entries;  // exactly [valuation, order)
};

/// Nominal lowest exponent of each named series: -1 for j, 1 for delta, 0 otherwise.
std::int64_t nominalValuation(SeriesName name);

LaurentSeries expand(SeriesName name, std::int64_t order, std::int64_t padding = kDefaultOrderPadding);

CoefficientTable coefficientTable(SeriesName name, std::int64_t order,
                                  std::int64_t padding = kDefaultOrderPadding);

}  // namespace moonshine

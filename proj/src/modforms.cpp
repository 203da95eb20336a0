#include "moonshine/modforms.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace moonshine {

std::string_view toString(SeriesName name) {
    switch (name) {
        case SeriesName::J: return "j";
        case SeriesName::Delta: return "delta";
        case SeriesName::E4: return "e4";
        case SeriesName::Euler: return "euler";
    }
    return "?";
}

std::optional<SeriesName> parseSeriesName(std::string_view text) {
    for (SeriesName n : {SeriesName::J, SeriesName::Delta, SeriesName::E4, SeriesName::Euler}) {
        if (toString(n) == text) return n;
    }
    return std::nullopt;
}

ExactInt sigma(unsigned k, std::uint64_t n) {
    if (n == 0) throw std::domain_error("sigma: n must be positive");
    if (k == 0) throw std::domain_error("sigma: k must be positive");
    ExactInt sum = 0;
    ExactInt term;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), d, k);
        sum += term;
        const std::uint64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), e, k);
            sum += term;
        }
    }
    return sum;
}

LaurentSeries eisensteinE4(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("eisensteinE4: order must be >= 1");
    std::vector<ExactInt> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (std::int64_t n = 1; n < order; ++n) c[n] = 240 * sigma(3, static_cast<std::uint64_t>(n));
    return LaurentSeries::fromCoefficients(0, std::move(c));
}

LaurentSeries delta(std::int64_t order) {
    if (order < 2) throw std::invalid_argument("delta: order must be >= 2");
    return pow(eulerProductPentagonal(order - 1), 24).shifted(1);
}

LaurentSeries jInvariant(std::int64_t order, std::int64_t padding) {
    if (order < 0) throw std::invalid_argument("jInvariant: order must be >= 0");
    if (padding < kDefaultOrderPadding) {
        throw std::invalid_argument("jInvariant: working-order padding must be >= " +
                                    std::to_string(kDefaultOrderPadding));
    }
    const std::int64_t working = order + padding;
    const LaurentSeries numerator = pow(eisensteinE4(working), 3);
    const LaurentSeries j = mul(numerator, invert(delta(working)));
    return j.truncated(order);
}

namespace {

// Grows by doubling; readers never see a partially built series.
class ExpansionCache {
  public:
    ExactInt get(std::int64_t m) {
        {
            std::shared_lock lock(mutex_);
            if (built_ && m < series_.order()) return series_.coeff(m);
        }
        std::unique_lock lock(mutex_);
        if (!built_ || m >= series_.order()) {
            const std::int64_t target = std::max<std::int64_t>({m + 1, 2 * series_.order(), 64});
            series_ = build_(target);
            built_ = true;
        }
        return series_.coeff(m);
    }

    explicit ExpansionCache(LaurentSeries (*build)(std::int64_t)) : build_(build) {}

  private:
    LaurentSeries (*build_)(std::int64_t);
    LaurentSeries series_ = LaurentSeries::zero(0);
    bool built_ = false;
    std::shared_mutex mutex_;
};

LaurentSeries buildDelta(std::int64_t order) { return delta(order); }
LaurentSeries buildJ(std::int64_t order) { return jInvariant(order); }

ExpansionCache& deltaCache() {
    static ExpansionCache cache(&buildDelta);
    return cache;
}

ExpansionCache& jCache() {
    static ExpansionCache cache(&buildJ);
    return cache;
}

}  // namespace

ExactInt tau(std::int64_t m) {
    if (m < 1) throw std::domain_error("tau: m must be >= 1");
    return deltaCache().get(m);
}

ExactInt jCoeff(std::int64_t m) {
    if (m < -1) throw std::domain_error("jCoeff: j has a simple pole; m must be >= -1");
    return jCache().get(m);
}

std::int64_t nominalValuation(SeriesName name) {
    switch (name) {
        case SeriesName::J: return -1;
        case SeriesName::Delta: return 1;
        case SeriesName::E4:
        case SeriesName::Euler: return 0;
    }
    return 0;
}

LaurentSeries expand(SeriesName name, std::int64_t order, std::int64_t padding) {
    switch (name) {
        case SeriesName::J: return jInvariant(order, padding);
        case SeriesName::Delta: return delta(order);
        case SeriesName::E4: return eisensteinE4(order);
        case SeriesName::Euler: return eulerProductPentagonal(order);
    }
    throw std::invalid_argument("unknown series");
}

CoefficientTable coefficientTable(SeriesName name, std::int64_t order, std::int64_t padding) {
    const std::int64_t low = nominalValuation(name);
    if (order <= low) {
        throw std::invalid_argument(std::string(toString(name)) + ": order must exceed " + std::to_string(low));
    }
    const LaurentSeries s = expand(name, order, padding);
    CoefficientTable table{name, order, low, {}};
    for (std::int64_t m = low; m < order; ++m) table.entries.emplace(m, s.coeff(m));
    return table;
}

}  // namespace moonshine

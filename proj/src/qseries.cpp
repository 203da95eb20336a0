#include "moonshine/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace moonshine {

LaurentSeries LaurentSeries::zero(std::int64_t order) { return LaurentSeries(order, order, {}); }

LaurentSeries LaurentSeries::one(std::int64_t order) { return monomial(1, 0, order); }

LaurentSeries LaurentSeries::monomial(const ExactInt& c, std::int64_t exponent, std::int64_t order) {
    if (c == 0 || exponent >= order) return zero(order);
    std::vector<ExactInt> coeffs(static_cast<std::size_t>(order - exponent));
    coeffs[0] = c;
    return LaurentSeries(exponent, order, std::move(coeffs));
}

LaurentSeries LaurentSeries::fromCoefficients(std::int64_t valuation, std::vector<ExactInt> coeffs) {
    const std::int64_t order = valuation + static_cast<std::int64_t>(coeffs.size());
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const ExactInt& c) { return c != 0; });
    if (first == coeffs.end()) return zero(order);
    const auto skipped = first - coeffs.begin();
    coeffs.erase(coeffs.begin(), first);
    return LaurentSeries(valuation + skipped, order, std::move(coeffs));
}

LaurentSeries LaurentSeries::fromCoefficients(std::int64_t valuation, std::initializer_list<long> coeffs) {
    std::vector<ExactInt> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return fromCoefficients(valuation, std::move(v));
}

ExactInt LaurentSeries::coeff(std::int64_t m) const {
    if (m >= order_) {
        throw TruncationError("coefficient of q^" + std::to_string(m) + " is beyond truncation O(q^" +
                              std::to_string(order_) + ")");
    }
    if (m < valuation_) return 0;
    return coeffs_[static_cast<std::size_t>(m - valuation_)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t newOrder) const {
    if (newOrder > order_) {
        throw TruncationError("cannot extend a series known to O(q^" + std::to_string(order_) + ") to O(q^" +
                              std::to_string(newOrder) + ")");
    }
    if (newOrder <= valuation_) return zero(newOrder);
    std::vector<ExactInt> kept(coeffs_.begin(), coeffs_.begin() + (newOrder - valuation_));
    return fromCoefficients(valuation_, std::move(kept));
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    return LaurentSeries(valuation_ + k, order_ + k, coeffs_);
}

std::string LaurentSeries::toString() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ExactInt& c = coeffs_[i];
        if (c == 0) continue;
        const std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        ExactInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || e == 0) out << mag.get_str();
        if (e != 0) out << "q";
        if (e != 0 && e != 1) out << "^" << e;
    }
    if (!first) out << " + ";
    out << "O(q^" << order_ << ")";
    return out.str();
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const std::int64_t order = std::min(a.order(), b.order());
    const std::int64_t low = std::min(a.valuation(), b.valuation());
    if (low >= order) return LaurentSeries::zero(order);
    std::vector<ExactInt> out(static_cast<std::size_t>(order - low));
    for (const LaurentSeries* s : {&a, &b}) {
        const auto& c = s->coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::int64_t e = s->valuation() + static_cast<std::int64_t>(i);
            if (e >= order) break;
            out[static_cast<std::size_t>(e - low)] += c[i];
        }
    }
    return LaurentSeries::fromCoefficients(low, std::move(out));
}

LaurentSeries negate(const LaurentSeries& a) { return scale(a, -1); }

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negate(b)); }

LaurentSeries scale(const LaurentSeries& a, const ExactInt& c) {
    if (a.isZero() || c == 0) return LaurentSeries::zero(a.order());
    std::vector<ExactInt> out(a.coefficients());
    for (auto& x : out) x *= c;
    return LaurentSeries::fromCoefficients(a.valuation(), std::move(out));
}

namespace {

std::size_t countNonzero(const std::vector<ExactInt>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const ExactInt& c) { return c != 0; }));
}

}  // namespace

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    const std::int64_t order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.isZero() || b.isZero()) return LaurentSeries::zero(order);

    const std::int64_t valuation = a.valuation() + b.valuation();
    const std::size_t len = static_cast<std::size_t>(order - valuation);

    // Outer loop over the sparser operand; the Euler product and its low powers
    // are mostly zeros.
    const auto* outer = &a.coefficients();
    const auto* inner = &b.coefficients();
    if (countNonzero(*inner) < countNonzero(*outer)) std::swap(outer, inner);

    std::vector<ExactInt> out(len);
    const std::size_t outerLen = std::min(outer->size(), len);
    for (std::size_t i = 0; i < outerLen; ++i) {
        const ExactInt& x = (*outer)[i];
        if (x == 0) continue;
        const std::size_t innerLen = std::min(inner->size(), len - i);
        for (std::size_t j = 0; j < innerLen; ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), x.get_mpz_t(), (*inner)[j].get_mpz_t());
        }
    }
    return LaurentSeries::fromCoefficients(valuation, std::move(out));
}

LaurentSeries pow(const LaurentSeries& a, std::uint64_t k) {
    if (k == 0) {
        const std::int64_t precision = a.isZero() ? 1 : a.order() - a.valuation();
        return LaurentSeries::one(precision);
    }
    LaurentSeries base = a;
    LaurentSeries result = a;
    bool haveResult = false;
    while (true) {
        if (k & 1U) {
            result = haveResult ? mul(result, base) : base;
            haveResult = true;
        }
        k >>= 1U;
        if (k == 0) break;
        base = mul(base, base);
    }
    return result;
}

LaurentSeries invert(const LaurentSeries& a) {
    if (a.isZero()) throw NonUnitError("non-unit leading coefficient: cannot invert the zero series");
    const auto& c = a.coefficients();
    const ExactInt& lead = c[0];
    if (lead != 1 && lead != -1) {
        throw NonUnitError("non-unit leading coefficient " + lead.get_str() + " at q^" +
                           std::to_string(a.valuation()));
    }
    const std::size_t len = c.size();
    std::vector<ExactInt> inv(len);
    inv[0] = lead;
    ExactInt acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (c[k] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), inv[n - k].get_mpz_t());
        }
        // lead is its own inverse
        inv[n] = -lead * acc;
    }
    return LaurentSeries::fromCoefficients(-a.valuation(), std::move(inv));
}

LaurentSeries eulerProduct(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("eulerProduct: order must be >= 1");
    std::vector<ExactInt> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (std::int64_t n = 1; n < order; ++n) {
        for (std::int64_t k = order - 1; k >= n; --k) c[k] -= c[k - n];
    }
    return LaurentSeries::fromCoefficients(0, std::move(c));
}

std::vector<std::int64_t> generalizedPentagonals(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t plus = k * (3 * k - 1) / 2;
        if (plus >= bound) break;
        if (k == 0) {
            out.push_back(0);
            continue;
        }
        out.push_back(plus);
        const std::int64_t minus = k * (3 * k + 1) / 2;
        if (minus < bound) out.push_back(minus);
    }
    return out;
}

LaurentSeries eulerProductPentagonal(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("eulerProductPentagonal: order must be >= 1");
    std::vector<ExactInt> c(static_cast<std::size_t>(order));
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t plus = k * (3 * k - 1) / 2;
        if (plus >= order) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[plus] = sign;
        const std::int64_t minus = k * (3 * k + 1) / 2;
        if (k > 0 && minus < order) c[minus] = sign;
    }
    return LaurentSeries::fromCoefficients(0, std::move(c));
}

}  // namespace moonshine

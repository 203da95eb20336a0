#include "moonshine/lattice.hpp"

#include "moonshine/lorentz.hpp"
#include "moonshine/modforms.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace moonshine {

namespace {

// Integral Gram-Schmidt data: d[0] = 1, d[k] = det of the leading k x k block,
// lambda[i][j] = d[j+1] * mu[i][j] for j < i. All entries are integers.
struct IntegralGso {
    std::vector<ExactInt> d;
    std::vector<std::vector<ExactInt>> lambda;
};

IntegralGso integralGso(const IntMatrix& c) {
    const std::size_t n = c.rows();
    IntegralGso g{std::vector<ExactInt>(n + 1), std::vector<std::vector<ExactInt>>(n, std::vector<ExactInt>(n))};
    g.d[0] = 1;
    ExactInt u;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            u = c(k, j);
            for (std::size_t i = 0; i < j; ++i) {
                u = g.d[i + 1] * u - g.lambda[k][i] * g.lambda[j][i];
                mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), g.d[i].get_mpz_t());
            }
            if (j < k) {
                g.lambda[k][j] = u;
            } else {
                if (u <= 0) throw NotPositiveDefinite();
                g.d[k + 1] = u;
            }
        }
    }
    return g;
}

class IntegralLll {
  public:
    IntegralLll(const GramMatrix& gram, const ExactRational& delta)
        : n_(gram.dim()),
          c_(gram.entries()),
          t_(IntMatrix::identity(gram.dim())),
          d_(n_ + 1),
          lambda_(n_ + 1, std::vector<ExactInt>(n_ + 1)),
          deltaNum_(delta.get_num()),
          deltaDen_(delta.get_den()) {}

    ReducedBasis run() {
        if (n_ == 0) return {GramMatrix(c_), t_};
        d_[0] = 1;
        d_[1] = c_(0, 0);
        if (d_[1] <= 0) throw NotPositiveDefinite();
        std::size_t k = 2;
        std::size_t kmax = 1;
        while (k <= n_) {
            if (k > kmax) {
                kmax = k;
                extendGso(k);
            }
            reduce(k, k - 1);
            if (lovaszFails(k)) {
                swap(k, kmax);
                k = std::max<std::size_t>(2, k - 1);
                continue;
            }
            for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
            ++k;
        }
        return {GramMatrix(c_), t_};
    }

  private:
    // 1-based basis indices throughout; row k-1 of c_/t_ is b_k.
    void extendGso(std::size_t k) {
        ExactInt u;
        for (std::size_t j = 1; j <= k; ++j) {
            u = c_(k - 1, j - 1);
            for (std::size_t i = 1; i < j; ++i) {
                u = d_[i] * u - lambda_[k][i] * lambda_[j][i];
                mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
            }
            if (j < k) {
                lambda_[k][j] = u;
            } else {
                if (u <= 0) throw NotPositiveDefinite();
                d_[k] = u;
            }
        }
    }

    void reduce(std::size_t k, std::size_t l) {
        ExactInt twice = 2 * lambda_[k][l];
        if (mpz_cmpabs(twice.get_mpz_t(), d_[l].get_mpz_t()) <= 0) return;
        // nearest integer to lambda / d_l
        ExactInt r = twice + d_[l];
        ExactInt den = 2 * d_[l];
        mpz_fdiv_q(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        const ExactInt neg = -r;
        t_.addRowMultiple(k - 1, l - 1, neg);
        c_.addRowMultiple(k - 1, l - 1, neg);
        for (std::size_t i = 0; i < n_; ++i) {
            mpz_addmul(c_(i, k - 1).get_mpz_t(), neg.get_mpz_t(), c_(i, l - 1).get_mpz_t());
        }
        mpz_submul(lambda_[k][l].get_mpz_t(), r.get_mpz_t(), d_[l].get_mpz_t());
        for (std::size_t i = 1; i < l; ++i) {
            mpz_submul(lambda_[k][i].get_mpz_t(), r.get_mpz_t(), lambda_[l][i].get_mpz_t());
        }
    }

    // delta d_{k-1}^2 - lambda^2 > d_k d_{k-2}
    bool lovaszFails(std::size_t k) const {
        const ExactInt lhs = deltaDen_ * d_[k] * d_[k - 2];
        const ExactInt rhs = deltaNum_ * d_[k - 1] * d_[k - 1] - deltaDen_ * lambda_[k][k - 1] * lambda_[k][k - 1];
        return lhs < rhs;
    }

    void swap(std::size_t k, std::size_t kmax) {
        t_.swapRows(k - 1, k - 2);
        c_.swapRows(k - 1, k - 2);
        for (std::size_t i = 0; i < n_; ++i) std::swap(c_(i, k - 1), c_(i, k - 2));
        for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
        const ExactInt lam = lambda_[k][k - 1];
        ExactInt b = d_[k - 2] * d_[k] + lam * lam;
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k - 1].get_mpz_t());
        ExactInt t;
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            t = lambda_[i][k];
            lambda_[i][k] = d_[k] * lambda_[i][k - 1] - lam * t;
            mpz_divexact(lambda_[i][k].get_mpz_t(), lambda_[i][k].get_mpz_t(), d_[k - 1].get_mpz_t());
            lambda_[i][k - 1] = b * t + lam * lambda_[i][k];
            mpz_divexact(lambda_[i][k - 1].get_mpz_t(), lambda_[i][k - 1].get_mpz_t(), d_[k].get_mpz_t());
        }
        d_[k - 1] = b;
    }

    std::size_t n_;
    IntMatrix c_;
    IntMatrix t_;
    std::vector<ExactInt> d_;
    std::vector<std::vector<ExactInt>> lambda_;
    ExactInt deltaNum_;
    ExactInt deltaDen_;
};

}  // namespace

ReducedBasis lll(const GramMatrix& gram, const ExactRational& delta) {
    if (delta <= ExactRational(1, 4) || delta >= 1) throw std::invalid_argument("lll: delta must lie in (1/4, 1)");
    // b1 never grows under LLL, so starting from the shortest basis vector keeps
    // the reduced b1 no longer than any original basis vector.
    const std::size_t n = gram.dim();
    std::size_t shortest = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (gram(i, i) < gram(shortest, shortest)) shortest = i;
    if (shortest == 0) return IntegralLll(gram, delta).run();
    IntMatrix p = IntMatrix::identity(n);
    p.swapRows(0, shortest);
    ReducedBasis r = IntegralLll(gram.transformed(p), delta).run();
    r.transform = r.transform * p;
    return r;
}

GramSchmidt gramSchmidt(const GramMatrix& gram) {
    const std::size_t n = gram.dim();
    GramSchmidt out{std::vector<std::vector<ExactRational>>(n, std::vector<ExactRational>(n)),
                    std::vector<ExactRational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            ExactRational s = gram(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= out.mu[i][k] * out.mu[j][k] * out.pivots[k];
            if (j < i) {
                out.mu[i][j] = s / out.pivots[j];
            } else {
                if (s <= 0) throw NotPositiveDefinite();
                out.pivots[i] = s;
            }
        }
    }
    return out;
}

ExactInt ShortVectorCount::total() const {
    ExactInt t = 0;
    for (const auto& [norm, c] : countsByNorm) t += c;
    return t;
}

namespace {

// Fincke-Pohst in integer form. With N_k = d_{k+1} x_k + sum_{i>k} lambda_ik x_i
// the norm is sum_k N_k^2 / (d_k d_{k+1}). Scaling by P = lcm(d_k d_{k+1})
// gives integer weights w_k = P / (d_k d_{k+1}) and an integer budget.
class Enumerator {
  public:
    Enumerator(const GramMatrix& gram, std::int64_t maxNorm) : n_(gram.dim()), maxNorm_(maxNorm) {
        const IntegralGso g = integralGso(gram.entries());
        d_ = g.d;
        lambda_ = g.lambda;
        scale_ = 1;
        std::vector<ExactInt> e(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            e[k] = d_[k] * d_[k + 1];
            mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), e[k].get_mpz_t());
        }
        weight_.resize(n_);
        for (std::size_t k = 0; k < n_; ++k) mpz_divexact(weight_[k].get_mpz_t(), scale_.get_mpz_t(), e[k].get_mpz_t());
        budget_ = scale_ * maxNorm;
    }

    struct Prefix {
        std::vector<ExactInt> x;
        ExactInt remaining;
        bool allZero = true;
    };

    std::size_t dim() const { return n_; }

    Prefix root() const { return {std::vector<ExactInt>(n_), budget_, true}; }

    // Walk levels n-1 .. stop+1 and hand every surviving prefix to `sink`.
    template <class Sink>
    void prefixes(Prefix p, std::size_t level, std::size_t stop, Sink&& sink) const {
        if (level == stop) {
            sink(std::move(p));
            return;
        }
        const std::size_t k = level - 1;
        forEachValue(p, k, [&](Prefix& child) { prefixes(child, k, stop, sink); });
    }

    // Counts (halved by the +/- symmetry) below `level`, accumulated into counts[norm].
    void count(Prefix& p, std::size_t level, std::vector<std::uint64_t>& counts) const {
        if (level == 0) {
            if (p.allZero) return;
            ExactInt used = budget_ - p.remaining;
            mpz_divexact(used.get_mpz_t(), used.get_mpz_t(), scale_.get_mpz_t());
            ++counts[used.get_ui()];
            return;
        }
        const std::size_t k = level - 1;
        forEachValue(p, k, [&](Prefix& child) { count(child, k, counts); });
    }

  private:
    // Iterates admissible x_k given x_{k+1..n-1}; restricted to x_k >= 0 while
    // every higher coordinate is zero so that only one of +/-v is visited.
    template <class F>
    void forEachValue(Prefix& p, std::size_t k, F&& visit) const {
        ExactInt s = 0;
        for (std::size_t i = k + 1; i < n_; ++i) {
            if (p.x[i] != 0) mpz_addmul(s.get_mpz_t(), lambda_[i][k].get_mpz_t(), p.x[i].get_mpz_t());
        }
        ExactInt bound;
        mpz_fdiv_q(bound.get_mpz_t(), p.remaining.get_mpz_t(), weight_[k].get_mpz_t());
        mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
        // -bound <= d x + s <= bound
        ExactInt lo = -bound - s;
        ExactInt hi = bound - s;
        mpz_cdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), d_[k + 1].get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), d_[k + 1].get_mpz_t());
        if (p.allZero && lo < 0) lo = 0;

        const ExactInt saved = p.remaining;
        const bool savedZero = p.allZero;
        ExactInt nk;
        for (ExactInt x = lo; x <= hi; ++x) {
            nk = s;
            mpz_addmul(nk.get_mpz_t(), d_[k + 1].get_mpz_t(), x.get_mpz_t());
            p.remaining = saved;
            mpz_mul(nk.get_mpz_t(), nk.get_mpz_t(), nk.get_mpz_t());
            mpz_submul(p.remaining.get_mpz_t(), weight_[k].get_mpz_t(), nk.get_mpz_t());
            if (p.remaining < 0) continue;
            p.x[k] = x;
            p.allZero = savedZero && x == 0;
            visit(p);
        }
        p.x[k] = 0;
        p.remaining = saved;
        p.allZero = savedZero;
    }

    std::size_t n_;
    std::int64_t maxNorm_;
    std::vector<ExactInt> d_;
    std::vector<std::vector<ExactInt>> lambda_;
    std::vector<ExactInt> weight_;
    ExactInt scale_;
    ExactInt budget_;
};

}  // namespace

ShortVectorCount shortVectors(const GramMatrix& gram, std::int64_t maxNorm, unsigned jobs) {
    if (maxNorm < 1) throw std::invalid_argument("shortVectors: maxNorm must be >= 1");
    if (!gram.isPositiveDefinite()) throw NotPositiveDefinite();
    const ReducedBasis reduced = lll(gram);
    const Enumerator en(reduced.gram, maxNorm);
    const std::size_t n = en.dim();

    std::vector<std::uint64_t> halfCounts(static_cast<std::size_t>(maxNorm) + 1, 0);
    if (jobs <= 1 || n < 4) {
        Enumerator::Prefix root = en.root();
        en.count(root, n, halfCounts);
    } else {
        const std::size_t stop = n - 3;
        std::vector<Enumerator::Prefix> tasks;
        en.prefixes(en.root(), n, stop, [&](Enumerator::Prefix p) { tasks.push_back(std::move(p)); });
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(halfCounts.size(), 0));
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    Enumerator::Prefix p = tasks[i];
                    en.count(p, stop, partial[t]);
                }
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& part : partial)
            for (std::size_t i = 0; i < part.size(); ++i) halfCounts[i] += part[i];
    }

    ShortVectorCount out;
    out.maxNorm = maxNorm;
    for (std::int64_t norm = 1; norm <= maxNorm; ++norm) {
        ExactInt c = halfCounts[static_cast<std::size_t>(norm)];
        out.countsByNorm.emplace(norm, 2 * c);
    }
    return out;
}

nlohmann::json toJson(const ShortVectorCount& count) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [norm, c] : count.countsByNorm) counts[std::to_string(norm)] = c.get_str();
    return {{"maxNorm", std::to_string(count.maxNorm)}, {"counts", std::move(counts)}};
}

ShortVectorCount shortVectorCountFromJson(const nlohmann::json& j) {
    ShortVectorCount out;
    out.maxNorm = std::stoll(j.at("maxNorm").get<std::string>());
    for (const auto& [key, value] : j.at("counts").items()) {
        out.countsByNorm.emplace(std::stoll(key), ExactInt(value.get<std::string>()));
    }
    return out;
}

GramMatrix e8Gram() {
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    // Bourbaki: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8 and the branch 2-4.
    const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) {
        g(a, b) = -1;
        g(b, a) = -1;
    }
    return GramMatrix(std::move(g));
}

LeechThetaReport thetaCheckLeech(std::int64_t maxNorm, unsigned jobs) {
    if (maxNorm != 2 && maxNorm != 4 && maxNorm != 6) {
        throw std::invalid_argument("thetaCheckLeech: maxNorm must be 2, 4 or 6");
    }
    const std::int64_t order = maxNorm / 2 + 1;
    const LaurentSeries e4Cubed = pow(eisensteinE4(order), 3);
    const LaurentSeries disc = delta(order);

    // alpha E4^3 + beta Delta with constant term 1 and no q^1 term.
    const ExactRational a00 = e4Cubed.coeff(0), a01 = disc.coeff(0);
    const ExactRational a10 = e4Cubed.coeff(1), a11 = disc.coeff(1);
    const ExactRational det = a00 * a11 - a01 * a10;
    if (det == 0) throw std::logic_error("thetaCheckLeech: weight-12 conditions are degenerate");

    LeechThetaReport report;
    report.e4CubedWeight = a11 / det;
    report.deltaWeight = -a10 / det;

    const ShortVectorCount counts = shortVectors(leechGram(), maxNorm, jobs);
    report.allMatch = true;
    for (std::int64_t norm = 1; norm <= maxNorm; ++norm) {
        if (norm % 2 != 0) {
            if (counts.countsByNorm.at(norm) != 0) report.allMatch = false;
            continue;
        }
        const ExactRational coeff = report.e4CubedWeight * ExactRational(e4Cubed.coeff(norm / 2)) +
                                    report.deltaWeight * ExactRational(disc.coeff(norm / 2));
        if (coeff.get_den() != 1) throw std::logic_error("thetaCheckLeech: non-integral theta coefficient");
        ThetaComparison cmp{norm, counts.countsByNorm.at(norm), coeff.get_num(), false};
        cmp.matches = cmp.enumerated == cmp.seriesCoefficient;
        report.allMatch = report.allMatch && cmp.matches;
        report.comparisons.push_back(std::move(cmp));
    }
    return report;
}

}  // namespace moonshine

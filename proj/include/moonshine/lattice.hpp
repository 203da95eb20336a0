#pragma once

// Exact positive-definite lattice algorithms: LLL on Gram matrices,
// Fincke-Pohst enumeration and theta-coefficient counts.

#include "moonshine/matrix.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace moonshine {

class NotPositiveDefinite : public std::domain_error {
  public:
    NotPositiveDefinite() : std::domain_error("not positive definite") {}
};

struct ReducedBasis {
    GramMatrix gram;      // transform * input * transform^T
    IntMatrix transform;  // unimodular; rows are the reduced vectors in input coordinates
};

/// LLL reduction driven by the Gram matrix alone, in exact integer arithmetic
/// (the integral Gram-Schmidt variant). delta must lie in (1/4, 1).
ReducedBasis lll(const GramMatrix& gram, const ExactRational& delta = ExactRational(3, 4));

/// Rational Gram-Schmidt data of a positive definite Gram: G = M diag(pivots) M^T
/// with M unit lower triangular. Throws NotPositiveDefinite on a pivot <= 0.
struct GramSchmidt {
    std::vector<std::vector<ExactRational>> mu;  // mu[i][j], j < i
    std::vector<ExactRational> pivots;
};

GramSchmidt gramSchmidt(const GramMatrix& gram);

struct ShortVectorCount {
    std::int64_t maxNorm = 0;
    std::map<std::int64_t, ExactInt> countsByNorm;  // every norm 1..maxNorm, zero vector excluded

    ExactInt total() const;
};

/// Counts nonzero v with v^T G v <= maxNorm, bucketed by norm. The basis is LLL
/// reduced first; jobs > 1 shares subtrees among threads with identical totals.
ShortVectorCount shortVectors(const GramMatrix& gram, std::int64_t maxNorm, unsigned jobs = 1);

/// {"maxNorm": "n", "counts": {"1": "c1", ...}} with decimal-string integers.
nlohmann::json toJson(const ShortVectorCount& count);
ShortVectorCount shortVectorCountFromJson(const nlohmann::json& j);

/// Cartan matrix of E8 (Bourbaki labelling): norm-2 simple roots, det 1.
GramMatrix e8Gram();

struct ThetaComparison {
    std::int64_t norm = 0;
    ExactInt enumerated;
    ExactInt seriesCoefficient;
    bool matches = false;
};

struct LeechThetaReport {
    // theta = e4CubedWeight * E4^3 + deltaWeight * Delta, fixed by constant
    // term 1 and a vanishing q^1 coefficient.
    ExactRational e4CubedWeight;
    ExactRational deltaWeight;
    std::vector<ThetaComparison> comparisons;  // norms 2, 4, ..., maxNorm
    bool allMatch = false;
};

/// Enumerates leechGram() to maxNorm (2, 4 or 6) and compares each even norm
/// 2k against the q^k coefficient of the root-free weight-12 theta series.
LeechThetaReport thetaCheckLeech(std::int64_t maxNorm, unsigned jobs = 1);

}  // namespace moonshine

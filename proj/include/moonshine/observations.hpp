#pragma once

// Checks for the sum-of-squares congruences on c(m) and tau(m), the
// 196884 identity, and the square pyramidal (cannonball) search.

#include "moonshine/modforms.hpp"
#include "moonshine/qseries.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace moonshine {

struct CongruenceReport {
    SeriesName sequence;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;  // sumOfSquares mod modulus, in [0, modulus)
    ExactInt sumOfSquares;
};

/// Sum of squares of the sequence's coefficients over [lo, hi], reduced mod modulus.
/// Only j and delta are accepted sequences.
CongruenceReport checkCongruence(SeriesName sequence, std::int64_t lo, std::int64_t hi, std::uint64_t modulus);
CongruenceReport checkCongruence(std::string_view sequence, std::int64_t lo, std::int64_t hi, std::uint64_t modulus);

inline constexpr std::uint64_t kObservationModulus = 70;
inline constexpr std::uint64_t kObservationResidue = 42;
inline constexpr std::int64_t kObservationLast = 24;

/// The two published instances: c(m) over m = 1..24 and tau(m) over m = 1..24, mod 70.
std::pair<CongruenceReport, CongruenceReport> observationReport();

struct CannonballSolution {
    std::uint64_t n = 0;
    ExactInt m;
    bool trivial() const { return n == 1; }
    friend bool operator==(const CannonballSolution&, const CannonballSolution&) = default;
};

/// Every n <= maxN with 1^2 + ... + n^2 a perfect square, ascending in n.
/// jobs > 1 splits the range across threads; output is identical.
std::vector<CannonballSolution> cannonball(std::uint64_t maxN, unsigned jobs = 1);

struct MoonshineIdentity {
    ExactInt c1;
    ExactInt monsterDimension;
    bool holds = false;
};

MoonshineIdentity moonshineIdentity();

struct WeylNormIdentity {
    ExactInt sumOfSquares;     // 1^2 + ... + 24^2
    ExactInt timelikeSquared;  // 70^2
    bool holds = false;
};

WeylNormIdentity weylNormIdentity();

}  // namespace moonshine

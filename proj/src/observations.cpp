#include "moonshine/observations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace moonshine {

CongruenceReport checkCongruence(SeriesName sequence, std::int64_t lo, std::int64_t hi, std::uint64_t modulus) {
    if (sequence != SeriesName::J && sequence != SeriesName::Delta) {
        throw std::invalid_argument("unknown sequence name '" + std::string(toString(sequence)) +
                                    "' (expected j or delta)");
    }
    if (lo > hi) throw std::invalid_argument("checkCongruence: empty range");
    if (modulus < 1) throw std::invalid_argument("checkCongruence: modulus must be >= 1");
    const std::int64_t floor = nominalValuation(sequence);
    if (lo < floor) {
        throw std::domain_error("checkCongruence: range starts at " + std::to_string(lo) + ", below valuation " +
                                std::to_string(floor) + " of " + std::string(toString(sequence)));
    }

    ExactInt sum = 0;
    for (std::int64_t m = lo; m <= hi; ++m) {
        const ExactInt c = sequence == SeriesName::J ? jCoeff(m) : tau(m);
        mpz_addmul(sum.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
    }
    ExactInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), sum.get_mpz_t(), modulus);
    return CongruenceReport{sequence, lo, hi, modulus, r.get_ui(), sum};
}

CongruenceReport checkCongruence(std::string_view sequence, std::int64_t lo, std::int64_t hi, std::uint64_t modulus) {
    const auto name = parseSeriesName(sequence);
    if (!name) throw std::invalid_argument("unknown sequence name '" + std::string(sequence) + "'");
    return checkCongruence(*name, lo, hi, modulus);
}

std::pair<CongruenceReport, CongruenceReport> observationReport() {
    return {checkCongruence(SeriesName::J, 1, kObservationLast, kObservationModulus),
            checkCongruence(SeriesName::Delta, 1, kObservationLast, kObservationModulus)};
}

namespace {

void searchRange(std::uint64_t first, std::uint64_t last, std::vector<CannonballSolution>& out) {
    ExactInt pyramid;
    ExactInt root;
    for (std::uint64_t n = first; n <= last; ++n) {
        // n(n+1)(2n+1)/6
        pyramid = n;
        pyramid *= n + 1;
        pyramid *= 2 * n + 1;
        mpz_divexact_ui(pyramid.get_mpz_t(), pyramid.get_mpz_t(), 6);
        if (mpz_perfect_square_p(pyramid.get_mpz_t()) == 0) continue;
        mpz_sqrt(root.get_mpz_t(), pyramid.get_mpz_t());
        out.push_back({n, root});
    }
}

}  // namespace

std::vector<CannonballSolution> cannonball(std::uint64_t maxN, unsigned jobs) {
    if (maxN < 1) throw std::invalid_argument("cannonball: maxN must be >= 1");
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(maxN, 256))));
    std::vector<std::vector<CannonballSolution>> parts(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (maxN + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        const std::uint64_t first = 1 + t * chunk;
        const std::uint64_t last = std::min(maxN, first + chunk - 1);
        if (first > last) break;
        if (jobs == 1) {
            searchRange(first, last, parts[t]);
        } else {
            workers.emplace_back(searchRange, first, last, std::ref(parts[t]));
        }
    }
    for (auto& w : workers) w.join();

    std::vector<CannonballSolution> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

MoonshineIdentity moonshineIdentity() {
    MoonshineIdentity r{jCoeff(1), 196883, false};
    r.holds = r.c1 == r.monsterDimension + 1;
    return r;
}

WeylNormIdentity weylNormIdentity() {
    WeylNormIdentity r{0, 70 * 70, false};
    for (int i = 1; i <= 24; ++i) r.sumOfSquares += i * i;
    r.holds = r.sumOfSquares == r.timelikeSquared;
    return r;
}

}  // namespace moonshine

#include "cli.hpp"

#include "moonshine/lattice.hpp"
#include "moonshine/lorentz.hpp"
#include "moonshine/modforms.hpp"
#include "moonshine/observations.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace moonshine::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kDefaultOrderCeiling = 5000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string outPath;
    unsigned jobs = 1;
    std::int64_t padding = kDefaultOrderPadding;
    bool unsafeOrder = false;

    std::string series;
    std::int64_t order = 0;
    std::string observation = "both";
    std::int64_t maxN = 0;
    std::string leechCheck;
    std::int64_t maxNorm = 0;
    bool allowNorm6 = false;
};

struct RunResult {
    std::string command;
    bool ok = true;
    json payload = json::object();
    std::string text;  // human-readable rendering
    std::string csv;   // only for coeffs
};

std::string str(const ExactInt& v) { return v.get_str(); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const ExactRational& v) { return v.get_str(); }

RunResult cmdCoeffs(const Options& o) {
    const auto name = parseSeriesName(o.series);
    if (!name) throw UsageError("unknown series '" + o.series + "' (expected j, delta, e4 or euler)");
    if (o.order > kDefaultOrderCeiling && !o.unsafeOrder) {
        throw UsageError("order " + str(o.order) + " exceeds the ceiling " + str(kDefaultOrderCeiling) +
                         " (pass --unsafe-order to override)");
    }
    if (o.order <= nominalValuation(*name)) {
        throw UsageError("order must exceed " + str(nominalValuation(*name)) + " for series " + o.series);
    }
    const CoefficientTable table = coefficientTable(*name, o.order, o.padding);

    RunResult r{"coeffs"};
    json coeffs = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "exponent,coefficient\n";
    text << o.series << " modulo q^" << o.order << "\n";
    for (const auto& [m, c] : table.entries) {
        coeffs.push_back(str(c));
        csv << m << "," << c.get_str() << "\n";
        text << "  q^" << m << ": " << c.get_str() << "\n";
    }
    r.payload = {{"series", o.series},
                 {"order", str(table.order)},
                 {"valuation", str(table.valuation)},
                 {"coefficients", std::move(coeffs)}};
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

json congruenceJson(const std::string& label, const CongruenceReport& rep) {
    return {{"name", label},
            {"sequence", std::string(toString(rep.sequence))},
            {"range", {str(rep.lo), str(rep.hi)}},
            {"modulus", std::to_string(rep.modulus)},
            {"residue", std::to_string(rep.residue)},
            {"expected", std::to_string(kObservationResidue)},
            {"sumOfSquares", str(rep.sumOfSquares)},
            {"holds", rep.residue == kObservationResidue}};
}

RunResult cmdVerify(const Options& o) {
    RunResult r{"verify"};
    const auto [jm, yhh] = observationReport();
    json list = json::array();
    std::ostringstream text;
    auto emit = [&](const std::string& label, const CongruenceReport& rep) {
        list.push_back(congruenceJson(label, rep));
        const bool holds = rep.residue == kObservationResidue;
        r.ok = r.ok && holds;
        text << label << ": sum of squares over m=" << rep.lo << ".." << rep.hi << " = " << rep.sumOfSquares.get_str()
             << "\n    mod " << rep.modulus << " = " << rep.residue << (holds ? "  [holds]" : "  [FAILS]") << "\n";
    };
    if (o.observation == "jm" || o.observation == "both") emit("jm", jm);
    if (o.observation == "yhh" || o.observation == "both") emit("yhh", yhh);
    r.payload = {{"observations", std::move(list)}};
    r.text = text.str();
    return r;
}

RunResult cmdCannonball(const Options& o) {
    if (o.maxN < 1) throw UsageError("--max-n must be >= 1");
    RunResult r{"cannonball"};
    const auto solutions = cannonball(static_cast<std::uint64_t>(o.maxN), o.jobs);
    json list = json::array();
    std::ostringstream text;
    text << "n <= " << o.maxN << " with 1^2 + ... + n^2 = m^2:\n";
    for (const auto& s : solutions) {
        list.push_back({{"n", std::to_string(s.n)}, {"m", str(s.m)}, {"trivial", s.trivial()}});
        text << "  (" << s.n << ", " << s.m.get_str() << ")" << (s.trivial() ? "  trivial" : "") << "\n";
    }
    r.payload = {{"maxN", str(o.maxN)}, {"solutions", std::move(list)}};
    r.text = text.str();
    return r;
}

RunResult cmdLeech(const Options& o) {
    RunResult r{"leech " + o.leechCheck};
    std::ostringstream text;
    if (o.leechCheck == "gram") {
        if (o.maxNorm != 0) throw UsageError("--max-norm does not apply to 'leech gram'");
        const GramMatrix& g = leechGram();
        const ExactInt det = g.determinant();
        const bool even = g.isEven();
        const bool pd = g.isPositiveDefinite();
        r.ok = det == 1 && even && pd;
        r.payload = {{"gram", toJson(g)}, {"det", str(det)}, {"even", even}, {"symmetric", true}, {"positiveDefinite", pd}};
        text << "Leech Gram (" << g.dim() << "x" << g.dim() << "): det " << det.get_str() << ", even "
             << (even ? "yes" : "no") << ", positive definite " << (pd ? "yes" : "no") << "\n";
    } else if (o.leechCheck == "min") {
        if (o.maxNorm != 0 && o.maxNorm != 2) throw UsageError("'leech min' scans norm 2 only");
        const ShortVectorCount c = shortVectors(leechGram(), 2, o.jobs);
        const ExactInt roots = c.countsByNorm.at(2);
        r.ok = roots == 0 && c.countsByNorm.at(1) == 0;
        r.payload = {{"counts", toJson(c)}, {"norm2Count", str(roots)}};
        text << "vectors of norm 2: " << roots.get_str() << (r.ok ? "  (minimum norm 4)" : "  [FAILS]") << "\n";
    } else {
        std::int64_t maxNorm = o.maxNorm == 0 ? 4 : o.maxNorm;
        if (maxNorm != 2 && maxNorm != 4 && maxNorm != 6) throw UsageError("--max-norm must be 2, 4 or 6");
        if (maxNorm == 6 && !o.allowNorm6) throw UsageError("norm-6 enumeration needs --allow-norm6");
        const LeechThetaReport rep = thetaCheckLeech(maxNorm, o.jobs);
        r.ok = rep.allMatch;
        json list = json::array();
        for (const auto& c : rep.comparisons) {
            list.push_back({{"norm", str(c.norm)},
                            {"enumerated", str(c.enumerated)},
                            {"seriesCoefficient", str(c.seriesCoefficient)},
                            {"matches", c.matches}});
            text << "norm " << c.norm << ": enumerated " << c.enumerated.get_str() << ", theta coefficient "
                 << c.seriesCoefficient.get_str() << (c.matches ? "" : "  [MISMATCH]") << "\n";
        }
        r.payload = {{"maxNorm", str(maxNorm)},
                     {"weights", {{"e4Cubed", str(rep.e4CubedWeight)}, {"delta", str(rep.deltaWeight)}}},
                     {"comparisons", std::move(list)}};
        text << "theta = " << rep.e4CubedWeight.get_str() << " E4^3 + (" << rep.deltaWeight.get_str() << ") Delta\n";
    }
    r.text = text.str();
    return r;
}

RunResult cmdE8(const Options& o) {
    if (o.maxNorm < 2 || o.maxNorm > 8 || o.maxNorm % 2 != 0) {
        throw UsageError("--max-norm must be even and between 2 and 8");
    }
    RunResult r{"e8"};
    const ShortVectorCount c = shortVectors(e8Gram(), o.maxNorm, o.jobs);
    const LaurentSeries e4 = eisensteinE4(o.maxNorm / 2 + 1);
    json list = json::array();
    std::ostringstream text;
    for (const auto& [norm, count] : c.countsByNorm) {
        if (norm % 2 != 0) {
            r.ok = r.ok && count == 0;
            continue;
        }
        const ExactInt coeff = e4.coeff(norm / 2);
        const bool match = coeff == count;
        r.ok = r.ok && match;
        list.push_back({{"norm", str(norm)}, {"enumerated", str(count)}, {"e4Coefficient", str(coeff)}, {"matches", match}});
        text << "norm " << norm << ": enumerated " << count.get_str() << ", 240 sigma_3(" << norm / 2
             << ") = " << coeff.get_str() << (match ? "" : "  [MISMATCH]") << "\n";
    }
    r.payload = {{"counts", toJson(c)}, {"comparisons", std::move(list)}};
    r.text = text.str();
    return r;
}

std::string render(const RunResult& r, const std::string& format, std::int64_t elapsedMillis) {
    if (format == "json") {
        const json doc = {{"command", r.command}, {"ok", r.ok}, {"payload", r.payload}, {"elapsedMillis", elapsedMillis}};
        return doc.dump(2) + "\n";
    }
    if (format == "csv") return r.csv;
    return r.text + (r.ok ? "ok\n" : "FAILED\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact q-expansions, moonshine congruences and the Leech lattice"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.outPath, "Write the output to FILE instead of stdout");
    app.add_option("--jobs", o.jobs, "Worker threads for enumeration and search")->check(CLI::Range(1U, 256U));
    app.add_option("--seed-order-padding", o.padding)->group("")->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));
    app.add_flag("--unsafe-order", o.unsafeOrder, "Lift the coefficient order ceiling");

    auto* coeffs = app.add_subcommand("coeffs", "Print q-expansion coefficients");
    coeffs->add_option("--series", o.series, "j, delta, e4 or euler")->required();
    coeffs->add_option("--order", o.order, "Truncation order (coefficients below q^order)")->required();

    auto* verify = app.add_subcommand("verify", "Check the sum-of-squares congruences mod 70");
    verify->add_option("--observation", o.observation)->check(CLI::IsMember({"jm", "yhh", "both"}));

    auto* ball = app.add_subcommand("cannonball", "Search 1^2 + ... + n^2 = m^2");
    ball->add_option("--max-n", o.maxN)->required();

    auto* leech = app.add_subcommand("leech", "Leech lattice as w^perp / w in II_{25,1}");
    leech->add_option("check", o.leechCheck)->required()->check(CLI::IsMember({"gram", "min", "kissing"}));
    leech->add_option("--max-norm", o.maxNorm, "Enumeration bound for kissing (2, 4, or 6)");
    leech->add_flag("--allow-norm6", o.allowNorm6, "Permit the long norm-6 enumeration");

    auto* e8 = app.add_subcommand("e8", "Compare E8 vector counts with E4 coefficients");
    e8->add_option("--max-norm", o.maxNorm)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::function<RunResult(const Options&)> command;
    if (*coeffs) command = cmdCoeffs;
    else if (*verify) command = cmdVerify;
    else if (*ball) command = cmdCannonball;
    else if (*leech) command = cmdLeech;
    else command = cmdE8;

    if (o.format == "csv" && !*coeffs) {
        err << "error: csv output is only available for coeffs\n";
        return kExitUsage;
    }

    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        result = command(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << "\n";
        return kExitFailed;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    const std::string rendered = render(result, o.format, elapsed);
    if (o.outPath.empty()) {
        out << rendered;
    } else {
        std::ofstream file(o.outPath);
        if (!file) {
            err << "error: cannot open " << o.outPath << "\n";
            return kExitUsage;
        }
        file << rendered;
    }
    return result.ok ? kExitOk : kExitFailed;
}

}  // namespace moonshine::cli

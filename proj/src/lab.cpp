#include "obddlab/lab.hpp"

#include "obddlab/certify.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/graph.hpp"
#include "obddlab/ordering.hpp"
#include "obddlab/sat2.hpp"
#include "obddlab/theta.hpp"
#include "obddlab/width.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace obddlab {

namespace {

using nlohmann::json;

const std::vector<std::string> kOnDemand{"twUpper",      "mmwLinearBest", "cutPosition", "matchingSize",
                                         "prefixMatchingSize", "thetaPrefix", "obddSize", "certFloor"};

std::size_t readCount(const json& j, const std::string& field, std::size_t min) {
    if (!j.is_number_integer() || (j.is_number_integer() && j.get<std::int64_t>() < static_cast<std::int64_t>(min)))
        throw ConfigError(field, "expected an integer >= " + std::to_string(min));
    return j.get<std::size_t>();
}

Fraction readDelta(const json& j) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number())
        text = j.dump();
    else
        throw ConfigError("deltaValues", "entries must be numbers or decimal strings");
    try {
        return Fraction::parseDecimal(text);
    } catch (const Error& e) {
        throw ConfigError("deltaValues", e.what());
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

template <class T>
std::string orNA(const std::optional<T>& v) {
    if (!v)
        return "NA";
    std::ostringstream os;
    os << *v;
    return os.str();
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace

const std::vector<std::string>& metricNames() {
    static const std::vector<std::string> names{
        "satisfiable",   "simple",      "nonUniqueClauses", "maxDegree",          "oneCyclePerComponent",
        "twUpper",       "mmwLinearBest", "cutPosition",    "matchingSize",       "prefixMatchingSize",
        "prefixIsMatching", "thetaPrefix", "obddSize",      "certFloor"};
    return names;
}

bool SweepConfig::wants(const std::string& metric) const {
    if (std::find(kOnDemand.begin(), kOnDemand.end(), metric) == kOnDemand.end())
        return true;
    return std::find(metrics.begin(), metrics.end(), metric) != metrics.end() ||
           std::find(metrics.begin(), metrics.end(), "all") != metrics.end();
}

SweepConfig parseSweepConfig(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }
    if (!j.is_object())
        throw ConfigError("<document>", "expected a flat JSON object");

    SweepConfig c;
    for (const auto& req : {"distribution", "nValues", "deltaValues", "trials", "masterSeed", "metrics"})
        if (!j.contains(req))
            throw ConfigError(req, "missing");

    for (const auto& [key, value] : j.items()) {
        if (key == "distribution") {
            if (!value.is_string())
                throw ConfigError(key, "expected a string");
            try {
                c.distribution = parseDistribution(value.get<std::string>());
            } catch (const Error& e) {
                throw ConfigError(key, e.what());
            }
        } else if (key == "nValues") {
            if (!value.is_array() || value.empty())
                throw ConfigError(key, "expected a non-empty array");
            for (const auto& v : value)
                c.nValues.push_back(readCount(v, key, 1));
        } else if (key == "deltaValues") {
            if (!value.is_array() || value.empty())
                throw ConfigError(key, "expected a non-empty array");
            for (const auto& v : value)
                c.deltaValues.push_back(readDelta(v));
        } else if (key == "trials") {
            c.trials = readCount(value, key, 1);
        } else if (key == "masterSeed") {
            if (value.is_number_unsigned() || (value.is_number_integer() && value.get<std::int64_t>() >= 0))
                c.masterSeed = value.get<std::uint64_t>();
            else
                throw ConfigError(key, "expected a non-negative 64-bit integer");
        } else if (key == "metrics") {
            if (!value.is_array())
                throw ConfigError(key, "expected an array of metric names");
            for (const auto& v : value) {
                if (!v.is_string())
                    throw ConfigError(key, "expected metric names");
                const auto name = v.get<std::string>();
                const auto& known = metricNames();
                if (name != "all" && std::find(known.begin(), known.end(), name) == known.end())
                    throw ConfigError(key, "unknown metric '" + name + "'");
                c.metrics.push_back(name);
            }
        } else if (key == "nodeCapacity") {
            c.nodeCapacity = readCount(value, key, 2);
        } else if (key == "outputPath") {
            if (!value.is_string())
                throw ConfigError(key, "expected a string");
            c.outputPath = value.get<std::string>();
        } else if (key == "order") {
            if (!value.is_string())
                throw ConfigError(key, "expected a string");
            c.order = value.get<std::string>();
            const auto& known = orderStrategies();
            if (std::find(known.begin(), known.end(), c.order) == known.end())
                throw ConfigError(key, "unknown order strategy '" + c.order + "'");
        } else if (key == "recordRuntime") {
            if (!value.is_boolean())
                throw ConfigError(key, "expected true or false");
            c.recordRuntime = value.get<bool>();
        } else if (key == "certMaxMatching") {
            c.certMaxMatching = readCount(value, key, 0);
            if (c.certMaxMatching > kFoolingClauseGuard)
                throw ConfigError(key, "at most " + std::to_string(kFoolingClauseGuard));
        } else {
            throw ConfigError(key, "unknown field");
        }
    }
    return c;
}

SweepConfig loadSweepConfig(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parseSweepConfig(ss.str());
}

std::size_t clauseCount(const Fraction& delta, std::size_t n) { return delta.roundTimes(n); }

std::size_t prefixLength(std::size_t n) {
    std::size_t k = 0;
    while (k * k * k < n)
        ++k;
    return k;
}

const std::vector<std::string>& csvColumns() {
    static const std::vector<std::string> cols{
        "distribution",    "n",           "delta",        "trialIndex",         "seed",
        "satisfiable",     "simple",      "nonUniqueClauses", "maxDegree",      "oneCyclePerComponent",
        "twUpper",         "mmwLinearBest", "cutPosition", "matchingSize",      "prefixMatchingSize",
        "prefixIsMatching", "thetaPrefix", "obddSize",    "certFloor",          "runtimeMs"};
    return cols;
}

std::string csvHeader() {
    std::string out;
    for (const auto& c : csvColumns())
        out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string csvRow(const TrialRecord& r) {
    std::ostringstream os;
    os << r.distribution << ',' << r.n << ',' << r.delta.toDecimal() << ',' << r.trialIndex << ',' << r.seed << ','
       << int(r.satisfiable) << ',' << int(r.simple) << ',' << r.nonUniqueClauses << ',' << r.maxDegree << ','
       << int(r.oneCyclePerComponent) << ',' << orNA(r.twUpper) << ',' << orNA(r.mmwLinearBest) << ','
       << orNA(r.cutPosition) << ',' << orNA(r.matchingSize) << ',' << orNA(r.prefixMatchingSize) << ','
       << int(r.prefixIsMatching) << ',' << (r.thetaPrefix ? r.thetaPrefix->toDecimal() : "NA") << ','
       << (r.obddBlowup ? std::string("BLOWUP") : orNA(r.obddSize)) << ',' << orNA(r.certFloor) << ','
       << r.runtimeMs;
    return os.str();
}

TrialRecord runTrial(const SweepConfig& config, std::size_t n, const Fraction& delta, std::size_t trialIndex) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t m = clauseCount(delta, n);
    const Seed seed = trialSeed(config.masterSeed, trialIndex, n, m);
    const Cnf f = sample(config.distribution, n, m, seed);

    TrialRecord r;
    r.distribution = toString(config.distribution);
    r.n = n;
    r.delta = delta;
    r.trialIndex = trialIndex;
    r.seed = seed.streamId;
    r.satisfiable = solve2Sat(f).satisfiable;
    r.simple = isSimple(f);
    r.nonUniqueClauses = countNonUnique(f);
    const Graph g = primalGraph(f, true);
    r.maxDegree = maxDegree(g);
    r.oneCyclePerComponent = everyComponentAtMostOneCycle(g);

    const std::size_t k = std::min(prefixLength(n), m);
    const auto [prefix, suffix] = splitAt(f, k);
    r.prefixIsMatching = isMatchingFormula(prefix);

    if (config.wants("twUpper"))
        r.twUpper = twUpper(g, seed.streamId);
    if (config.wants("thetaPrefix")) {
        try {
            r.thetaPrefix = theta(prefix, suffix);
        } catch (const EnumerationTooLarge&) {
        }
    }

    const bool wantsCut = config.wants("mmwLinearBest") || config.wants("cutPosition") ||
                          config.wants("matchingSize") || config.wants("prefixMatchingSize");
    const bool wantsSize = config.wants("obddSize");
    const bool wantsCert = config.wants("certFloor");
    if (wantsCut || wantsSize || wantsCert) {
        VarOrder order;
        if (config.order == "sifting") {
            order = heuristicOrder(f, "minfill", seed.streamId);
            try {
                const Obdd b = compile(f, order, config.nodeCapacity);
                SiftOptions opts;
                opts.nodeCapacity = config.nodeCapacity;
                const Obdd s = sift(b, opts);
                order = s.order();
                r.obddSize = s.size();
            } catch (const CapacityExceeded&) {
                r.obddBlowup = true;
            }
        } else {
            order = heuristicOrder(f, config.order, seed.streamId, config.nodeCapacity);
            if (wantsSize) {
                try {
                    r.obddSize = compile(f, order, config.nodeCapacity).size();
                } catch (const CapacityExceeded&) {
                    r.obddBlowup = true;
                }
            }
        }
        if (!wantsSize) {
            r.obddSize.reset();
            r.obddBlowup = false;
        }
        if (g.vertexCount() >= 3) {
            if (wantsCut) {
                const BalancedCut cut = bestBalancedCut(g, order);
                r.cutPosition = cut.k;
                r.matchingSize = cut.matching.size();
                std::size_t best = cut.matching.size();
                for (const char* other : {"minfill", "bfs"})
                    best = std::min(best, mmwLinear(g, heuristicOrder(f, other, seed.streamId)));
                r.mmwLinearBest = best;
                std::size_t inPrefix = 0;
                for (auto i : matchingClauseIndices(f, cut.matching))
                    if (i < k)
                        ++inPrefix;
                r.prefixMatchingSize = inPrefix;
            }
            if (wantsCert) {
                CertifyOptions opts;
                opts.maxMatching = config.certMaxMatching;
                opts.truncate = true;
                r.certFloor = certifiedLowerBound(f, order, opts).floor;
            }
        }
    }
    if (!config.wants("cutPosition"))
        r.cutPosition.reset();
    if (!config.wants("matchingSize"))
        r.matchingSize.reset();
    if (!config.wants("mmwLinearBest"))
        r.mmwLinearBest.reset();
    if (!config.wants("prefixMatchingSize"))
        r.prefixMatchingSize.reset();

    if (config.recordRuntime)
        r.runtimeMs = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

std::size_t workerCount() {
    if (const char* env = std::getenv("OBDD_PHASE_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialRecord> runTrials(const SweepConfig& config, std::size_t threads) {
    if (config.trials == 0)
        throw ConfigError("trials", "expected an integer >= 1");
    struct Job {
        std::size_t n;
        Fraction delta;
        std::size_t trial;
    };
    std::vector<std::size_t> ns = config.nValues;
    std::vector<Fraction> deltas = config.deltaValues;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    std::vector<Job> jobs;
    for (auto n : ns)
        for (const auto& d : deltas)
            for (std::size_t t = 0; t < config.trials; ++t)
                jobs.push_back({n, d, t});

    std::vector<TrialRecord> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                out[i] = runTrial(config, jobs[i].n, jobs[i].delta, jobs[i].trial);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t count = std::min(threads ? threads : workerCount(), std::max<std::size_t>(jobs.size(), 1));
    if (count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < count; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

std::string toCsv(const std::vector<TrialRecord>& records) {
    std::string out = csvHeader() + "\n";
    for (const auto& r : records)
        out += csvRow(r) + "\n";
    return out;
}

std::optional<std::size_t> medianWithBlowups(const std::vector<std::optional<std::size_t>>& values) {
    if (values.empty())
        return std::nullopt;
    std::vector<std::optional<std::size_t>> v = values;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (!a)
            return false;
        if (!b)
            return true;
        return *a < *b;
    });
    // at least half blown up: no finite median
    const auto blowups = static_cast<std::size_t>(std::count(v.begin(), v.end(), std::nullopt));
    if (2 * blowups >= v.size())
        return std::nullopt;
    return v[(v.size() - 1) / 2];
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
    std::map<std::pair<std::size_t, Fraction>, std::vector<const TrialRecord*>> groups;
    for (const auto& r : records)
        groups[{r.n, r.delta}].push_back(&r);
    std::vector<SummaryRow> rows;
    for (const auto& [key, group] : groups) {
        SummaryRow s;
        s.n = key.first;
        s.delta = key.second;
        s.trials = group.size();
        std::size_t sat = 0, simple = 0, cyc = 0, pm = 0, thetaHits = 0, thetaEval = 0;
        std::vector<std::optional<std::size_t>> tw, size;
        std::vector<BigInt> floors;
        bool anyTw = false, anySize = false;
        for (const auto* r : group) {
            sat += r->satisfiable;
            simple += r->simple;
            cyc += r->oneCyclePerComponent;
            pm += r->prefixIsMatching;
            if (r->twUpper) {
                anyTw = true;
                tw.push_back(r->twUpper);
            }
            if (r->obddSize || r->obddBlowup) {
                anySize = true;
                size.push_back(r->obddBlowup ? std::nullopt : r->obddSize);
            }
            if (r->thetaPrefix) {
                ++thetaEval;
                thetaHits += *r->thetaPrefix >= Fraction(2, 3);
            } else {
                ++s.thetaSkipped;
            }
            if (r->certFloor)
                floors.push_back(*r->certFloor);
        }
        const double t = static_cast<double>(s.trials);
        s.satFraction = sat / t;
        s.simpleFraction = simple / t;
        s.oneCycleFraction = cyc / t;
        s.prefixMatchingFraction = pm / t;
        s.medianTwUpper = anyTw ? std::to_string(*medianWithBlowups(tw)) : "NA";
        if (anySize) {
            const auto med = medianWithBlowups(size);
            s.medianObddSize = med ? std::to_string(*med) : "BLOWUP";
        } else {
            s.medianObddSize = "NA";
        }
        s.thetaFraction = thetaEval ? fmt(static_cast<double>(thetaHits) / static_cast<double>(thetaEval)) : "NA";
        if (floors.empty()) {
            s.medianCertFloor = "NA";
        } else {
            std::sort(floors.begin(), floors.end());
            s.medianCertFloor = floors[(floors.size() - 1) / 2].str();
        }
        rows.push_back(std::move(s));
    }
    return rows;
}

std::string summaryCsv(const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    os << "n,delta,trials,satFraction,simpleFraction,oneCycleFraction,prefixMatchingFraction,"
          "medianTwUpper,medianObddSize,thetaFraction,thetaSkipped,medianCertFloor\n";
    for (const auto& s : rows)
        os << s.n << ',' << s.delta.toDecimal() << ',' << s.trials << ',' << fmt(s.satFraction) << ','
           << fmt(s.simpleFraction) << ',' << fmt(s.oneCycleFraction) << ',' << fmt(s.prefixMatchingFraction) << ','
           << s.medianTwUpper << ',' << s.medianObddSize << ',' << s.thetaFraction << ',' << s.thetaSkipped << ','
           << s.medianCertFloor << '\n';
    return os.str();
}

std::string summaryPathFor(const std::string& outputPath) {
    const std::string ext = ".csv";
    if (outputPath.size() > ext.size() && outputPath.compare(outputPath.size() - ext.size(), ext.size(), ext) == 0)
        return outputPath.substr(0, outputPath.size() - ext.size()) + ".summary.csv";
    return outputPath + ".summary.csv";
}

std::vector<TrialRecord> runSweep(const SweepConfig& config, std::size_t threads) {
    if (config.outputPath.empty())
        throw ConfigError("outputPath", "missing");
    auto records = runTrials(config, threads);
    writeFile(config.outputPath, toCsv(records));
    writeFile(summaryPathFor(config.outputPath), summaryCsv(summarize(records)));
    return records;
}

EstimateCount estimateExtensionProbability(std::size_t n, const Fraction& delta, std::size_t k, std::size_t trials,
                                           std::uint64_t seed) {
    if (2 * k > n)
        throw NotEnoughVariables("2k = " + std::to_string(2 * k) + " exceeds n = " + std::to_string(n));
    const std::size_t m = clauseCount(delta, n);
    EstimateCount c;
    for (std::size_t t = 0; t < trials; ++t) {
        const Seed s = trialSeed(seed, t, n, m);
        const Cnf g = sampleF2(n, m, s);
        const Assignment alpha = sampleAssignment(n, 2 * k, childSeed(s, 1));
        ++c.evaluated;
        c.hits += extendsToSat(g, alpha);
    }
    return c;
}

EstimateCount estimateThetaPrefix(std::size_t n, const Fraction& delta, std::size_t trials, std::uint64_t seed) {
    const std::size_t m = clauseCount(delta, n);
    const std::size_t k = std::min(prefixLength(n), m);
    EstimateCount c;
    for (std::size_t t = 0; t < trials; ++t) {
        const Cnf f = sampleH2(n, m, trialSeed(seed, t, n, m));
        const auto [prefix, suffix] = splitAt(f, k);
        try {
            c.hits += theta(prefix, suffix) >= Fraction(2, 3);
            ++c.evaluated;
        } catch (const EnumerationTooLarge&) {
            ++c.skipped;
        }
    }
    return c;
}

} // namespace obddlab

#pragma once

#include "obddlab/fraction.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/random_models.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace obddlab {

/// Metric names accepted in SweepConfig::metrics. The structural columns
/// (satisfiable, simple, nonUniqueClauses, maxDegree, oneCyclePerComponent,
/// prefixIsMatching) are cheap and always filled; the others are written as
/// NA unless requested. "all" selects everything.
const std::vector<std::string>& metricNames();

struct SweepConfig {
    Distribution distribution = Distribution::F2;
    std::vector<std::size_t> nValues;
    std::vector<Fraction> deltaValues;
    std::size_t trials = 1;
    std::uint64_t masterSeed = 0;
    std::vector<std::string> metrics;
    std::size_t nodeCapacity = kDefaultNodeCapacity;
    std::string outputPath;
    // Optional keys.
    std::string order = "sifting";
    bool recordRuntime = false; // off keeps the CSV byte-reproducible
    std::size_t certMaxMatching = 12;

    bool wants(const std::string& metric) const;
};

SweepConfig parseSweepConfig(const std::string& json);
SweepConfig loadSweepConfig(const std::string& path);

// round(δ·n), ties up.
std::size_t clauseCount(const Fraction& delta, std::size_t n);
// ceil(n^{1/3}).
std::size_t prefixLength(std::size_t n);

struct TrialRecord {
    std::string distribution;
    std::size_t n = 0;
    Fraction delta;
    std::size_t trialIndex = 0;
    std::uint64_t seed = 0;
    bool satisfiable = false;
    bool simple = false;
    std::size_t nonUniqueClauses = 0;
    std::size_t maxDegree = 0;
    bool oneCyclePerComponent = false;
    std::optional<std::size_t> twUpper;
    std::optional<std::size_t> mmwLinearBest;
    std::optional<std::size_t> cutPosition;
    std::optional<std::size_t> matchingSize;
    std::optional<std::size_t> prefixMatchingSize;
    bool prefixIsMatching = false;
    std::optional<Fraction> thetaPrefix;
    std::optional<std::size_t> obddSize; // requested but absent = BLOWUP
    bool obddBlowup = false;
    std::optional<BigInt> certFloor;
    std::uint64_t runtimeMs = 0;
};

const std::vector<std::string>& csvColumns();
std::string csvHeader();
std::string csvRow(const TrialRecord& r);

TrialRecord runTrial(const SweepConfig& config, std::size_t n, const Fraction& delta, std::size_t trialIndex);

// Worker count: OBDD_PHASE_LAB_THREADS if set and positive, else the
// hardware concurrency.
std::size_t workerCount();

/// All trials in (n, δ, trialIndex) order, whatever the thread count.
std::vector<TrialRecord> runTrials(const SweepConfig& config, std::size_t threads = 0);

std::string toCsv(const std::vector<TrialRecord>& records);

struct SummaryRow {
    std::size_t n = 0;
    Fraction delta;
    std::size_t trials = 0;
    double satFraction = 0;
    double simpleFraction = 0;
    double oneCycleFraction = 0;
    double prefixMatchingFraction = 0;
    std::string medianTwUpper;    // "NA" when not measured
    std::string medianObddSize;   // "BLOWUP" when at least half blew up
    std::string thetaFraction;    // over trials with an enumerable prefix
    std::size_t thetaSkipped = 0;
    std::string medianCertFloor;
};

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);
std::string summaryCsv(const std::vector<SummaryRow>& rows);

// Lower median with BLOWUP as +infinity; nullopt when at least half blew up.
std::optional<std::size_t> medianWithBlowups(const std::vector<std::optional<std::size_t>>& values);

// <out>.csv -> <out>.summary.csv
std::string summaryPathFor(const std::string& outputPath);

/// Runs the sweep, writes the trial CSV to config.outputPath and the summary
/// next to it. Returns the records.
std::vector<TrialRecord> runSweep(const SweepConfig& config, std::size_t threads = 0);

struct EstimateCount {
    std::size_t hits = 0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    double fraction() const { return evaluated == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(evaluated); }
};

/// G ~ F2(n, round(δn)) and α ~ F1(n, 2k) drawn independently; hits are
/// trials where G ∧ α is satisfiable.
EstimateCount estimateExtensionProbability(std::size_t n, const Fraction& delta, std::size_t k, std::size_t trials,
                                           std::uint64_t seed);

/// F ~ H2(n, round(δn)), k = ceil(n^{1/3}); hits are trials with
/// theta(F^{<=k}, F^{>k}) >= 2/3. Trials whose prefix is too large to
/// enumerate are skipped and counted.
EstimateCount estimateThetaPrefix(std::size_t n, const Fraction& delta, std::size_t trials, std::uint64_t seed);

} // namespace obddlab

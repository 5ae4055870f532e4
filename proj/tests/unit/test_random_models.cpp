#include <doctest.h>

#include "obddlab/dimacs.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/random_models.hpp"
#include "oracles.hpp"

#include <cmath>
#include <map>

using namespace obddlab;

namespace {

constexpr std::size_t kDraws = 1000000;
constexpr double kSigmas = 3.0;

// Every cell count within kSigmas binomial standard deviations of draws·p.
template <class Key>
void checkUniform(const std::map<Key, std::size_t>& counts, std::size_t cells, std::size_t draws) {
    REQUIRE(counts.size() == cells);
    const double p = 1.0 / static_cast<double>(cells);
    const double mean = p * static_cast<double>(draws);
    const double sd = std::sqrt(static_cast<double>(draws) * p * (1 - p));
    for (const auto& [key, count] : counts)
        CHECK(std::abs(static_cast<double>(count) - mean) <= kSigmas * sd);
}

// Pearson statistic against the uniform law, compared with dof + 3·sqrt(2·dof).
void checkChiSquare(const std::map<std::vector<std::uint64_t>, std::size_t>& counts, std::size_t cells,
                    std::size_t draws) {
    CHECK(counts.size() == cells);
    const double mean = static_cast<double>(draws) / static_cast<double>(cells);
    double chi = static_cast<double>(cells - counts.size()) * mean;
    for (const auto& [key, count] : counts)
        chi += (static_cast<double>(count) - mean) * (static_cast<double>(count) - mean) / mean;
    const double dof = static_cast<double>(cells - 1);
    CHECK(chi <= dof + 3.0 * std::sqrt(2.0 * dof));
}

std::vector<std::uint64_t> sortedRanks(const Cnf& f) {
    std::vector<std::uint64_t> r;
    for (const auto& c : f.clauses())
        r.push_back(clauseRank(f.n(), c));
    std::sort(r.begin(), r.end());
    return r;
}

const std::string GOLDEN_H2 = "p cnf 6 4\n-2 6 0\n1 -6 0\n-3 4 0\n-5 6 0\n";
const std::string GOLDEN_F2 = "p cnf 6 4\n-5 6 0\n-3 4 0\n1 6 0\n2 6 0\n";
const std::string GOLDEN_MF = "p cnf 8 3\n-3 -6 0\n4 -8 0\n1 2 0\n";

} // namespace

TEST_CASE("clause rank bijection") {
    for (std::size_t n = 2; n <= 9; ++n) {
        std::set<Clause> seen;
        for (std::uint64_t r = 0; r < clauseSpaceSize(n); ++r) {
            const Clause c = clauseFromRank(n, r);
            CHECK(c.second().var <= n);
            CHECK(clauseRank(n, c) == r);
            seen.insert(c);
        }
        CHECK(seen.size() == 4 * n * (n - 1) / 2);
    }
    // colex pairs, then the polarity code
    CHECK(clauseFromRank(5, 0) == Clause({1, true}, {2, true}));
    CHECK(clauseFromRank(5, 3) == Clause({1, false}, {2, false}));
    CHECK(clauseFromRank(5, 2) == Clause({1, false}, {2, true}));
    CHECK(clauseFromRank(5, 4) == Clause({1, true}, {3, true}));
    CHECK(clauseFromRank(5, 12) == Clause({1, true}, {4, true}));
    CHECK_THROWS_AS(clauseFromRank(3, 12), IndexOutOfRange);
}

TEST_CASE("seeds") {
    CHECK(trialSeed(1, 2, 3, 4) == trialSeed(1, 2, 3, 4));
    CHECK_FALSE(trialSeed(1, 2, 3, 4) == trialSeed(1, 3, 3, 4));
    CHECK_FALSE(trialSeed(1, 2, 3, 4) == trialSeed(2, 2, 3, 4));
    CHECK_FALSE(childSeed(Seed{1, 2}, 1) == Seed{1, 2});
    CHECK(sampleH2(20, 30, Seed{9, 9}) == sampleH2(20, 30, Seed{9, 9}));
    CHECK(sampleF2(20, 30, Seed{9, 9}) == sampleF2(20, 30, Seed{9, 9}));
    CHECK_FALSE(sampleF2(20, 30, Seed{9, 9}) == sampleF2(20, 30, Seed{9, 10}));
}

TEST_CASE("golden samples") {
    // Pinned outputs: a change here breaks reproducibility of old sweeps.
    CHECK(writeDimacs(sampleH2(6, 4, Seed{7, 0})) == GOLDEN_H2);
    CHECK(writeDimacs(sampleF2(6, 4, Seed{7, 0})) == GOLDEN_F2);
    CHECK(writeDimacs(sampleMatchingFormula(8, 3, Seed{7, 0})) == GOLDEN_MF);
}

TEST_CASE("sampleF2") {
    const Cnf full = sampleF2(4, 24, Seed{1, 0});
    CHECK(full.size() == 24);
    CHECK(isSimple(full));
    CHECK(std::set<Clause>(full.clauses().begin(), full.clauses().end()).size() == 24);
    CHECK(sampleF2(10, 0, Seed{1, 0}).empty());
    CHECK_THROWS_AS(sampleF2(4, 25, Seed{1, 0}), TooManyClauses);
    CHECK_FALSE(sampleF2(10, 5, Seed{1, 0}).allowDuplicates());

    std::map<std::vector<std::uint64_t>, std::size_t> counts;
    for (std::size_t i = 0; i < kDraws; ++i)
        ++counts[sortedRanks(sampleF2(3, 2, Seed{101, i}))];
    checkUniform(counts, 66, kDraws);
}

TEST_CASE("sampleH2") {
    CHECK(sampleH2(5, 0, Seed{1, 0}).empty());
    CHECK(sampleH2(5, 3, Seed{1, 0}).allowDuplicates());
    CHECK_THROWS_AS(sampleH2(1, 3, Seed{1, 0}), NotEnoughVariables);

    std::size_t same = 0;
    std::map<std::vector<std::uint64_t>, std::size_t> ordered;
    for (std::size_t i = 0; i < kDraws; ++i) {
        const Cnf f = sampleH2(3, 2, Seed{102, i});
        same += f[0] == f[1];
        ++ordered[{clauseRank(3, f[0]), clauseRank(3, f[1])}];
    }
    const double p = 1.0 / 12.0;
    const double sd = std::sqrt(kDraws * p * (1 - p));
    CHECK(std::abs(static_cast<double>(same) - kDraws * p) <= kSigmas * sd);
    checkChiSquare(ordered, 144, kDraws);
}

TEST_CASE("sampleMonotone") {
    const Cnf all = sampleMonotone(4, 6, Seed{1, 0});
    CHECK(all.size() == 6);
    CHECK(all.isMonotone());
    CHECK_THROWS_AS(sampleMonotone(4, 7, Seed{1, 0}), TooManyClauses);
    for (std::size_t i = 0; i < 200; ++i)
        CHECK(sampleMonotone(12, 20, Seed{103, i}).isMonotone());

    std::map<std::vector<std::uint64_t>, std::size_t> counts;
    for (std::size_t i = 0; i < kDraws; ++i)
        ++counts[sortedRanks(sampleMonotone(3, 1, Seed{104, i}))];
    checkUniform(counts, 3, kDraws);
}

TEST_CASE("sampleAssignment") {
    CHECK(sampleAssignment(5, 0, Seed{1, 0}).size() == 0);
    CHECK_THROWS_AS(sampleAssignment(3, 4, Seed{1, 0}), NotEnoughVariables);
    for (std::size_t i = 0; i < 200; ++i)
        CHECK(sampleAssignment(30, 12, Seed{105, i}).size() == 12); // distinct variables

    std::map<std::vector<Literal>, std::size_t> counts;
    for (std::size_t i = 0; i < kDraws; ++i)
        ++counts[sampleAssignment(4, 2, Seed{106, i}).literals()];
    checkUniform(counts, 24, kDraws);
}

TEST_CASE("sampleMatchingFormula") {
    CHECK(sampleMatchingFormula(5, 0, Seed{1, 0}).empty());
    CHECK_THROWS_AS(sampleMatchingFormula(5, 3, Seed{1, 0}), NotEnoughVariables);
    for (std::size_t i = 0; i < 100; ++i) {
        const Cnf f = sampleMatchingFormula(9, 4, Seed{107, i});
        CHECK(isMatchingFormula(f));
        CHECK(oracle::countModels(f) == 81 * 2); // one free ambient variable
    }

    // MF_{4,2}: 3 pairings of {1,2,3,4} times 4·4 polarity choices.
    std::set<std::vector<std::uint64_t>> space;
    for (std::uint64_t a = 0; a < clauseSpaceSize(4); ++a)
        for (std::uint64_t b = a + 1; b < clauseSpaceSize(4); ++b) {
            const Cnf f(4, {clauseFromRank(4, a), clauseFromRank(4, b)});
            if (isMatchingFormula(f))
                space.insert({a, b});
        }
    REQUIRE(space.size() == 48);
    std::map<std::vector<std::uint64_t>, std::size_t> counts;
    for (std::size_t i = 0; i < kDraws; ++i) {
        auto key = sortedRanks(sampleMatchingFormula(4, 2, Seed{108, i}));
        REQUIRE(space.count(key) == 1);
        ++counts[key];
    }
    checkUniform(counts, 48, kDraws);
}

TEST_CASE("splitAt") {
    const Cnf f = sampleH2(8, 6, Seed{1, 0});
    auto [p0, s0] = splitAt(f, 0);
    CHECK(p0.empty());
    CHECK(s0 == f);
    auto [p6, s6] = splitAt(f, 6);
    CHECK(p6 == f);
    CHECK(s6.empty());
    auto [p2, s2] = splitAt(f, 2);
    CHECK(p2.size() == 2);
    CHECK(s2.size() == 4);
    CHECK(p2[1] == f[1]);
    CHECK(s2[0] == f[2]);
    CHECK_THROWS_AS(splitAt(f, 7), IndexOutOfRange);
}

TEST_CASE("splitAt components are independent H2 samples") {
    // n=3, m=3, k=1: the joint law of (prefix, suffix) must be the product of
    // H2(3,1) and H2(3,2), i.e. uniform over 12 · 144 cells.
    std::map<std::vector<std::uint64_t>, std::size_t> joint, prefix, suffix;
    for (std::size_t i = 0; i < kDraws; ++i) {
        auto [a, b] = splitAt(sampleH2(3, 3, Seed{109, i}), 1);
        const std::uint64_t ra = clauseRank(3, a[0]), rb0 = clauseRank(3, b[0]), rb1 = clauseRank(3, b[1]);
        ++joint[{ra, rb0, rb1}];
        ++prefix[{ra}];
        ++suffix[{rb0, rb1}];
    }
    checkChiSquare(prefix, 12, kDraws);
    checkChiSquare(suffix, 144, kDraws);
    checkChiSquare(joint, 1728, kDraws);
}

TEST_CASE("H2 conditioned on simple equals F2 (exact enumeration, n=3, m=2)") {
    const std::uint64_t N = clauseSpaceSize(3);
    // H2: every ordered rank pair has probability 1/N².
    std::map<std::vector<std::uint64_t>, Fraction> h2;
    std::uint64_t simple = 0;
    std::map<std::vector<std::uint64_t>, std::uint64_t> hits;
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = 0; b < N; ++b) {
            const Cnf f(3, {clauseFromRank(3, a), clauseFromRank(3, b)});
            if (!isSimple(f))
                continue;
            ++simple;
            ++hits[sortedRanks(f)];
        }
    // F2: uniform over 2-subsets of the clause space.
    std::uint64_t subsets = 0;
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = a + 1; b < N; ++b)
            ++subsets;
    CHECK(hits.size() == subsets);
    for (const auto& [key, count] : hits)
        CHECK(Fraction(count, simple) == Fraction(1, subsets));
}

TEST_CASE("expected non-unique clauses under H2") {
    const std::size_t n = 1000, m = 1000, trials = 10000;
    double sum = 0, sumSq = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const double c = static_cast<double>(countNonUnique(sampleH2(n, m, Seed{110, t})));
        sum += c;
        sumSq += c * c;
    }
    const double mean = sum / trials;
    const double se = std::sqrt((sumSq / trials - mean * mean) / trials);
    const double bound = m * (1 - std::pow(1 - 1.0 / (double(n) * n), double(m)));
    MESSAGE("mean " << mean << " bound " << bound << " se " << se);
    CHECK(mean <= bound + 3 * se);
}

#pragma once

#include "obddlab/cnf.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>

namespace obddlab {

/// (master, stream) pair; equal seeds give equal samples on every platform
/// and thread count.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t streamId = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Sub-seed of one sweep trial. The stream id is a splitmix chain over
// (trialIndex, n, m), so it does not depend on scheduling.
Seed trialSeed(std::uint64_t master, std::uint64_t trialIndex, std::uint64_t n, std::uint64_t m);

// Distinct child stream, e.g. for the assignment drawn next to a formula.
Seed childSeed(const Seed& parent, std::uint64_t salt);

/// mt19937_64 with an unbiased bounded draw. std::uniform_int_distribution is
/// implementation-defined, so it is not used for anything seed-stable.
class Rng {
public:
    explicit Rng(const Seed& seed);

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    bool bit() { return (engine_() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// |Cl_{2,n}| = 4·C(n,2).
std::uint64_t clauseSpaceSize(std::size_t n);

/// Fixed bijection between 0..4·C(n,2)-1 and 2-clauses over x1..xn:
/// rank = 4·pairIndex + code, pairIndex = C(j-1,2) + (i-1) for variables
/// i < j (colex), code = 2·[xi negated] + [xj negated].
Clause clauseFromRank(std::size_t n, std::uint64_t rank);
std::uint64_t clauseRank(std::size_t n, const Clause& c);

enum class Distribution { F2, H2, Monotone };

Distribution parseDistribution(const std::string& name);
std::string toString(Distribution d);

// m distinct clauses, uniform, in random order. Duplicates forbidden.
Cnf sampleF2(std::size_t n, std::size_t m, const Seed& seed);
// m independent uniform clauses in draw order. Duplicates allowed.
Cnf sampleH2(std::size_t n, std::size_t m, const Seed& seed);
// m distinct positive-positive clauses.
Cnf sampleMonotone(std::size_t n, std::size_t m, const Seed& seed);
Cnf sample(Distribution d, std::size_t n, std::size_t m, const Seed& seed);

// s distinct variables, each bound to an independent fair bit.
Assignment sampleAssignment(std::size_t n, std::size_t s, const Seed& seed);

// Uniform element of MF_{n,k}.
Cnf sampleMatchingFormula(std::size_t n, std::size_t k, const Seed& seed);

// (F^{<=k}, F^{>k}).
std::pair<Cnf, Cnf> splitAt(const Cnf& f, std::size_t k);

} // namespace obddlab

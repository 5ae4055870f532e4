#include "obddlab/random_models.hpp"

#include "obddlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

namespace obddlab {
namespace {

// Floyd's algorithm: `count` distinct values of [0, universe) in insertion order.
std::vector<std::uint64_t> floydSample(std::uint64_t universe, std::uint64_t count, Rng& rng) {
    std::vector<std::uint64_t> picked;
    picked.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    for (std::uint64_t j = universe - count; j < universe; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        const std::uint64_t value = seen.count(t) ? j : t;
        seen.insert(value);
        picked.push_back(value);
    }
    return picked;
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Variables i < j (1-based) of colex pair index p.
std::pair<Var, Var> pairFromIndex(std::uint64_t p) {
    auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
    while (choose2(j) > p)
        --j;
    while (choose2(j + 1) <= p)
        ++j;
    // j here is the 0-based larger index.
    return {static_cast<Var>(p - choose2(j) + 1), static_cast<Var>(j + 1)};
}

} // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Seed trialSeed(std::uint64_t master, std::uint64_t trialIndex, std::uint64_t n, std::uint64_t m) {
    std::uint64_t stream = splitmix64(trialIndex);
    stream = splitmix64(stream ^ n);
    stream = splitmix64(stream ^ m);
    return {master, stream};
}

Seed childSeed(const Seed& parent, std::uint64_t salt) {
    return {parent.master, splitmix64(parent.streamId ^ splitmix64(salt + 0x632be59bd9b4e019ULL))};
}

Rng::Rng(const Seed& seed) : engine_(splitmix64(seed.master ^ splitmix64(seed.streamId))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Lemire's multiply-and-reject.
    using u128 = unsigned __int128;
    std::uint64_t x = engine_();
    u128 product = static_cast<u128>(x) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = engine_();
            product = static_cast<u128>(x) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t clauseSpaceSize(std::size_t n) { return 4 * choose2(n); }

Clause clauseFromRank(std::size_t n, std::uint64_t rank) {
    if (rank >= clauseSpaceSize(n))
        throw IndexOutOfRange("clause rank " + std::to_string(rank) + " outside the clause space");
    const auto [i, j] = pairFromIndex(rank / 4);
    const std::uint64_t code = rank % 4;
    return Clause({i, (code & 2) == 0}, {j, (code & 1) == 0});
}

std::uint64_t clauseRank(std::size_t n, const Clause& c) {
    const Var i = c.first().var, j = c.second().var;
    if (j > n)
        throw IndexOutOfRange("clause variable beyond n");
    const std::uint64_t code = (c.first().positive ? 0 : 2) + (c.second().positive ? 0 : 1);
    return 4 * (choose2(j - 1) + (i - 1)) + code;
}

Distribution parseDistribution(const std::string& name) {
    std::string lower;
    for (char ch : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "f2")
        return Distribution::F2;
    if (lower == "h2")
        return Distribution::H2;
    if (lower == "monotone")
        return Distribution::Monotone;
    throw Error("unknown distribution '" + name + "' (expected F2, H2 or monotone)");
}

std::string toString(Distribution d) {
    switch (d) {
    case Distribution::F2: return "F2";
    case Distribution::H2: return "H2";
    case Distribution::Monotone: return "monotone";
    }
    return "?";
}

Cnf sampleF2(std::size_t n, std::size_t m, const Seed& seed) {
    const std::uint64_t space = clauseSpaceSize(n);
    if (m > space)
        throw TooManyClauses(std::to_string(m) + " distinct clauses requested, only " +
                             std::to_string(space) + " exist");
    Rng rng(seed);
    auto ranks = floydSample(space, m, rng);
    rng.shuffle(ranks);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (auto r : ranks)
        clauses.push_back(clauseFromRank(n, r));
    return Cnf(n, std::move(clauses), Duplicates::Forbidden);
}

Cnf sampleH2(std::size_t n, std::size_t m, const Seed& seed) {
    if (m == 0)
        return Cnf(n, Duplicates::Allowed);
    if (n < 2)
        throw NotEnoughVariables("H2 needs at least two variables");
    Rng rng(seed);
    const std::uint64_t space = clauseSpaceSize(n);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        clauses.push_back(clauseFromRank(n, rng.below(space)));
    return Cnf(n, std::move(clauses), Duplicates::Allowed);
}

Cnf sampleMonotone(std::size_t n, std::size_t m, const Seed& seed) {
    const std::uint64_t space = choose2(n);
    if (m > space)
        throw TooManyClauses(std::to_string(m) + " monotone clauses requested, only " +
                             std::to_string(space) + " exist");
    Rng rng(seed);
    auto pairs = floydSample(space, m, rng);
    rng.shuffle(pairs);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (auto p : pairs) {
        const auto [i, j] = pairFromIndex(p);
        clauses.emplace_back(Literal{i, true}, Literal{j, true});
    }
    return Cnf(n, std::move(clauses), Duplicates::Forbidden);
}

Cnf sample(Distribution d, std::size_t n, std::size_t m, const Seed& seed) {
    switch (d) {
    case Distribution::F2: return sampleF2(n, m, seed);
    case Distribution::H2: return sampleH2(n, m, seed);
    case Distribution::Monotone: return sampleMonotone(n, m, seed);
    }
    throw Error("unknown distribution");
}

Assignment sampleAssignment(std::size_t n, std::size_t s, const Seed& seed) {
    if (s > n)
        throw NotEnoughVariables("assignment of size " + std::to_string(s) + " over " +
                                 std::to_string(n) + " variables");
    Rng rng(seed);
    Assignment alpha(n);
    for (auto v : floydSample(n, s, rng))
        alpha.set(static_cast<Var>(v + 1), rng.bit());
    return alpha;
}

Cnf sampleMatchingFormula(std::size_t n, std::size_t k, const Seed& seed) {
    if (2 * k > n)
        throw NotEnoughVariables("a matching formula with " + std::to_string(k) + " clauses needs " +
                                 std::to_string(2 * k) + " variables");
    Rng rng(seed);
    auto vars = floydSample(n, 2 * k, rng);
    rng.shuffle(vars);
    std::vector<Clause> clauses;
    clauses.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const bool p = rng.bit(), q = rng.bit();
        clauses.emplace_back(Literal{static_cast<Var>(vars[2 * i] + 1), p},
                             Literal{static_cast<Var>(vars[2 * i + 1] + 1), q});
    }
    return Cnf(n, std::move(clauses), Duplicates::Forbidden);
}

std::pair<Cnf, Cnf> splitAt(const Cnf& f, std::size_t k) {
    if (k > f.size())
        throw IndexOutOfRange("split position " + std::to_string(k) + " beyond " +
                              std::to_string(f.size()) + " clauses");
    const auto all = f.clauses();
    return {Cnf(f.n(), {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)}, f.mode()),
            Cnf(f.n(), {all.begin() + static_cast<std::ptrdiff_t>(k), all.end()}, f.mode())};
}

} // namespace obddlab

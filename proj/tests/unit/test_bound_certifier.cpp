#include <doctest.h>

#include "obddlab/certify.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/ordering.hpp"
#include "obddlab/random_models.hpp"
#include "obddlab/width.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numeric>

using namespace obddlab;

namespace {

Cnf cnf(std::size_t n, std::initializer_list<std::pair<int, int>> cs) {
    std::vector<Clause> v;
    for (auto [a, b] : cs)
        v.emplace_back(Literal::fromDimacs(a), Literal::fromDimacs(b));
    return Cnf(n, v);
}

const Cnf kExample = cnf(6, {{1, 4}, {2, 5}, {3, 6}});

VarOrder randomOrder(std::mt19937_64& rng, std::size_t n) {
    std::vector<Var> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return VarOrder(perm);
}

// Literal pair (ℓ_i, ℓ_{h+i}) per clause of H.
std::vector<std::pair<Literal, Literal>> orient(const Cnf& h, const std::optional<Bipartition>& pi) {
    std::vector<std::pair<Literal, Literal>> out;
    for (const auto& c : h.clauses()) {
        if (pi && pi->side(c.first().var) == 2)
            out.emplace_back(c.second(), c.first());
        else
            out.emplace_back(c.first(), c.second());
    }
    return out;
}

struct GreedyResult {
    std::vector<Assignment> selected;
    std::size_t candidates = 0;
};

// The greedy fooling-set procedure, written directly over digit vectors.
GreedyResult greedyFoolingSet(const Cnf& h, const Cnf& f, const std::optional<Bipartition>& pi) {
    const auto pairs = orient(h, pi);
    const std::size_t hs = pairs.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < hs; ++i)
        total *= 3;
    auto toAssignment = [&](const std::vector<int>& digits) {
        Assignment a(f.n());
        for (std::size_t i = 0; i < hs; ++i) {
            const bool va = digits[i] >= 2, vb = digits[i] != 2;
            a.set(pairs[i].first.var, pairs[i].first.positive == va);
            a.set(pairs[i].second.var, pairs[i].second.positive == vb);
        }
        return a;
    };
    std::vector<std::vector<int>> pool;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> digits(hs);
        std::size_t c = code, elevens = 0;
        for (std::size_t i = hs; i-- > 0;) {
            digits[i] = 1 + static_cast<int>(c % 3);
            c /= 3;
            elevens += digits[i] == 3;
        }
        if (2 * elevens <= hs && oracle::extends(f, toAssignment(digits)))
            pool.push_back(digits);
    }
    GreedyResult r;
    r.candidates = pool.size();
    std::vector<bool> gone(pool.size(), false);
    for (std::size_t a = 0; a < pool.size(); ++a) {
        if (gone[a])
            continue;
        r.selected.push_back(toAssignment(pool[a]));
        for (std::size_t b = a; b < pool.size(); ++b) {
            bool covered = true;
            for (std::size_t i = 0; i < hs && covered; ++i)
                if (pool[a][i] != 3)
                    covered = pool[b][i] == pool[a][i] || pool[b][i] == 3;
            if (covered)
                gone[b] = true;
        }
    }
    return r;
}

bool pairwiseCrossing(const Cnf& h, const std::vector<Assignment>& as) {
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            bool crossing = false;
            for (const auto& c : h.clauses())
                crossing = crossing || (as[i].get(c.first().var) != as[j].get(c.first().var) &&
                                        as[i].get(c.second().var) != as[j].get(c.second().var));
            if (!crossing)
                return false;
        }
    return true;
}

// Random F containing a matching formula H across a random bipartition.
std::tuple<Cnf, Cnf, Bipartition> randomInstance(std::mt19937_64& rng, std::size_t n, std::size_t h, std::size_t extra) {
    std::vector<Var> vars(n);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Var> p1, p2;
    std::vector<Clause> hc;
    for (std::size_t i = 0; i < h; ++i) {
        p1.push_back(vars[2 * i]);
        p2.push_back(vars[2 * i + 1]);
        hc.emplace_back(Literal{vars[2 * i], (rng() & 1) != 0}, Literal{vars[2 * i + 1], (rng() & 1) != 0});
    }
    std::vector<Clause> fc = hc;
    const Cnf g = oracle::randomCnf(rng, n, extra);
    fc.insert(fc.end(), g.clauses().begin(), g.clauses().end());
    std::shuffle(fc.begin(), fc.end(), rng);
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    return {Cnf(n, hc), Cnf(n, fc), Bipartition(p1, p2)};
}

} // namespace

TEST_CASE("analytic floor and greedy divisor") {
    for (std::size_t h = 0; h <= 40; ++h) {
        const long double value = std::pow(1.5L, static_cast<long double>(h) / 2) / 6;
        CHECK(analyticFloor(h) == BigInt(static_cast<long long>(std::ceil(value - 1e-12L))));
    }
    CHECK(analyticFloor(0) == 1);
    CHECK(greedyDivisor(0) == 1);
    CHECK(greedyDivisor(3) == 18);
    CHECK(greedyDivisor(4) == 36);
}

TEST_CASE("count identity") {
    for (std::size_t h = 0; h <= 12; ++h) {
        BigInt sum = 0, binom = 1, three = 1;
        for (std::size_t i = 0; i < h; ++i)
            three *= 3;
        for (std::size_t j = 0; 2 * j <= h; ++j) {
            sum += binom * (BigInt(1) << (h - j));
            binom = binom * (h - j) / (j + 1);
        }
        CHECK(2 * sum >= three);
    }
}

TEST_CASE("fooling set on the worked example") {
    const Bipartition pi({1, 2, 3}, {4, 5, 6});
    const auto cert = extractFoolingSet(kExample, kExample, pi);
    const auto expected = greedyFoolingSet(kExample, kExample, pi);
    CHECK(cert.candidates == expected.candidates);
    CHECK(cert.candidates == 20);
    CHECK(cert.assignments == expected.selected);
    CHECK(cert.witnessSize == 8);
    CHECK(cert.witnessSize >= 2);
    CHECK(pairwiseCrossing(kExample, cert.assignments));
}

TEST_CASE("fooling set with h = 0") {
    const auto cert = extractFoolingSet(Cnf(4), cnf(4, {{1, 2}}));
    REQUIRE(cert.assignments.size() == 1);
    CHECK(cert.assignments[0].size() == 0);
    CHECK(cert.witnessSize == 1);
}

TEST_CASE("fooling set errors") {
    CHECK_THROWS_AS(extractFoolingSet(cnf(3, {{1, 2}, {2, 3}}), cnf(3, {{1, 2}, {2, 3}})), NotMatchingSubformula);
    CHECK_THROWS_AS(extractFoolingSet(cnf(4, {{1, 2}}), cnf(4, {{3, 4}})), NotMatchingSubformula);
    CHECK_THROWS_AS(extractFoolingSet(cnf(4, {{1, 2}}), cnf(4, {{1, 2}}), Bipartition({1, 2}, {3, 4})),
                    NotMatchingSubformula);
}

TEST_CASE("fooling sets on random instances") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 400; ++t) {
        const std::size_t h = rng() % 7;
        const std::size_t n = 2 * h + rng() % 4 + (h == 0 ? 2 : 0);
        auto [hf, f, pi] = randomInstance(rng, n, h, rng() % (n + 1));
        const auto cert = extractFoolingSet(hf, f, pi);
        const auto expected = greedyFoolingSet(hf, f, pi);
        REQUIRE(cert.candidates == expected.candidates);
        REQUIRE(cert.assignments == expected.selected);
        for (const auto& alpha : cert.assignments) {
            CHECK(oracle::extends(f, alpha));
            for (const auto& c : hf.clauses())
                CHECK((alpha.satisfies(c.first()) || alpha.satisfies(c.second())));
        }
        CHECK(pairwiseCrossing(hf, cert.assignments));
        // |A| >= ceil(|A'| / divisor)
        const BigInt div = greedyDivisor(h);
        CHECK(BigInt(cert.witnessSize) * div >= BigInt(cert.candidates));
    }
}

TEST_CASE("certified lower bound on the worked example") {
    const auto b = certifiedLowerBound(kExample, VarOrder::identity(6));
    REQUIRE(b.certificate);
    CHECK(b.cutPosition == 3);
    CHECK(b.matchingSize == 3);
    CHECK(b.theta == Fraction(1, 1));
    CHECK(b.certificate->witnessSize == 8);
    CHECK(b.floor >= 8);
    const auto v = verifyCertificate(kExample, VarOrder::identity(6), *b.certificate);
    CHECK(v.ok);
    CHECK(v.reason.empty());
    const std::string text = serializeCertificate(*b.certificate);
    CHECK(text.rfind("cutPosition 3\npart1 1 2 3\npart2 4 5 6\nmatchingSubformula 3\n", 0) == 0);
    CHECK(text.find("witnessSize 8") != std::string::npos);
}

TEST_CASE("certified lower bound on an unsatisfiable formula") {
    const Cnf f = cnf(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}, {-1, 2}, {1, -2}, {-1, -2}});
    const auto b = certifiedLowerBound(f, VarOrder::identity(6));
    CHECK(b.theta == Fraction(0, 1));
    CHECK(b.floor == 1);
    CHECK_FALSE(b.certificate);
}

TEST_CASE("certificate mutations") {
    const VarOrder id = VarOrder::identity(6);
    const auto good = *certifiedLowerBound(kExample, id).certificate;

    auto dup = good;
    dup.assignments.push_back(dup.assignments.front());
    dup.witnessSize = dup.assignments.size();
    CHECK(verifyCertificate(kExample, id, dup).reason == "duplicate");

    // x1 flipped to 1 in the first assignment (01 -> 11 on clause 1): still a
    // model extending F, but it no longer crosses the original.
    auto cross = good;
    Assignment beta(6);
    for (auto lit : cross.assignments.front().literals())
        beta.set(lit.var, lit.var == 1 ? !lit.positive : lit.positive);
    REQUIRE(beta.get(1) == true);
    cross.assignments.push_back(beta);
    cross.witnessSize = cross.assignments.size();
    CHECK(verifyCertificate(kExample, id, cross).reason == "crossing");

    auto size = good;
    size.witnessSize = 9;
    CHECK(verifyCertificate(kExample, id, size).reason == "size");

    auto cut = good;
    cut.cutPosition = 2;
    CHECK(verifyCertificate(kExample, id, cut).reason == "cut");

    auto match = good;
    match.matchingSubformula = cnf(6, {{1, 4}, {2, 5}, {3, -6}});
    CHECK(verifyCertificate(kExample, id, match).reason == "matching");

    auto sat = good;
    Assignment bad(6);
    for (Var v = 1; v <= 6; ++v)
        bad.set(v, false);
    sat.assignments.push_back(bad);
    sat.witnessSize = sat.assignments.size();
    CHECK(verifyCertificate(kExample, id, sat).reason == "satisfies");

    const Cnf g = cnf(6, {{1, 4}, {2, 5}, {3, 6}, {-1, -2}});
    // some of the 8 assignments set x1 = x2 = 1
    CHECK(verifyCertificate(g, id, good).reason == "extension");

    CHECK(verifyCertificate(kExample, VarOrder({1, 2, 3, 4, 5, 6}), good).ok);
}

TEST_CASE("certificates are sound against compiled sizes") {
    std::mt19937_64 rng(42);
    std::size_t produced = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 4 + rng() % 7;
        const Fraction delta = std::array{Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)}[t % 3];
        const std::size_t m = delta.roundTimes(n);
        const Cnf f = t % 2 ? sampleF2(n, m, Seed{42, std::uint64_t(t)}) : sampleH2(n, m, Seed{42, std::uint64_t(t)});
        const VarOrder order = randomOrder(rng, n);
        const auto b = certifiedLowerBound(f, order);
        const Obdd compiled = compile(f, order);
        REQUIRE(BigInt(compiled.size()) >= b.floor);
        if (b.certificate) {
            ++produced;
            REQUIRE(verifyCertificate(f, order, *b.certificate).ok);
            CHECK(semanticWidth(compiled, b.cutPosition) >= b.certificate->witnessSize);
        }
    }
    MESSAGE(produced << " certificates");
    CHECK(produced > 100);
}

TEST_CASE("monotone bound") {
    const auto edgeless = monotoneBound(Cnf(4));
    CHECK(edgeless.exponent == Fraction(0, 1));
    CHECK(edgeless.toString() == "2^(0/1)/4");
    CHECK(edgeless.toDouble() == doctest::Approx(0.25));

    const auto chain = monotoneBound(cnf(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(chain.pw == 1);
    CHECK(chain.maxDegree == 2);
    CHECK(chain.exponent == Fraction(1, 32));
    CHECK(chain.toDouble() == doctest::Approx(std::pow(2.0, 1.0 / 32) / 4));
    CHECK(chain.boundedBy(1));
    CHECK_FALSE(chain.boundedBy(0));

    CHECK_THROWS_AS(monotoneBound(cnf(3, {{1, -2}})), NotMonotone);

    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = 3 + i % 8;
        const Cnf f = sampleMonotone(n, i % (n + 1), Seed{43, i});
        const auto mb = monotoneBound(f);
        const auto e = exactMinSize(f);
        CHECK(mb.boundedBy(e.size));
        CHECK(static_cast<double>(e.size) >= mb.toDouble() * (1 - 1e-12));
    }
}

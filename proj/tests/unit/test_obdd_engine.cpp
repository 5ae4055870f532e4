#include <doctest.h>

#include "obddlab/errors.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/ordering.hpp"
#include "obddlab/random_models.hpp"
#include "obddlab/width.hpp"
#include "oracles.hpp"

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

Assignment fromBits(std::size_t n, std::uint64_t x) {
    Assignment a(n);
    for (Var v = 1; v <= n; ++v)
        a.set(v, (x >> (v - 1)) & 1);
    return a;
}

// Ordered, reduced, no duplicate triples.
void checkStructure(const Obdd& b) {
    std::set<std::tuple<std::uint32_t, NodeId, NodeId>> triples;
    for (NodeId id = 2; id < b.nodes().size(); ++id) {
        const auto& nd = b.node(id);
        REQUIRE(nd.lo != nd.hi);
        REQUIRE(nd.lo < id);
        REQUIRE(nd.hi < id);
        REQUIRE(nd.level < b.n());
        if (!b.isSink(nd.lo))
            REQUIRE(b.node(nd.lo).level > nd.level);
        if (!b.isSink(nd.hi))
            REQUIRE(b.node(nd.hi).level > nd.level);
        REQUIRE(triples.emplace(nd.level, nd.lo, nd.hi).second);
    }
}

Cnf withResolvents(const Cnf& f, std::mt19937_64& rng) {
    std::vector<Clause> cs(f.clauses().begin(), f.clauses().end());
    const std::size_t m = cs.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& a : cs[i].literals())
                for (const auto& b : cs[j].literals()) {
                    if (a.var != b.var || a.positive == b.positive)
                        continue;
                    const Literal x = cs[i][cs[i][0] == a ? 1 : 0];
                    const Literal y = cs[j][cs[j][0] == b ? 1 : 0];
                    if (x.var == y.var)
                        continue;
                    if (rng() % 2 == 0)
                        cs.emplace_back(x, y);
                }
    std::shuffle(cs.begin(), cs.end(), rng);
    return Cnf(f.n(), cs);
}

} // namespace

TEST_CASE("compile examples") {
    const auto contradiction = cnf(3, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}});
    const Obdd zero = compile(contradiction, VarOrder::identity(3));
    CHECK(zero.size() == 1);
    CHECK(zero.root() == Obdd::kFalse);
    CHECK(modelCount(zero) == 0);

    const Obdd one = compile(Cnf(4), VarOrder::identity(4));
    CHECK(one.size() == 1);
    CHECK(one.root() == Obdd::kTrue);
    CHECK(modelCount(one) == 16);

    const Obdd b = compile(kExample, VarOrder::identity(6));
    CHECK(modelCount(b) == 27);
    CHECK(semanticWidth(b, 3) == 8);
    CHECK(semanticWidth(b, 0) == 1);
    checkStructure(b);
    const auto report = sizeReport(b);
    CHECK(report.size == b.size());
    CHECK(report.modelCount == 27);
    CHECK(std::accumulate(report.widthPerLevel.begin(), report.widthPerLevel.end(), std::size_t{0}) + 2 == b.size());

    CHECK(compile(cnf(2, {{1, 2}}), VarOrder::identity(2)).size() == 4);
}

TEST_CASE("evaluate") {
    const Obdd one = Obdd::constant(VarOrder::identity(3), true);
    const Obdd zero = Obdd::constant(VarOrder::identity(3), false);
    for (std::uint64_t x = 0; x < 8; ++x) {
        CHECK(evaluate(one, fromBits(3, x)));
        CHECK_FALSE(evaluate(zero, fromBits(3, x)));
    }
    CHECK_THROWS_AS(evaluate(one, Assignment(3)), PartialAssignment);

    std::mt19937_64 rng(31);
    const Cnf f = oracle::randomCnf(rng, 40, 22);
    const Obdd b = compile(f, randomOrder(rng, 40));
    for (int t = 0; t < 100000; ++t) {
        const std::uint64_t x = rng() & ((std::uint64_t{1} << 40) - 1);
        REQUIRE(evaluate(b, fromBits(40, x)) == oracle::satisfies(f, x));
    }
}

TEST_CASE("compile matches truth tables, sizes and model counts") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (2 * n));
        const VarOrder order = randomOrder(rng, n);
        const Obdd b = compile(f, order);
        checkStructure(b);
        const auto table = oracle::truthTable(f);
        for (std::uint64_t x = 0; x < table.size(); ++x)
            REQUIRE(evaluate(b, fromBits(n, x)) == (table[x] != 0));
        REQUIRE(b.size() == oracle::obddSize(table, n, order.perm()));
        REQUIRE(modelCount(b) == oracle::countModels(f));
    }
    for (int t = 0; t < 20; ++t) {
        const Cnf f = oracle::randomCnf(rng, 16, 8 + rng() % 10);
        CHECK(modelCount(compile(f, randomOrder(rng, 16))) == oracle::countModels(f));
    }
    const Cnf m = sampleMatchingFormula(8, 4, Seed{3, 3});
    CHECK(modelCount(compile(m, VarOrder::identity(8))) == 81);
}

TEST_CASE("canonicity") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + rng() % 10;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (n + 3));
        const Cnf g = withResolvents(f, rng);
        REQUIRE(oracle::truthTable(f) == oracle::truthTable(g));
        const VarOrder order = randomOrder(rng, n);
        CHECK(compile(f, order) == compile(g, order));
    }
}

TEST_CASE("model count does not depend on the order") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 30; ++t) {
        const Cnf f = oracle::randomCnf(rng, 14, 10 + rng() % 8);
        const BigInt expected = modelCount(compile(f, VarOrder::identity(14)));
        for (int k = 0; k < 20; ++k)
            REQUIRE(modelCount(compile(f, randomOrder(rng, 14))) == expected);
    }
}

TEST_CASE("semantic width") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng() % 11;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (2 * n));
        const VarOrder order = randomOrder(rng, n);
        const Obdd b = compile(f, order);
        for (std::size_t k = 0; k <= n; ++k) {
            const std::size_t expected = oracle::semanticWidth(f, order.perm(), k);
            REQUIRE(semanticWidth(b, k) == expected);
            REQUIRE(semanticWidthByEnumeration(f, order, k) == expected);
            REQUIRE(semanticWidth(f, order, k) == expected);
            CHECK(b.size() >= expected);
        }
    }
    for (int t = 0; t < 10; ++t) {
        const Cnf f = oracle::randomCnf(rng, 14, 12);
        const VarOrder order = randomOrder(rng, 14);
        CHECK(semanticWidth(compile(f, order), 7) == oracle::semanticWidth(f, order.perm(), 7));
    }
    CHECK_THROWS_AS(semanticWidth(compile(kExample, VarOrder::identity(6)), 7), IndexOutOfRange);
    // the fallback path when compilation blows up
    CHECK(semanticWidth(kExample, VarOrder::identity(6), 3, 3) == 8);
}

TEST_CASE("capacity") {
    std::vector<Clause> cs;
    for (Var v = 1; v <= 15; ++v)
        cs.emplace_back(Literal{v, true}, Literal{v + 15, true});
    const Cnf f(30, cs);
    CHECK_THROWS_AS(compile(f, VarOrder::identity(30), 20), CapacityExceeded);
    CHECK(compile(f, VarOrder::identity(30), 1 << 20).size() > (1u << 15));
    try {
        compile(f, VarOrder::identity(30), 20);
    } catch (const CapacityExceeded& e) {
        CHECK(e.peak() >= 20);
    }
}

TEST_CASE("sifting") {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + rng() % 14;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (n + 4));
        const Obdd b = compile(f, randomOrder(rng, n));
        const Obdd s = sift(b);
        CHECK(s.size() <= b.size());
        checkStructure(s);
        CHECK(s == compile(f, s.order()));
        CHECK(modelCount(s) == modelCount(b));
    }
}

TEST_CASE("heuristic orders") {
    const Cnf chain = cnf(4, {{1, 2}, {2, 3}, {3, 4}});
    const VarOrder mf = heuristicOrder(chain, "minfill");
    const bool forward = mf.perm() == std::vector<Var>{1, 2, 3, 4};
    const bool backward = mf.perm() == std::vector<Var>{4, 3, 2, 1};
    CHECK((forward || backward));
    CHECK(compile(chain, mf).size() <= 12);

    const Cnf single = cnf(5, {{2, -4}});
    for (const auto& s : orderStrategies())
        CHECK(compile(single, heuristicOrder(single, s)).size() == 4);
    CHECK_THROWS_AS(heuristicOrder(chain, "random"), UnknownStrategy);

    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 6 + rng() % 25;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (n + 2));
        for (const auto& s : orderStrategies()) {
            auto perm = heuristicOrder(f, s, t).perm();
            std::sort(perm.begin(), perm.end());
            std::vector<Var> id(n);
            std::iota(id.begin(), id.end(), 1);
            REQUIRE(perm == id);
        }
        const auto base = compile(f, heuristicOrder(f, "minfill", t)).size();
        CHECK(compile(f, heuristicOrder(f, "sifting", t)).size() <= base);
    }
}

TEST_CASE("exact minimum size") {
    CHECK(exactMinSize(cnf(3, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}})).size == 1);
    CHECK(exactMinSize(cnf(2, {{1, 2}})).size == 4);
    CHECK(exactMinSize(Cnf(3)).size == 1);

    std::mt19937_64 rng(38);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + rng() % 6;
        const Cnf f = oracle::randomCnf(rng, n, rng() % (2 * n));
        const ExactSize e = exactMinSize(f);
        REQUIRE(e.size == oracle::minObddSizeAllOrders(f));
        CHECK(compile(f, e.order).size() == e.size);
        for (const auto& s : orderStrategies())
            CHECK(e.size <= compile(f, heuristicOrder(f, s)).size());
    }
    for (int t = 0; t < 10; ++t) {
        const Cnf f = oracle::randomCnf(rng, 10, 8 + rng() % 6);
        const ExactSize e = exactMinSize(f);
        CHECK(compile(f, e.order).size() == e.size);
        for (int k = 0; k < 30; ++k)
            CHECK(e.size <= compile(f, randomOrder(rng, 10)).size());
    }
    std::vector<Clause> big;
    for (Var v = 1; v < 14; ++v)
        big.emplace_back(Literal{v, true}, Literal{v + 1, false});
    CHECK_THROWS_AS(exactMinSize(Cnf(14, big)), TooManyVariables);
}

TEST_CASE("pathwidth upper bound") {
    std::vector<Clause> chain;
    for (Var v = 1; v < 8; ++v)
        chain.emplace_back(Literal{v, true}, Literal{v + 1, true});
    const auto c = pathwidthUpperBoundCheck(Cnf(8, chain));
    CHECK(c.pw == 1);
    CHECK(c.bound == 34);
    CHECK(c.size <= 34);
    CHECK(c.holds());

    const auto e = pathwidthUpperBoundCheck(Cnf(5));
    CHECK(e.pw == 0);
    CHECK(e.size <= 2);

    std::mt19937_64 rng(39);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + rng() % 10;
        std::vector<Clause> cs;
        for (Var v = 2; v <= n; ++v)
            cs.emplace_back(Literal{static_cast<Var>(1 + rng() % (v - 1)), (rng() & 1) != 0},
                            Literal{v, (rng() & 1) != 0});
        const auto check = pathwidthUpperBoundCheck(Cnf(n, cs));
        CHECK(check.holds());
        CHECK(check.pw == oracle::pathwidth(primalGraph(Cnf(n, cs))));
    }
}

TEST_CASE("dump format") {
    const Obdd b = compile(kExample, VarOrder({3, 1, 2, 6, 4, 5}));
    const std::string text = dumpObdd(b);
    CHECK(text.rfind("order 3 1 2 6 4 5\nroot ", 0) == 0);
    CHECK(parseObddDump(text) == b);
    CHECK(parseObddDump(dumpObdd(Obdd::constant(VarOrder::identity(2), true))) ==
          Obdd::constant(VarOrder::identity(2), true));

    std::mt19937_64 rng(40);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 12;
        const Obdd r = compile(oracle::randomCnf(rng, n, rng() % n + 1), randomOrder(rng, n));
        REQUIRE(parseObddDump(dumpObdd(r)) == r);
    }

    CHECK_THROWS_AS(parseObddDump("order 1 2\nroot 5\n"), ParseError);
    CHECK_THROWS_AS(parseObddDump("order 1 1\nroot 0\n"), ParseError);
    CHECK_THROWS_AS(parseObddDump("order 1 2\nroot 2\n2 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parseObddDump("order 1 2\nroot 2\n2 1 0 3\n"), ParseError);
    CHECK_THROWS_AS(parseObddDump("root 0\n"), ParseError);
}

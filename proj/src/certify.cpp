#include "obddlab/certify.hpp"

#include "obddlab/errors.hpp"
#include "obddlab/graph.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/sat2.hpp"
#include "obddlab/theta.hpp"
#include "obddlab/width.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace obddlab {

namespace {

LiteralMask bitMask(std::size_t bit) { return LiteralMask{1} << bit; }

// (ℓ_i, ℓ_{h+i}) per clause.
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

bool contains(const Cnf& f, const Clause& c) {
    return std::find(f.clauses().begin(), f.clauses().end(), c) != f.clauses().end();
}

} // namespace

BigInt analyticFloor(std::size_t h) {
    const BigInt lhsUnit = BigInt(36) << h; // 36·2^h
    BigInt three = 1;
    for (std::size_t i = 0; i < h; ++i)
        three *= 3;
    // Smallest N with lhsUnit·N² >= 3^h.
    BigInt lo = 0, hi = 1;
    while (lhsUnit * hi * hi < three)
        hi *= 2;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (lhsUnit * mid * mid >= three)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BigInt greedyDivisor(std::size_t h) {
    BigInt d = 1;
    for (std::size_t i = 0; i < (h + 1) / 2; ++i)
        d *= 3;
    return d << (h / 2);
}

FoolingCertificate extractFoolingSet(const Cnf& h, const Cnf& f, const std::optional<Bipartition>& pi) {
    if (pi ? !isMatchingFormula(h, *pi) : !isMatchingFormula(h))
        throw NotMatchingSubformula("H is not a matching formula for the given bipartition");
    for (const auto& c : h.clauses())
        if (!contains(f, c))
            throw NotMatchingSubformula("a clause of H does not occur in F");
    if (h.size() > kFoolingClauseGuard)
        throw EnumerationTooLarge("fooling sets enumerate 3^h models; h = " + std::to_string(h.size()) +
                                  " exceeds " + std::to_string(kFoolingClauseGuard));

    const auto pairs = orient(h, pi);
    const std::size_t hs = pairs.size();
    std::vector<Var> watched;
    for (const auto& [a, b] : pairs) {
        watched.push_back(a.var);
        watched.push_back(b.var);
    }
    const ExtensionOracle oracle(f, watched);

    struct Option {
        LiteralMask lits, conflicts;
    };
    // Digit 1, 2, 3 = (ℓ_i, ℓ_{h+i}) = 01, 10, 11.
    std::vector<std::array<Option, 3>> options;
    for (const auto& [a, b] : pairs) {
        auto make = [&](bool va, bool vb) {
            const std::size_t x = oracle.bitOf(va ? a : a.negated());
            const std::size_t y = oracle.bitOf(vb ? b : b.negated());
            return Option{bitMask(x) | bitMask(y), oracle.conflictsOf(x) | oracle.conflictsOf(y)};
        };
        options.push_back({make(false, true), make(true, false), make(true, true)});
    }

    constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;
    std::vector<std::uint64_t> selected, masks;
    std::uint64_t candidates = 0;
    auto consider = [&](std::uint64_t code) {
        ++candidates;
        for (auto m : masks)
            if ((code & m) == m)
                return;
        const std::uint64_t both = code & (code >> 1) & kLowBits;
        selected.push_back(code);
        masks.push_back(code & ~(both | (both << 1)));
    };
    const std::size_t maxBoth = hs / 2;
    auto dfs = [&](auto&& self, std::size_t i, std::uint64_t code, std::size_t nBoth, LiteralMask lits,
                   LiteralMask conflicts) -> void {
        if (i == hs) {
            consider(code);
            return;
        }
        for (std::size_t d = 0; d < 3; ++d) {
            if (d == 2 && nBoth == maxBoth)
                continue;
            const auto& opt = options[i][d];
            const LiteralMask next = lits | opt.lits;
            if ((conflicts & opt.lits) || (opt.conflicts & next))
                continue;
            self(self, i + 1, code | (std::uint64_t{d + 1} << (2 * i)), nBoth + (d == 2 ? 1 : 0), next,
                 conflicts | opt.conflicts);
        }
    };
    if (oracle.formulaSatisfiable())
        dfs(dfs, 0, 0, 0, 0, 0);

    FoolingCertificate cert;
    if (pi)
        cert.bipartition = *pi;
    cert.matchingSubformula = h;
    cert.candidates = candidates;
    cert.analyticFloor = analyticFloor(hs);
    cert.assignments.reserve(selected.size());
    for (auto code : selected) {
        Assignment alpha(f.n());
        for (std::size_t i = 0; i < hs; ++i) {
            const auto digit = code >> (2 * i) & 3;
            alpha.set(pairs[i].first.var, (digit & 2) ? pairs[i].first.positive : !pairs[i].first.positive);
            alpha.set(pairs[i].second.var, (digit & 1) ? pairs[i].second.positive : !pairs[i].second.positive);
        }
        cert.assignments.push_back(std::move(alpha));
    }
    cert.witnessSize = cert.assignments.size();
    return cert;
}

CertifiedBound certifiedLowerBound(const Cnf& f, const VarOrder& order, const CertifyOptions& options) {
    const Graph g = primalGraph(f, true);
    const BalancedCut cut = bestBalancedCut(g, order);
    Matching m = cut.matching;
    if (m.size() > options.maxMatching) {
        if (!options.truncate)
            throw EnumerationTooLarge("cut matching of size " + std::to_string(m.size()) + " exceeds " +
                                      std::to_string(options.maxMatching));
        m.edges.resize(options.maxMatching);
    }
    const Bipartition& sides = *m.sides;
    const Cnf h = extractMatchingSubformula(f, m, sides);

    CertifiedBound out;
    out.cutPosition = cut.k;
    out.matchingSize = h.size();
    out.theta = theta(h, f);
    if (out.theta < Fraction(2, 3))
        return out;
    FoolingCertificate cert = extractFoolingSet(h, f, sides);
    cert.cutPosition = cut.k;
    out.floor = std::max(BigInt(cert.witnessSize), cert.analyticFloor);
    out.certificate = std::move(cert);
    return out;
}

Verdict verifyCertificate(const Cnf& f, const VarOrder& order, const FoolingCertificate& cert) {
    auto fail = [](const char* why) { return Verdict{false, why}; };
    const std::size_t k = cert.cutPosition;
    if (order.size() != f.n() || k > f.n())
        return fail("cut");
    for (Var v : cert.bipartition.part1())
        if (v == 0 || v > f.n() || order.position(v) >= k)
            return fail("cut");
    for (Var v : cert.bipartition.part2())
        if (v == 0 || v > f.n() || order.position(v) < k)
            return fail("cut");

    const Cnf& h = cert.matchingSubformula;
    if (h.n() != f.n() || !isMatchingFormula(h, cert.bipartition))
        return fail("matching");
    for (const auto& c : h.clauses())
        if (!contains(f, c))
            return fail("matching");
    if (cert.witnessSize != cert.assignments.size())
        return fail("size");

    for (const auto& alpha : cert.assignments) {
        if (alpha.n() != f.n())
            return fail("satisfies");
        for (const auto& c : h.clauses())
            if (!alpha.isBound(c.first().var) || !alpha.isBound(c.second().var) ||
                !(alpha.satisfies(c.first()) || alpha.satisfies(c.second())))
                return fail("satisfies");
        if (!solve2Sat(f, alpha).satisfiable)
            return fail("extension");
    }

    const auto& as = cert.assignments;
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j)
            if (as[i] == as[j])
                return fail("duplicate");
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            bool crossing = false;
            for (const auto& c : h.clauses()) {
                const Var a = c.first().var, b = c.second().var;
                if (*as[i].get(a) != *as[j].get(a) && *as[i].get(b) != *as[j].get(b)) {
                    crossing = true;
                    break;
                }
            }
            if (!crossing)
                return fail("crossing");
        }

    try {
        if (semanticWidth(f, order, k) < as.size())
            return fail("width");
    } catch (const Error&) {
        return fail("width");
    }
    return {true, ""};
}

std::string serializeCertificate(const FoolingCertificate& cert) {
    std::ostringstream os;
    auto vars = [&](const char* name, const std::vector<Var>& vs) {
        os << name;
        for (Var v : vs)
            os << ' ' << v;
        os << '\n';
    };
    os << "cutPosition " << cert.cutPosition << '\n';
    vars("part1", cert.bipartition.part1());
    vars("part2", cert.bipartition.part2());
    os << "matchingSubformula " << cert.matchingSubformula.size() << '\n';
    for (const auto& c : cert.matchingSubformula.clauses())
        os << "  " << c.first().toDimacs() << ' ' << c.second().toDimacs() << '\n';
    os << "assignments " << cert.assignments.size() << '\n';
    for (const auto& alpha : cert.assignments) {
        os << ' ';
        for (const auto& l : alpha.literals())
            os << ' ' << l.toDimacs();
        os << '\n';
    }
    os << "analyticFloor " << cert.analyticFloor << '\n';
    os << "witnessSize " << cert.witnessSize << '\n';
    return os.str();
}

double MonotoneBound::toDouble() const {
    return std::pow(2.0, exponent.toDouble()) / static_cast<double>(n);
}

bool MonotoneBound::boundedBy(std::uint64_t size) const {
    // size >= 2^(p/q)/n  <=>  (size·n)^q >= 2^p
    BigInt lhs = 1;
    const BigInt base = BigInt(size) * n;
    for (std::uint64_t i = 0; i < exponent.den(); ++i)
        lhs *= base;
    return lhs >= (BigInt(1) << exponent.num());
}

std::string MonotoneBound::toString() const {
    return "2^(" + exponent.toString() + ")/" + std::to_string(n);
}

MonotoneBound monotoneBound(const Cnf& f) {
    if (!f.isMonotone())
        throw NotMonotone("monotoneBound needs a formula with only positive literals");
    const Graph g = primalGraph(f, true);
    MonotoneBound b;
    b.pw = pwExact(g);
    b.maxDegree = maxDegree(g);
    b.n = std::max<std::size_t>(f.n(), 1);
    if (b.maxDegree > 0)
        b.exponent = Fraction(b.pw, 8 * b.maxDegree * b.maxDegree);
    return b;
}

} // namespace obddlab

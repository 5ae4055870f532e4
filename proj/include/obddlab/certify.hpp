#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/fraction.hpp"
#include "obddlab/var_order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace obddlab {

inline constexpr std::size_t kFoolingClauseGuard = 20;

/// Pairwise crossing models of a matching subformula H of F, each extendable
/// to a model of F. For clause i of H, ℓ_i is its literal on the part1 side
/// of the bipartition (the first literal when no bipartition is known) and
/// ℓ_{h+i} the other one.
struct FoolingCertificate {
    std::size_t cutPosition = 0;
    Bipartition bipartition;
    Cnf matchingSubformula;
    std::vector<Assignment> assignments; // bind exactly var(H)
    BigInt analyticFloor;
    std::size_t witnessSize = 0;
    std::uint64_t candidates = 0; // |A'| the greedy started from
};

// Smallest N with N >= (1/6)·2^{h(log2(3)-1)/2}, i.e. 36·N²·2^h >= 3^h.
BigInt analyticFloor(std::size_t h);

// 3^{ceil(h/2)} · 2^{floor(h/2)}: the most a greedy pick can remove.
BigInt greedyDivisor(std::size_t h);

/// Greedy fooling set. A' holds the models of H that extend to F and have at
/// most h/2 clauses with both literals true, enumerated with clause 1 most
/// significant and per clause (ℓ_i,ℓ_{h+i}) in the order 01, 10, 11. The first
/// remaining α is kept and every β equal to α or (1,1) on the clauses where α
/// is 01 or 10 is dropped.
FoolingCertificate extractFoolingSet(const Cnf& h, const Cnf& f, const std::optional<Bipartition>& pi = std::nullopt);

struct CertifyOptions {
    std::size_t maxMatching = kFoolingClauseGuard;
    // Keep only the first maxMatching edges of a larger cut matching instead
    // of failing. The floor stays sound since any sub-matching still crosses.
    bool truncate = false;
};

struct CertifiedBound {
    std::optional<FoolingCertificate> certificate;
    BigInt floor = 1;
    std::size_t cutPosition = 0;
    std::size_t matchingSize = 0; // h actually used
    Fraction theta{1, 1};
};

/// Balanced cut of the primal graph under `order`, its matching subformula H,
/// theta(H,F), and when theta >= 2/3 a fooling set. floor lower-bounds the size
/// of the OBDD of F under `order`.
CertifiedBound certifiedLowerBound(const Cnf& f, const VarOrder& order, const CertifyOptions& options = {});

struct Verdict {
    bool ok = false;
    std::string reason; // empty when ok
};

/// Independent check of a certificate. Reasons: "cut", "matching", "size",
/// "satisfies", "extension", "duplicate", "crossing", "width".
Verdict verifyCertificate(const Cnf& f, const VarOrder& order, const FoolingCertificate& cert);

std::string serializeCertificate(const FoolingCertificate& cert);

/// 2^{pw/(8Δ²)} / n for a monotone F, kept exact.
struct MonotoneBound {
    std::size_t pw = 0;
    std::size_t maxDegree = 0;
    std::size_t n = 1;
    Fraction exponent{0, 1};

    double toDouble() const;
    // size >= 2^exponent / n, decided in integers.
    bool boundedBy(std::uint64_t size) const;
    std::string toString() const;
};

MonotoneBound monotoneBound(const Cnf& f);

} // namespace obddlab

#pragma once

#include "bbw/spaces.hpp"

#include <optional>
#include <vector>

namespace bbw::complexes {

using spaces::BundleSum;
using spaces::Space;

// A Z-graded list of bundle sums with homological signs (-1)^i.  No
// differentials are stored; only K-level certificates are in scope.
struct FormalComplex {
    Space space;
    std::string kind;  // skus | sku | crucial | bicomplex
    std::vector<BundleSum> terms;
};

// 0 -> Wedge^k Uperp -> Wedge^k W* (x) O -> ... -> S^k U* -> 0 on Gr(2,n).
FormalComplex build_skus(const Space& space, int k);
// The dual chain ending in Wedge^{n-2-k}(W/U).
FormalComplex build_sku(const Space& space, int k);
// The glued staircase from S^{n-2-k}U* to S^k U*(n-k-1).
FormalComplex build_crucial(const Space& space, int k);
// Total complex of the symplectic bicomplex, degrees 0..2m-2 on SGr(2,2m).
FormalComplex build_bicomplex_total(const Space& space);

FormalComplex build_sequence(const Space& space, const std::string& kind, int k);

struct KExactCertificate {
    bool pass = false;
    Int rank_alternating;
    struct Witness {
        std::string probe;
        int twist = 0;
        Int value;
    };
    std::optional<Witness> witness;  // first failing chi probe
};

// (a) alternating rank sum vanishes, (b) every chi probe of every twist of
// the alternating K-class vanishes.
KExactCertificate check_k_exact(const FormalComplex& cx, int twist_lo, int twist_hi,
                                const std::vector<BundleSum>& probes, unsigned threads = 1);

// Default probe set: the first block of the space's collection.
std::vector<BundleSum> default_probes(const Space& space);

// K-identities of the spinor-bundle filtrations on OGr(2,2m+1), certified by
// rank and chi probing, plus the selfduality twist at weight level.
struct SpinorRelation {
    std::string name;
    BundleSum lhs, rhs;
    bool rank_ok = false;
    bool chi_ok = false;
    bool pass = false;

    SpinorRelation(std::string name_, BundleSum lhs_, BundleSum rhs_)
        : name(std::move(name_)), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}
};

std::vector<SpinorRelation> spinor_relations(const Space& space, unsigned threads = 1);

}  // namespace bbw::complexes

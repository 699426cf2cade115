#pragma once

#include "bbw/rootsys.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bbw::repchar {

using rootsys::RootSystem;
using rootsys::Weight;

// Multiset of dominant weights with multiplicities.
using DominantMultiset = std::map<Weight, Int>;

// Full weight-multiplicity data of an irreducible representation.  Only the
// dominant chamber is stored; the Weyl orbit is expanded on demand.
struct Character {
    RootSystem sys;
    Weight highest;
    std::map<std::vector<long long>, Int> dominant;  // doubled coords -> multiplicity
    Int dim = 0;

    // multiplicity of an arbitrary weight (via its dominant representative)
    Int mult_of(const Weight& w) const;
    // orbit-expanded weight map
    std::map<std::vector<long long>, Int> full() const;
};

// Resource guard for character computations (characters grow exponentially
// with the rank).  Default 8.
int rank_limit();
void set_rank_limit(int limit);

// Weyl dimension formula, exact.
Int weyl_dim(const RootSystem& sys, const Weight& lam);

// Freudenthal character of the irreducible with highest weight lam.
// Memoized per (system, lam); safe for concurrent callers.
std::shared_ptr<const Character> character(const RootSystem& sys, const Weight& lam);

// V(lam) (x) V(mu) decomposed into irreducibles: character multiplication
// followed by greedy peeling of the lexicographically largest dominant weight.
DominantMultiset tensor_decompose(const RootSystem& sys, const Weight& lam, const Weight& mu);

// Highest weight of the dual representation, -w0(lam).
Weight dual_weight(const RootSystem& sys, const Weight& lam);

// Weyl orbit of a dominant weight, as doubled coordinate vectors.
std::vector<std::vector<long long>> weyl_orbit(const RootSystem& sys, const Weight& dom);

// Character-cache persistence (versioned text format).
bool save_cache(const std::string& path);
bool load_cache(const std::string& path);
std::size_t cache_size();

}  // namespace bbw::repchar

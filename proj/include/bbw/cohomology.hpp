#pragma once

#include "bbw/repchar.hpp"

#include <map>

namespace bbw::cohom {

using repchar::DominantMultiset;
using rootsys::RootSystem;
using rootsys::Weight;

// Graded cohomology of an equivariant bundle.  Weights are reported in the
// dual convention: an entry (degree p, weight nu, multiplicity m) means
// H^p contains m copies of the dual irreducible (V_nu)^*.
struct CohomologyTable {
    static constexpr bool dual_convention = true;

    std::map<int, DominantMultiset> groups;

    bool empty() const { return groups.empty(); }
    void add(int degree, const Weight& nu, const Int& mult);
    void add(const CohomologyTable& other, const Int& mult = 1);

    Int dim(int degree) const;
    Int total_dim() const;
    Int euler() const;
    int min_degree() const;  // -1 when empty

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// Borel-Bott-Weil for a line bundle L_alpha on the full flag variety:
// empty table when alpha+rho is singular, otherwise a single entry
// { l(w) -> w(alpha+rho)-rho } of multiplicity one.
CohomologyTable line_bundle_cohomology(const RootSystem& sys, const Weight& alpha);

}  // namespace bbw::cohom

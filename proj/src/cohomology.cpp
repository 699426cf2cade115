#include "bbw/cohomology.hpp"

#include <stdexcept>

namespace bbw::cohom {

void CohomologyTable::add(int degree, const Weight& nu, const Int& mult) {
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("cohomology multiplicities are nonnegative");
    auto& layer = groups[degree];
    layer[nu] += mult;
    if (layer[nu] == 0) layer.erase(nu);
    if (layer.empty()) groups.erase(degree);
}

void CohomologyTable::add(const CohomologyTable& other, const Int& mult) {
    for (const auto& [deg, layer] : other.groups)
        for (const auto& [nu, m] : layer) add(deg, nu, m * mult);
}

Int CohomologyTable::dim(int degree) const {
    auto it = groups.find(degree);
    if (it == groups.end()) return 0;
    Int s = 0;
    for (const auto& [nu, m] : it->second) s += m * repchar::weyl_dim(nu.sys, nu);
    return s;
}

Int CohomologyTable::total_dim() const {
    Int s = 0;
    for (const auto& [deg, layer] : groups) s += dim(deg);
    return s;
}

Int CohomologyTable::euler() const {
    Int s = 0;
    for (const auto& [deg, layer] : groups) s += (deg % 2 == 0 ? dim(deg) : -dim(deg));
    return s;
}

int CohomologyTable::min_degree() const {
    return groups.empty() ? -1 : groups.begin()->first;
}

CohomologyTable line_bundle_cohomology(const RootSystem& sys, const Weight& alpha) {
    CohomologyTable table;
    const auto res = rootsys::dotted_action(sys, alpha);
    if (res.singular) return table;
    table.add(res.length, *res.dominant_minus_rho, 1);
    return table;
}

}  // namespace bbw::cohom

#pragma once

#include "bbw/clifford.hpp"
#include "bbw/collections.hpp"
#include "bbw/complexes.hpp"

#include <json.hpp>

namespace bbw::report {

using json = nlohmann::ordered_json;

// Top-level envelope; all weight entries in reports are doubled integers,
// flagged by "doubled": true.
json envelope(const std::string& command);

json weight_json(const rootsys::Weight& w);
json space_json(const spaces::Space& space);
json table_json(const cohom::CohomologyTable& table);

json verify_json(const collections::LefschetzCollection& coll,
                 const collections::ExceptionalityReport& rep);
json k_decompose_json(const collections::LefschetzCollection& coll,
                      const spaces::BundleSum& target, const collections::KDecomposition& dec);
json complex_json(const complexes::FormalComplex& cx, const complexes::KExactCertificate& cert,
                  int twist_lo, int twist_hi);
json spinor_relations_json(const spaces::Space& space,
                           const std::vector<complexes::SpinorRelation>& rels);
json even_structure_json(const clifford::EvenStructureReport& rep);
json filtration_json(const clifford::FiltrationReport& rep);

}  // namespace bbw::report

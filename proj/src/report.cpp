#include "bbw/report.hpp"

namespace bbw::report {

json envelope(const std::string& command) {
    json j;
    j["tool"] = "bbwcheck";
    j["version"] = "1.0.0";
    j["doubled"] = true;
    j["command"] = command;
    return j;
}

json weight_json(const rootsys::Weight& w) {
    json arr = json::array();
    for (long long e : w.d) arr.push_back(e);
    return arr;
}

json space_json(const spaces::Space& space) {
    json j;
    j["family"] = spaces::family_name(space.family);
    j["name"] = space.name();
    j["ambient_dim"] = space.n;
    j["dim"] = space.dim();
    j["index"] = space.index();
    j["rank_k0"] = to_int64(collections::rank_k0(space));
    return j;
}

json table_json(const cohom::CohomologyTable& table) {
    json degrees = json::array();
    for (const auto& [deg, layer] : table.groups) {
        json entry;
        entry["degree"] = deg;
        entry["dim"] = to_int64(table.dim(deg));
        json weights = json::array();
        for (const auto& [nu, m] : layer) {
            json w;
            w["dual_of"] = weight_json(nu);
            w["mult"] = to_int64(m);
            weights.push_back(std::move(w));
        }
        entry["weights"] = std::move(weights);
        degrees.push_back(std::move(entry));
    }
    json j;
    j["dual_convention"] = true;
    j["degrees"] = std::move(degrees);
    return j;
}

static json gram_json(const std::vector<std::vector<Int>>& gram) {
    json rows = json::array();
    for (const auto& row : gram) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_int64(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

json verify_json(const collections::LefschetzCollection& coll,
                 const collections::ExceptionalityReport& rep) {
    json j;
    j["space"] = space_json(coll.space);
    j["family"] = spaces::family_name(coll.space.family);
    json params;
    params["n"] = coll.space.n;
    params["m"] = coll.space.m();
    j["params"] = std::move(params);
    j["mode"] = rep.mode == collections::VerifyMode::Full ? "full" : "reduced";
    j["verdict"] = rep.pass ? "pass" : "fail";

    json violations = json::array();
    for (const auto& v : rep.violations) {
        json entry;
        entry["i"] = v.i;
        entry["j"] = v.j;
        entry["twist"] = v.twist;
        entry["degree"] = v.degree;
        entry["dim"] = to_int64(v.dimension);
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    if (!rep.gram.empty()) j["gram"] = gram_json(rep.gram);

    json lengths;
    lengths["collection"] = coll.size();
    lengths["rank_k0"] = to_int64(collections::rank_k0(coll.space));
    j["lengths"] = std::move(lengths);

    json partition = json::array();
    for (int p : coll.partition) partition.push_back(p);
    j["partition"] = std::move(partition);
    json block = json::array();
    for (const auto& e : coll.first_block) block.push_back(e.str());
    j["first_block"] = std::move(block);
    return j;
}

json k_decompose_json(const collections::LefschetzCollection& coll,
                      const spaces::BundleSum& target, const collections::KDecomposition& dec) {
    json j;
    j["space"] = space_json(coll.space);
    j["target"] = target.str();
    // K-level certificate only: necessary for the derived-category decomposition
    // statements, not a fullness proof
    j["certifies"] = "K-level membership: necessary, not sufficient, for a derived-category decomposition";
    j["verdict"] = dec.ok ? "pass" : "fail";
    if (dec.ok) {
        json coeffs = json::array();
        for (const auto& c : dec.coeffs) coeffs.push_back(to_int64(c));
        j["coefficients"] = std::move(coeffs);
    } else {
        j["failure"] = dec.failure;
    }
    return j;
}

json complex_json(const complexes::FormalComplex& cx, const complexes::KExactCertificate& cert,
                  int twist_lo, int twist_hi) {
    json j;
    j["space"] = space_json(cx.space);
    j["kind"] = cx.kind;
    json terms = json::array();
    for (const auto& t : cx.terms) {
        json entry;
        entry["bundle"] = t.str();
        entry["rank"] = to_int64(t.rank());
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    j["twists"] = json::array({twist_lo, twist_hi});
    j["rank_alternating_sum"] = to_int64(cert.rank_alternating);
    j["verdict"] = cert.pass ? "pass" : "fail";
    if (cert.witness) {
        json w;
        w["probe"] = cert.witness->probe;
        w["twist"] = cert.witness->twist;
        w["value"] = to_int64(cert.witness->value);
        j["witness"] = std::move(w);
    }
    return j;
}

json spinor_relations_json(const spaces::Space& space,
                           const std::vector<complexes::SpinorRelation>& rels) {
    json j;
    j["space"] = space_json(space);
    json list = json::array();
    bool all = true;
    for (const auto& r : rels) {
        json entry;
        entry["name"] = r.name;
        entry["lhs"] = r.lhs.str();
        entry["rhs"] = r.rhs.str();
        entry["rank_ok"] = r.rank_ok;
        entry["chi_ok"] = r.chi_ok;
        entry["verdict"] = r.pass ? "pass" : "fail";
        all = all && r.pass;
        list.push_back(std::move(entry));
    }
    j["relations"] = std::move(list);
    j["verdict"] = all ? "pass" : "fail";
    return j;
}

json even_structure_json(const clifford::EvenStructureReport& rep) {
    json j;
    j["n"] = rep.n;
    j["dim_b0"] = rep.dim_b0;
    j["dim_end"] = rep.dim_end;
    j["well_defined"] = rep.well_defined;
    j["parity_invariant"] = rep.parity_invariant;
    j["rank"] = rep.rank;
    j["bijective"] = rep.bijective;
    j["verdict"] = rep.pass ? "pass" : "fail";
    return j;
}

json filtration_json(const clifford::FiltrationReport& rep) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["eps"] = rep.eps == 0 ? std::string() : std::string(1, rep.eps);
    j["filtration_dims"] = rep.filtration_dims;
    j["quotient_dims"] = rep.quotient_dims;
    j["expected_quotient_dims"] = rep.expected_quotient_dims;
    j["chain_ok"] = rep.chain_ok;
    j["quotients_ok"] = rep.quotients_ok;
    j["invariant_ok"] = rep.invariant_ok;
    j["verdict"] = rep.pass ? "pass" : "fail";
    return j;
}

}  // namespace bbw::report

// bbwcheck: batch verification of exceptional collections, cohomology and
// spinor-module structure on Gr(2,n), SGr(2,2m), OGr(2,2m+1) and odd quadrics.
//
// Exit codes: 0 all checks pass, 1 at least one mathematical check failed,
// 2 usage or resource error.

#include "bbw/acceptance.hpp"
#include "bbw/clifford.hpp"
#include "bbw/collections.hpp"
#include "bbw/complexes.hpp"
#include "bbw/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

namespace {

using bbw::Int;
using bbw::Rat;
using json = bbw::report::json;
using bbw::collections::Family;
using bbw::spaces::Space;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string family;
    int n = 0, m = 0;
    std::string mode = "full";
    std::string json_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 20240925;  // fixed default for reproducibility
};

Family parse_family(const std::string& name) {
    if (name == "gr") return Family::GrA;
    if (name == "sgr") return Family::SGr;
    if (name == "ogr") return Family::OGr;
    if (name == "quadric") return Family::Quadric;
    throw std::invalid_argument("unknown family '" + name + "': expected gr|sgr|ogr|quadric");
}

Space resolve_space(const std::string& family, int n, int m) {
    switch (parse_family(family)) {
        case Family::GrA: return Space::gr(n);
        case Family::SGr: return Space::sgr(m);
        case Family::OGr: return Space::ogr(m);
        case Family::Quadric: return Space::quadric(n);
    }
    throw std::invalid_argument("unknown family");
}

int param_of(Family family, const Options& opt) {
    return family == Family::GrA || family == Family::Quadric ? opt.n : opt.m;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::invalid_argument("cannot open JSON output path '" + path + "'");
    os << j.dump(2) << "\n";
}

std::filesystem::path cache_file() {
    const char* dir = std::getenv("BBWCHECK_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / "characters.cache";
}

void load_cache() {
    const auto path = cache_file();
    if (!path.empty() && std::filesystem::exists(path)) bbw::repchar::load_cache(path.string());
}

void save_cache() {
    const auto path = cache_file();
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const auto tmp = path.string() + ".tmp";
    if (bbw::repchar::save_cache(tmp)) std::filesystem::rename(tmp, path, ec);
}

int run_verify(const Options& opt, const std::string& first_block, const std::string& partition) {
    const Family family = parse_family(opt.family);
    bbw::collections::LefschetzCollection coll =
        bbw::collections::build_collection(family, param_of(family, opt));
    if (!first_block.empty() || !partition.empty()) {
        if (first_block.empty() || partition.empty())
            throw std::invalid_argument("--first-block and --partition must be given together");
        coll.first_block.clear();
        std::stringstream fb(first_block);
        for (std::string item; std::getline(fb, item, ';');)
            coll.first_block.push_back(bbw::spaces::parse_bundle(coll.space, item));
        coll.partition.clear();
        std::stringstream ps(partition);
        for (std::string item; std::getline(ps, item, ',');) coll.partition.push_back(std::stoi(item));
    }

    const auto mode = opt.mode == "reduced" ? bbw::collections::VerifyMode::Reduced
                                            : bbw::collections::VerifyMode::Full;
    const auto rep = bbw::collections::verify_exceptional(coll, mode, opt.threads, true);

    const auto names = coll.object_names();
    std::cout << coll.space.name() << ": collection of length " << coll.size() << ", mode "
              << opt.mode << "\n";
    for (const auto& v : rep.violations) {
        if (v.twist == 0 && v.i == v.j)
            std::cout << "  self-Hom defect at " << names[static_cast<size_t>(v.i)] << ": degree "
                      << v.degree << " dim " << v.dimension << "\n";
        else if (v.twist == 0)
            std::cout << "  Ext^" << v.degree << "(" << names[static_cast<size_t>(v.j)] << ", "
                      << names[static_cast<size_t>(v.i)] << ") = " << v.dimension << " != 0\n";
        else
            std::cout << "  Ext^" << v.degree << "(E_" << v.i + 1 << ", E_" << v.j + 1 << "(-"
                      << v.twist << ")) = " << v.dimension << " != 0\n";
    }
    std::cout << (rep.pass ? "exceptional: PASS" : "exceptional: FAIL") << "\n";

    if (!opt.json_path.empty()) {
        json j = bbw::report::envelope("verify");
        j.update(bbw::report::verify_json(coll, rep));
        write_json(opt.json_path, j);
    }
    return rep.pass ? kExitPass : kExitCheckFailed;
}

int run_ext(const Options& opt, const std::string& from, const std::string& to, bool cohomology) {
    const Space space = resolve_space(opt.family, opt.n, opt.m);
    bbw::cohom::CohomologyTable table;
    std::string what;
    if (cohomology) {
        const auto bundle = bbw::spaces::parse_bundle(space, to);
        table = bbw::spaces::bundle_cohomology(bundle);
        what = "H(" + space.name() + ", " + bundle.str() + ")";
    } else {
        const auto e = bbw::spaces::parse_bundle(space, from);
        const auto f = bbw::spaces::parse_bundle(space, to);
        table = bbw::spaces::ext(e, f);
        what = "Ext(" + e.str() + ", " + f.str() + ") on " + space.name();
    }
    std::cout << what << ":\n";
    if (table.empty()) std::cout << "  zero\n";
    for (const auto& [deg, layer] : table.groups) {
        std::cout << "  deg " << deg << ": dim " << table.dim(deg);
        std::cout << "  [";
        bool first = true;
        for (const auto& [nu, mult] : layer) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << "dual of " << nu.str();
            if (mult != 1) std::cout << " x" << mult;
        }
        std::cout << "]\n";
    }
    if (!opt.json_path.empty()) {
        json j = bbw::report::envelope(cohomology ? "cohomology" : "ext");
        j["space"] = bbw::report::space_json(space);
        j["what"] = what;
        j["table"] = bbw::report::table_json(table);
        write_json(opt.json_path, j);
    }
    return kExitPass;
}

int run_complex_check(const Options& opt, const std::string& kind, int k, int twist_lo,
                      int twist_hi, const std::vector<std::string>& probe_exprs) {
    const Space space = resolve_space(opt.family, opt.n, opt.m);
    if (kind == "spinor") {
        const auto rels = bbw::complexes::spinor_relations(space, opt.threads);
        bool all = true;
        for (const auto& r : rels) {
            std::cout << "relation " << r.name << ": rank " << (r.rank_ok ? "ok" : "FAIL")
                      << ", chi probes " << (r.chi_ok ? "ok" : "FAIL") << " -> "
                      << (r.pass ? "PASS" : "FAIL") << "\n";
            all = all && r.pass;
        }
        if (!opt.json_path.empty()) {
            json j = bbw::report::envelope("complex-check");
            j["complexes"] = bbw::report::spinor_relations_json(space, rels);
            write_json(opt.json_path, j);
        }
        return all ? kExitPass : kExitCheckFailed;
    }

    const auto cx = bbw::complexes::build_sequence(space, kind, k);
    if (twist_hi < twist_lo) twist_hi = space.index();
    auto probes = bbw::complexes::default_probes(space);
    if (!probe_exprs.empty()) {
        probes.clear();
        for (const auto& expr : probe_exprs) probes.push_back(bbw::spaces::parse_bundle(space, expr));
    }
    const auto cert = bbw::complexes::check_k_exact(cx, twist_lo, twist_hi, probes, opt.threads);
    std::cout << kind << " on " << space.name() << ": rank alternating sum "
              << cert.rank_alternating << "\n";
    if (cert.witness)
        std::cout << "  first failing probe: chi(" << cert.witness->probe << ", T(*)("
                  << cert.witness->twist << ")) = " << cert.witness->value << "\n";
    std::cout << (cert.pass ? "K-exactness: PASS" : "K-exactness: FAIL") << "\n";
    if (!opt.json_path.empty()) {
        json j = bbw::report::envelope("complex-check");
        j["complexes"] = bbw::report::complex_json(cx, cert, twist_lo, twist_hi);
        write_json(opt.json_path, j);
    }
    return cert.pass ? kExitPass : kExitCheckFailed;
}

int run_clifford(const Options& opt, int n, int k_opt, int samples) {
    const bbw::clifford::QuadSpace sp(n);
    bool all = true;
    json blocks = json::array();

    const auto even = bbw::clifford::verify_even_structure(sp);
    std::cout << "even structure at n=" << n << ": dim B0 = " << even.dim_b0
              << ", dim End = " << even.dim_end << ", rank = " << even.rank << " -> "
              << (even.pass ? "PASS" : "FAIL") << "\n";
    all = all && even.pass;
    {
        json b;
        b["check"] = "even-structure";
        b["result"] = bbw::report::even_structure_json(even);
        blocks.push_back(std::move(b));
    }

    const std::vector<char> epsilons = sp.odd ? std::vector<char>{0} : std::vector<char>{'+', '-'};
    for (int k = (k_opt >= 0 ? k_opt : 0); k <= (k_opt >= 0 ? k_opt : sp.m); ++k) {
        for (char eps : epsilons) {
            const auto filt = bbw::clifford::radical_filtration(sp, k, eps);
            std::cout << "radical filtration k=" << k;
            if (eps) std::cout << " eps=" << eps;
            std::cout << ": quotients (";
            for (size_t t = 0; t < filt.quotient_dims.size(); ++t)
                std::cout << (t ? "," : "") << filt.quotient_dims[t];
            std::cout << ") -> " << (filt.pass ? "PASS" : "FAIL") << "\n";
            all = all && filt.pass;
            json b;
            b["check"] = "radical-filtration";
            b["result"] = bbw::report::filtration_json(filt);
            blocks.push_back(std::move(b));
        }
        if (k >= 1 && k <= sp.m - 1) {
            std::mt19937_64 rng(opt.seed + 1000 * static_cast<unsigned>(n) + static_cast<unsigned>(k));
            std::uniform_int_distribution<int> num(-3, 3);
            std::uniform_int_distribution<int> den(1, 3);
            bool split_ok = true;
            for (int s = 0; s < samples; ++s) {
                bbw::qla::QMat phi(static_cast<size_t>(k),
                                   bbw::qla::QRow(static_cast<size_t>(sp.m - k)));
                for (auto& row : phi)
                    for (auto& x : row) x = Rat(num(rng), den(rng));
                split_ok = split_ok && bbw::clifford::splitting_independence(sp, k, phi);
            }
            std::cout << "splitting independence k=" << k << " (" << samples
                      << " samples): " << (split_ok ? "PASS" : "FAIL") << "\n";
            all = all && split_ok;
            json b;
            b["check"] = "splitting-independence";
            b["k"] = k;
            b["samples"] = samples;
            b["verdict"] = split_ok ? "pass" : "fail";
            blocks.push_back(std::move(b));
        }
    }

    if (!opt.json_path.empty()) {
        json j = bbw::report::envelope("clifford-check");
        j["n"] = n;
        j["seed"] = opt.seed;
        j["checks"] = std::move(blocks);
        j["verdict"] = all ? "pass" : "fail";
        write_json(opt.json_path, j);
    }
    return all ? kExitPass : kExitCheckFailed;
}

int run_k_decompose(const Options& opt, const std::string& target_expr) {
    const Family family = parse_family(opt.family);
    const auto coll = bbw::collections::build_collection(family, param_of(family, opt));
    const auto target = bbw::spaces::parse_bundle(coll.space, target_expr);
    const auto dec = bbw::collections::k_decompose(coll, target);
    const auto names = coll.object_names();
    std::cout << "[" << target.str() << "] on " << coll.space.name()
              << " (K-level membership certificate):\n";
    if (dec.ok) {
        for (size_t i = 0; i < dec.coeffs.size(); ++i)
            if (dec.coeffs[i] != 0)
                std::cout << "  " << (dec.coeffs[i] > 0 ? "+" : "") << dec.coeffs[i] << " ["
                          << names[i] << "]\n";
        std::cout << "integral decomposition: PASS\n";
    } else {
        std::cout << "  " << dec.failure << "\nintegral decomposition: FAIL\n";
    }
    if (!opt.json_path.empty()) {
        json j = bbw::report::envelope("k-decompose");
        j.update(bbw::report::k_decompose_json(coll, target, dec));
        write_json(opt.json_path, j);
    }
    return dec.ok ? kExitPass : kExitCheckFailed;
}

int run_report_all(const Options& opt) {
    const auto results = bbw::acceptance::run_all(opt.threads);
    const bool all = bbw::acceptance::print_results(results, std::cout);
    if (!opt.json_path.empty()) write_json(opt.json_path, bbw::acceptance::results_json(results));
    return all ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bbwcheck: Borel-Bott-Weil verification of exceptional collections"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--threads", opt.threads, "worker threads")->capture_default_str();
    app.add_option("--json", opt.json_path, "write a JSON report to this path");
    app.add_option("--seed", opt.seed, "RNG seed for randomized checks")->capture_default_str();

    auto add_space_opts = [&](CLI::App* sub, bool family_flag) {
        sub->add_option(family_flag ? "--family" : "--space", opt.family,
                        "gr | sgr | ogr | quadric")
            ->required();
        sub->add_option("--n", opt.n, "n for gr/quadric");
        sub->add_option("--m", opt.m, "m for sgr/ogr");
    };

    auto* verify = app.add_subcommand("verify", "verify a Lefschetz collection is exceptional");
    add_space_opts(verify, true);
    std::string mode = "full", first_block, partition;
    verify->add_option("--mode", mode, "full | reduced")->capture_default_str();
    verify->add_option("--first-block", first_block,
                       "custom first block, ';'-separated bundle expressions");
    verify->add_option("--partition", partition, "custom support partition, comma-separated");

    auto* ext = app.add_subcommand("ext", "Ext groups between two bundles");
    add_space_opts(ext, false);
    std::string from, to;
    ext->add_option("--from", from, "bundle expression")->required();
    ext->add_option("--to", to, "bundle expression")->required();

    auto* coh = app.add_subcommand("cohomology", "cohomology of a bundle");
    add_space_opts(coh, false);
    std::string bundle;
    coh->add_option("--bundle", bundle, "bundle expression")->required();

    auto* cx = app.add_subcommand("complex-check", "K-exactness certificates");
    add_space_opts(cx, false);
    std::string kind;
    int kparam = 0, twist_lo = 0, twist_hi = -1;
    std::vector<std::string> probe_exprs;
    cx->add_option("--kind", kind, "skus | sku | crucial | bicomplex | spinor")->required();
    cx->add_option("--k", kparam, "sequence parameter k");
    cx->add_option("--twist-lo", twist_lo, "lowest probe twist")->capture_default_str();
    cx->add_option("--twist-hi", twist_hi, "highest probe twist (default: index of X)");
    cx->add_option("--probe", probe_exprs, "probe bundle expression (repeatable)");

    auto* cl = app.add_subcommand("clifford-check", "Clifford algebra / spinor module suite");
    int cln = 0, clk = -1, samples = 20;
    cl->add_option("--n", cln, "dimension of the quadratic space")->required();
    cl->add_option("--k", clk, "restrict to one isotropic dimension");
    cl->add_option("--samples", samples, "random splittings per (n,k)")->capture_default_str();

    auto* kd = app.add_subcommand("k-decompose", "decompose a class in the K_0 basis");
    add_space_opts(kd, true);
    std::string target;
    kd->add_option("--target", target, "bundle expression")->required();

    app.add_subcommand("report-all", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    load_cache();
    int code = kExitUsage;
    try {
        if (verify->parsed()) {
            opt.mode = mode;
            code = run_verify(opt, first_block, partition);
        } else if (ext->parsed()) {
            code = run_ext(opt, from, to, false);
        } else if (coh->parsed()) {
            code = run_ext(opt, "", bundle, true);
        } else if (cx->parsed()) {
            code = run_complex_check(opt, kind, kparam, twist_lo, twist_hi, probe_exprs);
        } else if (cl->parsed()) {
            code = run_clifford(opt, cln, clk, samples);
        } else if (kd->parsed()) {
            code = run_k_decompose(opt, target);
        } else {
            code = run_report_all(opt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        save_cache();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        save_cache();
        return kExitUsage;
    }
    save_cache();
    return code;
}

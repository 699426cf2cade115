#include "bbw/complexes.hpp"

#include "bbw/parallel.hpp"

#include <stdexcept>

namespace bbw::complexes {

using spaces::Family;

namespace {

void require_gr(const Space& space, int k, const char* what) {
    if (space.family != Family::GrA)
        throw std::invalid_argument(std::string(what) + " lives on Gr(2,n)");
    if (k < 0 || k > space.n - 2)
        throw std::invalid_argument(std::string(what) + ": k out of range [0, n-2]");
}

long long binom_ll(int n, int k) { return to_int64(binomial(n, k)); }

}  // namespace

FormalComplex build_skus(const Space& space, int k) {
    require_gr(space, k, "skus");
    const int n = space.n;
    FormalComplex cx{space, "skus", {}};
    cx.terms.push_back(spaces::wedge_uperp(space, k));
    for (int i = 0; i <= k; ++i)
        cx.terms.push_back(spaces::sym_ustar(space, i) * binom_ll(n, k - i));
    return cx;
}

FormalComplex build_sku(const Space& space, int k) {
    require_gr(space, k, "sku");
    const int n = space.n;
    FormalComplex cx{space, "sku", {}};
    for (int i = 0; i <= n - 2 - k; ++i)
        cx.terms.push_back(spaces::sym_ustar(space, n - 2 - k - i, k + 2 - n + i) * binom_ll(n, i));
    cx.terms.push_back(spaces::wedge_quotient(space, n - 2 - k));
    return cx;
}

FormalComplex build_crucial(const Space& space, int k) {
    require_gr(space, k, "crucial");
    const int n = space.n;
    FormalComplex cx{space, "crucial", {}};
    for (int i = 0; i <= n - 2 - k; ++i)
        cx.terms.push_back(spaces::sym_ustar(space, n - 2 - k - i, i) * binom_ll(n, i));
    for (int j = 0; j <= k; ++j)
        cx.terms.push_back(spaces::sym_ustar(space, j, n - k - 1) * binom_ll(n, k - j));
    return cx;
}

FormalComplex build_bicomplex_total(const Space& space) {
    if (space.family != Family::SGr)
        throw std::invalid_argument("the bicomplex total complex lives on SGr(2,2m)");
    const int m = space.m(), n = space.n;
    FormalComplex cx{space, "bicomplex", {}};
    for (int d = 0; d <= 2 * m - 2; ++d) {
        BundleSum term(space);
        for (int t = 0; t <= m - 1; ++t) {
            const int j = d - t;
            if (j < 0 || j > t) continue;
            term = term + spaces::sym_ustar(space, m - 1 - t + j, t) * binom_ll(n, t - j);
        }
        cx.terms.push_back(std::move(term));
    }
    return cx;
}

FormalComplex build_sequence(const Space& space, const std::string& kind, int k) {
    if (kind == "skus") return build_skus(space, k);
    if (kind == "sku") return build_sku(space, k);
    if (kind == "crucial") return build_crucial(space, k);
    if (kind == "bicomplex") return build_bicomplex_total(space);
    throw std::invalid_argument("unknown complex kind '" + kind + "'");
}

std::vector<BundleSum> default_probes(const Space& space) {
    std::vector<BundleSum> probes;
    const int top = space.k() == 1 ? 0 : space.m() - (space.family == Family::OGr ? 2 : 1);
    for (int l = 0; l <= top; ++l) probes.push_back(spaces::sym_ustar(space, l));
    if (space.has_spinor()) probes.push_back(spaces::spinor(space));
    return probes;
}

KExactCertificate check_k_exact(const FormalComplex& cx, int twist_lo, int twist_hi,
                                const std::vector<BundleSum>& probes, unsigned threads) {
    KExactCertificate cert;
    cert.rank_alternating = 0;
    for (size_t i = 0; i < cx.terms.size(); ++i) {
        const Int r = cx.terms[i].rank();
        cert.rank_alternating += (i % 2 == 0) ? r : -r;
    }

    // alternating K-class of the complex
    BundleSum alt(cx.space);
    for (size_t i = 0; i < cx.terms.size(); ++i)
        alt = (i % 2 == 0) ? alt + cx.terms[i] : alt - cx.terms[i];

    const int tcount = twist_hi >= twist_lo ? twist_hi - twist_lo + 1 : 0;
    std::vector<Int> values(probes.size() * static_cast<size_t>(std::max(tcount, 0)));
    parallel_for(values.size(), threads, [&](size_t idx) {
        const size_t p = idx / static_cast<size_t>(tcount);
        const int t = twist_lo + static_cast<int>(idx % static_cast<size_t>(tcount));
        values[idx] = spaces::chi(probes[p], alt.twist(t));
    });

    cert.pass = cert.rank_alternating == 0;
    for (size_t idx = 0; idx < values.size(); ++idx) {
        if (values[idx] == 0) continue;
        cert.pass = false;
        if (!cert.witness) {
            const size_t p = idx / static_cast<size_t>(tcount);
            const int t = twist_lo + static_cast<int>(idx % static_cast<size_t>(tcount));
            cert.witness = KExactCertificate::Witness{probes[p].str(), t, values[idx]};
        }
    }
    return cert;
}

std::vector<SpinorRelation> spinor_relations(const Space& space, unsigned threads) {
    if (space.family != Family::OGr)
        throw std::invalid_argument("spinor_relations: OGr(2,2m+1) expected");
    const int m = space.m();
    long long spin_dim = 1;
    for (int i = 0; i < m; ++i) spin_dim *= 2;

    std::vector<SpinorRelation> rels;

    // filtration of the pulled-back spinor module at K-level:
    // [S (x) O] - [S(-1)] - [S] = [S (x) U]
    rels.emplace_back("module-filtration", spaces::O(space) * spin_dim,
                      spaces::spinor(space, -1) + spaces::spinor(space) +
                          spaces::tensor_bundles(spaces::spinor(space),
                                                 spaces::dual_bundle(spaces::ustar(space))));
    // filtration of the Hom bundle: [S (x) S*] = sum_s [Wedge^{2s} Uperp]
    {
        BundleSum rhs(space);
        for (int s = 0; s <= m - 1; ++s) rhs = rhs + spaces::wedge_uperp(space, 2 * s);
        rels.emplace_back("endomorphism-filtration",
                          spaces::dual_bundle(spaces::spinor(space)) * spin_dim, std::move(rhs));
    }
    // selfduality twist: dual(S) = S(-1) at weight level
    rels.emplace_back("selfduality", spaces::dual_bundle(spaces::spinor(space)),
                      spaces::spinor(space, -1));

    const auto probes = default_probes(space);
    for (auto& r : rels) {
        r.rank_ok = r.lhs.rank() == r.rhs.rank();
        const BundleSum diff = r.lhs - r.rhs;
        bool chi_ok = true;
        std::vector<char> fails(probes.size() * static_cast<size_t>(space.index() + 1), 0);
        parallel_for(fails.size(), threads, [&](size_t idx) {
            const size_t p = idx / static_cast<size_t>(space.index() + 1);
            const int t = static_cast<int>(idx % static_cast<size_t>(space.index() + 1));
            if (spaces::chi(probes[p], diff.twist(t)) != 0) fails[idx] = 1;
        });
        for (char f : fails) chi_ok = chi_ok && !f;
        r.chi_ok = chi_ok;
        r.pass = r.rank_ok && r.chi_ok && (r.name != "selfduality" || r.lhs == r.rhs);
    }
    return rels;
}

}  // namespace bbw::complexes

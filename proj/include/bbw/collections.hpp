#pragma once

#include "bbw/spaces.hpp"

#include <optional>
#include <vector>

namespace bbw::collections {

using spaces::BundleSum;
using spaces::Family;
using spaces::Space;

// Index (k,l) of the bundle S^l U*(k); spin entries mark the spinor row S(k).
struct UpsilonEntry {
    int k = 0;
    int l = 0;
    bool spin = false;

    friend bool operator==(const UpsilonEntry&, const UpsilonEntry&) = default;
    friend auto operator<=>(const UpsilonEntry&, const UpsilonEntry&) = default;
};

// The index sets Upsilon of the Lefschetz collections (GrA: parameter n,
// SGr/OGr: parameter m) and their enlargements Upsilon-tilde used by the
// K-theoretic decomposition certificates.
std::vector<UpsilonEntry> upsilon(Family family, int n_or_m);
std::vector<UpsilonEntry> upsilon_tilde(Family family, int n_or_m);

struct LefschetzCollection {
    Space space;
    std::vector<BundleSum> first_block;
    std::vector<int> partition;  // nonincreasing block lengths, partition[0] == |first_block|

    // column order: block k holds the first partition[k] objects twisted by O(k)
    std::vector<BundleSum> objects() const;
    std::vector<std::string> object_names() const;
    std::size_t size() const;
};

LefschetzCollection build_collection(Family family, int n_or_m);

// Rebuilds the collection's bundles on another space (only valid when every
// object is expressible there, e.g. pure S^l U*(k) collections).
LefschetzCollection retarget(const LefschetzCollection& coll, const Space& target);

enum class VerifyMode { Full, Reduced };

// A nonzero backward Ext group or a failed self-Hom.  In full mode (i,j)
// index the collection and the entry means Ext^degree(E_j, E_i) != 0 (or a
// self-Hom defect when i == j).  In reduced mode twist > 0 and (i,j) = (p,q)
// index the twist condition Ext^degree(E_p, E_q(-twist)) != 0.
struct Violation {
    int i = 0, j = 0, twist = 0, degree = 0;
    Int dimension;

    friend bool operator==(const Violation&, const Violation&) = default;
    friend bool operator<(const Violation& a, const Violation& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        if (a.twist != b.twist) return a.twist < b.twist;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.dimension < b.dimension;
    }
};

struct ExceptionalityReport {
    bool pass = false;
    VerifyMode mode = VerifyMode::Full;
    std::vector<Violation> violations;
    std::vector<std::vector<Int>> gram;  // filled when requested
};

ExceptionalityReport verify_exceptional(const LefschetzCollection& coll, VerifyMode mode,
                                        unsigned threads = 1, bool with_gram = true);

// G[i][j] = chi(E_i, E_j); upper-unitriangular for exceptional collections.
std::vector<std::vector<Int>> gram_matrix(const LefschetzCollection& coll, unsigned threads = 1);

// Schubert-cell count |W| / |W_Levi| = rank of K_0(X).
Int rank_k0(const Space& space);

// Drop the first block (the combinatorial part of the hyperplane-restriction
// statement; the caller re-targets the space).
LefschetzCollection restrict_hyperplane(const LefschetzCollection& coll);

struct KDecomposition {
    bool ok = false;
    std::vector<Int> coeffs;
    std::string failure;
};

// Coefficients of [target] in the K_0 basis of the collection, solved by
// back-substitution on the unitriangular Gram matrix and cross-checked on
// the opposite pairing.  Requires |coll| == rank_k0.
KDecomposition k_decompose(const LefschetzCollection& coll, const BundleSum& target);
KDecomposition k_decompose(const LefschetzCollection& coll,
                           const std::vector<std::vector<Int>>& gram, const BundleSum& target);

}  // namespace bbw::collections

#pragma once

#include "bbw/cohomology.hpp"

#include <map>
#include <string>
#include <string_view>

namespace bbw::spaces {

// The homogeneous spaces of the verifier: Gr(2,n), SGr(2,2m), OGr(2,2m+1)
// and odd quadrics Q^{n-2} = OGr(1,n).
enum class Family { GrA, SGr, OGr, Quadric };

std::string family_name(Family f);

struct Space {
    Family family = Family::GrA;
    int n = 4;  // dimension of the ambient vector space W

    static Space gr(int n);       // Gr(2,n), n >= 3
    static Space sgr(int m);      // SGr(2,2m), m >= 2
    static Space ogr(int m);      // OGr(2,2m+1), m >= 2
    static Space quadric(int n);  // OGr(1,n), odd n >= 5

    int k() const { return family == Family::Quadric ? 1 : 2; }
    int m() const { return n / 2; }

    rootsys::RootSystem ambient() const;
    rootsys::RootSystem levi_gl() const;  // GL_k factor of the Levi
    rootsys::RootSystem levi_ss() const;  // remaining Levi factor

    int dim() const;
    int canonical_twist() const;  // omega_X = O(canonical_twist)
    int index() const { return -canonical_twist(); }
    bool has_spinor() const { return family == Family::OGr || family == Family::Quadric; }

    std::string name() const;

    friend bool operator==(const Space&, const Space&) = default;
    friend auto operator<=>(const Space&, const Space&) = default;
};

// Irreducible equivariant bundle, given by its Levi highest weight: the
// GL_k-part (doubled, nonincreasing) and the dominant weight of the
// semisimple part.
struct IrreducibleBundle {
    std::vector<long long> gl;
    std::vector<long long> ss;

    friend bool operator==(const IrreducibleBundle&, const IrreducibleBundle&) = default;
    friend auto operator<=>(const IrreducibleBundle&, const IrreducibleBundle&) = default;
};

// Formal Z-linear combination of irreducible bundles on a fixed space.
// Negative coefficients are allowed (K-theory classes).
struct BundleSum {
    Space space;
    std::map<IrreducibleBundle, long long> terms;

    explicit BundleSum(const Space& s) : space(s) {}

    BundleSum& add(const IrreducibleBundle& irr, long long c);
    BundleSum operator+(const BundleSum& o) const;
    BundleSum operator-(const BundleSum& o) const;
    BundleSum operator*(long long c) const;
    friend bool operator==(const BundleSum&, const BundleSum&) = default;

    BundleSum twist(int t) const;  // tensor by O(t)
    bool effective() const;        // all coefficients nonnegative
    bool is_zero() const { return terms.empty(); }

    Int rank() const;
    // determinant charge in O(1) units (may be half-integral for K-classes)
    Rat det_charge() const;

    std::string str() const;
};

// Display name of a single irreducible, in the CLI grammar where possible.
std::string bundle_name(const Space& space, const IrreducibleBundle& irr);

// --- vocabulary -------------------------------------------------------------
BundleSum O(const Space& space, int t = 0);
BundleSum ustar(const Space& space, int t = 0);
BundleSum sym_ustar(const Space& space, int l, int t = 0);        // S^l U*(t)
BundleSum sigma_ustar(const Space& space, long long a2, long long b2, int t = 0);
// Lambda^i of U-perp; a single irreducible on Gr(2,n), the K-theory class of
// the filtered bundle on OGr(2,2m+1)
BundleSum wedge_uperp(const Space& space, int i);
BundleSum wedge_quotient(const Space& space, int i);  // Lambda^i(W/U) on Gr(2,n)
BundleSum spinor(const Space& space, int t = 0);

// Bundle-expression mini-grammar (see docs/bundle-grammar.ebnf).
BundleSum parse_bundle(const Space& space, std::string_view expr);

// --- engines ----------------------------------------------------------------
// Levi weight embedded as a weight of the ambient flag variety.
rootsys::Weight embed(const Space& space, const IrreducibleBundle& irr);

BundleSum tensor_bundles(const BundleSum& E, const BundleSum& F);
BundleSum dual_bundle(const BundleSum& E);

// Borel-Bott-Weil cohomology of an effective bundle sum.
cohom::CohomologyTable bundle_cohomology(const BundleSum& E);

// Ext^*(E, F) = H^*(X, E^* (x) F), dual-convention table.
cohom::CohomologyTable ext(const BundleSum& E, const BundleSum& F);

// Euler pairing; extends bilinearly to arbitrary K-classes.
Int chi(const BundleSum& E, const BundleSum& F);

}  // namespace bbw::spaces

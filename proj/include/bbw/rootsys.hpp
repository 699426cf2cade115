#pragma once

#include "bbw/numeric.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace bbw::rootsys {

// Root systems of types A (in the GL_n picture: weights are vectors in Z^n),
// B_m (SO(2m+1)) and C_m (Sp(2m)), all in epsilon-coordinates.  Type D is not
// supported.
enum class Kind { A, B, C };

std::string kind_name(Kind k);

struct RootSystem {
    Kind kind = Kind::A;
    int rank = 1;  // for kind A the rank is n of GL_n

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
    friend auto operator<=>(const RootSystem&, const RootSystem&) = default;
};

// A weight in epsilon-coordinates.  Entries are stored doubled so that the
// half-integral weights of Spin groups stay exact integers; type A weights
// must be integral (all doubled entries even), B/C weights must be uniformly
// integral or uniformly half-integral.
struct Weight {
    RootSystem sys;
    std::vector<long long> d;  // doubled entries, d[i] = 2*lambda_i

    Weight(RootSystem s, std::vector<long long> doubled);

    // integral entries
    static Weight integral(RootSystem s, std::vector<long long> entries);
    static Weight zero(RootSystem s);

    int size() const { return static_cast<int>(d.size()); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const;  // "(3/2, 1/2)"
};

struct RootData {
    std::vector<Weight> positive;  // duplicate-free, epsilon-coordinates
    Weight rho;                    // type A uses (n, n-1, ..., 1)
    Int weyl_order;
};

// Positive roots, rho and |W|.  Cached per system.
const RootData& root_data(const RootSystem& sys);

// 2 * <x, beta^vee> for a positive root beta of the system (always integral).
long long pairing2(const RootSystem& sys, const Weight& x, const Weight& beta);

bool is_dominant(const RootSystem& sys, const Weight& v);

// Result of the dotted Weyl action w.(alpha) = w(alpha+rho) - rho.
struct DottedResult {
    bool singular = true;
    int length = 0;                          // valid when !singular
    std::optional<Weight> dominant_minus_rho;  // w(alpha+rho) - rho, dominant

    static DottedResult make_singular() { return DottedResult{}; }
};

// Singular iff alpha+rho lies on a wall; otherwise the length of the unique
// w making w(alpha+rho) dominant together with w(alpha+rho)-rho.
DottedResult dotted_action(const RootSystem& sys, const Weight& alpha);

// Ordinary (non-dotted) Weyl normalization: the dominant orbit representative
// and the number of positive roots with strictly negative pairing.
std::pair<Weight, int> make_dominant(const RootSystem& sys, const Weight& v);

}  // namespace bbw::rootsys

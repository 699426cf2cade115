#pragma once

#include "bbw/qlinalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbw::clifford {

// Split quadratic space E = E1 (+) E2 ((+) Q e for odd n) over Q with
// E2 = E1^* and pairing q(e_i, f_j) = delta_ij / 2, q(e,e) = q_e.
// Basis order: e_1..e_m (indices 0..m-1), f_1..f_m (m..2m-1), e (2m, odd n).
struct QuadSpace {
    int n = 2;
    int m = 1;       // dim E1
    bool odd = false;
    Rat q_e = 1;

    explicit QuadSpace(int n_, Rat q_e_ = Rat(1));

    Rat form(int i, int j) const;  // q(b_i, b_j)
    int basis_size() const { return n; }
    std::string basis_name(int i) const;
};

// Element of the Clifford algebra in the straightened monomial basis
// (subsets of the fixed ordered basis, as bitmasks).
struct CliffordElement {
    std::map<std::uint32_t, Rat> c;

    static CliffordElement zero() { return {}; }
    static CliffordElement one();
    static CliffordElement monomial(std::uint32_t mask, const Rat& coeff = Rat(1));
    static CliffordElement basis_vector(int idx);

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement scaled(const Rat& r) const;
    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

    bool is_zero() const { return c.empty(); }
    int parity() const;  // 0 even, 1 odd, -1 mixed or zero
};

// Associative product by basis-ordered straightening.
CliffordElement clifford_product(const QuadSpace& sp, const CliffordElement& a,
                                 const CliffordElement& b);

// --- spinor module: S = Lambda^* E1, coordinates indexed by E1-masks -------
int spin_dim(const QuadSpace& sp);  // 2^m

using SpinVec = std::vector<Rat>;
using SpinMat = qla::QMat;  // mat[row][col]

// E1 acts by wedge, E2 by contraction, e by the parity involution (scaled by
// sqrt(q_e), which must be rational).
SpinVec apply_basis_vector(const QuadSpace& sp, int idx, const SpinVec& v);
// action of a vector of E with rational coordinates in the fixed basis
SpinVec apply_vector(const QuadSpace& sp, const std::vector<Rat>& coords, const SpinVec& v);
SpinVec apply_monomial(const QuadSpace& sp, std::uint32_t mask, const SpinVec& v);
SpinVec apply_element(const QuadSpace& sp, const CliffordElement& x, const SpinVec& v);
SpinMat matrix_of(const QuadSpace& sp, const CliffordElement& x);

// determinant-of-wedge pairing <s, s'> = top coefficient of s /\ s'
Rat spinor_pairing(const QuadSpace& sp, const SpinVec& a, const SpinVec& b);

// --- structure verification --------------------------------------------------
struct EvenStructureReport {
    int n = 0;
    std::size_t dim_b0 = 0;   // 2^{n-1}
    std::size_t dim_end = 0;  // dim End(S) resp. End(S+) + End(S-)
    bool well_defined = false;
    bool parity_invariant = false;
    std::size_t rank = 0;
    bool bijective = false;
    bool pass = false;
};

// Certifies B^0 ~ prod_eps End(S_eps): the representation is an algebra
// homomorphism (sampled multiplicativity), preserves the half-spinor split,
// and has full rank 2^{n-1} onto the matrix algebra.
EvenStructureReport verify_even_structure(const QuadSpace& sp);

struct FiltrationReport {
    int n = 0, k = 0;
    char eps = 0;  // '+', '-' or 0 (odd n)
    std::vector<std::size_t> filtration_dims;        // dim F_0 .. dim F_{k+1}
    std::vector<std::size_t> quotient_dims;          // dim F_t - dim F_{t+1}
    std::vector<std::size_t> expected_quotient_dims; // C(k,t) * dim S_{U,(-1)^t eps}
    bool chain_ok = false;
    bool quotients_ok = false;
    bool invariant_ok = false;
    bool pass = false;
};

// F_t = Lambda^t U . S_{(-1)^t eps} as explicit subspaces; checks the chain,
// the quotient dimensions and B^0_{U-perp}-invariance.  U defaults to the
// span of the first k basis vectors of E1; an arbitrary U inside E1 may be
// supplied as a k x m rational coordinate matrix.
FiltrationReport radical_filtration(const QuadSpace& sp, int k, char eps = 0);
FiltrationReport radical_filtration(const QuadSpace& sp, const qla::QMat& U_rows, char eps = 0);

// Transported image of the even U-perp monomials of exterior degree >= 2t
// (filtration) or == 2t (graded piece) under x -> action(x) o J_phi, where
// J_phi embeds S_U via the splitting e' -> e' + phi(e').  phi is a
// k x (m-k) rational matrix; U is canonical.
qla::QMat splitting_image(const QuadSpace& sp, int k, const qla::QMat& phi, int t, bool graded);

// Whether the transported filtration coincides with the canonical-splitting
// one in every degree (the graded direct-sum images generally do not).
bool splitting_independence(const QuadSpace& sp, int k, const qla::QMat& phi);

}  // namespace bbw::clifford

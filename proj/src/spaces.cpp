#include "bbw/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bbw::spaces {

using rootsys::Kind;
using rootsys::RootSystem;
using rootsys::Weight;

std::string family_name(Family f) {
    switch (f) {
        case Family::GrA: return "gr";
        case Family::SGr: return "sgr";
        case Family::OGr: return "ogr";
        case Family::Quadric: return "quadric";
    }
    return "?";
}

Space Space::gr(int n) {
    if (n < 3) throw std::invalid_argument("Gr(2,n) requires n >= 3");
    return Space{Family::GrA, n};
}
Space Space::sgr(int m) {
    if (m < 2) throw std::invalid_argument("SGr(2,2m) requires m >= 2");
    return Space{Family::SGr, 2 * m};
}
Space Space::ogr(int m) {
    if (m < 2) throw std::invalid_argument("OGr(2,2m+1) requires m >= 2");
    return Space{Family::OGr, 2 * m + 1};
}
Space Space::quadric(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("quadric family is implemented for odd n >= 5 only");
    return Space{Family::Quadric, n};
}

RootSystem Space::ambient() const {
    switch (family) {
        case Family::GrA: return {Kind::A, n};
        case Family::SGr: return {Kind::C, m()};
        case Family::OGr:
        case Family::Quadric: return {Kind::B, m()};
    }
    throw std::logic_error("ambient: bad family");
}

RootSystem Space::levi_gl() const { return {Kind::A, k()}; }

RootSystem Space::levi_ss() const {
    switch (family) {
        case Family::GrA: return {Kind::A, n - 2};
        case Family::SGr: return {Kind::C, m() - 2};
        case Family::OGr: return {Kind::B, m() - 2};
        case Family::Quadric: return {Kind::B, m() - 1};
    }
    throw std::logic_error("levi_ss: bad family");
}

int Space::dim() const {
    switch (family) {
        case Family::GrA: return 2 * (n - 2);
        case Family::SGr: return 2 * n - 5;     // 4m-5
        case Family::OGr: return 2 * n - 7;     // 4m-5
        case Family::Quadric: return n - 2;
    }
    throw std::logic_error("dim: bad family");
}

int Space::canonical_twist() const {
    switch (family) {
        case Family::GrA: return -n;
        case Family::SGr: return 1 - n;      // 1-2m
        case Family::OGr: return 3 - n;      // 2-2m
        case Family::Quadric: return 2 - n;
    }
    throw std::logic_error("canonical_twist: bad family");
}

std::string Space::name() const {
    std::ostringstream os;
    switch (family) {
        case Family::GrA: os << "Gr(2," << n << ")"; break;
        case Family::SGr: os << "SGr(2," << n << ")"; break;
        case Family::OGr: os << "OGr(2," << n << ")"; break;
        case Family::Quadric: os << "Q^" << (n - 2); break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

rootsys::Weight embed(const Space& space, const IrreducibleBundle& irr) {
    std::vector<long long> v = irr.gl;
    v.insert(v.end(), irr.ss.begin(), irr.ss.end());
    return Weight(space.ambient(), std::move(v));
}

static void validate_irr(const Space& space, const IrreducibleBundle& irr) {
    if (static_cast<int>(irr.gl.size()) != space.k())
        throw std::invalid_argument("bundle GL-part has wrong length for " + space.name());
    if (static_cast<int>(irr.ss.size()) != space.levi_ss().rank)
        throw std::invalid_argument("bundle Levi-part has wrong length for " + space.name());
    for (size_t i = 0; i + 1 < irr.gl.size(); ++i)
        if (irr.gl[i] < irr.gl[i + 1])
            throw std::invalid_argument("bundle GL-part is not dominant (a >= b required)");
    if (!rootsys::is_dominant(space.levi_ss(), Weight(space.levi_ss(), irr.ss)))
        throw std::invalid_argument("bundle Levi-part is not dominant");
    if (space.family == Family::GrA || space.family == Family::SGr) {
        for (long long e : irr.gl)
            if (e % 2 != 0)
                throw std::invalid_argument("half-integral (spinor) weights require an odd orthogonal space");
        for (long long e : irr.ss)
            if (e % 2 != 0)
                throw std::invalid_argument("half-integral (spinor) weights require an odd orthogonal space");
    }
    embed(space, irr);  // ambient parity check
}

BundleSum& BundleSum::add(const IrreducibleBundle& irr, long long c) {
    if (c == 0) return *this;
    validate_irr(space, irr);
    auto it = terms.find(irr);
    if (it == terms.end()) {
        terms.emplace(irr, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

BundleSum BundleSum::operator+(const BundleSum& o) const {
    if (space != o.space) throw std::invalid_argument("bundle sum across different spaces");
    BundleSum r = *this;
    for (const auto& [irr, c] : o.terms) r.add(irr, c);
    return r;
}

BundleSum BundleSum::operator-(const BundleSum& o) const { return *this + o * -1; }

BundleSum BundleSum::operator*(long long c) const {
    BundleSum r(space);
    if (c == 0) return r;
    for (const auto& [irr, m] : terms) r.terms.emplace(irr, m * c);
    return r;
}

BundleSum BundleSum::twist(int t) const {
    BundleSum r(space);
    for (const auto& [irr, c] : terms) {
        IrreducibleBundle j = irr;
        for (auto& e : j.gl) e += 2 * t;
        r.terms.emplace(std::move(j), c);
    }
    return r;
}

bool BundleSum::effective() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& p) { return p.second >= 0; });
}

static Int irr_rank(const Space& space, const IrreducibleBundle& irr) {
    // GL_k factor dimension via the type A Weyl dimension formula on the
    // charge-normalized weight
    std::vector<long long> gl = irr.gl;
    const long long base = gl.back();
    for (auto& e : gl) e -= base;
    const RootSystem glsys = space.levi_gl();
    Int d = repchar::weyl_dim(glsys, Weight(glsys, gl));
    d *= repchar::weyl_dim(space.levi_ss(), Weight(space.levi_ss(), irr.ss));
    return d;
}

Int BundleSum::rank() const {
    Int r = 0;
    for (const auto& [irr, c] : terms) r += Int(c) * irr_rank(space, irr);
    return r;
}

Rat BundleSum::det_charge() const {
    Rat r = 0;
    for (const auto& [irr, c] : terms) {
        long long sum2 = 0;
        for (long long e : irr.gl) sum2 += e;
        r += Rat(irr_rank(space, irr)) * Rat(c) * Rat(sum2, 2 * space.k());
    }
    return r;
}

// ---------------------------------------------------------------------------

static std::string half_str(long long d) {
    if (d % 2 == 0) return std::to_string(d / 2);
    return std::to_string(d) + "/2";
}

std::string bundle_name(const Space& space, const IrreducibleBundle& irr) {
    const bool ss_zero =
        std::all_of(irr.ss.begin(), irr.ss.end(), [](long long e) { return e == 0; });
    const bool ss_spin =
        !irr.ss.empty() && std::all_of(irr.ss.begin(), irr.ss.end(), [](long long e) { return e == 1; });
    auto twist_str = [](long long t2) {
        return t2 == 0 ? std::string() : "(" + half_str(t2) + ")";
    };

    if (space.k() == 1) {
        if (ss_zero && irr.gl[0] % 2 == 0) return "O" + twist_str(irr.gl[0]);
        if (ss_spin && irr.gl[0] % 2 != 0) return "Spin" + twist_str(irr.gl[0] - 1);
    } else {
        const long long a2 = irr.gl[0], b2 = irr.gl[1];
        if (ss_zero && a2 % 2 == 0 && b2 % 2 == 0) {
            const long long l = (a2 - b2) / 2;
            if (l == 0) return "O" + twist_str(b2);
            if (l == 1) return "U*" + twist_str(b2);
            return "Sym^" + std::to_string(l) + " U*" + twist_str(b2);
        }
        if (ss_spin && a2 == b2 && a2 % 2 != 0) return "Spin" + twist_str(a2 - 1);
        if (space.family == Family::GrA && a2 == b2 && a2 % 2 == 0) {
            // Wedge^i Uperp: ss = (1^i, 0...); Wedge^i WQ: ss = (0..., (-1)^i)
            size_t lead = 0, trail = 0;
            while (lead < irr.ss.size() && irr.ss[lead] == 2) ++lead;
            while (trail < irr.ss.size() && irr.ss[irr.ss.size() - 1 - trail] == -2) ++trail;
            bool mid_zero = true;
            for (size_t i = lead; i + trail < irr.ss.size(); ++i)
                if (irr.ss[i] != 0) mid_zero = false;
            if (mid_zero && trail == 0 && lead > 0)
                return "Wedge^" + std::to_string(lead) + " Uperp" + twist_str(a2);
            if (mid_zero && lead == 0 && trail > 0)
                return "Wedge^" + std::to_string(trail) + " WQ" + twist_str(a2);
        }
    }
    std::ostringstream os;
    os << "Irr[gl=(";
    for (size_t i = 0; i < irr.gl.size(); ++i) os << (i ? "," : "") << half_str(irr.gl[i]);
    os << ");ss=(";
    for (size_t i = 0; i < irr.ss.size(); ++i) os << (i ? "," : "") << half_str(irr.ss[i]);
    os << ")]";
    return os.str();
}

std::string BundleSum::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [irr, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << bundle_name(space, irr);
    }
    return os.str();
}

// --- vocabulary -------------------------------------------------------------

static IrreducibleBundle irr_gl(const Space& space, std::vector<long long> gl2) {
    return IrreducibleBundle{std::move(gl2),
                             std::vector<long long>(static_cast<size_t>(space.levi_ss().rank), 0)};
}

BundleSum O(const Space& space, int t) {
    BundleSum b(space);
    b.add(irr_gl(space, std::vector<long long>(static_cast<size_t>(space.k()), 2LL * t)), 1);
    return b;
}

BundleSum ustar(const Space& space, int t) { return sym_ustar(space, 1, t); }

BundleSum sym_ustar(const Space& space, int l, int t) {
    if (l < 0) throw std::invalid_argument("Sym^l requires l >= 0");
    BundleSum b(space);
    if (space.k() == 1) {
        b.add(irr_gl(space, {2LL * (t + l)}), 1);
        return b;
    }
    b.add(irr_gl(space, {2LL * (t + l), 2LL * t}), 1);
    return b;
}

BundleSum sigma_ustar(const Space& space, long long a2, long long b2, int t) {
    if (space.k() != 2) throw std::invalid_argument("Sigma[a,b] requires a rank-2 tautological bundle");
    BundleSum b(space);
    b.add(irr_gl(space, {a2 + 2 * t, b2 + 2 * t}), 1);
    return b;
}

BundleSum wedge_uperp(const Space& space, int i) {
    BundleSum b(space);
    if (space.family == Family::GrA) {
        if (i < 0 || i > space.n - 2) throw std::invalid_argument("Wedge^i Uperp: i out of range");
        std::vector<long long> ss(static_cast<size_t>(space.n - 2), 0);
        for (int t = 0; t < i; ++t) ss[static_cast<size_t>(t)] = 2;
        b.add(IrreducibleBundle{{0, 0}, std::move(ss)}, 1);
        return b;
    }
    if (space.family == Family::OGr) {
        // rank of U-perp is n-2; its class decomposes through the filtration
        // U c U-perp with quotient U-perp/U of rank n-4
        const int rk_uperp = space.n - 2, rk_q = space.n - 4, r = space.levi_ss().rank;
        if (i < 0 || i > rk_uperp) throw std::invalid_argument("Wedge^i Uperp: i out of range");
        for (int a = 0; a <= 2; ++a) {
            const int bb = i - a;
            if (bb < 0 || bb > rk_q) continue;
            std::vector<long long> ss(static_cast<size_t>(r), 0);
            const int ones = std::min(bb, rk_q - bb);  // Lambda^b = Lambda^{rk-b} for SO(odd)
            for (int t = 0; t < ones; ++t) ss[static_cast<size_t>(t)] = 2;
            std::vector<long long> gl;
            if (a == 0) gl = {0, 0};
            else if (a == 1) gl = {0, -2};  // U itself
            else gl = {-2, -2};             // Lambda^2 U = O(-1)
            b.add(IrreducibleBundle{std::move(gl), std::move(ss)}, 1);
        }
        return b;
    }
    throw std::invalid_argument("Wedge^i Uperp is available on Gr(2,n) and OGr(2,2m+1)");
}

BundleSum wedge_quotient(const Space& space, int i) {
    if (space.family != Family::GrA)
        throw std::invalid_argument("Wedge^i (W/U) is available on Gr(2,n) only");
    if (i < 0 || i > space.n - 2) throw std::invalid_argument("Wedge^i (W/U): i out of range");
    std::vector<long long> ss(static_cast<size_t>(space.n - 2), 0);
    for (int t = 0; t < i; ++t) ss[ss.size() - 1 - static_cast<size_t>(t)] = -2;
    BundleSum b(space);
    b.add(IrreducibleBundle{{0, 0}, std::move(ss)}, 1);
    return b;
}

BundleSum spinor(const Space& space, int t) {
    if (!space.has_spinor())
        throw std::invalid_argument("spinor bundles exist on orthogonal spaces only");
    std::vector<long long> gl(static_cast<size_t>(space.k()), 2LL * t + 1);
    std::vector<long long> ss(static_cast<size_t>(space.levi_ss().rank), 1);
    BundleSum b(space);
    b.add(IrreducibleBundle{std::move(gl), std::move(ss)}, 1);
    return b;
}

// --- parser ----------------------------------------------------------------

namespace {

struct Cursor {
    std::string s;
    size_t pos = 0;

    bool eat(std::string_view lit) {
        if (s.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bundle expression: expected " + what + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }
    long long integer() {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("an integer");
        return std::stoll(s.substr(start, pos - start));
    }
    long long half_integer2() {  // doubled value; accepts "3" and "3/2"
        long long v = integer();
        if (eat("/")) {
            if (integer() != 2) fail("denominator 2");
            return v;
        }
        return 2 * v;
    }
    int twist() {  // optional "(t)"
        if (!eat("(")) return 0;
        long long t = integer();
        if (!eat(")")) fail("')'");
        return static_cast<int>(t);
    }
    bool done() const { return pos == s.size(); }
};

BundleSum parse_atom(const Space& space, Cursor& c) {
    if (c.eat("O")) return O(space, c.twist());
    if (c.eat("U*")) return ustar(space, c.twist());
    if (c.eat("Sym^")) {
        long long l = c.integer();
        if (!c.eat("U*")) c.fail("'U*'");
        return sym_ustar(space, static_cast<int>(l), c.twist());
    }
    if (c.eat("Sigma[")) {
        long long a2 = c.half_integer2();
        if (!c.eat(",")) c.fail("','");
        long long b2 = c.half_integer2();
        if (!c.eat("]")) c.fail("']'");
        return sigma_ustar(space, a2, b2, c.twist());
    }
    if (c.eat("Wedge^")) {
        long long i = c.integer();
        if (c.eat("Uperp")) {
            int t = c.twist();
            return wedge_uperp(space, static_cast<int>(i)).twist(t);
        }
        if (c.eat("WQ")) {
            int t = c.twist();
            return wedge_quotient(space, static_cast<int>(i)).twist(t);
        }
        c.fail("'Uperp' or 'WQ'");
    }
    if (c.eat("Spin")) return spinor(space, c.twist());
    c.fail("a bundle atom");
}

}  // namespace

BundleSum parse_bundle(const Space& space, std::string_view expr) {
    Cursor c;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) c.s.push_back(ch);
    BundleSum sum(space);
    while (true) {
        long long coeff = 1;
        size_t mark = c.pos;
        if (c.pos < c.s.size() &&
            (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '-')) {
            coeff = c.integer();
            if (!c.eat("*")) {
                c.pos = mark;
                coeff = 1;
            }
        }
        sum = sum + parse_atom(space, c) * coeff;
        if (c.done()) break;
        if (!c.eat("+")) c.fail("'+' or end of expression");
    }
    return sum;
}

// --- engines ----------------------------------------------------------------

namespace {

// Tensor of two GL_k highest weights; computed on the charge-normalized
// integral weights, then shifted back (exact for half-integral charges).
std::vector<std::pair<std::vector<long long>, Int>> tensor_gl(const Space& space,
                                                              const std::vector<long long>& a,
                                                              const std::vector<long long>& b) {
    if (space.k() == 1) return {{{a[0] + b[0]}, Int(1)}};
    const long long shift = a.back() + b.back();
    std::vector<long long> x = a, y = b;
    for (auto& e : x) e -= a.back();
    for (auto& e : y) e -= b.back();
    const RootSystem gl = space.levi_gl();
    std::vector<std::pair<std::vector<long long>, Int>> out;
    for (const auto& [w, m] : repchar::tensor_decompose(gl, Weight(gl, x), Weight(gl, y))) {
        std::vector<long long> v = w.d;
        for (auto& e : v) e += shift;
        out.emplace_back(std::move(v), m);
    }
    return out;
}

}  // namespace

BundleSum tensor_bundles(const BundleSum& E, const BundleSum& F) {
    if (E.space != F.space) throw std::invalid_argument("tensor_bundles: mixed spaces");
    const RootSystem ss = E.space.levi_ss();
    BundleSum out(E.space);
    for (const auto& [e, ce] : E.terms)
        for (const auto& [f, cf] : F.terms) {
            const auto gls = tensor_gl(E.space, e.gl, f.gl);
            const auto sss = repchar::tensor_decompose(ss, Weight(ss, e.ss), Weight(ss, f.ss));
            for (const auto& [gl, mgl] : gls)
                for (const auto& [w, mss] : sss) {
                    const Int mult = Int(ce) * Int(cf) * mgl * mss;
                    out.add(IrreducibleBundle{gl, w.d}, to_int64(mult));
                }
        }
    return out;
}

BundleSum dual_bundle(const BundleSum& E) {
    const RootSystem ss = E.space.levi_ss();
    BundleSum out(E.space);
    for (const auto& [e, c] : E.terms) {
        std::vector<long long> gl(e.gl.rbegin(), e.gl.rend());
        for (auto& x : gl) x = -x;
        out.add(IrreducibleBundle{std::move(gl),
                                  repchar::dual_weight(ss, Weight(ss, e.ss)).d},
                c);
    }
    return out;
}

cohom::CohomologyTable bundle_cohomology(const BundleSum& E) {
    if (!E.effective())
        throw std::invalid_argument("bundle_cohomology: K-classes with negative parts have no cohomology");
    const RootSystem amb = E.space.ambient();
    cohom::CohomologyTable table;
    for (const auto& [irr, c] : E.terms) {
        const auto single = cohom::line_bundle_cohomology(amb, embed(E.space, irr));
        // Bott: an irreducible contributes to at most one degree, within 0..dim X
        if (single.groups.size() > 1) throw std::logic_error("bundle_cohomology: Bott violation");
        if (!single.empty() && single.min_degree() > E.space.dim())
            throw std::logic_error("bundle_cohomology: degree exceeds dim X");
        table.add(single, c);
    }
    return table;
}

cohom::CohomologyTable ext(const BundleSum& E, const BundleSum& F) {
    return bundle_cohomology(tensor_bundles(dual_bundle(E), F));
}

Int chi(const BundleSum& E, const BundleSum& F) {
    const BundleSum D = tensor_bundles(dual_bundle(E), F);
    const RootSystem amb = E.space.ambient();
    Int s = 0;
    for (const auto& [irr, c] : D.terms) {
        const auto res = rootsys::dotted_action(amb, embed(D.space, irr));
        if (res.singular) continue;
        const Int d = repchar::weyl_dim(amb, *res.dominant_minus_rho);
        s += Int(c) * (res.length % 2 == 0 ? d : -d);
    }
    return s;
}

}  // namespace bbw::spaces

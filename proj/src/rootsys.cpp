#include "bbw/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bbw::rootsys {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::C: return "C";
    }
    return "?";
}

static void check_system(const RootSystem& sys) {
    if (sys.rank < 0) throw std::invalid_argument("root system rank must be nonnegative");
}

Weight::Weight(RootSystem s, std::vector<long long> doubled) : sys(s), d(std::move(doubled)) {
    check_system(sys);
    if (static_cast<int>(d.size()) != sys.rank)
        throw std::invalid_argument("weight length does not match system rank");
    if (sys.kind == Kind::A) {
        for (long long e : d)
            if (e % 2 != 0)
                throw std::invalid_argument("type A admits no half-integral weights");
    } else if (!d.empty()) {
        // all entries integral or all half-integral
        const long long par = ((d[0] % 2) + 2) % 2;
        for (long long e : d)
            if (((e % 2) + 2) % 2 != par)
                throw std::invalid_argument("B/C weight entries must share parity");
    }
}

Weight Weight::integral(RootSystem s, std::vector<long long> entries) {
    for (auto& e : entries) e *= 2;
    return Weight(s, std::move(entries));
}

Weight Weight::zero(RootSystem s) {
    return Weight(s, std::vector<long long>(static_cast<size_t>(s.rank), 0));
}

bool Weight::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](long long e) { return e == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    if (sys != o.sys) throw std::invalid_argument("weight addition across different systems");
    std::vector<long long> r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = d[i] + o.d[i];
    return Weight(sys, std::move(r));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    std::vector<long long> r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = -d[i];
    return Weight(sys, std::move(r));
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        if (d[i] % 2 == 0)
            os << d[i] / 2;
        else
            os << d[i] << "/2";
    }
    os << ')';
    return os.str();
}

static RootData compute_root_data(const RootSystem& sys) {
    check_system(sys);
    const int n = sys.rank;
    RootData rd{{}, Weight::zero(sys), 1};

    auto eps = [&](int i, int j, long long ci, long long cj) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = 2 * ci;
        if (j >= 0) v[static_cast<size_t>(j)] = 2 * cj;
        return Weight(sys, std::move(v));
    };

    switch (sys.kind) {
        case Kind::A: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) rd.positive.push_back(eps(i, j, 1, -1));
            std::vector<long long> r(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = n - i;  // (n, n-1, ..., 1)
            rd.rho = Weight::integral(sys, std::move(r));
            rd.weyl_order = factorial(n);
            break;
        }
        case Kind::B:
        case Kind::C: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    rd.positive.push_back(eps(i, j, 1, -1));
                    rd.positive.push_back(eps(i, j, 1, 1));
                }
            std::vector<long long> r(static_cast<size_t>(n));
            if (sys.kind == Kind::B) {
                for (int i = 0; i < n; ++i) rd.positive.push_back(eps(i, -1, 1, 0));
                for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = 2 * (n - i) - 1;  // doubled
                rd.rho = Weight(sys, std::move(r));
            } else {
                for (int i = 0; i < n; ++i) rd.positive.push_back(eps(i, -1, 2, 0));
                for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = n - i;
                rd.rho = Weight::integral(sys, std::move(r));
            }
            rd.weyl_order = factorial(n);
            for (int i = 0; i < n; ++i) rd.weyl_order *= 2;
            break;
        }
    }
    return rd;
}

const RootData& root_data(const RootSystem& sys) {
    static std::map<RootSystem, RootData> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(sys);
    if (it == cache.end()) it = cache.emplace(sys, compute_root_data(sys)).first;
    return it->second;
}

long long pairing2(const RootSystem& sys, const Weight& x, const Weight& beta) {
    if (x.sys != sys || beta.sys != sys)
        throw std::invalid_argument("pairing2: system mismatch");
    int i = -1, j = -1;
    for (int t = 0; t < beta.size(); ++t)
        if (beta.d[static_cast<size_t>(t)] != 0) (i < 0 ? i : j) = t;
    if (i < 0) throw std::invalid_argument("pairing2: zero root");
    const long long ci = beta.d[static_cast<size_t>(i)];
    if (j < 0) {
        // short root eps_i of B (ci=2): <x, beta^vee> = 2 x_i  ->  2<..> = 2 d_i
        // long root 2eps_i of C (ci=4): <x, beta^vee> = x_i    ->  2<..> = d_i
        if (sys.kind == Kind::B && ci == 2) return 2 * x.d[static_cast<size_t>(i)];
        if (sys.kind == Kind::C && ci == 4) return x.d[static_cast<size_t>(i)];
        throw std::invalid_argument("pairing2: unrecognized root");
    }
    const long long cj = beta.d[static_cast<size_t>(j)];
    if (ci != 2 || (cj != 2 && cj != -2)) throw std::invalid_argument("pairing2: unrecognized root");
    // eps_i -+ eps_j: coroot equals the root in epsilon-coordinates
    return x.d[static_cast<size_t>(i)] + (cj > 0 ? x.d[static_cast<size_t>(j)] : -x.d[static_cast<size_t>(j)]);
}

bool is_dominant(const RootSystem& sys, const Weight& v) {
    if (v.sys != sys) throw std::invalid_argument("is_dominant: system mismatch");
    for (int i = 0; i + 1 < v.size(); ++i)
        if (v.d[static_cast<size_t>(i)] < v.d[static_cast<size_t>(i) + 1]) return false;
    if (sys.kind != Kind::A && v.size() > 0 && v.d.back() < 0) return false;
    return true;
}

std::pair<Weight, int> make_dominant(const RootSystem& sys, const Weight& v) {
    if (v.sys != sys) throw std::invalid_argument("make_dominant: system mismatch");
    int length = 0;
    for (const auto& beta : root_data(sys).positive)
        if (pairing2(sys, v, beta) < 0) ++length;
    std::vector<long long> r = v.d;
    if (sys.kind != Kind::A)
        for (auto& e : r) e = std::llabs(e);
    std::sort(r.begin(), r.end(), std::greater<long long>());
    return {Weight(sys, std::move(r)), length};
}

DottedResult dotted_action(const RootSystem& sys, const Weight& alpha) {
    if (alpha.sys != sys) throw std::invalid_argument("dotted_action: system mismatch");
    const RootData& rd = root_data(sys);
    const Weight x = alpha + rd.rho;
    int length = 0;
    for (const auto& beta : rd.positive) {
        const long long p = pairing2(sys, x, beta);
        if (p == 0) return DottedResult::make_singular();
        if (p < 0) ++length;
    }
    auto [dom, len2] = make_dominant(sys, x);
    (void)len2;
    DottedResult res;
    res.singular = false;
    res.length = length;
    res.dominant_minus_rho = dom - rd.rho;
    return res;
}

}  // namespace bbw::rootsys

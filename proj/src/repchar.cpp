#include "bbw/repchar.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bbw::repchar {

using rootsys::Kind;
using rootsys::RootData;
using rootsys::is_dominant;
using rootsys::make_dominant;
using rootsys::root_data;

namespace {

std::atomic<int> g_rank_limit{8};

// 4 * <x, y> in the standard euclidean form on epsilon-coordinates.
long long ip4(const std::vector<long long>& x, const std::vector<long long>& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Coordinates of delta (doubled) over the simple roots, scaled by 4.
// Returns false if delta is not a nonnegative integral combination.
bool in_positive_root_lattice(const RootSystem& sys, const std::vector<long long>& delta,
                              long long* height4 = nullptr) {
    const int n = static_cast<int>(delta.size());
    long long s = 0, h4 = 0;
    switch (sys.kind) {
        case Kind::A: {
            for (int i = 0; i < n; ++i) {
                s += delta[static_cast<size_t>(i)];
                if (i + 1 < n) {
                    if (s < 0) return false;
                    h4 += 2 * s;  // c_i = s/2, so 4*c_i = 2*s
                }
            }
            if (s != 0) return false;
            break;
        }
        case Kind::B: {
            for (int i = 0; i < n; ++i) {
                s += delta[static_cast<size_t>(i)];
                if (s < 0 || s % 2 != 0) return false;
                h4 += 2 * s;
            }
            break;
        }
        case Kind::C: {
            for (int i = 0; i < n; ++i) {
                s += delta[static_cast<size_t>(i)];
                if (i + 1 < n) {
                    if (s < 0 || s % 2 != 0) return false;
                    h4 += 2 * s;
                } else {
                    if (s < 0 || s % 4 != 0) return false;
                    h4 += s;
                }
            }
            break;
        }
    }
    if (height4) *height4 = h4;
    return true;
}

std::vector<std::vector<long long>> simple_roots_doubled(const RootSystem& sys) {
    const int n = sys.rank;
    std::vector<std::vector<long long>> out;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = 2;
        v[static_cast<size_t>(i) + 1] = -2;
        out.push_back(std::move(v));
    }
    if (n > 0 && sys.kind != Kind::A) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v.back() = sys.kind == Kind::B ? 2 : 4;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<long long> dominant_rep(const RootSystem& sys, std::vector<long long> v) {
    if (sys.kind != Kind::A)
        for (auto& e : v) e = std::llabs(e);
    std::sort(v.begin(), v.end(), std::greater<long long>());
    return v;
}

Character compute_character(const RootSystem& sys, const Weight& lam) {
    if (!is_dominant(sys, lam)) throw std::invalid_argument("character: weight not dominant");
    if (sys.kind == Kind::C)
        for (long long e : lam.d)
            if (e % 2 != 0)
                throw std::invalid_argument("character: the type C weight lattice is integral");
    Character ch{sys, lam, {}, 0};
    if (sys.rank == 0) {
        ch.dominant[{}] = 1;
        ch.dim = 1;
        return ch;
    }

    const RootData& rd = root_data(sys);
    const auto simples = simple_roots_doubled(sys);

    auto member = [&](const std::vector<long long>& v, long long* h4 = nullptr) {
        std::vector<long long> delta(v.size());
        const auto dom = dominant_rep(sys, v);
        for (size_t i = 0; i < v.size(); ++i) delta[i] = lam.d[i] - dom[i];
        return in_positive_root_lattice(sys, delta, h4);
    };

    // Enumerate the full weight system by simple-root descent from lam.
    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> queue;
    seen.insert(lam.d);
    queue.push_back(lam.d);
    std::vector<std::pair<long long, std::vector<long long>>> dominants;  // (height4, weight)
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        long long h4 = 0;
        std::vector<long long> delta(v.size());
        for (size_t i = 0; i < v.size(); ++i) delta[i] = lam.d[i] - v[i];
        if (is_dominant(sys, Weight(sys, v)) && in_positive_root_lattice(sys, delta, &h4))
            dominants.emplace_back(h4, v);
        for (const auto& a : simples) {
            std::vector<long long> w(v.size());
            for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] - a[i];
            if (seen.count(w)) continue;
            if (!member(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    std::sort(dominants.begin(), dominants.end());

    // rho as doubled coordinates (the shifted type A rho is fine
    // here: lam - nu is orthogonal to the shift direction)
    const auto& rho = rd.rho.d;
    std::vector<long long> lam_rho(lam.d.size());
    for (size_t i = 0; i < lam.d.size(); ++i) lam_rho[i] = lam.d[i] + rho[i];
    const long long c_top = ip4(lam_rho, lam_rho);

    auto mult_lookup = [&](const std::vector<long long>& v) -> const Int& {
        static const Int zero = 0;
        auto it = ch.dominant.find(dominant_rep(sys, v));
        return it == ch.dominant.end() ? zero : it->second;
    };

    for (const auto& [h4, nu] : dominants) {
        if (h4 == 0) {
            ch.dominant[nu] = 1;
            continue;
        }
        Int num = 0;
        for (const auto& beta : rd.positive) {
            std::vector<long long> x = nu;
            for (int k = 1;; ++k) {
                for (size_t i = 0; i < x.size(); ++i) x[i] += beta.d[i];
                if (!member(x)) break;
                const Int& m = mult_lookup(x);
                if (m != 0) num += m * ip4(x, beta.d);
                (void)k;
            }
        }
        num *= 2;
        std::vector<long long> nu_rho(nu.size());
        for (size_t i = 0; i < nu.size(); ++i) nu_rho[i] = nu[i] + rho[i];
        const long long den = c_top - ip4(nu_rho, nu_rho);
        if (den <= 0 || num % den != 0)
            throw std::logic_error("Freudenthal recursion: inexact division");
        ch.dominant[nu] = num / den;
    }

    for (const auto& [v, m] : ch.dominant)
        ch.dim += m * Int(weyl_orbit(sys, Weight(sys, v)).size());
    return ch;
}

struct CacheKey {
    Kind kind;
    int rank;
    std::vector<long long> lam;
    auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, std::shared_ptr<const Character>>& cache() {
    static std::map<CacheKey, std::shared_ptr<const Character>> c;
    return c;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

int rank_limit() { return g_rank_limit.load(); }
void set_rank_limit(int limit) { g_rank_limit.store(limit); }

Int Character::mult_of(const Weight& w) const {
    auto it = dominant.find(dominant_rep(sys, w.d));
    return it == dominant.end() ? Int(0) : it->second;
}

std::map<std::vector<long long>, Int> Character::full() const {
    std::map<std::vector<long long>, Int> out;
    for (const auto& [v, m] : dominant)
        for (auto& o : weyl_orbit(sys, Weight(sys, v))) out[o] = m;
    return out;
}

std::vector<std::vector<long long>> weyl_orbit(const RootSystem& sys, const Weight& dom) {
    if (!is_dominant(sys, dom)) throw std::invalid_argument("weyl_orbit: weight not dominant");
    std::vector<std::vector<long long>> out;
    std::vector<long long> v = dom.d;
    std::sort(v.begin(), v.end());
    if (sys.kind == Kind::A) {
        do out.push_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        return out;
    }
    do {
        std::vector<size_t> nz;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) nz.push_back(i);
        for (size_t mask = 0; mask < (size_t(1) << nz.size()); ++mask) {
            std::vector<long long> w = v;
            for (size_t b = 0; b < nz.size(); ++b)
                if (mask & (size_t(1) << b)) w[nz[b]] = -w[nz[b]];
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Int weyl_dim(const RootSystem& sys, const Weight& lam) {
    if (!is_dominant(sys, lam)) throw std::invalid_argument("weyl_dim: weight not dominant");
    if (sys.rank == 0) return 1;
    const RootData& rd = root_data(sys);
    const Weight x = lam + rd.rho;
    Rat prod = 1;
    for (const auto& beta : rd.positive) {
        const long long num = rootsys::pairing2(sys, x, beta);
        const long long den = rootsys::pairing2(sys, rd.rho, beta);
        prod *= Rat(num, den);
    }
    if (denominator(prod) != 1) throw std::logic_error("weyl_dim: non-integral result");
    return numerator(prod);
}

std::shared_ptr<const Character> character(const RootSystem& sys, const Weight& lam) {
    if (sys.rank > rank_limit())
        throw std::invalid_argument("character: rank " + std::to_string(sys.rank) +
                                    " exceeds the configured limit " + std::to_string(rank_limit()));
    CacheKey key{sys.kind, sys.rank, lam.d};
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    auto ch = std::make_shared<const Character>(compute_character(sys, lam));
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache().emplace(std::move(key), std::move(ch)).first->second;
}

DominantMultiset tensor_decompose(const RootSystem& sys, const Weight& lam, const Weight& mu) {
    if (!is_dominant(sys, lam) || !is_dominant(sys, mu))
        throw std::invalid_argument("tensor_decompose: weights must be dominant");
    DominantMultiset out;
    if (lam.is_zero()) {
        out[mu] = 1;
        return out;
    }
    if (mu.is_zero()) {
        out[lam] = 1;
        return out;
    }

    auto fa = character(sys, lam)->full();
    auto fb = character(sys, mu)->full();
    if (fb.size() > fa.size()) std::swap(fa, fb);

    std::map<std::vector<long long>, Int> prod;
    for (const auto& [a, ma] : fa)
        for (const auto& [b, mb] : fb) {
            std::vector<long long> s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            prod[s] += ma * mb;
        }
    for (auto it = prod.begin(); it != prod.end();)
        it = it->second == 0 ? prod.erase(it) : std::next(it);

    while (!prod.empty()) {
        // lexicographically largest weight present; always dominant
        const auto top = prod.rbegin();
        const Weight nu(sys, top->first);
        const Int c = top->second;
        if (c < 0 || !is_dominant(sys, nu))
            throw std::logic_error("tensor_decompose: greedy peel found an invalid leading term");
        out[nu] += c;
        for (const auto& [w, m] : character(sys, nu)->full()) {
            auto it = prod.find(w);
            if (it == prod.end() || it->second < c * m)
                throw std::logic_error("tensor_decompose: negative multiplicity during peeling");
            it->second -= c * m;
            if (it->second == 0) prod.erase(it);
        }
    }
    return out;
}

Weight dual_weight(const RootSystem& sys, const Weight& lam) {
    if (!is_dominant(sys, lam)) throw std::invalid_argument("dual_weight: weight not dominant");
    return make_dominant(sys, -lam).first;
}

std::size_t cache_size() {
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache().size();
}

bool save_cache(const std::string& path) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    std::ofstream os(path, std::ios::trunc);
    if (!os) return false;
    os << "bbwchar v1\n";
    for (const auto& [key, ch] : cache()) {
        os << kind_name(key.kind) << ' ' << key.rank;
        for (long long e : key.lam) os << ' ' << e;
        os << '\n' << ch->dominant.size() << '\n';
        for (const auto& [v, m] : ch->dominant) {
            for (long long e : v) os << e << ' ';
            os << m << '\n';
        }
    }
    return bool(os);
}

bool load_cache(const std::string& path) {
    std::ifstream is(path);
    if (!is) return false;
    std::string header;
    std::getline(is, header);
    if (header != "bbwchar v1") return false;
    std::vector<std::pair<CacheKey, std::shared_ptr<const Character>>> loaded;
    std::string kind_str;
    while (is >> kind_str) {
        Kind kind;
        if (kind_str == "A") kind = Kind::A;
        else if (kind_str == "B") kind = Kind::B;
        else if (kind_str == "C") kind = Kind::C;
        else return false;
        int rank = 0;
        if (!(is >> rank) || rank < 0) return false;
        RootSystem sys{kind, rank};
        std::vector<long long> lam(static_cast<size_t>(rank));
        for (auto& e : lam)
            if (!(is >> e)) return false;
        size_t count = 0;
        if (!(is >> count)) return false;
        Character ch{sys, Weight(sys, lam), {}, 0};
        for (size_t i = 0; i < count; ++i) {
            std::vector<long long> v(static_cast<size_t>(rank));
            for (auto& e : v)
                if (!(is >> e)) return false;
            std::string mult;
            if (!(is >> mult)) return false;
            ch.dominant[v] = Int(mult);
        }
        for (const auto& [v, m] : ch.dominant)
            ch.dim += m * Int(weyl_orbit(sys, Weight(sys, v)).size());
        loaded.emplace_back(CacheKey{kind, rank, lam},
                            std::make_shared<const Character>(std::move(ch)));
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    for (auto& [k, v] : loaded) cache().emplace(std::move(k), std::move(v));
    return true;
}

}  // namespace bbw::repchar

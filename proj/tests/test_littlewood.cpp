// Independent oracle for type A tensor decompositions: the classical
// Littlewood-Richardson rule.  c^nu_{lam,mu} counts semistandard skew
// tableaux of shape nu/lam and content mu whose reverse reading word is a
// ballot word.  The production path computes the same numbers by character
// multiplication and greedy peeling; the two must agree.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bbw/repchar.hpp"

#include <vector>

using namespace bbw;
using rootsys::Kind;
using rootsys::RootSystem;
using rootsys::Weight;

namespace {

using Partition = std::vector<int>;  // weakly decreasing, trailing zeros allowed

struct Cell {
    int row, col;
};

long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
    const int rows = static_cast<int>(nu.size());
    for (int r = 0; r < rows; ++r) {
        const int inner = r < static_cast<int>(lam.size()) ? lam[static_cast<size_t>(r)] : 0;
        if (nu[static_cast<size_t>(r)] < inner) return 0;  // lam not contained in nu
    }
    // reverse reading order: rows top to bottom, cells right to left
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r) {
        const int inner = r < static_cast<int>(lam.size()) ? lam[static_cast<size_t>(r)] : 0;
        for (int c = nu[static_cast<size_t>(r)] - 1; c >= inner; --c) cells.push_back({r, c});
    }
    long total_mu = 0;
    for (int x : mu) total_mu += x;
    if (static_cast<long>(cells.size()) != total_mu) return 0;

    const int values = static_cast<int>(mu.size());
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu[static_cast<size_t>(r)]), 0);
    std::vector<int> used(static_cast<size_t>(values), 0);

    long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= values; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= mu[static_cast<size_t>(v - 1)]) continue;
            // ballot condition on the prefix
            if (v > 1 && used[static_cast<size_t>(v - 1)] + 1 > used[static_cast<size_t>(v - 2)]) continue;
            // semistandard: weakly increasing along rows (right neighbor
            // filled first in this order), strictly increasing down columns
            if (c + 1 < nu[static_cast<size_t>(r)] && fill[static_cast<size_t>(r)][static_cast<size_t>(c) + 1] < v)
                continue;
            if (r > 0 && c < nu[static_cast<size_t>(r) - 1]) {
                const int inner_above =
                    r - 1 < static_cast<int>(lam.size()) ? lam[static_cast<size_t>(r) - 1] : 0;
                if (c >= inner_above) {
                    // the cell above is part of the skew shape and already filled
                    const int above = fill[static_cast<size_t>(r) - 1][static_cast<size_t>(c)];
                    if (above == 0 || above >= v) continue;
                }
            }
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++used[static_cast<size_t>(v - 1)];
            rec(idx + 1);
            --used[static_cast<size_t>(v - 1)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(0);
    return count;
}

std::vector<Partition> partitions_in_box(int max_entry, int max_rows) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int)> rec = [&](int hi) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_entry);
    return out;
}

}  // namespace

TEST_CASE("character-method tensor products match the LR rule") {
    for (int k : {2, 3, 4}) {
        const RootSystem sys{Kind::A, k};
        const auto parts = partitions_in_box(k == 4 ? 2 : 3, k);
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                std::vector<long long> lv(static_cast<size_t>(k), 0), mv(static_cast<size_t>(k), 0);
                for (size_t i = 0; i < lam.size(); ++i) lv[i] = lam[i];
                for (size_t i = 0; i < mu.size(); ++i) mv[i] = mu[i];
                const auto dec = repchar::tensor_decompose(sys, Weight::integral(sys, lv),
                                                           Weight::integral(sys, mv));
                // compare against LR coefficients for every partition nu of
                // |lam|+|mu| with at most k rows
                long long total = 0;
                for (long long x : lv) total += x;
                for (long long x : mv) total += x;
                std::map<std::vector<long long>, long> expected;
                std::function<void(Partition&, int, long long)> gen = [&](Partition& nu, int hi,
                                                                          long long rem) {
                    if (rem == 0) {
                        Partition lam_p(lam.begin(), lam.end());
                        Partition mu_p(mu.begin(), mu.end());
                        Partition nu_full = nu;
                        const long c = lr_coefficient(nu_full, lam_p, mu_p);
                        if (c > 0) {
                            std::vector<long long> key(static_cast<size_t>(k), 0);
                            for (size_t i = 0; i < nu.size(); ++i) key[i] = nu[i];
                            expected[key] = c;
                        }
                        return;
                    }
                    if (static_cast<int>(nu.size()) == k) return;
                    for (int v = std::min<long long>(hi, rem); v >= 1; --v) {
                        nu.push_back(v);
                        gen(nu, v, rem - v);
                        nu.pop_back();
                    }
                };
                Partition nu;
                gen(nu, static_cast<int>(total), total);

                std::map<std::vector<long long>, long> got;
                for (const auto& [w, m] : dec) {
                    std::vector<long long> key = w.d;
                    for (auto& e : key) e /= 2;
                    got[key] = static_cast<long>(to_int64(m));
                }
                CHECK(got == expected);
            }
    }
}

TEST_CASE("LR oracle spot values") {
    // standard textbook products
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);  // (1) x (1,1) contains (2,1)
    CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({2, 2}, {1}, {2, 1}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);  // the classic multiplicity 2
    CHECK(lr_coefficient({2, 2}, {1}, {1, 1}) == 0);        // sizes differ: coefficient vanishes
}

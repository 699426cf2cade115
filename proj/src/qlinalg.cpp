#include "bbw/qlinalg.hpp"

#include <algorithm>

namespace bbw::qla {

namespace {

std::vector<std::vector<Int>> clear_denominators(const QMat& m) {
    std::vector<std::vector<Int>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const auto& x : row) {
            const Int d = denominator(x);
            lcm = lcm / gcd(lcm, d) * d;
        }
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(numerator(x) * (lcm / denominator(x)));
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t rank_int(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;  // exact (Bareiss)
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;  // Mersenne prime

std::uint64_t mod_p(const Int& v) {
    Int r = v % Int(kPrime);
    if (r < 0) r += kPrime;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_p(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_p(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_p(r, a);
        a = mul_p(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank(const QMat& m) { return rank_int(clear_denominators(m)); }

std::size_t rank_lower_bound(const QMat& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const std::uint64_t num = mod_p(numerator(m[i][j]));
            const std::uint64_t den = mod_p(denominator(m[i][j]));
            a[i][j] = mul_p(num, pow_p(den, kPrime - 2));
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const std::uint64_t inv = pow_p(a[r][c], kPrime - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = mul_p(a[i][c], inv);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + kPrime - mul_p(f, a[r][j])) % kPrime;
        }
        ++r;
    }
    return r;
}

bool row_space_contains(const QMat& a, const QMat& b) {
    if (b.empty()) return true;
    QMat stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return rank(stacked) == rank(a);
}

bool same_row_space(const QMat& a, const QMat& b) {
    const std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    QMat stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return rank(stacked) == ra;
}

}  // namespace bbw::qla

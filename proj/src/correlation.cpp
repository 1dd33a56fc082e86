#include "zcp/correlation.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace zcp {

namespace {

// 64 bits starting at bit offset `pos`; bits past the stored words read as zero.
inline std::uint64_t fetch64(const std::vector<std::uint64_t>& w, std::int64_t pos) {
    std::size_t idx = static_cast<std::size_t>(pos >> 6);
    int sh = static_cast<int>(pos & 63);
    std::uint64_t lo = idx < w.size() ? w[idx] : 0;
    if (sh == 0) return lo;
    std::uint64_t hi = idx + 1 < w.size() ? w[idx + 1] : 0;
    return (lo >> sh) | (hi << (64 - sh));
}

// Dot product of c[i0..i0+m) with d[j0..j0+m): m - 2 * (sign mismatches).
std::int64_t window_dot(const sequence& c, std::int64_t i0,
                        const sequence& d, std::int64_t j0, std::int64_t m) {
    std::int64_t mismatches = 0;
    std::int64_t k = 0;
    for (; k + 64 <= m; k += 64) {
        std::uint64_t x = fetch64(c.words(), i0 + k) ^ fetch64(d.words(), j0 + k);
        mismatches += std::popcount(x);
    }
    if (k < m) {
        std::uint64_t x = fetch64(c.words(), i0 + k) ^ fetch64(d.words(), j0 + k);
        x &= (std::uint64_t{1} << (m - k)) - 1;
        mismatches += std::popcount(x);
    }
    return m - 2 * mismatches;
}

}  // namespace

std::int64_t accf(const sequence& c, const sequence& d, std::int64_t tau) {
    if (tau < 0) return accf(d, c, -tau);
    std::int64_t m = std::min(c.size(), d.size() - tau);
    if (m <= 0) return 0;
    return window_dot(c, 0, d, tau, m);
}

std::int64_t aacf(const sequence& c, std::int64_t tau) {
    tau = std::llabs(tau);
    std::int64_t m = c.size() - tau;
    if (m <= 0) return 0;
    return window_dot(c, 0, c, tau, m);
}

std::vector<std::int64_t> pair_profile(const sequence& a, const sequence& b) {
    if (a.size() != b.size()) throw std::invalid_argument("unequal lengths; profile undefined");
    std::vector<std::int64_t> sums(static_cast<std::size_t>(a.size()));
    for (std::int64_t tau = 0; tau < a.size(); ++tau) {
        sums[static_cast<std::size_t>(tau)] = aacf(a, tau) + aacf(b, tau);
    }
    return sums;
}

std::vector<std::int64_t> pair_profile(const seq_pair& p) {
    return pair_profile(p.first, p.second);
}

std::vector<std::int64_t> abs_profile(const std::vector<std::int64_t>& sums) {
    std::vector<std::int64_t> out(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) out[i] = std::llabs(sums[i]);
    return out;
}

}  // namespace zcp

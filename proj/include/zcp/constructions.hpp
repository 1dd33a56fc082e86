#pragma once

#include "zcp/analysis.hpp"

#include <optional>

namespace zcp {

// Index into the recursive concatenation tree: depth k >= 1, 0 <= index < 2^k.
struct tree_address {
    int depth = 1;
    std::uint64_t index = 0;
};

// Length of the form 2^a * 10^b * 26^c.
struct golay_number {
    int a = 0;
    int b = 0;
    int c = 0;

    std::int64_t value() const;
    static std::optional<golay_number> factor(std::int64_t n);
    static std::vector<std::int64_t> values_up_to(std::int64_t limit);  // ascending
};

// Recursive concatenation of a seed pair with lengths (N, N+1). Depth-1 pairs
// are (a||b, a||-b) and (b||a, b||-a); each deeper level concatenates the
// parent pair (c,d) as (c||d, c||-d) or (d||c, d||-c) following the index bits
// from most significant to least. Output length 2^k*N + 2^(k-1).
seq_pair construct1(const sequence& seed_a, const sequence& seed_b, tree_address addr);

// Depth-1 pair (r = 0 or 1): length 2N+1, end-zone width N+1, and per-shift
// sums equal to 2*(aacf(a,tau) + aacf(b,tau)) inside [1,N], zero beyond.
seq_pair theorem1_pair(const sequence& seed_a, const sequence& seed_b, int r);

// Same machinery with seed lengths (N-1, N); output length 2N-1.
seq_pair theorem1_variant_2Nminus1(const sequence& seed_a, const sequence& seed_b);

// Depth-k pair, k >= 2: length 2^k*N + 2^(k-1), end-zone width L - N, sums
// scaled by 2^k inside [1,N].
seq_pair theorem2_pair(const sequence& seed_a, const sequence& seed_b, int k, std::uint64_t r);

// Product composition: (c,d) of length N1 with (e,f) of length N2 gives
//   u = e (x) (c+d)/2 + reverse(f) (x) (d-c)/2
//   v = f (x) (c+d)/2 - reverse(e) (x) (d-c)/2
// of length N1*N2; end-zone width N1*Z2 - N1 + Z1. Integer arithmetic
// throughout; every output element is asserted to be +-1.
seq_pair turyn_product(const seq_pair& zcp, const seq_pair& gcp_or_zcp);

// Orientation of the emitted pair:
//   canonical - deterministic composition of the base pairs (lengths 1, 10,
//               26) by ascending-size products, then concatenation doubling
//               (x||y, x||-y) applied a times outermost;
//   product   - (e, -reverse(f)) of the canonical pair, the orientation under
//               which the published product artifacts were generated.
enum class gcp_orientation { canonical, product };

seq_pair gcp_factory(const golay_number& n, gcp_orientation o = gcp_orientation::canonical);
seq_pair gcp_factory(std::int64_t n, gcp_orientation o = gcp_orientation::canonical);

// From a length-N complementary pair (x,y): ((x with x_0 deleted)||y, ...||-y),
// an optimal odd pair of length 2N-1 with end-zone width N. Requires N >= 2.
seq_pair tcp1_pair(const golay_number& n);

// (x||(lambda||y), x||-(lambda||y)): optimal odd pair of length 2N+1, width N+1.
seq_pair tcp2_pair(const golay_number& n, int lambda);

// (x||(y||lambda), x||-(y||-lambda)): optimal Type-I odd pair of length 2N+1.
seq_pair type1_obzcp_pair(const golay_number& n, int lambda);

}  // namespace zcp

#pragma once

#include "zcp/sequence.hpp"

#include <cstdint>
#include <string>

namespace zcp {

struct pmepr_report {
    double pmepr_first = 0.0;
    double pmepr_second = 0.0;
    double pmepr_pair = 0.0;  // max of the two members
    double bound = 0.0;       // 2 + (2/L) * sum of out-of-phase |rho_c + rho_d|
    int oversampling_factor = 0;
    std::size_t length = 0;
};

// Squared envelope |S_c(t)|^2 sampled at t = m/(O*L) for m = 0..O*L-1, i.e.
// the squared magnitudes of the O*L-point DFT of c zero-padded to that length.
// The carrier frequency only contributes a global phase and is dropped.
std::vector<double> envelope_power(const sequence& c, int oversampling);

// Direct summation of |S_c(t)|^2 at an arbitrary t (period 1).
double envelope_power_at(const sequence& c, double t);

// Peak-to-mean envelope power ratio: (1/L) * sup |S_c(t)|^2, the sup taken
// over the oversampled grid, optionally sharpened by golden-section ascent in
// the two grid cells adjacent to the discrete peak.
double pmepr(const sequence& c, int oversampling = 128, bool refine = true);

// Evaluates both members and the analytical correlation-sum bound.
pmepr_report pmepr_pair(const seq_pair& p, int oversampling = 128, bool refine = true);

// 2 + 4/(2N+1) * sum_{tau=1..N} |rho_a(tau)+rho_b(tau)| for seeds of lengths
// (N, N+1); exactly the correlation-sum bound of the pair they concatenate to.
double theorem7_bound(const sequence& a, const sequence& b);

// 2 + (2/N1) * sum over the out-of-zone shifts of |rho_c + rho_d|; bounds the
// PMEPR of every product of (c,d) with a Golay pair.
double theorem8_bound(const seq_pair& p);

struct table4_row {
    std::int64_t n2 = 0;
    pmepr_report fam3;   // product of (+++, +--) with the order-n2 Golay pair
    pmepr_report fam14;  // product of the optimal length-14 pair with the same
    double bound3 = 0.0;   // seed bound for the length-3 family (row constant)
    double bound14 = 0.0;  // seed bound for the length-14 family (row constant)
};

// One row per Golay number n2 <= max_n2, rows computed in parallel. With
// refine=false and a small factor the grid estimate reproduces the historical
// published figures; the refined default is the accurate estimator.
std::vector<table4_row> table4(std::int64_t max_n2, int oversampling = 128, bool refine = true,
                               int threads = 0);

// CSV rendering, fixed 4 decimals: N2,pmepr_u3,pmepr_v3,pmepr_u14,pmepr_v14,bound3,bound14
std::string table4_csv(const std::vector<table4_row>& rows);

}  // namespace zcp

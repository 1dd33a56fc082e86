#pragma once

#include "zcp/correlation.hpp"

#include <string>

namespace zcp {

// Measured zone widths and optimality verdicts for an equal-length pair.
// Conventions:
//   - type2_zcz = N - (largest shift with nonzero sum), N if all sums vanish;
//   - type1_zcz = smallest shift with nonzero sum, N if all sums vanish;
//   - is_gcp <=> both widths equal N;
//   - out_of_zone_max = max |sums| over shifts 1..N-type2_zcz (0 for a GCP).
struct zcp_classification {
    std::int64_t length = 0;
    std::vector<std::int64_t> profile;  // signed sums, shift 0..N-1
    std::int64_t type2_zcz = 0;
    std::int64_t type1_zcz = 0;
    bool is_gcp = false;
    std::int64_t out_of_zone_max = 0;
    bool z_optimal_type2 = false;
    bool optimal_type2 = false;
    bool z_optimal_type1 = false;
    bool optimal_type1 = false;
    std::string note;  // informational, e.g. "bound not applicable"
};

std::int64_t type2_zcz_width(const seq_pair& p);
std::int64_t type1_zcz_width(const seq_pair& p);
bool is_gcp(const seq_pair& p);

zcp_classification classify(const seq_pair& p);

// Same verdicts from an already computed signed profile (length n).
zcp_classification classify_profile(std::int64_t n, const std::vector<std::int64_t>& sums);

}  // namespace zcp

#pragma once

#include "zcp/sequence.hpp"

namespace zcp {

// Aperiodic cross-correlation at shift tau: sum over the overlap of c_k * d_{k+tau}.
// Defined for any integer tau (negative shifts mirror the roles); zero once the
// windows no longer overlap. Exact integer arithmetic.
std::int64_t accf(const sequence& c, const sequence& d, std::int64_t tau);

// Autocorrelation specialization, accf(c, c, tau).
std::int64_t aacf(const sequence& c, std::int64_t tau);

// Signed per-shift sums aacf(first,tau) + aacf(second,tau) for tau = 0..N-1.
// Requires equal lengths.
std::vector<std::int64_t> pair_profile(const sequence& a, const sequence& b);
std::vector<std::int64_t> pair_profile(const seq_pair& p);

std::vector<std::int64_t> abs_profile(const std::vector<std::int64_t>& sums);

}  // namespace zcp

#include "zcp/analysis.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zcp {

namespace {

std::int64_t last_nonzero_shift(const std::vector<std::int64_t>& sums) {
    for (std::int64_t tau = static_cast<std::int64_t>(sums.size()) - 1; tau >= 1; --tau) {
        if (sums[static_cast<std::size_t>(tau)] != 0) return tau;
    }
    return 0;  // no nonzero shift
}

std::int64_t first_nonzero_shift(const std::vector<std::int64_t>& sums) {
    for (std::int64_t tau = 1; tau < static_cast<std::int64_t>(sums.size()); ++tau) {
        if (sums[static_cast<std::size_t>(tau)] != 0) return tau;
    }
    return 0;
}

void append_note(std::string& note, const char* msg) {
    if (!note.empty()) note += "; ";
    note += msg;
}

}  // namespace

std::int64_t type2_zcz_width(const seq_pair& p) {
    auto sums = pair_profile(p);
    std::int64_t n = static_cast<std::int64_t>(sums.size());
    std::int64_t t = last_nonzero_shift(sums);
    return t == 0 ? n : n - t;
}

std::int64_t type1_zcz_width(const seq_pair& p) {
    auto sums = pair_profile(p);
    std::int64_t n = static_cast<std::int64_t>(sums.size());
    std::int64_t t = first_nonzero_shift(sums);
    return t == 0 ? n : t;
}

bool is_gcp(const seq_pair& p) {
    auto sums = pair_profile(p);
    return last_nonzero_shift(sums) == 0;
}

zcp_classification classify_profile(std::int64_t n, const std::vector<std::int64_t>& sums) {
    if (n < 1 || static_cast<std::int64_t>(sums.size()) != n)
        throw std::invalid_argument("profile length must equal the pair length");

    zcp_classification r;
    r.length = n;
    r.profile = sums;

    std::int64_t t_last = last_nonzero_shift(sums);
    std::int64_t t_first = first_nonzero_shift(sums);
    r.is_gcp = (t_last == 0);
    r.type2_zcz = r.is_gcp ? n : n - t_last;
    r.type1_zcz = r.is_gcp ? n : t_first;

    for (std::int64_t tau = 1; tau <= n - r.type2_zcz; ++tau) {
        std::int64_t m = std::llabs(sums[static_cast<std::size_t>(tau)]);
        if (m > r.out_of_zone_max) r.out_of_zone_max = m;
    }

    bool odd = (n % 2) != 0;
    if (odd && !r.is_gcp) {
        // Proven width ceiling for odd lengths; exceeding it means a bug.
        if (r.type2_zcz > (n + 1) / 2 || r.type1_zcz > (n + 1) / 2)
            throw std::logic_error("odd-length zone width exceeds the proven (N+1)/2 ceiling");
    }
    if (!odd && !r.is_gcp && r.type1_zcz > n - 2) {
        // Even-length type-I widths above N-2 are not known to exist; record, don't clip.
        append_note(r.note, "type-I width exceeds the known even-length ceiling N-2");
    }

    r.z_optimal_type2 = r.is_gcp || (odd ? r.type2_zcz == (n + 1) / 2 : r.type2_zcz == n - 1);
    r.z_optimal_type1 = r.is_gcp || (odd ? r.type1_zcz == (n + 1) / 2 : r.type1_zcz == n - 2);

    auto abs_at = [&](std::int64_t tau) { return std::llabs(sums[static_cast<std::size_t>(tau)]); };

    if (odd) {
        bool floor2 = true;
        for (std::int64_t tau = 1; tau <= (n - 1) / 2; ++tau)
            if (abs_at(tau) != 2) { floor2 = false; break; }
        r.optimal_type2 = r.z_optimal_type2 && floor2;

        bool floor1 = true;
        for (std::int64_t tau = (n + 1) / 2; tau <= n - 1; ++tau)
            if (abs_at(tau) != 2) { floor1 = false; break; }
        r.optimal_type1 = r.z_optimal_type1 && floor1;

        // Out-of-zone magnitudes below 2 inside a Z-optimal zone would disprove
        // the known floors; treat as an internal failure.
        if (r.z_optimal_type2 && !r.is_gcp) {
            for (std::int64_t tau = 1; tau <= (n - 1) / 2; ++tau)
                if (abs_at(tau) < 2)
                    throw std::logic_error("magnitude below the odd-length out-of-zone floor");
        }
    } else {
        r.optimal_type2 = r.z_optimal_type2 && !r.is_gcp && abs_at(1) == 4;
        // A length-2 pair tops out at |sums(1)| = 2, so the floor argument
        // only binds from length 4 up.
        if (n >= 4 && r.z_optimal_type2 && !r.is_gcp && abs_at(1) < 4)
            throw std::logic_error("shift-1 magnitude below the even-length out-of-zone floor");

        if (!r.is_gcp && r.type1_zcz < n / 2) {
            r.optimal_type1 = false;
            append_note(r.note, "bound not applicable");
        } else {
            r.optimal_type1 =
                r.z_optimal_type1 && !r.is_gcp && abs_at(r.type1_zcz) == 4;
        }
    }

    // A GCP meets no out-of-zone floor (there is no out-of-zone shift), so the
    // "optimal" verdicts stay false for GCPs except the vacuous length-1 case.
    if (n == 1) {
        r.optimal_type2 = r.optimal_type1 = true;
    }

    return r;
}

zcp_classification classify(const seq_pair& p) {
    auto sums = pair_profile(p);
    return classify_profile(static_cast<std::int64_t>(sums.size()), sums);
}

}  // namespace zcp

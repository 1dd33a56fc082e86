#include "zcp/pmepr.hpp"

#include "zcp/analysis.hpp"
#include "zcp/constructions.hpp"
#include "zcp/correlation.hpp"
#include "zcp/golden.hpp"
#include "zcp/threads.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zcp {

namespace {

void check_oversampling(int oversampling) {
    if (oversampling < 2) throw std::invalid_argument("oversampling factor must be at least 2");
}

// Largest grid sample of |S|^2 together with its index.
std::pair<double, std::size_t> grid_peak(const std::vector<double>& samples) {
    std::size_t best = 0;
    for (std::size_t m = 1; m < samples.size(); ++m)
        if (samples[m] > samples[best]) best = m;
    return {samples[best], best};
}

// Golden-section ascent of |S(t)|^2 on [lo, hi]; the bracket spans the two
// grid cells around the discrete peak, where the envelope is unimodal.
double refine_peak(const sequence& c, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = envelope_power_at(c, x1);
    double f2 = envelope_power_at(c, x2);
    for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = envelope_power_at(c, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = envelope_power_at(c, x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

std::vector<double> envelope_power(const sequence& c, int oversampling) {
    check_oversampling(oversampling);
    const std::size_t len = c.size();
    const std::size_t m_total = len * static_cast<std::size_t>(oversampling);
    const auto elems = c.elems();
    std::vector<double> out(m_total);
    for (std::size_t m = 0; m < m_total; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(m_total);
        const std::complex<double> w(std::cos(theta), std::sin(theta));
        // Horner evaluation of sum_k c_k w^k keeps one multiply per term.
        std::complex<double> s(static_cast<double>(elems[len - 1]), 0.0);
        for (std::size_t k = len - 1; k-- > 0;) s = s * w + static_cast<double>(elems[k]);
        out[m] = std::norm(s);
    }
    return out;
}

double envelope_power_at(const sequence& c, double t) {
    const double theta = 2.0 * std::numbers::pi * t;
    const std::complex<double> w(std::cos(theta), std::sin(theta));
    const std::size_t len = c.size();
    std::complex<double> s(static_cast<double>(c.at(len - 1)), 0.0);
    for (std::size_t k = len - 1; k-- > 0;) s = s * w + static_cast<double>(c.at(k));
    return std::norm(s);
}

double pmepr(const sequence& c, int oversampling, bool refine) {
    check_oversampling(oversampling);
    const auto samples = envelope_power(c, oversampling);
    auto [peak, at] = grid_peak(samples);
    if (refine && c.size() > 1) {
        const double m_total = static_cast<double>(samples.size());
        const double lo = (static_cast<double>(at) - 1.0) / m_total;
        const double hi = (static_cast<double>(at) + 1.0) / m_total;
        peak = std::max(peak, refine_peak(c, lo, hi));
    }
    return peak / static_cast<double>(c.size());
}

pmepr_report pmepr_pair(const seq_pair& p, int oversampling, bool refine) {
    check_oversampling(oversampling);
    const auto sums = pair_profile(p.first, p.second);  // rejects unequal lengths
    std::int64_t total = 0;
    for (std::size_t tau = 1; tau < sums.size(); ++tau) total += std::abs(sums[tau]);
    pmepr_report report;
    report.length = p.first.size();
    report.oversampling_factor = oversampling;
    report.pmepr_first = pmepr(p.first, oversampling, refine);
    report.pmepr_second = pmepr(p.second, oversampling, refine);
    report.pmepr_pair = std::max(report.pmepr_first, report.pmepr_second);
    report.bound = 2.0 + (2.0 * static_cast<double>(total)) / static_cast<double>(report.length);
    return report;
}

double theorem7_bound(const sequence& a, const sequence& b) {
    if (b.size() != a.size() + 1)
        throw std::invalid_argument("seed lengths must be N and N+1");
    const auto n = static_cast<std::int64_t>(a.size());
    std::int64_t total = 0;
    for (std::int64_t tau = 1; tau <= n; ++tau) total += std::abs(aacf(a, tau) + aacf(b, tau));
    return 2.0 + (4.0 * static_cast<double>(total)) / static_cast<double>(2 * n + 1);
}

double theorem8_bound(const seq_pair& p) {
    const auto sums = pair_profile(p.first, p.second);
    const auto n1 = p.first.size();
    // The sum runs over shifts 1 .. N1-Z1, i.e. up to the last nonzero entry.
    std::int64_t last = 0, total = 0;
    for (std::size_t h = 1; h < sums.size(); ++h)
        if (sums[h] != 0) last = static_cast<std::int64_t>(h);
    for (std::int64_t h = 1; h <= last; ++h) total += std::abs(sums[static_cast<std::size_t>(h)]);
    return 2.0 + (2.0 * static_cast<double>(total)) / static_cast<double>(n1);
}

std::vector<table4_row> table4(std::int64_t max_n2, int oversampling, bool refine, int threads) {
    check_oversampling(oversampling);
    const auto numbers = golay_number::values_up_to(max_n2);
    const seq_pair seed3 = golden::base3_pair();
    const seq_pair seed14 = golden::base14_pair();
    const double bound3 = theorem8_bound(seed3);
    const double bound14 = theorem8_bound(seed14);

    std::vector<table4_row> rows(numbers.size());
    auto fill_row = [&](std::size_t i) {
        const std::int64_t n2 = numbers[i];
        const seq_pair gcp = gcp_factory(n2, gcp_orientation::product);
        table4_row row;
        row.n2 = n2;
        row.fam3 = pmepr_pair(turyn_product(seed3, gcp), oversampling, refine);
        row.fam14 = pmepr_pair(turyn_product(seed14, gcp), oversampling, refine);
        row.bound3 = bound3;
        row.bound14 = bound14;
        rows[i] = row;
    };

    const int workers = std::min<int>(thread_count(threads), static_cast<int>(numbers.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < numbers.size(); ++i) fill_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= numbers.size()) return;
                fill_row(i);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::string table4_csv(const std::vector<table4_row>& rows) {
    std::ostringstream out;
    out << "N2,pmepr_u3,pmepr_v3,pmepr_u14,pmepr_v14,bound3,bound14\n";
    out.setf(std::ios::fixed);
    out.precision(4);
    for (const auto& row : rows) {
        out << row.n2 << ',' << row.fam3.pmepr_first << ',' << row.fam3.pmepr_second << ','
            << row.fam14.pmepr_first << ',' << row.fam14.pmepr_second << ',' << row.bound3 << ','
            << row.bound14 << '\n';
    }
    return out.str();
}

}  // namespace zcp

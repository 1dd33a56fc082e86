#include "zcp/pmepr.hpp"

#include "zcp/constructions.hpp"
#include "zcp/correlation.hpp"
#include "zcp/golden.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace zcp;

namespace {

sequence random_seq(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    for (auto& e : v) e = (rng() & 1) ? 1 : -1;
    return sequence(v);
}

// Reference evaluation with an explicit carrier index offset; the offset must
// not change the squared magnitude.
double offset_envelope(const sequence& c, double t, int carrier) {
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t k = 0; k < c.size(); ++k) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(k + carrier) * t;
        s += std::complex<double>(static_cast<double>(c.at(k)), 0.0) *
             std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return std::norm(s);
}

}  // namespace

TEST_CASE("envelope grid basics") {
    const auto c = sequence::parse("++-+-++");
    const int oversampling = 8;
    const auto grid = envelope_power(c, oversampling);
    REQUIRE(grid.size() == static_cast<std::size_t>(oversampling * c.size()));

    // t = 0 collapses to the plain element sum
    double acc = 0;
    for (std::int64_t k = 0; k < c.size(); ++k) acc += c.at(k);
    CHECK(grid[0] == doctest::Approx(acc * acc).epsilon(1e-12));

    // all-ones peaks at L^2
    const auto ones_grid = envelope_power(sequence::ones(11), 4);
    CHECK(ones_grid[0] == doctest::Approx(121.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(envelope_power(c, 1), "oversampling factor must be at least 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(pmepr(c, 0), std::invalid_argument);
}

TEST_CASE("grid mean obeys Parseval") {
    std::mt19937 rng(23);
    for (const int n : {1, 2, 7, 16, 33, 100}) {
        const auto c = random_seq(rng, n);
        for (const int oversampling : {2, 4, 8}) {
            const auto grid = envelope_power(c, oversampling);
            double mean = 0;
            for (const double g : grid) mean += g;
            mean /= static_cast<double>(grid.size());
            CHECK(mean == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
        }
    }
}

TEST_CASE("point evaluation matches the grid and ignores the carrier index") {
    std::mt19937 rng(29);
    const auto c = random_seq(rng, 21);
    const int oversampling = 8;
    const auto grid = envelope_power(c, oversampling);
    const auto m_total = static_cast<double>(grid.size());
    for (std::size_t m = 0; m < grid.size(); m += 5) {
        const double t = static_cast<double>(m) / m_total;
        CHECK(envelope_power_at(c, t) == doctest::Approx(grid[m]).epsilon(1e-10));
    }
    for (const double t : {0.0, 0.123456, 0.5, 0.987}) {
        const double base = envelope_power_at(c, t);
        CHECK(offset_envelope(c, t, 17) == doctest::Approx(base).epsilon(1e-10));
        CHECK(offset_envelope(c, t, -300) == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("known single-sequence peaks") {
    CHECK(pmepr(sequence::parse("+++")) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(pmepr(sequence::parse("+--")) == doctest::Approx(5.0 / 3.0).epsilon(1e-6));
    CHECK(pmepr(sequence::parse("+")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("published length-13 example") {
    const auto p = theorem1_pair(sequence::parse("+++++-"), sequence::parse("++--+-+"), 0);
    REQUIRE(p.first.size() == 13);
    const auto r = pmepr_pair(p);
    CHECK(r.pmepr_first == doctest::Approx(2.427587).epsilon(2e-6));
    // the historical figure repeats 2.4276 for the second member; the actual
    // peak is a bit higher
    CHECK(r.pmepr_second == doctest::Approx(2.469200).epsilon(2e-6));
    CHECK(r.pmepr_pair == doctest::Approx(2.469200).epsilon(2e-6));
    CHECK(r.bound == doctest::Approx(2.0 + 24.0 / 13.0).epsilon(1e-12));
    CHECK(r.length == 13);
}

TEST_CASE("pair peaks respect the correlation-sum bound") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 24);
        seq_pair p{random_seq(rng, n), random_seq(rng, n)};
        const auto r = pmepr_pair(p, 32);
        CHECK(r.pmepr_pair <= r.bound + 1e-6);
        CHECK(r.pmepr_first >= 1.0 - 1e-9);
        CHECK(r.pmepr_first <= static_cast<double>(n) + 1e-9);
        CHECK(r.pmepr_pair == std::max(r.pmepr_first, r.pmepr_second));
    }
}

TEST_CASE("perfect pairs stay below twice the mean") {
    for (const auto n : {8, 10, 20, 26}) {
        const auto p = gcp_factory(n);
        const auto r = pmepr_pair(p, 64);
        CHECK(r.bound == 2.0);  // no out-of-zone sums at all
        CHECK(r.pmepr_first <= 2.0 + 1e-6);
        CHECK(r.pmepr_second <= 2.0 + 1e-6);
    }
}

TEST_CASE("seed bound equals the constructed pair bound bit for bit") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto a = random_seq(rng, n);
        const auto b = random_seq(rng, n + 1);
        const auto direct = theorem7_bound(a, b);
        const auto via_pair = pmepr_pair(theorem1_pair(a, b, 0), 2, false).bound;
        CHECK(direct == via_pair);  // identical arithmetic, not just close
    }
    CHECK(theorem7_bound(sequence::parse("+"), sequence::parse("++")) ==
          doctest::Approx(2.0 + 4.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(theorem7_bound(sequence::parse("++"), sequence::parse("++")),
                         "seed lengths must be N and N+1", std::invalid_argument);
}

TEST_CASE("family bound from the base pair") {
    CHECK(theorem8_bound(golden::base3_pair()) == doctest::Approx(2.0 + 4.0 / 3.0).epsilon(1e-15));
    CHECK(theorem8_bound(golden::base14_pair()) == doctest::Approx(18.0 / 7.0).epsilon(1e-15));
    CHECK(theorem8_bound(gcp_factory(10)) == 2.0);

    // the bound covers every product of the base with a perfect pair
    for (const auto n2 : {4, 10}) {
        const auto g = gcp_factory(n2, gcp_orientation::product);
        const auto p3 = pmepr_pair(turyn_product(golden::base3_pair(), g));
        CHECK(p3.pmepr_pair <= theorem8_bound(golden::base3_pair()) + 1e-6);
        const auto p14 = pmepr_pair(turyn_product(golden::base14_pair(), g));
        CHECK(p14.pmepr_pair <= theorem8_bound(golden::base14_pair()) + 1e-6);
    }
}

TEST_CASE("raw grid peak is monotone in the oversampling factor") {
    std::mt19937 rng(41);
    const auto c = random_seq(rng, 19);
    for (int oversampling = 2; oversampling <= 32; oversampling *= 2)
        CHECK(pmepr(c, oversampling, false) <= pmepr(c, 2 * oversampling, false) + 1e-12);
}

TEST_CASE("refined peaks are stable under grid doubling") {
    // every sequence appearing in the published product table
    for (const auto n2 : golay_number::values_up_to(80)) {
        const auto g = gcp_factory(n2, gcp_orientation::product);
        for (const auto* base : {&golden::base3_pair(), &golden::base14_pair()}) {
            const auto p = turyn_product(*base, g);
            for (const auto& member : {p.first, p.second}) {
                const double fine = pmepr(member, 256, true);
                const double coarse = pmepr(member, 128, true);
                CHECK(std::abs(fine - coarse) < 1e-3);
            }
        }
    }
}

TEST_CASE("low-resolution grid reproduces the published product table") {
    const auto rows = table4(80, 8, false);
    const auto& truth = golden::table4();
    REQUIRE(rows.size() == truth.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n2 == truth[i].n2);
        CHECK(rows[i].fam3.pmepr_first == doctest::Approx(truth[i].u3).epsilon(6e-5));
        CHECK(rows[i].fam3.pmepr_second == doctest::Approx(truth[i].v3).epsilon(6e-5));
        const double u14 = truth[i].erratum_fam14 ? truth[i].corrected_u14 : truth[i].u14;
        const double v14 = truth[i].erratum_fam14 ? truth[i].corrected_v14 : truth[i].v14;
        CHECK(rows[i].fam14.pmepr_first == doctest::Approx(u14).epsilon(6e-5));
        CHECK(rows[i].fam14.pmepr_second == doctest::Approx(v14).epsilon(6e-5));
        CHECK(rows[i].bound3 == doctest::Approx(2.0 + 4.0 / 3.0).epsilon(1e-15));
        CHECK(rows[i].bound14 == doctest::Approx(18.0 / 7.0).epsilon(1e-15));
    }
}

TEST_CASE("csv rendering") {
    const auto rows = table4(4, 8, false);
    REQUIRE(rows.size() == 3);  // lengths 1, 2, 4
    const auto csv = table4_csv(rows);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "N2,pmepr_u3,pmepr_v3,pmepr_u14,pmepr_v14,bound3,bound14");
    int data_lines = 0;
    while (std::getline(in, line)) {
        ++data_lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
        // every numeric field carries exactly four decimals
        std::size_t pos = line.find(',');
        while (pos != std::string::npos) {
            const auto next = line.find(',', pos + 1);
            const auto field = line.substr(pos + 1, next - pos - 1);
            const auto dot = field.find('.');
            REQUIRE(dot != std::string::npos);
            CHECK(field.size() - dot - 1 == 4);
            pos = next;
        }
    }
    CHECK(data_lines == 3);
}

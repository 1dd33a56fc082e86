#include "zcp/analysis.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace zcp;

namespace {

sequence random_seq(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    for (auto& e : v) e = (rng() & 1) ? 1 : -1;
    return sequence(v);
}

}  // namespace

TEST_CASE("widths of the known length-14 optimal pair") {
    seq_pair p{sequence::parse("+-+++++-+++--+"), sequence::parse("+-++++-----++-")};
    CHECK(type2_zcz_width(p) == 13);
    CHECK(type1_zcz_width(p) == 1);
    CHECK_FALSE(is_gcp(p));

    const auto c = classify(p);
    CHECK(c.length == 14);
    CHECK(c.type2_zcz == 13);
    CHECK(c.z_optimal_type2);
    CHECK(c.optimal_type2);  // zone is maximal and |sums(1)| = 4
    CHECK(c.out_of_zone_max == 4);
    CHECK_FALSE(c.optimal_type1);
    CHECK(c.note == "bound not applicable");  // type-I zone too small to judge
}

TEST_CASE("a Golay pair classifies as GCP with full-width zones") {
    seq_pair p{sequence::parse("++-+"), sequence::parse("+++-")};
    REQUIRE(is_gcp(p));
    const auto c = classify(p);
    CHECK(c.type2_zcz == 4);
    CHECK(c.type1_zcz == 4);
    CHECK(c.is_gcp);
    CHECK(c.out_of_zone_max == 0);
    CHECK(c.z_optimal_type2);
    CHECK(c.z_optimal_type1);
    // a perfect pair has no out-of-zone shifts, so the floor-based "optimal"
    // verdicts do not apply
    CHECK_FALSE(c.optimal_type2);
    CHECK_FALSE(c.optimal_type1);
}

TEST_CASE("length-1 pair is vacuously optimal") {
    const auto c = classify({sequence::parse("+"), sequence::parse("-")});
    CHECK(c.is_gcp);
    CHECK(c.optimal_type2);
    CHECK(c.optimal_type1);
}

TEST_CASE("synthetic odd-length optimal profile") {
    // length 7, zone on shifts 4..6, magnitudes 2 outside
    const auto c = classify_profile(7, {14, 2, -2, 2, 0, 0, 0});
    CHECK(c.type2_zcz == 4);
    CHECK(c.type1_zcz == 1);
    CHECK(c.z_optimal_type2);
    CHECK(c.optimal_type2);
    CHECK_FALSE(c.z_optimal_type1);
    CHECK(c.out_of_zone_max == 2);
}

TEST_CASE("synthetic odd-length type-I optimal profile") {
    // length 7, in-phase zone of width 4, magnitudes 2 on shifts 4..6
    const auto c = classify_profile(7, {14, 0, 0, 0, 2, -2, 2});
    CHECK(c.type1_zcz == 4);
    CHECK(c.z_optimal_type1);
    CHECK(c.optimal_type1);
    CHECK(c.type2_zcz == 1);
    CHECK_FALSE(c.z_optimal_type2);
}

TEST_CASE("impossible profiles are rejected as internal failures") {
    // odd length, type-II zone wider than (N+1)/2
    CHECK_THROWS_AS(classify_profile(7, {14, 2, 0, 0, 0, 0, 0}), std::logic_error);
    // odd length, Z-optimal zone but an out-of-zone magnitude below 2
    CHECK_THROWS_AS(classify_profile(7, {14, 0, 2, 2, 0, 0, 0}), std::logic_error);
    // even length, Z-optimal type-II zone with |sums(1)| = 2 instead of >= 4
    CHECK_THROWS_AS(classify_profile(6, {12, 2, 0, 0, 0, 0}), std::logic_error);
    // profile length disagreeing with the stated length
    CHECK_THROWS_AS(classify_profile(3, {6, 0}), std::invalid_argument);
}

TEST_CASE("even-length type-I width beyond N-2 is noted, not clipped") {
    const auto c = classify_profile(6, {12, 0, 0, 0, 0, 4});
    CHECK(c.type1_zcz == 5);
    CHECK(c.note.find("N-2") != std::string::npos);
    CHECK_FALSE(c.z_optimal_type1);
}

TEST_CASE("even-length Z-optimal-but-not-optimal profile") {
    // |sums(1)| = 8 with a maximal zone: Z-optimal, but misses the magnitude floor
    const auto c = classify_profile(8, {16, 8, 0, 0, 0, 0, 0, 0});
    CHECK(c.z_optimal_type2);
    CHECK_FALSE(c.optimal_type2);
    CHECK(c.out_of_zone_max == 8);
}

TEST_CASE("classification verdicts are consistent on random pairs") {
    std::mt19937 rng(0);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        seq_pair p{random_seq(rng, n), random_seq(rng, n)};
        const auto c = classify(p);  // must never throw on a genuine pair
        CHECK(c.type2_zcz >= 1);
        CHECK(c.type2_zcz <= n);
        CHECK(c.type1_zcz >= 1);
        CHECK(c.type1_zcz <= n);
        CHECK(c.is_gcp == (c.type2_zcz == n && c.type1_zcz == n));
        if (n % 2 == 1 && !c.is_gcp) {
            CHECK(c.type2_zcz <= (n + 1) / 2);
            CHECK(c.type1_zcz <= (n + 1) / 2);
        }
        if (c.optimal_type2) CHECK(c.z_optimal_type2);
        if (c.optimal_type1) CHECK(c.z_optimal_type1);
        if (!c.is_gcp) {
            // out_of_zone_max covers exactly the shifts outside the end zone
            std::int64_t expect = 0;
            for (std::int64_t tau = 1; tau <= n - c.type2_zcz; ++tau)
                expect = std::max(expect, std::abs(c.profile[static_cast<std::size_t>(tau)]));
            CHECK(c.out_of_zone_max == expect);
            CHECK(c.out_of_zone_max >= 2);  // equal lengths force even sums
        }
    }
}

TEST_CASE("classify agrees with classify_profile") {
    std::mt19937 rng(1);
    seq_pair p{random_seq(rng, 20), random_seq(rng, 20)};
    const auto via_pair = classify(p);
    const auto via_profile = classify_profile(20, pair_profile(p));
    CHECK(via_pair.profile == via_profile.profile);
    CHECK(via_pair.type2_zcz == via_profile.type2_zcz);
    CHECK(via_pair.optimal_type2 == via_profile.optimal_type2);
}

#pragma once

#include "zcp/sequence.hpp"

namespace zcp::golden {

// Reference pairs of length up to 30 with their published magnitude profiles.
// Two rows carry printing errata in the zero-shift entry; for those, `erratum`
// is set and `corrected_profile` holds the actual measured magnitudes.
struct table2_row {
    std::int64_t n;
    const char* type_label;  // label as printed
    const char* a;
    const char* b;
    std::vector<std::int64_t> published_profile;  // magnitudes as printed
    bool erratum;
    std::vector<std::int64_t> corrected_profile;  // actual magnitudes
    const char* note;                             // nonempty when something is off in print
};
const std::vector<table2_row>& table2();

// Seed pairs (lengths N and N+1) whose per-shift sums all have magnitude 1.
struct table3_row {
    int n;
    const char* a;
    const char* b;
};
const std::vector<table3_row>& table3();

// Published envelope-peak table for the two product families. The values were
// generated on a uniform 8x-oversampled grid without refinement; one row of
// the length-14 family is unattainable as printed and carries corrections.
struct table4_row {
    std::int64_t n2;
    double u3, v3, u14, v14;  // as printed
    bool erratum_fam14;
    double corrected_u14, corrected_v14;
};
const std::vector<table4_row>& table4();

// Product-family bases: the length-3 pair (+++, +--) and the optimal
// length-14 pair. The length-14 pair is also the 23rd golden pair of the
// reference suite (profile 28,4,0...).
const seq_pair& base3_pair();
const seq_pair& base14_pair();

// Printed form of the length-3 x length-10 product artifact. Its second
// member appears reversed in print; reversal changes neither the profile nor
// the envelope peak.
const seq_pair& product30_pair();

}  // namespace zcp::golden

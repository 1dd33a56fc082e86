#include "zcp/golden.hpp"

#include <initializer_list>
#include <utility>

namespace zcp::golden {

namespace {

// Run-length profile builder: {{30,1},{2,7},{0,7}} -> (30,2,2,...,0,...).
std::vector<std::int64_t> rle(std::initializer_list<std::pair<std::int64_t, std::int64_t>> runs) {
    std::vector<std::int64_t> out;
    for (auto [value, count] : runs) out.insert(out.end(), static_cast<std::size_t>(count), value);
    return out;
}

}  // namespace

const std::vector<table2_row>& table2() {
    static const std::vector<table2_row> rows = [] {
        std::vector<table2_row> t;
        auto row = [&](std::int64_t n, const char* label, const char* a, const char* b,
                       std::vector<std::int64_t> published, const char* note = "") {
            t.push_back({n, label, a, b, published, false, published, note});
        };
        auto erratum_row = [&](std::int64_t n, const char* label, const char* a, const char* b,
                               std::vector<std::int64_t> published,
                               std::vector<std::int64_t> corrected, const char* note) {
            t.push_back({n, label, a, b, std::move(published), true, std::move(corrected), note});
        };

        row(2, "GCP", "++", "+-", rle({{4, 1}, {0, 1}}));
        row(3, "Optimal OB-ZCP", "+++", "++-", rle({{6, 1}, {2, 1}, {0, 1}}));
        row(4, "GCP", "+++-", "++-+", rle({{8, 1}, {0, 3}}));
        row(5, "Optimal OB-ZCP", "---++", "--+--", rle({{10, 1}, {2, 2}, {0, 2}}));
        row(6, "Optimal EB-ZCP", "++++--", "+++-++", rle({{12, 1}, {4, 1}, {0, 4}}));
        row(7, "Optimal OB-ZCP", "--+-+--", "--++-++", rle({{14, 1}, {2, 3}, {0, 3}}));
        row(8, "GCP", "+++-++-+", "+++---+-", rle({{16, 1}, {0, 7}}));
        row(9, "Optimal OB-ZCP", "+-+++++--", "+-++---++", rle({{18, 1}, {2, 4}, {0, 4}}));
        row(10, "GCP", "++-+-+--++", "++-+++++--", rle({{20, 1}, {0, 9}}));
        row(12, "Z-optimal EB-ZCP", "++++--+++-++", "++++-----+--", rle({{24, 1}, {8, 1}, {0, 10}}));
        row(14, "EB-ZCP", "--+-+----++-++", "--+-+--++--+--", rle({{28, 1}, {4, 3}, {0, 10}}));
        row(14, "Optimal EB-ZCP", "+-+++++-+++--+", "+-++++-----++-",
            rle({{28, 1}, {4, 1}, {0, 12}}),
            "worked optimal length-14 pair; also the base of the 14N product family");
        row(15, "Optimal OB-ZCP", "-++-+++++-+-+++", "-++-+++--+-+---",
            rle({{30, 1}, {2, 7}, {0, 7}}));
        row(16, "GCP", "+++-++-++++---+-", "+++-++-+---+++-+", rle({{32, 1}, {0, 15}}));
        row(17, "Optimal OB-ZCP", "-++++-+-+-++--+++", "-++++-+--+--++---",
            rle({{34, 1}, {2, 8}, {0, 8}}));
        row(18, "EB-ZCP", "+-+++++--+-++---++", "+-+++++---+--+++--",
            rle({{36, 1}, {4, 4}, {0, 13}}));
        erratum_row(19, "Optimal OB-ZCP", "+-+++++--++--+-+-++", "+-+++++----++-+-+--",
                    rle({{22, 1}, {2, 9}, {0, 9}}), rle({{38, 1}, {2, 9}, {0, 9}}),
                    "published zero-shift entry 22; the energy of a length-19 pair is 38");
        erratum_row(20, "GCP", "++-+-+--++++-+++++--", "++-+-+--++--+-----++",
                    rle({{20, 1}, {0, 9}}), rle({{40, 1}, {0, 19}}),
                    "published profile (20,0x9); a length-20 pair has zero-shift 40 and 19 zeros");
        row(21, "Optimal OB-ZCP", "-++-+-+++--++++++--++", "-++-+-+++-+------++--",
            rle({{42, 1}, {2, 10}, {0, 10}}));
        row(24, "Z-optimal EB-ZCP", "++++--+++-++++++-----+--", "++++--+++-++----+++++-++",
            rle({{48, 1}, {16, 1}, {0, 22}}));
        row(26, "GCP", "++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---",
            rle({{52, 1}, {0, 25}}));
        row(28, "Z-optimal EB-ZCP", "--+-+----++-++--+-+--++--+--", "--+-+----++-++++-+-++--++-++",
            rle({{56, 1}, {8, 3}, {0, 24}}),
            "printed label says Z-optimal, but the printed profile itself gives width 25, not 27");
        row(30, "Z-optimal EB-ZCP", "+-++-+-+-++--+-++--+---+++-++-",
            "+-++-+-+-++-+-+++-+-+++---+--+", rle({{60, 1}, {20, 1}, {0, 28}}));
        return t;
    }();
    return rows;
}

const std::vector<table3_row>& table3() {
    static const std::vector<table3_row> rows = {
        {5, "++++-", "++--+-"},
        {6, "+++++-", "++--+-+"},
        {11, "++++++-+--+", "+-+---+++--+"},
        {12, "++++++-++--+", "++----++-+-+-"},
        {13, "+----+++-++-+", "------++--+-+-"},
        {14, "--++++---+--+-", "++++-+++-+-+--+"},
        {17, "-+-+---+++++++--+", "+++--++-++-++++-+-"},
        {18, "--++--+-+-+++++---", "+++-++++-+-++-++--+"},
        {21, "--+--+-++---+-+++---+", "-++---------+++-+-+--+"},
        {22, "+++-+----+---++-+--++-", "+++-+-----+-+----++--+-"},
        {23, "+---+---+---++++-+-++-+", "++----+-++-++-----+---+-"},
        {24, "-+-----+-+--+++-+--+---+", "-+---+----++-++---+++++-+"},
    };
    return rows;
}

const std::vector<table4_row>& table4() {
    static const std::vector<table4_row> rows = [] {
        std::vector<table4_row> t;
        auto row = [&](std::int64_t n2, double u3, double v3, double u14, double v14) {
            t.push_back({n2, u3, v3, u14, v14, false, u14, v14});
        };
        row(1, 3.0000, 1.6667, 2.5714, 2.4119);
        row(2, 2.8452, 2.6667, 2.1373, 2.5137);
        row(4, 3.0000, 1.7387, 2.5714, 2.5102);
        row(8, 3.2545, 3.0740, 2.5243, 2.5456);
        row(10, 3.3333, 3.0200, 2.4851, 2.5570);
        row(16, 3.0312, 3.2919, 2.5714, 2.5102);
        row(20, 3.1834, 3.3159, 2.5669, 2.5549);
        row(26, 3.2902, 3.2291, 2.5542, 2.5545);
        // The printed length-14 values for this row are unattainable by any
        // length-32 complementary pair; corrections were recomputed under the
        // published grid convention.
        t.push_back({32, 3.3290, 3.1483, 2.5714, 2.5373, true, 2.5430, 2.5511});
        row(40, 3.3333, 3.0446, 2.5624, 2.5570);
        row(52, 3.3064, 3.3189, 2.5682, 2.5549);
        row(64, 3.2902, 3.3201, 2.5714, 2.5689);
        row(80, 3.2037, 3.2667, 2.5669, 2.5695);
        return t;
    }();
    return rows;
}

const seq_pair& base3_pair() {
    static const seq_pair p{sequence::parse("+++"), sequence::parse("+--")};
    return p;
}

const seq_pair& base14_pair() {
    static const seq_pair p{sequence::parse("+-+++++-+++--+"), sequence::parse("+-++++-----++-")};
    return p;
}

const seq_pair& product30_pair() {
    static const seq_pair p{sequence::parse("++++++---+++-+++++-++-+++--+--"),
                            sequence::parse("++-++---+++----++-------++++++")};
    return p;
}

}  // namespace zcp::golden

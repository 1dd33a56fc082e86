#include "zcp/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zcp {

namespace {

const char* kSeedLenMsg = "seed lengths must be N and N+1";

void require_seed_lengths(const sequence& a, const sequence& b) {
    if (b.size() != a.size() + 1) throw std::invalid_argument(kSeedLenMsg);
}

seq_pair double_pair(const seq_pair& p) {
    return {concat(p.first, p.second), concat(p.first, negate(p.second))};
}

const sequence& base10_first() {
    static const sequence s = sequence::parse("++-+-+--++");
    return s;
}
const sequence& base10_second() {
    static const sequence s = sequence::parse("++-+++++--");
    return s;
}
const sequence& base26_first() {
    static const sequence s = sequence::parse("++++-++--+-+-+--+-+++--+++");
    return s;
}
const sequence& base26_second() {
    static const sequence s = sequence::parse("++++-++--+-+++++-+---++---");
    return s;
}

}  // namespace

std::int64_t golay_number::value() const {
    std::int64_t v = 1;
    for (int i = 0; i < a; ++i) v *= 2;
    for (int i = 0; i < b; ++i) v *= 10;
    for (int i = 0; i < c; ++i) v *= 26;
    return v;
}

std::optional<golay_number> golay_number::factor(std::int64_t n) {
    if (n < 1) return std::nullopt;
    int p2 = 0, p5 = 0, p13 = 0;
    while (n % 2 == 0) { n /= 2; ++p2; }
    while (n % 5 == 0) { n /= 5; ++p5; }
    while (n % 13 == 0) { n /= 13; ++p13; }
    if (n != 1) return std::nullopt;
    // 2^a * 10^b * 26^c = 2^(a+b+c) * 5^b * 13^c
    int a = p2 - p5 - p13;
    if (a < 0) return std::nullopt;
    return golay_number{a, p5, p13};
}

std::vector<std::int64_t> golay_number::values_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t v26 = 1; v26 <= limit; v26 *= 26) {
        for (std::int64_t v10 = v26; v10 <= limit; v10 *= 10) {
            for (std::int64_t v = v10; v <= limit; v *= 2) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

seq_pair construct1(const sequence& seed_a, const sequence& seed_b, tree_address addr) {
    require_seed_lengths(seed_a, seed_b);
    if (addr.depth < 1 || addr.depth > 62) throw std::invalid_argument("depth must be in [1, 62]");
    if (addr.index >> addr.depth) throw std::invalid_argument("index out of range for depth");

    seq_pair p = (addr.index >> (addr.depth - 1)) & 1
                     ? seq_pair{concat(seed_b, seed_a), concat(seed_b, negate(seed_a))}
                     : seq_pair{concat(seed_a, seed_b), concat(seed_a, negate(seed_b))};
    for (int level = 2; level <= addr.depth; ++level) {
        bool odd = (addr.index >> (addr.depth - level)) & 1;
        p = odd ? seq_pair{concat(p.second, p.first), concat(p.second, negate(p.first))}
                : double_pair(p);
    }
    return p;
}

seq_pair theorem1_pair(const sequence& seed_a, const sequence& seed_b, int r) {
    if (r != 0 && r != 1) throw std::invalid_argument("r must be 0 or 1");
    return construct1(seed_a, seed_b, {1, static_cast<std::uint64_t>(r)});
}

seq_pair theorem1_variant_2Nminus1(const sequence& seed_a, const sequence& seed_b) {
    return theorem1_pair(seed_a, seed_b, 0);
}

seq_pair theorem2_pair(const sequence& seed_a, const sequence& seed_b, int k, std::uint64_t r) {
    if (k < 2) throw std::invalid_argument("depth k must be >= 2");
    return construct1(seed_a, seed_b, {k, r});
}

seq_pair turyn_product(const seq_pair& zcp, const seq_pair& gcp_or_zcp) {
    const sequence& c = zcp.first;
    const sequence& d = zcp.second;
    const sequence& e = gcp_or_zcp.first;
    const sequence& f = gcp_or_zcp.second;
    if (c.size() != d.size()) throw std::invalid_argument("unequal lengths within the first pair");
    if (e.size() != f.size()) throw std::invalid_argument("unequal lengths within the second pair");

    std::int64_t n1 = c.size(), n2 = e.size();
    std::vector<int> u(static_cast<std::size_t>(n1 * n2)), v(u.size());
    for (std::int64_t m = 0; m < n2; ++m) {
        int em = e.at(m), fm = f.at(m);
        int erev = e.at(n2 - 1 - m), frev = f.at(n2 - 1 - m);
        for (std::int64_t h = 0; h < n1; ++h) {
            int s = c.at(h) + d.at(h);  // twice the half-sum, in {-2,0,2}
            int t = d.at(h) - c.at(h);  // twice the half-difference
            int uu = (em * s + frev * t) / 2;
            int vv = (fm * s - erev * t) / 2;
            if (uu * uu != 1 || vv * vv != 1)
                throw std::logic_error("product element not +-1; malformed input pair");
            u[static_cast<std::size_t>(m * n1 + h)] = uu;
            v[static_cast<std::size_t>(m * n1 + h)] = vv;
        }
    }
    return {sequence(u), sequence(v)};
}

seq_pair gcp_factory(const golay_number& n, gcp_orientation o) {
    seq_pair core{sequence::ones(1), sequence::ones(1)};
    bool have_core = false;
    auto fold = [&](const seq_pair& base) {
        if (!have_core) {
            core = base;
            have_core = true;
        } else {
            core = core.first.size() <= base.first.size() ? turyn_product(core, base)
                                                          : turyn_product(base, core);
        }
    };
    for (int i = 0; i < n.b; ++i) fold({base10_first(), base10_second()});
    for (int i = 0; i < n.c; ++i) fold({base26_first(), base26_second()});
    for (int i = 0; i < n.a; ++i) core = double_pair(core);

    if (o == gcp_orientation::product) {
        core = {core.first, negate(reverse(core.second))};
    }
    return core;
}

seq_pair gcp_factory(std::int64_t n, gcp_orientation o) {
    auto g = golay_number::factor(n);
    if (!g) throw std::invalid_argument(std::to_string(n) + " is not of the form 2^a 10^b 26^c");
    return gcp_factory(*g, o);
}

seq_pair tcp1_pair(const golay_number& n) {
    if (n.value() < 2) throw std::invalid_argument("length must be >= 2; deletion would empty the first member");
    seq_pair xy = gcp_factory(n);
    sequence a = delete_at(xy.first, 0);
    const sequence& b = xy.second;
    return {concat(a, b), concat(a, negate(b))};
}

seq_pair tcp2_pair(const golay_number& n, int lambda) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
    seq_pair xy = gcp_factory(n);
    sequence b = concat(sequence(std::vector<int>{lambda}), xy.second);
    return {concat(xy.first, b), concat(xy.first, negate(b))};
}

seq_pair type1_obzcp_pair(const golay_number& n, int lambda) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
    seq_pair xy = gcp_factory(n);
    sequence lam(std::vector<int>{lambda});
    sequence b = concat(xy.second, lam);
    sequence bhat = concat(xy.second, negate(lam));
    return {concat(xy.first, b), concat(xy.first, negate(bhat))};
}

}  // namespace zcp

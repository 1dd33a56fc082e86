#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zcp {

// Binary sequence over {+1,-1}, immutable after construction, length >= 1.
// Storage is bit-packed, one sign bit per element (bit set <=> element is -1);
// unused high bits of the last word are kept zero so whole-word equality and
// XOR+popcount correlation kernels work without masking surprises.
class sequence {
public:
    explicit sequence(const std::vector<int>& elems);

    // Text form: one '+' or '-' per element, no separators. Any other
    // character (or an empty string) is rejected.
    static sequence parse(std::string_view text);
    static sequence ones(std::int64_t n);

    std::int64_t size() const { return n_; }

    // Element i as +1/-1.
    int at(std::int64_t i) const {
        return ((words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u) ? -1 : 1;
    }

    std::string str() const;
    std::vector<int> elems() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const sequence& o) const = default;

    friend sequence reverse(const sequence& c);
    friend sequence negate(const sequence& c);
    friend sequence concat(const sequence& c, const sequence& d);
    friend sequence kronecker(const sequence& c, const sequence& d);
    friend sequence delete_at(const sequence& c, std::int64_t r);

private:
    sequence(std::int64_t n, std::vector<std::uint64_t> words)
        : n_(n), words_(std::move(words)) {}
    static sequence zeros(std::int64_t n);  // all +1, bits clear
    void set_minus(std::int64_t i) {
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    std::int64_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

sequence reverse(const sequence& c);
sequence negate(const sequence& c);
sequence concat(const sequence& c, const sequence& d);
sequence kronecker(const sequence& c, const sequence& d);
sequence delete_at(const sequence& c, std::int64_t r);

// Ordered pair of sequences; lengths may differ (seed pairs use N and N+1).
struct seq_pair {
    sequence first;
    sequence second;

    bool operator==(const seq_pair& o) const = default;
};

}  // namespace zcp

#include "zcp/sequence.hpp"

#include <stdexcept>

namespace zcp {

namespace {

std::size_t word_count(std::int64_t n) {
    return static_cast<std::size_t>((n + 63) >> 6);
}

void require_nonempty(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sequence must be nonempty");
}

}  // namespace

sequence sequence::zeros(std::int64_t n) {
    require_nonempty(n);
    return sequence(n, std::vector<std::uint64_t>(word_count(n), 0));
}

sequence::sequence(const std::vector<int>& elems) {
    require_nonempty(static_cast<std::int64_t>(elems.size()));
    n_ = static_cast<std::int64_t>(elems.size());
    words_.assign(word_count(n_), 0);
    for (std::int64_t i = 0; i < n_; ++i) {
        if (elems[static_cast<std::size_t>(i)] == -1) {
            set_minus(i);
        } else if (elems[static_cast<std::size_t>(i)] != 1) {
            throw std::invalid_argument("sequence elements must be +1 or -1");
        }
    }
}

sequence sequence::parse(std::string_view text) {
    require_nonempty(static_cast<std::int64_t>(text.size()));
    sequence s = zeros(static_cast<std::int64_t>(text.size()));
    for (std::int64_t i = 0; i < s.n_; ++i) {
        char ch = text[static_cast<std::size_t>(i)];
        if (ch == '-') {
            s.set_minus(i);
        } else if (ch != '+') {
            throw std::invalid_argument(std::string("invalid sequence character '") + ch +
                                        "'; expected '+' or '-'");
        }
    }
    return s;
}

sequence sequence::ones(std::int64_t n) {
    return zeros(n);
}

std::string sequence::str() const {
    std::string out(static_cast<std::size_t>(n_), '+');
    for (std::int64_t i = 0; i < n_; ++i) {
        if (at(i) < 0) out[static_cast<std::size_t>(i)] = '-';
    }
    return out;
}

std::vector<int> sequence::elems() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = at(i);
    return out;
}

sequence reverse(const sequence& c) {
    sequence s = sequence::zeros(c.n_);
    for (std::int64_t i = 0; i < c.n_; ++i) {
        if (c.at(c.n_ - 1 - i) < 0) s.set_minus(i);
    }
    return s;
}

sequence negate(const sequence& c) {
    sequence s = c;
    for (auto& w : s.words_) w = ~w;
    // re-clear padding bits above position n-1
    int tail = static_cast<int>(c.n_ & 63);
    if (tail != 0) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return s;
}

sequence concat(const sequence& c, const sequence& d) {
    sequence s = sequence::zeros(c.n_ + d.n_);
    for (std::int64_t i = 0; i < c.n_; ++i)
        if (c.at(i) < 0) s.set_minus(i);
    for (std::int64_t i = 0; i < d.n_; ++i)
        if (d.at(i) < 0) s.set_minus(c.n_ + i);
    return s;
}

sequence kronecker(const sequence& c, const sequence& d) {
    sequence s = sequence::zeros(c.n_ * d.n_);
    for (std::int64_t i = 0; i < c.n_; ++i) {
        for (std::int64_t j = 0; j < d.n_; ++j) {
            if (c.at(i) * d.at(j) < 0) s.set_minus(i * d.n_ + j);
        }
    }
    return s;
}

sequence delete_at(const sequence& c, std::int64_t r) {
    if (c.n_ == 1) throw std::invalid_argument("cannot delete from a length-1 sequence; result would be empty");
    if (r < 0 || r >= c.n_) throw std::out_of_range("deletion index out of range");
    sequence s = sequence::zeros(c.n_ - 1);
    for (std::int64_t i = 0; i < c.n_ - 1; ++i) {
        if (c.at(i < r ? i : i + 1) < 0) s.set_minus(i);
    }
    return s;
}

}  // namespace zcp

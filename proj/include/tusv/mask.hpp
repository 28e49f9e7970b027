#pragma once

#include <cstdint>
#include <vector>

namespace tusv {

// Bitset over the integers [0, bound]: bit n set means n is attained.
class ValueMask {
public:
    ValueMask() = default;
    explicit ValueMask(long long bound);

    long long bound() const { return bound_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool test(long long n) const {
        return n >= 0 && n <= bound_ &&
               (words_[static_cast<std::size_t>(n) >> 6] >> (n & 63) & 1);
    }
    void set(long long n) {
        if (n >= 0 && n <= bound_)
            words_[static_cast<std::size_t>(n) >> 6] |= std::uint64_t{1} << (n & 63);
    }

    // this |= other << shift (bits past bound dropped).
    void or_shifted(const ValueMask& other, long long shift);

    long long popcount() const;
    bool all_set() const;

    // Smallest clear bit, or -1 when every bit is set.
    long long first_clear() const;
    // All clear bits, ascending, at most `limit` of them (limit < 0: no cap).
    std::vector<long long> clear_bits(long long limit = -1) const;

    bool operator==(const ValueMask& other) const = default;

private:
    long long bound_ = -1;
    std::vector<std::uint64_t> words_;
};

} // namespace tusv

#include "tusv/mask.hpp"

#include "tusv/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace tusv {

ValueMask::ValueMask(long long bound) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("mask bound must be >= 0");
    words_.assign(static_cast<std::size_t>(bound / 64 + 1), 0);
}

void ValueMask::or_shifted(const ValueMask& other, long long shift) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    if (other.bound_ != bound_)
        throw std::invalid_argument("or_shifted needs masks over the same range");
    if (shift > bound_) return;
    kernels::select_or_shift()(words_.data(), other.words_.data(), words_.size(),
                               static_cast<std::uint64_t>(shift));
    // Bits beyond bound_ may have been set by the shift; keep the tail clean
    // so popcount/equality stay meaningful.
    const unsigned tail = static_cast<unsigned>(bound_ % 64);
    if (tail != 63) words_.back() &= (std::uint64_t{2} << tail) - 1;
}

long long ValueMask::popcount() const {
    long long c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool ValueMask::all_set() const { return first_clear() == -1; }

long long ValueMask::first_clear() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != ~std::uint64_t{0}) {
            long long n = static_cast<long long>(i) * 64 +
                          std::countr_one(words_[i]);
            return n <= bound_ ? n : -1;
        }
    }
    return -1;
}

std::vector<long long> ValueMask::clear_bits(long long limit) const {
    std::vector<long long> out;
    if (limit == 0) return out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = ~words_[i];
        while (w) {
            long long n = static_cast<long long>(i) * 64 + std::countr_zero(w);
            if (n > bound_) return out;
            out.push_back(n);
            if (limit >= 0 && static_cast<long long>(out.size()) >= limit) return out;
            w &= w - 1;
        }
    }
    return out;
}

} // namespace tusv

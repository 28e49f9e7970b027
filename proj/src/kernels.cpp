#include "tusv/kernels.hpp"

#include <atomic>
#include <cstring>

namespace tusv::kernels {

void or_shift_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t words, std::uint64_t shift) {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    if (word_shift >= words) return;
    if (bit_shift == 0) {
        for (std::size_t i = words; i-- > word_shift;)
            dst[i] |= src[i - word_shift];
        return;
    }
    // Walk downward so src can be read before dst swallows it when aliased
    // buffers are ever passed (they are not today, but the order is free).
    const unsigned carry_shift = 64 - bit_shift;
    for (std::size_t i = words; i-- > word_shift;) {
        std::uint64_t v = src[i - word_shift] << bit_shift;
        if (i > word_shift) v |= src[i - word_shift - 1] >> carry_shift;
        dst[i] |= v;
    }
}

namespace {

std::atomic<or_shift_fn> forced{nullptr};

or_shift_fn pick() {
#if defined(__x86_64__) && defined(TUSV_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) return or_shift_avx2;
#endif
    return or_shift_scalar;
}

} // namespace

or_shift_fn select_or_shift() {
    if (auto f = forced.load(std::memory_order_relaxed)) return f;
    static const or_shift_fn chosen = pick();
    return chosen;
}

std::string_view active_kernel_name() {
    or_shift_fn f = select_or_shift();
#if defined(__x86_64__) && defined(TUSV_HAVE_AVX2_TU)
    if (f == or_shift_avx2) return "avx2";
#endif
    (void)f;
    return "scalar";
}

bool force_kernel(std::string_view name) {
    if (name.empty()) {
        forced.store(nullptr, std::memory_order_relaxed);
        return true;
    }
    if (name == "scalar") {
        forced.store(or_shift_scalar, std::memory_order_relaxed);
        return true;
    }
#if defined(__x86_64__) && defined(TUSV_HAVE_AVX2_TU)
    if (name == "avx2" && __builtin_cpu_supports("avx2")) {
        forced.store(or_shift_avx2, std::memory_order_relaxed);
        return true;
    }
#endif
    return false;
}

} // namespace tusv::kernels

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tusv::kernels {

// dst |= src << shift, over bit arrays of `words` 64-bit words. Bits shifted
// past the end are dropped. dst and src may alias only when shift == 0.
using or_shift_fn = void (*)(std::uint64_t* dst, const std::uint64_t* src,
                             std::size_t words, std::uint64_t shift);

void or_shift_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t words, std::uint64_t shift);

#if defined(__x86_64__)
void or_shift_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words, std::uint64_t shift);
#endif

// Picks the widest variant the running CPU supports. Resolved once.
or_shift_fn select_or_shift();

// Name of the variant select_or_shift resolves to ("scalar" or "avx2").
std::string_view active_kernel_name();

// Force a specific variant ("scalar", "avx2", or "" to restore auto).
// Returns false if the variant is unknown or unsupported on this CPU.
bool force_kernel(std::string_view name);

} // namespace tusv::kernels

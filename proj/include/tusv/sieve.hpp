#pragma once

#include "tusv/generator.hpp"
#include "tusv/mask.hpp"

#include <vector>

namespace tusv {

class MaskCache; // cache.hpp

// Bitset of the values one generator attains in [0, bound].
ValueMask term_mask(const Generator& g, long long bound);

// Bitset of everything f1(x)+f2(y)+f3(z) attains in [0, bound]. The two
// sparsest (hence cheapest) supports are combined first; the densest support
// then drives one shift-OR pass over the pair sumset. When a cache is given,
// per-term masks are read through it.
ValueMask form_mask(const TernaryForm& f, long long bound, MaskCache* cache = nullptr);

// {a + b : a in lhs, b in rhs, a + b <= bound}, rhs restricted to its support.
ValueMask sumset(const ValueMask& lhs, const std::vector<long long>& rhs_support);

bool is_universal_up_to(const TernaryForm& f, long long bound, MaskCache* cache = nullptr);
std::vector<long long> witnesses_up_to(const TernaryForm& f, long long bound,
                                       long long limit = -1, MaskCache* cache = nullptr);
// Smallest non-attained value in [0, bound], or nullopt if universal there.
std::optional<long long> first_witness(const TernaryForm& f, long long bound,
                                       MaskCache* cache = nullptr);

// True iff n is attained; brute force over index triples, no masks. The
// reference implementation the sieve is tested against.
bool attains_brute(const TernaryForm& f, long long n);

} // namespace tusv

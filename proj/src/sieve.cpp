#include "tusv/sieve.hpp"

#include "tusv/cache.hpp"

#include <algorithm>
#include <array>

namespace tusv {

ValueMask term_mask(const Generator& g, long long bound) {
    ValueMask m(bound);
    for (long long v : value_stream(g, bound)) m.set(v);
    return m;
}

ValueMask sumset(const ValueMask& lhs, const std::vector<long long>& rhs_support) {
    ValueMask out(lhs.bound());
    for (long long v : rhs_support) out.or_shifted(lhs, v);
    return out;
}

ValueMask form_mask(const TernaryForm& f, long long bound, MaskCache* cache) {
    std::array<std::vector<long long>, 3> sup;
    for (int i = 0; i < 3; ++i) sup[i] = value_stream(f.terms[i], bound);

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sup[a].size() < sup[b].size(); });
    const int sparsest = order[0], middle = order[1], densest = order[2];

    // Two cheap supports first: |sparsest| shift passes build the pair mask,
    // the densest support then drives the final |densest| passes.
    ValueMask mid = cache ? cache->get_term_mask(f.terms[middle], bound)
                          : term_mask(f.terms[middle], bound);
    ValueMask pair = sumset(mid, sup[sparsest]);
    return sumset(pair, sup[densest]);
}

bool is_universal_up_to(const TernaryForm& f, long long bound, MaskCache* cache) {
    return form_mask(f, bound, cache).all_set();
}

std::vector<long long> witnesses_up_to(const TernaryForm& f, long long bound,
                                       long long limit, MaskCache* cache) {
    return form_mask(f, bound, cache).clear_bits(limit);
}

std::optional<long long> first_witness(const TernaryForm& f, long long bound,
                                       MaskCache* cache) {
    long long n = form_mask(f, bound, cache).first_clear();
    if (n < 0) return std::nullopt;
    return n;
}

bool attains_brute(const TernaryForm& f, long long n) {
    if (n < 0) return false;
    // Plain nested loops over value lists; deliberately independent of the
    // mask machinery so the two can cross-check each other.
    std::array<std::vector<long long>, 3> vals;
    for (int i = 0; i < 3; ++i) vals[i] = value_stream(f.terms[i], n);
    for (long long a : vals[0]) {
        if (a > n) break;
        for (long long b : vals[1]) {
            if (a + b > n) break;
            long long rest = n - a - b;
            if (std::binary_search(vals[2].begin(), vals[2].end(), rest)) return true;
        }
    }
    return false;
}

} // namespace tusv

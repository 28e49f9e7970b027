#include "tusv/mask.hpp"

#include "tusv/kernels.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

using namespace tusv;

namespace {

ValueMask random_mask(long long bound, std::mt19937& rng, double density = 0.2) {
    ValueMask m(bound);
    std::bernoulli_distribution bit(density);
    for (long long n = 0; n <= bound; ++n)
        if (bit(rng)) m.set(n);
    return m;
}

// The obvious quadratic-free reference: walk set bits, re-set them shifted.
ValueMask or_shifted_reference(const ValueMask& into, const ValueMask& from, long long shift) {
    ValueMask out = into;
    for (long long n = 0; n <= from.bound(); ++n)
        if (from.test(n)) out.set(n + shift); // set() drops anything past bound
    return out;
}

} // namespace

TEST_CASE("set and test respect the range") {
    ValueMask m(100);
    CHECK(m.bound() == 100);
    CHECK(m.popcount() == 0);
    m.set(0);
    m.set(100);
    m.set(101);  // silently dropped
    m.set(-5);   // likewise
    CHECK(m.test(0));
    CHECK(m.test(100));
    CHECK_FALSE(m.test(101));
    CHECK_FALSE(m.test(-5));
    CHECK(m.popcount() == 2);
    CHECK_THROWS_AS(ValueMask(-1), std::invalid_argument);
}

TEST_CASE("first_clear and clear_bits") {
    ValueMask m(130);
    for (long long n = 0; n <= 130; ++n) m.set(n);
    CHECK(m.all_set());
    CHECK(m.first_clear() == -1);
    CHECK(m.clear_bits().empty());

    ValueMask p(130);
    for (long long n = 0; n <= 130; ++n)
        if (n != 64 && n != 99 && n != 130) p.set(n);
    CHECK_FALSE(p.all_set());
    CHECK(p.first_clear() == 64);
    CHECK(p.clear_bits() == std::vector<long long>{64, 99, 130});
    CHECK(p.clear_bits(2) == std::vector<long long>{64, 99});
    CHECK(p.clear_bits(0).empty());

    // a clear bit only past the bound is not a clear bit
    ValueMask q(64);
    for (long long n = 0; n <= 64; ++n) q.set(n);
    CHECK(q.first_clear() == -1);
    CHECK(q.all_set());
}

TEST_CASE("or_shifted matches the bit-walking reference") {
    std::mt19937 rng(20240817);
    for (long long bound : {63LL, 64LL, 65LL, 200LL, 1000LL}) {
        const ValueMask src = random_mask(bound, rng);
        for (long long shift : {0LL, 1LL, 7LL, 63LL, 64LL, 65LL, 127LL, bound - 1, bound}) {
            ValueMask dst = random_mask(bound, rng, 0.05);
            const ValueMask want = or_shifted_reference(dst, src, shift);
            dst.or_shifted(src, shift);
            CHECK(dst == want);
            CHECK(dst.bound() == bound);
        }
    }
}

TEST_CASE("or_shifted keeps the tail words clean") {
    // bound 70: the last word holds bits 64..70 only. Shifting a full mask
    // by one would smear into 71..127 unless the tail is masked off.
    ValueMask full(70);
    for (long long n = 0; n <= 70; ++n) full.set(n);
    ValueMask m(70);
    m.or_shifted(full, 1);
    CHECK(m.popcount() == 70);
    ValueMask direct(70);
    for (long long n = 1; n <= 70; ++n) direct.set(n);
    CHECK(m == direct);

    // shift beyond the bound is a no-op
    ValueMask n70(70);
    n70.or_shifted(full, 71);
    CHECK(n70.popcount() == 0);
}

TEST_CASE("or_shifted rejects mixed ranges and negative shifts") {
    ValueMask a(100), b(101);
    CHECK_THROWS_AS(a.or_shifted(b, 0), std::invalid_argument);
    CHECK_THROWS_AS(a.or_shifted(a, -1), std::invalid_argument);
}

TEST_CASE("scalar and dispatched kernels agree") {
    using namespace tusv::kernels;
    CHECK_FALSE(force_kernel("sse9"));

    std::mt19937 rng(7);
    const long long bound = 4096 + 37;
    const ValueMask src = random_mask(bound, rng, 0.3);
    const ValueMask seed = random_mask(bound, rng, 0.1);

    for (long long shift : {0LL, 1LL, 64LL, 200LL, 1000LL, 4095LL}) {
        REQUIRE(force_kernel("scalar"));
        CHECK(active_kernel_name() == "scalar");
        ValueMask scalar = seed;
        scalar.or_shifted(src, shift);

        if (force_kernel("avx2")) {
            CHECK(active_kernel_name() == "avx2");
            ValueMask wide = seed;
            wide.or_shifted(src, shift);
            CHECK(wide == scalar);
        }
        REQUIRE(force_kernel(""));
    }
}

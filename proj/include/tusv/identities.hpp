#pragma once

#include "tusv/cache.hpp"
#include "tusv/generator.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tusv {

struct SuiteResult {
    std::string suite;
    long long checks = 0;                // individual facts examined
    std::vector<std::string> failures;   // empty means the suite passed
    std::vector<std::string> notes;      // flagged oddities that are not failures
    bool passed() const { return failures.empty(); }
};

// True iff n is a sum of three squares: stripping factors of 4 leaves a
// residue other than 7 mod 8. n = 0 counts (0 = 0+0+0).
bool three_square_eligible(long long n);
bool three_square_brute(long long n);

// Can n be written in the base form with at least one of the listed slots
// using an index >= k.
bool constrained_rep_check(long long n, const TernaryForm& base,
                           const std::vector<int>& constrained, long long k);

// target universal <=> base attains every n >= floor with max index over the
// constrained slots at least k. floor is the constant the shift absorbs.
struct ShiftReduction {
    std::string name;
    TernaryForm shifted;
    TernaryForm base;
    std::vector<int> constrained;
    long long k = 0;
    long long floor = 0;
};
const std::vector<ShiftReduction>& shift_reductions();

// Suites, ordered as the CLI exposes them:
//   euler:          {x^2+2T_y} = {T_x+T_y} on [0,set_bound], plus the identity
//                   x^2+y(y+1) = T_{x+y}+T_{x-y-1} for x,y <= alg_bound.
//   gauss-legendre: predicate vs brute force on [0,bound].
//   reductions:     every shift reduction, both directions, on [0,bound].
//   tables:         the embedded decomposition tables and parametric
//                   identities (x up to x_bound), plus the small-sums set check.
//   s07:            every non-triangular n <= bound splits as a^2+b^2+T_c with
//                   both an odd-parity and an even-parity square pair.
//   thm14:          the settled sums attain all of [0,bound].
SuiteResult euler_suite(long long set_bound, long long alg_bound);
SuiteResult gauss_legendre_suite(long long bound);
SuiteResult reduction_suite(long long bound, MaskCache* cache = nullptr);
SuiteResult tables_suite(long long x_bound);
SuiteResult s07_suite(long long bound);
SuiteResult settled_suite(long long bound, MaskCache* cache = nullptr, int jobs = 1);

const std::vector<std::string_view>& suite_names();
// Dispatch by CLI selector with its default bounds; `bound` overrides when > 0.
SuiteResult run_suite(std::string_view name, long long bound = 0,
                      MaskCache* cache = nullptr, int jobs = 1);

struct ScanItem {
    std::string form;                  // display spelling
    std::optional<long long> witness;  // first value missed, if any
};
struct ScanReport {
    std::string which;
    long long bound = 0;
    std::vector<ScanItem> items;
    long long counterexamples = 0;
};
// which: "remaining-1.1" (published survivors minus settled) or "1.2".
ScanReport conjecture_scan(std::string_view which, long long bound,
                           MaskCache* cache = nullptr, int jobs = 1);

} // namespace tusv

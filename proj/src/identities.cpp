#include "tusv/identities.hpp"

#include "tusv/catalog.hpp"
#include "tusv/grammar.hpp"
#include "tusv/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace tusv {
namespace {

using ll = long long;

// Fine for negative arguments: the product of consecutive integers is even.
constexpr ll tri(ll n) { return n * (n + 1) / 2; }

ll isqrt_ll(ll n) {
    ll r = (ll)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void expect(SuiteResult& r, bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
}

// Values of g at indices z >= k, ascending, clipped to [0, bound]. Reduction
// terms are naturals-domain and nondecreasing in z, so a plain walk suffices.
std::vector<ll> values_from_index(const Generator& g, ll k, ll bound) {
    std::vector<ll> out;
    for (ll z = k;; ++z) {
        const ll v = eval(g, z);
        if (v > bound) break;
        out.push_back(v);
    }
    return out;
}

// Everything the base form attains in [0, bound] with at least one
// constrained slot's index >= k.
ValueMask constrained_mask(const TernaryForm& base, const std::vector<int>& constrained,
                           ll k, ll bound, MaskCache* cache) {
    ValueMask acc(bound);
    for (int ci : constrained) {
        TernaryForm others{{make_zero(), make_zero(), make_zero()}};
        int slot = 0;
        for (int i = 0; i < 3; ++i)
            if (i != ci) others.terms[slot++] = base.terms[i];
        const ValueMask pair = form_mask(others, bound, cache);
        for (ll v : values_from_index(base.terms[ci], k, bound))
            acc.or_shifted(pair, v);
    }
    return acc;
}

template <class Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
    const int workers = std::max(1, std::min<int>(jobs, (int)count));
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

bool three_square_eligible(ll n) {
    if (n < 0) return false;
    while (n && n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

bool three_square_brute(ll n) {
    if (n < 0) return false;
    for (ll a = 0; a * a <= n; ++a)
        for (ll b = a; a * a + b * b <= n; ++b) {
            const ll rest = n - a * a - b * b;
            const ll c = isqrt_ll(rest);
            if (c * c == rest) return true;
        }
    return false;
}

bool constrained_rep_check(ll n, const TernaryForm& base,
                           const std::vector<int>& constrained, ll k) {
    if (n < 0) return false;
    for (int ci : constrained) {
        TernaryForm others{{make_zero(), make_zero(), make_zero()}};
        int slot = 0;
        for (int i = 0; i < 3; ++i)
            if (i != ci) others.terms[slot++] = base.terms[i];
        const ValueMask pair = form_mask(others, n);
        for (ll v : values_from_index(base.terms[ci], k, n))
            if (pair.test(n - v)) return true;
    }
    return false;
}

const std::vector<ShiftReduction>& shift_reductions() {
    static const std::vector<ShiftReduction> all = [] {
        std::vector<ShiftReduction> v;
        const auto sq = [] { return make_square(); };
        const auto tr = [] { return make_triangular(); };
        v.push_back({"a",
                     {{sq(), sq(), make_genpoly(1, 2)}},
                     {{sq(), sq(), tr()}},
                     {2}, 1, 1});
        v.push_back({"b",
                     {{tr(), tr(), make_genpoly(2, 3)}},
                     {{tr(), tr(), sq()}},
                     {2}, 1, 1});
        for (ll k = 1; k <= 4; ++k)
            v.push_back({"c k=" + std::to_string(k),
                         {{tr(), tr(), make_genpoly(1, k + 1)}},
                         {{tr(), tr(), tr()}},
                         {0, 1, 2}, k, tri(k)});
        for (ll k = 1; k <= 3; ++k)
            v.push_back({"d k=" + std::to_string(k),
                         {{tr(), make_triangular(2), make_genpoly(1, k + 1)}},
                         {{make_triangular(2), tr(), tr()}},
                         {1, 2}, k, tri(k)});
        for (ll k = 1; k <= 3; ++k)
            v.push_back({"e k=" + std::to_string(k),
                         {{tr(), sq(), make_genpoly(2, 2 * k + 1)}},
                         {{tr(), sq(), sq()}},
                         {1, 2}, k, k * k});
        v.push_back({"f",
                     {{tr(), make_square(4), make_genpoly(1, 2)}},
                     {{make_square(4), tr(), tr()}},
                     {1, 2}, 1, 1});
        for (ll k = 2; k <= 7; ++k)
            v.push_back({"g k=" + std::to_string(k),
                         {{tr(), sq(), make_genpoly(1, k + 1)}},
                         {{sq(), tr(), tr()}},
                         {1, 2}, k, tri(k)});
        return v;
    }();
    return all;
}

SuiteResult euler_suite(ll set_bound, ll alg_bound) {
    SuiteResult r;
    r.suite = "euler";
    const TernaryForm lhs{{make_square(), make_triangular(2), make_zero()}};
    const TernaryForm rhs{{make_triangular(), make_triangular(), make_zero()}};
    expect(r, form_mask(lhs, set_bound) == form_mask(rhs, set_bound),
           "value sets of x^2+2T_y and T_x+T_y differ below " + std::to_string(set_bound));
    for (ll x = 0; x <= alg_bound; ++x)
        for (ll y = 0; y <= alg_bound; ++y) {
            ++r.checks;
            if (x * x + y * (y + 1) != tri(x + y) + tri(x - y - 1))
                r.failures.push_back("x^2+y(y+1) != T_{x+y}+T_{x-y-1} at x=" +
                                     std::to_string(x) + " y=" + std::to_string(y));
        }
    return r;
}

SuiteResult gauss_legendre_suite(ll bound) {
    SuiteResult r;
    r.suite = "gauss-legendre";
    std::vector<std::uint8_t> reps(bound + 1, 0);
    for (ll x = 0; x * x <= bound; ++x)
        for (ll y = x; x * x + y * y <= bound; ++y)
            for (ll z = y; x * x + y * y + z * z <= bound; ++z)
                reps[x * x + y * y + z * z] = 1;
    for (ll n = 0; n <= bound; ++n) {
        ++r.checks;
        if ((reps[n] != 0) != three_square_eligible(n))
            r.failures.push_back("three-square predicate disagrees with enumeration at " +
                                 std::to_string(n));
    }
    // the per-value brute checker must agree with the bulk enumeration too
    const ll spot = std::min<ll>(bound, 2000);
    for (ll n = 0; n <= spot; ++n)
        expect(r, three_square_brute(n) == (reps[n] != 0),
               "three_square_brute disagrees at " + std::to_string(n));
    return r;
}

SuiteResult reduction_suite(ll bound, MaskCache* cache) {
    SuiteResult r;
    r.suite = "reductions";
    for (const auto& red : shift_reductions()) {
        const ValueMask shifted = form_mask(red.shifted, bound, cache);
        const ValueMask base =
            constrained_mask(red.base, red.constrained, red.k, bound + red.floor, cache);
        bool ok = true;
        ll where = -1;
        for (ll n = 0; n <= bound; ++n)
            if (shifted.test(n) != base.test(n + red.floor)) {
                ok = false;
                where = n;
                break;
            }
        expect(r, ok,
               "reduction " + red.name + " breaks at n=" + std::to_string(where));
    }
    return r;
}

namespace {

struct TriRow { ll n, r, s, t; };
constexpr TriRow kTriTable[] = {
    {10, 0, 0, 4}, {11, 0, 1, 4}, {12, 1, 1, 4}, {13, 0, 2, 4}, {14, 1, 2, 4},
    {15, 0, 0, 5}, {16, 0, 1, 5}, {17, 1, 1, 5}, {18, 0, 2, 5},
};

struct TwoTriRow { ll n, a, b, c; };
// the n=9 row: the source this was transcribed from prints target 0, an
// evident slip since 2T_1+T_1+T_3 = 9; stored corrected and flagged below
constexpr TwoTriRow kTwoTriTable[] = {
    {6, 0, 0, 3}, {7, 0, 1, 3}, {8, 1, 0, 3}, {9, 1, 1, 3},
    {10, 0, 0, 4}, {11, 0, 1, 4}, {12, 1, 0, 4},
};

struct TriSqRow { ll n, h, i, j; };
constexpr TriSqRow kTriSqTable[] = {
    {10, 0, 1, 3}, {11, 1, 1, 3}, {12, 2, 0, 3}, {13, 0, 2, 3}, {14, 1, 2, 3},
    {15, 3, 0, 3}, {16, 0, 0, 4}, {17, 0, 1, 4}, {18, 1, 1, 4}, {19, 2, 0, 4},
    {20, 2, 1, 4}, {21, 1, 2, 4}, {22, 3, 0, 4}, {23, 3, 1, 4}, {24, 5, 0, 3},
    {25, 0, 0, 5}, {26, 0, 1, 5}, {27, 1, 1, 5}, {28, 2, 3, 4}, {29, 0, 2, 5},
    {30, 1, 2, 5}, {31, 3, 0, 5}, {32, 2, 2, 5}, {33, 1, 4, 4},
};

struct SqTriRow { ll n, x, y, z; };
constexpr SqTriRow kSqTriTable[] = {
    {28, 0, 0, 7}, {29, 0, 1, 7}, {30, 1, 1, 7}, {31, 0, 2, 7}, {32, 1, 2, 7},
    {33, 2, 1, 7}, {34, 0, 3, 7}, {35, 1, 3, 7}, {36, 0, 0, 8}, {37, 0, 1, 8},
    {38, 0, 4, 7}, {39, 0, 2, 8}, {40, 1, 2, 8}, {41, 2, 1, 8}, {42, 0, 3, 8},
    {43, 0, 5, 7}, {44, 1, 5, 7}, {45, 0, 0, 9}, {46, 0, 1, 9}, {47, 1, 1, 9},
    {48, 0, 2, 9}, {49, 0, 6, 7}, {50, 1, 6, 7}, {51, 0, 3, 9}, {52, 1, 3, 9},
    {53, 2, 6, 7}, {54, 3, 0, 9}, {55, 0, 0, 10}, {56, 0, 1, 10}, {57, 0, 6, 8},
    {58, 0, 2, 10}, {59, 1, 2, 10}, {60, 0, 5, 9}, {61, 0, 3, 10}, {62, 1, 3, 10},
    {63, 5, 4, 7}, {64, 0, 7, 8}, {65, 0, 4, 10}, {66, 0, 0, 11}, {67, 0, 1, 11},
    {68, 1, 1, 11}, {69, 0, 2, 11}, {70, 0, 5, 10}, {71, 1, 5, 10}, {72, 0, 3, 11},
    {73, 0, 7, 9}, {74, 1, 7, 9}, {75, 3, 0, 11}, {76, 0, 4, 11}, {77, 1, 4, 11},
    {78, 0, 0, 12},
};

struct ShiftedPairRow { ll r, s, j; }; // x^2 + r = s^2 + T_{x-j} + T_{x+j-1}
constexpr ShiftedPairRow kShiftedPairs[] = {
    {0, 0, 1},  {1, 1, 1},  {2, 0, 2},  {3, 1, 2},  {4, 2, 1},  {6, 0, 3},
    {7, 1, 3},  {9, 3, 1},  {10, 2, 3}, {11, 3, 2}, {12, 0, 4}, {13, 1, 4},
    {15, 3, 3}, {16, 2, 4}, {18, 4, 2}, {20, 0, 5}, {21, 1, 5}, {22, 4, 3},
    {24, 2, 5}, {25, 5, 1}, {27, 5, 2}, {30, 0, 6}, {31, 1, 6}, {36, 6, 1},
    {42, 0, 7},
};

} // namespace

SuiteResult tables_suite(ll x_bound) {
    SuiteResult r;
    r.suite = "tables";

    ll want = 10;
    for (const auto& row : kTriTable) {
        expect(r, tri(row.r) + tri(row.s) + tri(row.t) == row.n,
               "tri-table sum wrong at " + std::to_string(row.n));
        expect(r, std::max({row.r, row.s, row.t}) >= 4,
               "tri-table index constraint broken at " + std::to_string(row.n));
        expect(r, row.n == want++, "tri-table coverage gap");
    }
    expect(r, want == 19, "tri-table does not cover 10..18");

    // 2T_x plus a small constant, rewritten with two free triangular slots
    for (ll x = 0; x <= x_bound; ++x) {
        expect(r, 2 * tri(x) + 0 == 2 * tri(0) + tri(x) + tri(x), "2T_x+0 rewrite");
        if (x >= 1)
            expect(r, 2 * tri(x) + 1 == 2 * tri(0) + tri(x - 1) + tri(x + 1), "2T_x+1 rewrite");
        expect(r, 2 * tri(x) + 2 == tri(x) + tri(x) + 2 * tri(1), "2T_x+2 rewrite");
        if (x >= 1)
            expect(r, 2 * tri(x) + 3 == 2 * tri(1) + tri(x - 1) + tri(x + 1), "2T_x+3 rewrite");
        if (x >= 2)
            expect(r, 2 * tri(x) + 4 == 2 * tri(0) + tri(x - 2) + tri(x + 2), "2T_x+4 rewrite");
        expect(r, 2 * tri(x) + 6 == tri(0) + tri(3) + 2 * tri(x), "2T_x+6 rewrite");
    }

    want = 6;
    for (const auto& row : kTwoTriTable) {
        expect(r, 2 * tri(row.a) + tri(row.b) + tri(row.c) == row.n,
               "two-tri table sum wrong at " + std::to_string(row.n));
        expect(r, row.c >= 3,
               "two-tri table index constraint broken at " + std::to_string(row.n));
        expect(r, row.n == want++, "two-tri table coverage gap");
    }
    expect(r, want == 13, "two-tri table does not cover 6..12");
    r.notes.push_back("two-tri table row 9 = 2*T_1 + T_1 + T_3: the source table "
                      "prints 0 as the target, an evident slip; stored corrected");

    want = 10;
    for (const auto& row : kTriSqTable) {
        expect(r, tri(row.h) + row.i * row.i + row.j * row.j == row.n,
               "tri-square table sum wrong at " + std::to_string(row.n));
        expect(r, std::max(row.i, row.j) >= 3,
               "tri-square table index constraint broken at " + std::to_string(row.n));
        expect(r, row.n == want++, "tri-square table coverage gap");
    }
    expect(r, want == 34, "tri-square table does not cover 10..33");

    want = 28;
    for (const auto& row : kSqTriTable) {
        expect(r, row.x * row.x + tri(row.y) + tri(row.z) == row.n,
               "square-tri table sum wrong at " + std::to_string(row.n));
        expect(r, std::max(row.y, row.z) >= 7,
               "square-tri table index constraint broken at " + std::to_string(row.n));
        expect(r, row.n == want++, "square-tri table coverage gap");
    }
    expect(r, want == 79, "square-tri table does not cover 28..78");

    for (const auto& row : kShiftedPairs) {
        expect(r, row.r == row.s * row.s + row.j * (row.j - 1),
               "shifted-pair row shape wrong at r=" + std::to_string(row.r));
        for (ll x = row.j; x <= x_bound; ++x) {
            ++r.checks;
            if (x * x + row.r != row.s * row.s + tri(x - row.j) + tri(x + row.j - 1))
                r.failures.push_back("shifted-pair identity fails at r=" +
                                     std::to_string(row.r) + " x=" + std::to_string(x));
        }
    }

    std::set<ll> sums;
    for (ll i = 0; i <= 6; ++i)
        for (ll j = 0; j <= 6; ++j) sums.insert(tri(i) + tri(j));
    std::set<ll> wanted;
    for (ll n = 0; n <= 31; ++n) wanted.insert(n);
    wanted.insert(36);
    wanted.insert(42);
    for (ll n : {5, 8, 14, 17, 19, 23, 26, 28, 29}) wanted.erase(n);
    expect(r, sums == wanted, "pairwise small-T sum set is off");

    return r;
}

SuiteResult s07_suite(ll bound) {
    SuiteResult r;
    r.suite = "s07";
    std::set<ll> tris;
    for (ll k = 0; tri(k) <= bound; ++k) tris.insert(tri(k));
    for (ll n = 1; n <= bound; ++n) {
        if (tris.count(n)) continue;
        bool odd = false, even = false;
        for (ll a = 0; a * a <= n && !(odd && even); ++a)
            for (ll b = a; a * a + b * b <= n; ++b) {
                if (!tris.count(n - a * a - b * b)) continue;
                ((a - b) % 2 ? odd : even) = true;
                if (odd && even) break;
            }
        expect(r, odd && even,
               "no " + std::string(odd ? "even" : even ? "odd" : "odd or even") +
                   " two-square split above a triangular part at " + std::to_string(n));
        if (!(odd && even)) break;
    }
    return r;
}

SuiteResult settled_suite(ll bound, MaskCache* cache, int jobs) {
    SuiteResult r;
    r.suite = "thm14";
    const auto& sums = catalog::settled_sums();
    std::vector<std::string> fail(sums.size());
    MaskCache* pass_cache = jobs > 1 ? nullptr : cache;
    parallel_for(sums.size(), jobs, [&](size_t i) {
        const TernaryForm f = catalog::tuple_form(sums[i].family, sums[i].t);
        if (auto w = first_witness(f, bound, pass_cache))
            fail[i] = catalog::tuple_display(sums[i].family, sums[i].t) + " misses " +
                      std::to_string(*w);
    });
    for (auto& msg : fail) {
        ++r.checks;
        if (!msg.empty()) r.failures.push_back(std::move(msg));
    }
    return r;
}

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = {
        "euler", "gauss-legendre", "reductions", "tables", "s07", "thm14",
    };
    return names;
}

SuiteResult run_suite(std::string_view name, ll bound, MaskCache* cache, int jobs) {
    if (name == "euler") return euler_suite(bound > 0 ? bound : 1000000, 1000);
    if (name == "gauss-legendre") return gauss_legendre_suite(bound > 0 ? bound : 100000);
    if (name == "reductions") return reduction_suite(bound > 0 ? bound : 10000, cache);
    if (name == "tables") return tables_suite(bound > 0 ? bound : 1000);
    if (name == "s07") return s07_suite(bound > 0 ? bound : 10000);
    if (name == "thm14") return settled_suite(bound > 0 ? bound : 1000000, cache, jobs);
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

ScanReport conjecture_scan(std::string_view which, ll bound, MaskCache* cache, int jobs) {
    ScanReport report;
    report.which = which;
    report.bound = bound;

    std::vector<TernaryForm> forms;
    if (which == "remaining-1.1") {
        for (const auto& s : catalog::open_survivor_sums()) {
            forms.push_back(catalog::tuple_form(s.family, s.t));
            report.items.push_back({catalog::tuple_display(s.family, s.t), std::nullopt});
        }
    } else if (which == "1.2") {
        for (std::string_view spelling : catalog::open_mixed_sums()) {
            TernaryForm f = parse_form(std::string(spelling));
            report.items.push_back({form_display(f), std::nullopt});
            forms.push_back(std::move(f));
        }
    } else {
        throw std::invalid_argument("unknown scan: " + std::string(which));
    }

    MaskCache* pass_cache = jobs > 1 ? nullptr : cache;
    parallel_for(forms.size(), jobs, [&](size_t i) {
        report.items[i].witness = first_witness(forms[i], bound, pass_cache);
    });
    for (const auto& item : report.items)
        if (item.witness) ++report.counterexamples;
    return report;
}

} // namespace tusv

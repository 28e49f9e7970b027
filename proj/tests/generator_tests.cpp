#include "tusv/generator.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace tusv;

namespace {
long long tri(long long n) { return n * (n + 1) / 2; }
}

TEST_CASE("closed forms match eval") {
    for (long long z = 0; z <= 60; ++z) {
        CHECK(eval(make_square(), z) == z * z);
        CHECK(eval(make_triangular(), z) == tri(z));
        for (long long m = 3; m <= 9; ++m) {
            CHECK(eval(make_polygonal(m), z) == (m - 2) * z * (z - 1) / 2 + z);
            CHECK(eval(make_second_polygonal(m), z) == (m - 2) * z * (z + 1) / 2 - z);
        }
        for (long long c = 1; c <= 5; ++c)
            for (long long d = 1; d <= 5; ++d)
                CHECK(eval(make_genpoly(c, d), z) == c * z * (z - 1) / 2 + d * z);
        CHECK(eval(make_zero(), z) == 0);
        CHECK(eval(make_triangular(7), z) == 7 * tri(z));
    }
}

TEST_CASE("pbar is the polygonal kind at negated argument") {
    for (long long m = 3; m <= 9; ++m)
        for (long long z = 0; z <= 40; ++z) {
            const long long pm_neg = (m - 2) * (-z) * (-z - 1) / 2 + (-z);
            CHECK(eval(make_second_polygonal(m), z) == pm_neg);
        }
}

TEST_CASE("squares and triangulars are special polygonals") {
    for (long long z = 0; z <= 40; ++z) {
        CHECK(eval(make_polygonal(4), z) == eval(make_square(), z));
        CHECK(eval(make_polygonal(3), z) == eval(make_triangular(), z));
        // second-kind hexagonals are exactly the even-index triangulars
        CHECK(eval(make_second_polygonal(6), z) == tri(2 * z));
    }
}

TEST_CASE("naturals domain rejects negative indices") {
    CHECK_THROWS_AS(eval(make_square(), -1), std::invalid_argument);
    CHECK(eval(make_square(1, Domain::integers), -3) == 9);
    CHECK(eval(make_genpoly(1, 2, 1, Domain::integers), -4) == 2);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(make_square(0), std::invalid_argument);
    CHECK_THROWS_AS(make_polygonal(2), std::invalid_argument);
    CHECK_THROWS_AS(make_second_polygonal(2), std::invalid_argument);
    CHECK_THROWS_AS(make_genpoly(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_genpoly(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_triangular(-2), std::invalid_argument);
}

TEST_CASE("eval is overflow checked") {
    CHECK_THROWS_AS(eval(make_square(), 1LL << 32), std::overflow_error);
    CHECK_THROWS_AS(eval(make_genpoly(1000, 1), 1LL << 31), std::overflow_error);
}

TEST_CASE("gp conversion table") {
    auto gp = to_genpoly(make_square(3));
    REQUIRE(gp.has_value());
    CHECK(gp->c == 2);
    CHECK(gp->d == 1);

    gp = to_genpoly(make_triangular());
    REQUIRE(gp.has_value());
    CHECK(gp->c == 1);
    CHECK(gp->d == 1);

    gp = to_genpoly(make_polygonal(5));
    REQUIRE(gp.has_value());
    CHECK(gp->c == 3);
    CHECK(gp->d == 1);

    gp = to_genpoly(make_second_polygonal(5));
    REQUIRE(gp.has_value());
    CHECK(gp->c == 3);
    CHECK(gp->d == 2);

    CHECK_FALSE(to_genpoly(make_second_polygonal(3)).has_value());
    CHECK_FALSE(to_genpoly(make_zero()).has_value());

    gp = to_genpoly(make_genpoly(9, 4));
    REQUIRE(gp.has_value());
    CHECK(gp->c == 9);
    CHECK(gp->d == 4);

    // conversions preserve values
    for (long long m = 4; m <= 9; ++m)
        for (long long z = 0; z <= 30; ++z) {
            const auto g = *to_genpoly(make_second_polygonal(m));
            CHECK(eval(make_genpoly(g.c, g.d), z) == eval(make_second_polygonal(m), z));
        }
}

TEST_CASE("integer domain split covers the whole value set") {
    for (auto [c, d] : {std::pair<long long, long long>{3, 2}, {1, 2}, {5, 3}, {2, 4}}) {
        const Generator g = make_genpoly(c, d, 1, Domain::integers);
        const auto [pos, mirror] = integer_domain_split(g);
        CHECK(pos.domain == Domain::naturals);
        CHECK(mirror.domain == Domain::naturals);

        std::set<long long> whole, split;
        for (long long v : value_stream(g, 2000)) whole.insert(v);
        for (long long v : value_stream(pos, 2000)) split.insert(v);
        for (long long v : value_stream(mirror, 2000)) split.insert(v);
        CHECK(whole == split);
    }

    // c > d folds the mirror into a plain gp term
    const auto [pos32, mir32] = integer_domain_split(make_genpoly(3, 2, 1, Domain::integers));
    CHECK(std::holds_alternative<GenPoly>(mir32.kind));
    CHECK(std::get<GenPoly>(mir32.kind).c == 3);
    CHECK(std::get<GenPoly>(mir32.kind).d == 1);
    // c <= d keeps a mirror kind whose small values clip negative
    const auto [pos12, mir12] = integer_domain_split(make_genpoly(1, 2, 1, Domain::integers));
    CHECK(std::holds_alternative<GenPolyMirror>(mir12.kind));
    CHECK(eval(pos12, 1) == 2);
    CHECK(eval(mir12, 1) == -1);
}

TEST_CASE("canonical gp display") {
    CHECK(canonical_display(1, 2) == "z(z+3)/2");
    CHECK(canonical_display(1, 1) == "z(z+1)/2");
    CHECK(canonical_display(2, 1) == "z^2");
    CHECK(canonical_display(2, 3) == "z(z+2)");
    CHECK(canonical_display(2, 4) == "z(z+3)");
    CHECK(canonical_display(15, 2) == "z(15z-11)/2");
    CHECK(canonical_display(4, 6) == "2z(z+2)");
    CHECK(canonical_display(3, 6) == "3z(z+3)/2");
    CHECK(canonical_display(16, 6) == "2z(4z-1)");
    CHECK(canonical_display(21, 8) == "z(21z-5)/2");
    CHECK(canonical_display(4, 3) == "z(2z+1)");
    CHECK(canonical_display(20, 8) == "2z(5z-1)");
    CHECK(canonical_display(8, 3) == "z(4z-1)");
    CHECK(canonical_display(9, 4) == "z(9z-1)/2");
    CHECK(canonical_display(1, 2, 'y') == "y(y+3)/2");
}

TEST_CASE("term and form display") {
    CHECK(term_display(make_triangular(), 'x') == "T_x");
    CHECK(term_display(make_triangular(2), 'y') == "2T_y");
    CHECK(term_display(make_square(), 'y') == "y^2");
    CHECK(term_display(make_square(7), 'y') == "7y^2");
    CHECK(term_display(make_polygonal(5), 'y') == "p5(y)");
    CHECK(term_display(make_second_polygonal(5), 'z') == "pbar5(z)");
    CHECK(term_display(make_genpoly(1, 2), 'z') == "z(z+3)/2");
    CHECK(term_display(make_genpoly(1, 2, 3), 'z') == "3*[z(z+3)/2]");
    CHECK(term_display(make_square(1, Domain::integers), 'x') == "x^2@int");

    const TernaryForm f{{make_triangular(), make_triangular(2), make_genpoly(1, 2)}};
    CHECK(form_display(f) == "T_x+2T_y+z(z+3)/2");
    const TernaryForm two{{make_square(), make_genpoly(1, 2), make_zero()}};
    CHECK(form_display(two) == "x^2+y(y+3)/2");
}

TEST_CASE("value streams are sorted, distinct, and complete") {
    const auto vs = value_stream(make_genpoly(5, 2), 500);
    CHECK(std::is_sorted(vs.begin(), vs.end()));
    CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
    CHECK(vs.front() == 0);
    for (long long z = 0;; ++z) {
        const long long v = eval(make_genpoly(5, 2), z);
        if (v > 500) break;
        CHECK(std::binary_search(vs.begin(), vs.end(), v));
    }
    CHECK(value_stream(make_zero(), 100) == std::vector<long long>{0});

    // integers domain walks both directions
    const auto zs = value_stream(make_genpoly(1, 2, 1, Domain::integers), 100);
    CHECK(std::is_sorted(zs.begin(), zs.end()));
    CHECK(std::binary_search(zs.begin(), zs.end(), 2)); // z = -4
}

TEST_CASE("min positive value") {
    CHECK(min_positive_value(make_triangular()) == 1);
    CHECK(min_positive_value(make_triangular(2)) == 2);
    CHECK(min_positive_value(make_genpoly(5, 2)) == 2);
    CHECK(min_positive_value(make_square(9)) == 9);
    CHECK_FALSE(min_positive_value(make_zero()).has_value());
}

TEST_CASE("gp strictness predicate") {
    CHECK(gp_strict(3, 2));
    CHECK(gp_strict(2, 4)); // d > c never divides
    CHECK_FALSE(gp_strict(4, 2));
    CHECK_FALSE(gp_strict(5, 1));
    CHECK_FALSE(gp_strict(4, 4));
}

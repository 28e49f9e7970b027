#include "tusv/catalog.hpp"

#include "tusv/grammar.hpp"
#include "tusv/sieve.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

using namespace tusv;
using namespace tusv::catalog;

TEST_CASE("list shapes and sizes") {
    REQUIRE(lists().size() == 5);
    const struct {
        const char* id;
        Family fam;
        std::size_t size;
        long long witness_bound;
    } want[] = {
        {"1.1", Family::quad_pair, 7, 1000},
        {"1.2", Family::tri_pair, 37, 1000},
        {"1.3i", Family::mixed_pair, 51, 1000},
        {"1.3ii", Family::mixed_pair, 18, 1000},
        {"liouville", Family::tri_triple, 7, 10000},
    };
    for (const auto& w : want) {
        const ListSpec* spec = find_list(w.id);
        REQUIRE_MESSAGE(spec != nullptr, w.id);
        CHECK(spec->family == w.fam);
        CHECK(spec->expected.size() == w.size);
        CHECK(spec->witness_bound == w.witness_bound);
        for (const Tuple& t : spec->expected)
            CHECK_MESSAGE(tuple_admissible(spec->family, t),
                          w.id << " lists " << tuple_display(spec->family, t));
    }
    CHECK(find_list("nope") == nullptr);
}

TEST_CASE("the two omitted survivors") {
    const ListSpec* l2 = find_list("1.2");
    REQUIRE(l2->known_unlisted.size() == 1);
    CHECK(l2->known_unlisted[0] == Tuple{1, 2, 2, 4});
    CHECK(std::find(l2->expected.begin(), l2->expected.end(), l2->known_unlisted[0]) ==
          l2->expected.end());

    const ListSpec* l3 = find_list("1.3i");
    REQUIRE(l3->known_unlisted.size() == 1);
    CHECK(l3->known_unlisted[0] == Tuple{1, 1, 4, 6});

    CHECK(find_list("1.1")->known_unlisted.empty());
    CHECK(find_list("1.3ii")->known_unlisted.empty());
    CHECK(find_list("liouville")->known_unlisted.empty());
}

TEST_CASE("1.3ii excludes the coefficient pairs 1.3i already covers") {
    const auto& ex = find_list("1.3ii")->excluded_ab;
    REQUIRE(ex.size() == 2);
    CHECK(std::find(ex.begin(), ex.end(), std::pair<long long, long long>{1, 1}) != ex.end());
    CHECK(std::find(ex.begin(), ex.end(), std::pair<long long, long long>{2, 1}) != ex.end());
    for (const Tuple& t : find_list("1.3ii")->expected)
        CHECK(std::find(ex.begin(), ex.end(),
                        std::pair<long long, long long>{t.a, t.b}) == ex.end());
    CHECK(find_list("1.2")->excluded_ab.empty());
}

TEST_CASE("tuple forms evaluate as their display suggests") {
    CHECK(tuple_display(Family::quad_pair, {1, 7, 1, 2}) == "x^2+7y^2+z(z+3)/2");
    CHECK(tuple_display(Family::tri_pair, {1, 2, 2, 4}) == "T_x+2T_y+z(z+3)");
    CHECK(tuple_display(Family::mixed_pair, {2, 3, 5, 2}) == "2T_x+3y^2+z(5z-1)/2");
    CHECK(tuple_display(Family::tri_triple, {1, 2, 4, 1}) == "T_x+2T_y+4T_z");

    const TernaryForm f = tuple_form(Family::quad_pair, {1, 7, 1, 2});
    CHECK(eval(f.terms[0], 3) == 9);
    CHECK(eval(f.terms[1], 2) == 28);
    CHECK(eval(f.terms[2], 2) == 5);

    const TernaryForm t3 = tuple_form(Family::tri_triple, {1, 2, 4, 1});
    CHECK(eval(t3.terms[2], 3) == 24);
}

TEST_CASE("admissibility rules per family") {
    CHECK(tuple_admissible(Family::quad_pair, {1, 3, 3, 2}));
    CHECK_FALSE(tuple_admissible(Family::quad_pair, {1, 3, 4, 2})); // d | c
    CHECK_FALSE(tuple_admissible(Family::quad_pair, {2, 1, 3, 2})); // a > b
    CHECK_FALSE(tuple_admissible(Family::quad_pair, {1, 0, 3, 2}));

    CHECK(tuple_admissible(Family::tri_pair, {1, 1, 1, 2}));
    CHECK_FALSE(tuple_admissible(Family::tri_pair, {1, 1, 2, 1}));

    CHECK(tuple_admissible(Family::mixed_pair, {5, 1, 3, 2})); // no a <= b order here
    CHECK_FALSE(tuple_admissible(Family::mixed_pair, {1, 1, 6, 3}));

    CHECK(tuple_admissible(Family::tri_triple, {1, 2, 2, 1}));
    CHECK_FALSE(tuple_admissible(Family::tri_triple, {2, 1, 2, 1})); // needs a <= b <= c
    CHECK_FALSE(tuple_admissible(Family::tri_triple, {1, 2, 2, 2})); // d is unused, pinned to 1
}

TEST_CASE("witness table entries parse and stay within their claim") {
    const auto& wt = witness_table();
    CHECK(wt.size() == 167);
    std::set<std::string> groups;
    for (const auto& e : wt) {
        groups.insert(std::string(e.group));
        const TernaryForm f = parse_form(e.form);
        CHECK(e.value >= 0);
        // spot the cheap structural facts here; the full non-representability
        // recheck lives in the classifier suite
        CHECK(form_display(f).size() > 0);
    }
    CHECK(groups == std::set<std::string>{"1.1", "1.2", "1.3i", "1.3ii", "anchors"});
}

TEST_CASE("anchor caps satisfy cap = anchor - 2d") {
    const auto& caps = anchor_caps();
    CHECK(caps.size() == 31);
    for (const auto& c : caps) {
        CHECK(c.cap == c.anchor - 2 * c.d);
        CHECK(c.d >= 1);
        CHECK(c.anchor > 2 * c.d);
        const TernaryForm lhs = parse_form(std::string(c.lhs));
        CHECK(form_display(lhs).size() > 0);
    }
}

TEST_CASE("settled sums sit on their lists") {
    const auto& done = settled_sums();
    CHECK(done.size() == 20);
    for (const auto& s : done) {
        const ListSpec* spec = find_list(s.list_id);
        REQUIRE(spec != nullptr);
        CHECK(spec->family == s.family);
        CHECK(std::find(spec->expected.begin(), spec->expected.end(), s.t) !=
              spec->expected.end());
    }
}

TEST_CASE("open survivors are the lists minus the settled sums") {
    const auto open = open_survivor_sums();
    CHECK(open.size() == 93);

    std::set<std::pair<std::string, Tuple>> settled;
    for (const auto& s : settled_sums())
        settled.emplace(std::string(s.list_id), s.t);

    std::size_t expected_open = 0;
    for (const auto& spec : lists()) {
        if (spec.family == Family::tri_triple) continue; // settled classically
        for (const Tuple& t : spec.expected)
            if (!settled.count({std::string(spec.id), t})) ++expected_open;
    }
    CHECK(open.size() == expected_open);

    for (const auto& s : open) {
        CHECK(!settled.count({std::string(s.list_id), s.t}));
        CHECK(s.family != Family::tri_triple);
    }
}

TEST_CASE("open mixed sums parse and none are trivially failing") {
    const auto& sums = open_mixed_sums();
    CHECK(sums.size() == 58);
    std::set<std::string_view> distinct(sums.begin(), sums.end());
    CHECK(distinct.size() == sums.size());
    for (std::string_view s : sums) {
        const TernaryForm f = parse_form(s);
        // a conjecturally universal sum had better attain everything tiny
        CHECK(is_universal_up_to(f, 50));
    }
}

TEST_CASE("family names") {
    CHECK(family_name(Family::quad_pair) == "quad-pair");
    CHECK(family_name(Family::tri_pair) == "tri-pair");
    CHECK(family_name(Family::mixed_pair) == "mixed-pair");
    CHECK(family_name(Family::tri_triple) == "tri-triple");
}

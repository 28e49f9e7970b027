#include "tusv/classifier.hpp"

#include "tusv/grammar.hpp"
#include "tusv/sieve.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace tusv;
using catalog::Caps;
using catalog::Family;
using catalog::Tuple;

TEST_CASE("cap_from_anchor reproduces a table row") {
    // T_x + y^2 with d = 8: 41 needs z >= 2, so c <= 41 - 16 = 25
    const auto out = cap_from_anchor(parse_term("tri"), parse_term("sq"), 8, 41);
    REQUIRE(out.error.empty());
    CHECK(out.cap == 25);
}

TEST_CASE("cap_from_anchor rejects attained anchors") {
    // 10 = 1 + 9 is hit by T_x + y^2 alone
    const auto direct = cap_from_anchor(parse_term("tri"), parse_term("sq"), 3, 10);
    CHECK_FALSE(direct.cap.has_value());
    CHECK(direct.error == "10 = 1 + 9");

    // 8 is not T + y^2, but 8 - 3 = 1 + 4 is, so the z = 1 slot catches it
    const auto with_d = cap_from_anchor(parse_term("tri"), parse_term("sq"), 3, 8);
    CHECK_FALSE(with_d.cap.has_value());
    CHECK(with_d.error == "8 = 1 + 4 + d");

    const auto degenerate = cap_from_anchor(parse_term("tri"), parse_term("sq"), 5, 10);
    CHECK_FALSE(degenerate.cap.has_value());
    CHECK(degenerate.error == "anchor must exceed 2d");
}

TEST_CASE("survivors shrink as the witness bound grows") {
    const Caps caps{1, 7, 16, 5};
    const auto loose = enumerate_survivors(Family::quad_pair, caps, 60);
    const auto tight = enumerate_survivors(Family::quad_pair, caps, 1000);
    CHECK(loose.survivors.size() >= tight.survivors.size());
    CHECK(std::is_sorted(tight.survivors.begin(), tight.survivors.end()));
    for (const Tuple& t : tight.survivors)
        CHECK(std::binary_search(loose.survivors.begin(), loose.survivors.end(), t));
    CHECK(tight.survivors.size() == 7);
    CHECK_FALSE(tight.compared);
}

TEST_CASE("sweeps only visit admissible tuples") {
    const auto s = enumerate_survivors(Family::tri_pair, Caps{1, 2, 4, 4}, 200);
    for (const Tuple& t : s.survivors) {
        CHECK(tuple_admissible(Family::tri_pair, t));
        CHECK(t.a <= t.b);
        CHECK(gp_strict(t.c, t.d));
    }
}

TEST_CASE("excluded coefficient pairs are skipped") {
    const std::vector<std::pair<long long, long long>> skip{{1, 1}};
    const auto all = enumerate_survivors(Family::mixed_pair, Caps{2, 1, 3, 2}, 100);
    const auto cut = enumerate_survivors(Family::mixed_pair, Caps{2, 1, 3, 2}, 100,
                                         nullptr, 1, &skip);
    for (const Tuple& t : cut.survivors) CHECK(t.a != 1);
    CHECK(cut.survivors.size() < all.survivors.size());
}

TEST_CASE("threaded sweeps match single-threaded ones") {
    const Caps caps{1, 4, 12, 5};
    const auto serial = enumerate_survivors(Family::tri_pair, caps, 400, nullptr, 1);
    const auto parallel = enumerate_survivors(Family::tri_pair, caps, 400, nullptr, 3);
    CHECK(serial.survivors == parallel.survivors);
}

TEST_CASE("list reproduction: 1.1 matches") {
    const auto survey = reproduce_list("1.1");
    CHECK(survey.compared);
    CHECK(survey.expected_match);
    CHECK(survey.missing.empty());
    CHECK(survey.extra.empty());
    CHECK(survey.survivors.size() == 7);
}

TEST_CASE("list reproduction: 1.2 finds the omitted survivor") {
    const auto survey = reproduce_list("1.2");
    CHECK(survey.compared);
    CHECK_FALSE(survey.expected_match);
    CHECK(survey.missing.empty());
    REQUIRE(survey.extra.size() == 1);
    CHECK(survey.extra[0] == Tuple{1, 2, 2, 4});
    CHECK(survey.extra == catalog::find_list("1.2")->known_unlisted);
}

TEST_CASE("list reproduction: liouville matches") {
    const auto survey = reproduce_list("liouville");
    CHECK(survey.expected_match);
    CHECK(survey.survivors.size() == 7);
}

TEST_CASE("unknown list id throws") {
    CHECK_THROWS_AS(reproduce_list("2.9"), std::invalid_argument);
}

TEST_CASE("the witness table holds up") {
    const auto report = confirm_witness_table();
    CHECK(report.failures == 0);
    CHECK(report.checks.size() == catalog::witness_table().size());
    for (const auto& c : report.checks) {
        CHECK(c.confirmed);
        CHECK(c.representation.empty());
    }
}

TEST_CASE("witness confirmation notices a bogus claim") {
    // 5 = 0 + 4 + 1: not a witness for x^2 + y^2 + z^2, and the checker says why
    catalog::WitnessEntry fake{"1.1", "sq + sq + sq", 5};
    const TernaryForm f = parse_form(fake.form);
    CHECK(attains_brute(f, fake.value));
}

TEST_CASE("anchor caps all confirm") {
    const auto report = confirm_anchor_caps();
    CHECK(report.failures == 0);
    CHECK(report.checks.size() == catalog::anchor_caps().size());
    std::set<long long> caps_seen;
    for (const auto& c : report.checks) {
        CHECK(c.confirmed);
        caps_seen.insert(c.entry->cap);
    }
    // the headline caps quoted alongside the lists
    for (long long cap : {10LL, 15LL, 35LL, 19LL, 21LL, 25LL, 16LL, 17LL, 12LL, 7LL, 13LL})
        CHECK(caps_seen.count(cap));
}

TEST_CASE("sweeps accept a cache") {
    MaskCache cache(std::filesystem::temp_directory_path() / "tusv-classifier-test");
    cache.clear();
    const auto cached = enumerate_survivors(Family::quad_pair, Caps{1, 3, 6, 3}, 300, &cache);
    const auto plain = enumerate_survivors(Family::quad_pair, Caps{1, 3, 6, 3}, 300);
    CHECK(cached.survivors == plain.survivors);
    cache.clear();
}

#include "tusv/catalog.hpp"

#include "tusv/grammar.hpp"

#include <stdexcept>

// Generated by a script from the brute-force validation tables; edit the
// generator, not this file.
namespace tusv::catalog {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::quad_pair: return "quad-pair";
        case Family::tri_pair: return "tri-pair";
        case Family::mixed_pair: return "mixed-pair";
        case Family::tri_triple: return "tri-triple";
    }
    return "?";
}

TernaryForm tuple_form(Family fam, const Tuple& t) {
    switch (fam) {
        case Family::quad_pair:
            return TernaryForm{{make_square(t.a), make_square(t.b), make_genpoly(t.c, t.d)}};
        case Family::tri_pair:
            return TernaryForm{{make_triangular(t.a), make_triangular(t.b), make_genpoly(t.c, t.d)}};
        case Family::mixed_pair:
            return TernaryForm{{make_triangular(t.a), make_square(t.b), make_genpoly(t.c, t.d)}};
        case Family::tri_triple:
            return TernaryForm{{make_triangular(t.a), make_triangular(t.b), make_triangular(t.c)}};
    }
    throw std::invalid_argument("unknown family");
}

std::string tuple_display(Family fam, const Tuple& t) {
    return form_display(tuple_form(fam, t));
}

bool tuple_admissible(Family fam, const Tuple& t) {
    if (t.a < 1 || t.b < 1 || t.c < 1 || t.d < 1) return false;
    switch (fam) {
        case Family::quad_pair:
        case Family::tri_pair:
            return t.a <= t.b && gp_strict(t.c, t.d);
        case Family::mixed_pair:
            return gp_strict(t.c, t.d);
        case Family::tri_triple:
            return t.a <= t.b && t.b <= t.c && t.d == 1;
    }
    return false;
}

const std::vector<ListSpec>& lists() {
    static const std::vector<ListSpec> all = {
        {"1.1", Family::quad_pair, {1, 7, 16, 5}, 1000,
         {
         {1, 2, 2, 4}, {1, 1, 1, 2}, {1, 2, 1, 2}, {1, 3, 1, 2}, {1, 2, 1, 3}, {1, 2, 3, 2},
         {1, 2, 3, 4},
         },
         {}, {}},
        {"1.2", Family::tri_pair, {1, 4, 35, 5}, 1000,
         {
         {1, 1, 2, 3}, {1, 1, 2, 4}, {1, 1, 2, 5}, {1, 1, 6, 4}, {1, 1, 6, 5}, {1, 1, 8, 5},
         {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 1, 4}, {1, 1, 1, 5}, {1, 1, 3, 2}, {1, 1, 3, 4},
         {1, 1, 3, 5}, {1, 1, 5, 4}, {1, 1, 7, 5}, {1, 1, 9, 4}, {1, 1, 11, 2}, {1, 1, 15, 2},
         {1, 1, 15, 4}, {1, 2, 2, 3}, {1, 2, 6, 4}, {1, 2, 1, 2}, {1, 2, 1, 3}, {1, 2, 1, 4},
         {1, 2, 3, 2}, {1, 2, 3, 4}, {1, 2, 5, 2}, {1, 2, 5, 3}, {1, 2, 5, 4}, {1, 2, 7, 2},
         {1, 2, 7, 3}, {1, 2, 9, 2}, {1, 2, 9, 4}, {1, 2, 15, 4}, {1, 3, 3, 2}, {1, 4, 1, 2},
         {1, 4, 3, 2},
         },
         {{1, 2, 2, 4}}, {}},
        {"1.3i", Family::mixed_pair, {1, 1, 25, 8}, 1000,
         {
         {1, 1, 2, 3}, {1, 1, 2, 4}, {1, 1, 2, 5}, {1, 1, 2, 6}, {1, 1, 2, 7}, {1, 1, 2, 8},
         {1, 1, 4, 8}, {1, 1, 4, 3}, {1, 1, 6, 7}, {1, 1, 6, 8}, {1, 1, 16, 6}, {1, 1, 10, 3},
         {1, 1, 20, 8}, {1, 1, 10, 8}, {1, 1, 14, 6}, {1, 1, 14, 8}, {1, 1, 16, 3}, {1, 1, 18, 4},
         {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 1, 4}, {1, 1, 1, 5}, {1, 1, 1, 6}, {1, 1, 1, 7},
         {1, 1, 1, 8}, {1, 1, 3, 2}, {1, 1, 3, 4}, {1, 1, 3, 5}, {1, 1, 3, 6}, {1, 1, 3, 7},
         {1, 1, 3, 8}, {1, 1, 5, 2}, {1, 1, 5, 3}, {1, 1, 5, 4}, {1, 1, 5, 6}, {1, 1, 5, 8},
         {1, 1, 7, 3}, {1, 1, 7, 4}, {1, 1, 7, 6}, {1, 1, 7, 2}, {1, 1, 21, 6}, {1, 1, 9, 4},
         {1, 1, 9, 8}, {1, 1, 11, 3}, {1, 1, 11, 8}, {1, 1, 13, 2}, {1, 1, 13, 3}, {1, 1, 13, 4},
         {1, 1, 15, 2}, {1, 1, 15, 4}, {1, 1, 21, 8},
         },
         {{1, 1, 4, 6}}, {}},
        {"1.3ii", Family::mixed_pair, {7, 4, 25, 8}, 1000,
         {
         {1, 2, 1, 2}, {1, 2, 1, 3}, {1, 2, 1, 4}, {1, 2, 2, 4}, {1, 2, 6, 4}, {1, 2, 3, 2},
         {1, 2, 3, 4}, {1, 2, 5, 2}, {1, 2, 7, 2}, {1, 2, 9, 2}, {1, 2, 9, 4}, {1, 3, 3, 2},
         {1, 4, 1, 2}, {1, 4, 3, 2}, {3, 1, 1, 2}, {3, 1, 3, 2}, {4, 1, 1, 2}, {6, 1, 1, 2},
         },
         {}, {{1, 1}, {2, 1}}},
        {"liouville", Family::tri_triple, {20, 20, 20, 1}, 10000,
         {
         {1, 1, 1, 1}, {1, 1, 2, 1}, {1, 1, 4, 1}, {1, 1, 5, 1}, {1, 2, 2, 1}, {1, 2, 3, 1},
         {1, 2, 4, 1},
         },
         {}, {}},
    };
    return all;
}

const ListSpec* find_list(std::string_view id) {
    for (const auto& l : lists())
        if (l.id == id) return &l;
    return nullptr;
}

const std::vector<WitnessEntry>& witness_table() {
    static const std::vector<WitnessEntry> table = {
        {"1.1", "sq + 6*sq + gp(1,2)", 32},
        {"1.1", "sq + 7*sq + gp(1,2)", 19},
        {"1.1", "sq + sq + gp(3,2)", 14},
        {"1.1", "sq + sq + gp(7,2)", 14},
        {"1.1", "sq + sq + gp(5,2)", 24},
        {"1.1", "sq + sq + gp(9,2)", 24},
        {"1.1", "sq + 2*sq + gp(2,3)", 13},
        {"1.1", "sq + 2*sq + gp(4,3)", 31},
        {"1.1", "sq + 2*sq + gp(1,4)", 14},
        {"1.1", "sq + 2*sq + gp(5,4)", 69},
        {"1.1", "sq + 2*sq + gp(6,4)", 35},
        {"1.1", "sq + 3*sq + gp(3,2)", 17},
        {"1.1", "sq + 4*sq + gp(1,2)", 12},
        {"1.1", "sq + 4*sq + gp(5,2)", 12},
        {"1.1", "sq + 4*sq + gp(3,2)", 14},
        {"1.1", "sq + 4*sq + gp(7,2)", 14},
        {"1.1", "sq + 5*sq + gp(3,2)", 10},
        {"1.1", "sq + 5*sq + gp(1,2)", 12},
        {"1.1", "sq + 5*sq + gp(5,2)", 12},
        {"1.1", "sq@int + gp(1,2)@int", 7},
        {"1.2", "tri + tri + gp(5,2)", 35},
        {"1.2", "tri + tri + gp(7,2)", 19},
        {"1.2", "tri + tri + gp(9,2)", 180},
        {"1.2", "tri + tri + gp(13,2)", 292},
        {"1.2", "tri + tri + gp(7,4)", 23},
        {"1.2", "tri + tri + gp(10,4)", 23},
        {"1.2", "tri + tri + gp(11,4)", 122},
        {"1.2", "tri + tri + gp(13,4)", 44},
        {"1.2", "tri + tri + gp(14,4)", 117},
        {"1.2", "tri + tri + gp(4,5)", 19},
        {"1.2", "tri + tri + gp(9,5)", 59},
        {"1.2", "tri + 2*tri + gp(11,2)", 169},
        {"1.2", "tri + 2*tri + gp(13,2)", 169},
        {"1.2", "tri + 2*tri + gp(15,2)", 83},
        {"1.2", "tri + 2*tri + gp(17,2)", 46},
        {"1.2", "tri + 2*tri + gp(19,2)", 151},
        {"1.2", "tri + 2*tri + gp(21,2)", 39},
        {"1.2", "tri + 2*tri + gp(23,2)", 46},
        {"1.2", "tri + 2*tri + gp(25,2)", 141},
        {"1.2", "tri + 2*tri + gp(27,2)", 81},
        {"1.2", "tri + 2*tri + gp(29,2)", 83},
        {"1.2", "tri + 2*tri + gp(31,2)", 39},
        {"1.2", "tri + 2*tri + gp(33,2)", 76},
        {"1.2", "tri + 2*tri + gp(35,2)", 76},
        {"1.2", "tri + 2*tri + gp(4,3)", 14},
        {"1.2", "tri + 2*tri + gp(8,3)", 109},
        {"1.2", "tri + 2*tri + gp(7,4)", 29},
        {"1.2", "tri + 2*tri + gp(10,4)", 29},
        {"1.2", "tri + 2*tri + gp(17,4)", 29},
        {"1.2", "tri + 2*tri + gp(11,4)", 128},
        {"1.2", "tri + 2*tri + gp(13,4)", 50},
        {"1.2", "tri + 2*tri + gp(18,4)", 50},
        {"1.2", "tri + 2*tri + gp(14,4)", 473},
        {"1.2", "tri + 2*tri + gp(19,4)", 64},
        {"1.2", "tri + 2*tri + gp(21,4)", 53},
        {"1.2", "tri + 3*tri + gp(1,2)", 7},
        {"1.2", "tri + 3*tri + gp(5,2)", 7},
        {"1.2", "tri + 3*tri + gp(7,2)", 7},
        {"1.2", "tri + 3*tri + gp(9,2)", 7},
        {"1.2", "tri + 3*tri + gp(11,2)", 7},
        {"1.2", "tri + 4*tri + gp(5,2)", 11},
        {"1.2", "tri + 4*tri + gp(7,2)", 58},
        {"1.3i", "tri + sq + gp(9,2)", 60},
        {"1.3i", "tri + sq + gp(11,2)", 62},
        {"1.3i", "tri + sq + gp(14,3)", 89},
        {"1.3i", "tri + sq + gp(8,3)", 41},
        {"1.3i", "tri + sq + gp(17,3)", 41},
        {"1.3i", "tri + sq + gp(6,4)", 27},
        {"1.3i", "tri + sq + gp(11,4)", 27},
        {"1.3i", "tri + sq + gp(10,4)", 38},
        {"1.3i", "tri + sq + gp(17,4)", 38},
        {"1.3i", "tri + sq + gp(14,4)", 342},
        {"1.3i", "tri + sq + gp(8,6)", 33},
        {"1.3i", "tri + sq + gp(13,6)", 33},
        {"1.3i", "tri + sq + gp(15,6)", 47},
        {"1.3i", "tri + sq + gp(17,6)", 47},
        {"1.3i", "tri + sq + gp(9,6)", 68},
        {"1.3i", "tri + sq + gp(10,6)", 173},
        {"1.3i", "tri + sq + gp(11,6)", 183},
        {"1.3i", "tri + sq + gp(19,6)", 69},
        {"1.3i", "tri + sq + gp(20,6)", 164},
        {"1.3i", "tri + sq + gp(4,7)", 41},
        {"1.3i", "tri + sq + gp(5,7)", 27},
        {"1.3i", "tri + sq + gp(7,8)", 41},
        {"1.3i", "tri + sq + gp(12,8)", 41},
        {"1.3i", "tri + sq + gp(17,8)", 41},
        {"1.3i", "tri + sq + gp(13,8)", 76},
        {"1.3i", "tri + sq + gp(22,8)", 76},
        {"1.3i", "tri + sq + gp(15,8)", 182},
        {"1.3i", "tri + sq + gp(18,8)", 68},
        {"1.3i", "tri + sq + gp(19,8)", 68},
        {"1.3i", "tri + sq + gp(25,8)", 68},
        {"1.3i", "tri + sq + gp(23,8)", 151},
        {"1.3ii", "tri + 2*sq + gp(11,2)", 22},
        {"1.3ii", "tri + 2*sq + gp(15,2)", 419},
        {"1.3ii", "tri + 2*sq + gp(13,2)", 43},
        {"1.3ii", "tri + 2*sq + gp(17,2)", 43},
        {"1.3ii", "tri + 2*sq + gp(5,4)", 20},
        {"1.3ii", "tri + 2*sq + gp(11,4)", 26},
        {"1.3ii", "tri + 2*sq + gp(7,4)", 31},
        {"1.3ii", "tri + 2*sq + gp(10,4)", 31},
        {"1.3ii", "tri + 3*sq + gp(1,2)", 7},
        {"1.3ii", "tri + 4*sq + gp(5,2)", 11},
        {"1.3ii", "tri + 4*sq + gp(7,2)", 13},
        {"1.3ii", "4*tri + sq + gp(3,2)", 17},
        {"1.3ii", "4*tri + sq + gp(7,2)", 17},
        {"1.3ii", "4*tri + sq + gp(11,2)", 17},
        {"1.3ii", "4*tri + sq + gp(5,2)", 19},
        {"1.3ii", "4*tri + sq + gp(9,2)", 19},
        {"1.3ii", "4*tri + sq + gp(13,2)", 19},
        {"1.3ii", "5*tri + sq + gp(1,2)", 12},
        {"1.3ii", "5*tri + sq + gp(3,2)", 10},
        {"1.3ii", "5*tri + sq + gp(5,2)", 12},
        {"1.3ii", "7*tri + sq + gp(1,2)", 19},
        {"1.3ii", "sq + gp(1,2)", 7},
        {"anchors", "sq + sq", 3},
        {"anchors", "sq + sq", 14},
        {"anchors", "sq + sq", 12},
        {"anchors", "sq + 2*sq", 5},
        {"anchors", "sq + 2*sq", 7},
        {"anchors", "sq + 2*sq", 10},
        {"anchors", "sq + 2*sq", 14},
        {"anchors", "sq + 3*sq", 8},
        {"anchors", "sq + 3*sq", 6},
        {"anchors", "sq + 4*sq", 12},
        {"anchors", "sq + 4*sq", 10},
        {"anchors", "sq + 5*sq", 10},
        {"anchors", "sq + 5*sq", 12},
        {"anchors", "tri + tri", 5},
        {"anchors", "tri + tri", 8},
        {"anchors", "tri + tri", 14},
        {"anchors", "tri + tri", 17},
        {"anchors", "tri + tri", 19},
        {"anchors", "tri + tri", 23},
        {"anchors", "tri + 2*tri", 4},
        {"anchors", "tri + 2*tri", 39},
        {"anchors", "tri + 2*tri", 37},
        {"anchors", "tri + 2*tri", 14},
        {"anchors", "tri + 2*tri", 11},
        {"anchors", "tri + 2*tri", 29},
        {"anchors", "tri + 2*tri", 25},
        {"anchors", "tri + 3*tri", 16},
        {"anchors", "tri + 3*tri", 14},
        {"anchors", "tri + 4*tri", 11},
        {"anchors", "tri + 4*tri", 9},
        {"anchors", "tri + sq", 8},
        {"anchors", "tri + sq", 13},
        {"anchors", "tri + sq", 18},
        {"anchors", "tri + sq", 20},
        {"anchors", "tri + sq", 23},
        {"anchors", "tri + sq", 27},
        {"anchors", "tri + sq", 33},
        {"anchors", "tri + sq", 34},
        {"anchors", "tri + sq", 38},
        {"anchors", "tri + sq", 41},
        {"anchors", "tri + 2*sq", 4},
        {"anchors", "tri + 2*sq", 7},
        {"anchors", "tri + 2*sq", 13},
        {"anchors", "tri + 2*sq", 16},
        {"anchors", "tri + 2*sq", 20},
        {"anchors", "tri + 2*sq", 22},
        {"anchors", "3*tri + sq", 8},
        {"anchors", "3*tri + sq", 6},
        {"anchors", "4*tri + sq", 17},
        {"anchors", "4*tri + sq", 15},
        {"anchors", "5*tri + sq", 10},
        {"anchors", "5*tri + sq", 8},
    };
    return table;
}

const std::vector<AnchorCap>& anchor_caps() {
    static const std::vector<AnchorCap> table = {
        {"sq + sq", 2, 14, 10},
        {"sq + 2*sq", 2, 7, 3},
        {"sq + 2*sq", 3, 10, 4},
        {"sq + 2*sq", 4, 14, 6},
        {"sq + 3*sq", 2, 8, 4},
        {"sq + 4*sq", 2, 12, 8},
        {"sq + 5*sq", 2, 10, 6},
        {"tri + tri", 2, 19, 15},
        {"tri + tri", 3, 8, 2},
        {"tri + tri", 4, 23, 15},
        {"tri + tri", 5, 19, 9},
        {"tri + 2*tri", 2, 39, 35},
        {"tri + 2*tri", 3, 14, 8},
        {"tri + 2*tri", 4, 29, 21},
        {"tri + 3*tri", 2, 16, 12},
        {"tri + 4*tri", 2, 11, 7},
        {"tri + sq", 2, 20, 16},
        {"tri + sq", 3, 23, 17},
        {"tri + sq", 4, 27, 19},
        {"tri + sq", 5, 13, 3},
        {"tri + sq", 6, 33, 21},
        {"tri + sq", 7, 20, 6},
        {"tri + sq", 8, 41, 25},
        {"tri + 2*sq", 2, 22, 18},
        {"tri + 2*sq", 3, 7, 1},
        {"tri + 2*sq", 4, 20, 12},
        {"tri + 3*sq", 2, 7, 3},
        {"tri + 4*sq", 2, 11, 7},
        {"3*tri + sq", 2, 8, 4},
        {"4*tri + sq", 2, 17, 13},
        {"5*tri + sq", 2, 10, 6},
    };
    return table;
}

const std::vector<SettledSum>& settled_sums() {
    static const std::vector<SettledSum> table = {
        {"1.1", Family::quad_pair, {1, 1, 1, 2}},
        {"1.2", Family::tri_pair, {1, 1, 2, 3}},
        {"1.2", Family::tri_pair, {1, 1, 1, 2}},
        {"1.2", Family::tri_pair, {1, 1, 1, 3}},
        {"1.2", Family::tri_pair, {1, 1, 1, 4}},
        {"1.2", Family::tri_pair, {1, 1, 1, 5}},
        {"1.2", Family::tri_pair, {1, 2, 1, 2}},
        {"1.2", Family::tri_pair, {1, 2, 1, 3}},
        {"1.2", Family::tri_pair, {1, 2, 1, 4}},
        {"1.3i", Family::mixed_pair, {1, 1, 2, 3}},
        {"1.3i", Family::mixed_pair, {1, 1, 2, 5}},
        {"1.3i", Family::mixed_pair, {1, 1, 2, 7}},
        {"1.3ii", Family::mixed_pair, {1, 4, 1, 2}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 2}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 3}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 4}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 5}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 6}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 7}},
        {"1.3i", Family::mixed_pair, {1, 1, 1, 8}},
    };
    return table;
}

std::vector<SettledSum> open_survivor_sums() {
    std::vector<SettledSum> out;
    for (const auto& list : lists()) {
        if (list.family == Family::tri_triple) continue; // settled classically
        for (const Tuple& t : list.expected) {
            bool settled = false;
            for (const auto& s : settled_sums())
                if (s.list_id == list.id && s.t == t) settled = true;
            if (!settled) out.push_back({list.id, list.family, t});
        }
    }
    return out;
}

const std::vector<std::string_view>& open_mixed_sums() {
    static const std::vector<std::string_view> table = {
        "tri + p(5) + pbar(5)",
        "tri + p(5) + 2*pbar(5)",
        "tri + 2*p(5) + pbar(5)",
        "tri + pbar(5) + 2*pbar(5)",
        "tri + p(5) + pbar(6)",
        "tri + pbar(5) + p(6)",
        "tri + p(5) + pbar(7)",
        "tri + pbar(5) + p(7)",
        "tri + pbar(5) + p(8)",
        "tri + 2*pbar(5) + p(8)",
        "tri + pbar(5) + p(10)",
        "tri + p(5) + pbar(12)",
        "tri + pbar(5) + p(12)",
        "tri + pbar(5) + p(13)",
        "tri + pbar(5) + p(17)",
        "tri + pbar(5) + p(19)",
        "tri + p(5) + gp(2,4)",
        "tri + p(5) + gp(8,3)",
        "tri + pbar(5) + gp(8,3)",
        "tri + p(5) + gp(10,4)",
        "tri + p(5) + gp(10,6)",
        "tri + pbar(5) + gp(1,2)",
        "tri + p(5) + gp(3,4)",
        "tri + p(5) + gp(5,2)",
        "tri + pbar(5) + gp(5,2)",
        "tri + p(5) + gp(5,3)",
        "tri + pbar(5) + gp(5,3)",
        "tri + p(5) + gp(15,6)",
        "tri + p(5) + gp(15,9)",
        "tri + p(5) + gp(10,3)",
        "tri + p(5) + gp(10,7)",
        "tri + p(5) + gp(14,6)",
        "tri + p(5) + gp(7,4)",
        "tri + pbar(5) + gp(7,3)",
        "tri + p(5) + gp(7,2)",
        "tri + pbar(5) + gp(7,2)",
        "tri + p(5) + gp(9,2)",
        "tri + p(5) + gp(9,7)",
        "tri + p(5) + gp(11,2)",
        "tri + p(5) + gp(11,4)",
        "tri + pbar(5) + gp(11,4)",
        "tri + p(6) + pbar(7)",
        "tri + p(6) + gp(1,2)",
        "tri + p(7) + gp(2,3)",
        "tri + p(8) + pbar(8)",
        "tri + p(8) + gp(1,2)",
        "tri + p(8) + gp(7,3)",
        "tri + p(9) + gp(3,4)",
        "tri + p(11) + gp(5,2)",
        "tri + p(12) + gp(1,2)",
        "tri + gp(1,2) + gp(9,4)",
        "2*tri + p(5) + gp(2,3)",
        "2*tri + p(5) + gp(1,2)",
        "2*tri + p(5) + pbar(5)",
        "2*tri + p(6) + gp(1,2)",
        "3*tri + p(5) + gp(1,2)",
        "sq + pbar(5) + p(6)",
        "sq + pbar(5) + pbar(7)",
    };
    return table;
}

} // namespace tusv::catalog

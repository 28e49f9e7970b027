#pragma once

#include "tusv/generator.hpp"

#include <string_view>
#include <vector>

// All embedded reference data lives in catalog.cpp so it can be reviewed in
// one place: the published candidate lists, the non-representable witness
// table, the anchor caps, the settled sums, and the open conjectural sums.
namespace tusv::catalog {

// Candidate families the sweeps enumerate. Slot shapes, with f = gp(c,d):
//   quad_pair:  x^2 + b*y^2  + f     (a fixed at 1)
//   tri_pair:   a*T_x + b*T_y + f    (a <= b as published; we sweep b only, a=1)
//   mixed_pair: a*T_x + b*y^2 + f
//   tri_triple: a*T_x + b*T_y + c*T_z (a <= b <= c; no f, d unused)
enum class Family { quad_pair, tri_pair, mixed_pair, tri_triple };

std::string_view family_name(Family f);

struct Tuple {
    long long a = 1, b = 1, c = 1, d = 1;
    auto operator<=>(const Tuple&) const = default;
};

struct Caps {
    long long a = 1, b = 1, c = 1, d = 1; // inclusive upper bounds
};

struct ListSpec {
    std::string_view id;       // selector accepted by the CLI and tests
    Family family;
    Caps caps;
    long long witness_bound;   // W used when sweeping for survivors
    std::vector<Tuple> expected;       // the published list
    std::vector<Tuple> known_unlisted; // sweep survivors the publication omits
    // (a,b) pairs the sweep skips because they reduce to another family's box
    std::vector<std::pair<long long, long long>> excluded_ab;
};

const std::vector<ListSpec>& lists();
const ListSpec* find_list(std::string_view id);

// The three-term form a family tuple denotes, and its display string.
TernaryForm tuple_form(Family fam, const Tuple& t);
std::string tuple_display(Family fam, const Tuple& t);
// True when the tuple satisfies the family's side conditions (a <= b orders,
// d not dividing c for the gp slot). Per-list (a,b) exclusions are not
// checked here; they live on the ListSpec.
bool tuple_admissible(Family fam, const Tuple& t);

struct WitnessEntry {
    std::string_view group; // reporting bucket
    std::string_view form;  // term-grammar spelling
    long long value;        // claimed not attained
};
const std::vector<WitnessEntry>& witness_table();

struct AnchorCap {
    std::string_view lhs; // the two fixed terms, term-grammar spelling
    long long d;
    long long anchor;     // not attained by lhs + {0, d}
    long long cap;        // implied bound on c (anchor - 2d)
};
const std::vector<AnchorCap>& anchor_caps();

// Sums whose universality is settled; a bounded scan finding a witness for
// any of these means a transcription or sieve bug.
struct SettledSum {
    std::string_view list_id; // which published list it appears on
    Family family;
    Tuple t;
};
const std::vector<SettledSum>& settled_sums();

// Open candidates: every published list entry not among the settled sums.
std::vector<SettledSum> open_survivor_sums();

// The second batch of open candidates, spelled in the term grammar (these use
// polygonal kinds outside the sweep families).
const std::vector<std::string_view>& open_mixed_sums();

} // namespace tusv::catalog

#pragma once

#include "tusv/cache.hpp"
#include "tusv/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tusv {

// Anchor argument: if `anchor` is not attained by g1 + g2 + {0, d}, then any
// universal g1 + g2 + gp(c,d) must attain it with z >= 2, forcing
// c + 2d <= anchor. Returns the cap on c, or an error naming the
// representation that breaks the anchor claim.
struct CapOutcome {
    std::optional<long long> cap;
    std::string error; // set when the anchor is attained after all
};
CapOutcome cap_from_anchor(const Generator& g1, const Generator& g2,
                           long long d, long long anchor);

struct CandidateSurvey {
    catalog::Family family;
    catalog::Caps caps;
    long long witness_bound = 0;
    std::vector<catalog::Tuple> survivors; // sorted
    // Filled when diffed against an expected list:
    bool compared = false;
    bool expected_match = false;
    std::vector<catalog::Tuple> missing; // expected but did not survive
    std::vector<catalog::Tuple> extra;   // survived but not expected
};

// Tests every admissible tuple inside `caps`; survivors are the tuples whose
// form attains all of [0, W]. Tuples whose (a, b) appears in `excluded_ab`
// are skipped.
CandidateSurvey enumerate_survivors(catalog::Family fam, const catalog::Caps& caps,
                                    long long W, MaskCache* cache = nullptr,
                                    int jobs = 1,
                                    const std::vector<std::pair<long long, long long>>* excluded_ab = nullptr);

// Sweep with a published list's caps and diff against its expected entries.
// known_unlisted tuples still count as extras; callers decide how to report.
CandidateSurvey reproduce_list(std::string_view id, MaskCache* cache = nullptr,
                               int jobs = 1);

struct WitnessCheck {
    const catalog::WitnessEntry* entry;
    bool confirmed;            // value really is not attained
    std::string representation; // filled when the claim fails
};
struct WitnessReport {
    std::vector<WitnessCheck> checks;
    long long failures = 0;
};
WitnessReport confirm_witness_table(MaskCache* cache = nullptr);

struct CapCheck {
    const catalog::AnchorCap* entry;
    bool confirmed;      // anchor verified and cap matches
    std::string detail;  // failure description
};
struct CapReport {
    std::vector<CapCheck> checks;
    long long failures = 0;
};
CapReport confirm_anchor_caps();

} // namespace tusv

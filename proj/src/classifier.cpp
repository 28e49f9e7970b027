#include "tusv/classifier.hpp"

#include "tusv/grammar.hpp"
#include "tusv/sieve.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace tusv {
namespace {

// Value triple summing to n, if one exists; the slow path behind failure
// reporting. Mirrors attains_brute but keeps the summands.
std::optional<std::array<long long, 3>> find_representation(const TernaryForm& f,
                                                            long long n) {
    std::array<std::vector<long long>, 3> vals;
    for (int i = 0; i < 3; ++i) vals[i] = value_stream(f.terms[i], n);
    for (long long v0 : vals[0]) {
        if (v0 > n) break;
        for (long long v1 : vals[1]) {
            const long long rest = n - v0 - v1;
            if (rest < 0) break;
            if (std::binary_search(vals[2].begin(), vals[2].end(), rest))
                return std::array<long long, 3>{v0, v1, rest};
        }
    }
    return std::nullopt;
}

std::optional<std::array<long long, 2>> find_pair(const Generator& g1,
                                                  const Generator& g2,
                                                  long long n) {
    if (n < 0) return std::nullopt;
    const auto v1 = value_stream(g1, n);
    const auto v2 = value_stream(g2, n);
    for (long long a : v1) {
        if (a > n) break;
        if (std::binary_search(v2.begin(), v2.end(), n - a))
            return std::array<long long, 2>{a, n - a};
    }
    return std::nullopt;
}

} // namespace

CapOutcome cap_from_anchor(const Generator& g1, const Generator& g2,
                           long long d, long long anchor) {
    CapOutcome out;
    if (d < 1 || anchor <= 2 * d) {
        out.error = "anchor must exceed 2d";
        return out;
    }
    if (auto rep = find_pair(g1, g2, anchor)) {
        out.error = std::to_string(anchor) + " = " + std::to_string((*rep)[0]) +
                    " + " + std::to_string((*rep)[1]);
        return out;
    }
    if (auto rep = find_pair(g1, g2, anchor - d)) {
        out.error = std::to_string(anchor) + " = " + std::to_string((*rep)[0]) +
                    " + " + std::to_string((*rep)[1]) + " + d";
        return out;
    }
    out.cap = anchor - 2 * d;
    return out;
}

CandidateSurvey enumerate_survivors(catalog::Family fam, const catalog::Caps& caps,
                                    long long W, MaskCache* cache, int jobs,
                                    const std::vector<std::pair<long long, long long>>* excluded_ab) {
    CandidateSurvey survey;
    survey.family = fam;
    survey.caps = caps;
    survey.witness_bound = W;

    std::vector<catalog::Tuple> candidates;
    for (long long a = 1; a <= caps.a; ++a)
        for (long long b = 1; b <= caps.b; ++b) {
            if (excluded_ab &&
                std::find(excluded_ab->begin(), excluded_ab->end(),
                          std::make_pair(a, b)) != excluded_ab->end())
                continue;
            for (long long c = 1; c <= caps.c; ++c)
                for (long long d = 1; d <= caps.d; ++d) {
                    catalog::Tuple t{a, b, c, d};
                    if (catalog::tuple_admissible(fam, t)) candidates.push_back(t);
                }
        }

    const int workers = std::max(1, std::min<int>(jobs, (int)candidates.size()));
    if (workers == 1) {
        for (const auto& t : candidates)
            if (is_universal_up_to(catalog::tuple_form(fam, t), W, cache))
                survey.survivors.push_back(t);
    } else {
        // Workers skip the cache: MaskCache keeps per-instance stats that are
        // not synchronized, and sweep masks are cheap to recompute.
        std::atomic<size_t> next{0};
        std::vector<std::vector<catalog::Tuple>> found(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = next++; i < candidates.size(); i = next++)
                    if (is_universal_up_to(catalog::tuple_form(fam, candidates[i]), W))
                        found[w].push_back(candidates[i]);
            });
        for (auto& th : pool) th.join();
        for (auto& part : found)
            survey.survivors.insert(survey.survivors.end(), part.begin(), part.end());
    }
    std::sort(survey.survivors.begin(), survey.survivors.end());
    return survey;
}

CandidateSurvey reproduce_list(std::string_view id, MaskCache* cache, int jobs) {
    const catalog::ListSpec* spec = catalog::find_list(id);
    if (!spec) throw std::invalid_argument("unknown list id: " + std::string(id));

    CandidateSurvey survey = enumerate_survivors(spec->family, spec->caps,
                                                 spec->witness_bound, cache, jobs,
                                                 &spec->excluded_ab);
    std::vector<catalog::Tuple> expected = spec->expected;
    std::sort(expected.begin(), expected.end());
    std::set_difference(expected.begin(), expected.end(),
                        survey.survivors.begin(), survey.survivors.end(),
                        std::back_inserter(survey.missing));
    std::set_difference(survey.survivors.begin(), survey.survivors.end(),
                        expected.begin(), expected.end(),
                        std::back_inserter(survey.extra));
    survey.compared = true;
    survey.expected_match = survey.missing.empty() && survey.extra.empty();
    return survey;
}

WitnessReport confirm_witness_table(MaskCache*) {
    WitnessReport report;
    for (const auto& entry : catalog::witness_table()) {
        WitnessCheck check{&entry, true, {}};
        const TernaryForm f = parse_form(std::string(entry.form));
        if (auto rep = find_representation(f, entry.value)) {
            check.confirmed = false;
            check.representation = std::to_string((*rep)[0]) + " + " +
                                   std::to_string((*rep)[1]) + " + " +
                                   std::to_string((*rep)[2]);
            ++report.failures;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

CapReport confirm_anchor_caps() {
    CapReport report;
    for (const auto& entry : catalog::anchor_caps()) {
        CapCheck check{&entry, true, {}};
        const TernaryForm f = parse_form(std::string(entry.lhs));
        const CapOutcome out =
            cap_from_anchor(f.terms[0], f.terms[1], entry.d, entry.anchor);
        if (!out.cap) {
            check.confirmed = false;
            check.detail = out.error;
        } else if (*out.cap != entry.cap) {
            check.confirmed = false;
            check.detail = "cap " + std::to_string(*out.cap) + ", table says " +
                           std::to_string(entry.cap);
        }
        if (!check.confirmed) ++report.failures;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace tusv

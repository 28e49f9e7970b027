#include "tusv/cli.hpp"

#include "tusv/cache.hpp"
#include "tusv/catalog.hpp"
#include "tusv/classifier.hpp"
#include "tusv/grammar.hpp"
#include "tusv/identities.hpp"
#include "tusv/sieve.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

namespace tusv::cli {
namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
    long long bound = -1; // -1: command default
    int jobs = 0;         // 0: hardware concurrency
    std::string cache_dir;
    std::string output = "text";
    bool strict = false;

    long long bound_or(long long fallback) const { return bound >= 0 ? bound : fallback; }
    int resolved_jobs() const {
        if (jobs > 0) return jobs;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? (int)hw : 1;
    }
    MaskCache open_cache() const {
        return MaskCache(cache_dir.empty() ? MaskCache::default_dir()
                                           : fs::path(cache_dir));
    }
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// --strict rejects literal gp terms whose step divides the leading
// coefficient; such sums collapse into a smaller family and the survivor
// sweeps never consider them.
void check_strict(const TernaryForm& f) {
    for (int i = 0; i < 3; ++i) {
        const auto* g = std::get_if<GenPoly>(&f.terms[i].kind);
        if (g && !gp_strict(g->c, g->d))
            throw std::invalid_argument("strict mode: gp(" + std::to_string(g->c) + "," +
                                        std::to_string(g->d) + ") has d dividing c");
    }
}

TernaryForm parse_checked(const std::string& text, bool strict) {
    TernaryForm f = parse_form(text);
    if (strict) check_strict(f);
    return f;
}

std::vector<long long> parse_csv_ints(const std::string& text, size_t want,
                                      const std::string& what) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string part =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": bad integer '" + part + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != want)
        throw std::invalid_argument(what + ": expected " + std::to_string(want) +
                                    " comma-separated integers");
    return out;
}

std::optional<catalog::Family> family_from_token(const std::string& tok) {
    if (tok == "I" || tok == "quad-pair") return catalog::Family::quad_pair;
    if (tok == "II" || tok == "tri-pair") return catalog::Family::tri_pair;
    if (tok == "IIIi" || tok == "IIIii" || tok == "mixed-pair")
        return catalog::Family::mixed_pair;
    if (tok == "liouville" || tok == "tri-triple") return catalog::Family::tri_triple;
    return std::nullopt;
}

// The published box a bare --family selector falls back to when no --caps
// are given. "mixed-pair" is ambiguous between the two mixed lists and
// defaults to the (1,1) one.
const catalog::ListSpec* default_list_for_token(const std::string& tok) {
    if (tok == "I" || tok == "quad-pair") return catalog::find_list("1.1");
    if (tok == "II" || tok == "tri-pair") return catalog::find_list("1.2");
    if (tok == "IIIi" || tok == "mixed-pair") return catalog::find_list("1.3i");
    if (tok == "IIIii") return catalog::find_list("1.3ii");
    if (tok == "liouville" || tok == "tri-triple") return catalog::find_list("liouville");
    return nullptr;
}

ordered_json tuple_json(catalog::Family fam, const catalog::Tuple& t) {
    return ordered_json{{"a", t.a},
                        {"b", t.b},
                        {"c", t.c},
                        {"d", t.d},
                        {"display", catalog::tuple_display(fam, t)}};
}

// ---- eval ----

int cmd_eval(const Options& opt, const std::string& form_text, const std::string& at_text) {
    const TernaryForm f = parse_checked(form_text, opt.strict);
    const auto at = parse_csv_ints(at_text, 3, "--at");
    static constexpr char slots[3] = {'x', 'y', 'z'};

    long long total = 0;
    ordered_json terms = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        const long long v = eval(f.terms[i], at[i]);
        total += v;
        terms.push_back(ordered_json{{"term", spell_term(f.terms[i])},
                                     {"display", term_display(f.terms[i], slots[i])},
                                     {"index", at[i]},
                                     {"value", v}});
    }
    if (opt.output == "json") {
        emit(ordered_json{{"command", "eval"},
                          {"form", spell_form(f)},
                          {"display", form_display(f)},
                          {"at", at},
                          {"terms", terms},
                          {"value", total}});
    } else if (opt.output == "text") {
        std::cout << form_display(f) << " at (" << at[0] << ", " << at[1] << ", "
                  << at[2] << ")\n";
        for (const auto& t : terms)
            std::cout << "  " << t["display"].get<std::string>() << " = "
                      << t["value"].get<long long>() << "\n";
        std::cout << "total " << total << "\n";
    } else {
        return usage_error("eval has no csv output");
    }
    return 0;
}

// ---- sieve ----

int cmd_sieve(const Options& opt, const std::string& form_text) {
    const TernaryForm f = parse_checked(form_text, opt.strict);
    const long long bound = opt.bound_or(1000);
    MaskCache cache = opt.open_cache();
    const ValueMask mask = form_mask(f, bound, &cache);
    const long long attained = mask.popcount();
    const long long first = mask.first_clear();

    if (opt.output == "json") {
        emit(ordered_json{{"command", "sieve"},
                          {"form", spell_form(f)},
                          {"display", form_display(f)},
                          {"bound", bound},
                          {"attained", attained},
                          {"missing", bound + 1 - attained},
                          {"first_missing", first < 0 ? ordered_json(nullptr) : ordered_json(first)},
                          {"universal_up_to_bound", first < 0}});
    } else if (opt.output == "text") {
        std::cout << form_display(f) << " on [0, " << bound << "]: attains " << attained
                  << " of " << bound + 1 << " values";
        if (first < 0)
            std::cout << "; no value missed\n";
        else
            std::cout << "; first miss " << first << "\n";
    } else {
        return usage_error("sieve has no csv output");
    }
    return 0;
}

// ---- witness ----

int cmd_witness(const Options& opt, const std::string& form_text, long long limit) {
    const TernaryForm f = parse_checked(form_text, opt.strict);
    const long long bound = opt.bound_or(1000);
    MaskCache cache = opt.open_cache();
    const std::vector<long long> missed = witnesses_up_to(f, bound, limit, &cache);

    if (opt.output == "json") {
        emit(ordered_json{{"command", "witness"},
                          {"form", spell_form(f)},
                          {"display", form_display(f)},
                          {"bound", bound},
                          {"count", missed.size()},
                          {"witnesses", missed}});
    } else if (opt.output == "csv") {
        std::cout << "form,witness\n";
        const std::string spelled = spell_form(f);
        for (long long w : missed) std::cout << spelled << "," << w << "\n";
    } else {
        std::cout << form_display(f) << " misses " << missed.size() << " value"
                  << (missed.size() == 1 ? "" : "s") << " in [0, " << bound << "]";
        if (missed.empty()) {
            std::cout << "\n";
        } else {
            std::cout << ":";
            for (long long w : missed) std::cout << " " << w;
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- classify ----

ordered_json survey_json(const CandidateSurvey& s) {
    ordered_json survivors = ordered_json::array();
    for (const auto& t : s.survivors) survivors.push_back(tuple_json(s.family, t));
    ordered_json missing = ordered_json::array();
    for (const auto& t : s.missing) missing.push_back(tuple_json(s.family, t));
    ordered_json extra = ordered_json::array();
    for (const auto& t : s.extra) extra.push_back(tuple_json(s.family, t));
    return ordered_json{
        {"family", std::string(catalog::family_name(s.family))},
        {"caps",
         ordered_json{
             {"a", s.caps.a}, {"b", s.caps.b}, {"c", s.caps.c}, {"d", s.caps.d}}},
        {"witness_bound", s.witness_bound},
        {"survivors", survivors},
        {"compared", s.compared},
        {"expected_match", s.expected_match},
        {"diff", ordered_json{{"missing", missing}, {"extra", extra}}},
    };
}

int cmd_classify(const Options& opt, const std::string& family_tok,
                 const std::string& expect_id, const std::string& caps_text) {
    CandidateSurvey survey;
    if (!expect_id.empty()) {
        const catalog::ListSpec* spec = catalog::find_list(expect_id);
        if (!spec) return usage_error("unknown list id '" + expect_id + "'");
        if (!family_tok.empty()) {
            const auto fam = family_from_token(family_tok);
            if (!fam) return usage_error("unknown family '" + family_tok + "'");
            if (*fam != spec->family)
                return usage_error("family '" + family_tok + "' does not match list '" +
                                   expect_id + "'");
        }
        if (opt.bound >= 0)
            std::cerr << "note: --bound is ignored with --expect; list " << expect_id
                      << " sweeps at W=" << spec->witness_bound << "\n";
        MaskCache cache = opt.open_cache();
        survey = reproduce_list(expect_id, &cache, opt.resolved_jobs());
    } else {
        if (family_tok.empty())
            return usage_error("classify needs --family or --expect");
        const auto fam = family_from_token(family_tok);
        if (!fam) return usage_error("unknown family '" + family_tok + "'");
        catalog::Caps caps;
        long long W;
        const std::vector<std::pair<long long, long long>>* excluded = nullptr;
        if (!caps_text.empty()) {
            const auto v = parse_csv_ints(caps_text, 4, "--caps");
            caps = {v[0], v[1], v[2], v[3]};
            W = opt.bound_or(1000);
        } else if (const catalog::ListSpec* spec = default_list_for_token(family_tok)) {
            caps = spec->caps;
            excluded = &spec->excluded_ab;
            W = opt.bound_or(spec->witness_bound);
        } else {
            return usage_error("classify --family '" + family_tok + "' needs --caps");
        }
        MaskCache cache = opt.open_cache();
        survey = enumerate_survivors(*fam, caps, W, &cache, opt.resolved_jobs(), excluded);
    }

    if (opt.output == "json") {
        emit(survey_json(survey));
    } else if (opt.output == "csv") {
        std::cout << "a,b,c,d,display\n";
        for (const auto& t : survey.survivors)
            std::cout << t.a << "," << t.b << "," << t.c << "," << t.d << ",\""
                      << catalog::tuple_display(survey.family, t) << "\"\n";
    } else {
        std::cout << catalog::family_name(survey.family) << " caps (" << survey.caps.a
                  << ", " << survey.caps.b << ", " << survey.caps.c << ", "
                  << survey.caps.d << ") W=" << survey.witness_bound << ": "
                  << survey.survivors.size() << " survivors\n";
        for (const auto& t : survey.survivors)
            std::cout << "  " << catalog::tuple_display(survey.family, t) << "\n";
        if (survey.compared) {
            if (survey.expected_match) {
                std::cout << "matches the published list\n";
            } else {
                for (const auto& t : survey.missing)
                    std::cout << "missing: " << catalog::tuple_display(survey.family, t)
                              << "\n";
                for (const auto& t : survey.extra)
                    std::cout << "extra: " << catalog::tuple_display(survey.family, t)
                              << "\n";
            }
        }
    }
    return survey.compared && !survey.expected_match ? 1 : 0;
}

// ---- verify ----

ordered_json suite_json(const SuiteResult& s) {
    return ordered_json{{"suite", s.suite},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"notes", s.notes},
                        {"passed", s.passed()}};
}

int cmd_verify(const Options& opt, const std::string& suite) {
    MaskCache cache = opt.open_cache();
    std::vector<SuiteResult> results;
    if (suite == "all") {
        for (std::string_view name : suite_names())
            results.push_back(run_suite(name, opt.bound_or(0), &cache, opt.resolved_jobs()));
    } else {
        results.push_back(run_suite(suite, opt.bound_or(0), &cache, opt.resolved_jobs()));
    }

    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed();

    if (opt.output == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) arr.push_back(suite_json(r));
        emit(ordered_json{{"command", "verify"}, {"suites", arr}, {"passed", all_passed}});
    } else if (opt.output == "text") {
        for (const auto& r : results) {
            std::cout << "suite " << r.suite << ": " << r.checks << " checks, "
                      << (r.passed() ? "ok" : std::to_string(r.failures.size()) + " failures")
                      << "\n";
            for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
            for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
        }
    } else {
        return usage_error("verify has no csv output");
    }
    return all_passed ? 0 : 1;
}

// ---- conjectures ----

int cmd_conjectures(const Options& opt, const std::string& which) {
    MaskCache cache = opt.open_cache();
    const ScanReport report =
        conjecture_scan(which, opt.bound_or(1000000), &cache, opt.resolved_jobs());

    if (opt.output == "json") {
        ordered_json items = ordered_json::array();
        for (const auto& item : report.items)
            items.push_back(ordered_json{
                {"form", item.form},
                {"witness",
                 item.witness ? ordered_json(*item.witness) : ordered_json(nullptr)}});
        emit(ordered_json{{"command", "conjectures"},
                          {"which", report.which},
                          {"bound", report.bound},
                          {"forms", report.items.size()},
                          {"counterexamples", report.counterexamples},
                          {"items", items}});
    } else if (opt.output == "text") {
        std::cout << "scan " << report.which << " to " << report.bound << ": "
                  << report.items.size() << " forms, " << report.counterexamples
                  << " counterexample" << (report.counterexamples == 1 ? "" : "s") << "\n";
        for (const auto& item : report.items)
            if (item.witness)
                std::cout << "  " << item.form << " misses " << *item.witness << "\n";
    } else {
        return usage_error("conjectures has no csv output");
    }
    return report.counterexamples == 0 ? 0 : 1;
}

// ---- cache ----

int cmd_cache(const Options& opt, const std::string& action) {
    MaskCache cache = opt.open_cache();
    if (action == "stats") {
        long long entries = 0, bytes = 0;
        std::error_code ec;
        for (const auto& e : fs::directory_iterator(cache.dir(), ec)) {
            if (!e.is_regular_file() || e.path().extension() != ".mask") continue;
            ++entries;
            bytes += (long long)e.file_size();
        }
        if (opt.output == "json") {
            emit(ordered_json{{"command", "cache"},
                              {"action", "stats"},
                              {"dir", cache.dir().string()},
                              {"entries", entries},
                              {"bytes", bytes}});
        } else {
            std::cout << cache.dir().string() << ": " << entries << " masks, " << bytes
                      << " bytes\n";
        }
        return 0;
    }
    if (action == "clear") {
        long long before = 0;
        std::error_code ec;
        for (const auto& e : fs::directory_iterator(cache.dir(), ec))
            if (e.is_regular_file() && e.path().extension() == ".mask") ++before;
        cache.clear();
        if (opt.output == "json") {
            emit(ordered_json{{"command", "cache"},
                              {"action", "clear"},
                              {"dir", cache.dir().string()},
                              {"removed", before}});
        } else {
            std::cout << "removed " << before << " masks from " << cache.dir().string()
                      << "\n";
        }
        return 0;
    }
    return usage_error("cache action must be 'stats' or 'clear'");
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"universal ternary sum toolkit"};
    app.name("tusv");
    Options opt;
    app.add_option("--bound", opt.bound, "search bound (command-specific default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", opt.jobs, "worker threads (default: hardware concurrency)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", opt.cache_dir,
                   "mask cache directory (default: $TUSV_CACHE_DIR or the user cache dir)");
    app.add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--strict", opt.strict, "reject gp(c,d) terms with d dividing c");
    app.require_subcommand(1);

    std::string form_text, at_text = "0,0,0";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a form at given indices");
    eval_cmd->add_option("--form", form_text, "form in the term grammar")->required();
    eval_cmd->add_option("--at", at_text, "comma-separated x,y,z indices");

    std::string sieve_form;
    auto* sieve_cmd = app.add_subcommand("sieve", "attained-value summary on [0, bound]");
    sieve_cmd->add_option("--form", sieve_form, "form in the term grammar")->required();

    std::string witness_form;
    long long witness_limit = -1;
    auto* witness_cmd = app.add_subcommand("witness", "values the form misses on [0, bound]");
    witness_cmd->add_option("--form", witness_form, "form in the term grammar")->required();
    witness_cmd->add_option("--limit", witness_limit, "stop after this many witnesses");

    std::string family_tok, expect_id, caps_text;
    auto* classify_cmd =
        app.add_subcommand("classify", "sweep a candidate family for surviving tuples");
    classify_cmd->add_option("--family", family_tok,
                             "I | II | IIIi | IIIii | liouville (or family name)");
    classify_cmd->add_option("--expect", expect_id,
                             "published list to reproduce: 1.1 | 1.2 | 1.3i | 1.3ii | liouville");
    classify_cmd->add_option("--caps", caps_text, "sweep box a,b,c,d (with --family)");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity verification suite");
    verify_cmd
        ->add_option("--suite", suite,
                     "euler | gauss-legendre | reductions | tables | s07 | thm14 | all")
        ->required();

    std::string which;
    auto* conj_cmd =
        app.add_subcommand("conjectures", "bounded universality scan of the open sums");
    conj_cmd->add_option("--which", which, "remaining-1.1 | 1.2")->required();

    std::string cache_action;
    auto* cache_cmd = app.add_subcommand("cache", "mask cache maintenance");
    cache_cmd->add_option("action", cache_action, "stats | clear")->required();

    for (auto* sub : {eval_cmd, sieve_cmd, witness_cmd, classify_cmd, verify_cmd, conj_cmd,
                      cache_cmd})
        sub->fallthrough();

    try {
        // this parse overload consumes the vector back to front
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(opt, form_text, at_text);
        if (sieve_cmd->parsed()) return cmd_sieve(opt, sieve_form);
        if (witness_cmd->parsed()) return cmd_witness(opt, witness_form, witness_limit);
        if (classify_cmd->parsed()) return cmd_classify(opt, family_tok, expect_id, caps_text);
        if (verify_cmd->parsed()) return cmd_verify(opt, suite);
        if (conj_cmd->parsed()) return cmd_conjectures(opt, which);
        if (cache_cmd->parsed()) return cmd_cache(opt, cache_action);
    } catch (const parse_failure& e) {
        return usage_error(std::string("form parse: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::overflow_error& e) {
        return usage_error(std::string("overflow: ") + e.what());
    } catch (const fs::filesystem_error& e) {
        return usage_error(std::string("io: ") + e.what());
    }
    return usage_error("no subcommand");
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace tusv::cli

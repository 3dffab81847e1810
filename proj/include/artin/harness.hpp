#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "artin/claims.hpp"
#include "artin/corpus.hpp"

namespace artin {

struct AlgebraResult {
    std::string id;
    std::size_t dim = 0;
    std::size_t vertices = 0;
    nlohmann::ordered_json classification;
    std::size_t modules_sampled = 0;
    std::vector<ClaimOutcome> outcomes;
    std::optional<double> millis;
    std::string error;  // non-empty when evaluation threw
};

struct VerificationReport {
    std::string corpus;
    std::uint64_t seed = 0;
    std::size_t bound = default_bound;
    std::size_t trials = 64;
    std::vector<std::string> claims;
    std::vector<AlgebraResult> algebras;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t bound = default_bound;
    std::size_t trials = 64;
    std::size_t threads = 1;
    bool timings = false;
};

inline nlohmann::ordered_json classification_json(const ClassificationReport& c) {
    nlohmann::ordered_json j;
    j["local"] = c.local;
    j["commutative"] = c.commutative;
    j["selfinjective"] = c.selfinjective;
    j["qf2"] = c.qf2;
    j["qf3"] = c.qf3;
    j["qf3_opposite"] = c.qf3_opposite;
    j["inj_dim_right"] = c.inj_dim_right.str();
    j["inj_dim_left"] = c.inj_dim_left.str();
    j["pd_injective_envelope"] = c.pd_injective_envelope.str();
    j["gorenstein"] = std::string(to_string(c.gorenstein));
    if (c.certificate)
        j["gorenstein_dimension"] = c.certificate->dimension;
    j["gsc"] = std::string(to_string(c.gsc));
    return j;
}

/// Claim ids in catalog order without repeats; unknown ids throw.
inline std::vector<std::string> normalize_claims(const std::vector<std::string>& claims) {
    for (const auto& id : claims)
        claim_info(id);
    std::vector<std::string> out;
    for (const auto& c : claim_catalog())
        if (std::find(claims.begin(), claims.end(), c.id) != claims.end())
            out.push_back(c.id);
    return out;
}

/// Evaluates the claims on one algebra; errors are caught and recorded.
inline AlgebraResult evaluate_entry(const CorpusEntry& entry, const std::vector<std::string>& claims,
                                    const SuiteOptions& opt, const std::string& corpus_name) {
    const auto start = std::chrono::steady_clock::now();
    AlgebraResult r;
    r.id = entry.id;
    try {
        AlgebraPtr a = entry.build();
        ValidationReport v = validate(*a);
        if (!v.ok())
            throw Error(ErrorCode::invalid_algebra, v.first_failure());
        r.dim = a->dim();
        r.vertices = a->vertex_count();
        EvaluationOptions eo;
        eo.bound = opt.bound;
        eo.search.trials = opt.trials;
        AlgebraEvaluation ev(a, eo, derive_seed(opt.seed, corpus_name + "/" + entry.id));
        r.classification = classification_json(ev.classification());
        for (const auto& id : claims)
            r.outcomes.push_back(ev.evaluate(id));
        bool sampled = false;
        for (const auto& id : claims)
            sampled = sampled || id == "C6" || id == "C7" || id == "C9" || id == "C9a" || id == "C10";
        r.modules_sampled = sampled ? ev.sample().size() : 0;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.outcomes.clear();
    }
    if (opt.timings)
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs every claim over every entry; results keep corpus order whatever the thread count.
inline VerificationReport run_suite(const std::string& corpus_name, const std::vector<CorpusEntry>& entries,
                                    const std::vector<std::string>& claims, const SuiteOptions& opt) {
    VerificationReport rep{corpus_name, opt.seed, opt.bound, opt.trials, normalize_claims(claims), {}};
    rep.algebras.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++)
            rep.algebras[i] = evaluate_entry(entries[i], rep.claims, opt, corpus_name);
    };
    const std::size_t n = std::max<std::size_t>(1, std::min(opt.threads, entries.size()));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    std::stable_sort(rep.algebras.begin(), rep.algebras.end(),
                     [](const AlgebraResult& a, const AlgebraResult& b) { return a.id < b.id; });
    return rep;
}

struct ReportSummary {
    std::size_t algebras = 0, errors = 0;
    std::size_t holds = 0, vacuous = 0, violated = 0, inconclusive = 0;
    std::size_t theorem_violations = 0, open_question_findings = 0;
};

inline ReportSummary summarize(const VerificationReport& rep) {
    ReportSummary s;
    s.algebras = rep.algebras.size();
    for (const auto& a : rep.algebras) {
        if (!a.error.empty())
            ++s.errors;
        for (const auto& o : a.outcomes) {
            switch (o.status) {
            case OutcomeStatus::holds:
                ++s.holds;
                s.vacuous += o.vacuous;
                break;
            case OutcomeStatus::violated: ++s.violated; break;
            case OutcomeStatus::inconclusive: ++s.inconclusive; break;
            }
            if (o.status == OutcomeStatus::violated && claim_info(o.claim).kind == ClaimKind::theorem)
                ++s.theorem_violations;
            if (is_open_question_finding(o))
                ++s.open_question_findings;
        }
    }
    return s;
}

/// 0 all clear, 1 theorem violation (route disagreement included) or evaluation error,
/// 3 inconclusive outcomes under strict mode, 4 open-question finding.
inline int report_exit_code(const VerificationReport& rep, bool strict) {
    ReportSummary s = summarize(rep);
    if (s.theorem_violations > 0 || s.errors > 0)
        return 1;
    if (s.open_question_findings > 0)
        return 4;
    if (strict && s.inconclusive > 0)
        return 3;
    return 0;
}

inline nlohmann::ordered_json outcome_json(const ClaimOutcome& o) {
    nlohmann::ordered_json j;
    j["claim"] = o.claim;
    j["status"] = std::string(to_string(o.status));
    j["vacuous"] = o.vacuous;
    j["detail"] = o.detail;
    if (!o.data.is_null())
        j["data"] = o.data;
    if (!o.certificate.is_null())
        j["certificate"] = o.certificate;
    return j;
}

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["corpus"] = rep.corpus;
    j["seed"] = rep.seed;
    j["bound"] = rep.bound;
    j["trials"] = rep.trials;
    j["claims"] = rep.claims;
    j["algebras"] = nlohmann::ordered_json::array();
    for (const auto& a : rep.algebras) {
        nlohmann::ordered_json aj;
        aj["id"] = a.id;
        if (!a.error.empty()) {
            aj["error"] = a.error;
        } else {
            aj["dim"] = a.dim;
            aj["vertices"] = a.vertices;
            aj["classification"] = a.classification;
            aj["modules_sampled"] = a.modules_sampled;
            aj["outcomes"] = nlohmann::ordered_json::array();
            for (const auto& o : a.outcomes)
                aj["outcomes"].push_back(outcome_json(o));
        }
        if (a.millis)
            aj["millis"] = *a.millis;
        j["algebras"].push_back(std::move(aj));
    }
    ReportSummary s = summarize(rep);
    j["summary"] = {{"algebras", s.algebras},
                    {"errors", s.errors},
                    {"holds", s.holds},
                    {"vacuous", s.vacuous},
                    {"violated", s.violated},
                    {"inconclusive", s.inconclusive},
                    {"theorem_violations", s.theorem_violations},
                    {"open_question_findings", s.open_question_findings}};
    return j;
}

inline std::string serialize_report(const VerificationReport& rep) { return report_json(rep).dump(2) + "\n"; }

/// Reads a report back; the summary block is recomputed rather than trusted.
inline VerificationReport parse_report(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::syntax_error, std::string("report is not valid JSON: ") + e.what());
    }
    try {
        VerificationReport rep;
        rep.corpus = j.at("corpus").get<std::string>();
        rep.seed = j.at("seed").get<std::uint64_t>();
        rep.bound = j.at("bound").get<std::size_t>();
        rep.trials = j.at("trials").get<std::size_t>();
        rep.claims = j.at("claims").get<std::vector<std::string>>();
        for (const auto& aj : j.at("algebras")) {
            AlgebraResult a;
            a.id = aj.at("id").get<std::string>();
            if (aj.contains("millis"))
                a.millis = aj["millis"].get<double>();
            if (aj.contains("error")) {
                a.error = aj["error"].get<std::string>();
                rep.algebras.push_back(std::move(a));
                continue;
            }
            a.dim = aj.at("dim").get<std::size_t>();
            a.vertices = aj.at("vertices").get<std::size_t>();
            a.classification = aj.at("classification");
            a.modules_sampled = aj.at("modules_sampled").get<std::size_t>();
            for (const auto& oj : aj.at("outcomes")) {
                ClaimOutcome o;
                o.claim = oj.at("claim").get<std::string>();
                o.status = outcome_status_from_string(oj.at("status").get<std::string>());
                o.vacuous = oj.at("vacuous").get<bool>();
                o.detail = oj.at("detail").get<std::string>();
                if (oj.contains("data"))
                    o.data = oj["data"];
                if (oj.contains("certificate"))
                    o.certificate = oj["certificate"];
                a.outcomes.push_back(std::move(o));
            }
            rep.algebras.push_back(std::move(a));
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::syntax_error, std::string("malformed report: ") + e.what());
    }
}

inline bool operator==(const ClaimOutcome& a, const ClaimOutcome& b) {
    return a.claim == b.claim && a.status == b.status && a.vacuous == b.vacuous && a.detail == b.detail &&
           a.data == b.data && a.certificate == b.certificate;
}

inline bool operator==(const AlgebraResult& a, const AlgebraResult& b) {
    return a.id == b.id && a.dim == b.dim && a.vertices == b.vertices && a.classification == b.classification &&
           a.modules_sampled == b.modules_sampled && a.outcomes == b.outcomes && a.millis == b.millis &&
           a.error == b.error;
}

inline bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.corpus == b.corpus && a.seed == b.seed && a.bound == b.bound && a.trials == b.trials &&
           a.claims == b.claims && a.algebras == b.algebras;
}

} // namespace artin

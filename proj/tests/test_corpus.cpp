#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "artin/harness.hpp"

#include "support.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

using WordSet = std::set<Word>;

WordSet swap_letters(const WordSet& ws) {
    WordSet out;
    for (auto w : ws) {
        for (auto& a : w)
            a = 1 - a;
        out.insert(w);
    }
    return out;
}

bool has_factor(const Word& w, const WordSet& rel) {
    for (const auto& r : rel)
        if (r.size() <= w.size() && std::search(w.begin(), w.end(), r.begin(), r.end()) != w.end())
            return true;
    return false;
}

// Number of x,y words avoiding every relation, or cap + 1 once it exceeds cap.
std::size_t word_count(const WordSet& rel, std::size_t cap) {
    std::vector<Word> layer{{}};
    std::size_t total = 1;
    while (!layer.empty() && total <= cap) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (std::size_t a = 0; a < 2; ++a) {
                Word v = w;
                v.push_back(a);
                if (!has_factor(v, rel))
                    next.push_back(std::move(v));
            }
        total += next.size();
        layer = std::move(next);
    }
    return std::min(total, cap + 1);
}

// Relation sets up to swapping x and y, by brute force over all subsets of short words.
std::set<WordSet> naive_local_monomial(std::size_t max_len, std::size_t max_dim) {
    std::vector<Word> words;
    for (std::size_t len = 2; len <= max_len; ++len)
        for (std::size_t bits = 0; bits < (1u << len); ++bits) {
            Word w;
            for (std::size_t i = 0; i < len; ++i)
                w.push_back((bits >> i) & 1);
            words.push_back(w);
        }
    std::set<WordSet> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << words.size()); ++mask) {
        WordSet ws;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (mask >> i & 1)
                ws.insert(words[i]);
        bool ok = true;
        for (const auto& a : ws)
            for (const auto& b : ws)
                ok = ok && (a == b || !has_factor(b, {a}));
        bool px = false, py = false;
        for (const auto& w : ws) {
            px = px || std::count(w.begin(), w.end(), 0) == static_cast<long>(w.size());
            py = py || std::count(w.begin(), w.end(), 1) == static_cast<long>(w.size());
        }
        if (!ok || !px || !py || word_count(ws, max_dim) > max_dim)
            continue;
        if (!out.count(swap_letters(ws)))
            out.insert(ws);
    }
    return out;
}

WordSet relations_of(const CorpusEntry& e) {
    const auto& p = std::get<FreeMonomialPresentation>(e.document.presentation);
    return WordSet(p.relations.begin(), p.relations.end());
}

// Kupisch series by brute force: linear ones end in 1 and stay inside the line, cyclic ones up to rotation.
std::pair<std::size_t, std::size_t> naive_nakayama_counts(std::size_t max_vertices, std::size_t max_kupisch) {
    std::size_t linear = 0;
    std::set<std::vector<std::size_t>> cyclic;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<std::size_t> c(n, 1);
        for (;;) {
            bool lin = c[n - 1] == 1 && n >= 2, cyc = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (i + 1 < n && (c[i] < 2 || c[i] > n - i || c[i + 1] + 1 < c[i]))
                    lin = false;
                if (c[i] < 2 || c[(i + 1) % n] + 1 < c[i])
                    cyc = false;
            }
            linear += lin;
            if (cyc) {
                std::vector<std::size_t> best = c;
                for (std::size_t r = 1; r < n; ++r) {
                    std::vector<std::size_t> rot(c.begin() + static_cast<long>(r), c.end());
                    rot.insert(rot.end(), c.begin(), c.begin() + static_cast<long>(r));
                    best = std::min(best, rot);
                }
                cyclic.insert(best);
            }
            std::size_t k = 0;
            while (k < n && c[k] == max_kupisch)
                c[k++] = 1;
            if (k == n)
                break;
            ++c[k];
        }
    }
    return {linear, cyclic.size()};
}

const AlgebraResult& find_result(const VerificationReport& rep, const std::string& id) {
    for (const auto& a : rep.algebras)
        if (a.id == id)
            return a;
    FAIL("no result for " << id);
    return rep.algebras.front();
}

const ClaimOutcome& find_outcome(const AlgebraResult& r, const std::string& claim) {
    for (const auto& o : r.outcomes)
        if (o.claim == claim)
            return o;
    FAIL("no outcome " << claim << " for " << r.id);
    return r.outcomes.front();
}

VerificationReport synthetic_report(const std::string& claim, OutcomeStatus status, nlohmann::ordered_json data) {
    VerificationReport rep;
    rep.corpus = "synthetic";
    rep.claims = {claim};
    AlgebraResult a;
    a.id = "x";
    ClaimOutcome o;
    o.claim = claim;
    o.status = status;
    o.data = std::move(data);
    a.outcomes.push_back(o);
    rep.algebras.push_back(a);
    return rep;
}

} // namespace

TEST_CASE("Nakayama enumeration", "[corpus]") {
    auto one = enumerate_nakayama(1, 4);
    REQUIRE(one.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        AlgebraPtr a = one[i].build();
        CHECK(a->dim() == i + 2);
        CHECK(a->is_local());
        CHECK(a->is_commutative());
    }
    CHECK(enumerate_nakayama(2, 3).size() == 6);
    CHECK(enumerate_nakayama(3, 4).size() == 19);

    for (auto [v, k] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 4}, std::pair{3, 5}}) {
        auto [linear, cyclic] = naive_nakayama_counts(v, k);
        auto entries = enumerate_nakayama(v, k);
        std::size_t lin = 0;
        for (const auto& e : entries)
            lin += e.id.rfind("nakayama-linear-", 0) == 0;
        CHECK(lin == linear);
        CHECK(entries.size() - lin == cyclic);
    }

    // the Kupisch series is the list of projective dimensions, so dim A is its sum
    for (const auto& e : enumerate_nakayama(3, 4)) {
        INFO(e.id);
        AlgebraPtr a = e.build();
        std::size_t sum = 0;
        std::vector<std::size_t> proj;
        for (const auto& p : indecomposable_projectives(a))
            proj.push_back(p.dim());
        for (auto d : proj)
            sum += d;
        CHECK(a->dim() == sum);
        CHECK(validate(*a).ok());
    }

    bool found_a2 = false;
    for (const auto& e : enumerate_nakayama(2, 2))
        found_a2 = found_a2 || e.id == "nakayama-linear-2-1";
    CHECK(found_a2);
}

TEST_CASE("local monomial enumeration", "[corpus]") {
    auto entries = enumerate_local_monomial(3, 12);
    std::set<std::string> ids;
    for (const auto& e : entries)
        ids.insert(e.id);
    CHECK(ids.size() == entries.size());
    CHECK(ids.count("local-monomial-yy-xxx-xyx"));
    CHECK(ids.count("local-monomial-xx-xy-yx-yy"));
    CHECK_FALSE(ids.count("local-monomial-xx-yy"));

    for (const auto& e : entries) {
        if (e.id == "local-monomial-yy-xxx-xyx")
            CHECK(e.build()->dim() == 10);
        if (e.id == "local-monomial-xx-xy-yx-yy")
            CHECK(e.build()->dim() == 3);
    }

    for (auto [len, dim] : {std::pair{2, 12}, std::pair{3, 8}, std::pair{3, 12}}) {
        INFO("maxlen " << len << " maxdim " << dim);
        auto naive = naive_local_monomial(len, dim);
        auto got = enumerate_local_monomial(len, dim);
        CHECK(got.size() == naive.size());
        for (const auto& e : got) {
            WordSet ws = relations_of(e);
            CHECK((naive.count(ws) || naive.count(swap_letters(ws))));
            CHECK(e.build()->dim() <= static_cast<std::size_t>(dim));
        }
    }
}

TEST_CASE("builtin corpus", "[corpus]") {
    auto entries = builtin_corpus();
    std::map<std::string, AlgebraPtr> by_id;
    for (const auto& e : entries)
        by_id[e.id] = e.build();
    CHECK(by_id.size() == 10);
    REQUIRE(by_id.count("kxy-x3-y2-xyx"));
    CHECK(by_id["kxy-x3-y2-xyx"]->dim() == 10);
    REQUIRE(by_id.count("kxy-x2-xy-y2"));
    CHECK(socle(regular_module(by_id["kxy-x2-xy-y2"])).src.dim() == 2);
    CHECK(by_id.count("A2"));
    for (const auto& id : {"kx-x2", "kx-x3", "kx-x4", "kxy-x3-xy-y2", "A3", "A3-rel", "cyclic-nakayama-2-2"})
        CHECK(by_id.count(id));
    CHECK(std::holds_alternative<BasedPresentation>(
        std::find_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.id == "kxy-x3-xy-y2"; })
            ->document.presentation));
}

TEST_CASE("corpus selectors", "[corpus]") {
    CHECK(load_corpus("builtin").size() == 10);
    CHECK(load_corpus("nakayama:2,3").size() == 6);
    CHECK(load_corpus("local-monomial:3,12").size() == enumerate_local_monomial(3, 12).size());
    CHECK_THROWS_AS(load_corpus("nakayama:x"), Error);
    CHECK_THROWS_AS(load_corpus("bogus"), Error);

    const auto dir = std::filesystem::temp_directory_path() / "artin-corpus-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const auto& e : enumerate_nakayama(2, 3)) {
        std::ofstream out(dir / (e.id + ".json"));
        out << serialize(e.document);
    }
    auto loaded = load_corpus("dir:" + dir.string());
    REQUIRE(loaded.size() == 6);
    auto fresh = enumerate_nakayama(2, 3);
    std::map<std::string, std::size_t> dims;
    for (const auto& e : fresh)
        dims[e.id] = e.build()->dim();
    for (const auto& e : loaded)
        CHECK(dims.at(e.id) == e.build()->dim());
    CHECK(load_corpus("file:" + (dir / "nakayama-linear-2-1.json").string()).size() == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("claim catalog", "[claims]") {
    CHECK(all_claim_ids() == std::vector<std::string>{"C1", "C2", "C2b", "C3", "C4", "C4b", "C5", "C6", "C7", "C8",
                                                      "C9", "C9a", "C10", "C11", "CQ"});
    CHECK(claim_info("CQ").kind == ClaimKind::open_question);
    for (const auto& c : claim_catalog())
        if (c.id != "CQ")
            CHECK(c.kind == ClaimKind::theorem);
    CHECK_THROWS_AS(claim_info("C12"), Error);
    CHECK(normalize_claims({"CQ", "C2", "C2"}) == std::vector<std::string>{"C2", "CQ"});
}

TEST_CASE("claim outcomes on worked examples", "[claims]") {
    SuiteOptions opt;
    VerificationReport rep = run_suite("builtin", builtin_corpus(), all_claim_ids(), opt);
    ReportSummary s = summarize(rep);
    CHECK(s.algebras == 10);
    CHECK(s.errors == 0);
    CHECK(s.theorem_violations == 0);
    CHECK(report_exit_code(rep, false) == 0);

    const AlgebraResult& example = find_result(rep, "kxy-x3-y2-xyx");
    const ClaimOutcome& cq = find_outcome(example, "CQ");
    CHECK(cq.status == OutcomeStatus::holds);
    CHECK(cq.vacuous);
    CHECK(cq.certificate.is_null());
    CHECK(example.classification["selfinjective"] == false);

    const ClaimOutcome& c5 = find_outcome(find_result(rep, "kxy-x2-xy-y2"), "C5");
    CHECK(c5.status == OutcomeStatus::holds);
    CHECK_FALSE(c5.vacuous);
    CHECK(c5.data["n"] == 2);
    CHECK(c5.data["dim_double_star"] == 4);

    const ClaimOutcome& c8 = find_outcome(find_result(rep, "A2"), "C8");
    CHECK(c8.status == OutcomeStatus::holds);
    CHECK(c8.data["gorenstein_dimension"] == 1);

    for (const auto& a : rep.algebras) {
        CHECK(a.outcomes.size() == 15);
        for (std::size_t i = 0; i < a.outcomes.size(); ++i)
            CHECK(a.outcomes[i].claim == all_claim_ids()[i]);
    }
}

TEST_CASE("Nakayama corpus claims", "[claims]") {
    auto entries = enumerate_nakayama(3, 4);
    VerificationReport rep = run_suite("nakayama:3,4", entries, {"C2", "C11", "CQ"}, SuiteOptions{});
    for (const auto& a : rep.algebras) {
        INFO(a.id);
        CHECK(find_outcome(a, "C2").status == OutcomeStatus::holds);
        const bool cyclic_constant = [&] {
            if (a.id.rfind("nakayama-cyclic-", 0) != 0)
                return false;
            std::string tail = a.id.substr(16);
            std::string first = tail.substr(0, tail.find('-'));
            std::size_t pos = 0;
            while (pos < tail.size()) {
                std::size_t next = tail.find('-', pos);
                if (tail.substr(pos, next - pos) != first)
                    return false;
                pos = next == std::string::npos ? tail.size() : next + 1;
            }
            return true;
        }();
        CHECK(a.classification["selfinjective"] == cyclic_constant);
    }
}

TEST_CASE("suite determinism and report round trip", "[harness]") {
    auto entries = load_corpus("nakayama:2,3");
    for (auto& e : builtin_corpus())
        entries.push_back(e);
    SuiteOptions opt;
    opt.seed = 42;
    const auto claims = all_claim_ids();
    VerificationReport a = run_suite("mixed", entries, claims, opt);
    VerificationReport b = run_suite("mixed", entries, claims, opt);
    CHECK(serialize_report(a) == serialize_report(b));

    opt.threads = 3;
    VerificationReport c = run_suite("mixed", entries, claims, opt);
    CHECK(serialize_report(a) == serialize_report(c));
    CHECK(a == c);

    for (std::size_t i = 1; i < a.algebras.size(); ++i)
        CHECK(a.algebras[i - 1].id < a.algebras[i].id);

    VerificationReport back = parse_report(serialize_report(a));
    CHECK(back == a);
    CHECK(serialize_report(back) == serialize_report(a));
    CHECK_THROWS_AS(parse_report("{"), Error);
    CHECK_THROWS_AS(parse_report("{\"corpus\": 1}"), Error);

    opt.threads = 1;
    opt.timings = true;
    VerificationReport timed = run_suite("mixed", entries, {"C2"}, opt);
    for (const auto& r : timed.algebras)
        CHECK(r.millis.has_value());
    CHECK(report_json(timed)["algebras"][0].contains("millis"));
    CHECK_FALSE(report_json(a)["algebras"][0].contains("millis"));
}

TEST_CASE("per-algebra errors are recorded", "[harness]") {
    CorpusEntry bad{"infinite", {"infinite", FieldSpec{}, FreeMonomialPresentation{{"x", "y"}, {{0, 0}, {1, 1}}}}};
    std::vector<CorpusEntry> entries{bad};
    entries.push_back(builtin_corpus().front());
    VerificationReport rep = run_suite("bad", entries, {"C2"}, SuiteOptions{});
    const AlgebraResult& r = find_result(rep, "infinite");
    CHECK_FALSE(r.error.empty());
    CHECK(r.outcomes.empty());
    CHECK(summarize(rep).errors == 1);
    CHECK(report_exit_code(rep, false) == 1);
    CHECK(parse_report(serialize_report(rep)) == rep);
}

TEST_CASE("exit codes", "[harness]") {
    CHECK(report_exit_code(synthetic_report("C2", OutcomeStatus::holds, {}), true) == 0);
    CHECK(report_exit_code(synthetic_report("C2", OutcomeStatus::violated, {}), false) == 1);
    CHECK(report_exit_code(synthetic_report("C6", OutcomeStatus::inconclusive, {}), false) == 0);
    CHECK(report_exit_code(synthetic_report("C6", OutcomeStatus::inconclusive, {}), true) == 3);

    nlohmann::ordered_json uncovered = {{"covered_by", nlohmann::ordered_json::array()}};
    nlohmann::ordered_json covered = {{"covered_by", {"QF-3"}}};
    VerificationReport finding = synthetic_report("CQ", OutcomeStatus::violated, uncovered);
    CHECK(is_open_question_finding(finding.algebras[0].outcomes[0]));
    CHECK(report_exit_code(finding, false) == 4);
    CHECK(summarize(finding).theorem_violations == 0);
    VerificationReport known = synthetic_report("CQ", OutcomeStatus::violated, covered);
    CHECK_FALSE(is_open_question_finding(known.algebras[0].outcomes[0]));
    CHECK(report_exit_code(known, false) == 0);
}

TEST_CASE("violations carry a replayable certificate", "[claims]") {
    using detail::Tri;
    ClaimOutcome held = detail::implication("C2", Tri::no, false, "x");
    CHECK(held.status == OutcomeStatus::holds);
    CHECK(held.vacuous);
    CHECK(detail::implication("C2", Tri::unknown, true, "x").status == OutcomeStatus::inconclusive);
    CHECK(detail::implication("C2", Tri::yes, false, "x").status == OutcomeStatus::violated);
    CHECK(detail::implication("C2", Tri::yes, true, "x").status == OutcomeStatus::holds);

    // the certificate pieces: the algebra as a based document and module action matrices
    AlgebraPtr a = noncommutative_example();
    AlgebraPtr replay = parse_algebra(nlohmann::ordered_json::parse(serialize(*a)).dump());
    CHECK(replay->table() == a->table());
    RightModule m = double_star(simple_module(a, 0));
    auto j = detail::module_json("S**", m);
    CHECK(j["dim"] == 8);
    std::vector<Matrix> acts;
    for (const auto& rows : j["actions"]) {
        Matrix x(F101, 8, 8);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c)
                x(r, c) = rows[r][c].get<Residue>();
        acts.push_back(x);
    }
    RightModule rebuilt(replay, 8, acts);
    SeedState s(1);
    CHECK(is_isomorphic(rebuilt, direct_sum({ideal(replay, "x"), ideal(replay, "x")}), s).verdict == IsoVerdict::yes);
}

// Command-line front end: validate, info, reflexive, classify, verify, enumerate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "artin/artin.hpp"

namespace {

using namespace artin;
using json = nlohmann::ordered_json;

enum Exit { ok = 0, violation = 1, invalid_input = 2, inconclusive = 3, finding = 4 };

struct Globals {
    std::size_t bound = default_bound;
    std::uint64_t seed = 0;
    std::size_t trials = 64;
    bool json = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Reads, compiles and validates; every failure here is an input problem (exit 2).
AlgebraPtr load_valid(const std::string& path) {
    AlgebraDocument doc = read_algebra_file(path);
    AlgebraPtr a = to_algebra(doc);
    ValidationReport v = validate(*a);
    if (!v.ok()) {
        std::string all;
        for (const auto& f : v.failures)
            all += "\n  " + f;
        throw Error(ErrorCode::invalid_algebra, "structure constants fail validation:" + all);
    }
    return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + xs[i];
    return s;
}

std::vector<std::string> pick(const Algebra& a, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx)
        out.push_back(a.labels()[i]);
    return out;
}

int cmd_validate(const std::string& path, const Globals& g) {
    AlgebraPtr a = load_valid(path);
    if (g.json) {
        json j{{"name", a->name()},
               {"prime", a->field().prime()},
               {"dim", a->dim()},
               {"local", a->is_local()},
               {"commutative", a->is_commutative()},
               {"labels", a->labels()},
               {"idempotents", pick(*a, a->idempotents())},
               {"radical", pick(*a, a->radical())}};
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "dim " << a->dim() << ", " << (a->is_local() ? "local" : "not local") << ", "
              << (a->is_commutative() ? "commutative" : "non-commutative") << "\n";
    std::cout << "field F_" << a->field().prime() << "\n";
    std::cout << "basis: " << join(a->labels(), " ") << "\n";
    std::cout << "idempotents: " << join(pick(*a, a->idempotents()), " ") << "\n";
    std::cout << "radical: " << join(pick(*a, a->radical()), " ") << "\n";
    return ok;
}

int cmd_info(const std::string& path, const Globals& g) {
    AlgebraPtr a = load_valid(path);
    const auto projectives = indecomposable_projectives(a);
    std::vector<std::vector<std::size_t>> cartan;
    for (const auto& p : projectives)
        cartan.push_back(p.dimension_vector());
    const RightModule reg = regular_module(a);
    const auto layers = radical_layers(reg);
    if (g.json) {
        json j{{"name", a->name()},
               {"prime", a->field().prime()},
               {"dim", a->dim()},
               {"vertices", a->vertex_count()},
               {"local", a->is_local()},
               {"commutative", a->is_commutative()},
               {"cartan", cartan},
               {"radical_layers", layers},
               {"socle", socle_multiplicities(reg)}};
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "algebra " << a->name() << " over F_" << a->field().prime() << "\n";
    std::cout << "dim " << a->dim() << ", " << a->vertex_count() << (a->vertex_count() == 1 ? " vertex, " : " vertices, ")
              << (a->is_local() ? "local" : "not local") << ", "
              << (a->is_commutative() ? "commutative" : "non-commutative") << "\n";
    std::cout << "Loewy length " << layers.size() << ", radical layers by vertex:";
    for (const auto& layer : layers) {
        std::cout << " [";
        for (std::size_t v = 0; v < layer.size(); ++v)
            std::cout << (v ? " " : "") << layer[v];
        std::cout << "]";
    }
    std::cout << "\n";
    for (std::size_t v = 0; v < projectives.size(); ++v) {
        std::cout << "P" << v + 1 << " (" << a->labels()[a->idempotents()[v]] << "): dim " << projectives[v].dim()
                  << ", dimension vector";
        for (auto d : cartan[v])
            std::cout << " " << d;
        std::cout << ", socle";
        for (auto d : socle_multiplicities(projectives[v]))
            std::cout << " " << d;
        std::cout << "\n";
    }
    return ok;
}

json verdict_json(const ReflexivityVerdict& v) {
    return {{"module", v.module_id},
            {"torsionless", v.torsionless_eval},
            {"reflexive", v.reflexive_eval},
            {"torsionless_ext", v.torsionless_ext},
            {"reflexive_ext", v.reflexive_ext},
            {"dim", v.dim},
            {"dim_star", v.dim_star},
            {"dim_double_star", v.dim_double_star},
            {"eval_rank", v.eval_rank},
            {"ext1", v.ext1},
            {"ext2", v.ext2},
            {"routes_agree", v.agreement()}};
}

int cmd_reflexive(const std::string& path, const std::vector<std::size_t>& simples, const Globals& g) {
    AlgebraPtr a = load_valid(path);
    std::vector<std::size_t> chosen;
    if (simples.empty()) {
        for (std::size_t v = 0; v < a->vertex_count(); ++v)
            chosen.push_back(v);
    } else {
        for (auto s : simples) {
            if (s == 0 || s > a->vertex_count())
                throw Error(ErrorCode::syntax_error, "--simple " + std::to_string(s) + " is not a vertex in 1.." +
                                                         std::to_string(a->vertex_count()));
            chosen.push_back(s - 1);
        }
    }
    bool disagree = false;
    json out = json::array();
    for (auto v : chosen) {
        ReflexivityVerdict r = reflexivity_verdict(simple_module(a, v), "S" + std::to_string(v + 1));
        disagree = disagree || !r.agreement();
        if (g.json) {
            out.push_back(verdict_json(r));
            continue;
        }
        std::cout << r.module_id << ": torsionless: " << (r.torsionless_eval ? "true" : "false")
                  << ", reflexive: " << (r.reflexive_eval ? "true" : "false") << ", dim S* = " << r.dim_star
                  << ", dim S** = " << r.dim_double_star << "\n";
        std::cout << "  evaluation map rank " << r.eval_rank << " of dim " << r.dim << "; Ext^1(D(A), tau S) = " << r.ext1
                  << ", Ext^2(D(A), tau S) = " << r.ext2 << "; routes " << (r.agreement() ? "agree" : "DISAGREE")
                  << "\n";
    }
    if (g.json)
        std::cout << out.dump(2) << "\n";
    if (disagree) {
        std::cerr << "error: evaluation and Ext routes disagree\n";
        return violation;
    }
    return ok;
}

int cmd_classify(const std::string& path, const Globals& g) {
    AlgebraPtr a = load_valid(path);
    ClassificationReport c = classify(a, g.bound);
    if (g.json) {
        json j = classification_json(c);
        j["algebra"] = c.algebra;
        j["dim"] = c.dim;
        j["vertices"] = c.vertices;
        j["bound"] = c.bound;
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "algebra " << c.algebra << ": dim " << c.dim << ", " << c.vertices
              << (c.vertices == 1 ? " vertex\n" : " vertices\n");
    std::cout << "local: " << yes_no(c.local) << "\n";
    std::cout << "commutative: " << yes_no(c.commutative) << "\n";
    std::cout << "selfinjective: " << yes_no(c.selfinjective) << "\n";
    std::cout << "QF-2: " << yes_no(c.qf2) << "\n";
    std::cout << "QF-3: " << yes_no(c.qf3) << " (opposite: " << yes_no(c.qf3_opposite) << ")\n";
    std::cout << "injective dimension of A_A: " << c.inj_dim_right.str() << ", of the left regular module: "
              << c.inj_dim_left.str() << "\n";
    std::cout << "pd of the injective envelope of A_A: " << c.pd_injective_envelope.str() << "\n";
    std::cout << "Gorenstein: " << to_string(c.gorenstein);
    if (c.certificate)
        std::cout << ", dimension " << c.certificate->dimension;
    std::cout << " (bound " << c.bound << ")\n";
    std::cout << "Gorenstein symmetry: " << to_string(c.gsc) << "\n";
    return ok;
}

std::vector<std::string> split_claims(const std::string& s) {
    if (s.empty() || s == "all")
        return all_claim_ids();
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void print_report_text(const VerificationReport& rep) {
    std::cout << "corpus " << rep.corpus << ", seed " << rep.seed << ", bound " << rep.bound << ", trials "
              << rep.trials << ", claims " << join(rep.claims, ",") << "\n";
    for (const auto& a : rep.algebras) {
        if (!a.error.empty()) {
            std::cout << a.id << ": ERROR " << a.error << "\n";
            continue;
        }
        std::size_t holds = 0, vacuous = 0, violated = 0, inconclusive = 0;
        for (const auto& o : a.outcomes) {
            holds += o.status == OutcomeStatus::holds;
            vacuous += o.status == OutcomeStatus::holds && o.vacuous;
            violated += o.status == OutcomeStatus::violated;
            inconclusive += o.status == OutcomeStatus::inconclusive;
        }
        std::cout << a.id << " (dim " << a.dim << "): " << holds << " hold (" << vacuous << " vacuously), " << violated
                  << " violated, " << inconclusive << " inconclusive\n";
        for (const auto& o : a.outcomes) {
            if (o.status == OutcomeStatus::holds)
                continue;
            if (is_open_question_finding(o))
                std::cout << "  OPEN QUESTION FINDING " << o.claim << ": " << o.detail << "\n";
            else
                std::cout << "  " << o.claim << " " << to_string(o.status) << ": " << o.detail << "\n";
        }
    }
    ReportSummary s = summarize(rep);
    std::cout << "summary: " << s.algebras << " algebras, " << s.holds << " holds, " << s.violated << " violated, "
              << s.inconclusive << " inconclusive, " << s.errors << " errors, " << s.open_question_findings
              << " open-question findings\n";
}

int cmd_verify(const std::string& corpus, const std::string& claims, bool strict, std::size_t parallel,
               const std::string& output, bool timings, const Globals& g) {
    std::vector<CorpusEntry> entries = load_corpus(corpus);
    for (const auto& e : entries) {
        // input problems exit 2 before any claim is evaluated
        ValidationReport v = validate(*e.build());
        if (!v.ok())
            throw Error(ErrorCode::invalid_algebra, e.id + ": " + v.first_failure());
    }
    std::vector<std::string> ids = split_claims(claims);
    normalize_claims(ids);  // reject unknown ids before computing
    SuiteOptions opt;
    opt.seed = g.seed;
    opt.bound = g.bound;
    opt.trials = g.trials;
    opt.threads = parallel;
    opt.timings = timings;
    VerificationReport rep = run_suite(corpus, entries, ids, opt);
    const std::string text = serialize_report(rep);
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out)
            throw Error(ErrorCode::syntax_error, "cannot write report to '" + output + "'");
        out << text;
    }
    if (g.json)
        std::cout << text;
    else
        print_report_text(rep);
    return report_exit_code(rep, strict);
}

int cmd_enumerate(const std::vector<CorpusEntry>& entries, const std::string& out_dir) {
    if (out_dir.empty()) {
        for (const auto& e : entries)
            std::cout << e.id << "\n";
        return ok;
    }
    std::filesystem::create_directories(out_dir);
    for (const auto& e : entries) {
        AlgebraDocument doc = e.document;
        doc.name = e.id;
        std::ofstream out(std::filesystem::path(out_dir) / (e.id + ".json"), std::ios::binary);
        if (!out)
            throw Error(ErrorCode::syntax_error, "cannot write into '" + out_dir + "'");
        out << serialize(doc);
    }
    std::cout << "wrote " << entries.size() << " algebra files to " << out_dir << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflexivity and selfinjectivity toolkit for finite-dimensional algebras over prime fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--bound", g.bound, "search bound for homological dimensions")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "master seed for randomized searches");
    app.add_option("--trials", g.trials, "random trials per isomorphism or decomposition search")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "structured output");

    std::string path;
    auto* validate_cmd = app.add_subcommand("validate", "parse and validate an algebra file");
    validate_cmd->add_option("file", path, "algebra file")->required();

    auto* info_cmd = app.add_subcommand("info", "Cartan data, socles and Loewy layers");
    info_cmd->add_option("file", path, "algebra file")->required();

    std::vector<std::size_t> simples;
    bool all_simples = false;
    auto* reflexive_cmd = app.add_subcommand("reflexive", "torsionless and reflexive verdicts for simple modules");
    reflexive_cmd->add_option("file", path, "algebra file")->required();
    auto* simple_opt = reflexive_cmd->add_option("--simple", simples, "vertex number of a simple module (1-based)");
    reflexive_cmd->add_flag("--all-simples", all_simples, "every simple module (the default)")->excludes(simple_opt);

    auto* classify_cmd = app.add_subcommand("classify", "selfinjective, QF-2, QF-3 and Gorenstein probes");
    classify_cmd->add_option("file", path, "algebra file")->required();

    std::string corpus = "builtin", claims, output;
    bool strict = false, timings = false;
    std::size_t parallel = 1;
    auto* verify_cmd = app.add_subcommand("verify", "evaluate claims over a corpus");
    verify_cmd->add_option("--corpus", corpus, "builtin | nakayama:V,K | local-monomial:L,D | file:PATH | dir:PATH");
    verify_cmd->add_option("--claims", claims, "comma-separated claim ids (default: all)");
    verify_cmd->add_flag("--strict", strict, "exit 3 when any outcome is inconclusive");
    verify_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--output", output, "also write the structured report to this file");
    verify_cmd->add_flag("--timings", timings, "record per-algebra wall time in the report");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "write corpus members as algebra files");
    enumerate_cmd->require_subcommand(1);
    std::string out_dir;
    std::size_t vertices = 0, kupisch = 0, maxlen = 0, maxdim = 0;
    auto* nakayama_cmd = enumerate_cmd->add_subcommand("nakayama", "linear and cyclic Nakayama algebras");
    nakayama_cmd->add_option("--vertices", vertices, "largest number of vertices")->required();
    nakayama_cmd->add_option("--kupisch", kupisch, "largest Kupisch entry")->required();
    nakayama_cmd->add_option("--out", out_dir, "output directory (prints ids when omitted)");
    auto* local_cmd = enumerate_cmd->add_subcommand("local-monomial", "two-generator local monomial algebras");
    local_cmd->add_option("--maxlen", maxlen, "longest relation")->required();
    local_cmd->add_option("--maxdim", maxdim, "largest dimension")->required();
    local_cmd->add_option("--out", out_dir, "output directory (prints ids when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(path, g);
        if (info_cmd->parsed())
            return cmd_info(path, g);
        if (reflexive_cmd->parsed())
            return cmd_reflexive(path, simples, g);
        if (classify_cmd->parsed())
            return cmd_classify(path, g);
        if (verify_cmd->parsed())
            return cmd_verify(corpus, claims, strict, parallel, output, timings, g);
        if (nakayama_cmd->parsed())
            return cmd_enumerate(enumerate_nakayama(vertices, kupisch), out_dir);
        if (local_cmd->parsed())
            return cmd_enumerate(enumerate_local_monomial(maxlen, maxdim), out_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::route_disagreement:
        case ErrorCode::internal_disagreement: return violation;
        default: return invalid_input;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return violation;
    }
    return invalid_input;
}

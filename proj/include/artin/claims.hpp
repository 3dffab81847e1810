#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/algebra_io.hpp"
#include "artin/classification.hpp"
#include "artin/decompose.hpp"
#include "artin/isomorphism.hpp"

namespace artin {

enum class ClaimKind { theorem, open_question };
enum class OutcomeStatus { holds, violated, inconclusive };

inline std::string_view to_string(OutcomeStatus s) {
    switch (s) {
    case OutcomeStatus::holds: return "holds";
    case OutcomeStatus::violated: return "violated";
    case OutcomeStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

inline OutcomeStatus outcome_status_from_string(const std::string& s) {
    if (s == "holds")
        return OutcomeStatus::holds;
    if (s == "violated")
        return OutcomeStatus::violated;
    if (s == "inconclusive")
        return OutcomeStatus::inconclusive;
    throw Error(ErrorCode::syntax_error, "unknown outcome status '" + s + "'");
}

struct ClaimInfo {
    std::string id;
    ClaimKind kind;
    std::string statement;
};

inline const std::vector<ClaimInfo>& claim_catalog() {
    static const std::vector<ClaimInfo> catalog = {
        {"C1", ClaimKind::theorem,
         "Gorenstein (left and right injective dimensions of A exact and equal), pd I(A) finite and all simples "
         "reflexive imply selfinjective"},
        {"C2", ClaimKind::theorem, "QF-3 and all simples reflexive imply selfinjective"},
        {"C2b", ClaimKind::theorem, "pd I(A) <= 1 and all simples reflexive imply selfinjective"},
        {"C3", ClaimKind::theorem, "QF-2 and all simples reflexive imply selfinjective"},
        {"C4", ClaimKind::theorem, "local with reflexive simple implies selfinjective"},
        {"C4b", ClaimKind::theorem,
         "every simple occurring at least twice in both socles and all simples reflexive imply selfinjective"},
        {"C5", ClaimKind::theorem,
         "commutative local non-selfinjective with soc(A) = nS gives S** isomorphic to n^2 copies of S"},
        {"C6", ClaimKind::theorem, "M* is isomorphic to the second syzygy of Tr M for indecomposable non-projective M"},
        {"C7", ClaimKind::theorem, "evaluation-map and Ext routes agree on torsionless and reflexive"},
        {"C8", ClaimKind::theorem, "over a Gorenstein algebra the largest Gpd of a simple is the Gorenstein dimension"},
        {"C9", ClaimKind::theorem, "selfinjective implies every sampled module is reflexive"},
        {"C9a", ClaimKind::theorem, "M is reflexive iff M is isomorphic to M**"},
        {"C10", ClaimKind::theorem, "M is torsionless iff the map into A^t built from a basis of M* is injective"},
        {"C11", ClaimKind::theorem, "all simple right and left modules reflexive imply selfinjective"},
        {"CQ", ClaimKind::open_question, "all simple modules reflexive imply selfinjective"},
    };
    return catalog;
}

inline const ClaimInfo& claim_info(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id)
            return c;
    throw Error(ErrorCode::syntax_error, "unknown claim '" + id + "'");
}

inline std::vector<std::string> all_claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : claim_catalog())
        ids.push_back(c.id);
    return ids;
}

struct ClaimOutcome {
    std::string claim;
    OutcomeStatus status = OutcomeStatus::inconclusive;
    bool vacuous = false;
    std::string detail;
    nlohmann::ordered_json data;         // counters for module-quantified claims
    nlohmann::ordered_json certificate;  // algebra and module data when violated
};

struct SampledModule {
    std::string id;
    RightModule module;
    bool indecomposable = false;  // certified indecomposable
};

struct EvaluationOptions {
    std::size_t bound = default_bound;
    SearchOptions search;
};

namespace detail {

enum class Tri { no, yes, unknown };

inline Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

inline Tri all_of(std::initializer_list<Tri> xs) {
    bool unknown = false;
    for (Tri t : xs) {
        if (t == Tri::no)
            return Tri::no;
        if (t == Tri::unknown)
            unknown = true;
    }
    return unknown ? Tri::unknown : Tri::yes;
}

inline nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(std::vector<Residue>(m.row(i).begin(), m.row(i).end()));
    return rows;
}

inline nlohmann::ordered_json module_json(const std::string& id, const RightModule& m) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["algebra"] = m.algebra()->name();
    j["dim"] = m.dim();
    nlohmann::ordered_json acts = nlohmann::ordered_json::array();
    for (const auto& a : m.actions())
        acts.push_back(matrix_json(a));
    j["actions"] = acts;
    return j;
}

} // namespace detail

/// Lazily computed invariants of one algebra, shared by all claims evaluated on it.
class AlgebraEvaluation {
public:
    AlgebraEvaluation(AlgebraPtr a, EvaluationOptions opt, std::uint64_t seed)
        : a_(std::move(a)), opt_(opt), seed_(seed) {}

    const AlgebraPtr& algebra() const { return a_; }

    const ClassificationReport& classification() {
        if (!cls_)
            cls_ = classify(a_, opt_.bound);
        return *cls_;
    }

    const std::vector<ReflexivityVerdict>& right_simples() {
        if (!right_)
            right_ = simple_verdicts(a_);
        return *right_;
    }

    const std::vector<ReflexivityVerdict>& left_simples() {
        if (!left_)
            left_ = simple_verdicts(opposite(a_));
        return *left_;
    }

    bool simples_reflexive() {
        const auto& v = right_simples();
        return std::all_of(v.begin(), v.end(), [](const ReflexivityVerdict& r) { return r.reflexive_eval; });
    }

    bool left_simples_reflexive() {
        const auto& v = left_simples();
        return std::all_of(v.begin(), v.end(), [](const ReflexivityVerdict& r) { return r.reflexive_eval; });
    }

    /// Simples, indecomposable projectives and injectives, radicals and socles of projectives,
    /// syzygies and cosyzygies of simples to degree 2, and the indecomposable summands of all
    /// of these, without repeats up to isomorphism.
    const std::vector<SampledModule>& sample() {
        if (!sample_)
            sample_ = build_sample();
        return *sample_;
    }

    const std::vector<ReflexivityVerdict>& sample_verdicts() {
        if (!sample_verdicts_) {
            sample_verdicts_.emplace();
            for (const auto& s : sample())
                sample_verdicts_->push_back(reflexivity_verdict(s.module, s.id));
        }
        return *sample_verdicts_;
    }

    SeedState& seed() { return seed_; }
    const EvaluationOptions& options() const { return opt_; }

    ClaimOutcome evaluate(const std::string& id);

private:
    static std::vector<ReflexivityVerdict> simple_verdicts(const AlgebraPtr& a) {
        std::vector<ReflexivityVerdict> out;
        for (std::size_t v = 0; v < a->vertex_count(); ++v)
            out.push_back(reflexivity_verdict(simple_module(a, v), "S" + std::to_string(v + 1)));
        return out;
    }

    std::vector<SampledModule> build_sample() {
        std::vector<std::pair<std::string, RightModule>> base;
        const auto& simples = simple_modules(a_);
        const auto& projectives = indecomposable_projectives(a_);
        const AlgebraPtr op = opposite(a_);
        for (std::size_t v = 0; v < a_->vertex_count(); ++v) {
            const std::string k = std::to_string(v + 1);
            base.emplace_back("S" + k, simples[v]);
            base.emplace_back("P" + k, projectives[v]);
            base.emplace_back("I" + k, duality_D(indecomposable_projective(op, v)));
            base.emplace_back("rad P" + k, radical(projectives[v]).src);
            base.emplace_back("soc P" + k, socle(projectives[v]).src);
            base.emplace_back("top P" + k, top(projectives[v]).tgt);
            base.emplace_back("Omega^1 S" + k, syzygy(simples[v], 1));
            base.emplace_back("Omega^2 S" + k, syzygy(simples[v], 2));
            base.emplace_back("Omega^-1 S" + k, cosyzygy(simples[v], 1));
            base.emplace_back("Omega^-2 S" + k, cosyzygy(simples[v], 2));
        }
        std::vector<SampledModule> out;
        auto add = [&](const std::string& id, const RightModule& m, bool indec) {
            if (m.is_zero())
                return;
            for (auto& s : out) {
                if (s.module.dim() != m.dim() || s.module.dimension_vector() != m.dimension_vector())
                    continue;
                if (is_isomorphic(s.module, m, seed_, opt_.search).verdict == IsoVerdict::yes) {
                    s.indecomposable = s.indecomposable || indec;
                    return;
                }
            }
            out.push_back({id, m, indec});
        };
        for (const auto& [id, m] : base) {
            if (m.is_zero())
                continue;
            Decomposition d = decompose(m, seed_, opt_.search);
            if (d.summands.size() == 1) {
                add(id, m, d.summands[0].certified);
                continue;
            }
            add(id, m, false);
            for (std::size_t i = 0; i < d.summands.size(); ++i)
                add(id + " #" + std::to_string(i + 1), d.summands[i].module, d.summands[i].certified);
        }
        return out;
    }

    AlgebraPtr a_;
    EvaluationOptions opt_;
    SeedState seed_;
    std::optional<ClassificationReport> cls_;
    std::optional<std::vector<ReflexivityVerdict>> right_, left_;
    std::optional<std::vector<SampledModule>> sample_;
    std::optional<std::vector<ReflexivityVerdict>> sample_verdicts_;
};

namespace detail {

inline ClaimOutcome implication(const std::string& id, Tri hypothesis, bool conclusion, const std::string& why) {
    ClaimOutcome o;
    o.claim = id;
    switch (hypothesis) {
    case Tri::no:
        o.status = OutcomeStatus::holds;
        o.vacuous = true;
        o.detail = "hypothesis fails: " + why;
        break;
    case Tri::unknown:
        o.status = OutcomeStatus::inconclusive;
        o.detail = "hypothesis undecided within the bound: " + why;
        break;
    case Tri::yes:
        o.status = conclusion ? OutcomeStatus::holds : OutcomeStatus::violated;
        o.detail = std::string(conclusion ? "hypothesis and conclusion hold: " : "hypothesis holds, conclusion fails: ") + why;
        break;
    }
    return o;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Per-module check with a three-way outcome; counts go to the outcome data.
struct ModuleTally {
    std::size_t tested = 0, confirmed = 0, refuted = 0, inconclusive = 0, skipped = 0;
    std::vector<std::string> refuted_ids, inconclusive_ids;

    ClaimOutcome finish(const std::string& id, const std::string& what) const {
        ClaimOutcome o;
        o.claim = id;
        o.data = {{"tested", tested},
                  {"confirmed", confirmed},
                  {"refuted", refuted},
                  {"inconclusive", inconclusive},
                  {"skipped", skipped}};
        if (!inconclusive_ids.empty())
            o.data["inconclusive_modules"] = inconclusive_ids;
        if (refuted > 0) {
            o.status = OutcomeStatus::violated;
            o.detail = what + " fails for " + std::to_string(refuted) + " of " + std::to_string(tested) + " modules";
        } else if (inconclusive > 0) {
            o.status = OutcomeStatus::inconclusive;
            o.detail = what + ": " + std::to_string(inconclusive) + " of " + std::to_string(tested) +
                       " modules undecided, no refutation";
        } else {
            o.status = OutcomeStatus::holds;
            o.vacuous = tested == 0;
            o.detail = what + " on " + std::to_string(tested) + " modules";
        }
        return o;
    }
};

} // namespace detail

inline ClaimOutcome AlgebraEvaluation::evaluate(const std::string& id) {
    using detail::Tri;
    using detail::tri;
    using detail::yes_no;
    const ClassificationReport& c = classification();
    const bool si = c.selfinjective;
    const std::string si_text = "selfinjective = " + yes_no(si);
    ClaimOutcome out;

    auto attach_algebra = [&](ClaimOutcome& o, const std::vector<std::pair<std::string, RightModule>>& mods) {
        if (o.status != OutcomeStatus::violated)
            return;
        o.certificate["algebra"] = nlohmann::ordered_json::parse(serialize(*a_));
        o.certificate["modules"] = nlohmann::ordered_json::array();
        for (const auto& [mid, m] : mods)
            o.certificate["modules"].push_back(detail::module_json(mid, m));
    };
    auto simple_pairs = [&]() {
        std::vector<std::pair<std::string, RightModule>> v;
        for (std::size_t i = 0; i < a_->vertex_count(); ++i)
            v.emplace_back("S" + std::to_string(i + 1), simple_module(a_, i));
        return v;
    };
    const bool need_simples = id != "C5" && id != "C6" && id != "C7" && id != "C8" && id != "C9" && id != "C9a" &&
                              id != "C10";
    const bool sr = need_simples ? simples_reflexive() : false;
    const std::string sr_text = need_simples ? "simples reflexive = " + yes_no(sr) : "";

    if (id == "C1") {
        const bool gor = c.gorenstein == GorensteinVerdict::yes;
        Tri gor_t = gor ? Tri::yes : (c.gorenstein == GorensteinVerdict::inconclusive ? Tri::unknown : Tri::no);
        Tri pd_t = c.pd_injective_envelope.exact ? Tri::yes : Tri::unknown;
        out = detail::implication(id, detail::all_of({tri(sr), gor_t, pd_t}), si,
                                  sr_text + ", Gorenstein = " + std::string(to_string(c.gorenstein)) +
                                      ", pd I(A) = " + c.pd_injective_envelope.str() + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C2") {
        out = detail::implication(id, detail::all_of({tri(c.qf3), tri(sr)}), si,
                                  "QF-3 = " + yes_no(c.qf3) + ", " + sr_text + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C2b") {
        Tri pd_t = c.pd_injective_envelope.exact ? tri(c.pd_injective_envelope.value <= 1) : Tri::no;
        out = detail::implication(id, detail::all_of({pd_t, tri(sr)}), si,
                                  "pd I(A) = " + c.pd_injective_envelope.str() + ", " + sr_text + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C3") {
        out = detail::implication(id, detail::all_of({tri(c.qf2), tri(sr)}), si,
                                  "QF-2 = " + yes_no(c.qf2) + ", " + sr_text + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C4") {
        out = detail::implication(id, detail::all_of({tri(c.local), tri(sr)}), si,
                                  "local = " + yes_no(c.local) + ", " + sr_text + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C4b") {
        auto doubled = [](const std::vector<std::size_t>& mult) {
            return std::all_of(mult.begin(), mult.end(), [](std::size_t k) { return k >= 2; });
        };
        const bool right = doubled(socle_multiplicities(regular_module(a_)));
        const bool left = doubled(socle_multiplicities(regular_module(opposite(a_))));
        out = detail::implication(id, detail::all_of({tri(right), tri(left), tri(sr)}), si,
                                  "right socle doubled = " + yes_no(right) + ", left socle doubled = " + yes_no(left) +
                                      ", " + sr_text + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "C5") {
        const std::size_t n = c.local ? socle(regular_module(a_)).src.dim() : 0;
        Tri hyp = detail::all_of({tri(c.commutative), tri(c.local), tri(!si), tri(n >= 2)});
        if (hyp != Tri::yes) {
            out = detail::implication(id, hyp, true,
                                      "commutative = " + yes_no(c.commutative) + ", local = " + yes_no(c.local) + ", " +
                                          si_text);
        } else {
            RightModule s = simple_module(a_, 0);
            RightModule dd = double_star(s);
            const bool dims = dd.dim() == n * n;
            const bool semisimple = is_semisimple(dd);
            IsoResult iso = dims ? is_isomorphic(dd, direct_power(s, n * n), seed_, opt_.search) : IsoResult{IsoVerdict::no, std::nullopt, "dimension mismatch"};
            out.claim = id;
            out.data = {{"n", n}, {"dim_double_star", dd.dim()}, {"radical_acts_as_zero", semisimple}};
            const std::string what = "soc(A) = " + std::to_string(n) + "S, dim S** = " + std::to_string(dd.dim());
            if (!dims || !semisimple || iso.verdict == IsoVerdict::no) {
                out.status = OutcomeStatus::violated;
                out.detail = what + ", expected " + std::to_string(n * n) + " copies of S";
                attach_algebra(out, {{"S", s}, {"S**", dd}});
            } else if (iso.verdict == IsoVerdict::inconclusive) {
                out.status = OutcomeStatus::inconclusive;
                out.detail = what + ", isomorphism test undecided";
            } else {
                out.status = OutcomeStatus::holds;
                out.detail = what + ", isomorphic to " + std::to_string(n * n) + " copies of S";
            }
        }
    } else if (id == "C6") {
        detail::ModuleTally tally;
        std::vector<std::pair<std::string, RightModule>> bad;
        for (const auto& s : sample()) {
            if (!s.indecomposable || is_projective(s.module)) {
                ++tally.skipped;
                continue;
            }
            ++tally.tested;
            RightModule lhs = star(s.module);
            RightModule rhs = syzygy(transpose(s.module), 2);
            IsoResult r = is_isomorphic(lhs, rhs, seed_, opt_.search);
            if (r.verdict == IsoVerdict::yes) {
                ++tally.confirmed;
            } else if (r.verdict == IsoVerdict::no) {
                ++tally.refuted;
                bad.emplace_back(s.id, s.module);
            } else {
                ++tally.inconclusive;
                tally.inconclusive_ids.push_back(s.id);
            }
        }
        out = tally.finish(id, "M* isomorphic to Omega^2 Tr M");
        attach_algebra(out, bad);
    } else if (id == "C7") {
        detail::ModuleTally tally;
        std::vector<std::pair<std::string, RightModule>> bad;
        const auto& verdicts = sample_verdicts();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            ++tally.tested;
            if (verdicts[i].agreement()) {
                ++tally.confirmed;
            } else {
                ++tally.refuted;
                bad.emplace_back(sample()[i].id, sample()[i].module);
            }
        }
        out = tally.finish(id, "routes agree");
        attach_algebra(out, bad);
    } else if (id == "C8") {
        if (!c.certificate) {
            out = detail::implication(id, Tri::no, true, "Gorenstein = " + std::string(to_string(c.gorenstein)));
        } else {
            BoundedDim g = max_simple_gpd(a_, opt_.bound, c.certificate);
            const bool ok = g.exact && g.value == c.certificate->dimension;
            out = detail::implication(id, Tri::yes, ok,
                                      "Gorenstein dimension " + std::to_string(c.certificate->dimension) +
                                          ", max Gpd of simples " + g.str());
            out.data = {{"gorenstein_dimension", c.certificate->dimension}, {"max_simple_gpd", g.value}};
            attach_algebra(out, simple_pairs());
        }
    } else if (id == "C9") {
        if (!si) {
            out = detail::implication(id, Tri::no, true, si_text);
        } else {
            detail::ModuleTally tally;
            std::vector<std::pair<std::string, RightModule>> bad;
            const auto& verdicts = sample_verdicts();
            for (std::size_t i = 0; i < verdicts.size(); ++i) {
                ++tally.tested;
                if (verdicts[i].reflexive_eval) {
                    ++tally.confirmed;
                } else {
                    ++tally.refuted;
                    bad.emplace_back(sample()[i].id, sample()[i].module);
                }
            }
            out = tally.finish(id, "sampled modules reflexive");
            attach_algebra(out, bad);
        }
    } else if (id == "C9a") {
        detail::ModuleTally tally;
        std::vector<std::pair<std::string, RightModule>> bad;
        const auto& verdicts = sample_verdicts();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            const auto& s = sample()[i];
            ++tally.tested;
            IsoResult r = is_isomorphic(s.module, double_star(s.module), seed_, opt_.search);
            if (r.verdict == IsoVerdict::inconclusive) {
                ++tally.inconclusive;
                tally.inconclusive_ids.push_back(s.id);
            } else if ((r.verdict == IsoVerdict::yes) == verdicts[i].reflexive_eval) {
                ++tally.confirmed;
            } else {
                ++tally.refuted;
                bad.emplace_back(s.id, s.module);
            }
        }
        out = tally.finish(id, "M = M** iff reflexive");
        attach_algebra(out, bad);
    } else if (id == "C10") {
        detail::ModuleTally tally;
        std::vector<std::pair<std::string, RightModule>> bad;
        const auto& verdicts = sample_verdicts();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            const auto& s = sample()[i];
            ++tally.tested;
            const bool injective = assembled_embedding(s.module, star_with_basis(s.module)).is_injective();
            if (injective == verdicts[i].torsionless_eval) {
                ++tally.confirmed;
            } else {
                ++tally.refuted;
                bad.emplace_back(s.id, s.module);
            }
        }
        out = tally.finish(id, "torsionless iff the assembled map is injective");
        attach_algebra(out, bad);
    } else if (id == "C11") {
        const bool left = left_simples_reflexive();
        out = detail::implication(id, detail::all_of({tri(sr), tri(left)}), si,
                                  sr_text + ", left simples reflexive = " + yes_no(left) + ", " + si_text);
        attach_algebra(out, simple_pairs());
    } else if (id == "CQ") {
        std::vector<std::string> covered;
        if (c.local)
            covered.push_back("local");
        if (c.commutative)
            covered.push_back("commutative");
        if (c.qf3)
            covered.push_back("QF-3");
        if (c.qf2)
            covered.push_back("QF-2");
        if (c.pd_injective_envelope.exact && c.pd_injective_envelope.value <= 1)
            covered.push_back("pd I(A) <= 1");
        if (c.gorenstein == GorensteinVerdict::yes && c.pd_injective_envelope.exact)
            covered.push_back("Gorenstein with pd I(A) finite");
        if (left_simples_reflexive())
            covered.push_back("left simples reflexive");
        out = detail::implication(id, tri(sr), si, sr_text + ", " + si_text);
        out.data = {{"covered_by", covered}};
        attach_algebra(out, simple_pairs());
    } else {
        throw Error(ErrorCode::syntax_error, "unknown claim '" + id + "'");
    }
    out.claim = id;
    return out;
}

/// A violated open-question outcome on an algebra outside every proven class.
inline bool is_open_question_finding(const ClaimOutcome& o) {
    return o.claim == "CQ" && o.status == OutcomeStatus::violated && o.data.contains("covered_by") &&
           o.data["covered_by"].empty();
}

} // namespace artin

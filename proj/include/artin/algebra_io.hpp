#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "artin/algebra.hpp"
#include "artin/presentation.hpp"

namespace artin {

/// Raw structure-constant input.
struct BasedPresentation {
    std::vector<std::string> labels;
    std::vector<Residue> one;
    std::vector<SparseVector> table;  // dim * dim entries
    std::vector<std::size_t> idempotents;
    std::vector<std::size_t> radical;
    friend bool operator==(const BasedPresentation&, const BasedPresentation&) = default;
};

using Presentation = std::variant<FreeMonomialPresentation, QuiverMonomialPresentation,
                                  CommutativeMonomialPresentation, BasedPresentation>;

/// In-memory form of an algebra file.
struct AlgebraDocument {
    std::string name;
    FieldSpec field;
    Presentation presentation;
    friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

inline AlgebraPtr to_algebra(const AlgebraDocument& doc) {
    const std::string name = doc.name.empty() ? "algebra" : doc.name;
    return std::visit(
        [&](const auto& p) -> AlgebraPtr {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FreeMonomialPresentation>)
                return compile_free_monomial(p, doc.field, name);
            else if constexpr (std::is_same_v<T, QuiverMonomialPresentation>)
                return compile_quiver_monomial(p, doc.field, name);
            else if constexpr (std::is_same_v<T, CommutativeMonomialPresentation>)
                return compile_commutative_monomial(p, doc.field, name);
            else
                return make_algebra(doc.field, name, p.labels, p.table, p.one, p.idempotents, p.radical);
        },
        doc.presentation);
}

inline AlgebraDocument based_document(const Algebra& a) {
    BasedPresentation b{a.labels(), a.one(), a.table(), a.idempotents(), a.radical()};
    return {a.name(), a.field(), std::move(b)};
}

namespace detail {

using json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class DocumentReader {
public:
    explicit DocumentReader(const std::string& text) : text_(text) {}

    [[noreturn]] void fail(ErrorCode code, const std::string& what, const std::string& field,
                           const std::string& key) const {
        std::size_t line = 0, col = 0;
        if (!key.empty()) {
            auto pos = text_.find("\"" + key + "\"");
            if (pos != std::string::npos)
                std::tie(line, col) = line_column(text_, pos);
        }
        throw ParseError(code, what, line, col, field);
    }

    const json& member(const json& obj, const std::string& key, const std::string& path) const {
        if (!obj.is_object())
            fail(ErrorCode::syntax_error, "expected an object", path, "");
        auto it = obj.find(key);
        if (it == obj.end())
            fail(ErrorCode::syntax_error, "missing field '" + key + "'", path + "." + key, "");
        return *it;
    }

    std::vector<std::string> strings(const json& j, const std::string& path, const std::string& key) const {
        if (!j.is_array())
            fail(ErrorCode::syntax_error, "expected a list of strings", path, key);
        std::vector<std::string> out;
        for (const auto& x : j) {
            if (!x.is_string())
                fail(ErrorCode::syntax_error, "expected a string", path, key);
            out.push_back(x.get<std::string>());
        }
        return out;
    }

    std::uint64_t integer(const json& j, const std::string& path, const std::string& key) const {
        if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
            fail(ErrorCode::syntax_error, "expected a nonnegative integer", path, key);
        return j.get<std::uint64_t>();
    }

    std::vector<std::size_t> indices(const json& j, const std::string& path, const std::string& key) const {
        if (!j.is_array())
            fail(ErrorCode::syntax_error, "expected a list of indices", path, key);
        std::vector<std::size_t> out;
        for (const auto& x : j)
            out.push_back(static_cast<std::size_t>(integer(x, path, key)));
        return out;
    }

    /// A word is either a string of one-character letters or a list of letter names.
    Word word(const json& j, const std::vector<std::string>& letters, const std::string& path,
              const std::string& key) const {
        auto lookup = [&](const std::string& s) -> std::size_t {
            auto it = std::find(letters.begin(), letters.end(), s);
            if (it == letters.end())
                fail(ErrorCode::syntax_error, "unknown letter '" + s + "' in relation", path, key);
            return static_cast<std::size_t>(it - letters.begin());
        };
        Word w;
        if (j.is_string()) {
            for (char c : j.get<std::string>())
                w.push_back(lookup(std::string(1, c)));
        } else if (j.is_array()) {
            for (const auto& x : j) {
                if (!x.is_string())
                    fail(ErrorCode::syntax_error, "relation letters must be strings", path, key);
                w.push_back(lookup(x.get<std::string>()));
            }
        } else {
            fail(ErrorCode::syntax_error, "relation must be a string or a list of letters", path, key);
        }
        if (w.size() < 2)
            fail(ErrorCode::syntax_error, "relations must have length at least 2", path, key);
        return w;
    }

    AlgebraDocument read() const {
        json root;
        try {
            root = json::parse(text_);
        } catch (const json::parse_error& e) {
            auto [line, col] = line_column(text_, e.byte > 0 ? e.byte - 1 : 0);
            throw ParseError(ErrorCode::syntax_error, "malformed document", line, col);
        }
        if (!root.is_object())
            fail(ErrorCode::syntax_error, "top level must be an object", "$", "");
        AlgebraDocument doc;
        if (auto it = root.find("name"); it != root.end()) {
            if (!it->is_string())
                fail(ErrorCode::syntax_error, "name must be a string", "$.name", "name");
            doc.name = it->get<std::string>();
        }
        const json& field = member(root, "field", "$");
        const std::uint64_t p = integer(member(field, "prime", "$.field"), "$.field.prime", "prime");
        try {
            doc.field = FieldSpec(p);
        } catch (const Error& e) {
            fail(ErrorCode::field_not_prime, std::to_string(p) + " is not a prime below 2^31", "$.field.prime",
                 "prime");
        }
        const json& pres = member(root, "presentation", "$");
        const json& kind_j = member(pres, "kind", "$.presentation");
        if (!kind_j.is_string())
            fail(ErrorCode::syntax_error, "kind must be a string", "$.presentation.kind", "kind");
        const std::string kind = kind_j.get<std::string>();
        const std::string pp = "$.presentation";
        if (kind == "free_monomial") {
            FreeMonomialPresentation fm;
            fm.generators = strings(member(pres, "generators", pp), pp + ".generators", "generators");
            const json& rel = member(pres, "relations", pp);
            if (!rel.is_array())
                fail(ErrorCode::syntax_error, "relations must be a list", pp + ".relations", "relations");
            for (const auto& r : rel)
                fm.relations.push_back(word(r, fm.generators, pp + ".relations", "relations"));
            doc.presentation = std::move(fm);
        } else if (kind == "quiver_monomial") {
            QuiverMonomialPresentation q;
            q.vertices = strings(member(pres, "vertices", pp), pp + ".vertices", "vertices");
            const json& arrows = member(pres, "arrows", pp);
            if (!arrows.is_array())
                fail(ErrorCode::syntax_error, "arrows must be a list", pp + ".arrows", "arrows");
            auto vertex = [&](const json& j) -> std::size_t {
                if (!j.is_string())
                    fail(ErrorCode::syntax_error, "arrow endpoints must be vertex names", pp + ".arrows", "arrows");
                auto it = std::find(q.vertices.begin(), q.vertices.end(), j.get<std::string>());
                if (it == q.vertices.end())
                    fail(ErrorCode::syntax_error, "unknown vertex '" + j.get<std::string>() + "'", pp + ".arrows",
                         "arrows");
                return static_cast<std::size_t>(it - q.vertices.begin());
            };
            std::vector<std::string> names;
            for (const auto& a : arrows) {
                const json& nm = member(a, "name", pp + ".arrows");
                if (!nm.is_string())
                    fail(ErrorCode::syntax_error, "arrow name must be a string", pp + ".arrows", "arrows");
                q.arrows.push_back({nm.get<std::string>(), vertex(member(a, "source", pp + ".arrows")),
                                    vertex(member(a, "target", pp + ".arrows"))});
                names.push_back(q.arrows.back().name);
            }
            const json& rel = member(pres, "relations", pp);
            if (!rel.is_array())
                fail(ErrorCode::syntax_error, "relations must be a list", pp + ".relations", "relations");
            for (const auto& r : rel)
                q.relations.push_back(word(r, names, pp + ".relations", "relations"));
            doc.presentation = std::move(q);
        } else if (kind == "commutative_monomial") {
            CommutativeMonomialPresentation c;
            c.variables = strings(member(pres, "variables", pp), pp + ".variables", "variables");
            const json& mons = member(pres, "monomials", pp);
            if (!mons.is_array())
                fail(ErrorCode::syntax_error, "monomials must be a list of exponent vectors", pp + ".monomials",
                     "monomials");
            for (const auto& m : mons) {
                auto e = indices(m, pp + ".monomials", "monomials");
                if (e.size() != c.variables.size())
                    fail(ErrorCode::syntax_error, "exponent vector length must match variables", pp + ".monomials",
                         "monomials");
                c.monomials.emplace_back(e.begin(), e.end());
            }
            doc.presentation = std::move(c);
        } else if (kind == "based") {
            BasedPresentation b;
            const std::size_t n = static_cast<std::size_t>(integer(member(pres, "dim", pp), pp + ".dim", "dim"));
            b.labels = strings(member(pres, "labels", pp), pp + ".labels", "labels");
            if (b.labels.size() != n || n == 0)
                fail(ErrorCode::syntax_error, "labels must list dim (> 0) names", pp + ".labels", "labels");
            for (auto c : indices(member(pres, "one", pp), pp + ".one", "one"))
                b.one.push_back(doc.field.from_int(static_cast<std::int64_t>(c)));
            if (b.one.size() != n)
                fail(ErrorCode::syntax_error, "one must have dim coefficients", pp + ".one", "one");
            b.table.assign(n * n, {});
            const json& table = member(pres, "table", pp);
            if (!table.is_array())
                fail(ErrorCode::syntax_error, "table must be a list", pp + ".table", "table");
            for (const auto& e : table) {
                if (!e.is_array() || e.size() != 3 || !e[2].is_array())
                    fail(ErrorCode::syntax_error, "table entries are [i, j, [[k, c], ...]]", pp + ".table", "table");
                auto i = integer(e[0], pp + ".table", "table"), j = integer(e[1], pp + ".table", "table");
                if (i >= n || j >= n)
                    fail(ErrorCode::syntax_error, "table index out of range", pp + ".table", "table");
                for (const auto& kc : e[2]) {
                    if (!kc.is_array() || kc.size() != 2)
                        fail(ErrorCode::syntax_error, "table terms are [k, c]", pp + ".table", "table");
                    auto k = integer(kc[0], pp + ".table", "table");
                    if (k >= n)
                        fail(ErrorCode::syntax_error, "table index out of range", pp + ".table", "table");
                    if (!kc[1].is_number_integer())
                        fail(ErrorCode::syntax_error, "coefficient must be an integer", pp + ".table", "table");
                    Residue c = doc.field.from_int(kc[1].get<std::int64_t>());
                    if (c != 0)
                        b.table[i * n + j].push_back({static_cast<std::size_t>(k), c});
                }
                std::sort(b.table[i * n + j].begin(), b.table[i * n + j].end(),
                          [](const Term& x, const Term& y) { return x.index < y.index; });
            }
            b.idempotents = indices(member(pres, "idempotents", pp), pp + ".idempotents", "idempotents");
            b.radical = indices(member(pres, "radical", pp), pp + ".radical", "radical");
            for (auto v : b.idempotents)
                if (v >= n)
                    fail(ErrorCode::syntax_error, "idempotent index out of range", pp + ".idempotents", "idempotents");
            for (auto v : b.radical)
                if (v >= n)
                    fail(ErrorCode::syntax_error, "radical index out of range", pp + ".radical", "radical");
            doc.presentation = std::move(b);
        } else {
            fail(ErrorCode::unknown_kind, "unknown presentation kind '" + kind + "'", "$.presentation.kind", "kind");
        }
        return doc;
    }

private:
    const std::string& text_;
};

inline json word_json(const Word& w, const std::vector<std::string>& letters) {
    const bool single =
        std::all_of(letters.begin(), letters.end(), [](const std::string& s) { return s.size() == 1; });
    if (single) {
        std::string s;
        for (auto a : w)
            s += letters[a];
        return s;
    }
    json arr = json::array();
    for (auto a : w)
        arr.push_back(letters[a]);
    return arr;
}

} // namespace detail

inline AlgebraDocument parse_algebra_document(const std::string& text) { return detail::DocumentReader(text).read(); }

inline AlgebraDocument read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(ErrorCode::syntax_error, "cannot open '" + path + "'", 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_document(ss.str());
}

/// Canonical text: fixed key order, one presentation key per line, one table entry per line.
inline std::string serialize(const AlgebraDocument& doc) {
    using detail::json;
    std::vector<std::pair<std::string, std::string>> fields;
    auto add = [&](const std::string& k, const json& v) { fields.emplace_back(k, v.dump()); };
    std::string table_block;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FreeMonomialPresentation>) {
                add("kind", "free_monomial");
                add("generators", p.generators);
                json rel = json::array();
                for (const auto& w : p.relations)
                    rel.push_back(detail::word_json(w, p.generators));
                add("relations", rel);
            } else if constexpr (std::is_same_v<T, QuiverMonomialPresentation>) {
                add("kind", "quiver_monomial");
                add("vertices", p.vertices);
                json arrows = json::array();
                std::vector<std::string> names;
                for (const auto& a : p.arrows) {
                    arrows.push_back({{"name", a.name}, {"source", p.vertices[a.source]}, {"target", p.vertices[a.target]}});
                    names.push_back(a.name);
                }
                add("arrows", arrows);
                json rel = json::array();
                for (const auto& w : p.relations)
                    rel.push_back(detail::word_json(w, names));
                add("relations", rel);
            } else if constexpr (std::is_same_v<T, CommutativeMonomialPresentation>) {
                add("kind", "commutative_monomial");
                add("variables", p.variables);
                add("monomials", p.monomials);
            } else {
                const std::size_t n = p.labels.size();
                add("kind", "based");
                add("dim", n);
                add("labels", p.labels);
                add("one", p.one);
                std::string t = "[";
                bool first = true;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        auto terms = p.table[i * n + j];
                        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
                        std::erase_if(terms, [](const Term& x) { return x.coeff == 0; });
                        if (terms.empty())
                            continue;
                        json kc = json::array();
                        for (const auto& term : terms)
                            kc.push_back({term.index, term.coeff});
                        t += first ? "\n      " : ",\n      ";
                        t += json::array({i, j, kc}).dump();
                        first = false;
                    }
                t += first ? "]" : "\n    ]";
                fields.emplace_back("table", t);
                add("idempotents", p.idempotents);
                add("radical", p.radical);
            }
        },
        doc.presentation);

    std::string out = "{\n  \"field\": {\"prime\": " + std::to_string(doc.field.prime()) + "},\n";
    out += "  \"presentation\": {\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += "    " + json(fields[i].first).dump() + ": " + fields[i].second + (i + 1 < fields.size() ? ",\n" : "\n");
    out += "  }";
    if (!doc.name.empty())
        out += ",\n  \"name\": " + json(doc.name).dump();
    out += "\n}\n";
    return out;
}

inline std::string serialize(const Algebra& a) { return serialize(based_document(a)); }

inline AlgebraPtr parse_algebra(const std::string& text) { return to_algebra(parse_algebra_document(text)); }

} // namespace artin

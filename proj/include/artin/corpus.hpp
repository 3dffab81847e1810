#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "artin/algebra_io.hpp"

namespace artin {

struct CorpusEntry {
    std::string id;
    AlgebraDocument document;

    AlgebraPtr build() const {
        AlgebraDocument d = document;
        d.name = id;
        return to_algebra(d);
    }
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

inline std::string arrow_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

/// Nakayama algebra on the linear quiver 1 -> ... -> n or the cyclic quiver with Kupisch series c:
/// the projective at vertex i has c_i composition factors. Only relations not implied by the
/// relation starting one vertex later are listed.
inline QuiverMonomialPresentation nakayama_presentation(const std::vector<std::size_t>& c, bool cyclic) {
    const std::size_t n = c.size();
    QuiverMonomialPresentation q;
    for (std::size_t i = 0; i < n; ++i)
        q.vertices.push_back(std::to_string(i + 1));
    const std::size_t arrows = cyclic ? n : n - 1;
    for (std::size_t i = 0; i < arrows; ++i)
        q.arrows.push_back({arrow_name(i), i, (i + 1) % n});
    for (std::size_t i = 0; i < n; ++i) {
        if (!cyclic && i + c[i] > n - 1)
            continue;  // path of length c_i from i does not exist
        const std::size_t next = cyclic ? c[(i + 1) % n] : (i + 1 < n ? c[i + 1] : 0);
        if (next + 1 == c[i])
            continue;  // implied by the relation at i + 1
        Word w;
        for (std::size_t k = 0; k < c[i]; ++k)
            w.push_back((i + k) % n);
        q.relations.push_back(std::move(w));
    }
    return q;
}

inline std::vector<std::size_t> min_rotation(const std::vector<std::size_t>& c) {
    std::vector<std::size_t> best = c;
    for (std::size_t r = 1; r < c.size(); ++r) {
        std::vector<std::size_t> rot(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
        rot.insert(rot.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
        best = std::min(best, rot);
    }
    return best;
}

inline void for_each_sequence(std::size_t n, std::size_t lo, std::size_t hi,
                              const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (lo > hi)
        return;
    std::vector<std::size_t> c(n, lo);
    while (true) {
        f(c);
        std::size_t i = 0;
        while (i < n && ++c[i] > hi)
            c[i++] = lo;
        if (i == n)
            break;
    }
}

} // namespace detail

/// Linear Nakayama algebras (c_n = 1, c_i >= 2 for i < n, c_{i+1} >= c_i - 1) and cyclic ones
/// (all c_i >= 2, cyclically c_{i+1} >= c_i - 1) up to rotation, with 1..max_vertices vertices
/// and Kupisch entries <= max_kupisch.
inline std::vector<CorpusEntry> enumerate_nakayama(std::size_t max_vertices, std::size_t max_kupisch,
                                                   FieldSpec field = FieldSpec{}) {
    std::vector<CorpusEntry> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        // linear; the one-vertex case would be semisimple and is excluded
        if (n >= 2) {
            std::vector<std::vector<std::size_t>> found;
            detail::for_each_sequence(n - 1, 2, max_kupisch, [&](const std::vector<std::size_t>& head) {
                std::vector<std::size_t> c = head;
                c.push_back(1);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    if (c[i + 1] + 1 < c[i] || c[i] > n - i)
                        return;
                found.push_back(c);
            });
            std::sort(found.begin(), found.end());
            for (const auto& c : found) {
                std::string id = "nakayama-linear-" + detail::join(c, "-");
                out.push_back({id, {id, field, detail::nakayama_presentation(c, false)}});
            }
        }
        std::set<std::vector<std::size_t>> cyclic;
        detail::for_each_sequence(n, 2, max_kupisch, [&](const std::vector<std::size_t>& c) {
            for (std::size_t i = 0; i < n; ++i)
                if (c[(i + 1) % n] + 1 < c[i])
                    return;
            cyclic.insert(detail::min_rotation(c));
        });
        for (const auto& c : cyclic) {
            std::string id = "nakayama-cyclic-" + detail::join(c, "-");
            out.push_back({id, {id, field, detail::nakayama_presentation(c, true)}});
        }
    }
    return out;
}

namespace detail {

inline bool is_factor(const Word& small, const Word& big) {
    if (small.size() > big.size())
        return false;
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

inline bool length_lex(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

inline std::size_t pure_power(const std::vector<Word>& ws, std::size_t letter) {
    for (const auto& w : ws)
        if (std::all_of(w.begin(), w.end(), [letter](std::size_t x) { return x == letter; }))
            return w.size();
    return 0;
}

} // namespace detail

/// Two-generator local monomial algebras K<x,y>/(W): W an antichain of words of length
/// 2..max_relation_length containing powers of x and y, finite-dimensional with dim <= max_dim.
/// Up to swapping x and y, the representative keeps the higher power on x (ties: the
/// length-lex smaller relation list).
inline std::vector<CorpusEntry> enumerate_local_monomial(std::size_t max_relation_length, std::size_t max_dim,
                                                         FieldSpec field = FieldSpec{}) {
    std::vector<Word> words;
    for (std::size_t len = 2; len <= max_relation_length; ++len)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            Word w(len);
            for (std::size_t i = 0; i < len; ++i)
                w[i] = (bits >> (len - 1 - i)) & 1;
            words.push_back(std::move(w));
        }
    std::sort(words.begin(), words.end(), detail::length_lex);
    require(words.size() < 24, "local monomial enumeration supports relation length at most 3");

    auto canonical = [](std::vector<Word> ws) {
        std::sort(ws.begin(), ws.end(), detail::length_lex);
        return ws;
    };
    std::set<std::vector<Word>, bool (*)(const std::vector<Word>&, const std::vector<Word>&)> seen(
        [](const std::vector<Word>& a, const std::vector<Word>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), detail::length_lex);
        });
    std::vector<std::pair<std::vector<Word>, std::size_t>> found;
    const std::size_t total = std::size_t{1} << words.size();
    for (std::size_t mask = 1; mask < total; ++mask) {
        std::vector<Word> ws;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (mask >> i & 1)
                ws.push_back(words[i]);
        bool antichain = true;
        for (std::size_t i = 0; i < ws.size() && antichain; ++i)
            for (std::size_t j = 0; j < ws.size() && antichain; ++j)
                if (i != j && detail::is_factor(ws[i], ws[j]))
                    antichain = false;
        if (!antichain)
            continue;
        const std::size_t px = detail::pure_power(ws, 0), py = detail::pure_power(ws, 1);
        if (px == 0 || py == 0)
            continue;
        std::vector<Word> swapped;
        for (auto w : ws) {
            for (auto& a : w)
                a = 1 - a;
            swapped.push_back(std::move(w));
        }
        std::vector<Word> rep = canonical(ws), other = canonical(swapped);
        if (px < py || (px == py && std::lexicographical_compare(other.begin(), other.end(), rep.begin(), rep.end(),
                                                                  detail::length_lex)))
            std::swap(rep, other);
        if (!seen.insert(rep).second)
            continue;
        FreeMonomialPresentation pres{{"x", "y"}, rep};
        try {
            AlgebraPtr a = compile_free_monomial(pres, field);
            if (a->dim() <= max_dim)
                found.push_back({rep, a->dim()});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::infinite_dimensional)
                throw;
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                            detail::length_lex);
    });
    std::vector<CorpusEntry> out;
    for (const auto& [rep, dim] : found) {
        std::string id = "local-monomial";
        for (const auto& w : rep)
            id += "-" + detail::join_labels(w, {"x", "y"});
        out.push_back({id, {id, field, FreeMonomialPresentation{{"x", "y"}, rep}}});
    }
    return out;
}

/// The fixed corpus of worked examples.
inline std::vector<CorpusEntry> builtin_corpus(FieldSpec field = FieldSpec{}) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string id, Presentation p) { out.push_back({id, {id, field, std::move(p)}}); };
    add("kxy-x3-y2-xyx", FreeMonomialPresentation{{"x", "y"}, {{0, 0, 0}, {1, 1}, {0, 1, 0}}});
    for (std::size_t n = 2; n <= 4; ++n)
        add("kx-x" + std::to_string(n), FreeMonomialPresentation{{"x"}, {Word(n, 0)}});
    add("kxy-x2-xy-y2", CommutativeMonomialPresentation{{"x", "y"}, {{2, 0}, {1, 1}, {0, 2}}});
    {
        // entered as raw structure constants
        AlgebraPtr a = compile_commutative_monomial({{"x", "y"}, {{3, 0}, {1, 1}, {0, 2}}}, field);
        add("kxy-x3-xy-y2", based_document(*a).presentation);
    }
    add("A2", QuiverMonomialPresentation{{"1", "2"}, {{"a", 0, 1}}, {}});
    add("A3", QuiverMonomialPresentation{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}, {}});
    add("A3-rel", QuiverMonomialPresentation{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}, {{0, 1}}});
    add("cyclic-nakayama-2-2", detail::nakayama_presentation({2, 2}, true));
    return out;
}

/// Corpus selector: builtin | nakayama:V,K | local-monomial:L,D | file:PATH | dir:PATH.
inline std::vector<CorpusEntry> load_corpus(const std::string& spec, FieldSpec field = FieldSpec{}) {
    auto numbers = [&](const std::string& rest) {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::syntax_error, "corpus '" + spec + "' needs two comma-separated bounds");
        try {
            return std::pair<std::size_t, std::size_t>{std::stoul(rest.substr(0, comma)), std::stoul(rest.substr(comma + 1))};
        } catch (const std::exception&) {
            throw Error(ErrorCode::syntax_error, "corpus '" + spec + "' has malformed bounds");
        }
    };
    auto from_file = [](const std::filesystem::path& p) {
        AlgebraDocument d = read_algebra_file(p.string());
        std::string id = d.name.empty() ? p.stem().string() : d.name;
        return CorpusEntry{id, d};
    };
    if (spec == "builtin")
        return builtin_corpus(field);
    if (spec.rfind("nakayama:", 0) == 0) {
        auto [v, k] = numbers(spec.substr(9));
        return enumerate_nakayama(v, k, field);
    }
    if (spec.rfind("local-monomial:", 0) == 0) {
        auto [l, d] = numbers(spec.substr(15));
        return enumerate_local_monomial(l, d, field);
    }
    if (spec.rfind("file:", 0) == 0)
        return {from_file(spec.substr(5))};
    if (spec.rfind("dir:", 0) == 0) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(spec.substr(4)))
            if (e.is_regular_file() && e.path().extension() == ".json")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());
        std::vector<CorpusEntry> out;
        for (const auto& f : files)
            out.push_back(from_file(f));
        return out;
    }
    throw Error(ErrorCode::syntax_error, "unknown corpus '" + spec + "'");
}

} // namespace artin

#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "artin/algebra.hpp"

namespace artin {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

using Word = std::vector<std::size_t>;

/// K<gens>/(relations) with monomial relations.
struct FreeMonomialPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relations;
    friend bool operator==(const FreeMonomialPresentation&, const FreeMonomialPresentation&) = default;
};

/// Path algebra KQ/(relations) with zero relations (paths written left to right).
struct QuiverMonomialPresentation {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Word> relations;
    friend bool operator==(const QuiverMonomialPresentation&, const QuiverMonomialPresentation&) = default;
};

/// K[vars]/(monomials), monomials given as exponent vectors.
struct CommutativeMonomialPresentation {
    std::vector<std::string> variables;
    std::vector<std::vector<unsigned>> monomials;
    friend bool operator==(const CommutativeMonomialPresentation&, const CommutativeMonomialPresentation&) = default;
};

namespace detail {

/// Aho-Corasick automaton over an alphabet of arrow indices; a state is dead when the input read
/// so far has some relation word as a suffix.
class FactorAutomaton {
public:
    FactorAutomaton(std::size_t alphabet, const std::vector<Word>& words) : alphabet_(alphabet) {
        new_node();
        for (const Word& w : words) {
            std::size_t s = 0;
            for (std::size_t a : w) {
                if (next_[s][a] == npos) {
                    std::size_t t = new_node();
                    next_[s][a] = t;
                }
                s = next_[s][a];
            }
            dead_[s] = true;
        }
        std::queue<std::size_t> q;
        for (std::size_t a = 0; a < alphabet_; ++a) {
            if (next_[0][a] == npos) {
                next_[0][a] = 0;
            } else {
                fail_[next_[0][a]] = 0;
                q.push(next_[0][a]);
            }
        }
        while (!q.empty()) {
            std::size_t s = q.front();
            q.pop();
            dead_[s] = dead_[s] || dead_[fail_[s]];
            for (std::size_t a = 0; a < alphabet_; ++a) {
                std::size_t t = next_[s][a];
                if (t == npos) {
                    next_[s][a] = next_[fail_[s]][a];
                } else {
                    fail_[t] = next_[fail_[s]][a];
                    q.push(t);
                }
            }
        }
    }

    std::size_t states() const noexcept { return next_.size(); }
    std::size_t step(std::size_t s, std::size_t a) const { return next_[s][a]; }
    bool dead(std::size_t s) const { return dead_[s]; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t new_node() {
        next_.emplace_back(alphabet_, npos);
        fail_.push_back(0);
        dead_.push_back(false);
        return next_.size() - 1;
    }

    std::size_t alphabet_;
    std::vector<std::vector<std::size_t>> next_;
    std::vector<std::size_t> fail_;
    std::vector<bool> dead_;
};

inline std::string join_labels(const Word& w, const std::vector<std::string>& names) {
    const bool single = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single)
            out += '*';
        out += names[w[i]];
    }
    return out;
}

struct PathBasis {
    std::vector<Word> paths;                 // nontrivial nonzero paths, length-then-lex
    std::vector<std::size_t> path_source;
    std::vector<std::size_t> path_target;
};

/// Enumerates the nonzero paths of a monomial quiver algebra through the product of the factor
/// automaton with the quiver. Throws InfiniteDimensional if a live cycle is reachable.
inline PathBasis enumerate_paths(std::size_t vertex_count, const std::vector<Arrow>& arrows,
                                 const std::vector<Word>& relations) {
    FactorAutomaton aut(arrows.size(), relations);
    const std::size_t S = aut.states();
    auto id = [&](std::size_t state, std::size_t v) { return state * vertex_count + v; };
    // Iterative DFS for a cycle among live states reachable from (root, v).
    std::vector<int> color(S * vertex_count, 0);
    for (std::size_t v0 = 0; v0 < vertex_count; ++v0) {
        if (color[id(0, v0)] != 0)
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack;  // (state id, next arrow)
        stack.push_back({id(0, v0), 0});
        color[id(0, v0)] = 1;
        while (!stack.empty()) {
            auto& [node, ai] = stack.back();
            const std::size_t state = node / vertex_count, v = node % vertex_count;
            if (ai == arrows.size()) {
                color[node] = 2;
                stack.pop_back();
                continue;
            }
            const Arrow& a = arrows[ai++];
            if (a.source != v)
                continue;
            const std::size_t ns = aut.step(state, static_cast<std::size_t>(&a - arrows.data()));
            if (aut.dead(ns))
                continue;
            const std::size_t nn = id(ns, a.target);
            if (color[nn] == 1)
                throw Error(ErrorCode::infinite_dimensional,
                            "the relations leave an unbounded family of nonzero paths (live automaton cycle)");
            if (color[nn] == 0) {
                color[nn] = 1;
                stack.push_back({nn, 0});
            }
        }
    }

    PathBasis out;
    struct Item {
        Word word;
        std::size_t state, source, target;
    };
    std::vector<Item> level;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        std::size_t s = aut.step(0, a);
        if (!aut.dead(s))
            level.push_back({{a}, s, arrows[a].source, arrows[a].target});
    }
    while (!level.empty()) {
        std::sort(level.begin(), level.end(), [](const Item& x, const Item& y) { return x.word < y.word; });
        std::vector<Item> next;
        for (const Item& it : level) {
            out.paths.push_back(it.word);
            out.path_source.push_back(it.source);
            out.path_target.push_back(it.target);
            for (std::size_t a = 0; a < arrows.size(); ++a) {
                if (arrows[a].source != it.target)
                    continue;
                std::size_t s = aut.step(it.state, a);
                if (aut.dead(s))
                    continue;
                Word w = it.word;
                w.push_back(a);
                next.push_back({std::move(w), s, it.source, arrows[a].target});
            }
        }
        level = std::move(next);
    }
    return out;
}

inline AlgebraPtr build_path_algebra(FieldSpec field, std::string name, std::vector<std::string> vertex_labels,
                                     const std::vector<Arrow>& arrows, const std::vector<std::string>& arrow_names,
                                     const std::vector<Word>& relations) {
    const std::size_t V = vertex_labels.size();
    PathBasis pb = enumerate_paths(V, arrows, relations);
    const std::size_t n = V + pb.paths.size();
    std::vector<std::string> labels = std::move(vertex_labels);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < pb.paths.size(); ++i) {
        labels.push_back(join_labels(pb.paths[i], arrow_names));
        index[pb.paths[i]] = V + i;
    }
    auto source = [&](std::size_t b) { return b < V ? b : pb.path_source[b - V]; };
    auto target = [&](std::size_t b) { return b < V ? b : pb.path_target[b - V]; };
    std::vector<SparseVector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (target(i) != source(j))
                continue;
            if (i < V) {
                table[i * n + j] = {{j, 1}};
            } else if (j < V) {
                table[i * n + j] = {{i, 1}};
            } else {
                Word w = pb.paths[i - V];
                const Word& u = pb.paths[j - V];
                w.insert(w.end(), u.begin(), u.end());
                if (auto it = index.find(w); it != index.end())
                    table[i * n + j] = {{it->second, 1}};
            }
        }
    std::vector<Residue> one(n, 0);
    std::vector<std::size_t> idem(V), rad;
    for (std::size_t v = 0; v < V; ++v) {
        one[v] = 1;
        idem[v] = v;
    }
    for (std::size_t i = V; i < n; ++i)
        rad.push_back(i);
    return make_algebra(field, std::move(name), std::move(labels), std::move(table), std::move(one), std::move(idem),
                        std::move(rad));
}

} // namespace detail

/// Basis: words avoiding every relation as a factor, length-then-lex; unit = empty word.
inline AlgebraPtr compile_free_monomial(const FreeMonomialPresentation& pres, FieldSpec field,
                                       std::string name = "free-monomial") {
    const std::size_t g = pres.generators.size();
    require(g > 0, "free monomial presentation needs at least one generator");
    require(!pres.relations.empty(), "free monomial presentation needs relations");
    for (const Word& w : pres.relations) {
        require(w.size() >= 2, "relation words must have length at least 2");
        for (auto a : w)
            require(a < g, "relation word uses an unknown generator");
    }
    for (std::size_t a = 0; a < g; ++a) {
        bool bounded = std::any_of(pres.relations.begin(), pres.relations.end(), [a](const Word& w) {
            return std::all_of(w.begin(), w.end(), [a](std::size_t x) { return x == a; });
        });
        if (!bounded)
            throw Error(ErrorCode::empty_relation_alphabet,
                        "generator '" + pres.generators[a] + "' has no bounding power among the relations");
    }
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < g; ++a)
        arrows.push_back({pres.generators[a], 0, 0});
    return detail::build_path_algebra(field, std::move(name), {"1"}, arrows, pres.generators, pres.relations);
}

/// Basis: trivial paths e_v (vertex order), then nonzero paths length-then-lex.
inline AlgebraPtr compile_quiver_monomial(const QuiverMonomialPresentation& pres, FieldSpec field,
                                         std::string name = "quiver-monomial") {
    const std::size_t V = pres.vertices.size();
    require(V > 0, "quiver needs at least one vertex");
    std::vector<std::string> names;
    for (const Arrow& a : pres.arrows) {
        require(a.source < V && a.target < V, "arrow endpoint out of range");
        names.push_back(a.name);
    }
    for (const Word& w : pres.relations) {
        require(w.size() >= 2, "relation paths must have length at least 2");
        for (auto a : w)
            require(a < pres.arrows.size(), "relation uses an unknown arrow");
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (pres.arrows[w[i]].target != pres.arrows[w[i + 1]].source)
                throw Error(ErrorCode::non_composable_relation,
                            "relation " + detail::join_labels(w, names) + " is not a composable path");
    }
    std::vector<std::string> vlabels;
    for (const auto& v : pres.vertices)
        vlabels.push_back("e" + v);
    return detail::build_path_algebra(field, std::move(name), std::move(vlabels), pres.arrows, names, pres.relations);
}

/// Basis: standard monomials not divisible by any ideal generator, by degree then word order.
inline AlgebraPtr compile_commutative_monomial(const CommutativeMonomialPresentation& pres, FieldSpec field,
                                              std::string name = "commutative-monomial") {
    const std::size_t nv = pres.variables.size();
    require(nv > 0, "commutative presentation needs at least one variable");
    std::vector<unsigned> bound(nv, 0);
    for (const auto& m : pres.monomials) {
        require(m.size() == nv, "exponent vector length must equal the number of variables");
        unsigned total = 0, support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            total += m[i];
            if (m[i] > 0) {
                ++support;
                var = i;
            }
        }
        require(total >= 1, "the unit monomial cannot be a relation");
        if (support == 1 && (bound[var] == 0 || m[var] < bound[var]))
            bound[var] = m[var];
    }
    for (std::size_t i = 0; i < nv; ++i)
        if (bound[i] == 0)
            throw Error(ErrorCode::infinite_dimensional,
                        "variable '" + pres.variables[i] + "' has no bounding power in the ideal");

    auto divisible = [&](const std::vector<unsigned>& e) {
        return std::any_of(pres.monomials.begin(), pres.monomials.end(), [&](const std::vector<unsigned>& m) {
            for (std::size_t i = 0; i < nv; ++i)
                if (e[i] < m[i])
                    return false;
            return true;
        });
    };
    auto as_word = [&](const std::vector<unsigned>& e) {
        Word w;
        for (std::size_t i = 0; i < nv; ++i)
            w.insert(w.end(), e[i], i);
        return w;
    };

    std::vector<std::vector<unsigned>> monos;
    std::vector<unsigned> e(nv, 0);
    while (true) {
        if (!divisible(e))
            monos.push_back(e);
        std::size_t i = 0;
        while (i < nv && ++e[i] == bound[i])
            e[i++] = 0;
        if (i == nv)
            break;
    }
    std::sort(monos.begin(), monos.end(), [&](const auto& a, const auto& b) {
        Word wa = as_word(a), wb = as_word(b);
        if (wa.size() != wb.size())
            return wa.size() < wb.size();
        return wa < wb;
    });
    const std::size_t n = monos.size();
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
        index[monos[k]] = k;
        std::string lab;
        for (std::size_t i = 0; i < nv; ++i) {
            if (monos[k][i] == 0)
                continue;
            if (!lab.empty())
                lab += '*';
            lab += pres.variables[i];
            if (monos[k][i] > 1)
                lab += '^' + std::to_string(monos[k][i]);
        }
        labels.push_back(lab.empty() ? "1" : lab);
    }
    std::vector<SparseVector> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<unsigned> s(nv);
            for (std::size_t i = 0; i < nv; ++i)
                s[i] = monos[a][i] + monos[b][i];
            if (auto it = index.find(s); it != index.end())
                table[a * n + b] = {{it->second, 1}};
        }
    std::vector<Residue> one(n, 0);
    one[0] = 1;
    std::vector<std::size_t> rad;
    for (std::size_t k = 1; k < n; ++k)
        rad.push_back(k);
    return make_algebra(field, std::move(name), std::move(labels), std::move(table), std::move(one), {0},
                        std::move(rad));
}

} // namespace artin

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <numeric>
#include <fstream>
#include <set>
#include <sstream>

#include "artin/algebra_io.hpp"
#include "artin/corpus.hpp"
#include "artin/module.hpp"

using namespace artin;

namespace {

const FieldSpec F101{101};

AlgebraPtr noncommutative_example() {
    return compile_free_monomial({{"x", "y"}, {{0, 0, 0}, {1, 1}, {0, 1, 0}}}, F101, "kxy-x3-y2-xyx");
}

// Words of exactly length len over g letters avoiding all relation factors.
std::size_t avoiding_words(std::size_t g, const std::vector<Word>& rel, std::size_t len) {
    std::vector<Word> layer{{}};
    for (std::size_t l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (std::size_t a = 0; a < g; ++a) {
                Word v = w;
                v.push_back(a);
                bool bad = false;
                for (const auto& r : rel)
                    bad = bad || (r.size() <= v.size() &&
                                  std::equal(r.begin(), r.end(), v.end() - static_cast<std::ptrdiff_t>(r.size())));
                if (!bad)
                    next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return layer.size();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// (b_i b_j)_k with the dense product, for table comparisons.
std::vector<Residue> product_of(const Algebra& a, std::size_t i, std::size_t j) {
    return a.multiply(a.basis_vector(i), a.basis_vector(j));
}

AlgebraPtr with_table_entry(const Algebra& a, std::size_t i, std::size_t j, SparseVector v) {
    auto table = a.table();
    table[i * a.dim() + j] = std::move(v);
    return make_algebra(a.field(), a.name(), a.labels(), table, a.one(), a.idempotents(), a.radical());
}

} // namespace

TEST_CASE("free monomial compilation") {
    AlgebraPtr a = noncommutative_example();
    CHECK(a->dim() == 10);
    CHECK(a->labels() == std::vector<std::string>{"1", "x", "y", "xx", "xy", "yx", "xxy", "yxx", "yxy", "yxxy"});
    CHECK(a->is_local());
    CHECK_FALSE(a->is_commutative());
    CHECK(validate(*a).ok());

    AlgebraPtr k2 = compile_free_monomial({{"x"}, {{0, 0}}}, FieldSpec{2});
    CHECK(k2->dim() == 2);
    CHECK(k2->labels() == std::vector<std::string>{"1", "x"});

    try {
        compile_free_monomial({{"x", "y"}, {{0, 0}, {1, 1}}}, F101);
        FAIL("expected InfiniteDimensional");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::infinite_dimensional);
    }
    try {
        compile_free_monomial({{"x", "y"}, {{0, 0}}}, F101);
        FAIL("expected EmptyRelationAlphabet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::empty_relation_alphabet);
    }
}

TEST_CASE("basis words are the factor-avoiding words") {
    AlgebraPtr a = noncommutative_example();
    const std::vector<Word> rel{{0, 0, 0}, {1, 1}, {0, 1, 0}};
    std::size_t total = 0;
    for (std::size_t len = 0; len <= 6; ++len)
        total += avoiding_words(2, rel, len);
    CHECK(total == a->dim());
    // x * yx = xyx is a relation; xx * y = xxy
    CHECK(product_of(*a, 1, 5) == std::vector<Residue>(10, 0));
    std::vector<Residue> xxy(10, 0);
    xxy[6] = 1;
    CHECK(product_of(*a, 3, 2) == xxy);
}

TEST_CASE("quiver monomial compilation") {
    AlgebraPtr a2 = compile_quiver_monomial({{"1", "2"}, {{"a", 0, 1}}, {}}, F101);
    CHECK(a2->dim() == 3);
    CHECK_FALSE(a2->is_local());
    CHECK(validate(*a2).ok());

    AlgebraPtr cyc = compile_quiver_monomial({{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {{0, 1}, {1, 0}}}, F101);
    CHECK(cyc->dim() == 4);
    CHECK(validate(*cyc).ok());

    AlgebraPtr a3r = compile_quiver_monomial({{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}, {{0, 1}}}, F101);
    CHECK(a3r->dim() == 5);

    try {
        compile_quiver_monomial({{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}, {{1, 0}}}, F101);
        FAIL("expected NonComposableRelation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_composable_relation);
    }
    try {
        compile_quiver_monomial({{"1"}, {{"a", 0, 0}, {"b", 0, 0}}, {{0, 0}, {1, 1}}}, F101);
        FAIL("expected InfiniteDimensional");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::infinite_dimensional);
    }
}

TEST_CASE("commutative monomial compilation") {
    AlgebraPtr a = compile_commutative_monomial({{"x", "y"}, {{2, 0}, {1, 1}, {0, 2}}}, F101);
    CHECK(a->dim() == 3);
    CHECK(a->is_commutative());
    CHECK(a->is_local());
    // socle = annihilator of the radical = span(x, y)
    ModuleMap soc = socle(regular_module(a));
    CHECK(soc.src.dim() == 2);
    Subspace s = Subspace::span(soc.matrix);
    CHECK(s.contains(Matrix::unit_row(F101, 3, 1).row(0)));
    CHECK(s.contains(Matrix::unit_row(F101, 3, 2).row(0)));

    CHECK(compile_commutative_monomial({{"x"}, {{3}}}, F101)->dim() == 3);
    try {
        compile_commutative_monomial({{"x", "y"}, {{2, 0}}}, F101);
        FAIL("expected InfiniteDimensional");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::infinite_dimensional);
    }
}

TEST_CASE("validate locates broken structure constants") {
    AlgebraPtr k3 = compile_free_monomial({{"x"}, {{0, 0, 0}}}, F101);
    REQUIRE(validate(*k3).ok());
    // x * x^2 = 0 becomes x * x^2 = x, so (x x) x^2 = 0 but x (x x^2) = x^2
    AlgebraPtr broken = with_table_entry(*k3, 1, 2, {{1, 1}});
    ValidationReport r = validate(*broken);
    REQUIRE_FALSE(r.ok());
    bool assoc = false;
    for (const auto& f : r.failures)
        assoc = assoc || f.rfind("associativity", 0) == 0;
    CHECK(assoc);

    AlgebraPtr k2 = compile_free_monomial({{"x"}, {{0, 0}}}, F101);
    AlgebraPtr marked = make_algebra(F101, "marked", k2->labels(), k2->table(), k2->one(), {0, 1}, {1});
    ValidationReport p = validate(*marked);
    REQUIRE_FALSE(p.ok());
    CHECK(p.first_failure().rfind("partition", 0) == 0);

    // a radical element squaring to itself is not nilpotent
    AlgebraPtr idem = with_table_entry(*k2, 1, 1, {{1, 1}});
    CHECK_FALSE(validate(*idem).ok());
}

TEST_CASE("opposite algebra") {
    AlgebraPtr comm = compile_commutative_monomial({{"x", "y"}, {{2, 0}, {1, 1}, {0, 2}}}, F101);
    CHECK(opposite(comm)->table() == comm->table());

    AlgebraPtr a = noncommutative_example();
    AlgebraPtr op = opposite(a);
    CHECK(op->dim() == 10);
    CHECK(validate(*op).ok());
    CHECK(opposite(op) == a);
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j)
            CHECK(op->product(i, j) == a->product(j, i));

    AlgebraPtr a2 = compile_quiver_monomial({{"1", "2"}, {{"a", 0, 1}}, {}}, F101);
    AlgebraPtr reversed = compile_quiver_monomial({{"1", "2"}, {{"a", 1, 0}}, {}}, F101);
    CHECK(opposite(a2)->dim() == 3);
    CHECK(opposite(a2)->table() == reversed->table());
}

TEST_CASE("algebra documents round-trip") {
    const std::filesystem::path dir = ARTIN_DATA_DIR;
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        ++seen;
        const std::string text = read_file(entry.path());
        AlgebraDocument doc = parse_algebra_document(text);
        CHECK(serialize(doc) == text);
        AlgebraPtr a = to_algebra(doc);
        CHECK(validate(*a).ok());
        // the based form round-trips to the same structure constants
        AlgebraPtr back = parse_algebra(serialize(*a));
        CHECK(back->table() == a->table());
        CHECK(back->labels() == a->labels());
        CHECK(back->one() == a->one());
    }
    CHECK(seen == builtin_corpus().size());

    AlgebraPtr example = to_algebra(read_algebra_file((dir / "kxy-x3-y2-xyx.json").string()));
    CHECK(example->dim() == 10);
    CHECK(example->name() == "kxy-x3-y2-xyx");
}

TEST_CASE("builtin data files match the builtin corpus") {
    const std::filesystem::path dir = ARTIN_DATA_DIR;
    for (const auto& e : builtin_corpus()) {
        AlgebraDocument doc = e.document;
        doc.name = e.id;
        CHECK(read_file(dir / (e.id + ".json")) == serialize(doc));
    }
}

TEST_CASE("document errors carry locations") {
    try {
        parse_algebra_document("{\n  \"field\": {\"prime\": 4},\n  \"presentation\": {\"kind\": \"free_monomial\", "
                               "\"generators\": [\"x\"], \"relations\": [\"xx\"]}\n}\n");
        FAIL("expected FieldNotPrime");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::field_not_prime);
        CHECK(e.line() == 2);
    }
    try {
        parse_algebra_document("{\"field\": {\"prime\": 5}, \"presentation\": {\"kind\": \"groebner\"}}");
        FAIL("expected UnknownKind");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::unknown_kind);
    }
    try {
        parse_algebra_document("{\"field\": {\"prime\": 5},\n \"presentation\": [1, 2,]}");
        FAIL("expected SyntaxError");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::syntax_error);
        CHECK(e.line() == 2);
    }
    try {
        parse_algebra_document("{\"field\": {\"prime\": 5}}");
        FAIL("expected SyntaxError for the missing presentation");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::syntax_error);
    }
}

TEST_CASE("multi-letter generator names serialize as arrays") {
    FreeMonomialPresentation p{{"u1", "u2"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
    AlgebraDocument doc{"multi", F101, p};
    const std::string text = serialize(doc);
    CHECK(text.find("[\"u1\",\"u1\"]") != std::string::npos);
    CHECK(parse_algebra_document(text).presentation == doc.presentation);
    CHECK(to_algebra(doc)->dim() == 3);
}

// Random free monomial presentations: the automaton's dimension matches naive enumeration,
// and an infinite verdict matches the existence of long avoiding words.
TEST_CASE("property: compiled dimension equals naive word count") {
    SeedState seed(derive_seed(7, "free-monomial-dims"));
    std::size_t finite = 0, infinite = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t g = 1 + seed.below(3);
        std::vector<Word> rel;
        for (std::size_t a = 0; a < g; ++a)
            rel.push_back(Word(2 + seed.below(3), a));
        const std::size_t extra = seed.below(4);
        for (std::size_t k = 0; k < extra; ++k) {
            Word w(2 + seed.below(2));
            for (auto& x : w)
                x = seed.below(g);
            rel.push_back(w);
        }
        std::vector<std::string> names;
        for (std::size_t a = 0; a < g; ++a)
            names.push_back(std::string(1, static_cast<char>('x' + a)));
        try {
            AlgebraPtr a = compile_free_monomial({names, rel}, FieldSpec{3});
            if (a->dim() > 64)
                continue;
            ++finite;
            std::size_t total = 0;
            for (std::size_t len = 0; len <= a->dim(); ++len)
                total += avoiding_words(g, rel, len);
            CHECK(total == a->dim());
            CHECK(avoiding_words(g, rel, a->dim() + 1) == 0);
            CHECK(validate(*a).ok());
            CHECK(opposite(opposite(a)) == a);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::infinite_dimensional);
            ++infinite;
            CHECK(avoiding_words(g, rel, 14) > 0);
        }
    }
    CHECK(finite > 30);
    CHECK(infinite > 5);
}

TEST_CASE("property: commutative compilations have symmetric tables") {
    SeedState seed(derive_seed(7, "commutative-tables"));
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nv = 1 + seed.below(3);
        std::vector<std::vector<unsigned>> mons;
        for (std::size_t i = 0; i < nv; ++i) {
            std::vector<unsigned> m(nv, 0);
            m[i] = static_cast<unsigned>(2 + seed.below(3));
            mons.push_back(m);
        }
        for (std::size_t k = seed.below(3); k > 0; --k) {
            std::vector<unsigned> m(nv);
            for (auto& e : m)
                e = static_cast<unsigned>(seed.below(3));
            if (std::accumulate(m.begin(), m.end(), 0u) >= 2)
                mons.push_back(m);
        }
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < nv; ++i)
            vars.push_back(std::string(1, static_cast<char>('x' + i)));
        AlgebraPtr a = compile_commutative_monomial({vars, mons}, F101);
        CHECK(a->is_commutative());
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j)
                CHECK(a->product(i, j) == a->product(j, i));
        CHECK(validate(*a).ok());
        CHECK(opposite(a)->table() == a->table());
    }
}

TEST_CASE("every corpus algebra validates") {
    for (const auto& spec : {"builtin", "nakayama:3,4", "local-monomial:3,12"})
        for (const auto& e : load_corpus(spec)) {
            AlgebraPtr a = e.build();
            INFO(e.id);
            CHECK(validate(*a).ok());
            AlgebraPtr op = opposite(a);
            CHECK(validate(*op).ok());
            CHECK(op->idempotents() == a->idempotents());
            CHECK(op->radical() == a->radical());
        }
}

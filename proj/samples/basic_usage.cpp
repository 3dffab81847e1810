// Builds K<x,y>/(x^3, y^2, xyx) over F_101, looks at its simple module S and its double dual,
// and splits S** into indecomposables.

#include <iostream>

#include "artin/artin.hpp"

int main() {
    using namespace artin;

    FreeMonomialPresentation pres{{"x", "y"}, {{0, 0, 0}, {1, 1}, {0, 1, 0}}};
    AlgebraPtr a = compile_free_monomial(pres, FieldSpec{101}, "x3-y2-xyx");
    std::cout << "dim A = " << a->dim() << ", basis:";
    for (const auto& l : a->labels())
        std::cout << " " << l;
    std::cout << "\n";

    RightModule s = simple_module(a, 0);
    ReflexivityVerdict v = reflexivity_verdict(s, "S");
    std::cout << "dim S* = " << v.dim_star << ", dim S** = " << v.dim_double_star
              << ", torsionless: " << v.torsionless_eval << ", reflexive: " << v.reflexive_eval << "\n";

    SeedState seed(derive_seed(0, "basic-usage"));
    RightModule dd = double_star(s);
    Decomposition d = decompose(dd, seed);
    std::cout << "S** splits into " << d.summands.size() << " summands:";
    for (const auto& part : d.summands)
        std::cout << " dim " << part.module.dim() << (part.certified ? " (indecomposable)" : " (uncertified)");
    std::cout << "\n";

    // xA is the right ideal generated by x
    const std::size_t x = 1;
    RightModule xa = submodule_generated(regular_module(a), Matrix::unit_row(a->field(), a->dim(), x)).src;
    IsoResult iso = is_isomorphic(dd, direct_sum({xa, xa}), seed);
    std::cout << "S** isomorphic to xA + xA: " << to_string(iso.verdict) << "\n";

    ClassificationReport c = classify(a);
    std::cout << "selfinjective: " << c.selfinjective << ", QF-3: " << c.qf3 << ", Gorenstein: " << to_string(c.gorenstein)
              << "\n";
}

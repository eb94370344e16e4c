#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitwist/drinfeld.hpp"

using namespace orbitwist;

namespace {

// exact associativity on one basis triple
bool assoc_triple(const DoubleAlgebra& alg, DoubleBasis a, DoubleBasis b, DoubleBasis c) {
    const int n = alg.modulus();
    std::optional<std::pair<DoubleBasis, int>> lhs, rhs;
    if (auto ab = alg.product(a, b)) {
        if (auto p = alg.product(ab->first, c))
            lhs = std::make_pair(p->first, (ab->second + p->second) % n);
    }
    if (auto bc = alg.product(b, c)) {
        if (auto p = alg.product(a, bc->first))
            rhs = std::make_pair(p->first, (bc->second + p->second) % n);
    }
    if (lhs.has_value() != rhs.has_value()) return false;
    if (!lhs) return true;
    return lhs->first == rhs->first && lhs->second == rhs->second;
}

bool unit_law(const DoubleAlgebra& alg, DoubleBasis b) {
    const FiniteGroup& g = alg.group();
    // left: sum_k (k,e) b -- exactly one term survives, with coefficient 1
    int hits = 0;
    bool ok = true;
    for (int k = 0; k < g.order; ++k) {
        if (auto p = alg.product({k, g.identity}, b)) {
            ++hits;
            ok &= p->first == b && p->second == 0;
        }
    }
    ok &= hits == 1;
    hits = 0;
    for (int k = 0; k < g.order; ++k) {
        if (auto p = alg.product(b, {k, g.identity})) {
            ++hits;
            ok &= p->first == b && p->second == 0;
        }
    }
    return ok && hits == 1;
}

std::multiset<int> dims_multiset(const DoubleSimples& s) {
    return {s.dims.begin(), s.dims.end()};
}

}  // namespace

TEST_CASE("delta_g idempotents") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    for (int a = 0; a < g.order; ++a) {
        auto p = alg.product({a, g.identity}, {a, g.identity});
        REQUIRE(p.has_value());
        CHECK(p->first == DoubleBasis{a, g.identity});
        CHECK(p->second == 0);
        for (int b = 0; b < g.order; ++b)
            if (b != a) CHECK_FALSE(alg.product({a, g.identity}, {b, g.identity}).has_value());
    }
}

TEST_CASE("untwisted double of S3: exhaustive associativity and unit") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    const int nb = alg.basis_count();
    for (int i = 0; i < nb; ++i) {
        CHECK(unit_law(alg, alg.basis(i)));
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k)
                if (!assoc_triple(alg, alg.basis(i), alg.basis(j), alg.basis(k))) {
                    FAIL("associativity fails at (", i, ",", j, ",", k, ")");
                }
    }
}

TEST_CASE("twisted double of (Z3)^3 type III: sampled associativity, full unit") {
    FiniteGroup g = elementary_abelian(3, 3);
    DoubleAlgebra alg(g, standard_cocycle(g, 3, 3, CocycleType::III, {1, 2, 3}));
    const int nb = alg.basis_count();
    for (int i = 0; i < nb; ++i) CHECK(unit_law(alg, alg.basis(i)));
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 20000; ++t) {
        DoubleBasis a = alg.basis(static_cast<int>(rng() % nb));
        DoubleBasis b = alg.basis(static_cast<int>(rng() % nb));
        DoubleBasis c = alg.basis(static_cast<int>(rng() % nb));
        if (!assoc_triple(alg, a, b, c)) FAIL("associativity fails");
    }
    // a genuinely twisted product: theta exponents are not all zero
    bool twisted = false;
    for (int i = 0; i < nb && !twisted; ++i)
        for (int j = 0; j < nb && !twisted; ++j)
            if (auto p = alg.product(alg.basis(i), alg.basis(j))) twisted = p->second != 0;
    CHECK(twisted);
}

TEST_CASE("coproduct: trivial twist has unit coefficients, gamma_e vanishes") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra triv(g, Cochain3::trivial(g, 2));
    for (int i = 0; i < triv.basis_count(); ++i) {
        auto terms = triv.coproduct(triv.basis(i));
        CHECK(static_cast<int>(terms.size()) == g.order);
        for (const auto& [a, b, e] : terms) {
            CHECK(e == 0);
            CHECK(g.mul(a.g, b.g) == triv.basis(i).g);
        }
    }
    FiniteGroup z = elementary_abelian(3, 3);
    DoubleAlgebra alg(z, standard_cocycle(z, 3, 3, CocycleType::III, {1, 2, 3}));
    for (int h = 0; h < z.order; ++h)
        for (int l = 0; l < z.order; ++l) CHECK(alg.gamma_exp(z.identity, h, l) == 0);
}

TEST_CASE("coproduct is an algebra map (exact, random pairs)") {
    FiniteGroup g = elementary_abelian(3, 3);
    DoubleAlgebra alg(g, standard_cocycle(g, 3, 3, CocycleType::III, {1, 2, 3}));
    std::mt19937_64 rng(5);
    const int nb = alg.basis_count();
    for (int t = 0; t < 60; ++t) {
        DoubleBasis a = alg.basis(static_cast<int>(rng() % nb));
        DoubleBasis b = alg.basis(static_cast<int>(rng() % nb));
        PairSum lhs = pair_product(coproduct_sum(alg, a), coproduct_sum(alg, b));
        auto prod = alg.product(a, b);
        PairSum rhs(alg);
        if (prod) rhs = coproduct_sum(alg, prod->first, prod->second);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("R-matrix: shape, inverse, quasitriangularity") {
    // trivial omega on Z2: 4 terms, all coefficients 1
    FiniteGroup z2 = cyclic_group(2);
    DoubleAlgebra a2(z2, Cochain3::trivial(z2, 2));
    PairSum a = r_matrix(a2);
    CHECK(a.term_count() == 4);
    for (const auto& [k, c] : a.terms()) CHECK(c == CycInt::one(a2.modulus()));
    CHECK(pair_product(a, r_matrix_inverse(a2)) == unit_pair(a2));

    // exhaustive quasitriangularity for small groups
    for (const char* d : {"cyclic(2)", "symmetric(3)", "quaternion"}) {
        FiniteGroup g = build_group(d);
        DoubleAlgebra alg(g, Cochain3::trivial(g, 4));
        PairSum A = r_matrix(alg), Ainv = r_matrix_inverse(alg);
        CHECK(pair_product(A, Ainv) == unit_pair(alg));
        for (int i = 0; i < alg.basis_count(); ++i) {
            PairSum lhs = pair_product(pair_product(A, coproduct_sum(alg, alg.basis(i))), Ainv);
            CHECK(lhs == sigma_swap(coproduct_sum(alg, alg.basis(i))));
        }
    }

    // twisted case: exact inverse and sampled quasitriangularity
    FiniteGroup g = elementary_abelian(3, 3);
    DoubleAlgebra alg(g, standard_cocycle(g, 3, 3, CocycleType::III, {1, 2, 3}));
    PairSum A = r_matrix(alg), Ainv = r_matrix_inverse(alg);
    CHECK(pair_product(A, Ainv) == unit_pair(alg));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 150; ++t) {
        DoubleBasis b = alg.basis(static_cast<int>(rng() % alg.basis_count()));
        PairSum lhs = pair_product(pair_product(A, coproduct_sum(alg, b)), Ainv);
        CHECK(lhs == sigma_swap(coproduct_sum(alg, b)));
    }
}

TEST_CASE("DPR induction at the identity with the trivial rep") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    const SubgroupView& ce = alg.family().cent(g.identity);
    ProjectiveRep triv;
    triv.group = &ce.local;
    triv.alpha = Cochain2::trivial(ce.local, 2);
    triv.dim = 1;
    triv.rho.assign(g.order, Matrix::Ones(1, 1));
    DoubleModule v = dpr_induce(alg, g.identity, triv);
    CHECK(v.dim == 1);
    for (int k = 0; k < g.order; ++k)
        for (int x = 0; x < g.order; ++x) {
            Complex expect = k == g.identity ? 1.0 : 0.0;
            CHECK(std::abs(v.action[k * g.order + x](0, 0) - expect) < 1e-12);
        }
    CHECK(module_axiom_defect(v) < 1e-9);
}

TEST_CASE("simples of D(S3): 8 modules, dims {1,1,2,3,3,2,2,2}") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    ConjugacyData cd = conjugacy(g);
    RepCache cache;
    DoubleSimples s = compute_simples(alg, cd, cache);
    CHECK(s.modules.size() == 8);
    CHECK(dims_multiset(s) == std::multiset<int>{1, 1, 2, 2, 2, 2, 3, 3});
    for (const auto& m : s.modules) CHECK(module_axiom_defect(m) < 1e-9);
    // Z2: 4 one-dimensional simples
    FiniteGroup z2 = cyclic_group(2);
    DoubleAlgebra a2(z2, Cochain3::trivial(z2, 2));
    RepCache c2;
    DoubleSimples s2 = compute_simples(a2, conjugacy(z2), c2);
    CHECK(s2.modules.size() == 4);
    CHECK(dims_multiset(s2) == std::multiset<int>{1, 1, 1, 1});
}

TEST_CASE("simples census for (Z3)^3 type III: 27 + 26*3 = 105") {
    FiniteGroup g = elementary_abelian(3, 3);
    DoubleAlgebra alg(g, standard_cocycle(g, 3, 3, CocycleType::III, {1, 2, 3}));
    ConjugacyData cd = conjugacy(g);
    RepCache cache;
    DoubleSimples s = compute_simples(alg, cd, cache);
    CHECK(s.modules.size() == 105);
    std::multiset<int> expect;
    for (int i = 0; i < 27; ++i) expect.insert(1);
    for (int i = 0; i < 78; ++i) expect.insert(3);
    CHECK(dims_multiset(s) == expect);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const DoubleModule& m = s.modules[rng() % s.modules.size()];
        CHECK(module_axiom_defect(m, 400, rng()) < 1e-9);
    }
}

TEST_CASE("simples census for the extraspecial group of order 27") {
    FiniteGroup g = extraspecial_p3(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 3));
    ConjugacyData cd = conjugacy(g);
    RepCache cache;
    DoubleSimples s = compute_simples(alg, cd, cache);
    CHECK(s.modules.size() == 105);
    long long dimsq = 0;
    for (int d : s.dims) dimsq += static_cast<long long>(d) * d;
    CHECK(dimsq == 729);
}

TEST_CASE("tensor products: matrix construction matches the character formula") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    RepCache cache;
    DoubleSimples s = compute_simples(alg, conjugacy(g), cache);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        const DoubleModule& u = s.modules[rng() % s.modules.size()];
        const DoubleModule& v = s.modules[rng() % s.modules.size()];
        DoubleModule tv = tensor_modules(u, v);
        CHECK(module_axiom_defect(tv) < 1e-9);
        auto direct = module_character(tv);
        auto formula = tensor_character(alg, module_character(u), module_character(v));
        for (size_t i = 0; i < direct.size(); ++i) CHECK(std::abs(direct[i] - formula[i]) < 1e-8);
    }
    // tensor with the trivial module leaves characters unchanged
    DoubleModule one = trivial_module(alg);
    for (int t = 0; t < 4; ++t) {
        const DoubleModule& u = s.modules[rng() % s.modules.size()];
        auto chi = tensor_character(alg, module_character(u), module_character(one));
        auto expect = module_character(u);
        for (size_t i = 0; i < chi.size(); ++i) CHECK(std::abs(chi[i] - expect[i]) < 1e-9);
    }
}

TEST_CASE("Grothendieck ring commutativity via decompositions") {
    FiniteGroup g = elementary_abelian(3, 3);
    DoubleAlgebra alg(g, standard_cocycle(g, 3, 3, CocycleType::III, {1, 2, 3}));
    RepCache cache;
    DoubleSimples s = compute_simples(alg, conjugacy(g), cache);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
        size_t i = rng() % s.modules.size(), j = rng() % s.modules.size();
        auto uv = tensor_character(alg, s.chars[i], s.chars[j]);
        auto vu = tensor_character(alg, s.chars[j], s.chars[i]);
        auto d1 = decompose_module(s, uv, s.dims[i] * s.dims[j]);
        auto d2 = decompose_module(s, vu, s.dims[i] * s.dims[j]);
        CHECK(d1 == d2);
    }
}

TEST_CASE("decompositions: unit vectors and the regular module") {
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra alg(g, Cochain3::trivial(g, 2));
    RepCache cache;
    DoubleSimples s = compute_simples(alg, conjugacy(g), cache);
    for (size_t i = 0; i < s.modules.size(); ++i) {
        auto d = decompose_module(s, s.chars[i], s.dims[i]);
        for (size_t j = 0; j < d.size(); ++j) CHECK(d[j] == (i == j ? 1 : 0));
    }
    DoubleModule reg = regular_module(alg);
    CHECK(module_axiom_defect(reg, 500, 1) < 1e-9);
    auto dr = decompose_module(s, module_character(reg), reg.dim);
    for (size_t j = 0; j < dr.size(); ++j) CHECK(dr[j] == s.dims[j]);
}

TEST_CASE("cohomologous twists give the same simple dimension multiset") {
    std::mt19937_64 rng(21);
    FiniteGroup g = symmetric_group(3);
    DoubleAlgebra plain(g, Cochain3::trivial(g, 6));
    RepCache c1;
    DoubleSimples s1 = compute_simples(plain, conjugacy(g), c1);
    for (int t = 0; t < 3; ++t) {
        Cochain2 beta = Cochain2::trivial(g, 6);
        for (int& e : beta.exps) e = static_cast<int>(rng() % 6);
        DoubleAlgebra shifted(g, coboundary(beta));
        RepCache c2;
        DoubleSimples s2 = compute_simples(shifted, conjugacy(g), c2);
        CHECK(dims_multiset(s1) == dims_multiset(s2));
    }
}

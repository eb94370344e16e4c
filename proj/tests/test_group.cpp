#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orbitwist/group.hpp"

using namespace orbitwist;

namespace {

// independent class enumeration straight from the table
std::vector<std::vector<int>> brute_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int k = 0; k < g.order; ++k) cls.insert(g.conj(k, x));
        std::vector<int> v(cls.begin(), cls.end());
        for (int e : v) seen[e] = 1;
        out.push_back(v);
    }
    return out;
}

std::multiset<size_t> class_sizes(const std::vector<std::vector<int>>& cls) {
    std::multiset<size_t> s;
    for (const auto& c : cls) s.insert(c.size());
    return s;
}

}  // namespace

TEST_CASE("builders satisfy the group laws") {
    for (const char* d : {"trivial", "cyclic(1)", "cyclic(4)", "elementary(2,2)",
                          "elementary(3,3)", "dihedral(4)", "quaternion", "symmetric(3)",
                          "symmetric(4)", "extraspecial(3)", "product(cyclic(2),cyclic(3))"}) {
        FiniteGroup g = build_group(d);
        INFO(d);
        CHECK_FALSE(check_group_laws(g).has_value());
    }
}

TEST_CASE("cyclic(1) is the trivial group") {
    FiniteGroup g = build_group("cyclic(1)");
    CHECK(g.order == 1);
    CHECK(g.identity == 0);
}

TEST_CASE("invalid descriptors are rejected") {
    CHECK_THROWS(build_group("extraspecial(2)"));
    CHECK_THROWS(build_group("extraspecial(9)"));
    CHECK_THROWS(build_group("symmetric(5)"));
    CHECK_THROWS(build_group("nonsense(3)"));
}

TEST_CASE("extraspecial(3): order 27, center of order 3, 11 classes") {
    FiniteGroup g = extraspecial_p3(3);
    CHECK(g.order == 27);
    CHECK(center(g).order() == 3);
    auto cls = brute_classes(g);
    CHECK(cls.size() == 11);
    CHECK(class_sizes(cls) == std::multiset<size_t>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
    // library agrees with the brute-force oracle
    ConjugacyData cd = conjugacy(g);
    CHECK(cd.classes.size() == 11);
    CHECK(class_sizes(cd.classes) == class_sizes(cls));
}

TEST_CASE("S3 classes and centralizers") {
    FiniteGroup g = symmetric_group(3);
    CHECK(g.order == 6);
    ConjugacyData cd = conjugacy(g);
    CHECK(class_sizes(cd.classes) == std::multiset<size_t>{1, 2, 3});
    CHECK(centralizer(g, g.identity).order() == 6);
    // a transposition: order-2 element
    int t = -1;
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity && g.mul(x, x) == g.identity) t = x;
    REQUIRE(t >= 0);
    CHECK(centralizer(g, t).order() == 2);
}

TEST_CASE("conjugacy witnesses and counting identity") {
    for (const char* d : {"symmetric(4)", "dihedral(4)", "quaternion", "extraspecial(3)"}) {
        FiniteGroup g = build_group(d);
        ConjugacyData cd = conjugacy(g);
        INFO(d);
        for (int x = 0; x < g.order; ++x) {
            int rep = cd.representative[cd.class_of[x]];
            CHECK(g.conj(cd.conjugator[x], rep) == x);
            CHECK(static_cast<int>(cd.classes[cd.class_of[x]].size()) *
                      centralizer(g, x).order() ==
                  g.order);
        }
    }
}

TEST_CASE("abelian groups have singleton classes") {
    FiniteGroup g = elementary_abelian(3, 2);
    ConjugacyData cd = conjugacy(g);
    CHECK(cd.classes.size() == 9);
    for (const auto& c : cd.classes) CHECK(c.size() == 1);
}

TEST_CASE("extraspecial quotient by center is elementary abelian p^2") {
    FiniteGroup g = extraspecial_p3(3);
    SubgroupView z = center(g);
    QuotientData q = quotient(g, z.elements);
    CHECK(q.group.order == 9);
    CHECK(q.group.is_abelian());
    for (int x = 0; x < q.group.order; ++x)
        if (x != q.group.identity) CHECK(q.group.element_order(x) == 3);
    CHECK(g.exponent() == 3);  // exponent-p construction
}

TEST_CASE("transversals cover cosets exactly once") {
    FiniteGroup g = symmetric_group(4);
    int t = -1;
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity && g.mul(x, x) == g.identity) {
            t = x;
            break;
        }
    SubgroupView c = centralizer(g, t);
    CHECK(static_cast<int>(c.transversal.size()) * c.order() == g.order);
    std::set<int> covered;
    for (int rep : c.transversal)
        for (int k : c.elements) covered.insert(g.mul(rep, k));
    CHECK(static_cast<int>(covered.size()) == g.order);
}

TEST_CASE("subgroup views embed consistently") {
    FiniteGroup g = symmetric_group(3);
    SubgroupView whole = subgroup_view(g, [&] {
        std::vector<int> all(g.order);
        for (int i = 0; i < g.order; ++i) all[i] = i;
        return all;
    }());
    int t = 1;
    while (g.mul(t, t) != g.identity || t == g.identity) ++t;
    SubgroupView c = centralizer(g, t);
    SubgroupView emb = embed(c, whole);
    CHECK(emb.local.table == c.local.table);
}

TEST_CASE("dual group of Z1 and Z3") {
    DualGroup d1 = dual_group(trivial_group());
    CHECK(d1.group.order == 1);

    FiniteGroup z3 = cyclic_group(3);
    DualGroup d3 = dual_group(z3);
    CHECK(d3.group.order == 3);
    CHECK(d3.modulus == 3);
    // some character takes value zeta_3 on the generator
    bool has_nontrivial = false;
    for (const auto& chi : d3.char_exponents) has_nontrivial |= chi[1] == 1;
    CHECK(has_nontrivial);
    // dual is again cyclic of order 3
    CHECK(d3.group.element_order(1) == 3);
}

TEST_CASE("dual of (Z3)^2: 9 characters with nondegenerate pairing") {
    FiniteGroup k = elementary_abelian(3, 2);
    DualGroup d = dual_group(k);
    CHECK(d.group.order == 9);
    // pairing matrix chi_i(g_j) over the two generators has rank 2 mod 3
    auto gens = generating_set(k);
    REQUIRE(gens.size() == 2);
    std::set<std::pair<int, int>> rows;
    for (const auto& chi : d.char_exponents) rows.insert({chi[gens[0]], chi[gens[1]]});
    CHECK(rows.size() == 9);  // all 9 pairs distinct => rank 2
    CHECK_THROWS(dual_group(symmetric_group(3)));
}

TEST_CASE("generating sets are small and generate") {
    for (const char* d : {"cyclic(8)", "elementary(3,3)", "quaternion", "symmetric(4)"}) {
        FiniteGroup g = build_group(d);
        auto gens = generating_set(g);
        INFO(d);
        CHECK(static_cast<int>(closure(g, gens).size()) == g.order);
        CHECK(gens.size() <= 6);
    }
}

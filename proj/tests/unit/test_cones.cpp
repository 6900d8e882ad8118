#include "../support/oracle.hpp"

#include "ratmod/conf.hpp"
#include "ratmod/cone.hpp"
#include "ratmod/error.hpp"

#include <doctest.h>

using namespace ratmod;

namespace {

AlgebraMorphism augmentation(const CdgaPtr& a)
{
    const CdgaPtr q = ground_field();
    AlgebraMorphism f{a, q, LinearMap::zero(a->dim(), 1, 0)};
    for (std::size_t i = 0; i < a->dim(); ++i)
        if (a->space().degree(i) == 0)
            f.map.columns[i] = SparseVec::basis(0, a->unit().at(i) == 0 ? Scalar(0) : 1 / a->unit().at(i));
    return f;
}

// Q^2 with idempotents e1, e2 in degree 0: not connected.
CdgaPtr two_points()
{
    GradedSpace s({{"e1", 0}, {"e2", 0}});
    std::vector<SparseVec> products(4);
    products[0] = SparseVec::basis(0);
    products[3] = SparseVec::basis(1);
    return std::make_shared<const Cdga>(s, SparseVec::basis(0) + SparseVec::basis(1), products,
                                        LinearMap::zero(2, 2, 1));
}

}  // namespace

TEST_CASE("mapping cones")
{
    SUBCASE("cone of the identity is acyclic")
    {
        const ModulePtr q = module_of(fixtures::koszul(2, 2));
        const ConeModel c = mapping_cone(identity(q));
        CHECK(Cohomology(*c.module).dim() == 0);
        CHECK(!cone_exactness_failure(c));
    }
    SUBCASE("zero attaching map splits")
    {
        const CdgaPtr a = fixtures::truncated_polynomial("x", 2, 3);
        const ModulePtr n = module_of(a);
        const ModulePtr q = suspend(module_of(a), -3);
        const ConeModel c = mapping_cone(zero_map(q, n));
        for (int p = -2; p <= 10; ++p)
            CHECK(oracle::betti(c.module->space(), c.module->differential(), p) ==
                  oracle::betti(n->space(), n->differential(), p) +
                      oracle::betti(q->space(), q->differential(), p + 1));
        CHECK(verify_module(*c.module).empty());
        CHECK(verify_morphism(c.target_inclusion).empty());
        CHECK(verify_morphism(c.projection).empty());
    }
    SUBCASE("quaternionic Hopf cone")
    {
        const CdgaPtr q = fixtures::sphere(4);
        const CdgaPtr qq = tensor(q, q);
        const SparseVec xx = SparseVec::basis(qq->space().index_of("x⊗x"));
        const ConeModel c = diagonal_cone(q, xx, 8);
        const auto& s = c.module->space();
        const std::size_t f1 = s.index_of("s(s^-8(1))");
        CHECK(c.module->d(SparseVec::basis(f1)) == xx);
        CHECK(oracle::betti_list(s, c.module->differential(), 0, 12) ==
              std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0});
    }
    SUBCASE("invalid morphism")
    {
        const ModulePtr q = module_of(fixtures::koszul(2, 1));
        ModuleMorphism f = identity(q);
        f.map.columns[q->space().index_of("u")] = SparseVec();
        CHECK_THROWS_WITH_AS(mapping_cone(f), doctest::Contains("not a dgmodule morphism"), Error);
    }
}

TEST_CASE("homotopy kernels")
{
    const ModulePtr m = module_of(fixtures::truncated_polynomial("x", 2, 3));
    SUBCASE("identity")
    {
        const HomotopyKernel h = homotopy_kernel(identity(m));
        CHECK(Cohomology(*h.cone.module).dim() == 0);
        REQUIRE(h.kernel);
        CHECK(h.kernel->module->dim() == 0);
    }
    SUBCASE("zero map")
    {
        const ModulePtr n = suspend(m, -1);
        const HomotopyKernel h = homotopy_kernel(zero_map(m, n));
        for (int p = -2; p <= 8; ++p)
            CHECK(oracle::betti(h.cone.module->space(), h.cone.module->differential(), p) ==
                  oracle::betti(m->space(), m->differential(), p) +
                      oracle::betti(n->space(), n->differential(), p - 1));
        CHECK(verify_morphism(h.to_source).empty());
    }
    SUBCASE("surjection")
    {
        const CdgaPtr a = fixtures::truncated_polynomial("x", 2, 3);
        const AlgebraMorphism eps = augmentation(a);
        const HomotopyKernel h = homotopy_kernel(as_module_morphism(eps));
        REQUIRE(h.kernel);
        const Cohomology hk(*h.kernel->module);
        const Cohomology hh(*h.cone.module);
        CHECK(hk.dims() == hh.dims());
        CHECK(hk.dims() == std::map<int, std::size_t>{{2, 1}, {4, 1}});
    }
}

TEST_CASE("balanced morphisms")
{
    const CdgaPtr a = fixtures::truncated_polynomial("x", 2, 3);
    CHECK(is_balanced(identity(module_of(a))).balanced);

    const std::size_t ix = a->space().index_of("x");
    const ModulePtr rank1 = free_module(a, {{"u", 2}});
    CHECK(is_balanced(free_module_map(rank1, module_of(a), {SparseVec::basis(ix)})).balanced);

    const ModulePtr rank2 = free_module(a, {{"u", 0}, {"v", 2}});
    const ModuleMorphism f = free_module_map(rank2, module_of(a), {a->unit(), SparseVec::basis(ix)});
    const BalanceCheck b = is_balanced(f);
    CHECK(!b.balanced);
    CHECK(!b.witness.empty());
    CHECK_THROWS_WITH_AS(semi_trivial_cone(f), doctest::Contains("balanced condition fails"), Error);
    try {
        semi_trivial_cone(f);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::hypothesis);
    }
}

TEST_CASE("semi-trivial cones")
{
    const CdgaPtr a = fixtures::truncated_polynomial("x", 2, 3);
    const ModulePtr q = free_module(a, {{"u", 3}, {"w", 5}});
    const ConeModel c = semi_trivial_cone(zero_map(q, module_of(a)));
    REQUIRE(c.is_semitrivial());
    CHECK(verify_cdga(*c.algebra).empty());
    REQUIRE(c.inclusion);
    CHECK(verify_morphism(*c.inclusion).empty());
    // (sq)(sq') = 0
    const auto& s = c.algebra->space();
    for (std::size_t i = a->dim(); i < s.dim(); ++i)
        for (std::size_t j = a->dim(); j < s.dim(); ++j)
            CHECK(c.algebra->product(i, j).is_zero());
}

TEST_CASE("truncations")
{
    SUBCASE("sphere below its class")
    {
        const CdgaTruncation t = truncate(fixtures::sphere(4), 3);
        CHECK(t.quotient->dim() == 1);
        CHECK(t.quotient->space().degree(0) == 0);
    }
    SUBCASE("bound above the top degree")
    {
        const CdgaPtr a = fixtures::koszul(2, 2);
        const CdgaTruncation t = truncate(a, 10);
        CHECK(t.ideal.empty());
        CHECK(t.quotient->dim() == a->dim());
        CHECK(t.projection.map == LinearMap::identity(a->dim()));
    }
    SUBCASE("S2 model at N = 4")
    {
        const CdgaPtr a = fixtures::algebra(
            "name = \"S2\"\nbound = 7\nrelations = [\"a^4\", \"a^2*b\"]\n[[generators]]\nname = \"a\"\ndegree = 2\n"
            "[[generators]]\nname = \"b\"\ndegree = 3\n[differentials]\nb = \"a^2\"\n");
        const CdgaTruncation t = truncate(a, 4);
        CHECK(t.quotient->space().dims() == std::map<int, std::size_t>{{0, 1}, {2, 1}, {3, 1}, {4, 1}});
        CHECK(t.quotient->space().name(t.quotient->space().in_degree(4)[0]) == "a^2");
        CHECK(oracle::betti_list(*t.quotient, 6) == oracle::betti_list(*a, 6));
        CHECK(verify_cdga(*t.quotient).empty());
        CHECK(verify_morphism(t.projection).empty());
    }
    SUBCASE("module truncation")
    {
        const ModulePtr m = suspend(module_of(fixtures::koszul(2, 2)), -1);
        const ModuleTruncation t = truncate(m, 3);
        CHECK(verify_module(*t.quotient).empty());
        for (int p = 0; p <= 3; ++p)
            CHECK(oracle::betti(t.quotient->space(), t.quotient->differential(), p) ==
                  oracle::betti(m->space(), m->differential(), p));
        CHECK(t.quotient->space().max_degree() <= 3);
    }
    SUBCASE("non-connected base")
    {
        CHECK_THROWS_WITH_AS(truncate(two_points(), 1), doctest::Contains("truncation ideal need not be stable"),
                             Error);
    }
}

TEST_CASE("truncated semi-trivial cones")
{
    const CdgaPtr a = ground_field();
    const ModulePtr q = free_module(a, {{"w", 4}, {"w'", 6}});
    const ModuleMorphism f = zero_map(q, module_of(a));
    const ConeModel c = truncated_semitrivial_cone(f, 5, 4);
    REQUIRE(c.is_semitrivial());
    CHECK(verify_cdga(*c.algebra).empty());
    CHECK(c.algebra->space().max_degree() <= 5);
    CHECK_THROWS_WITH_AS(truncated_semitrivial_cone(f, 6, 4), doctest::Contains("degree window violated"), Error);
    CHECK_THROWS_WITH_AS(truncated_semitrivial_cone(f, 5, 5), doctest::Contains("connectivity bound false"), Error);
}

TEST_CASE("square model")
{
    SUBCASE("identity")
    {
        const CdgaPtr b = fixtures::sphere(4);
        const SquareModel sq = square_model(identity(b));
        CHECK(sq.kernel.empty());
        CHECK(sq.quotient->dim() == sq.tensor->dim());
        CHECK(sq.mu_tilde.map == sq.mu.map);
    }
    SUBCASE("augmentation of a sphere")
    {
        const CdgaPtr b = fixtures::sphere(4);
        const SquareModel sq = square_model(augmentation(b));
        CHECK(sq.kernel.size() == 1);
        CHECK(sq.kernel_square.size() == 1);
        CHECK(sq.quotient->space().dims() == std::map<int, std::size_t>{{0, 1}, {4, 2}});
    }
    SUBCASE("not surjective")
    {
        const CdgaPtr b = fixtures::sphere(4);
        const CdgaPtr c = fixtures::truncated_polynomial("x", 4, 3);
        AlgebraMorphism inc{b, c, LinearMap::zero(b->dim(), c->dim(), 0)};
        inc.map.columns[0] = c->unit();
        CHECK_THROWS_AS(square_model(inc), Error);
    }
}

#include "../support/oracle.hpp"

#include "ratmod/analysis.hpp"
#include "ratmod/conf.hpp"
#include "ratmod/error.hpp"

#include <doctest.h>

using namespace ratmod;

namespace {

PdAlgebra s4()
{
    const ExpandedPresentation e(parse_presentation(fixtures::sphere_toml(4)));
    return verify_pd(e.algebra(), 4, *e.fundamental_class());
}

CdgaPtr bundle_model(bool twisted)
{
    const PdAlgebra q = s4();
    const SparseVec e = twisted ? SparseVec::basis(q.algebra->space().index_of("x")) : SparseVec();
    return conf2_disk_bundle(q, e, 4).pretty_route.algebra();
}

SparseVec h_class(const CohomologyRing& r, const std::string& cocycle)
{
    return r.cohomology().class_of(SparseVec::basis(r.algebra()->space().index_of(cocycle)));
}

std::vector<Generator> s4xr4_generators() { return {{"x", 4}, {"x'", 4}, {"u", 7}}; }

std::vector<Polynomial> relations(const std::vector<std::string>& texts, const std::vector<Generator>& gens)
{
    std::vector<Polynomial> out;
    for (const auto& t : texts)
        out.push_back(parse_polynomial(t, gens));
    return out;
}

}  // namespace

TEST_CASE("cohomology rings")
{
    SUBCASE("zero differential")
    {
        const CdgaPtr a = fixtures::truncated_polynomial("x", 4, 2);
        const CohomologyRing r(a);
        REQUIRE(r.dim() == a->dim());
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j)
                CHECK(r.product(i, j) == a->product(i, j));
        CHECK(r.unit() == SparseVec::basis(0));
    }
    SUBCASE("quaternionic Hopf products vanish")
    {
        const CohomologyRing r(bundle_model(true));
        for (std::size_t i = 0; i < r.dim(); ++i)
            for (std::size_t j = 0; j < r.dim(); ++j)
                if (r.space().degree(i) > 0 && r.space().degree(j) > 0)
                    CHECK(r.product(i, j).is_zero());
    }
    SUBCASE("table matches class_of of cocycle products")
    {
        const CohomologyRing r(bundle_model(false));
        const Cdga& a = *r.algebra();
        for (std::size_t i = 0; i < r.dim(); ++i)
            for (std::size_t j = 0; j < r.dim(); ++j)
                CHECK(r.product(i, j) == r.cohomology().class_of(oracle::mul(a, r.cohomology().representative(i),
                                                                             r.cohomology().representative(j))));
    }
}

TEST_CASE("poincare series")
{
    CHECK(poincare_series(*bundle_model(true), 11) == std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1});
    CHECK(poincare_series(*bundle_model(false), 11) == std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1});
    CHECK(poincare_series(*ground_field(), 0) == std::vector<std::size_t>{1});
}

TEST_CASE("triple Massey products")
{
    SUBCASE("quaternionic Hopf")
    {
        const CohomologyRing r(bundle_model(true));
        const MasseyResult m =
            triple_massey(r, h_class(r, "x⊗1"), h_class(r, "1⊗x"), h_class(r, "1⊗x"));
        CHECK(m.defined);
        CHECK(m.degree == 11);
        CHECK(m.indeterminacy.empty());
        CHECK(m.nontrivial);
        const SparseVec top = h_class(r, "s(s^-8(x))");
        CHECK((m.representative == top || m.representative == top.scaled(-1)));
    }
    SUBCASE("trivial bundle: not defined")
    {
        const CohomologyRing r(bundle_model(false));
        const MasseyResult m = triple_massey(r, h_class(r, "x⊗1"), h_class(r, "1⊗x"), h_class(r, "1⊗x"));
        CHECK(!m.defined);
        CHECK(!m.reason.empty());
    }
    SUBCASE("zero differential contains zero")
    {
        const CdgaPtr a = tensor(fixtures::truncated_polynomial("x", 2, 2), fixtures::exterior("y", 3));
        const CohomologyRing r(a);
        for (std::size_t i = 1; i < r.dim(); ++i)
            for (std::size_t j = 1; j < r.dim(); ++j)
                for (std::size_t k = 1; k < r.dim(); ++k) {
                    const MasseyResult m =
                        triple_massey(r, SparseVec::basis(i), SparseVec::basis(j), SparseVec::basis(k));
                    if (m.defined)
                        CHECK(!m.nontrivial);
                }
        CHECK(nontrivial_massey_search(r).empty());
    }
    SUBCASE("search finds degree 11")
    {
        const CohomologyRing r(bundle_model(true));
        const auto found = nontrivial_massey_search(r);
        REQUIRE(found.size() == 1);
        CHECK(found[0].degree == 11);
        CHECK(nontrivial_massey_search(CohomologyRing(bundle_model(false))).empty());
    }
    SUBCASE("bad primitives are rejected")
    {
        const CohomologyRing r(bundle_model(true));
        const SparseVec a = h_class(r, "x⊗1");
        const SparseVec c = h_class(r, "1⊗x");
        const SparseVec primitive = SparseVec::basis(r.algebra()->space().index_of("s(s^-8(1))"));
        CHECK_THROWS_AS(triple_massey(r, a, c, c, primitive.scaled(2), SparseVec()), Error);
    }
}

TEST_CASE("presentation checks")
{
    SUBCASE("sphere")
    {
        const CdgaPtr a = fixtures::sphere(4);
        const CohomologyRing r(a);
        const std::vector<Generator> gens{{"x", 4}};
        const PresentationCheck c =
            verify_presentation(r, gens, {h_class(r, "x")}, relations({"x^2"}, gens), 9);
        CHECK(c.pass);
        CHECK(c.violations.empty());
    }
    SUBCASE("trivial bundle ring")
    {
        const CohomologyRing r(bundle_model(false));
        const auto gens = s4xr4_generators();
        const std::vector<SparseVec> images{h_class(r, "x⊗1"), h_class(r, "1⊗x"), h_class(r, "s(s^-8(1))")};
        const PresentationCheck good =
            verify_presentation(r, gens, images, relations({"x^2", "x'^2", "u*x - u*x'"}, gens), 17);
        CHECK(good.pass);
        const PresentationCheck bad =
            verify_presentation(r, gens, images, relations({"x^2", "x'^2", "u*x + 2*u*x'"}, gens), 17);
        CHECK(!bad.pass);
        bool witness = false;
        for (const auto& v : bad.violations)
            witness = witness || v.find("degree 11") != std::string::npos;
        CHECK(witness);
        const PresentationCheck missing = verify_presentation(r, gens, images, relations({"x^2", "x'^2"}, gens), 17);
        CHECK(!missing.pass);
    }
    SUBCASE("generators that do not generate")
    {
        const CohomologyRing r(bundle_model(false));
        const std::vector<Generator> gens{{"x", 4}, {"x'", 4}};
        const PresentationCheck c = verify_presentation(r, gens, {h_class(r, "x⊗1"), h_class(r, "1⊗x")},
                                                        relations({"x^2", "x'^2"}, gens), 11);
        CHECK(!c.pass);
    }
    SUBCASE("presented dimensions")
    {
        const auto gens = s4xr4_generators();
        const auto dims = presented_dimensions(gens, relations({"x^2", "x'^2", "u*x - u*x'"}, gens), 20);
        CHECK(dims == std::map<int, std::size_t>{{0, 1}, {4, 2}, {7, 1}, {8, 1}, {11, 1}});
    }
}

#include "../support/oracle.hpp"

#include "ratmod/cohomology.hpp"
#include "ratmod/error.hpp"
#include "ratmod/polynomial.hpp"
#include "ratmod/presentation.hpp"

#include <doctest.h>

using namespace ratmod;

namespace {

std::string with_relations(const std::string& rels, const std::string& extra = "")
{
    return "name = \"t\"\nbound = 9\nrelations = [" + rels +
           "]\n[[generators]]\nname = \"a\"\ndegree = 2\n[[generators]]\nname = \"b\"\ndegree = 3\n"
           "[differentials]\nb = \"a^2\"\n" + extra;
}

}  // namespace

TEST_CASE("polynomials")
{
    const std::vector<Generator> gens{{"a", 2}, {"y", 3}, {"z", 3}};
    const Polynomial y = parse_polynomial("y", gens);
    const Polynomial z = parse_polynomial("z", gens);
    CHECK(multiply(y, z, gens) == parse_polynomial("y*z", gens));
    CHECK(multiply(z, y, gens) == parse_polynomial("-y*z", gens));
    CHECK(multiply(y, y, gens).is_zero());
    CHECK(parse_polynomial("(a + 1/2*y*z)^2", gens) == parse_polynomial("a^2 + a*y*z", gens));
    CHECK(*polynomial_degree(parse_polynomial("a^3 + y*z", gens), gens) == 6);
    CHECK_THROWS_WITH_AS(polynomial_degree(parse_polynomial("a + y", gens), gens), doctest::Contains("inhomogeneous"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_polynomial("a + * y", gens), doctest::Contains("position 4"), Error);
    CHECK_THROWS_AS(parse_polynomial("w", gens), Error);
    CHECK(monomials_of_degree(6, gens).size() == 2);
    const auto m6 = monomials_of_degree(6, gens);
    CHECK(monomial_name(m6.front(), gens) == "a^3");
}

TEST_CASE("loading presentations")
{
    SUBCASE("S4")
    {
        const ExpandedPresentation e(parse_presentation(fixtures::sphere_toml(4)));
        CHECK(e.algebra()->space().dims() == std::map<int, std::size_t>{{0, 1}, {4, 1}});
        CHECK(e.formal_dimension() == 4);
    }
    SUBCASE("S3xS3")
    {
        const ExpandedPresentation e(parse_presentation(fixtures::s3xs3_toml));
        CHECK(e.algebra()->dim() == 4);
        CHECK(e.fundamental_class() == SparseVec::basis(e.algebra()->space().index_of("y*y'")));
    }
    SUBCASE("a^3 alone leaves a^2 b")
    {
        const ExpandedPresentation e(parse_presentation(with_relations("\"a^3\"")));
        CHECK(e.algebra()->dim() == 6);
        CHECK(verify_cdga(*e.algebra()).empty());
        const ExpandedPresentation f(parse_presentation(with_relations("\"a^3\", \"a^2*b\"")));
        CHECK(f.algebra()->dim() == 5);
        CHECK(oracle::betti_list(*f.algebra(), 9) == Cohomology(*f.algebra()).betti(9));
    }
    SUBCASE("the point")
    {
        const ExpandedPresentation e(parse_presentation("name = \"pt\"\nbound = 0\n"));
        CHECK(e.algebra()->dim() == 1);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_WITH_AS(parse_presentation("name = \"x\"\nbound = [\n"), doctest::Contains("<string>:"), Error);
        CHECK_THROWS_WITH_AS(ExpandedPresentation(parse_presentation(with_relations("\"a^3 + b\""))),
                             doctest::Contains("inhomogeneous"), Error);
        CHECK_THROWS_WITH_AS(ExpandedPresentation(parse_presentation(with_relations(""))),
                             doctest::Contains("not finite-dimensional"), Error);
        try {
            ExpandedPresentation(parse_presentation(with_relations("\"a*b\", \"a^4\"")));
            FAIL("d(ab) = a^3 is not in the ideal");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::axiom);
        }
        CHECK_THROWS_AS(ExpandedPresentation(parse_presentation(with_relations("\"a^3\"", "[orientation]\ndegree = 2\n"
                                                                                           "class = \"a\"\n"))),
                        Error);
    }
    SUBCASE("round trip")
    {
        for (const std::string& t : {fixtures::sphere_toml(4), fixtures::s3xs3_toml, fixtures::s4xs4_toml,
                                     with_relations("\"a^3\", \"a^2*b\"")}) {
            const Presentation p = parse_presentation(t);
            const Presentation q = parse_presentation(to_toml(p));
            CHECK(p == q);
            const ExpandedPresentation ep(p), eq(q);
            CHECK(*ep.algebra() == *eq.algebra());
            CHECK(to_toml(q) == to_toml(p));
        }
    }
}

TEST_CASE("element references")
{
    const GradedSpace s({{"x⊗1", 4}, {"1⊗x", 4}, {"s(s^-8(1))", 7}});
    const SparseVec v = parse_element("2*[x⊗1] - 1/3*[1⊗x]", s);
    CHECK(v.at(0) == 2);
    CHECK(v.at(1) == Scalar(-1, 3));
    CHECK(parse_element(s.format(v), s) == v);
    CHECK(parse_element(" 0 ", s).is_zero());
    CHECK(parse_element("-[s(s^-8(1))]", s) == SparseVec::basis(2, -1));
    CHECK_THROWS_AS(parse_element("[y]", s), Error);
    CHECK_THROWS_AS(parse_element("2 [x⊗1]", s), Error);
    CHECK_THROWS_AS(parse_element("", s), Error);
}

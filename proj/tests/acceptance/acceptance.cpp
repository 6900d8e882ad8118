// One line per acceptance criterion; exit status is the number of failures.

#include "../support/oracle.hpp"

#include "ratmod/analysis.hpp"
#include "ratmod/conf.hpp"
#include "ratmod/error.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace ratmod;

namespace {

using Betti = std::vector<std::size_t>;

struct Outcome {
    bool pass = false;
    std::string detail;
};

PdAlgebra load(const std::string& toml)
{
    const ExpandedPresentation e(parse_presentation(toml));
    return verify_pd(e.algebra(), *e.formal_dimension(), *e.fundamental_class());
}

std::string join(const Betti& b)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    return os.str();
}

Betti trimmed(Betti b)
{
    while (b.size() > 1 && b.back() == 0)
        b.pop_back();
    return b;
}

Betti sphere_betti(int n)
{
    Betti b(n + 1, 0);
    b[0] = 1;
    b[n] = 1;
    return b;
}

SparseVec ring_class(const CohomologyRing& r, const std::string& name)
{
    return r.cohomology().class_of(SparseVec::basis(r.algebra()->space().index_of(name)));
}

Outcome hopf_bundle()
{
    const PdAlgebra s4 = load(fixtures::sphere_toml(4));
    const DiskBundleModel m = conf2_disk_bundle(s4, SparseVec::basis(s4.algebra->space().index_of("x")), 4);
    const CdgaPtr a = m.pretty_route.algebra();
    const Betti expected{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1};
    const Betti got = trimmed(Cohomology(*a).betti(11));
    const CohomologyRing ring(a);
    const auto found = nontrivial_massey_search(ring);
    bool massey = false;
    for (const auto& f : found)
        massey = massey || (f.defined && f.degree == 11 && f.indeterminacy.empty() && !f.representative.is_zero());
    const MasseyResult stated =
        triple_massey(ring, ring_class(ring, "x⊗1"), ring_class(ring, "1⊗x"), ring_class(ring, "1⊗x"));
    massey = massey && stated.defined && stated.degree == 11 && stated.indeterminacy.empty() && stated.nontrivial;
    return {got == expected && massey, "betti " + join(got) + "; Massey degree 11 nontrivial with zero indeterminacy: " +
                                           (massey ? "yes" : "no")};
}

Outcome trivial_bundle()
{
    const PdAlgebra s4 = load(fixtures::sphere_toml(4));
    const DiskBundleModel m = conf2_disk_bundle(s4, SparseVec(), 4);
    const CdgaPtr a = m.pretty_route.algebra();
    const Betti expected{1, 0, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1};
    const Betti brute = trimmed(oracle::betti_list(*a, 11));
    const Betti got = trimmed(Cohomology(*a).betti(11));
    const CohomologyRing ring(a);
    const std::vector<Generator> gens{{"x", 4}, {"x'", 4}, {"u", 7}};
    std::vector<Polynomial> rels;
    for (const char* r : {"x^2", "x'^2", "u*x - u*x'"})
        rels.push_back(parse_polynomial(r, gens));
    const PresentationCheck check = verify_presentation(
        ring, gens, {ring_class(ring, "x⊗1"), ring_class(ring, "1⊗x"), ring_class(ring, "s(s^-8(1))")}, rels, 17);
    return {got == expected && brute == expected && check.pass,
            "betti " + join(got) + " (brute force " + join(brute) + "); presentation " + (check.pass ? "passes" : "fails")};
}

Outcome punctured_spheres()
{
    bool ok = true;
    std::string detail;
    for (int n : {4, 6, 8}) {
        const Conf2Model m = conf2_punctured(load(fixtures::sphere_toml(n)));
        const Betti got = trimmed(oracle::betti_list(*m.algebra(), 2 * n + 1));
        ok = ok && got == sphere_betti(n - 1) && trimmed(Cohomology(*m.algebra()).betti(2 * n + 1)) == got;
        detail += (detail.empty() ? "" : "; ") + ("S" + std::to_string(n) + ": " + join(got));
    }
    return {ok, detail};
}

// The ground field as a module concentrated in one degree over a connected algebra.
ModulePtr point_module(const CdgaPtr& a, int degree)
{
    std::vector<SparseVec> action(a->dim());
    action[0] = SparseVec::basis(0);
    return std::make_shared<const DgModule>(a, GradedSpace({{"w", degree}}), LinearMap::zero(1, 1, 1), action);
}

Outcome disk_points()
{
    bool ok = true;
    std::string detail;
    for (int n : {3, 4, 5, 6}) {
        const CdgaPtr disk = ground_field();
        const ModuleMorphism attach = zero_map(point_module(disk, n), module_of(disk));
        const ComplementModel interior = complement_model(attach, n, 0, -1);
        const ComplementModel boundary = complement_model(attach, n, 0, 2);
        const Betti bi = trimmed(oracle::betti_list(*interior.cone.algebra, n));
        const Betti bb = trimmed(oracle::betti_list(*boundary.cone.algebra, n));
        ok = ok && bi == sphere_betti(n - 1) && boundary.cone.algebra->dim() == 1 && bb == Betti{1};
        detail += (detail.empty() ? "" : "; ") +
                  ("n=" + std::to_string(n) + " interior " + join(bi) + ", boundary " + join(bb));
    }
    return {ok, detail};
}

Outcome pipelines()
{
    const PdAlgebra s4 = load(fixtures::sphere_toml(4));
    const PdAlgebra s33 = load(fixtures::s3xs3_toml);
    const PdAlgebra s44 = load(fixtures::s4xs4_toml);
    struct Case {
        const PdAlgebra* base;
        std::string euler;
        int rank;
        bool truncate;
    };
    const std::vector<Case> cases{
        {&s4, "0", 4, false},        {&s4, "[x]", 4, false},          {&s4, "2*[x]", 4, false},
        {&s33, "0", 6, false},       {&s33, "[y*y']", 6, false},      {&s33, "-2*[y*y']", 6, false},
        {&s44, "0", 4, true},        {&s44, "[x]", 4, true},          {&s44, "[x] + [x']", 4, true},
        {&s44, "[x*x']", 8, true},
    };
    int agree = 0;
    std::string failures;
    for (const auto& c : cases) {
        const SparseVec e = parse_element(c.euler, c.base->algebra->space());
        const DiskBundleModel m = conf2_disk_bundle(*c.base, e, c.rank, c.truncate);
        // Compare the full structure-constant tables directly.
        const Cdga& p = *m.pretty_route.algebra();
        const Cdga& d = *m.direct_route.algebra();
        const bool same = p.space() == d.space() && p.product_table() == d.product_table() &&
                          p.differential() == d.differential() && p.unit() == d.unit();
        if (same && m.pipelines_agree)
            ++agree;
        else
            failures += " " + c.euler + "/rank " + std::to_string(c.rank);
    }
    return {agree == static_cast<int>(cases.size()),
            std::to_string(agree) + "/" + std::to_string(cases.size()) +
                " cases identical over S4, S3xS3, S4xS4 (truncated)" + (failures.empty() ? "" : "; differ:" + failures)};
}

Outcome invariant_suite()
{
    const int status = std::system(RATMOD_PROPERTY_TESTS " > /dev/null 2>&1");
    const bool ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    return {ok, std::string("property suite, 200 random inputs per invariant: ") + (ok ? "all hold" : "failures")};
}

Outcome kernel_square()
{
    bool ok = true;
    std::string detail;
    auto record = [&](const std::string& label, const SquareComparison& sc) {
        std::string what;
        if (sc.commutes)
            what = "commutes";
        else if (sc.commutes_up_to_sign && !sc.sign_by_degree.empty())
            what = "sign " + sc.detail;
        else
            ok = false, what = "fails: " + sc.detail;
        detail += (detail.empty() ? "" : "; ") + label + " " + what;
    };
    const PdAlgebra s4 = load(fixtures::sphere_toml(4));
    record("Hopf", conf2_disk_bundle(s4, SparseVec::basis(s4.algebra->space().index_of("x")), 4).square);
    record("S4xR4", conf2_disk_bundle(s4, SparseVec(), 4).square);
    for (int n : {4, 6, 8}) {
        const PrettyModel pm = augmentation_pretty_model(load(fixtures::sphere_toml(n)));
        record("punctured S" + std::to_string(n), check_kernel_square(pm, truncated_diagonal_shriek(pm)));
    }
    const PrettyModel pm = augmentation_pretty_model(load(fixtures::s3xs3_toml));
    record("punctured S3xS3", check_kernel_square(pm, truncated_diagonal_shriek(pm)));
    return {ok, detail};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        std::string name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "quaternionic Hopf bundle", 1.0, hopf_bundle},
        {2, "trivial bundle S4 x R4", 1.0, trivial_bundle},
        {3, "punctured spheres", 1.0, punctured_spheres},
        {4, "interior and boundary points of a disk", 1.0, disk_points},
        {5, "pretty and direct pipelines agree", 5.0, pipelines},
        {6, "invariant suite", 60.0, invariant_suite},
        {7, "kernel square", 1.0, kernel_square},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.pass && seconds < c.limit;
        failures += pass ? 0 : 1;
        std::printf("%s %d %s: %s [%.3f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), seconds, c.limit);
    }
    return failures;
}

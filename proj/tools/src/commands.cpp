#include "ratmod_cli/commands.hpp"

#include "ratmod/cone.hpp"
#include "ratmod/constructions.hpp"

#include <toml.hpp>

#include <functional>
#include <sstream>

namespace ratmod::cli {

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::usage:
        return 1;
    case ErrorKind::axiom:
    case ErrorKind::internal:
        return 2;
    case ErrorKind::hypothesis:
        return 3;
    }
    return 2;
}

std::string status_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::usage:
        return "usage";
    case ErrorKind::axiom:
        return "axiom";
    case ErrorKind::hypothesis:
        return "hypothesis";
    case ErrorKind::internal:
        return "internal";
    }
    return "internal";
}

LoadedAlgebra load_algebra(const std::string& path)
{
    LoadedAlgebra out;
    out.expanded = std::make_shared<const ExpandedPresentation>(load_presentation(path));
    if (const auto w = out.expanded->fundamental_class())
        out.pd = verify_pd(out.expanded->algebra(), *out.expanded->formal_dimension(), *w);
    return out;
}

LoadedAlgebra load_pd_algebra(const std::string& path)
{
    LoadedAlgebra out = load_algebra(path);
    if (!out.pd)
        throw Error(ErrorKind::usage, path + ": an [orientation] table is required");
    return out;
}

namespace {

toml::table parse_toml_file(const std::string& path)
{
    try {
        return toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << path << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
        throw Error(ErrorKind::usage, os.str());
    }
}

std::string string_field(const toml::node_view<const toml::node>& v, const std::string& path, const std::string& key)
{
    const auto s = v.value<std::string>();
    if (!s)
        throw Error(ErrorKind::usage, path + ": '" + key + "' must be a string");
    return *s;
}

}  // namespace

GeneratorImages load_generator_images(const std::string& path)
{
    const toml::table tbl = parse_toml_file(path);
    GeneratorImages out;
    if (const toml::array* gens = tbl["generators"].as_array())
        for (const auto& g : *gens) {
            const toml::table* gt = g.as_table();
            if (!gt)
                throw Error(ErrorKind::usage, path + ": each generator must be a table");
            toml::node_view<const toml::node> view{gt};
            const auto degree = view["degree"].value<int64_t>();
            if (!degree)
                throw Error(ErrorKind::usage, path + ": 'generators.degree' must be an integer");
            out.generators.push_back({string_field(view["name"], path, "generators.name"), static_cast<int>(*degree)});
            out.images.push_back(string_field(view["image"], path, "generators.image"));
        }
    if (const toml::array* rels = tbl["relations"].as_array())
        for (const auto& r : *rels) {
            const auto s = r.value<std::string>();
            if (!s)
                throw Error(ErrorKind::usage, path + ": relations must be strings");
            out.relations.push_back(*s);
        }
    return out;
}

namespace {

SparseVec evaluate_substitution(const Monomial& m, const std::vector<Polynomial>& images,
                                const ExpandedPresentation& target)
{
    const auto& gens = target.generators();
    Polynomial acc = Polynomial::constant(gens.size(), 1);
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] > 0)
            acc = multiply(acc, power(images[g], m[g], gens), gens);
    return target.evaluate(acc);
}

}  // namespace

AlgebraMorphism load_algebra_map(const std::string& path, const ExpandedPresentation& source,
                                 const ExpandedPresentation& target)
{
    const toml::table tbl = parse_toml_file(path);
    const toml::table* images_tbl = tbl["images"].as_table();
    if (!images_tbl)
        throw Error(ErrorKind::usage, path + ": missing [images] table");
    const auto& sgens = source.generators();
    std::vector<Polynomial> images;
    for (const auto& g : sgens) {
        const toml::node* node = images_tbl->get(g.name);
        if (!node || !node->value<std::string>())
            throw Error(ErrorKind::usage, path + ": no image for generator '" + g.name + "'");
        Polynomial img = parse_polynomial(*node->value<std::string>(), target.generators());
        const auto deg = polynomial_degree(img, target.generators());
        if (deg && *deg != g.degree)
            throw Error(ErrorKind::usage, path + ": image of '" + g.name + "' has degree " + std::to_string(*deg));
        images.push_back(std::move(img));
    }
    for (const auto& [key, value] : *images_tbl) {
        bool known = false;
        for (const auto& g : sgens)
            known = known || g.name == key.str();
        if (!known)
            throw Error(ErrorKind::usage, path + ": '" + std::string(key.str()) + "' is not a source generator");
    }

    for (const auto& text : source.presentation().relations) {
        const Polynomial rel = parse_polynomial(text, sgens);
        SparseVec v;
        for (const auto& [m, c] : rel.terms())
            v.axpy(c, evaluate_substitution(m, images, target));
        if (!v.is_zero())
            throw Error(ErrorKind::axiom, "map does not kill the relation " + text + ": image " +
                                              target.algebra()->space().format(v));
    }

    const auto& basis = source.basis_monomials();
    AlgebraMorphism phi{source.algebra(), target.algebra(),
                        LinearMap::zero(basis.size(), target.algebra()->dim(), 0)};
    for (std::size_t i = 0; i < basis.size(); ++i)
        phi.map.columns[i] = evaluate_substitution(basis[i], images, target);
    const AxiomReport report = verify_morphism(phi);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "not a CDGA morphism:\n" + describe(report));
    return phi;
}

RingSummary summarize(const CohomologyRing& ring)
{
    RingSummary out;
    const GradedSpace& hs = ring.space();
    for (std::size_t i = 0; i < hs.dim(); ++i) {
        out.basis.push_back(hs.name(i));
        out.degrees.push_back(hs.degree(i));
    }
    for (std::size_t i = 0; i < hs.dim(); ++i)
        for (std::size_t j = i; j < hs.dim(); ++j) {
            if (hs.degree(i) == 0 || hs.degree(j) == 0)
                continue;
            const SparseVec& v = ring.product(i, j);
            if (!v.is_zero())
                out.products.push_back({hs.name(i), hs.name(j), hs.format(v)});
        }
    return out;
}

MasseySummary summarize(const MasseyResult& m, const CohomologyRing& ring)
{
    const GradedSpace& hs = ring.space();
    MasseySummary out;
    out.triple = {hs.format(m.a), hs.format(m.b), hs.format(m.c)};
    out.defined = m.defined;
    out.degree = m.degree;
    out.nontrivial = m.nontrivial;
    out.reason = m.reason;
    if (m.defined) {
        out.representative = hs.format(m.representative);
        for (const auto& v : m.indeterminacy)
            out.indeterminacy.push_back(hs.format(v));
    }
    return out;
}

namespace {

Report guarded(const std::string& command, std::map<std::string, std::string> arguments,
               const std::function<void(Report&)>& body)
{
    Report r;
    r.command = command;
    r.arguments = std::move(arguments);
    try {
        body(r);
    } catch (const Error& e) {
        r.status = status_name(e.kind());
        r.exit_code = exit_code(e.kind());
        r.violations.push_back(e.what());
    } catch (const std::exception& e) {
        r.status = status_name(ErrorKind::internal);
        r.exit_code = exit_code(ErrorKind::internal);
        r.violations.push_back(e.what());
    }
    return r;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("default"); }

void describe_model(Report& r, const Cdga& a, int max_degree)
{
    r.betti = Cohomology(a).betti(max_degree);
    while (r.betti.size() > 1 && r.betti.back() == 0)
        r.betti.pop_back();
    for (const auto& b : a.space().basis())
        r.basis.push_back(b.name + ":" + std::to_string(b.degree));
}

void describe_square(Report& r, const SquareComparison& sq)
{
    if (sq.commutes) {
        r.details.push_back("kernel square commutes exactly");
        return;
    }
    if (sq.commutes_up_to_sign) {
        std::ostringstream os;
        os << "kernel square commutes up to sign; sign by degree of the first kernel factor:";
        for (const auto& [deg, s] : sq.sign_by_degree)
            os << " " << deg << ":" << (s > 0 ? "+1" : "-1");
        r.details.push_back(os.str());
        return;
    }
    r.violations.push_back("kernel square does not commute: " + sq.detail);
    r.status = status_name(ErrorKind::internal);
    r.exit_code = exit_code(ErrorKind::internal);
}

void add_conf2(Report& r, const Conf2Model& model, int max_degree)
{
    describe_model(r, *model.algebra(), max_degree);
    r.hypotheses_assumed.insert(r.hypotheses_assumed.end(), model.hypotheses.begin(), model.hypotheses.end());
    r.details.insert(r.details.end(), model.details.begin(), model.details.end());
}

}  // namespace

Report run_verify(const InputOptions& o)
{
    return guarded("verify", {{"input", o.input}, {"max-degree", opt(o.max_degree)}}, [&](Report& r) {
        const LoadedAlgebra la = load_algebra(o.input);
        const Cdga& a = *la.algebra();
        describe_model(r, a, o.max_degree.value_or(a.space().max_degree()));
        r.details.push_back("CDGA axioms hold for '" + la.expanded->presentation().name + "' (dimension " +
                            std::to_string(a.dim()) + ")");
        if (la.pd)
            r.details.push_back("Poincare duality algebra of formal dimension " + std::to_string(la.pd->dim));
    });
}

Report run_cohomology(const InputOptions& o)
{
    return guarded("cohomology", {{"input", o.input}, {"max-degree", opt(o.max_degree)}}, [&](Report& r) {
        const LoadedAlgebra la = load_algebra(o.input);
        const Cdga& a = *la.algebra();
        describe_model(r, a, o.max_degree.value_or(a.space().max_degree()));
        r.ring = summarize(CohomologyRing(la.algebra()));
    });
}

Report run_series(const InputOptions& o)
{
    return guarded("series", {{"input", o.input}, {"max-degree", opt(o.max_degree)}}, [&](Report& r) {
        const LoadedAlgebra la = load_algebra(o.input);
        const Cdga& a = *la.algebra();
        r.betti = poincare_series(a, o.max_degree.value_or(a.space().max_degree()));
    });
}

namespace {

SparseVec class_of_reference(const CohomologyRing& ring, const std::string& text)
{
    const SparseVec v = parse_element(text, ring.algebra()->space());
    if (!ring.cohomology().is_cocycle(v))
        throw Error(ErrorKind::usage, "not a cocycle: " + text);
    return ring.cohomology().class_of(v);
}

void add_massey_search(Report& r, const CohomologyRing& ring)
{
    for (const auto& m : nontrivial_massey_search(ring))
        r.massey.push_back(summarize(m, ring));
    r.details.push_back("Massey search: first nontrivial triple per degree over positive-degree cohomology "
                        "basis classes; " +
                        std::to_string(r.massey.size()) + " found");
}

}  // namespace

Report run_massey(const MasseyOptions& o)
{
    std::map<std::string, std::string> args{{"input", o.input}, {"auto", o.search ? "true" : "false"}};
    for (std::size_t i = 0; i < o.triple.size(); ++i)
        args["triple." + std::to_string(i)] = o.triple[i];
    return guarded("massey", args, [&](Report& r) {
        const LoadedAlgebra la = load_algebra(o.input);
        const CohomologyRing ring(la.algebra());
        describe_model(r, *la.algebra(), o.max_degree.value_or(la.algebra()->space().max_degree()));
        if (o.search) {
            add_massey_search(r, ring);
            return;
        }
        if (o.triple.size() != 3)
            throw Error(ErrorKind::usage, "--triple needs exactly three elements");
        const MasseyResult m = triple_massey(ring, class_of_reference(ring, o.triple[0]),
                                             class_of_reference(ring, o.triple[1]),
                                             class_of_reference(ring, o.triple[2]));
        r.massey.push_back(summarize(m, ring));
    });
}

namespace {

PresentationSummary check_presentation(const std::string& path, const CohomologyRing& ring, int max_degree)
{
    const GeneratorImages gi = load_generator_images(path);
    std::vector<SparseVec> images;
    for (const auto& text : gi.images)
        images.push_back(class_of_reference(ring, text));
    std::vector<Polynomial> relations;
    for (const auto& text : gi.relations) {
        relations.push_back(parse_polynomial(text, gi.generators));
        polynomial_degree(relations.back(), gi.generators);
    }
    const PresentationCheck check = verify_presentation(ring, gi.generators, images, relations, max_degree);
    PresentationSummary out;
    out.pass = check.pass;
    out.violations = check.violations;
    out.presented_dims.assign(max_degree + 1, 0);
    out.ring_dims.assign(max_degree + 1, 0);
    for (const auto& [deg, d] : check.presented_dims)
        if (deg >= 0 && deg <= max_degree)
            out.presented_dims[deg] = d;
    for (const auto& [deg, d] : check.ring_dims)
        if (deg >= 0 && deg <= max_degree)
            out.ring_dims[deg] = d;
    return out;
}

}  // namespace

Report run_conf2_disk_bundle(const DiskBundleOptions& o)
{
    std::map<std::string, std::string> args{{"base", o.base},
                                            {"euler", o.euler},
                                            {"rank", std::to_string(o.rank)},
                                            {"massey", o.massey},
                                            {"truncate", o.truncate ? "true" : "false"},
                                            {"max-degree", opt(o.max_degree)}};
    if (o.check_presentation)
        args["check-presentation"] = *o.check_presentation;
    return guarded("conf2-disk-bundle", args, [&](Report& r) {
        if (o.massey != "none" && o.massey != "auto")
            throw Error(ErrorKind::usage, "--massey must be 'auto' or 'none'");
        const LoadedAlgebra base = load_pd_algebra(o.base);
        const SparseVec e = base.expanded->evaluate(o.euler);
        const DiskBundleModel m = conf2_disk_bundle(*base.pd, e, o.rank, o.truncate);
        const int n = m.bundle.p.dim;
        const int max_degree = o.max_degree.value_or(2 * n + 1);
        add_conf2(r, m.pretty_route, max_degree);
        if (m.pipelines_agree) {
            r.details.push_back("pretty-model route and direct diagonal route agree");
        }
        else {
            r.violations.push_back("pipelines disagree: " + m.disagreement);
            r.status = status_name(ErrorKind::internal);
            r.exit_code = exit_code(ErrorKind::internal);
        }
        describe_square(r, m.square);
        const CohomologyRing ring(m.pretty_route.algebra());
        r.ring = summarize(ring);
        if (o.massey == "auto")
            add_massey_search(r, ring);
        if (o.check_presentation) {
            r.presentation_check = check_presentation(*o.check_presentation, ring, max_degree);
            if (!r.presentation_check->pass)
                r.violations.push_back("presentation check failed");
        }
    });
}

Report run_conf2_punctured(const PuncturedOptions& o)
{
    return guarded("conf2-punctured",
                   {{"manifold", o.manifold},
                    {"truncate", o.truncate ? "true" : "false"},
                    {"max-degree", opt(o.max_degree)}},
                   [&](Report& r) {
                       const LoadedAlgebra la = load_pd_algebra(o.manifold);
                       const PrettyModel pm = augmentation_pretty_model(*la.pd);
                       const TruncatedDiagonal td = truncated_diagonal_shriek(pm);
                       const Conf2Model model = o.truncate ? conf2_pretty(pm, td, true) : conf2_punctured(*la.pd);
                       add_conf2(r, model, o.max_degree.value_or(2 * la.pd->dim + 1));
                       describe_square(r, check_kernel_square(pm, td));
                       r.ring = summarize(CohomologyRing(model.algebra()));
                   });
}

Report run_conf2_pretty(const PrettyOptions& o)
{
    return guarded("conf2-pretty",
                   {{"source", o.source},
                    {"target", o.target},
                    {"map", o.map},
                    {"truncate", o.truncate ? "true" : "false"},
                    {"max-degree", opt(o.max_degree)}},
                   [&](Report& r) {
                       const LoadedAlgebra p = load_pd_algebra(o.source);
                       const LoadedAlgebra q = load_algebra(o.target);
                       const AlgebraMorphism phi = load_algebra_map(o.map, *p.expanded, *q.expanded);
                       const PrettyModel pm = pretty_model(*p.pd, q.algebra(), phi);
                       const TruncatedDiagonal td = truncated_diagonal_shriek(pm);
                       const Conf2Model model = conf2_pretty(pm, td, o.truncate);
                       add_conf2(r, model, o.max_degree.value_or(2 * p.pd->dim + 1));
                       describe_square(r, check_kernel_square(pm, td));
                       r.ring = summarize(CohomologyRing(model.algebra()));
                   });
}

Report run_complement(const ComplementOptions& o)
{
    return guarded("complement",
                   {{"ambient", o.ambient},
                    {"fiber", o.fiber},
                    {"n", std::to_string(o.n)},
                    {"k", std::to_string(o.k)},
                    {"r", std::to_string(o.r)},
                    {"max-degree", opt(o.max_degree)}},
                   [&](Report& r) {
                       const LoadedAlgebra a = load_algebra(o.ambient);
                       const GeneratorImages fiber = load_generator_images(o.fiber);
                       std::vector<BasisElement> gens;
                       std::vector<SparseVec> images;
                       for (std::size_t i = 0; i < fiber.generators.size(); ++i) {
                           gens.push_back({fiber.generators[i].name, fiber.generators[i].degree});
                           images.push_back(a.expanded->evaluate(fiber.images[i]));
                           const auto deg = a.algebra()->space().degree_of(images.back());
                           if (deg && *deg != gens.back().degree)
                               throw Error(ErrorKind::usage, "image of fiber generator '" + gens.back().name +
                                                                 "' has degree " + std::to_string(*deg));
                       }
                       const ModulePtr q = free_module(a.algebra(), gens);
                       const ModuleMorphism f = free_module_map(q, module_of(a.algebra()), images);
                       const AxiomReport report = verify_morphism(f);
                       if (!report.empty())
                           throw Error(ErrorKind::axiom, "attaching map is not a module morphism:\n" + describe(report));
                       const ComplementModel model = complement_model(f, o.n, o.k, o.r);
                       describe_model(r, *model.cone.algebra, o.max_degree.value_or(o.n + 1));
                       r.hypotheses_assumed = model.hypotheses;
                       r.details.push_back((model.partial ? "model valid up to degree " : "model bound ") +
                                           std::to_string(model.bound));
                       r.ring = summarize(CohomologyRing(model.cone.algebra));
                   });
}

}  // namespace ratmod::cli

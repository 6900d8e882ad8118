#include "ratmod/presentation.hpp"

#include "ratmod/error.hpp"

#include <toml.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ratmod {

int Presentation::effective_bound() const
{
    if (bound)
        return *bound;
    if (orientation)
        return orientation->degree;
    throw Error(ErrorKind::usage, "presentation '" + name + "' needs a bound or an orientation");
}

namespace {

[[noreturn]] void bad(const std::string& source, const std::string& what)
{
    throw Error(ErrorKind::usage, source + ": " + what);
}

template <class T>
T required(const toml::node_view<const toml::node>& node, const std::string& source, const std::string& key)
{
    auto v = node.value<T>();
    if (!v)
        bad(source, "missing or mistyped key '" + key + "'");
    return *v;
}

}  // namespace

Presentation parse_presentation(const std::string& toml_text, const std::string& source_name)
{
    toml::table tbl;
    try {
        tbl = toml::parse(toml_text, source_name);
    }
    catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << source_name << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
           << e.description();
        throw Error(ErrorKind::usage, os.str());
    }

    Presentation p;
    p.name = tbl["name"].value_or(std::string("unnamed"));
    if (auto b = tbl["bound"].value<int64_t>())
        p.bound = static_cast<int>(*b);

    const toml::array* gens = tbl["generators"].as_array();
    if (!gens && tbl.contains("generators"))
        bad(source_name, "generators must be an array of tables");
    static const toml::array no_generators;
    for (const auto& g : gens ? *gens : no_generators) {
        const toml::table* gt = g.as_table();
        if (!gt)
            bad(source_name, "each generator must be a table");
        toml::node_view<const toml::node> view{gt};
        Generator gen{required<std::string>(view["name"], source_name, "generators.name"),
                      static_cast<int>(required<int64_t>(view["degree"], source_name, "generators.degree"))};
        for (const auto& other : p.generators)
            if (other.name == gen.name)
                bad(source_name, "duplicate generator '" + gen.name + "'");
        p.generators.push_back(std::move(gen));
    }

    if (const toml::table* diffs = tbl["differentials"].as_table())
        for (const auto& [key, value] : *diffs) {
            auto text = value.value<std::string>();
            if (!text)
                bad(source_name, "differential of '" + std::string(key.str()) + "' must be a string");
            p.differentials.emplace_back(std::string(key.str()), *text);
        }

    if (auto node = tbl["relations"]) {
        const toml::array* rels = node.as_array();
        if (!rels)
            bad(source_name, "'relations' must be an array of strings");
        for (const auto& r : *rels) {
            auto text = r.value<std::string>();
            if (!text)
                bad(source_name, "'relations' must be an array of strings");
            p.relations.push_back(*text);
        }
    }

    if (const toml::table* o = tbl["orientation"].as_table()) {
        toml::node_view<const toml::node> view{o};
        p.orientation = Presentation::Orientation{
            static_cast<int>(required<int64_t>(view["degree"], source_name, "orientation.degree")),
            required<std::string>(view["class"], source_name, "orientation.class")};
    }
    return p;
}

Presentation load_presentation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::usage, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_presentation(os.str(), path);
}

std::string to_toml(const Presentation& p)
{
    toml::table tbl;
    tbl.insert("name", p.name);
    if (p.bound)
        tbl.insert("bound", *p.bound);
    toml::array rels;
    for (const auto& r : p.relations)
        rels.push_back(r);
    tbl.insert("relations", std::move(rels));
    toml::array gens;
    for (const auto& g : p.generators)
        gens.push_back(toml::table{{"name", g.name}, {"degree", g.degree}});
    tbl.insert("generators", std::move(gens));
    if (!p.differentials.empty()) {
        toml::table diffs;
        for (const auto& [g, d] : p.differentials)
            diffs.insert(g, d);
        tbl.insert("differentials", std::move(diffs));
    }
    if (p.orientation)
        tbl.insert("orientation",
                   toml::table{{"degree", p.orientation->degree}, {"class", p.orientation->fundamental_class}});
    std::ostringstream os;
    os << tbl << "\n";
    return os.str();
}

ExpandedPresentation::ExpandedPresentation(Presentation p) : p_(std::move(p))
{
    const auto& gens = p_.generators;
    const int bound = p_.effective_bound();
    int max_gen = 0;
    for (const auto& g : gens) {
        if (g.degree <= 0)
            throw Error(ErrorKind::usage, "generator '" + g.name + "' must have positive degree");
        max_gen = std::max(max_gen, g.degree);
    }
    const int top = bound + max_gen;

    std::vector<Polynomial> relations;
    for (const auto& text : p_.relations) {
        Polynomial r = parse_polynomial(text, gens);
        polynomial_degree(r, gens);
        relations.push_back(std::move(r));
    }

    GradedSpace space;
    for (int deg = 0; deg <= top; ++deg) {
        DegreeData data;
        data.monomials = monomials_of_degree(deg, gens);
        const std::size_t nm = data.monomials.size();
        std::map<Monomial, std::size_t> position;
        for (std::size_t k = 0; k < nm; ++k)
            position.emplace(data.monomials[k], k);

        std::vector<std::vector<Scalar>> rows;
        for (const auto& r : relations) {
            const auto rd = polynomial_degree(r, gens);
            if (!rd || *rd > deg)
                continue;
            for (const auto& m : monomials_of_degree(deg - *rd, gens)) {
                const Polynomial rm = multiply(r, Polynomial::monomial(m), gens);
                if (rm.is_zero())
                    continue;
                std::vector<Scalar> row(nm);
                for (const auto& [mono, c] : rm.terms())
                    row[position.at(mono)] = c;
                rows.push_back(std::move(row));
            }
        }
        Matrix m(rows.size(), nm);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < nm; ++j)
                m(i, j) = rows[i][j];
        Reduction red = reduce(m);
        data.rref = std::move(red.rref);
        data.pivots = std::move(red.pivot_columns);
        std::vector<bool> is_pivot(nm, false);
        for (std::size_t c : data.pivots)
            is_pivot[c] = true;
        for (std::size_t k = 0; k < nm; ++k)
            if (!is_pivot[k])
                data.basis_pos.push_back(k);

        if (deg > bound && !data.basis_pos.empty())
            throw Error(ErrorKind::usage, "presentation '" + p_.name + "' is not finite-dimensional within bound " +
                                              std::to_string(bound) + ": degree " + std::to_string(deg) +
                                              " has dimension " + std::to_string(data.basis_pos.size()));
        if (deg <= bound)
            for (std::size_t k : data.basis_pos) {
                data.basis_index.push_back(space.add(monomial_name(data.monomials[k], gens), deg));
                basis_.push_back(data.monomials[k]);
            }
        degrees_.emplace(deg, std::move(data));
    }

    if (p_.orientation && space.dim() > 0 && space.max_degree() > p_.orientation->degree)
        throw Error(ErrorKind::usage, "presentation '" + p_.name + "' has elements above its orientation degree");

    const std::size_t n = space.dim();
    const std::vector<Polynomial> dg = generator_differentials();
    for (const auto& r : relations) {
        const SparseVec dr = evaluate(differentiate(r, dg, gens));
        if (!dr.is_zero())
            throw Error(ErrorKind::axiom, "differential does not preserve the relation ideal: d(" + format(r, gens) +
                                              ") = " + space.format(dr) + " modulo relations");
    }

    std::vector<SparseVec> products(n * n);
    LinearMap d = LinearMap::zero(n, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        d.columns[i] = evaluate(differentiate(Polynomial::monomial(basis_[i]), dg, gens));
        for (std::size_t j = 0; j < n; ++j) {
            auto [m, sign] = multiply(basis_[i], basis_[j], gens);
            if (sign != 0)
                products[i * n + j] = normal_form(m).scaled(sign);
        }
    }
    algebra_ = std::make_shared<const Cdga>(std::move(space), evaluate(Polynomial::constant(gens.size(), 1)),
                                            std::move(products), std::move(d));
    const AxiomReport report = verify_cdga(*algebra_);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "presentation '" + p_.name + "' is not a CDGA:\n" + describe(report));
    if (p_.orientation) {
        const auto w = fundamental_class();
        if (!w || w->is_zero() || algebra_->space().degree_of(*w) != p_.orientation->degree)
            throw Error(ErrorKind::usage, "orientation class of '" + p_.name + "' is zero or has the wrong degree");
    }
}

std::vector<Polynomial> ExpandedPresentation::generator_differentials() const
{
    const auto& gens = p_.generators;
    std::vector<Polynomial> dg(gens.size());
    for (const auto& [name, text] : p_.differentials) {
        std::size_t i = 0;
        while (i < gens.size() && gens[i].name != name)
            ++i;
        if (i == gens.size())
            throw Error(ErrorKind::usage, "differential given for unknown generator '" + name + "'");
        dg[i] = parse_polynomial(text, gens);
        const auto deg = polynomial_degree(dg[i], gens);
        if (deg && *deg != gens[i].degree + 1)
            throw Error(ErrorKind::usage, "d(" + name + ") must have degree " + std::to_string(gens[i].degree + 1));
    }
    return dg;
}

SparseVec ExpandedPresentation::normal_form(const Monomial& m) const
{
    const int deg = monomial_degree(m, p_.generators);
    auto it = degrees_.find(deg);
    if (it == degrees_.end() || deg > p_.effective_bound())
        return {};
    const DegreeData& data = it->second;
    const auto pos_it = std::find(data.monomials.begin(), data.monomials.end(), m);
    const std::size_t pos = static_cast<std::size_t>(pos_it - data.monomials.begin());
    SparseVec out;
    for (std::size_t k = 0; k < data.basis_pos.size(); ++k)
        if (data.basis_pos[k] == pos) {
            out.add(data.basis_index[k], 1);
            return out;
        }
    for (std::size_t r = 0; r < data.pivots.size(); ++r)
        if (data.pivots[r] == pos) {
            for (std::size_t k = 0; k < data.basis_pos.size(); ++k)
                out.add(data.basis_index[k], -data.rref(r, data.basis_pos[k]));
            return out;
        }
    throw Error(ErrorKind::internal, "monomial missing from its degree");
}

SparseVec ExpandedPresentation::evaluate(const Polynomial& poly) const
{
    SparseVec out;
    for (const auto& [m, c] : poly.terms())
        out.axpy(c, normal_form(m));
    return out;
}

SparseVec ExpandedPresentation::evaluate(const std::string& poly_text) const
{
    return evaluate(parse_polynomial(poly_text, p_.generators));
}

std::optional<int> ExpandedPresentation::formal_dimension() const
{
    if (!p_.orientation)
        return std::nullopt;
    return p_.orientation->degree;
}

std::optional<SparseVec> ExpandedPresentation::fundamental_class() const
{
    if (!p_.orientation)
        return std::nullopt;
    return evaluate(p_.orientation->fundamental_class);
}

}  // namespace ratmod

#include "ratmod/constructions.hpp"

#include "ratmod/error.hpp"

#include <cctype>
#include <map>

namespace ratmod {

namespace {

std::string tensor_factor_name(const std::string& name)
{
    if (name.find("⊗") != std::string::npos)
        return "(" + name + ")";
    return name;
}

std::string tensor_name(const std::string& a, const std::string& b)
{
    return tensor_factor_name(a) + "⊗" + tensor_factor_name(b);
}

// Index just past the parenthesised group opened at `open`, or npos.
std::size_t matching_paren(const std::string& s, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')') {
            --depth;
            if (depth == 0)
                return i;
        }
    }
    return std::string::npos;
}

std::map<int, std::vector<SparseVec>> by_degree(const std::vector<SparseVec>& vectors, const GradedSpace& space)
{
    std::map<int, std::vector<SparseVec>> out;
    for (const auto& v : vectors) {
        auto deg = space.degree_of(v);
        if (deg)
            out[*deg].push_back(v);
    }
    return out;
}

std::vector<Column> dense_columns(const std::vector<SparseVec>& vectors, const GradedSpace& space, int p)
{
    std::vector<Column> cols;
    cols.reserve(vectors.size());
    for (const auto& v : vectors)
        cols.push_back(space.restrict_to(v, p));
    return cols;
}

// Coordinates of v (homogeneous of degree p) in the given basis of a subspace,
// or nullopt when v is outside it.
std::optional<Column> coordinates_in(const SparseVec& v, const std::vector<SparseVec>& basis, const GradedSpace& space,
                                     int p)
{
    const std::size_t dim = space.dim_in_degree(p);
    if (basis.empty())
        return v.is_zero() ? std::optional<Column>(Column{}) : std::nullopt;
    const Matrix m = Matrix::from_columns(dense_columns(basis, space, p), dim);
    return solve(m, space.restrict_to(v, p));
}

std::string subspace_element_name(const GradedSpace& space, const SparseVec& v, int degree, std::size_t ordinal)
{
    if (v.size() == 1 && v.begin()->second == 1)
        return space.name(v.begin()->first);
    return "k" + std::to_string(degree) + "." + std::to_string(ordinal);
}

}  // namespace

CdgaPtr ground_field()
{
    static const CdgaPtr q = [] {
        GradedSpace s;
        s.add("1", 0);
        return std::make_shared<const Cdga>(s, SparseVec::basis(0), std::vector<SparseVec>{SparseVec::basis(0)},
                                            LinearMap::zero(1, 1, 1));
    }();
    return q;
}

bool is_ground_field(const Cdga& a)
{
    return a.dim() == 1 && a.space().degree(0) == 0 && a.unit() == SparseVec::basis(0);
}

ModulePtr module_of(const CdgaPtr& a)
{
    return std::make_shared<const DgModule>(a, a->space(), a->differential(), a->product_table());
}

CdgaPtr tensor(const CdgaPtr& x, const CdgaPtr& y)
{
    const GradedSpace& sx = x->space();
    const GradedSpace& sy = y->space();
    const std::size_t nx = sx.dim(), ny = sy.dim();
    GradedSpace space;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            space.add(tensor_name(sx.name(i), sy.name(j)), sx.degree(i) + sy.degree(j));

    auto pair_vec = [&](const SparseVec& a, const SparseVec& b) {
        SparseVec out;
        for (const auto& [p, c] : a)
            for (const auto& [q, e] : b)
                out.add(p * ny + q, c * e);
        return out;
    };

    const std::size_t n = nx * ny;
    std::vector<SparseVec> products(n * n);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            for (std::size_t k = 0; k < nx; ++k) {
                const SparseVec& ik = x->product(i, k);
                if (ik.is_zero())
                    continue;
                for (std::size_t l = 0; l < ny; ++l) {
                    const SparseVec& jl = y->product(j, l);
                    if (jl.is_zero())
                        continue;
                    const int sign = sign_of_parity(static_cast<long>(sy.degree(j)) * sx.degree(k));
                    products[(i * ny + j) * n + (k * ny + l)] = pair_vec(ik, jl).scaled(sign);
                }
            }

    LinearMap d = LinearMap::zero(n, n, 1);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            SparseVec v = pair_vec(x->differential().columns[i], SparseVec::basis(j));
            v.axpy(sign_of_parity(sx.degree(i)), pair_vec(SparseVec::basis(i), y->differential().columns[j]));
            d.columns[i * ny + j] = std::move(v);
        }
    return std::make_shared<const Cdga>(std::move(space), pair_vec(x->unit(), y->unit()), std::move(products),
                                        std::move(d));
}

ModulePtr tensor(const ModulePtr& m, const ModulePtr& n, const CdgaPtr& base_in)
{
    const Cdga& am = m->base();
    const Cdga& an = n->base();
    CdgaPtr base = base_in;
    const bool plain = !base && is_ground_field(am) && is_ground_field(an);
    if (!base && !plain)
        base = tensor(m->base_ptr(), n->base_ptr());
    if (plain)
        base = m->base_ptr();
    else if (base->dim() != am.dim() * an.dim())
        throw Error(ErrorKind::internal, "tensor base algebra has the wrong dimension");

    const GradedSpace& sm = m->space();
    const GradedSpace& sn = n->space();
    const std::size_t dm = sm.dim(), dn = sn.dim();
    GradedSpace space;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            space.add(tensor_name(sm.name(i), sn.name(j)), sm.degree(i) + sn.degree(j));

    auto pair_vec = [&](const SparseVec& a, const SparseVec& b) {
        SparseVec out;
        for (const auto& [p, c] : a)
            for (const auto& [q, e] : b)
                out.add(p * dn + q, c * e);
        return out;
    };

    const std::size_t dim = dm * dn;
    LinearMap d = LinearMap::zero(dim, dim, 1);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            SparseVec v = pair_vec(m->differential().columns[i], SparseVec::basis(j));
            v.axpy(sign_of_parity(sm.degree(i)), pair_vec(SparseVec::basis(i), n->differential().columns[j]));
            d.columns[i * dn + j] = std::move(v);
        }

    std::vector<SparseVec> action(base->dim() * dim);
    if (plain) {
        for (std::size_t k = 0; k < dim; ++k)
            action[k] = SparseVec::basis(k);
    }
    else {
        const std::size_t nb = an.dim();
        for (std::size_t a = 0; a < am.dim(); ++a)
            for (std::size_t b = 0; b < nb; ++b)
                for (std::size_t i = 0; i < dm; ++i) {
                    const SparseVec& ai = m->action(a, i);
                    if (ai.is_zero())
                        continue;
                    const int sign = sign_of_parity(static_cast<long>(an.space().degree(b)) * sm.degree(i));
                    for (std::size_t j = 0; j < dn; ++j) {
                        const SparseVec& bj = n->action(b, j);
                        if (bj.is_zero())
                            continue;
                        action[(a * nb + b) * dim + (i * dn + j)] = pair_vec(ai, bj).scaled(sign);
                    }
                }
    }
    return std::make_shared<const DgModule>(base, std::move(space), std::move(d), std::move(action));
}

ModuleMorphism tensor(const ModuleMorphism& f, const ModuleMorphism& g, const ModulePtr& source, const ModulePtr& target)
{
    const std::size_t gs = g.source->dim(), gt = g.target->dim();
    if (source->dim() != f.source->dim() * gs || target->dim() != f.target->dim() * gt)
        throw Error(ErrorKind::internal, "tensor of morphisms: wrong source/target");
    LinearMap map = tensor(f.map, g.map);
    return ModuleMorphism{source, target, std::move(map)};
}

AlgebraMorphism tensor(const AlgebraMorphism& f, const AlgebraMorphism& g, const CdgaPtr& source, const CdgaPtr& target)
{
    const std::size_t gs = g.source->dim(), gt = g.target->dim();
    if (source->dim() != f.source->dim() * gs || target->dim() != f.target->dim() * gt)
        throw Error(ErrorKind::internal, "tensor of morphisms: wrong source/target");
    LinearMap map = tensor(f.map, g.map);
    return AlgebraMorphism{source, target, std::move(map)};
}

SparseVec tensor_element(const SparseVec& u, const SparseVec& v, std::size_t dim_y)
{
    SparseVec out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v)
            out.add(i * dim_y + j, a * b);
    return out;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g)
{
    LinearMap out = LinearMap::zero(f.source_dim * g.source_dim, f.target_dim * g.target_dim, f.degree + g.degree);
    for (std::size_t i = 0; i < f.source_dim; ++i)
        for (std::size_t j = 0; j < g.source_dim; ++j)
            out.columns[i * g.source_dim + j] = tensor_element(f.columns[i], g.columns[j], g.target_dim);
    return out;
}

AlgebraMorphism multiplication(const CdgaPtr& a, const CdgaPtr& a_tensor_a)
{
    const std::size_t n = a->dim();
    if (a_tensor_a->dim() != n * n)
        throw Error(ErrorKind::internal, "multiplication: source is not A (x) A");
    LinearMap map = LinearMap::zero(n * n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            map.columns[i * n + j] = a->product(i, j);
    return AlgebraMorphism{a_tensor_a, a, std::move(map)};
}

std::string suspended_name(const std::string& name, int k)
{
    if (k == 0)
        return name;
    int j = 0;
    std::size_t open = std::string::npos;
    if (name.rfind("s(", 0) == 0) {
        j = 1;
        open = 1;
    }
    else if (name.rfind("s^", 0) == 0) {
        std::size_t pos = 2;
        if (pos < name.size() && name[pos] == '-')
            ++pos;
        const std::size_t digits = pos;
        while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos])))
            ++pos;
        if (pos > digits && pos < name.size() && name[pos] == '(') {
            j = std::stoi(name.substr(2, pos - 2));
            open = pos;
        }
    }
    std::string inner = name;
    if (open != std::string::npos && matching_paren(name, open) == name.size() - 1) {
        inner = name.substr(open + 1, name.size() - open - 2);
        k += j;
        if (k == 0)
            return inner;
    }
    if (k == 1)
        return "s(" + inner + ")";
    return "s^" + std::to_string(k) + "(" + inner + ")";
}

ModulePtr suspend(const ModulePtr& m, int k)
{
    if (k == 0)
        return m;
    const GradedSpace& sm = m->space();
    GradedSpace space;
    for (std::size_t i = 0; i < sm.dim(); ++i)
        space.add(suspended_name(sm.name(i), k), sm.degree(i) - k);
    LinearMap d = m->differential();
    for (auto& c : d.columns)
        c = c.scaled(sign_of_parity(k));
    const Cdga& a = m->base();
    std::vector<SparseVec> action(a.dim() * sm.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const int sign = sign_of_parity(static_cast<long>(k) * a.space().degree(i));
        for (std::size_t j = 0; j < sm.dim(); ++j)
            action[i * sm.dim() + j] = m->action(i, j).scaled(sign);
    }
    return std::make_shared<const DgModule>(m->base_ptr(), std::move(space), std::move(d), std::move(action));
}

ModuleMorphism suspend(const ModuleMorphism& f, int k)
{
    return ModuleMorphism{suspend(f.source, k), suspend(f.target, k), f.map};
}

ModulePtr dual(const ModulePtr& m)
{
    const GradedSpace& sm = m->space();
    const std::size_t n = sm.dim();
    GradedSpace space;
    for (std::size_t i = 0; i < n; ++i)
        space.add("#(" + sm.name(i) + ")", -sm.degree(i));

    LinearMap d = LinearMap::zero(n, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, c] : m->differential().columns[i]) {
            // coefficient of m_j in d(m_i) feeds d(#m_j) at #m_i
            const int sign = -sign_of_parity(-sm.degree(j));
            d.columns[j].add(i, c * sign);
        }

    const Cdga& a = m->base();
    std::vector<SparseVec> action(a.dim() * n);
    for (std::size_t ai = 0; ai < a.dim(); ++ai) {
        const long adeg = a.space().degree(ai);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [j, c] : m->action(ai, i)) {
                const int sign = sign_of_parity(adeg * sm.degree(j));
                action[ai * n + j].add(i, c * sign);
            }
    }
    return std::make_shared<const DgModule>(m->base_ptr(), std::move(space), std::move(d), std::move(action));
}

ModulePtr dual_shift(const ModulePtr& m, int k) { return suspend(dual(m), k); }

ModuleMorphism dual_shift(const ModuleMorphism& f, int k)
{
    const std::size_t ns = f.source->dim(), nt = f.target->dim();
    LinearMap map = LinearMap::zero(nt, ns, 0);
    for (std::size_t i = 0; i < ns; ++i)
        for (const auto& [j, c] : f.map.columns[i])
            map.columns[j].add(i, c);
    return ModuleMorphism{dual_shift(f.target, k), dual_shift(f.source, k), std::move(map)};
}

ModulePtr restrict_scalars(const ModulePtr& m, const AlgebraMorphism& phi)
{
    if (!same_algebra(phi.target, m->base_ptr()))
        throw Error(ErrorKind::internal, "restrict_scalars: module is not over the target of the morphism");
    const std::size_t n = m->dim();
    const Cdga& src = *phi.source;
    std::vector<SparseVec> action(src.dim() * n);
    for (std::size_t a = 0; a < src.dim(); ++a)
        for (std::size_t j = 0; j < n; ++j)
            action[a * n + j] = m->act(phi.map.columns[a], SparseVec::basis(j));
    return std::make_shared<const DgModule>(phi.source, m->space(), m->differential(), std::move(action));
}

ModuleMorphism restrict_scalars(const ModuleMorphism& f, const AlgebraMorphism& phi)
{
    return ModuleMorphism{restrict_scalars(f.source, phi), restrict_scalars(f.target, phi), f.map};
}

ModuleMorphism as_module_morphism(const AlgebraMorphism& phi)
{
    return ModuleMorphism{module_of(phi.source), restrict_scalars(module_of(phi.target), phi), phi.map};
}

ModulePtr free_module(const CdgaPtr& a, const std::vector<BasisElement>& generators)
{
    const std::size_t na = a->dim();
    std::optional<std::size_t> unit_index;
    if (a->unit().size() == 1 && a->unit().begin()->second == 1)
        unit_index = a->unit().begin()->first;
    GradedSpace space;
    for (const auto& g : generators)
        for (std::size_t b = 0; b < na; ++b) {
            std::string name = (unit_index && *unit_index == b) ? g.name : a->space().name(b) + "·" + g.name;
            space.add(std::move(name), a->space().degree(b) + g.degree);
        }
    const std::size_t n = space.dim();
    auto lift = [&](const SparseVec& v, std::size_t gen) {
        SparseVec out;
        for (const auto& [b, c] : v)
            out.add(gen * na + b, c);
        return out;
    };
    LinearMap d = LinearMap::zero(n, n, 1);
    std::vector<SparseVec> action(na * n);
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t b = 0; b < na; ++b) {
            d.columns[g * na + b] = lift(a->differential().columns[b], g);
            for (std::size_t x = 0; x < na; ++x)
                action[x * n + g * na + b] = lift(a->product(x, b), g);
        }
    return std::make_shared<const DgModule>(a, std::move(space), std::move(d), std::move(action));
}

ModuleMorphism free_module_map(const ModulePtr& free, const ModulePtr& target, const std::vector<SparseVec>& images)
{
    const std::size_t na = free->base().dim();
    if (images.size() * na != free->dim())
        throw Error(ErrorKind::usage, "free_module_map: one image per generator is required");
    LinearMap map = LinearMap::zero(free->dim(), target->dim(), 0);
    for (std::size_t g = 0; g < images.size(); ++g)
        for (std::size_t b = 0; b < na; ++b)
            map.columns[g * na + b] = target->act(SparseVec::basis(b), images[g]);
    return ModuleMorphism{free, target, std::move(map)};
}

ModuleMorphism identity(const ModulePtr& m) { return ModuleMorphism{m, m, LinearMap::identity(m->dim())}; }

AlgebraMorphism identity(const CdgaPtr& a) { return AlgebraMorphism{a, a, LinearMap::identity(a->dim())}; }

ModuleMorphism zero_map(const ModulePtr& source, const ModulePtr& target)
{
    return ModuleMorphism{source, target, LinearMap::zero(source->dim(), target->dim(), 0)};
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f)
{
    return ModuleMorphism{f.source, g.target, compose(g.map, f.map)};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f)
{
    return AlgebraMorphism{f.source, g.target, compose(g.map, f.map)};
}

std::vector<SparseVec> kernel_basis(const LinearMap& f, const GradedSpace& source, const GradedSpace& target)
{
    std::vector<SparseVec> out;
    for (int p : source.support()) {
        const Matrix m = f.block(source, target, p);
        if (m.rows() == 0) {
            for (std::size_t i : source.in_degree(p))
                out.push_back(SparseVec::basis(i));
            continue;
        }
        for (const auto& k : kernel_and_image(m).kernel_basis)
            out.push_back(source.from_degree(k, p));
    }
    return out;
}

std::vector<SparseVec> image_basis(const LinearMap& f, const GradedSpace& source, const GradedSpace& target)
{
    std::vector<SparseVec> out;
    for (int p : source.support()) {
        const Matrix m = f.block(source, target, p);
        if (m.rows() == 0)
            continue;
        for (const auto& c : kernel_and_image(m).image_basis)
            out.push_back(target.from_degree(c, p + f.degree));
    }
    return out;
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vectors, const GradedSpace& space)
{
    std::vector<SparseVec> out;
    for (const auto& [p, vs] : by_degree(vectors, space)) {
        const Matrix m = Matrix::from_columns(dense_columns(vs, space, p), space.dim_in_degree(p));
        for (std::size_t c : reduce(m).pivot_columns)
            out.push_back(vs[c]);
    }
    return out;
}

bool is_surjective(const LinearMap& f, const GradedSpace& source, const GradedSpace& target)
{
    return image_basis(f, source, target).size() == target.dim();
}

bool is_injective(const LinearMap& f, const GradedSpace& source, const GradedSpace& target)
{
    return kernel_basis(f, source, target).empty();
}

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, const GradedSpace& space)
{
    const std::size_t ra = span_basis(a, space).size();
    const std::size_t rb = span_basis(b, space).size();
    std::vector<SparseVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return ra == rb && span_basis(both, space).size() == ra;
}

bool in_span(const SparseVec& v, const std::vector<SparseVec>& vectors, const GradedSpace& space)
{
    auto deg = space.degree_of(v);
    if (!deg)
        return true;
    std::vector<SparseVec> same;
    for (const auto& w : vectors)
        if (space.degree_of(w) == deg)
            same.push_back(w);
    return coordinates_in(v, same, space, *deg).has_value();
}

Submodule submodule(const ModulePtr& m, const std::vector<SparseVec>& vectors)
{
    const GradedSpace& sm = m->space();
    const std::vector<SparseVec> basis = span_basis(vectors, sm);
    const auto grouped = by_degree(basis, sm);

    GradedSpace space;
    std::map<int, std::vector<std::size_t>> new_index;
    std::vector<SparseVec> ordered;
    for (const auto& [p, vs] : grouped)
        for (std::size_t k = 0; k < vs.size(); ++k) {
            new_index[p].push_back(space.add(subspace_element_name(sm, vs[k], p, k), p));
            ordered.push_back(vs[k]);
        }

    auto express = [&](const SparseVec& v) {
        auto deg = sm.degree_of(v);
        SparseVec out;
        if (!deg)
            return out;
        auto it = grouped.find(*deg);
        auto coords = it == grouped.end() ? coordinates_in(v, {}, sm, *deg) : coordinates_in(v, it->second, sm, *deg);
        if (!coords)
            throw Error(ErrorKind::internal, "submodule: span is not closed under d and the action");
        for (std::size_t k = 0; k < coords->size(); ++k)
            out.add(new_index[*deg][k], (*coords)[k]);
        return out;
    };

    const std::size_t n = ordered.size();
    LinearMap d = LinearMap::zero(n, n, 1);
    const Cdga& a = m->base();
    std::vector<SparseVec> action(a.dim() * n);
    for (std::size_t i = 0; i < n; ++i) {
        d.columns[i] = express(m->d(ordered[i]));
        for (std::size_t x = 0; x < a.dim(); ++x)
            action[x * n + i] = express(m->act(SparseVec::basis(x), ordered[i]));
    }
    auto sub = std::make_shared<const DgModule>(m->base_ptr(), std::move(space), std::move(d), std::move(action));
    LinearMap incl{n, m->dim(), 0, ordered};
    return Submodule{sub, ModuleMorphism{sub, m, std::move(incl)}};
}

QuotientSpace quotient_space(const GradedSpace& space, const std::vector<SparseVec>& subspace)
{
    const auto grouped = by_degree(span_basis(subspace, space), space);
    QuotientSpace out;
    std::vector<std::pair<std::size_t, int>> kept;  // (old index, degree)
    std::map<int, std::vector<std::size_t>> new_in_degree;
    for (int p : space.support()) {
        auto it = grouped.find(p);
        const std::vector<SparseVec> empty;
        const auto& sub = it == grouped.end() ? empty : it->second;
        const std::size_t dim = space.dim_in_degree(p);
        const auto reps = complement_indices(dense_columns(sub, space, p), dim);
        for (std::size_t r : reps) {
            const std::size_t old = space.in_degree(p)[r];
            new_in_degree[p].push_back(out.space.add(space.name(old), p));
            out.section.push_back(SparseVec::basis(old));
        }
    }
    out.projection = LinearMap::zero(space.dim(), out.space.dim(), 0);
    for (int p : space.support()) {
        auto it = grouped.find(p);
        const std::vector<SparseVec> empty;
        const auto& sub = it == grouped.end() ? empty : it->second;
        const auto& reps = new_in_degree[p];
        const std::size_t dim = space.dim_in_degree(p);
        std::vector<Column> cols;
        for (std::size_t r : reps)
            cols.push_back(space.restrict_to(out.section[r], p));
        for (const auto& c : dense_columns(sub, space, p))
            cols.push_back(c);
        const Matrix inv = inverse(Matrix::from_columns(cols, dim));
        const auto& old_idx = space.in_degree(p);
        for (std::size_t j = 0; j < old_idx.size(); ++j) {
            SparseVec img;
            for (std::size_t r = 0; r < reps.size(); ++r)
                img.add(reps[r], inv(r, j));
            out.projection.columns[old_idx[j]] = std::move(img);
        }
    }
    return out;
}

ModuleQuotient quotient_module(const ModulePtr& m, const std::vector<SparseVec>& submodule_vectors)
{
    const GradedSpace& sm = m->space();
    const Cdga& a = m->base();
    for (const auto& v : submodule_vectors) {
        if (!in_span(m->d(v), submodule_vectors, sm))
            throw Error(ErrorKind::axiom, "quotient_module: subspace is not closed under d");
        for (std::size_t x = 0; x < a.dim(); ++x)
            if (!in_span(m->act(SparseVec::basis(x), v), submodule_vectors, sm))
                throw Error(ErrorKind::axiom, "quotient_module: subspace is not closed under the action");
    }
    QuotientSpace q = quotient_space(sm, submodule_vectors);
    const std::size_t n = q.space.dim();
    LinearMap d = LinearMap::zero(n, n, 1);
    std::vector<SparseVec> action(a.dim() * n);
    for (std::size_t i = 0; i < n; ++i) {
        d.columns[i] = q.projection.apply(m->d(q.section[i]));
        for (std::size_t x = 0; x < a.dim(); ++x)
            action[x * n + i] = q.projection.apply(m->act(SparseVec::basis(x), q.section[i]));
    }
    auto quotient = std::make_shared<const DgModule>(m->base_ptr(), q.space, std::move(d), std::move(action));
    return ModuleQuotient{quotient, ModuleMorphism{m, quotient, q.projection}, q.section};
}

bool is_differential_ideal(const Cdga& a, const std::vector<SparseVec>& vectors)
{
    const GradedSpace& s = a.space();
    for (const auto& v : vectors) {
        if (!in_span(a.d(v), vectors, s))
            return false;
        for (std::size_t x = 0; x < a.dim(); ++x)
            if (!in_span(a.mul(SparseVec::basis(x), v), vectors, s))
                return false;
    }
    return true;
}

CdgaQuotient quotient_cdga(const CdgaPtr& a, const std::vector<SparseVec>& ideal_vectors)
{
    if (!is_differential_ideal(*a, ideal_vectors))
        throw Error(ErrorKind::axiom, "quotient_cdga: subspace is not a differential ideal");
    QuotientSpace q = quotient_space(a->space(), ideal_vectors);
    const std::size_t n = q.space.dim();
    LinearMap d = LinearMap::zero(n, n, 1);
    std::vector<SparseVec> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        d.columns[i] = q.projection.apply(a->d(q.section[i]));
        for (std::size_t j = 0; j < n; ++j)
            products[i * n + j] = q.projection.apply(a->mul(q.section[i], q.section[j]));
    }
    auto quotient = std::make_shared<const Cdga>(q.space, q.projection.apply(a->unit()), std::move(products),
                                                 std::move(d));
    return CdgaQuotient{quotient, AlgebraMorphism{a, quotient, q.projection}, q.section};
}

}  // namespace ratmod

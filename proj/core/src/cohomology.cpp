#include "ratmod/cohomology.hpp"

#include "ratmod/constructions.hpp"
#include "ratmod/error.hpp"

namespace ratmod {

Cohomology::Cohomology(const GradedSpace& space, const LinearMap& d) : c_(space), d_(d)
{
    if (d.degree != 1 || d.source_dim != space.dim())
        throw Error(ErrorKind::internal, "cohomology: differential has the wrong shape");
    const auto cocycles = kernel_basis(d, space, space);
    const auto boundaries = image_basis(d, space, space);

    for (int p : space.support()) {
        Degree deg;
        std::vector<Column> cols;
        for (const auto& b : boundaries)
            if (space.degree_of(b) == p) {
                deg.boundaries.push_back(b);
                cols.push_back(space.restrict_to(b, p));
            }
        const std::size_t nb = cols.size();
        std::vector<SparseVec> z;
        for (const auto& v : cocycles)
            if (space.degree_of(v) == p) {
                z.push_back(v);
                cols.push_back(space.restrict_to(v, p));
            }
        const std::size_t dim = space.dim_in_degree(p);
        const Reduction red = reduce(Matrix::from_columns(cols, dim));
        std::vector<Column> basis_cols(cols.begin(), cols.begin() + static_cast<long>(nb));
        for (std::size_t c : red.pivot_columns) {
            if (c < nb)
                continue;
            const SparseVec& rep = z[c - nb];
            std::string name;
            if (rep.size() == 1 && rep.begin()->second == 1)
                name = space.name(rep.begin()->first);
            else
                name = space.format(rep);
            h_in_degree_[p].push_back(h_.add(name, p));
            reps_.push_back(rep);
            basis_cols.push_back(cols[c]);
        }
        deg.basis = Matrix::from_columns(basis_cols, dim);
        degrees_.emplace(p, std::move(deg));
    }
}

bool Cohomology::is_coboundary(const SparseVec& v) const { return primitive(v).has_value(); }

std::optional<SparseVec> Cohomology::primitive(const SparseVec& v) const
{
    const auto p = c_.degree_of(v);
    if (!p)
        return SparseVec{};
    const Matrix block = d_.block(c_, c_, *p - 1);
    if (block.cols() == 0)
        return std::nullopt;
    const auto x = solve(block, c_.restrict_to(v, *p));
    if (!x)
        return std::nullopt;
    return c_.from_degree(*x, *p - 1);
}

SparseVec Cohomology::class_of(const SparseVec& v) const
{
    if (!is_cocycle(v))
        throw Error(ErrorKind::usage, "not a cocycle: " + c_.format(v));
    const auto p = c_.degree_of(v);
    SparseVec out;
    if (!p)
        return out;
    const Degree& deg = degrees_.at(*p);
    const auto x = solve(deg.basis, c_.restrict_to(v, *p));
    if (!x)
        throw Error(ErrorKind::internal, "cohomology: cocycle outside the computed span");
    const std::size_t nb = deg.boundaries.size();
    auto it = h_in_degree_.find(*p);
    if (it == h_in_degree_.end())
        return out;
    for (std::size_t k = 0; k < it->second.size(); ++k)
        out.add(it->second[k], (*x)[nb + k]);
    return out;
}

std::vector<std::size_t> Cohomology::betti(int max_degree) const
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= max_degree; ++p)
        out.push_back(h_.dim_in_degree(p));
    return out;
}

std::vector<std::size_t> Cohomology::betti() const
{
    int top = 0;
    for (int p : h_.support())
        top = std::max(top, p);
    return betti(top);
}

LinearMap induced_map(const LinearMap& f, const Cohomology& source, const Cohomology& target)
{
    LinearMap out = LinearMap::zero(source.dim(), target.dim(), f.degree);
    for (std::size_t i = 0; i < source.dim(); ++i)
        out.columns[i] = target.class_of(f.apply(source.representative(i)));
    return out;
}

bool is_quasi_isomorphism(const LinearMap& f, const Cohomology& source, const Cohomology& target)
{
    if (source.dims() != target.dims())
        return false;
    const LinearMap h = induced_map(f, source, target);
    return is_injective(h, source.space(), target.space()) && is_surjective(h, source.space(), target.space());
}

long euler_characteristic(const GradedSpace& space)
{
    long chi = 0;
    for (const auto& [p, n] : space.dims())
        chi += sign_of_parity(p) * static_cast<long>(n);
    return chi;
}

}  // namespace ratmod

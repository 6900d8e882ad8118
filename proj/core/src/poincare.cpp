#include "ratmod/poincare.hpp"

#include "ratmod/error.hpp"

#include <sstream>

namespace ratmod {

namespace {

std::string deg(int p) { return std::to_string(p); }

}  // namespace

Scalar PdAlgebra::epsilon(const SparseVec& v) const
{
    const auto& top = algebra->space().in_degree(dim);
    const std::size_t t = top.front();
    return v.at(t) / fundamental_class.at(t);
}

PdAlgebra verify_pd(const CdgaPtr& p, int n, const SparseVec& orientation_class)
{
    const GradedSpace& s = p->space();
    if (!p->is_connected())
        throw Error(ErrorKind::axiom, "Poincare duality algebra must be connected");
    if (s.max_degree() > n)
        throw Error(ErrorKind::axiom, "Poincare duality algebra has elements above degree " + deg(n));
    if (s.dim_in_degree(n) != 1)
        throw Error(ErrorKind::axiom, "degree " + deg(n) + " must be one-dimensional");
    if (orientation_class.is_zero() || s.degree_of(orientation_class) != n)
        throw Error(ErrorKind::axiom, "orientation class must be a nonzero element of degree " + deg(n));

    PdAlgebra pd{p, n, orientation_class, {}};
    for (std::size_t i : s.in_degree(n - 1))
        if (sgn(pd.epsilon(p->differential().columns[i])) != 0)
            throw Error(ErrorKind::axiom, "orientation does not vanish on d(" + s.name(i) + ")");

    for (int k = 0; k <= n; ++k) {
        const auto& rows = s.in_degree(k);
        const auto& cols = s.in_degree(n - k);
        if (rows.size() != cols.size())
            throw Error(ErrorKind::axiom, "dimensions of degrees " + deg(k) + " and " + deg(n - k) + " differ");
        Matrix g(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                g(i, j) = pd.epsilon(p->product(rows[i], cols[j]));
        if (!rows.empty() && sgn(determinant(g)) == 0)
            throw Error(ErrorKind::axiom, "degenerate pairing in degree " + deg(k));
        pd.pairings.emplace(k, std::move(g));
    }
    return pd;
}

DualBasis dual_basis(const PdAlgebra& pd)
{
    std::vector<SparseVec> basis;
    for (std::size_t i = 0; i < pd.algebra->dim(); ++i)
        basis.push_back(SparseVec::basis(i));
    return dual_basis(pd, basis);
}

DualBasis dual_basis(const PdAlgebra& pd, const std::vector<SparseVec>& basis)
{
    const GradedSpace& s = pd.algebra->space();
    if (basis.size() != s.dim())
        throw Error(ErrorKind::usage, "dual_basis: wrong number of basis vectors");
    std::map<int, std::vector<std::size_t>> by_deg;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto d = s.degree_of(basis[i]);
        if (!d)
            throw Error(ErrorKind::usage, "dual_basis: zero vector in basis");
        by_deg[*d].push_back(i);
    }
    DualBasis out{basis, std::vector<SparseVec>(basis.size())};
    for (const auto& [k, idx] : by_deg) {
        if (idx.size() != s.dim_in_degree(k))
            throw Error(ErrorKind::usage, "dual_basis: not a basis in degree " + deg(k));
        std::vector<Column> cols;
        for (std::size_t i : idx)
            cols.push_back(s.restrict_to(basis[i], k));
        const Matrix a = Matrix::from_columns(cols, idx.size());
        if (sgn(determinant(a)) == 0)
            throw Error(ErrorKind::usage, "dual_basis: not a basis in degree " + deg(k));
        const Matrix b = inverse(a.transpose() * pd.pairings.at(k));
        for (std::size_t j = 0; j < idx.size(); ++j)
            out.duals[idx[j]] = s.from_degree(b.column(j), pd.dim - k);
    }
    return out;
}

SparseVec diagonal_class(const PdAlgebra& pd) { return diagonal_class(pd, dual_basis(pd)); }

SparseVec diagonal_class(const PdAlgebra& pd, const DualBasis& basis)
{
    const GradedSpace& s = pd.algebra->space();
    const std::size_t n = s.dim();
    SparseVec delta;
    for (std::size_t i = 0; i < basis.basis.size(); ++i) {
        const int sign = sign_of_parity(*s.degree_of(basis.basis[i]));
        delta.axpy(sign, tensor_element(basis.basis[i], basis.duals[i], n));
    }
    const CdgaPtr pp = tensor(pd.algebra, pd.algebra);
    if (!pp->d(delta).is_zero())
        throw Error(ErrorKind::internal, "diagonal class is not a cocycle");
    return delta;
}

ModuleMorphism theta(const PdAlgebra& pd)
{
    const Cdga& p = *pd.algebra;
    const ModulePtr source = module_of(pd.algebra);
    const ModulePtr target = dual_shift(source, -pd.dim);
    LinearMap map = LinearMap::zero(p.dim(), p.dim(), 0);
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j)
            map.columns[i].add(j, pd.epsilon(p.product(i, j)));
    ModuleMorphism out{source, target, std::move(map)};
    assert_valid(verify_morphism(out), "theta (sign conventions)");
    return out;
}

ModuleMorphism theta_inverse(const PdAlgebra& pd)
{
    const ModuleMorphism t = theta(pd);
    const GradedSpace& s = t.source->space();
    const GradedSpace& ts = t.target->space();
    LinearMap inv = LinearMap::zero(ts.dim(), s.dim(), 0);
    for (int p : s.support()) {
        const Matrix block = t.map.block(s, ts, p);
        const Matrix b = inverse(block);
        const auto& cols = ts.in_degree(p);
        for (std::size_t j = 0; j < cols.size(); ++j)
            inv.columns[cols[j]] = s.from_degree(b.column(j), p);
    }
    ModuleMorphism out{t.target, t.source, std::move(inv)};
    assert_valid(verify_morphism(out), "inverse of theta");
    return out;
}

ModuleMorphism shriek(const PdAlgebra& pd, const AlgebraMorphism& phi)
{
    const AxiomReport report = verify_morphism(phi);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "not a CDGA morphism:\n" + describe(report));
    if (!same_algebra(phi.source, pd.algebra))
        throw Error(ErrorKind::usage, "shriek: morphism does not start at the duality algebra");
    const ModuleMorphism dual_phi = dual_shift(as_module_morphism(phi), -pd.dim);
    const ModuleMorphism inv = theta_inverse(pd);
    ModuleMorphism out{dual_phi.source, inv.target, compose(inv.map, dual_phi.map)};
    assert_valid(verify_morphism(out), "shriek map");
    return out;
}

PrettyModel pretty_model(const PdAlgebra& p, const CdgaPtr& q, const AlgebraMorphism& phi)
{
    const ModuleMorphism ps = shriek(p, phi);
    const ModulePtr fiber_q = dual_shift(module_of(q), -p.dim);
    ModuleMorphism pps{fiber_q, module_of(q), compose(phi.map, ps.map)};
    const AxiomReport report = verify_morphism(pps);
    if (!report.empty())
        throw Error(ErrorKind::hypothesis, "phi phi^! is not a Q-dgmodule morphism:\n" + describe(report));

    const BalanceCheck ps_bal = is_balanced(ps);
    const BalanceCheck pps_bal = is_balanced(pps);
    if (!ps_bal.balanced)
        throw Error(ErrorKind::hypothesis, "balanced condition fails for phi^! on " + ps_bal.witness);
    if (!pps_bal.balanced)
        throw Error(ErrorKind::hypothesis, "balanced condition fails for phi phi^! on " + pps_bal.witness);

    ConeModel b = semi_trivial_cone(ps);
    ConeModel db = semi_trivial_cone(pps);

    const std::size_t np = p.algebra->dim(), nq = q->dim();
    LinearMap bm = LinearMap::zero(b.algebra->dim(), db.algebra->dim(), 0);
    for (std::size_t i = 0; i < np; ++i)
        bm.columns[i] = phi.map.columns[i];
    for (std::size_t k = 0; k < fiber_q->dim(); ++k)
        bm.columns[np + k] = SparseVec::basis(nq + k);
    AlgebraMorphism beta{b.algebra, db.algebra, std::move(bm)};
    assert_valid(verify_morphism(beta), "phi (+) id");
    const bool surjective = is_surjective(beta.map, b.algebra->space(), db.algebra->space());

    std::vector<SparseVec> ideal = image_basis(ps.map, ps.source->space(), p.algebra->space());
    if (!is_differential_ideal(*p.algebra, ideal))
        throw Error(ErrorKind::internal, "image of phi^! is not a differential ideal");
    CdgaQuotient pi = quotient_cdga(p.algebra, ideal);

    return PrettyModel{p,      q,  phi,  ps,        std::move(pps), ps_bal, pps_bal, std::move(b), std::move(db),
                       std::move(beta), surjective, std::move(ideal), std::move(pi)};
}

TruncatedDiagonal truncated_diagonal_shriek(const PrettyModel& pm)
{
    const CdgaPtr& pi = pm.p_mod_i.algebra;
    const std::size_t n = pi->dim();
    const SparseVec delta = diagonal_class(pm.p);
    const SparseVec bar = tensor(pm.p_mod_i.projection.map, pm.p_mod_i.projection.map).apply(delta);

    const CdgaPtr sq = tensor(pi, pi);
    const AlgebraMorphism mu = multiplication(pi, sq);
    const ModulePtr source = suspend(restrict_scalars(module_of(pi), mu), -pm.p.dim);
    const ModulePtr target = module_of(sq);
    LinearMap map = LinearMap::zero(n, sq->dim(), 0);
    for (std::size_t j = 0; j < n; ++j)
        map.columns[j] = sq->mul(bar, tensor_element(pi->unit(), SparseVec::basis(j), n));
    ModuleMorphism shriek_map{source, target, std::move(map)};
    const AxiomReport report = verify_morphism(shriek_map);
    if (!report.empty())
        throw Error(ErrorKind::internal,
                    "truncated diagonal shriek is not a module morphism (sign conventions):\n" + describe(report));
    BalanceCheck bal = is_balanced(shriek_map);
    return TruncatedDiagonal{pi, sq, bar, std::move(shriek_map), std::move(bal)};
}

SquareComparison check_kernel_square(const PrettyModel& pm, const TruncatedDiagonal& td)
{
    const Cdga& p = *pm.p.algebra;
    const GradedSpace& ps = p.space();
    const GradedSpace& qs = td.quotient->space();
    const int n = pm.p.dim;
    const std::vector<SparseVec> kernel = kernel_basis(pm.phi.map, ps, pm.q->space());
    const auto& section = pm.p_mod_i.section;

    for (const auto& i : pm.ideal)
        for (const auto& k : kernel)
            if (sgn(pm.p.epsilon(p.mul(i, k))) != 0)
                throw Error(ErrorKind::internal, "eps(I . ker phi) != 0");

    // theta-bar(e_i)(k) = eps(lift(e_i) k)
    auto theta_bar = [&](std::size_t i, const SparseVec& k) { return pm.p.epsilon(p.mul(section[i], k)); };

    SquareComparison out;
    std::ostringstream detail;
    const std::size_t nq = qs.dim();
    for (std::size_t x = 0; x < nq; ++x) {
        const SparseVec& image = td.shriek.map.columns[x];
        for (const auto& ka : kernel) {
            const int da = *ps.degree_of(ka);
            for (const auto& kb : kernel) {
                const Scalar v2 = pm.p.epsilon(p.mul(p.mul(section[x], ka), kb));
                Scalar v1 = 0;
                for (const auto& [idx, c] : image) {
                    const std::size_t i = idx / nq, j = idx % nq;
                    const long fi = qs.degree(i) - n, gj = qs.degree(j) - n;
                    const int sign = sign_of_parity(n * fi) * sign_of_parity(gj * da);
                    v1 += c * sign * theta_bar(i, ka) * theta_bar(j, kb);
                }
                if (v1 == v2 && sgn(v1) == 0)
                    continue;
                int sign = 0;
                if (v1 == v2)
                    sign = 1;
                else if (v1 == -v2)
                    sign = -1;
                if (sign == 0) {
                    out.commutes = out.commutes_up_to_sign = false;
                    detail << "values differ beyond sign at s^-n(" << qs.name(x) << ") on " << ps.format(ka)
                           << " (x) " << ps.format(kb) << "; ";
                    continue;
                }
                if (sign < 0)
                    out.commutes = false;
                auto [it, inserted] = out.sign_by_degree.emplace(da, sign);
                if (!inserted && it->second != sign) {
                    out.commutes_up_to_sign = false;
                    detail << "inconsistent signs in degree " << da << "; ";
                }
            }
        }
    }
    if (out.commutes)
        detail << "square commutes";
    else if (out.commutes_up_to_sign) {
        detail << "square commutes up to sign:";
        for (const auto& [d, s] : out.sign_by_degree)
            detail << " |k|=" << d << ":" << (s > 0 ? "+" : "-");
    }
    out.detail = detail.str();
    return out;
}

}  // namespace ratmod

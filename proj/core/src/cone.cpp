#include "ratmod/cone.hpp"

#include "ratmod/error.hpp"

#include <set>

namespace ratmod {

namespace {

SparseVec shifted(const SparseVec& v, std::size_t offset)
{
    SparseVec out;
    for (const auto& [i, c] : v)
        out.add(i + offset, c);
    return out;
}

std::string fiber_name(const std::string& name, FiberNaming naming)
{
    return naming == FiberNaming::prefix ? "s(" + name + ")" : suspended_name(name, 1);
}

std::size_t rank_in_degree(const LinearMap& f, const GradedSpace& source, const GradedSpace& target, int p)
{
    const Matrix m = f.block(source, target, p);
    return m.rows() == 0 || m.cols() == 0 ? 0 : rank_of(m);
}

void require_morphism(const ModuleMorphism& f)
{
    const AxiomReport report = verify_morphism(f);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "not a dgmodule morphism:\n" + describe(report));
}

void require_algebra_target(const ModuleMorphism& f)
{
    const Cdga& a = f.source->base();
    if (!(f.target->space() == a.space()) || f.target->action_table() != a.product_table())
        throw Error(ErrorKind::usage, "attaching map must land in the base algebra");
}

void require_connected(const Cdga& a)
{
    if (!a.is_connected())
        throw Error(ErrorKind::hypothesis, "truncation ideal need not be stable: base algebra is not connected");
}

}  // namespace

ConeModel mapping_cone(const ModuleMorphism& f, FiberNaming naming)
{
    require_morphism(f);
    const DgModule& n = *f.target;
    const DgModule& q = *f.source;
    const Cdga& a = n.base();
    const std::size_t nn = n.dim(), nq = q.dim(), dim = nn + nq;

    GradedSpace space = n.space();
    GradedSpace fiber_space;
    for (std::size_t i = 0; i < nq; ++i) {
        const std::string name = fiber_name(q.space().name(i), naming);
        space.add(name, q.space().degree(i) - 1);
        fiber_space.add(name, q.space().degree(i) - 1);
    }

    LinearMap d = LinearMap::zero(dim, dim, 1);
    LinearMap d_fiber = LinearMap::zero(nq, nq, 1);
    for (std::size_t j = 0; j < nn; ++j)
        d.columns[j] = n.differential().columns[j];
    for (std::size_t i = 0; i < nq; ++i) {
        d_fiber.columns[i] = q.differential().columns[i].scaled(-1);
        d.columns[nn + i] = f.map.columns[i] + shifted(d_fiber.columns[i], nn);
    }

    std::vector<SparseVec> action(a.dim() * dim);
    std::vector<SparseVec> fiber_action(a.dim() * nq);
    for (std::size_t x = 0; x < a.dim(); ++x) {
        const int sign = sign_of_parity(a.space().degree(x));
        for (std::size_t j = 0; j < nn; ++j)
            action[x * dim + j] = n.action(x, j);
        for (std::size_t i = 0; i < nq; ++i) {
            fiber_action[x * nq + i] = q.action(x, i).scaled(sign);
            action[x * dim + nn + i] = shifted(fiber_action[x * nq + i], nn);
        }
    }

    auto cone = std::make_shared<const DgModule>(n.base_ptr(), std::move(space), std::move(d), std::move(action));
    auto fiber = std::make_shared<const DgModule>(n.base_ptr(), std::move(fiber_space), std::move(d_fiber),
                                                  std::move(fiber_action));
    assert_valid(verify_module(*cone), "mapping cone");

    LinearMap incl = LinearMap::zero(nn, dim, 0);
    for (std::size_t j = 0; j < nn; ++j)
        incl.columns[j] = SparseVec::basis(j);
    LinearMap proj = LinearMap::zero(dim, nq, 0);
    for (std::size_t i = 0; i < nq; ++i)
        proj.columns[nn + i] = SparseVec::basis(i);

    ConeModel out{f, cone, ModuleMorphism{f.target, cone, std::move(incl)}, ModuleMorphism{cone, fiber, std::move(proj)},
                  fiber, nullptr, std::nullopt, std::nullopt, std::nullopt};
    assert_valid(verify_morphism(out.target_inclusion), "cone inclusion");
    assert_valid(verify_morphism(out.projection), "cone projection");
    if (auto failure = cone_exactness_failure(out))
        throw Error(ErrorKind::internal, "mapping cone long exact sequence: " + *failure);
    return out;
}

std::optional<std::string> cone_exactness_failure(const ConeModel& cone)
{
    const Cohomology hq(*cone.attaching.source);
    const Cohomology hn(*cone.attaching.target);
    const Cohomology hc(*cone.module);
    const Cohomology hs(*cone.suspended_fiber);

    const LinearMap f = induced_map(cone.attaching.map, hq, hn);
    const LinearMap i = induced_map(cone.target_inclusion.map, hn, hc);
    const LinearMap p = induced_map(cone.projection.map, hc, hs);

    if (!compose(i, f).is_zero())
        return "H(C) receives nonzero classes from H(Q)";
    if (!compose(p, i).is_zero())
        return "H(N) -> H(C) -> H(sQ) is not zero";
    // connecting map: [c] -> [f(q)] where the sQ part of c is sq
    const std::size_t nn = cone.target_dim();
    for (std::size_t k = 0; k < hc.dim(); ++k) {
        SparseVec q;
        for (const auto& [idx, c] : hc.representative(k))
            if (idx >= nn)
                q.add(idx - nn, c);
        if (!hn.class_of(cone.attaching(q)).is_zero())
            return "connecting map composed with H(f) is not zero";
    }

    std::set<int> degrees;
    for (const auto* s : {&hq.space(), &hn.space(), &hc.space()})
        for (int d : s->support()) {
            degrees.insert(d);
            degrees.insert(d - 1);
        }
    for (int d : degrees) {
        const std::size_t rf = rank_in_degree(f, hq.space(), hn.space(), d);
        const std::size_t rf_next = rank_in_degree(f, hq.space(), hn.space(), d + 1);
        const std::size_t ri = rank_in_degree(i, hn.space(), hc.space(), d);
        const std::size_t rp = rank_in_degree(p, hc.space(), hs.space(), d);
        if (rf + ri != hn.space().dim_in_degree(d))
            return "not exact at H^" + std::to_string(d) + "(N)";
        if (ri + rp != hc.space().dim_in_degree(d))
            return "not exact at H^" + std::to_string(d) + "(C)";
        if (rp + rf_next != hq.space().dim_in_degree(d + 1))
            return "not exact at H^" + std::to_string(d + 1) + "(Q)";
    }
    return std::nullopt;
}

HomotopyKernel homotopy_kernel(const ModuleMorphism& f)
{
    require_morphism(f);
    const ModuleMorphism g = suspend(f, -1);
    ConeModel cone = mapping_cone(g, FiberNaming::collapse);
    const std::size_t nn = cone.target_dim();
    ModuleMorphism to_source{cone.module, f.source, cone.projection.map};
    assert_valid(verify_morphism(to_source), "homotopy kernel projection");
    HomotopyKernel out{std::move(cone), std::move(to_source), std::nullopt, std::nullopt};

    if (is_surjective(f.map, f.source->space(), f.target->space())) {
        Submodule ker = submodule(f.source, kernel_basis(f.map, f.source->space(), f.target->space()));
        LinearMap incl = LinearMap::zero(ker.module->dim(), out.cone.module->dim(), 0);
        for (std::size_t k = 0; k < ker.module->dim(); ++k)
            incl.columns[k] = shifted(ker.inclusion.map.columns[k], nn);
        ModuleMorphism inclusion{ker.module, out.cone.module, std::move(incl)};
        assert_valid(verify_morphism(inclusion), "kernel inclusion into the homotopy kernel");
        if (!is_quasi_isomorphism(inclusion.map, Cohomology(*ker.module), Cohomology(*out.cone.module)))
            throw Error(ErrorKind::internal, "kernel of a surjection is not quasi-isomorphic to its homotopy kernel");
        out.kernel = std::move(ker);
        out.kernel_inclusion = std::move(inclusion);
    }
    return out;
}

BalanceCheck is_balanced(const ModuleMorphism& f)
{
    require_algebra_target(f);
    const DgModule& q = *f.source;
    const GradedSpace& s = q.space();
    for (std::size_t x = 0; x < q.dim(); ++x)
        for (std::size_t y = 0; y < q.dim(); ++y) {
            SparseVec diff = q.act(f.map.columns[x], SparseVec::basis(y));
            diff.axpy(-sign_of_parity(static_cast<long>(s.degree(x)) * s.degree(y)),
                      q.act(f.map.columns[y], SparseVec::basis(x)));
            if (!diff.is_zero())
                return BalanceCheck{false, "(" + s.name(x) + ", " + s.name(y) + ")"};
        }
    return BalanceCheck{};
}

CdgaPtr semi_trivial_structure(const ModuleMorphism& f)
{
    require_algebra_target(f);
    const DgModule& q = *f.source;
    const Cdga& a = q.base();
    const std::size_t na = a.dim(), nq = q.dim(), dim = na + nq;

    GradedSpace space = a.space();
    for (std::size_t i = 0; i < nq; ++i)
        space.add(fiber_name(q.space().name(i), FiberNaming::prefix), q.space().degree(i) - 1);

    std::vector<SparseVec> products(dim * dim);
    for (std::size_t i = 0; i < na; ++i) {
        const int ai = a.space().degree(i);
        for (std::size_t j = 0; j < na; ++j)
            products[i * dim + j] = a.product(i, j);
        for (std::size_t k = 0; k < nq; ++k) {
            const SparseVec aq = shifted(q.action(i, k), na);
            products[i * dim + na + k] = aq.scaled(sign_of_parity(ai));
            products[(na + k) * dim + i] = aq.scaled(sign_of_parity(static_cast<long>(q.space().degree(k)) * ai));
        }
    }

    LinearMap d = LinearMap::zero(dim, dim, 1);
    for (std::size_t i = 0; i < na; ++i)
        d.columns[i] = a.differential().columns[i];
    for (std::size_t k = 0; k < nq; ++k)
        d.columns[na + k] = f.map.columns[k] - shifted(q.differential().columns[k], na);

    return std::make_shared<const Cdga>(std::move(space), a.unit(), std::move(products), std::move(d));
}

namespace {

AlgebraMorphism base_inclusion(const CdgaPtr& a, const CdgaPtr& cone)
{
    LinearMap incl = LinearMap::zero(a->dim(), cone->dim(), 0);
    for (std::size_t i = 0; i < a->dim(); ++i)
        incl.columns[i] = SparseVec::basis(i);
    return AlgebraMorphism{a, cone, std::move(incl)};
}

}  // namespace

ConeModel semi_trivial_cone(const ModuleMorphism& f)
{
    require_morphism(f);
    const BalanceCheck bal = is_balanced(f);
    if (!bal.balanced)
        throw Error(ErrorKind::hypothesis, "balanced condition fails on " + bal.witness);
    ConeModel cone = mapping_cone(f);
    cone.algebra = semi_trivial_structure(f);
    assert_valid(verify_cdga(*cone.algebra), "semi-trivial cone");
    cone.inclusion = base_inclusion(f.source->base_ptr(), cone.algebra);
    assert_valid(verify_morphism(*cone.inclusion), "inclusion into the semi-trivial cone");
    return cone;
}

std::vector<SparseVec> truncation_ideal(const GradedSpace& space, const LinearMap& d, int bound)
{
    std::vector<SparseVec> out;
    const std::size_t dim = space.dim_in_degree(bound);
    if (dim > 0) {
        const Matrix block = d.block(space, space, bound);
        std::vector<Column> cocycles;
        if (block.rows() == 0)
            for (std::size_t k = 0; k < dim; ++k) {
                Column e(dim);
                e[k] = 1;
                cocycles.push_back(std::move(e));
            }
        else
            cocycles = kernel_and_image(block).kernel_basis;
        for (std::size_t k : complement_indices(cocycles, dim))
            out.push_back(SparseVec::basis(space.in_degree(bound)[k]));
    }
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (space.degree(i) > bound)
            out.push_back(SparseVec::basis(i));
    return out;
}

namespace {

void check_truncation(const GradedSpace& quotient, const LinearMap& projection, const Cohomology& before,
                      const Cohomology& after, int bound)
{
    if (quotient.dim() > 0 && quotient.max_degree() > bound)
        throw Error(ErrorKind::internal, "truncation leaves elements above the bound");
    const LinearMap h = induced_map(projection, before, after);
    for (int p : before.space().support()) {
        if (p > bound)
            continue;
        const std::size_t n = before.space().dim_in_degree(p);
        if (after.space().dim_in_degree(p) != n || rank_in_degree(h, before.space(), after.space(), p) != n)
            throw Error(ErrorKind::internal, "truncation changes cohomology in degree " + std::to_string(p));
    }
    for (int p : after.space().support())
        if (p <= bound && before.space().dim_in_degree(p) == 0)
            throw Error(ErrorKind::internal, "truncation creates cohomology in degree " + std::to_string(p));
}

}  // namespace

ModuleTruncation truncate(const ModulePtr& r, int bound)
{
    require_connected(r->base());
    std::vector<SparseVec> ideal = truncation_ideal(r->space(), r->differential(), bound);
    ModuleQuotient q = quotient_module(r, ideal);
    check_truncation(q.module->space(), q.projection.map, Cohomology(*r), Cohomology(*q.module), bound);
    assert_valid(verify_module(*q.module), "truncated module");
    return ModuleTruncation{r, bound, std::move(ideal), q.module, q.projection, q.section};
}

CdgaTruncation truncate(const CdgaPtr& a, int bound)
{
    require_connected(*a);
    std::vector<SparseVec> ideal = truncation_ideal(a->space(), a->differential(), bound);
    CdgaQuotient q = quotient_cdga(a, ideal);
    check_truncation(q.algebra->space(), q.projection.map, Cohomology(*a), Cohomology(*q.algebra), bound);
    assert_valid(verify_cdga(*q.algebra), "truncated CDGA");
    return CdgaTruncation{a, bound, std::move(ideal), q.algebra, q.projection, q.section};
}

ConeModel truncated_semitrivial_cone(const ModuleMorphism& f, int bound, int p)
{
    require_morphism(f);
    require_algebra_target(f);
    const GradedSpace& qs = f.source->space();
    if (qs.dim() > 0 && qs.min_degree() < p)
        throw Error(ErrorKind::hypothesis, "connectivity bound false: the fiber has elements in degree " +
                                               std::to_string(qs.min_degree()) + " < " + std::to_string(p));
    if (bound > 2 * p - 3)
        throw Error(ErrorKind::hypothesis, "degree window violated: N = " + std::to_string(bound) + " > 2p - 3 = " +
                                               std::to_string(2 * p - 3));
    require_connected(f.source->base());

    ConeModel cone = mapping_cone(f);
    const CdgaPtr full = semi_trivial_structure(f);
    const std::vector<SparseVec> ideal = truncation_ideal(full->space(), full->differential(), bound);
    if (!is_differential_ideal(*full, ideal))
        throw Error(ErrorKind::internal, "truncation ideal of the semi-trivial cone is not an ideal");
    CdgaQuotient q = quotient_cdga(full, ideal);
    const AxiomReport report = verify_cdga(*q.algebra);
    if (!report.empty())
        throw Error(ErrorKind::internal,
                    "the degree window N <= 2p - 3 was insufficient on this input:\n" + describe(report));
    check_truncation(q.algebra->space(), q.projection.map, Cohomology(*cone.module), Cohomology(*q.algebra), bound);

    cone.algebra = q.algebra;
    cone.truncation_degree = bound;
    cone.truncation = q.projection.map;
    AlgebraMorphism incl = base_inclusion(f.source->base_ptr(), full);
    cone.inclusion = AlgebraMorphism{incl.source, q.algebra, compose(q.projection.map, incl.map)};
    assert_valid(verify_morphism(*cone.inclusion), "inclusion into the truncated cone");
    return cone;
}

SquareModel square_model(const AlgebraMorphism& beta)
{
    const AxiomReport report = verify_morphism(beta);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "not a CDGA morphism:\n" + describe(report));
    const GradedSpace& bs = beta.source->space();
    const GradedSpace& ds = beta.target->space();
    if (!is_surjective(beta.map, bs, ds))
        throw Error(ErrorKind::hypothesis, "the boundary morphism is not surjective");

    const std::size_t nb = bs.dim(), nd = ds.dim();
    const std::vector<SparseVec> kernel = kernel_basis(beta.map, bs, ds);
    const CdgaPtr bb = tensor(beta.source, beta.source);
    std::vector<SparseVec> kk;
    for (const auto& u : kernel)
        for (const auto& v : kernel)
            kk.push_back(tensor_element(u, v, nb));

    CdgaQuotient q = quotient_cdga(bb, kk);
    assert_valid(verify_cdga(*q.algebra), "square model quotient");
    AlgebraMorphism mu = multiplication(beta.source, bb);

    LinearMap beta_mu = compose(beta.map, mu.map);
    for (const auto& v : kk)
        if (!beta_mu.apply(v).is_zero())
            throw Error(ErrorKind::internal, "beta o mu does not vanish on ker beta (x) ker beta");
    LinearMap mt = LinearMap::zero(q.algebra->dim(), nd, 0);
    for (std::size_t i = 0; i < q.algebra->dim(); ++i)
        mt.columns[i] = beta_mu.apply(q.section[i]);
    AlgebraMorphism mu_tilde{q.algebra, beta.target, std::move(mt)};
    assert_valid(verify_morphism(mu_tilde), "induced multiplication on the square model");
    if (!(compose(mu_tilde.map, q.projection.map) == beta_mu))
        throw Error(ErrorKind::internal, "square model diagram does not commute");

    // Pullback of B (x) dB -> dB (x) dB <- dB (x) B.
    const LinearMap id_b = LinearMap::identity(nb);
    const LinearMap id_d = LinearMap::identity(nd);
    const LinearMap left = tensor(id_b, beta.map);    // B(x)B -> B(x)dB
    const LinearMap right = tensor(beta.map, id_b);   // B(x)B -> dB(x)B
    const CdgaPtr bd = tensor(beta.source, beta.target);
    const CdgaPtr db = tensor(beta.target, beta.source);
    GradedSpace pair_space;
    for (const auto& e : bd->space().basis())
        pair_space.add("L:" + e.name, e.degree);
    for (const auto& e : db->space().basis())
        pair_space.add("R:" + e.name, e.degree);
    LinearMap joint = LinearMap::zero(bb->dim(), pair_space.dim(), 0);
    for (std::size_t i = 0; i < bb->dim(); ++i)
        joint.columns[i] = left.columns[i] + shifted(right.columns[i], bd->dim());
    if (!same_span(kernel_basis(joint, bb->space(), pair_space), kk, bb->space()))
        throw Error(ErrorKind::internal, "ker alpha differs from ker beta (x) ker beta");

    const LinearMap to_dd_left = tensor(beta.map, id_d);  // B(x)dB -> dB(x)dB
    const LinearMap to_dd_right = tensor(id_d, beta.map);  // dB(x)B -> dB(x)dB
    const CdgaPtr dd = tensor(beta.target, beta.target);
    LinearMap difference = LinearMap::zero(pair_space.dim(), dd->dim(), 0);
    for (std::size_t i = 0; i < bd->dim(); ++i)
        difference.columns[i] = to_dd_left.columns[i];
    for (std::size_t i = 0; i < db->dim(); ++i)
        difference.columns[bd->dim() + i] = to_dd_right.columns[i].scaled(-1);
    for (int p : bb->space().support()) {
        const std::size_t fibre = pair_space.dim_in_degree(p) - rank_in_degree(difference, pair_space, dd->space(), p);
        if (fibre != q.algebra->space().dim_in_degree(p))
            throw Error(ErrorKind::internal, "square model is not the pullback in degree " + std::to_string(p));
    }

    return SquareModel{beta, bb, kernel, std::move(kk), q.algebra, q.projection, std::move(mu), std::move(mu_tilde)};
}

}  // namespace ratmod

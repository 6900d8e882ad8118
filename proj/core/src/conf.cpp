#include "ratmod/conf.hpp"

#include "ratmod/error.hpp"

#include <sstream>

namespace ratmod {

namespace {

const char* kPrettyModelFaith = "P -> Q is a model of the pair (W, boundary of W) (weak equivalence taken on faith)";
const char* kTwoConnected = "W and its boundary are 2-connected (not checkable from the algebra)";

SparseVec shifted(const SparseVec& v, std::size_t offset)
{
    SparseVec out;
    for (const auto& [i, c] : v)
        out.add(i + offset, c);
    return out;
}

std::string dims_text(const std::map<int, std::size_t>& dims)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [p, n] : dims) {
        if (n == 0)
            continue;
        os << (first ? "" : ", ") << p << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

std::map<int, std::size_t> dims_up_to(const std::map<int, std::size_t>& dims, int bound)
{
    std::map<int, std::size_t> out;
    for (const auto& [p, n] : dims)
        if (p <= bound && n > 0)
            out.emplace(p, n);
    return out;
}

ModuleMorphism diagonal_attaching_map(const CdgaPtr& q, const CdgaPtr& qq, const SparseVec& c, int n)
{
    const AlgebraMorphism mu = multiplication(q, qq);
    const ModulePtr source = suspend(restrict_scalars(module_of(q), mu), -n);
    LinearMap map = LinearMap::zero(q->dim(), qq->dim(), 0);
    for (std::size_t j = 0; j < q->dim(); ++j)
        map.columns[j] = qq->mul(c, tensor_element(q->unit(), SparseVec::basis(j), q->dim()));
    return ModuleMorphism{source, module_of(qq), std::move(map)};
}

}  // namespace

ComplementModel complement_model(const ModuleMorphism& phi_shriek, int n, int k, int r)
{
    const GradedSpace& qs = phi_shriek.source->space();
    const int p = n - k;
    if (qs.dim() > 0 && qs.min_degree() < p)
        throw Error(ErrorKind::hypothesis, "the fiber module has elements in degree " + std::to_string(qs.min_degree()) +
                                               " < n - k = " + std::to_string(p));
    ComplementModel out;
    out.partial = r < 2 * k - n + 2;
    out.bound = out.partial ? 2 * p - 3 : n - r - 1;
    if (!out.partial && out.bound > 2 * p - 3)
        throw Error(ErrorKind::internal, "unknotting bound does not imply the degree window");
    if (out.bound < 0)
        throw Error(ErrorKind::hypothesis, "truncation degree " + std::to_string(out.bound) + " is negative");
    out.cone = truncated_semitrivial_cone(phi_shriek, out.bound, p);
    out.hypotheses.push_back("the fiber module is weakly equivalent to s^{-n} #hoker(beta) (taken on faith)");
    out.hypotheses.push_back("the inclusions of K and its boundary are r-connected with r = " + std::to_string(r) +
                             " (taken on faith)");
    if (out.partial)
        out.hypotheses.push_back("r < 2k - n + 2: model valid up to degree " + std::to_string(out.bound) + " only");
    return out;
}

Conf2Model conf2_general(const AlgebraMorphism& beta, const ModuleMorphism& delta_shriek, int n,
                         const std::optional<AlgebraMorphism>& replacement)
{
    const AxiomReport report = verify_morphism(beta);
    if (!report.empty())
        throw Error(ErrorKind::axiom, "not a CDGA morphism:\n" + describe(report));
    if (!is_surjective(beta.map, beta.source->space(), beta.target->space()))
        throw Error(ErrorKind::hypothesis, "the boundary morphism is not surjective");
    const GradedSpace& ds = delta_shriek.source->space();
    if (ds.dim() > 0 && ds.min_degree() < n)
        throw Error(ErrorKind::hypothesis, "D^{<n} != 0: D has elements in degree " + std::to_string(ds.min_degree()));

    Conf2Model out;
    CdgaPtr b = beta.source;
    if (replacement) {
        const AxiomReport rr = verify_morphism(*replacement);
        if (!rr.empty())
            throw Error(ErrorKind::axiom, "replacement is not a CDGA morphism:\n" + describe(rr));
        if (!same_algebra(replacement->source, beta.source))
            throw Error(ErrorKind::usage, "replacement must start at the source of beta");
        if (!is_quasi_isomorphism(replacement->map, Cohomology(*replacement->source),
                                  Cohomology(*replacement->target)))
            throw Error(ErrorKind::hypothesis, "replacement is not a quasi-isomorphism");
        b = replacement->target;
        out.details.push_back("B replaced by a quasi-isomorphic CDGA of dimension " + std::to_string(b->dim()));
    }
    const Cdga& base = delta_shriek.source->base();
    if (base.dim() != b->dim() * b->dim() || !(base.space() == tensor(b, b)->space()))
        throw Error(ErrorKind::usage, "delta^! must be a map of modules over B (x) B");

    out.cone = truncated_semitrivial_cone(delta_shriek, 2 * n - 3, n);
    out.ambient = delta_shriek.source->base_ptr();
    out.hypotheses.push_back("delta^! is weakly equivalent to s^{-2n} #mu-bar (taken on faith; cohomology compared)");
    out.hypotheses.push_back(kTwoConnected);

    const SquareModel sq = square_model(beta);
    const ModulePtr mb = module_of(beta.source);
    const Submodule k = submodule(mb, sq.kernel);
    const ModulePtr dk = dual_shift(k.module, -2 * n);
    const auto hd = Cohomology(*delta_shriek.source).dims();
    const auto hk = Cohomology(*dk).dims();
    out.details.push_back(std::string("H(D) ") + (hd == hk ? "matches" : "differs from") + " H(s^{-2n} #ker beta): " +
                          dims_text(hd) + " vs " + dims_text(hk));

    // Cone of s^{-2n} #mu-bar : s^{-2n} #K -> s^{-2n} #(K (x) K) over B (x) B.
    try {
        const CdgaPtr bb = sq.tensor;
        const ModulePtr kk = tensor(k.module, k.module, bb);
        const ModulePtr k_over_bb = restrict_scalars(k.module, sq.mu);
        LinearMap mu_bar = LinearMap::zero(kk->dim(), k.module->dim(), 0);
        const std::size_t nk = k.module->dim();
        for (std::size_t i = 0; i < nk; ++i)
            for (std::size_t j = 0; j < nk; ++j) {
                const SparseVec prod =
                    beta.source->mul(k.inclusion.map.columns[i], k.inclusion.map.columns[j]);
                SparseVec coords;
                const auto deg = beta.source->space().degree_of(prod);
                if (deg) {
                    std::vector<Column> cols;
                    std::vector<std::size_t> idx;
                    for (std::size_t t = 0; t < nk; ++t)
                        if (k.module->space().degree(t) == *deg) {
                            cols.push_back(beta.source->space().restrict_to(k.inclusion.map.columns[t], *deg));
                            idx.push_back(t);
                        }
                    const auto x = solve(Matrix::from_columns(cols, beta.source->space().dim_in_degree(*deg)),
                                         beta.source->space().restrict_to(prod, *deg));
                    if (!x)
                        throw Error(ErrorKind::internal, "ker beta is not closed under products");
                    for (std::size_t t = 0; t < idx.size(); ++t)
                        coords.add(idx[t], (*x)[t]);
                }
                mu_bar.columns[i * nk + j] = coords;
            }
        const ModuleMorphism mb_map{kk, k_over_bb, std::move(mu_bar)};
        assert_valid(verify_morphism(mb_map), "kernel multiplication");
        const ConeModel reference = mapping_cone(dual_shift(mb_map, -2 * n));
        const int top = 2 * n - 3;
        const auto h_model = dims_up_to(Cohomology(*out.cone.algebra).dims(), top);
        const auto h_ref = dims_up_to(Cohomology(*reference.module).dims(), top);
        out.details.push_back(std::string("H^{<=2n-3} of the model ") + (h_model == h_ref ? "matches" : "differs from") +
                              " the cone of s^{-2n} #mu-bar: " + dims_text(h_model) + " vs " + dims_text(h_ref));
    }
    catch (const Error& e) {
        out.details.push_back(std::string("comparison with s^{-2n} #mu-bar skipped: ") + e.what());
    }
    return out;
}

Conf2Model conf2_pretty(const PrettyModel& pm, bool truncate)
{
    return conf2_pretty(pm, truncated_diagonal_shriek(pm), truncate);
}

Conf2Model conf2_pretty(const PrettyModel& pm, const TruncatedDiagonal& td, bool truncate)
{
    if (!td.balance.balanced)
        throw Error(ErrorKind::hypothesis, "balanced condition fails for the truncated diagonal shriek on " +
                                               td.balance.witness);
    const int n = pm.p.dim;
    Conf2Model out;
    out.ambient = td.square;
    out.cone = truncate ? truncated_semitrivial_cone(td.shriek, 2 * n - 3, n) : semi_trivial_cone(td.shriek);
    out.hypotheses.push_back(kPrettyModelFaith);
    out.hypotheses.push_back(kTwoConnected);
    out.details.push_back(std::string("phi surjective: ") + (pm.beta_surjective ? "yes" : "no"));
    out.details.push_back("phi^! balanced: yes; phi phi^! balanced: yes; truncated diagonal shriek balanced: yes");
    return out;
}

PrettyModel augmentation_pretty_model(const PdAlgebra& p)
{
    const CdgaPtr q = ground_field();
    const Cdga& a = *p.algebra;
    LinearMap aug = LinearMap::zero(a.dim(), 1, 0);
    const auto& zero = a.space().in_degree(0);
    const Scalar unit_coeff = a.unit().at(zero.front());
    aug.columns[zero.front()] = SparseVec::basis(0, 1 / unit_coeff);
    const AlgebraMorphism phi{p.algebra, q, std::move(aug)};
    return pretty_model(p, q, phi);
}

Conf2Model conf2_punctured(const PdAlgebra& p)
{
    const Cdga& a = *p.algebra;
    Conf2Model out = conf2_pretty(augmentation_pretty_model(p));
    const bool low_vanish = a.space().dim_in_degree(1) == 0 && a.space().dim_in_degree(2) == 0;
    out.details.push_back(std::string("P^1 = P^2 = 0: ") + (low_vanish ? "yes" : "no"));
    return out;
}

DiskBundleAlgebra disk_bundle_algebra(const PdAlgebra& q, const SparseVec& euler, int rank)
{
    if (rank % 2 != 0)
        throw Error(ErrorKind::usage, "rank must be even");
    if (rank < 4)
        throw Error(ErrorKind::hypothesis, "rank must be at least 4");
    const Cdga& qa = *q.algebra;
    const GradedSpace& qs = qa.space();
    if (!qa.d(euler).is_zero())
        throw Error(ErrorKind::axiom, "Euler class is not a cocycle: d(" + qs.format(euler) + ") != 0");
    if (!euler.is_zero() && qs.degree_of(euler) != rank)
        throw Error(ErrorKind::usage, "Euler class must have degree " + std::to_string(rank));

    const std::size_t nq = qa.dim(), n = 2 * nq;
    GradedSpace space = qs;
    for (std::size_t i = 0; i < nq; ++i) {
        const bool is_unit = qa.unit() == SparseVec::basis(i);
        space.add(is_unit ? "z" : qs.name(i) + "·z", qs.degree(i) + rank);
    }
    std::vector<SparseVec> products(n * n);
    LinearMap d = LinearMap::zero(n, n, 1);
    for (std::size_t i = 0; i < nq; ++i) {
        d.columns[i] = qa.differential().columns[i];
        d.columns[nq + i] = shifted(qa.differential().columns[i], nq);
        for (std::size_t j = 0; j < nq; ++j) {
            const SparseVec& qq = qa.product(i, j);
            products[i * n + j] = qq;
            products[i * n + nq + j] = shifted(qq, nq);
            products[(nq + i) * n + j] = shifted(qq, nq);
            products[(nq + i) * n + nq + j] = shifted(qa.mul(qq, euler), nq);
        }
    }
    auto p = std::make_shared<const Cdga>(std::move(space), qa.unit(), std::move(products), std::move(d));
    assert_valid(verify_cdga(*p), "disk bundle algebra");
    const SparseVec omega = shifted(q.fundamental_class, nq).scaled(-1);
    PdAlgebra pd = verify_pd(p, q.dim + rank, omega);

    LinearMap phi = LinearMap::zero(n, nq, 0);
    for (std::size_t i = 0; i < nq; ++i) {
        phi.columns[i] = SparseVec::basis(i);
        phi.columns[nq + i] = qa.mul(SparseVec::basis(i), euler);
    }
    AlgebraMorphism phi_m{p, q.algebra, std::move(phi)};
    assert_valid(verify_morphism(phi_m), "disk bundle projection");
    return DiskBundleAlgebra{std::move(pd), std::move(phi_m)};
}

ConeModel diagonal_cone(const CdgaPtr& q, const SparseVec& c, int n)
{
    const CdgaPtr qq = tensor(q, q);
    return semi_trivial_cone(diagonal_attaching_map(q, qq, c, n));
}

DiskBundleModel conf2_disk_bundle(const PdAlgebra& q, const SparseVec& euler, int rank, bool truncate)
{
    DiskBundleAlgebra bundle = disk_bundle_algebra(q, euler, rank);
    const int n = bundle.p.dim;
    PrettyModel pm = pretty_model(bundle.p, q.algebra, bundle.phi);
    TruncatedDiagonal td = truncated_diagonal_shriek(pm);
    Conf2Model pretty_route = conf2_pretty(pm, td, truncate);

    const CdgaPtr qq = tensor(q.algebra, q.algebra);
    const SparseVec delta_q = diagonal_class(q);
    const SparseVec direct = qq->mul(delta_q, tensor_element(q.algebra->unit(), euler, q.algebra->dim()));
    const ModuleMorphism f = diagonal_attaching_map(q.algebra, qq, direct, n);
    Conf2Model direct_route;
    direct_route.ambient = qq;
    direct_route.cone = truncate ? truncated_semitrivial_cone(f, 2 * n - 3, n) : semi_trivial_cone(f);
    direct_route.hypotheses = pretty_route.hypotheses;

    std::string disagreement;
    if (!(*pm.p_mod_i.algebra == *q.algebra))
        disagreement = "P/I differs from Q under the canonical basis matching";
    else if (!(td.diagonal == direct))
        disagreement = "truncated diagonal differs from Delta_Q (1 (x) e)";
    else if (!(*pretty_route.algebra() == *direct_route.algebra()))
        disagreement = "the two cone algebras have different structure constants";

    SquareComparison square = check_kernel_square(pm, td);
    const bool agree = disagreement.empty();
    return DiskBundleModel{std::move(bundle), std::move(pm),           std::move(td),         direct,
                           std::move(pretty_route), std::move(direct_route), agree, std::move(disagreement),
                           std::move(square)};
}

}  // namespace ratmod

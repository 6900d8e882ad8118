#include "ratmod/analysis.hpp"

#include "ratmod/constructions.hpp"
#include "ratmod/error.hpp"

namespace ratmod {

CohomologyRing::CohomologyRing(CdgaPtr a) : a_(std::move(a)), h_(*a_)
{
    const std::size_t n = h_.dim();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table_[i * n + j] = h_.class_of(a_->mul(h_.representative(i), h_.representative(j)));
}

SparseVec CohomologyRing::mul(const SparseVec& x, const SparseVec& y) const
{
    SparseVec out;
    for (const auto& [i, c] : x)
        for (const auto& [j, e] : y)
            out.axpy(c * e, product(i, j));
    return out;
}

SparseVec CohomologyRing::unit() const { return h_.class_of(a_->unit()); }

SparseVec CohomologyRing::lift(const SparseVec& cls) const
{
    SparseVec out;
    for (const auto& [i, c] : cls)
        out.axpy(c, h_.representative(i));
    return out;
}

std::vector<std::size_t> poincare_series(const Cdga& a, int max_degree)
{
    return Cohomology(a).betti(max_degree);
}

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::optional<int> class_degree(const CohomologyRing& ring, const SparseVec& v, const char* what)
{
    try {
        return ring.space().degree_of(v);
    } catch (const Error&) {
        throw Error(ErrorKind::usage, std::string("Massey argument ") + what + " is not homogeneous");
    }
}

}  // namespace

MasseyResult triple_massey(const CohomologyRing& ring, const SparseVec& a, const SparseVec& b, const SparseVec& c)
{
    const Cohomology& h = ring.cohomology();
    const Cdga& alg = *ring.algebra();
    const SparseVec alpha = ring.lift(a), beta = ring.lift(b), gamma = ring.lift(c);
    const auto x = h.primitive(alg.mul(alpha, beta));
    const auto y = h.primitive(alg.mul(beta, gamma));
    if (!x || !y) {
        MasseyResult r;
        r.a = a;
        r.b = b;
        r.c = c;
        r.reason = !x ? "ab is not zero in cohomology" : "bc is not zero in cohomology";
        class_degree(ring, a, "a");
        class_degree(ring, b, "b");
        class_degree(ring, c, "c");
        return r;
    }
    return triple_massey(ring, a, b, c, *x, *y);
}

MasseyResult triple_massey(const CohomologyRing& ring, const SparseVec& a, const SparseVec& b, const SparseVec& c,
                           const SparseVec& x, const SparseVec& y)
{
    MasseyResult r;
    r.a = a;
    r.b = b;
    r.c = c;
    const auto da = class_degree(ring, a, "a");
    const auto db = class_degree(ring, b, "b");
    const auto dc = class_degree(ring, c, "c");
    if (!da || !db || !dc) {
        r.reason = "zero class";
        return r;
    }
    const Cdga& alg = *ring.algebra();
    const Cohomology& h = ring.cohomology();
    const SparseVec alpha = ring.lift(a), beta = ring.lift(b), gamma = ring.lift(c);
    if (alg.d(x) != alg.mul(alpha, beta))
        throw Error(ErrorKind::usage, "chosen x does not satisfy dx = ab");
    if (alg.d(y) != alg.mul(beta, gamma))
        throw Error(ErrorKind::usage, "chosen y does not satisfy dy = bc");

    r.defined = true;
    r.degree = *da + *db + *dc - 1;
    const SparseVec rep = alg.mul(alpha, y) - alg.mul(x, gamma).scaled(sign(*da));
    r.representative = h.class_of(rep);

    std::vector<SparseVec> spanning;
    for (std::size_t i : ring.space().in_degree(*db + *dc - 1))
        spanning.push_back(ring.mul(a, SparseVec::basis(i)));
    for (std::size_t i : ring.space().in_degree(*da + *db - 1))
        spanning.push_back(ring.mul(SparseVec::basis(i), c));
    std::vector<SparseVec> nonzero;
    for (auto& v : spanning)
        if (!v.is_zero())
            nonzero.push_back(std::move(v));
    r.indeterminacy = span_basis(nonzero, ring.space());
    r.nontrivial = !r.representative.is_zero() && !in_span(r.representative, r.indeterminacy, ring.space());
    return r;
}

std::vector<MasseyResult> nontrivial_massey_search(const CohomologyRing& ring)
{
    const GradedSpace& hs = ring.space();
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < hs.dim(); ++i)
        if (hs.degree(i) > 0)
            positive.push_back(i);

    std::map<int, MasseyResult> found;
    for (std::size_t i : positive)
        for (std::size_t j : positive) {
            if (!ring.product(i, j).is_zero())
                continue;
            for (std::size_t k : positive) {
                const int deg = hs.degree(i) + hs.degree(j) + hs.degree(k) - 1;
                if (found.count(deg) || !ring.product(j, k).is_zero())
                    continue;
                MasseyResult r = triple_massey(ring, SparseVec::basis(i), SparseVec::basis(j), SparseVec::basis(k));
                if (r.nontrivial)
                    found.emplace(deg, std::move(r));
            }
        }
    std::vector<MasseyResult> out;
    for (auto& [deg, r] : found)
        out.push_back(std::move(r));
    return out;
}

std::map<int, std::size_t> presented_dimensions(const std::vector<Generator>& generators,
                                                const std::vector<Polynomial>& relations, int max_degree)
{
    std::map<int, std::size_t> dims;
    for (int deg = 0; deg <= max_degree; ++deg) {
        const std::vector<Monomial> monos = monomials_of_degree(deg, generators);
        std::map<Monomial, std::size_t> position;
        for (std::size_t k = 0; k < monos.size(); ++k)
            position.emplace(monos[k], k);
        std::vector<Column> rows;
        for (const auto& rel : relations) {
            const auto rd = polynomial_degree(rel, generators);
            if (!rd || *rd > deg)
                continue;
            for (const auto& m : monomials_of_degree(deg - *rd, generators)) {
                const Polynomial rm = multiply(rel, Polynomial::monomial(m), generators);
                if (rm.is_zero())
                    continue;
                Column row(monos.size());
                for (const auto& [mono, c] : rm.terms())
                    row[position.at(mono)] = c;
                rows.push_back(std::move(row));
            }
        }
        const std::size_t rank = rank_of_columns(rows, monos.size());
        if (monos.size() > rank)
            dims[deg] = monos.size() - rank;
    }
    return dims;
}

namespace {

SparseVec evaluate_monomial(const CohomologyRing& ring, const Monomial& m, const std::vector<SparseVec>& images)
{
    SparseVec out = ring.unit();
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int e = 0; e < m[g]; ++e)
            out = ring.mul(out, images[g]);
    return out;
}

SparseVec evaluate_polynomial(const CohomologyRing& ring, const Polynomial& p, const std::vector<SparseVec>& images)
{
    SparseVec out;
    for (const auto& [m, c] : p.terms())
        out.axpy(c, evaluate_monomial(ring, m, images));
    return out;
}

}  // namespace

PresentationCheck verify_presentation(const CohomologyRing& ring, const std::vector<Generator>& generators,
                                      const std::vector<SparseVec>& images, const std::vector<Polynomial>& relations,
                                      int max_degree)
{
    if (images.size() != generators.size())
        throw Error(ErrorKind::usage, "presentation check needs one image per generator");
    PresentationCheck out;
    const GradedSpace& hs = ring.space();
    auto violate = [&](std::string what) {
        out.pass = false;
        out.violations.push_back(std::move(what));
    };

    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto deg = hs.degree_of(images[g]);
        if (deg && *deg != generators[g].degree)
            violate("generator " + generators[g].name + " has degree " + std::to_string(generators[g].degree) +
                    " but its image " + hs.format(images[g]) + " has degree " + std::to_string(*deg));
    }

    for (const auto& rel : relations) {
        const SparseVec v = evaluate_polynomial(ring, rel, images);
        if (!v.is_zero()) {
            const auto deg = polynomial_degree(rel, generators);
            violate("relation " + format(rel, generators) + " evaluates to " + hs.format(v) + " in degree " +
                    std::to_string(deg.value_or(0)));
        }
    }

    out.presented_dims = presented_dimensions(generators, relations, max_degree);
    for (int deg = 0; deg <= max_degree; ++deg) {
        const std::size_t hd = hs.dim_in_degree(deg);
        if (hd > 0)
            out.ring_dims[deg] = hd;
        std::vector<SparseVec> spanned;
        for (const auto& m : monomials_of_degree(deg, generators)) {
            SparseVec v = evaluate_monomial(ring, m, images);
            if (!v.is_zero())
                spanned.push_back(std::move(v));
        }
        const std::size_t got = span_basis(spanned, hs).size();
        if (got < hd)
            violate("generators span only " + std::to_string(got) + " of the " + std::to_string(hd) +
                    " dimensions of H^" + std::to_string(deg));
        const std::size_t pd = out.presented_dims.count(deg) ? out.presented_dims.at(deg) : 0;
        if (pd != hd)
            violate("presented algebra has dimension " + std::to_string(pd) + " in degree " + std::to_string(deg) +
                    " but H^" + std::to_string(deg) + " has dimension " + std::to_string(hd));
    }
    return out;
}

}  // namespace ratmod

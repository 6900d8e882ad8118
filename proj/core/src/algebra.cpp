#include "ratmod/algebra.hpp"

#include "ratmod/error.hpp"

#include <map>
#include <sstream>

namespace ratmod {

namespace {

constexpr std::size_t kMaxWitnessesPerAxiom = 16;

class ReportBuilder {
public:
    void add(const std::string& axiom, const std::string& witness)
    {
        if (counts_[axiom]++ < kMaxWitnessesPerAxiom)
            report_.push_back(Violation{axiom, witness});
    }
    AxiomReport take() { return std::move(report_); }

private:
    AxiomReport report_;
    std::map<std::string, std::size_t> counts_;
};

std::string tuple_name(const GradedSpace& s, std::initializer_list<std::size_t> idx)
{
    std::string out = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first)
            out += ", ";
        out += s.name(i);
        first = false;
    }
    return out + ")";
}

bool homogeneous_of(const GradedSpace& s, const SparseVec& v, int degree)
{
    for (const auto& [i, c] : v)
        if (s.degree(i) != degree)
            return false;
    return true;
}

void check_differential(const GradedSpace& s, const LinearMap& d, ReportBuilder& rb)
{
    if (d.source_dim != s.dim() || d.target_dim != s.dim() || d.columns.size() != s.dim()) {
        rb.add("differential degree", "differential has wrong shape");
        return;
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (!homogeneous_of(s, d.columns[i], s.degree(i) + 1))
            rb.add("differential degree", tuple_name(s, {i}));
        if (!d.apply(d.columns[i]).is_zero())
            rb.add("d^2 = 0", tuple_name(s, {i}));
    }
}

}  // namespace

Cdga::Cdga(GradedSpace space, SparseVec unit, std::vector<SparseVec> products, LinearMap differential)
    : space_(std::move(space)), unit_(std::move(unit)), products_(std::move(products)), d_(std::move(differential))
{
    if (products_.size() != space_.dim() * space_.dim())
        throw Error(ErrorKind::internal, "product table has wrong size");
    if (d_.columns.size() != space_.dim())
        throw Error(ErrorKind::internal, "differential has wrong size");
}

SparseVec Cdga::mul(const SparseVec& a, const SparseVec& b) const
{
    SparseVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            out.axpy(x * y, product(i, j));
    return out;
}

bool Cdga::is_connected() const
{
    if (space_.dim() == 0 || space_.min_degree() < 0)
        return false;
    return space_.dim_in_degree(0) == 1 && !unit_.is_zero();
}

bool operator==(const Cdga& a, const Cdga& b)
{
    return a.space_ == b.space_ && a.unit_ == b.unit_ && a.products_ == b.products_ && a.d_ == b.d_;
}

bool same_algebra(const CdgaPtr& a, const CdgaPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

DgModule::DgModule(CdgaPtr base, GradedSpace space, LinearMap differential, std::vector<SparseVec> action)
    : base_(std::move(base)), space_(std::move(space)), d_(std::move(differential)), action_(std::move(action))
{
    if (!base_)
        throw Error(ErrorKind::internal, "module without base algebra");
    if (action_.size() != base_->dim() * space_.dim())
        throw Error(ErrorKind::internal, "action table has wrong size");
    if (d_.columns.size() != space_.dim())
        throw Error(ErrorKind::internal, "module differential has wrong size");
}

SparseVec DgModule::act(const SparseVec& a, const SparseVec& m) const
{
    SparseVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : m)
            out.axpy(x * y, action(i, j));
    return out;
}

bool operator==(const DgModule& a, const DgModule& b)
{
    return same_algebra(a.base_, b.base_) && a.space_ == b.space_ && a.d_ == b.d_ && a.action_ == b.action_;
}

AxiomReport verify_cdga(const Cdga& a)
{
    ReportBuilder rb;
    const GradedSpace& s = a.space();
    const std::size_t n = s.dim();
    check_differential(s, a.differential(), rb);

    if (!homogeneous_of(s, a.unit(), 0) || a.unit().is_zero())
        rb.add("unit", "unit is not a nonzero degree-0 element");
    else if (!a.d(a.unit()).is_zero())
        rb.add("unit", "d(1) != 0");

    for (std::size_t i = 0; i < n; ++i) {
        const SparseVec ei = SparseVec::basis(i);
        if (a.mul(a.unit(), ei) != ei || a.mul(ei, a.unit()) != ei)
            rb.add("unit", tuple_name(s, {i}));
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& ij = a.product(i, j);
            if (!homogeneous_of(s, ij, s.degree(i) + s.degree(j)))
                rb.add("product degree", tuple_name(s, {i, j}));
            const int sign = sign_of_parity(static_cast<long>(s.degree(i)) * s.degree(j));
            if (ij != a.product(j, i).scaled(sign))
                rb.add("graded commutativity", tuple_name(s, {i, j}));

            // Leibniz: d(ab) = (da)b + (-1)^{|a|} a(db)
            SparseVec rhs = a.mul(a.differential().columns[i], SparseVec::basis(j));
            rhs.axpy(sign_of_parity(s.degree(i)), a.mul(ei, a.differential().columns[j]));
            if (a.d(ij) != rhs)
                rb.add("Leibniz", tuple_name(s, {i, j}));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const SparseVec& jk = a.product(j, k);
                if (ij.is_zero() && jk.is_zero())
                    continue;
                if (a.mul(ij, SparseVec::basis(k)) != a.mul(SparseVec::basis(i), jk))
                    rb.add("associativity", tuple_name(s, {i, j, k}));
            }
        }
    return rb.take();
}

AxiomReport verify_module(const DgModule& m)
{
    ReportBuilder rb;
    const GradedSpace& s = m.space();
    const Cdga& a = m.base();
    const GradedSpace& as = a.space();
    check_differential(s, m.differential(), rb);

    for (std::size_t j = 0; j < s.dim(); ++j) {
        const SparseVec ej = SparseVec::basis(j);
        if (m.act(a.unit(), ej) != ej)
            rb.add("unit action", tuple_name(s, {j}));
    }
    for (std::size_t i = 0; i < as.dim(); ++i) {
        const SparseVec ei = SparseVec::basis(i);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            const SparseVec& am = m.action(i, j);
            if (!homogeneous_of(s, am, as.degree(i) + s.degree(j)))
                rb.add("action degree", as.name(i) + " . " + s.name(j));
            // d(am) = (da)m + (-1)^{|a|} a(dm)
            SparseVec rhs = m.act(a.differential().columns[i], SparseVec::basis(j));
            rhs.axpy(sign_of_parity(as.degree(i)), m.act(ei, m.differential().columns[j]));
            if (m.d(am) != rhs)
                rb.add("module Leibniz", as.name(i) + " . " + s.name(j));
        }
    }
    for (std::size_t i = 0; i < as.dim(); ++i)
        for (std::size_t k = 0; k < as.dim(); ++k) {
            const SparseVec& ik = a.product(i, k);
            for (std::size_t j = 0; j < s.dim(); ++j) {
                const SparseVec& kj = m.action(k, j);
                if (ik.is_zero() && kj.is_zero())
                    continue;
                if (m.act(ik, SparseVec::basis(j)) != m.act(SparseVec::basis(i), kj))
                    rb.add("action associativity", as.name(i) + " . " + as.name(k) + " . " + s.name(j));
            }
        }
    return rb.take();
}

AxiomReport verify_morphism(const ModuleMorphism& f)
{
    ReportBuilder rb;
    if (!f.source || !f.target) {
        rb.add("morphism shape", "missing source or target");
        return rb.take();
    }
    const DgModule& src = *f.source;
    const DgModule& tgt = *f.target;
    if (f.map.source_dim != src.dim() || f.map.target_dim != tgt.dim() || f.map.columns.size() != src.dim()) {
        rb.add("morphism shape", "matrix does not match source/target dimensions");
        return rb.take();
    }
    for (std::size_t j = 0; j < src.dim(); ++j) {
        if (!homogeneous_of(tgt.space(), f.map.columns[j], src.space().degree(j)))
            rb.add("degree 0", src.space().name(j));
        if (tgt.d(f.map.columns[j]) != f(src.d(SparseVec::basis(j))))
            rb.add("does not commute with differentials", src.space().name(j));
    }
    if (!same_algebra(src.base_ptr(), tgt.base_ptr())) {
        rb.add("not A-linear", "source and target are modules over different algebras");
        return rb.take();
    }
    const Cdga& a = src.base();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            const SparseVec lhs = f(src.action(i, j));
            const SparseVec rhs = tgt.act(SparseVec::basis(i), f.map.columns[j]);
            if (lhs != rhs)
                rb.add("not A-linear", a.space().name(i) + " . " + src.space().name(j));
        }
    return rb.take();
}

AxiomReport verify_morphism(const AlgebraMorphism& f)
{
    ReportBuilder rb;
    if (!f.source || !f.target) {
        rb.add("morphism shape", "missing source or target");
        return rb.take();
    }
    const Cdga& src = *f.source;
    const Cdga& tgt = *f.target;
    if (f.map.source_dim != src.dim() || f.map.target_dim != tgt.dim() || f.map.columns.size() != src.dim()) {
        rb.add("morphism shape", "matrix does not match source/target dimensions");
        return rb.take();
    }
    for (std::size_t j = 0; j < src.dim(); ++j) {
        if (!homogeneous_of(tgt.space(), f.map.columns[j], src.space().degree(j)))
            rb.add("degree 0", src.space().name(j));
        if (tgt.d(f.map.columns[j]) != f(src.d(SparseVec::basis(j))))
            rb.add("does not commute with differentials", src.space().name(j));
    }
    if (f(src.unit()) != tgt.unit())
        rb.add("unit", "f(1) != 1");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            if (f(src.product(i, j)) != tgt.mul(f.map.columns[i], f.map.columns[j]))
                rb.add("not multiplicative", tuple_name(src.space(), {i, j}));
    return rb.take();
}

bool has_axiom(const AxiomReport& report, const std::string& axiom)
{
    for (const auto& v : report)
        if (v.axiom == axiom)
            return true;
    return false;
}

std::string describe(const AxiomReport& report)
{
    std::ostringstream os;
    for (const auto& v : report)
        os << v.axiom << ": " << v.witness << "\n";
    return os.str();
}

void assert_valid(const AxiomReport& report, const std::string& what)
{
    if (!report.empty())
        throw Error(ErrorKind::internal, what + " failed its axiom check:\n" + describe(report));
}

}  // namespace ratmod

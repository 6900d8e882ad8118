#pragma once

// Sign conventions used by every construction in the library.
//
//   suspension   (s^k M)^p = M^{k+p}, so s^k m has degree |m| - k
//                d(s^k m)   = (-1)^k s^k(dm)
//                a . s^k m  = (-1)^{k|a|} s^k(a m)
//                (s^k f)(s^k m) = s^k f(m)
//   dual         #M = hom(M, Q) graded so that #m has degree -|m|
//                (d g)(m)   = -(-1)^{|g|} g(dm)
//                (a . g)(m) = (-1)^{|a||g|} g(a m)
//                (#f)(g)    = g o f
//   dual shift   s^k #M, so the dual of m has degree -|m| - k
//   tensor       d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
//                (a (x) b)(x (x) y) = (-1)^{|b||x|} (a x) (x) (b y)
//                (f (x) g)(x (x) y) = f(x) (x) g(y)      (degree-0 maps only)
//   cone         C(f) = N (+) sQ, delta(n, sq) = (dn + f(q), -s dq),
//                sq uses the suspension rules above with k = 1

#include "ratmod/algebra.hpp"

#include <string>
#include <vector>

namespace ratmod {

CdgaPtr ground_field();
bool is_ground_field(const Cdga& a);

ModulePtr module_of(const CdgaPtr& a);

CdgaPtr tensor(const CdgaPtr& x, const CdgaPtr& y);
// Module over `base`, which must be tensor(m.base, n.base) (same basis order).
// When both modules are plain complexes (over Q) and base is null, the result
// is again a complex over Q.
ModulePtr tensor(const ModulePtr& m, const ModulePtr& n, const CdgaPtr& base = nullptr);
ModuleMorphism tensor(const ModuleMorphism& f, const ModuleMorphism& g, const ModulePtr& source, const ModulePtr& target);
AlgebraMorphism tensor(const AlgebraMorphism& f, const AlgebraMorphism& g, const CdgaPtr& source, const CdgaPtr& target);

// u (x) v inside X (x) Y, where Y has dimension dim_y.
SparseVec tensor_element(const SparseVec& u, const SparseVec& v, std::size_t dim_y);
// Kronecker product of degree-0 linear maps in the pair-index order of tensor().
LinearMap tensor(const LinearMap& f, const LinearMap& g);

// Multiplication A (x) A -> A as a CDGA morphism; `a_tensor_a` must be tensor(a, a).
AlgebraMorphism multiplication(const CdgaPtr& a, const CdgaPtr& a_tensor_a);

std::string suspended_name(const std::string& name, int k);

ModulePtr suspend(const ModulePtr& m, int k);
ModuleMorphism suspend(const ModuleMorphism& f, int k);

ModulePtr dual(const ModulePtr& m);
ModulePtr dual_shift(const ModulePtr& m, int k);
// s^k #f : s^k #target -> s^k #source.
ModuleMorphism dual_shift(const ModuleMorphism& f, int k);

ModulePtr restrict_scalars(const ModulePtr& m, const AlgebraMorphism& phi);
ModuleMorphism restrict_scalars(const ModuleMorphism& f, const AlgebraMorphism& phi);
// phi viewed as a map of source-modules: source -> restrict(target).
ModuleMorphism as_module_morphism(const AlgebraMorphism& phi);

// Free module on homogeneous generators; element b.u is stored at index
// generator * dim(A) + b and d(u) = 0.
ModulePtr free_module(const CdgaPtr& a, const std::vector<BasisElement>& generators);
ModuleMorphism free_module_map(const ModulePtr& free, const ModulePtr& target, const std::vector<SparseVec>& images);

ModuleMorphism identity(const ModulePtr& m);
AlgebraMorphism identity(const CdgaPtr& a);
ModuleMorphism zero_map(const ModulePtr& source, const ModulePtr& target);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

// Homogeneous bases, degree by degree.
std::vector<SparseVec> kernel_basis(const LinearMap& f, const GradedSpace& source, const GradedSpace& target);
std::vector<SparseVec> image_basis(const LinearMap& f, const GradedSpace& source, const GradedSpace& target);
// Homogeneous basis of the span of arbitrary homogeneous vectors.
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vectors, const GradedSpace& space);
bool is_surjective(const LinearMap& f, const GradedSpace& source, const GradedSpace& target);
bool is_injective(const LinearMap& f, const GradedSpace& source, const GradedSpace& target);
// span(a) == span(b) inside `space`.
bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, const GradedSpace& space);
bool in_span(const SparseVec& v, const std::vector<SparseVec>& vectors, const GradedSpace& space);

struct Submodule {
    ModulePtr module;
    ModuleMorphism inclusion;
};
// Sub-dg-module spanned by homogeneous vectors; throws Error(internal) when the
// span is not closed under d and the action.
Submodule submodule(const ModulePtr& m, const std::vector<SparseVec>& vectors);

struct QuotientSpace {
    GradedSpace space;
    LinearMap projection;          // old -> new
    std::vector<SparseVec> section;  // new basis element -> representative in old
};
// Representatives are standard basis vectors chosen by complement_in.
QuotientSpace quotient_space(const GradedSpace& space, const std::vector<SparseVec>& subspace);

struct ModuleQuotient {
    ModulePtr module;
    ModuleMorphism projection;
    std::vector<SparseVec> section;
};
ModuleQuotient quotient_module(const ModulePtr& m, const std::vector<SparseVec>& submodule_vectors);

struct CdgaQuotient {
    CdgaPtr algebra;
    AlgebraMorphism projection;
    std::vector<SparseVec> section;
};
// Throws Error(axiom, ...) when the span is not a differential ideal.
CdgaQuotient quotient_cdga(const CdgaPtr& a, const std::vector<SparseVec>& ideal_vectors);
bool is_differential_ideal(const Cdga& a, const std::vector<SparseVec>& vectors);

}  // namespace ratmod

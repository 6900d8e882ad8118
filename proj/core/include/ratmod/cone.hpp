#pragma once

#include "ratmod/cohomology.hpp"
#include "ratmod/constructions.hpp"

#include <optional>
#include <string>

namespace ratmod {

enum class FiberNaming {
    prefix,    // s(name), kept verbatim: "s(s^-8(1))"
    collapse,  // s(s^-1(m)) becomes m
};

// Mapping cone N (+) sQ of f: Q -> N. The first dim(N) basis elements are N,
// the rest are the suspended fiber in basis order.
struct ConeModel {
    ModuleMorphism attaching;  // f: Q -> N
    ModulePtr module;          // C(f) as a dg-module over the base algebra
    ModuleMorphism target_inclusion;  // N -> C(f)
    ModuleMorphism projection;        // C(f) -> sQ
    ModulePtr suspended_fiber;        // sQ

    // Present when the cone carries the semi-trivial product. After truncation
    // `algebra` is tau^{<=N} C(f) and `truncation` maps C(f) onto it.
    CdgaPtr algebra;
    std::optional<AlgebraMorphism> inclusion;  // A -> algebra
    std::optional<int> truncation_degree;
    std::optional<LinearMap> truncation;

    std::size_t target_dim() const { return attaching.target->dim(); }
    bool is_semitrivial() const { return algebra != nullptr; }
};

ConeModel mapping_cone(const ModuleMorphism& f, FiberNaming naming = FiberNaming::prefix);

// Degree-wise exactness of H(Q) -> H(N) -> H(C) -> H(Q)[1]; returns a description
// of the first failure.
std::optional<std::string> cone_exactness_failure(const ConeModel& cone);

struct HomotopyKernel {
    ConeModel cone;            // s^{-1}N (+) M
    ModuleMorphism to_source;  // hoker f -> M
    // For surjective f: ker f and its inclusion m -> (0, m), checked to be a
    // quasi-isomorphism.
    std::optional<Submodule> kernel;
    std::optional<ModuleMorphism> kernel_inclusion;
};
HomotopyKernel homotopy_kernel(const ModuleMorphism& f);

struct BalanceCheck {
    bool balanced = true;
    std::string witness;
};
// f: Q -> A where the target is A as a module over itself.
BalanceCheck is_balanced(const ModuleMorphism& f);

// Semi-trivial product on A (+) sQ without checking the CDGA axioms. Exposed
// for tests of the balanced criterion; model builders use semi_trivial_cone.
CdgaPtr semi_trivial_structure(const ModuleMorphism& f);

// Throws Error(hypothesis, "balanced condition fails ...") when f is not balanced.
ConeModel semi_trivial_cone(const ModuleMorphism& f);

struct ModuleTruncation {
    ModulePtr source;
    int bound = 0;
    std::vector<SparseVec> ideal;
    ModulePtr quotient;
    ModuleMorphism projection;
    std::vector<SparseVec> section;
};

struct CdgaTruncation {
    CdgaPtr source;
    int bound = 0;
    std::vector<SparseVec> ideal;
    CdgaPtr quotient;
    AlgebraMorphism projection;
    std::vector<SparseVec> section;
};

// Basis of the truncation ideal: a standard complement of the degree-N cocycles
// in degree N, and everything above N.
std::vector<SparseVec> truncation_ideal(const GradedSpace& space, const LinearMap& d, int bound);

// Both throw Error(hypothesis, "truncation ideal need not be stable") over a
// non-connected algebra.
ModuleTruncation truncate(const ModulePtr& r, int bound);
CdgaTruncation truncate(const CdgaPtr& a, int bound);

// tau^{<=N} of the semi-trivial cone of f: Q -> A, where Q^{<p} = 0.
// Errors: "connectivity bound false" when Q^{<p} != 0, "degree window violated"
// when N > 2p - 3 (both Error(hypothesis)).
ConeModel truncated_semitrivial_cone(const ModuleMorphism& f, int bound, int p);

struct SquareModel {
    AlgebraMorphism beta;              // B -> dB
    CdgaPtr tensor;                     // B (x) B
    std::vector<SparseVec> kernel;      // basis of ker beta in B
    std::vector<SparseVec> kernel_square;  // ker beta (x) ker beta in B (x) B
    CdgaPtr quotient;                   // (B (x) B) / (ker beta (x) ker beta)
    AlgebraMorphism alpha;              // B (x) B -> quotient
    AlgebraMorphism mu;                 // B (x) B -> B
    AlgebraMorphism mu_tilde;           // quotient -> dB
};

// Quotient of B (x) B by ker beta (x) ker beta, with the pullback property
// over dB (x) dB and the commuting square checked.
SquareModel square_model(const AlgebraMorphism& beta);

}  // namespace ratmod

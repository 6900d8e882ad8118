#pragma once

#include "ratmod/poincare.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratmod {

// Model of the complement of a subpolyhedron K^k in a manifold W^n, given a
// model A of W, an A-module Q with Q^{<n-k} = 0 and the attaching map
// phi^!: Q -> A.
struct ComplementModel {
    ConeModel cone;
    int bound = 0;
    // Set when r < 2k - n + 2: the output is a model up to degree `bound` only.
    bool partial = false;
    std::vector<std::string> hypotheses;
};
ComplementModel complement_model(const ModuleMorphism& phi_shriek, int n, int k, int r);

struct Conf2Model {
    CdgaPtr ambient;  // B (x) B or P/I (x) P/I
    ConeModel cone;   // cone.algebra is the model, cone.inclusion the map from ambient
    std::vector<std::string> hypotheses;
    std::vector<std::string> details;

    const CdgaPtr& algebra() const { return cone.algebra; }
};

// tau^{<=2n-3} C(delta^!) for delta^!: D -> B (x) B, or D -> B' (x) B' when a
// quasi-isomorphism B -> B' is supplied. Cohomology of D and of the cone is
// compared against s^{-2n} #ker(beta) and the cone of s^{-2n} #mu-bar; the
// outcome is recorded in `details`.
Conf2Model conf2_general(const AlgebraMorphism& beta, const ModuleMorphism& delta_shriek, int n,
                         const std::optional<AlgebraMorphism>& replacement = std::nullopt);

// (P/I (x) P/I) (+)_{Delta-bar^!} s s^{-n}(P/I); truncated to degree 2n - 3
// when `truncate` is set.
Conf2Model conf2_pretty(const PrettyModel& pm, bool truncate = false);
Conf2Model conf2_pretty(const PrettyModel& pm, const TruncatedDiagonal& td, bool truncate = false);

// Pretty model of the augmentation P -> Q; its ideal I is Q.omega.
PrettyModel augmentation_pretty_model(const PdAlgebra& p);
// P-bar = P / Q.omega through augmentation_pretty_model.
Conf2Model conf2_punctured(const PdAlgebra& p);

struct DiskBundleAlgebra {
    PdAlgebra p;        // Q (x) wedge(z)/(z^2 - e z), fundamental class -omega z
    AlgebraMorphism phi;  // q1 + q2 z -> q1 + q2 e
};
// Errors: "rank must be even" (usage), rank < 4 (hypothesis), e not a cocycle
// or of the wrong degree (axiom / usage).
DiskBundleAlgebra disk_bundle_algebra(const PdAlgebra& q, const SparseVec& euler, int rank);

struct DiskBundleModel {
    DiskBundleAlgebra bundle;
    PrettyModel pretty;
    TruncatedDiagonal diagonal;
    SparseVec direct_diagonal;  // Delta_Q (1 (x) e) in Q (x) Q
    Conf2Model pretty_route;
    Conf2Model direct_route;
    bool pipelines_agree = false;
    std::string disagreement;
    SquareComparison square;
};
DiskBundleModel conf2_disk_bundle(const PdAlgebra& q, const SparseVec& euler, int rank, bool truncate = false);

// Cone over Q (x) Q attached along s^{-n}x -> c (1 (x) x) for c in Q (x) Q.
ConeModel diagonal_cone(const CdgaPtr& q, const SparseVec& c, int n);

}  // namespace ratmod

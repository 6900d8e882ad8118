#pragma once

#include "ratmod/cone.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ratmod {

// Connected CDGA with formal dimension n and orientation eps(omega) = 1.
struct PdAlgebra {
    CdgaPtr algebra;
    int dim = 0;
    SparseVec fundamental_class;
    // pairings[k](i, j) = eps(a_i b_j) for the standard bases of P^k and P^{n-k}.
    std::map<int, Matrix> pairings;

    Scalar epsilon(const SparseVec& v) const;
};

// Throws Error(axiom, ...) naming the failing degree when the pairing is
// degenerate or dimensions do not match; any nonzero multiple of a fundamental
// class is accepted and rescaled so that eps(omega) = 1.
PdAlgebra verify_pd(const CdgaPtr& p, int n, const SparseVec& orientation_class);

struct DualBasis {
    std::vector<SparseVec> basis;  // a_i
    std::vector<SparseVec> duals;  // a_i*, eps(a_i a_j*) = delta_ij
};
// Dual of the standard basis, or of a custom homogeneous basis of P.
DualBasis dual_basis(const PdAlgebra& pd);
DualBasis dual_basis(const PdAlgebra& pd, const std::vector<SparseVec>& basis);

// sum (-1)^{|a_i|} a_i (x) a_i* in tensor(P, P).
SparseVec diagonal_class(const PdAlgebra& pd);
SparseVec diagonal_class(const PdAlgebra& pd, const DualBasis& basis);

// theta(alpha)(beta) = eps(alpha beta) as a P-module isomorphism P -> s^{-n} #P.
ModuleMorphism theta(const PdAlgebra& pd);
// Degree-wise inverse of theta.
ModuleMorphism theta_inverse(const PdAlgebra& pd);

// phi^! = theta^{-1} o s^{-n} #phi : s^{-n} #Q -> P, Q viewed as a P-module.
ModuleMorphism shriek(const PdAlgebra& pd, const AlgebraMorphism& phi);

struct PrettyModel {
    PdAlgebra p;
    CdgaPtr q;
    AlgebraMorphism phi;
    ModuleMorphism phi_shriek;       // s^{-n} #Q -> P
    ModuleMorphism phi_phi_shriek;   // s^{-n} #Q -> Q over Q
    BalanceCheck phi_shriek_balance;
    BalanceCheck phi_phi_shriek_balance;
    ConeModel b;                     // P (+)_{phi^!} s s^{-n} #Q
    ConeModel db;                    // Q (+)_{phi phi^!} s s^{-n} #Q
    AlgebraMorphism beta;            // phi (+) id
    bool beta_surjective = false;
    std::vector<SparseVec> ideal;    // I = phi^!(s^{-n} #Q)
    CdgaQuotient p_mod_i;
};

// Errors: Error(hypothesis) when phi phi^! is not Q-linear or either map is
// unbalanced (witness in the message).
PrettyModel pretty_model(const PdAlgebra& p, const CdgaPtr& q, const AlgebraMorphism& phi);

struct TruncatedDiagonal {
    CdgaPtr quotient;          // P/I
    CdgaPtr square;            // P/I (x) P/I
    SparseVec diagonal;        // (pi (x) pi)(Delta)
    ModuleMorphism shriek;     // s^{-n}(P/I) -> P/I (x) P/I, s^{-n}x -> Delta-bar (1 (x) x)
    BalanceCheck balance;
};
TruncatedDiagonal truncated_diagonal_shriek(const PrettyModel& pm);

// Comparison of the two composites s^{-n}(P/I) -> s^{-2n} #(K (x) K), K = ker phi,
// evaluated on basis elements of K (x) K.
struct SquareComparison {
    bool commutes = true;
    bool commutes_up_to_sign = true;
    // degree |k| of the first tensor factor -> +1 or -1 where the two paths
    // agree up to that sign; only degrees with nonzero values appear.
    std::map<int, int> sign_by_degree;
    std::string detail;
};
SquareComparison check_kernel_square(const PrettyModel& pm, const TruncatedDiagonal& td);

}  // namespace ratmod

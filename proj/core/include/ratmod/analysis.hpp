#pragma once

#include "ratmod/cohomology.hpp"
#include "ratmod/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratmod {

// H(A) with the induced product.
class CohomologyRing {
public:
    explicit CohomologyRing(CdgaPtr a);

    const CdgaPtr& algebra() const { return a_; }
    const Cohomology& cohomology() const { return h_; }
    const GradedSpace& space() const { return h_.space(); }
    std::size_t dim() const { return h_.dim(); }
    const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    SparseVec unit() const;
    // Cocycle representing a class given in H coordinates.
    SparseVec lift(const SparseVec& cls) const;

private:
    CdgaPtr a_;
    Cohomology h_;
    std::vector<SparseVec> table_;
};

// Dense dim H^0 .. dim H^max_degree.
std::vector<std::size_t> poincare_series(const Cdga& a, int max_degree);

struct MasseyResult {
    SparseVec a, b, c;  // H coordinates
    bool defined = false;
    int degree = 0;
    SparseVec representative;             // H coordinates
    std::vector<SparseVec> indeterminacy;  // basis of the indeterminacy subspace of H^degree
    bool nontrivial = false;
    std::string reason;  // why undefined
};

// <a, b, c> with representative a y - (-1)^{|a|} x c, dx = ab, dy = bc.
MasseyResult triple_massey(const CohomologyRing& ring, const SparseVec& a, const SparseVec& b, const SparseVec& c);
// Same, with chosen primitives x and y.
MasseyResult triple_massey(const CohomologyRing& ring, const SparseVec& a, const SparseVec& b, const SparseVec& c,
                           const SparseVec& x, const SparseVec& y);

// For each target degree, the first nontrivial product over triples of
// positive-degree H basis elements in lexicographic index order.
std::vector<MasseyResult> nontrivial_massey_search(const CohomologyRing& ring);

struct PresentationCheck {
    bool pass = true;
    std::vector<std::string> violations;
    std::map<int, std::size_t> presented_dims;
    std::map<int, std::size_t> ring_dims;
};

// Checks that the relations vanish on the images, that the images generate
// the ring, and that dim (free / relations)^p = dim H^p for p <= max_degree.
PresentationCheck verify_presentation(const CohomologyRing& ring, const std::vector<Generator>& generators,
                                      const std::vector<SparseVec>& images, const std::vector<Polynomial>& relations,
                                      int max_degree);

// Dimension of the free graded-commutative algebra modulo the ideal generated
// by the relations, degree by degree up to max_degree.
std::map<int, std::size_t> presented_dimensions(const std::vector<Generator>& generators,
                                                const std::vector<Polynomial>& relations, int max_degree);

}  // namespace ratmod

#pragma once

#include "ratmod/algebra.hpp"

#include <map>
#include <vector>

namespace ratmod {

// Cohomology of a finite-dimensional cochain complex with a chosen basis of
// representative cocycles.
class Cohomology {
public:
    Cohomology(const GradedSpace& space, const LinearMap& d);
    explicit Cohomology(const DgModule& m) : Cohomology(m.space(), m.differential()) {}
    explicit Cohomology(const Cdga& a) : Cohomology(a.space(), a.differential()) {}

    const GradedSpace& space() const { return h_; }
    std::size_t dim() const { return h_.dim(); }
    const std::vector<SparseVec>& representatives() const { return reps_; }
    const SparseVec& representative(std::size_t i) const { return reps_[i]; }
    const GradedSpace& complex() const { return c_; }

    bool is_cocycle(const SparseVec& v) const { return d_.apply(v).is_zero(); }
    bool is_coboundary(const SparseVec& v) const;
    // Coordinates of [v] in the H basis; throws Error(usage, "not a cocycle").
    SparseVec class_of(const SparseVec& v) const;
    // Some w with dw = v, or nullopt when v is not exact.
    std::optional<SparseVec> primitive(const SparseVec& v) const;

    std::map<int, std::size_t> dims() const { return h_.dims(); }
    // Dense list dim H^0, ..., dim H^max_degree.
    std::vector<std::size_t> betti(int max_degree) const;
    // Dense list from degree 0 to the highest nonzero degree.
    std::vector<std::size_t> betti() const;

private:
    struct Degree {
        std::vector<SparseVec> boundaries;  // basis of B^p
        Matrix basis;                       // columns: boundaries then representatives
    };

    GradedSpace c_;
    LinearMap d_;
    GradedSpace h_;
    std::vector<SparseVec> reps_;
    std::map<int, Degree> degrees_;
    std::map<int, std::vector<std::size_t>> h_in_degree_;
};

// Map induced on cohomology by a degree-0 cochain map f.
LinearMap induced_map(const LinearMap& f, const Cohomology& source, const Cohomology& target);

bool is_quasi_isomorphism(const LinearMap& f, const Cohomology& source, const Cohomology& target);

// Euler characteristic sum (-1)^p dim V^p.
long euler_characteristic(const GradedSpace& space);

}  // namespace ratmod

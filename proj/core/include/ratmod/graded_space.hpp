#pragma once

#include "ratmod/matrix.hpp"
#include "ratmod/sparse_vec.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ratmod {

struct BasisElement {
    std::string name;
    int degree = 0;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// Finite-dimensional graded Q-vector space with a named homogeneous basis.
// Names are unique across the whole space.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisElement> basis);

    std::size_t add(std::string name, int degree);

    std::size_t dim() const { return basis_.size(); }
    const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int degree(std::size_t i) const { return basis_[i].degree; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws on unknown name

    // Indices of the basis elements in degree p, in basis order.
    const std::vector<std::size_t>& in_degree(int p) const;
    std::size_t dim_in_degree(int p) const { return in_degree(p).size(); }
    // Degrees with nonzero dimension, ascending.
    std::vector<int> support() const;
    std::map<int, std::size_t> dims() const;
    int min_degree() const;  // 0 for the zero space
    int max_degree() const;  // 0 for the zero space

    // Degree of a homogeneous element; nullopt for zero, throws if inhomogeneous.
    std::optional<int> degree_of(const SparseVec& v) const;

    // Dense coordinates of v restricted to degree p, and back.
    Column restrict_to(const SparseVec& v, int p) const;
    SparseVec from_degree(const Column& coords, int p) const;

    std::string format(const SparseVec& v) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, std::size_t> index_;
    std::map<int, std::vector<std::size_t>> by_degree_;
};

// Linear map between graded spaces, homogeneous of the given degree, stored
// as the image of every source basis element.
struct LinearMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    int degree = 0;
    std::vector<SparseVec> columns;

    static LinearMap zero(std::size_t source_dim, std::size_t target_dim, int degree)
    {
        return LinearMap{source_dim, target_dim, degree, std::vector<SparseVec>(source_dim)};
    }
    static LinearMap identity(std::size_t dim);

    SparseVec apply(const SparseVec& v) const;
    // Block from source degree p to target degree p + degree.
    Matrix block(const GradedSpace& source, const GradedSpace& target, int p) const;
    bool is_zero() const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner);

// Inverse of GradedSpace::format: "0" or terms like "2*[x] - 1/3*[y (x) z]".
// Throws Error(usage) on malformed text or unknown names.
SparseVec parse_element(const std::string& text, const GradedSpace& space);

}  // namespace ratmod

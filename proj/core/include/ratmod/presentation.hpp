#pragma once

#include "ratmod/algebra.hpp"
#include "ratmod/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratmod {

// A CDGA given by generators, differentials and relations.
//
//   name = "S4"
//   bound = 4                     # optional when an orientation is given
//   relations = ["x^2"]
//   [[generators]]
//   name = "x"
//   degree = 4
//   [differentials]               # optional; missing generators are cycles
//   b = "a^2"
//   [orientation]                 # optional
//   degree = 4
//   class = "x"
struct Presentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<std::pair<std::string, std::string>> differentials;  // generator, polynomial
    std::vector<std::string> relations;
    std::optional<int> bound;
    struct Orientation {
        int degree = 0;
        std::string fundamental_class;
        friend bool operator==(const Orientation&, const Orientation&) = default;
    };
    std::optional<Orientation> orientation;

    int effective_bound() const;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Both throw Error(usage) on malformed input.
Presentation parse_presentation(const std::string& toml_text, const std::string& source_name = "<string>");
Presentation load_presentation(const std::string& path);
std::string to_toml(const Presentation& p);

// The presented algebra expanded to a monomial basis, degree by degree.
class ExpandedPresentation {
public:
    explicit ExpandedPresentation(Presentation p);

    const Presentation& presentation() const { return p_; }
    const CdgaPtr& algebra() const { return algebra_; }
    const std::vector<Monomial>& basis_monomials() const { return basis_; }
    // Generator degrees and names.
    const std::vector<Generator>& generators() const { return p_.generators; }

    SparseVec evaluate(const Polynomial& poly) const;
    SparseVec evaluate(const std::string& poly_text) const;

    // Fundamental class and formal dimension when an orientation was given.
    std::optional<int> formal_dimension() const;
    std::optional<SparseVec> fundamental_class() const;

private:
    struct DegreeData {
        std::vector<Monomial> monomials;     // descending lex
        Matrix rref;                         // rows: reduced ideal relations
        std::vector<std::size_t> pivots;     // pivot monomial positions
        std::vector<std::size_t> basis_pos;  // non-pivot monomial positions
        std::vector<std::size_t> basis_index;  // algebra index of each non-pivot
    };

    SparseVec normal_form(const Monomial& m) const;
    std::vector<Polynomial> generator_differentials() const;

    Presentation p_;
    std::vector<Monomial> basis_;
    std::map<int, DegreeData> degrees_;
    CdgaPtr algebra_;
};

}  // namespace ratmod

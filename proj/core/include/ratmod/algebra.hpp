#pragma once

#include "ratmod/graded_space.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ratmod {

// Finite-dimensional commutative differential graded algebra over Q, stored as
// a structure-constant table. Sign conventions for every construction in the
// library are listed in constructions.hpp.
class Cdga {
public:
    Cdga(GradedSpace space, SparseVec unit, std::vector<SparseVec> products, LinearMap differential);

    const GradedSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    const SparseVec& unit() const { return unit_; }
    const LinearMap& differential() const { return d_; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    const std::vector<SparseVec>& product_table() const { return products_; }
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    SparseVec d(const SparseVec& v) const { return d_.apply(v); }

    // Degree 0 is spanned by the unit and negative degrees vanish.
    bool is_connected() const;

    friend bool operator==(const Cdga& a, const Cdga& b);

private:
    GradedSpace space_;
    SparseVec unit_;
    std::vector<SparseVec> products_;
    LinearMap d_;
};

using CdgaPtr = std::shared_ptr<const Cdga>;

bool same_algebra(const CdgaPtr& a, const CdgaPtr& b);

// Left dg-module over a CDGA.
class DgModule {
public:
    DgModule(CdgaPtr base, GradedSpace space, LinearMap differential, std::vector<SparseVec> action);

    const Cdga& base() const { return *base_; }
    const CdgaPtr& base_ptr() const { return base_; }
    const GradedSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    const LinearMap& differential() const { return d_; }

    // Action of base basis element a on module basis element m.
    const SparseVec& action(std::size_t a, std::size_t m) const { return action_[a * dim() + m]; }
    const std::vector<SparseVec>& action_table() const { return action_; }
    SparseVec act(const SparseVec& a, const SparseVec& m) const;
    SparseVec d(const SparseVec& v) const { return d_.apply(v); }

    friend bool operator==(const DgModule& a, const DgModule& b);

private:
    CdgaPtr base_;
    GradedSpace space_;
    LinearMap d_;
    std::vector<SparseVec> action_;
};

using ModulePtr = std::shared_ptr<const DgModule>;

struct AlgebraMorphism {
    CdgaPtr source;
    CdgaPtr target;
    LinearMap map;

    SparseVec operator()(const SparseVec& v) const { return map.apply(v); }
};

// Degree-0 map of dg-modules over a common base.
struct ModuleMorphism {
    ModulePtr source;
    ModulePtr target;
    LinearMap map;

    SparseVec operator()(const SparseVec& v) const { return map.apply(v); }
};

struct Violation {
    std::string axiom;
    std::string witness;
};

using AxiomReport = std::vector<Violation>;

AxiomReport verify_cdga(const Cdga& a);
AxiomReport verify_module(const DgModule& m);
AxiomReport verify_morphism(const ModuleMorphism& f);
AxiomReport verify_morphism(const AlgebraMorphism& f);

bool has_axiom(const AxiomReport& report, const std::string& axiom);
std::string describe(const AxiomReport& report);

// Throw Error(internal) carrying the report when it is not empty. Used as the
// post-construction assertion of every builder in the library.
void assert_valid(const AxiomReport& report, const std::string& what);

}  // namespace ratmod

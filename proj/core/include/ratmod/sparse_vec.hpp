#pragma once

#include "ratmod/scalar.hpp"

#include <cstddef>
#include <map>

namespace ratmod {

// Element of a finite-dimensional space in coordinates of its basis.
// Zero coefficients are never stored.
class SparseVec {
public:
    using Terms = std::map<std::size_t, Scalar>;

    SparseVec() = default;
    static SparseVec basis(std::size_t i, const Scalar& c = 1)
    {
        SparseVec v;
        v.add(i, c);
        return v;
    }

    void add(std::size_t i, const Scalar& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    // this += c * other
    void axpy(const Scalar& c, const SparseVec& other)
    {
        if (sgn(c) == 0)
            return;
        for (const auto& [i, x] : other.terms_)
            add(i, c * x);
    }

    SparseVec scaled(const Scalar& c) const
    {
        SparseVec out;
        out.axpy(c, *this);
        return out;
    }

    Scalar at(std::size_t i) const
    {
        auto it = terms_.find(i);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    SparseVec& operator+=(const SparseVec& o)
    {
        axpy(1, o);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o)
    {
        axpy(-1, o);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const Scalar& c, const SparseVec& v) { return v.scaled(c); }
    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    Terms terms_;
};

}  // namespace ratmod

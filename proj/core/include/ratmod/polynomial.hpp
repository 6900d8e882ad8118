#pragma once

#include "ratmod/graded_space.hpp"

#include <map>
#include <string>
#include <vector>

namespace ratmod {

// Exponent vector over an ordered list of generators; odd generators have
// exponent 0 or 1.
using Monomial = std::vector<int>;

struct Generator {
    std::string name;
    int degree = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Greater in lexicographic order of exponents (declaration order).
inline bool lex_greater(const Monomial& a, const Monomial& b) { return a > b; }

// Element of the free graded-commutative algebra on the generators.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    Polynomial() = default;
    static Polynomial constant(std::size_t ngens, const Scalar& c);
    static Polynomial generator(std::size_t ngens, std::size_t i);
    static Polynomial monomial(const Monomial& m, const Scalar& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial& m, const Scalar& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

int monomial_degree(const Monomial& m, const std::vector<Generator>& gens);

// Product of monomials in the free graded-commutative algebra: the sign is the
// Koszul sign of sorting the odd factors; zero when an odd generator repeats.
std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b, const std::vector<Generator>& gens);
Polynomial multiply(const Polynomial& a, const Polynomial& b, const std::vector<Generator>& gens);
Polynomial power(const Polynomial& a, int exponent, const std::vector<Generator>& gens);

// Degree of a homogeneous polynomial; nullopt for zero. Throws
// Error(usage, "inhomogeneous ...") otherwise.
std::optional<int> polynomial_degree(const Polynomial& p, const std::vector<Generator>& gens);

// All monomials of the given degree, in descending lexicographic order.
std::vector<Monomial> monomials_of_degree(int degree, const std::vector<Generator>& gens);

std::string monomial_name(const Monomial& m, const std::vector<Generator>& gens);
std::string format(const Polynomial& p, const std::vector<Generator>& gens);

// Grammar: identifiers, integers and p/q rationals, + - * ^, parentheses.
// Throws Error(usage, "parse error at position k: ...").
Polynomial parse_polynomial(const std::string& text, const std::vector<Generator>& gens);

// Leibniz extension of d from generators (d_gens[i] = d of generator i).
Polynomial differentiate(const Polynomial& p, const std::vector<Polynomial>& d_gens, const std::vector<Generator>& gens);

}  // namespace ratmod

#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's linear algebra.

#include "ratmod/algebra.hpp"
#include "ratmod/constructions.hpp"
#include "ratmod/presentation.hpp"

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<mpq_class>>;

// Plain Gaussian elimination, pivot on the largest-index nonzero row entry.
inline std::size_t rank(Rows rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = cols; c-- > 0;) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const mpq_class f = rows[i][c] / rows[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

// Matrix of d restricted to degree p, rows indexed by degree p+1 basis.
inline Rows block(const ratmod::GradedSpace& s, const ratmod::LinearMap& d, int p)
{
    std::vector<std::size_t> src, tgt;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s.degree(i) == p)
            src.push_back(i);
        if (s.degree(i) == p + d.degree)
            tgt.push_back(i);
    }
    Rows rows(tgt.size(), std::vector<mpq_class>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < tgt.size(); ++i)
            rows[i][j] = d.columns[src[j]].at(tgt[i]);
    return rows;
}

inline std::size_t dim_in(const ratmod::GradedSpace& s, int p)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        n += s.degree(i) == p;
    return n;
}

// dim H^p = dim V^p - rank d_p - rank d_{p-1}
inline std::size_t betti(const ratmod::GradedSpace& s, const ratmod::LinearMap& d, int p)
{
    const std::size_t v = dim_in(s, p);
    if (v == 0)
        return 0;
    return v - rank(block(s, d, p)) - rank(block(s, d, p - 1));
}

inline std::vector<std::size_t> betti_list(const ratmod::GradedSpace& s, const ratmod::LinearMap& d, int lo, int hi)
{
    std::vector<std::size_t> out;
    for (int p = lo; p <= hi; ++p)
        out.push_back(betti(s, d, p));
    return out;
}

inline std::vector<std::size_t> betti_list(const ratmod::Cdga& a, int hi)
{
    return betti_list(a.space(), a.differential(), 0, hi);
}

// Naive product of coordinate vectors through the structure constants.
inline ratmod::SparseVec mul(const ratmod::Cdga& a, const ratmod::SparseVec& x, const ratmod::SparseVec& y)
{
    ratmod::SparseVec out;
    for (const auto& [i, c] : x)
        for (const auto& [j, e] : y)
            out.axpy(c * e, a.product(i, j));
    return out;
}

inline ratmod::SparseVec element(const ratmod::GradedSpace& s, const std::vector<std::pair<std::string, long>>& terms)
{
    ratmod::SparseVec v;
    for (const auto& [name, c] : terms)
        v.add(s.index_of(name), c);
    return v;
}

}  // namespace oracle

namespace fixtures {

inline ratmod::CdgaPtr algebra(const std::string& toml)
{
    return ratmod::ExpandedPresentation(ratmod::parse_presentation(toml)).algebra();
}

// Q[x]/(x^k), |x| = deg (even).
inline ratmod::CdgaPtr truncated_polynomial(const std::string& x, int deg, int k)
{
    return algebra("name = \"poly\"\nbound = " + std::to_string(deg * (k - 1)) + "\nrelations = [\"" + x + "^" +
                   std::to_string(k) + "\"]\n[[generators]]\nname = \"" + x + "\"\ndegree = " + std::to_string(deg) +
                   "\n");
}

// wedge(y), |y| = deg (odd).
inline ratmod::CdgaPtr exterior(const std::string& y, int deg)
{
    return algebra("name = \"ext\"\nbound = " + std::to_string(deg) + "\n[[generators]]\nname = \"" + y +
                   "\"\ndegree = " + std::to_string(deg) + "\n");
}

// Q[v]/(v^k) (x) wedge(u) with du = v, |v| = deg even, |u| = deg - 1.
inline ratmod::CdgaPtr koszul(int deg, int k)
{
    return algebra("name = \"koszul\"\nbound = " + std::to_string(deg * k) + "\nrelations = [\"v^" + std::to_string(k) +
                   "\"]\n[[generators]]\nname = \"v\"\ndegree = " + std::to_string(deg) +
                   "\n[[generators]]\nname = \"u\"\ndegree = " + std::to_string(deg - 1) +
                   "\n[differentials]\nu = \"v\"\n");
}

inline ratmod::CdgaPtr sphere(int n)
{
    if (n % 2 == 0)
        return truncated_polynomial("x", n, 2);
    return exterior("x", n);
}

inline std::string sphere_toml(int n)
{
    return "name = \"S" + std::to_string(n) + "\"\nrelations = [\"x^2\"]\n[[generators]]\nname = \"x\"\ndegree = " +
           std::to_string(n) + "\n[orientation]\ndegree = " + std::to_string(n) + "\nclass = \"x\"\n";
}

inline const std::string s3xs3_toml =
    "name = \"S3xS3\"\n[[generators]]\nname = \"y\"\ndegree = 3\n[[generators]]\nname = \"y'\"\ndegree = 3\n"
    "[orientation]\ndegree = 6\nclass = \"y*y'\"\n";

inline const std::string s4xs4_toml =
    "name = \"S4xS4\"\nrelations = [\"x^2\", \"x'^2\"]\n[[generators]]\nname = \"x\"\ndegree = 4\n"
    "[[generators]]\nname = \"x'\"\ndegree = 4\n[orientation]\ndegree = 8\nclass = \"x*x'\"\n";

inline const std::string cp2_toml =
    "name = \"CP2\"\nrelations = [\"h^3\"]\n[[generators]]\nname = \"h\"\ndegree = 2\n[orientation]\ndegree = 4\n"
    "class = \"h^2\"\n";

// Random rational in {-3..3} / {1..3}.
inline mpq_class random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ratmod::CdgaPtr random_factor(std::mt19937& rng)
{
    switch (pick(rng, 0, 2)) {
    case 0:
        return truncated_polynomial("x", 2 * pick(rng, 1, 2), pick(rng, 2, 3));
    case 1:
        return exterior("y", 2 * pick(rng, 0, 2) + 1);
    default:
        return koszul(2 * pick(rng, 1, 2), pick(rng, 1, 2));
    }
}

// Small random CDGA: a tensor product of one to max_factors factors drawn from
// truncated polynomials, exteriors and acyclic Koszul pieces.
inline ratmod::CdgaPtr random_algebra(std::mt19937& rng, int max_factors = 3)
{
    ratmod::CdgaPtr a = random_factor(rng);
    const int n = pick(rng, 1, max_factors);
    for (int i = 1; i < n; ++i)
        a = ratmod::tensor(a, random_factor(rng));
    return a;
}

// Random element of degree p with coefficients from random_scalar.
inline ratmod::SparseVec random_element(std::mt19937& rng, const ratmod::GradedSpace& s, int p)
{
    ratmod::SparseVec v;
    for (std::size_t i : s.in_degree(p))
        v.add(i, random_scalar(rng));
    return v;
}

}  // namespace fixtures

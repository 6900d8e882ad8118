#include "ratmod/graded_space.hpp"

#include "ratmod/error.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ratmod {

GradedSpace::GradedSpace(std::vector<BasisElement> basis)
{
    for (auto& b : basis)
        add(std::move(b.name), b.degree);
}

std::size_t GradedSpace::add(std::string name, int degree)
{
    if (index_.count(name))
        throw Error(ErrorKind::internal, "duplicate basis name '" + name + "'");
    const std::size_t i = basis_.size();
    index_.emplace(name, i);
    basis_.push_back(BasisElement{std::move(name), degree});
    by_degree_[degree].push_back(i);
    return i;
}

std::optional<std::size_t> GradedSpace::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t GradedSpace::index_of(const std::string& name) const
{
    auto i = find(name);
    if (!i)
        throw Error(ErrorKind::usage, "unknown basis element '" + name + "'");
    return *i;
}

const std::vector<std::size_t>& GradedSpace::in_degree(int p) const
{
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(p);
    return it == by_degree_.end() ? empty : it->second;
}

std::vector<int> GradedSpace::support() const
{
    std::vector<int> out;
    for (const auto& [p, idx] : by_degree_)
        out.push_back(p);
    return out;
}

std::map<int, std::size_t> GradedSpace::dims() const
{
    std::map<int, std::size_t> out;
    for (const auto& [p, idx] : by_degree_)
        out[p] = idx.size();
    return out;
}

int GradedSpace::min_degree() const { return by_degree_.empty() ? 0 : by_degree_.begin()->first; }
int GradedSpace::max_degree() const { return by_degree_.empty() ? 0 : by_degree_.rbegin()->first; }

std::optional<int> GradedSpace::degree_of(const SparseVec& v) const
{
    std::optional<int> deg;
    for (const auto& [i, c] : v) {
        if (deg && *deg != basis_[i].degree)
            throw Error(ErrorKind::internal, "inhomogeneous element " + format(v));
        deg = basis_[i].degree;
    }
    return deg;
}

Column GradedSpace::restrict_to(const SparseVec& v, int p) const
{
    const auto& idx = in_degree(p);
    Column out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        out[k] = v.at(idx[k]);
    return out;
}

SparseVec GradedSpace::from_degree(const Column& coords, int p) const
{
    const auto& idx = in_degree(p);
    SparseVec out;
    for (std::size_t k = 0; k < idx.size(); ++k)
        out.add(idx[k], coords[k]);
    return out;
}

std::string GradedSpace::format(const SparseVec& v) const
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        Scalar mag = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << "-";
        }
        else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "[" << basis_[i].name << "]";
        first = false;
    }
    return os.str();
}

LinearMap LinearMap::identity(std::size_t dim)
{
    LinearMap m{dim, dim, 0, {}};
    m.columns.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.columns.push_back(SparseVec::basis(i));
    return m;
}

SparseVec LinearMap::apply(const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [i, c] : v)
        out.axpy(c, columns.at(i));
    return out;
}

Matrix LinearMap::block(const GradedSpace& source, const GradedSpace& target, int p) const
{
    const auto& cols = source.in_degree(p);
    const auto& rows = target.in_degree(p + degree);
    Matrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const SparseVec& img = columns[cols[j]];
        if (img.is_zero())
            continue;
        for (std::size_t i = 0; i < rows.size(); ++i)
            m(i, j) = img.at(rows[i]);
    }
    return m;
}

bool LinearMap::is_zero() const
{
    for (const auto& c : columns)
        if (!c.is_zero())
            return false;
    return true;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner)
{
    if (inner.target_dim != outer.source_dim)
        throw Error(ErrorKind::internal, "composition of incompatible linear maps");
    LinearMap out{inner.source_dim, outer.target_dim, inner.degree + outer.degree, {}};
    out.columns.reserve(inner.source_dim);
    for (const auto& c : inner.columns)
        out.columns.push_back(outer.apply(c));
    return out;
}

}  // namespace ratmod

namespace ratmod {

SparseVec parse_element(const std::string& text, const GradedSpace& space)
{
    std::size_t pos = 0;
    auto bad = [&](const std::string& what) -> Error {
        return Error(ErrorKind::usage,
                     "element parse error at position " + std::to_string(pos) + " in \"" + text + "\": " + what);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    const auto first_char = text.find_first_not_of(" \t");
    const auto last_char = text.find_last_not_of(" \t");
    if (first_char != std::string::npos && first_char == last_char && text[first_char] == '0')
        return {};

    SparseVec out;
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) {
            if (first)
                throw bad("empty element");
            break;
        }
        Scalar sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        }
        else if (!first) {
            throw bad("expected + or -");
        }
        Scalar coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            try {
                coeff = Scalar(text.substr(start, pos - start));
                coeff.canonicalize();
            } catch (const std::invalid_argument&) {
                throw bad("bad coefficient");
            }
            if (coeff.get_den() == 0)
                throw bad("zero denominator");
            skip();
            if (pos >= text.size() || text[pos] != '*')
                throw bad("expected * after coefficient");
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != '[')
            throw bad("expected [name]");
        const std::size_t close = text.find(']', pos);
        if (close == std::string::npos)
            throw bad("unterminated [");
        const std::string name = text.substr(pos + 1, close - pos - 1);
        const auto index = space.find(name);
        if (!index)
            throw bad("unknown basis element '" + name + "'");
        pos = close + 1;
        out.add(*index, sign * coeff);
        first = false;
    }
    return out;
}

}  // namespace ratmod

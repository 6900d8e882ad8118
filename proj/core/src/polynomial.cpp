#include "ratmod/polynomial.hpp"

#include "ratmod/error.hpp"

#include <cctype>

namespace ratmod {

Polynomial Polynomial::constant(std::size_t ngens, const Scalar& c)
{
    Polynomial p;
    p.add(Monomial(ngens, 0), c);
    return p;
}

Polynomial Polynomial::generator(std::size_t ngens, std::size_t i)
{
    Monomial m(ngens, 0);
    m[i] = 1;
    return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c)
{
    Polynomial p;
    p.add(m, c);
    return p;
}

void Polynomial::add(const Monomial& m, const Scalar& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

int monomial_degree(const Monomial& m, const std::vector<Generator>& gens)
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * gens[i].degree;
    return d;
}

std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b, const std::vector<Generator>& gens)
{
    Monomial out(a.size());
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (gens[i].degree % 2 != 0) {
            if (out[i] > 1)
                return {out, 0};
            // b's odd factor i moves left past a's odd factors j > i
            if (b[i] == 1)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    if (a[j] == 1 && gens[j].degree % 2 != 0)
                        sign = -sign;
        }
    }
    return {out, sign};
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, const std::vector<Generator>& gens)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto [m, sign] = multiply(ma, mb, gens);
            if (sign != 0)
                out.add(m, ca * cb * sign);
        }
    return out;
}

Polynomial power(const Polynomial& a, int exponent, const std::vector<Generator>& gens)
{
    Polynomial out = Polynomial::constant(gens.size(), 1);
    for (int k = 0; k < exponent; ++k)
        out = multiply(out, a, gens);
    return out;
}

std::optional<int> polynomial_degree(const Polynomial& p, const std::vector<Generator>& gens)
{
    std::optional<int> deg;
    for (const auto& [m, c] : p.terms()) {
        const int d = monomial_degree(m, gens);
        if (deg && *deg != d)
            throw Error(ErrorKind::usage, "inhomogeneous polynomial " + format(p, gens));
        deg = d;
    }
    return deg;
}

namespace {

void monomials_rec(std::size_t i, int remaining, Monomial& cur, const std::vector<Generator>& gens,
                   std::vector<Monomial>& out)
{
    if (i == gens.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    const int g = gens[i].degree;
    const int max_exp = (g % 2 != 0) ? 1 : remaining / g;
    for (int e = std::min(max_exp, g > 0 ? remaining / g : 0); e >= 0; --e) {
        cur[i] = e;
        monomials_rec(i + 1, remaining - e * g, cur, gens, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int degree, const std::vector<Generator>& gens)
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    for (const auto& g : gens)
        if (g.degree <= 0)
            throw Error(ErrorKind::usage, "generator '" + g.name + "' must have positive degree");
    Monomial cur(gens.size(), 0);
    monomials_rec(0, degree, cur, gens, out);
    return out;
}

std::string monomial_name(const Monomial& m, const std::vector<Generator>& gens)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += gens[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format(const Polynomial& p, const std::vector<Generator>& gens)
{
    if (p.is_zero())
        return "0";
    std::string out;
    // highest monomial first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = sgn(c) < 0;
        const Scalar mag = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const std::string name = monomial_name(m, gens);
        if (name == "1")
            out += mag.get_str();
        else if (mag == 1)
            out += name;
        else
            out += mag.get_str() + "*" + name;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<Generator>& gens) : s_(text), gens_(gens) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what) const
    {
        throw Error(ErrorKind::usage, "parse error at position " + std::to_string(pos_) + " in \"" + s_ + "\": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial out;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial t = term();
        out = negate ? Polynomial() - t : t;
        for (;;) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                return out;
        }
    }

    Polynomial term()
    {
        Polynomial out = factor();
        while (accept('*'))
            out = multiply(out, factor(), gens_);
        return out;
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                error("expected a non-negative integer exponent");
            return power(base, std::stoi(s_.substr(start, pos_ - start)), gens_);
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= s_.size())
            error("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')'))
                error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                const std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (dstart == pos_)
                    error("expected a denominator");
                const std::string den = s_.substr(dstart, pos_ - dstart);
                if (std::stol(den) == 0)
                    error("zero denominator");
                num += "/" + den;
            }
            return Polynomial::constant(gens_.size(), parse_scalar(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].name == name)
                    return Polynomial::generator(gens_.size(), i);
            pos_ = start;
            error("unknown generator '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::vector<Generator>& gens_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<Generator>& gens)
{
    return Parser(text, gens).parse();
}

Polynomial differentiate(const Polynomial& p, const std::vector<Polynomial>& d_gens, const std::vector<Generator>& gens)
{
    const std::size_t n = gens.size();
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        // m = prefix * g_i * rest, with factors in declaration order
        Monomial prefix(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                Monomial rest = m;
                for (std::size_t j = 0; j < i; ++j)
                    rest[j] = 0;
                rest[i] = m[i] - e - 1;
                const int sign = sign_of_parity(monomial_degree(prefix, gens));
                Polynomial term = multiply(Polynomial::monomial(prefix, c * sign), d_gens[i], gens);
                out += multiply(term, Polynomial::monomial(rest), gens);
                prefix[i] += 1;
            }
        }
    }
    return out;
}

}  // namespace ratmod

#ifndef HYPLAB_POLYNOMIAL_HPP
#define HYPLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>

namespace hyplab
{

// Dense univariate polynomial in t with arbitrary-precision integer
// coefficients; coefficient i multiplies t^i. Trailing zeros are never stored,
// so the zero polynomial has no coefficients and degree -1.
class IntPolynomial
{
public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long long> coeffs)
    {
        for (long long c : coeffs) m_c.emplace_back(c);
        trim();
    }

    explicit IntPolynomial(std::vector<BigInt> coeffs) : m_c(std::move(coeffs))
    {
        trim();
    }

    template <typename Int>
    static IntPolynomial from_counts(const std::vector<Int> &counts)
    {
        std::vector<BigInt> c;
        c.reserve(counts.size());
        for (const auto &v : counts) c.emplace_back(v);
        return IntPolynomial(std::move(c));
    }

    static IntPolynomial monomial(BigInt c, int degree)
    {
        std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }

    int degree() const noexcept
    {
        return static_cast<int>(m_c.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return m_c.empty();
    }

    const std::vector<BigInt> &coefficients() const noexcept
    {
        return m_c;
    }

    BigInt coeff(int i) const
    {
        if (i < 0 || i > degree()) return 0;
        return m_c[static_cast<std::size_t>(i)];
    }

    const BigInt &leading() const
    {
        return m_c.back();
    }

    BigInt evaluate(const BigInt &t) const
    {
        BigInt r = 0;
        for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) r = r * t + *it;
        return r;
    }

    Rational evaluate(const Rational &t) const
    {
        Rational r = 0;
        for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) r = r * t + Rational(*it);
        return r;
    }

    IntPolynomial derivative() const
    {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < m_c.size(); ++i) d.push_back(m_c[i] * static_cast<long long>(i));
        return IntPolynomial(std::move(d));
    }

    // t^n p(1/t); requires deg p <= n.
    IntPolynomial reflect(int n) const
    {
        if (degree() > n) throw Error(ErrorCode::InvalidArgument, "reflect: degree exceeds n");
        std::vector<BigInt> r(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(n - i)] = m_c[static_cast<std::size_t>(i)];
        return IntPolynomial(std::move(r));
    }

    bool all_nonnegative() const
    {
        for (const auto &c : m_c)
            if (c < 0) return false;
        return true;
    }

    BigInt content() const
    {
        BigInt g = 0;
        for (const auto &c : m_c) g = gcd(g, c);
        return g;
    }

    IntPolynomial &operator+=(const IntPolynomial &o)
    {
        if (o.m_c.size() > m_c.size()) m_c.resize(o.m_c.size());
        for (std::size_t i = 0; i < o.m_c.size(); ++i) m_c[i] += o.m_c[i];
        trim();
        return *this;
    }
    IntPolynomial &operator-=(const IntPolynomial &o)
    {
        if (o.m_c.size() > m_c.size()) m_c.resize(o.m_c.size());
        for (std::size_t i = 0; i < o.m_c.size(); ++i) m_c[i] -= o.m_c[i];
        trim();
        return *this;
    }
    IntPolynomial &operator*=(const BigInt &s)
    {
        for (auto &c : m_c) c *= s;
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b)
    {
        return a += b;
    }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b)
    {
        return a -= b;
    }
    friend IntPolynomial operator-(IntPolynomial a)
    {
        for (auto &c : a.m_c) c = -c;
        return a;
    }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt &s)
    {
        return a *= s;
    }
    friend IntPolynomial operator*(const BigInt &s, IntPolynomial a)
    {
        return a *= s;
    }
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.m_c.size() + b.m_c.size() - 1);
        for (std::size_t i = 0; i < a.m_c.size(); ++i) {
            if (a.m_c[i] == 0) continue;
            for (std::size_t j = 0; j < b.m_c.size(); ++j) r[i + j] += a.m_c[i] * b.m_c[j];
        }
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial pow(const IntPolynomial &p, unsigned e)
    {
        IntPolynomial r{1};
        for (unsigned i = 0; i < e; ++i) r = r * p;
        return r;
    }

    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

private:
    void trim()
    {
        while (!m_c.empty() && m_c.back() == 0) m_c.pop_back();
    }

    std::vector<BigInt> m_c;
};

// Renders low-to-high, e.g. "1 + 14t + 9t^2", "5t - t^3", "0".
inline std::string to_string(const IntPolynomial &p)
{
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        BigInt c = p.coeff(i);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (i == 0 || c != 1) s += c.str();
        if (i >= 1) s += "t";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

inline std::ostream &operator<<(std::ostream &os, const IntPolynomial &p)
{
    return os << to_string(p);
}

} // namespace hyplab

#endif

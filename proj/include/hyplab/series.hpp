#ifndef HYPLAB_SERIES_HPP
#define HYPLAB_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/polynomial.hpp>

namespace hyplab
{

// Dense multivariate formal power series truncated per variable: for
// variables x_0..x_{m-1} with orders N_0..N_{m-1} it stores the coefficients of
// every monomial x^e with 0 <= e_i <= N_i. Ring operations discard anything
// beyond the box, which is exact because the box is a down-set.
//
// Two series can only be combined when they share the same variables and
// orders (the same "ring").
template <typename Coeff = Rational>
class TruncatedSeries
{
public:
    using Exponents = std::vector<int>;

    TruncatedSeries() = default;

    TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders)
        : m_vars(std::move(vars)), m_orders(std::move(orders))
    {
        if (m_vars.size() != m_orders.size() || m_vars.empty())
            throw Error(ErrorCode::InvalidArgument, "series needs one order per variable");
        for (int o : m_orders)
            if (o < 0) throw Error(ErrorCode::InvalidArgument, "truncation orders must be nonnegative");
        m_strides.resize(m_vars.size());
        std::size_t s = 1;
        for (std::size_t i = m_vars.size(); i-- > 0;) {
            m_strides[i] = s;
            s *= static_cast<std::size_t>(m_orders[i]) + 1;
        }
        m_c.assign(s, Coeff(0));
    }

    // Same ring as `like`, all coefficients zero.
    static TruncatedSeries zero_like(const TruncatedSeries &like)
    {
        return TruncatedSeries(like.m_vars, like.m_orders);
    }

    static TruncatedSeries constant_like(const TruncatedSeries &like, const Coeff &c)
    {
        TruncatedSeries r = zero_like(like);
        r.m_c[0] = c;
        return r;
    }

    // c * var^power, or zero if the power exceeds the truncation.
    static TruncatedSeries monomial_like(const TruncatedSeries &like, const std::string &var, int power,
                                         const Coeff &c = Coeff(1))
    {
        TruncatedSeries r = zero_like(like);
        const std::size_t v = r.var_index(var);
        if (power <= r.m_orders[v]) r.m_c[static_cast<std::size_t>(power) * r.m_strides[v]] = c;
        return r;
    }

    // Embeds a polynomial in one of the variables.
    static TruncatedSeries from_polynomial(const TruncatedSeries &like, const std::string &var, const IntPolynomial &p)
    {
        TruncatedSeries r = zero_like(like);
        const std::size_t v = r.var_index(var);
        for (int i = 0; i <= std::min(p.degree(), r.m_orders[v]); ++i)
            r.m_c[static_cast<std::size_t>(i) * r.m_strides[v]] = Coeff(p.coeff(i));
        return r;
    }

    const std::vector<std::string> &variables() const noexcept
    {
        return m_vars;
    }
    const std::vector<int> &orders() const noexcept
    {
        return m_orders;
    }
    std::size_t size() const noexcept
    {
        return m_c.size();
    }

    std::size_t var_index(const std::string &var) const
    {
        const auto it = std::find(m_vars.begin(), m_vars.end(), var);
        if (it == m_vars.end()) throw Error(ErrorCode::InvalidArgument, "unknown series variable " + var);
        return static_cast<std::size_t>(it - m_vars.begin());
    }

    bool in_box(const Exponents &e) const
    {
        if (e.size() != m_vars.size()) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > m_orders[i]) return false;
        return true;
    }

    std::size_t linear_index(const Exponents &e) const
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) k += static_cast<std::size_t>(e[i]) * m_strides[i];
        return k;
    }

    Exponents exponents_of(std::size_t k) const
    {
        Exponents e(m_vars.size());
        for (std::size_t i = 0; i < m_vars.size(); ++i) {
            e[i] = static_cast<int>(k / m_strides[i]);
            k %= m_strides[i];
        }
        return e;
    }

    const Coeff &coeff(const Exponents &e) const
    {
        if (!in_box(e)) throw Error(ErrorCode::InvalidArgument, "exponent outside truncation box");
        return m_c[linear_index(e)];
    }

    Coeff &coeff(const Exponents &e)
    {
        if (!in_box(e)) throw Error(ErrorCode::InvalidArgument, "exponent outside truncation box");
        return m_c[linear_index(e)];
    }

    const Coeff &operator[](std::size_t k) const
    {
        return m_c[k];
    }
    Coeff &operator[](std::size_t k)
    {
        return m_c[k];
    }

    const Coeff &constant_term() const
    {
        return m_c.at(0);
    }

    bool same_ring(const TruncatedSeries &o) const
    {
        return m_vars == o.m_vars && m_orders == o.m_orders;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        require_same_ring(o);
        for (std::size_t i = 0; i < m_c.size(); ++i) m_c[i] += o.m_c[i];
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        require_same_ring(o);
        for (std::size_t i = 0; i < m_c.size(); ++i) m_c[i] -= o.m_c[i];
        return *this;
    }
    TruncatedSeries &operator*=(const Coeff &s)
    {
        for (auto &c : m_c) c *= s;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto &c : a.m_c) c = -c;
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Coeff &s)
    {
        return a *= s;
    }
    friend TruncatedSeries operator*(const Coeff &s, TruncatedSeries a)
    {
        return a *= s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.require_same_ring(b);
        TruncatedSeries r = zero_like(a);
        const auto nza = a.nonzero_terms();
        const auto nzb = b.nonzero_terms();
        const std::size_t m = a.m_vars.size();
        for (const auto &[ia, ea] : nza) {
            for (const auto &[ib, eb] : nzb) {
                bool ok = true;
                for (std::size_t v = 0; v < m; ++v) {
                    if (ea[v] + eb[v] > a.m_orders[v]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) r.m_c[ia + ib] += a.m_c[ia] * b.m_c[ib];
            }
        }
        return r;
    }
    TruncatedSeries &operator*=(const TruncatedSeries &o)
    {
        *this = *this * o;
        return *this;
    }

    friend TruncatedSeries pow(const TruncatedSeries &a, unsigned e)
    {
        TruncatedSeries r = constant_like(a, Coeff(1));
        TruncatedSeries base = a;
        while (e != 0) {
            if ((e & 1U) != 0) r *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be invertible. Solved
    // coefficient by coefficient in linear-index order, which refines the
    // componentwise order on exponents.
    TruncatedSeries reciprocal() const
    {
        const Coeff &c0 = m_c[0];
        if (c0 == 0) throw Error(ErrorCode::InvalidArgument, "reciprocal of a series with zero constant term");
        TruncatedSeries inv = zero_like(*this);
        inv.m_c[0] = Coeff(1) / c0;
        const auto nz = nonzero_terms();
        const std::size_t m = m_vars.size();
        for (std::size_t k = 1; k < m_c.size(); ++k) {
            const Exponents ek = exponents_of(k);
            Coeff acc(0);
            for (const auto &[ia, ea] : nz) {
                if (ia == 0) continue;
                bool ok = true;
                for (std::size_t v = 0; v < m; ++v) {
                    if (ea[v] > ek[v]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const Coeff &ci = inv.m_c[k - ia];
                if (ci != 0) acc += m_c[ia] * ci;
            }
            inv.m_c[k] = -acc / c0;
        }
        return inv;
    }

    // exp(f) for f with zero constant term.
    friend TruncatedSeries exp(const TruncatedSeries &f)
    {
        if (f.m_c[0] != 0) throw Error(ErrorCode::InvalidArgument, "exp of a series with nonzero constant term");
        int total = 0;
        for (int o : f.m_orders) total += o;
        TruncatedSeries r = constant_like(f, Coeff(1));
        TruncatedSeries term = r;
        for (int k = 1; k <= total; ++k) {
            term = term * f;
            term *= Coeff(1) / Coeff(k);
            r += term;
        }
        return r;
    }

    // Substitutes var -> c * var * g, where g does not involve var.
    TruncatedSeries substitute(const std::string &var, const Coeff &c, const TruncatedSeries &g) const
    {
        require_same_ring(g);
        const std::size_t v = var_index(var);
        for (std::size_t k = 0; k < g.m_c.size(); ++k)
            if (g.m_c[k] != 0 && g.exponents_of(k)[v] != 0)
                throw Error(ErrorCode::InvalidArgument, "substitution factor must not involve " + var);
        TruncatedSeries result = zero_like(*this);
        TruncatedSeries factor = constant_like(*this, Coeff(1));
        const TruncatedSeries cg = g * c;
        for (int p = 0; p <= m_orders[v]; ++p) {
            // Slice of var^p, shifted down to var^0, times (c g)^p, shifted back up.
            TruncatedSeries slice = zero_like(*this);
            for (std::size_t k = 0; k < m_c.size(); ++k) {
                if (m_c[k] == 0) continue;
                if (exponents_of(k)[v] == p) slice.m_c[k - static_cast<std::size_t>(p) * m_strides[v]] = m_c[k];
            }
            TruncatedSeries prod = slice * factor;
            for (std::size_t k = 0; k < prod.m_c.size(); ++k) {
                if (prod.m_c[k] == 0) continue;
                Exponents e = exponents_of(k);
                e[v] += p;
                if (e[v] <= m_orders[v]) result.m_c[linear_index(e)] += prod.m_c[k];
            }
            factor = factor * cg;
        }
        return result;
    }

    // Substitutes var -> c * var.
    TruncatedSeries scale_variable(const std::string &var, const Coeff &c) const
    {
        const std::size_t v = var_index(var);
        TruncatedSeries r = *this;
        std::vector<Coeff> powers(static_cast<std::size_t>(m_orders[v]) + 1, Coeff(1));
        for (std::size_t p = 1; p < powers.size(); ++p) powers[p] = powers[p - 1] * c;
        for (std::size_t k = 0; k < m_c.size(); ++k)
            if (r.m_c[k] != 0) r.m_c[k] *= powers[(k / m_strides[v]) % powers.size()];
        return r;
    }

    std::vector<std::pair<std::size_t, Exponents>> nonzero_terms() const
    {
        std::vector<std::pair<std::size_t, Exponents>> out;
        for (std::size_t k = 0; k < m_c.size(); ++k)
            if (m_c[k] != 0) out.emplace_back(k, exponents_of(k));
        return out;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.same_ring(b) && a.m_c == b.m_c;
    }

private:
    void require_same_ring(const TruncatedSeries &o) const
    {
        if (!same_ring(o)) throw Error(ErrorCode::InvalidArgument, "series live in different truncated rings");
    }

    std::vector<std::string> m_vars;
    std::vector<int> m_orders;
    std::vector<std::size_t> m_strides;
    std::vector<Coeff> m_c;
};

using RationalSeries = TruncatedSeries<Rational>;

// Coefficient tuples where two series in the same ring disagree.
template <typename Coeff>
std::vector<typename TruncatedSeries<Coeff>::Exponents> series_differences(const TruncatedSeries<Coeff> &a,
                                                                           const TruncatedSeries<Coeff> &b)
{
    if (!a.same_ring(b)) throw Error(ErrorCode::InvalidArgument, "series live in different truncated rings");
    std::vector<typename TruncatedSeries<Coeff>::Exponents> out;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) out.push_back(a.exponents_of(k));
    return out;
}

} // namespace hyplab

#endif

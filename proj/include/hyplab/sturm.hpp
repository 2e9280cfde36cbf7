#ifndef HYPLAB_STURM_HPP
#define HYPLAB_STURM_HPP

#include <utility>
#include <vector>

#include <hyplab/error.hpp>
#include <hyplab/polynomial.hpp>

namespace hyplab
{

namespace detail
{

inline int sign(const BigInt &v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline IntPolynomial primitive_part(const IntPolynomial &p)
{
    if (p.is_zero()) return p;
    BigInt g = p.content();
    std::vector<BigInt> c = p.coefficients();
    for (auto &v : c) v /= g;
    return IntPolynomial(std::move(c));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
inline IntPolynomial pseudo_remainder(const IntPolynomial &a, const IntPolynomial &b)
{
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo_remainder by zero");
    std::vector<BigInt> r = a.coefficients();
    const int db = b.degree();
    const BigInt &lb = b.leading();
    int dr = a.degree();
    int steps = a.degree() - db + 1;
    if (steps < 0) return a;
    while (dr >= db && dr >= 0) {
        const BigInt lr = r[static_cast<std::size_t>(dr)];
        for (auto &v : r) v *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * b.coeff(i);
        --steps;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    // Pad the remaining multiplications so the identity lc^(delta+1) a = q b + r holds exactly.
    for (; steps > 0; --steps)
        for (auto &v : r) v *= lb;
    return IntPolynomial(std::move(r));
}

// Exact quotient a / b in Z[t]; b must be primitive and divide a.
inline IntPolynomial exact_quotient(const IntPolynomial &a, const IntPolynomial &b)
{
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "exact_quotient by zero");
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return {};
        throw Error(ErrorCode::InvalidArgument, "exact_quotient: divisor does not divide");
    }
    std::vector<BigInt> r = a.coefficients();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        const BigInt &lr = r[static_cast<std::size_t>(d)];
        if (lr == 0) continue;
        if (lr % b.leading() != 0) throw Error(ErrorCode::InvalidArgument, "exact_quotient: non-integral quotient");
        const BigInt c = lr / b.leading();
        q[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(d - db + i)] -= c * b.coeff(i);
    }
    for (const auto &v : r)
        if (v != 0) throw Error(ErrorCode::InvalidArgument, "exact_quotient: nonzero remainder");
    return IntPolynomial(std::move(q));
}

} // namespace detail

// Primitive gcd in Z[t] with positive leading coefficient.
inline IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b)
{
    if (a.degree() < b.degree()) std::swap(a, b);
    a = detail::primitive_part(a);
    b = detail::primitive_part(b);
    while (!b.is_zero()) {
        IntPolynomial r = detail::primitive_part(detail::pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

// Sturm chain p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i), each term
// divided by a positive constant to keep coefficients small.
inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial &p)
{
    std::vector<IntPolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(detail::primitive_part(p));
    IntPolynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(detail::primitive_part(d));
    while (true) {
        const IntPolynomial &a = seq[seq.size() - 2];
        const IntPolynomial &b = seq.back();
        IntPolynomial r = detail::pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^(delta+1) * rem; undo the sign of that factor, then negate.
        const int delta1 = a.degree() - b.degree() + 1;
        int s = detail::sign(b.leading());
        if (s < 0 && delta1 % 2 == 0) s = 1;
        IntPolynomial next = detail::primitive_part(r);
        next *= BigInt(-s);
        seq.push_back(std::move(next));
    }
    return seq;
}

// Number of distinct real roots of p.
inline int count_distinct_real_roots(const IntPolynomial &p)
{
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has infinitely many roots");
    if (p.degree() == 0) return 0;
    const auto seq = sturm_sequence(p);
    auto variations = [&](bool at_plus_infinity) {
        int v = 0, prev = 0;
        for (const auto &q : seq) {
            int s = detail::sign(q.leading());
            if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

struct RealRootCertificate {
    int degree = 0;
    // Distinct real roots of p (those of its square-free part p / gcd(p, p')).
    int distinct_real_roots = 0;
    // Real roots counted with multiplicity.
    int real_roots_with_multiplicity = 0;
    bool real_rooted = false;
};

inline RealRootCertificate real_root_certificate(const IntPolynomial &p)
{
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "real_root_certificate of the zero polynomial");
    RealRootCertificate cert;
    cert.degree = p.degree();
    IntPolynomial cur = detail::primitive_part(p);
    bool first = true;
    // Peel multiplicities: roots of gcd(f, f') are the multiple roots of f,
    // each with multiplicity lowered by one.
    while (cur.degree() > 0) {
        IntPolynomial g = polynomial_gcd(cur, cur.derivative());
        IntPolynomial squarefree = detail::exact_quotient(cur, g);
        const int distinct = count_distinct_real_roots(squarefree);
        if (first) cert.distinct_real_roots = distinct;
        first = false;
        cert.real_roots_with_multiplicity += distinct;
        cur = std::move(g);
    }
    cert.real_rooted = cert.real_roots_with_multiplicity == cert.degree;
    return cert;
}

} // namespace hyplab

#endif

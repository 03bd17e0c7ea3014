#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace linkhom {

using Int = boost::multiprecision::cpp_int;

// Exponent triple of a monomial q^eq * a^ea * t^et. Exponents are never negative.
struct Monomial {
    unsigned eq = 0;
    unsigned ea = 0;
    unsigned et = 0;

    unsigned total() const { return eq + ea + et; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded order: total degree first, then (eq, ea, et) with q heaviest, so that
// ascending map iteration yields the emitter order 1, q, a, t, q^2, qa, ...
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.total() != y.total()) return x.total() < y.total();
        if (x.eq != y.eq) return x.eq > y.eq;
        if (x.ea != y.ea) return x.ea > y.ea;
        return x.et > y.et;
    }
};

// Sparse polynomial in q, a, t with arbitrary-precision integer coefficients.
// Canonical form: no zero coefficient is ever stored, so operator== is exact.
class Poly {
public:
    using TermMap = std::map<Monomial, Int, MonomialLess>;

    Poly() = default;
    Poly(long long c) { if (c != 0) terms_[Monomial{}] = c; }
    explicit Poly(Int c) { if (c != 0) terms_[Monomial{}] = std::move(c); }

    static Poly monomial(unsigned eq, unsigned ea, unsigned et, Int coeff = 1);
    static Poly q() { return monomial(1, 0, 0); }
    static Poly a() { return monomial(0, 1, 0); }
    static Poly t() { return monomial(0, 0, 1); }
    static Poly one_minus_q();

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; equals the whole value when is_constant().
    Int constant_value() const;
    const TermMap& terms() const { return terms_; }
    Int coeff(unsigned eq, unsigned ea, unsigned et) const;
    unsigned degree() const;    // total degree, 0 for the zero polynomial
    unsigned q_degree() const;
    bool has_a() const;

    Poly& operator+=(const Poly& r);
    Poly& operator-=(const Poly& r);
    Poly& operator*=(const Poly& r) { *this = *this * r; return *this; }
    friend Poly operator+(Poly l, const Poly& r) { l += r; return l; }
    friend Poly operator-(Poly l, const Poly& r) { l -= r; return l; }
    friend Poly operator*(const Poly& l, const Poly& r);
    friend Poly operator*(const Int& c, const Poly& p);
    Poly operator-() const;
    Poly pow(unsigned k) const;
    friend bool operator==(const Poly&, const Poly&) = default;

    // Drops every term with q-exponent above `order`.
    Poly truncate_q(unsigned order) const;
    Poly subst_t_one_plus_t() const;  // t -> 1+t
    Poly swap_qt() const;             // q <-> t

    // Integer content (gcd of coefficients, nonnegative; 0 for the zero poly).
    Int content() const;
    // Componentwise minimum exponent over all terms.
    Monomial monomial_content() const;
    Poly divide_monomial(const Monomial& m) const;

    // Exact division; nullopt when d does not divide p. d must be nonzero.
    static std::optional<Poly> div_exact(const Poly& p, const Poly& d);

    std::string str() const;
    std::string latex() const;
    // Parses the plain-text emitter format, e.g. "1 + q + t - 3*q^2*a*t".
    static Poly parse(std::string_view s);

private:
    void add_term(const Monomial& m, const Int& c);
    TermMap terms_;
};

Int binomial(unsigned n, unsigned k);

// Rational function whose denominator is restricted to a power of (1-q).
// Normal form: num not divisible by (1-q) unless dpow == 0; zero has dpow == 0.
class RationalQat {
public:
    RationalQat() = default;  // zero
    RationalQat(Poly num, unsigned dpow = 0);

    static RationalQat one() { return RationalQat(Poly(1)); }

    const Poly& num() const { return num_; }
    unsigned dpow() const { return dpow_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return dpow_ == 0; }

    RationalQat& operator+=(const RationalQat& r);
    RationalQat& operator-=(const RationalQat& r);
    friend RationalQat operator+(RationalQat l, const RationalQat& r) { l += r; return l; }
    friend RationalQat operator-(RationalQat l, const RationalQat& r) { l -= r; return l; }
    friend RationalQat operator*(const RationalQat& l, const RationalQat& r);
    friend RationalQat operator*(const Poly& p, const RationalQat& r);
    friend bool operator==(const RationalQat&, const RationalQat&) = default;

    RationalQat divided_by_one_minus_q() const { return RationalQat(num_, dpow_ + 1); }

    // Exact power-series expansion in q, truncated to q-degree <= order.
    Poly q_series(unsigned order) const;

    std::string str() const;
    std::string latex() const;

private:
    Poly num_;
    unsigned dpow_ = 0;
};

// General fraction of integer polynomials; the coefficient field for the
// symmetric-function layer (exponents in `a` stay unused there). Reduction is
// best effort (content, sign, common (1-q) powers, full division when exact);
// mathematical equality is always decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long long c) : num_(c), den_(1) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly num, Poly den);
    RatFunc(const RationalQat& x);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& r);
    RatFunc& operator-=(const RatFunc& r);
    RatFunc& operator*=(const RatFunc& r);
    RatFunc& operator/=(const RatFunc& r);  // throws on division by zero
    friend RatFunc operator+(RatFunc l, const RatFunc& r) { l += r; return l; }
    friend RatFunc operator-(RatFunc l, const RatFunc& r) { l -= r; return l; }
    friend RatFunc operator*(RatFunc l, const RatFunc& r) { l *= r; return l; }
    friend RatFunc operator/(RatFunc l, const RatFunc& r) { l /= r; return l; }
    RatFunc operator-() const;

    // Cross-multiplication equality; this is the module's equality contract.
    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ * y.den_ == y.num_ * x.den_;
    }

    std::optional<Poly> as_polynomial() const;
    RatFunc subst_t_one_plus_t() const;
    RatFunc swap_qt() const;

    std::string str() const;
    std::string latex() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

bool ratfunc_eq(const RatFunc& x, const RatFunc& y);

// Writes x as series_poly / den with den a positive integer, expanded in q up
// to q-degree <= order. Requires the denominator of x to be c*(1-q)^k.
std::pair<Poly, Int> q_series_constrained(const RatFunc& x, unsigned order);

// Converts a fraction whose denominator is c*(1-q)^k and whose value is known
// to lie in Z[q,a,t][(1-q)^-1]. Throws when the shape does not hold.
RationalQat rational_from_ratfunc(const RatFunc& x);

}  // namespace linkhom

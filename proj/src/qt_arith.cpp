#include "linkhom/qt_arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace linkhom {

Poly Poly::monomial(unsigned eq, unsigned ea, unsigned et, Int coeff) {
    Poly p;
    if (coeff != 0) p.terms_[Monomial{eq, ea, et}] = std::move(coeff);
    return p;
}

Poly Poly::one_minus_q() {
    Poly p(1);
    p.terms_[Monomial{1, 0, 0}] = -1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Int Poly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Int(0) : it->second;
}

Int Poly::coeff(unsigned eq, unsigned ea, unsigned et) const {
    auto it = terms_.find(Monomial{eq, ea, et});
    return it == terms_.end() ? Int(0) : it->second;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

unsigned Poly::q_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.eq);
    return d;
}

bool Poly::has_a() const {
    for (const auto& [m, c] : terms_)
        if (m.ea > 0) return true;
    return false;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
    Poly out;
    for (const auto& [ml, cl] : l.terms_)
        for (const auto& [mr, cr] : r.terms_)
            out.add_term(Monomial{ml.eq + mr.eq, ml.ea + mr.ea, ml.et + mr.et}, cl * cr);
    return out;
}

Poly operator*(const Int& c, const Poly& p) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly acc(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) acc *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return acc;
}

Poly Poly::truncate_q(unsigned order) const {
    Poly out;
    for (const auto& [m, c] : terms_)
        if (m.eq <= order) out.terms_[m] = c;
    return out;
}

Poly Poly::subst_t_one_plus_t() const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        // c q^i a^j (1+t)^k
        for (unsigned r = 0; r <= m.et; ++r)
            out.add_term(Monomial{m.eq, m.ea, r}, c * binomial(m.et, r));
    }
    return out;
}

Poly Poly::swap_qt() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_[Monomial{m.et, m.ea, m.eq}] = c;
    return out;
}

Int Poly::content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial out{~0u, ~0u, ~0u};
    for (const auto& [m, c] : terms_) {
        out.eq = std::min(out.eq, m.eq);
        out.ea = std::min(out.ea, m.ea);
        out.et = std::min(out.et, m.et);
    }
    return out;
}

Poly Poly::divide_monomial(const Monomial& m) const {
    Poly out;
    for (const auto& [mm, c] : terms_) {
        if (mm.eq < m.eq || mm.ea < m.ea || mm.et < m.et)
            throw std::invalid_argument("divide_monomial: exponent underflow");
        out.terms_[Monomial{mm.eq - m.eq, mm.ea - m.ea, mm.et - m.et}] = c;
    }
    return out;
}

std::optional<Poly> Poly::div_exact(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
    Poly rem = p;
    Poly quot;
    const auto& [dm, dc] = *d.terms_.rbegin();  // leading term
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (rm.eq < dm.eq || rm.ea < dm.ea || rm.et < dm.et) return std::nullopt;
        if (rc % dc != 0) return std::nullopt;
        Poly step = Poly::monomial(rm.eq - dm.eq, rm.ea - dm.ea, rm.et - dm.et, rc / dc);
        quot += step;
        rem -= step * d;
    }
    return quot;
}

namespace {

void append_monomial_text(std::ostream& os, const Monomial& m, bool latex) {
    auto var = [&](char v, unsigned e) {
        if (e == 0) return;
        os << v;
        if (e > 1) {
            if (latex) os << "^{" << e << "}";
            else os << "^" << e;
        }
    };
    var('q', m.eq);
    var('a', m.ea);
    var('t', m.et);
}

std::string poly_text(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int abs_c = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || m == Monomial{}) {
            os << abs_c;
            if (m != Monomial{} && !latex) os << "*";
        }
        append_monomial_text(os, m, latex);
    }
    return os.str();
}

}  // namespace

std::string Poly::str() const { return poly_text(*this, false); }
std::string Poly::latex() const { return poly_text(*this, true); }

namespace {

// Recursive-descent for the flat emitter grammar: sum of signed products of
// integers and q/a/t powers.
struct PolyParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + why);
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)));
    }

    unsigned parse_exponent() {
        Int e = parse_int();
        if (e > 1000000) fail("exponent too large");
        return static_cast<unsigned>(e);
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        char c = s[pos];
        if (c == 'q' || c == 'a' || c == 't') {
            ++pos;
            unsigned e = eat('^') ? parse_exponent() : 1;
            return Poly::monomial(c == 'q' ? e : 0, c == 'a' ? e : 0, c == 't' ? e : 0);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(parse_int());
        fail("unexpected character");
    }

    Poly parse_term() {
        Poly p = parse_factor();
        for (;;) {
            skip_ws();
            // Accept both explicit '*' and juxtaposition (LaTeX-style "qt").
            if (eat('*')) { p *= parse_factor(); continue; }
            if (pos < s.size() && (s[pos] == 'q' || s[pos] == 'a' || s[pos] == 't')) {
                p *= parse_factor();
                continue;
            }
            return p;
        }
    }

    Poly parse_sum() {
        Poly out;
        bool neg = eat('-');
        if (!neg) eat('+');
        out += neg ? -parse_term() : parse_term();
        for (;;) {
            skip_ws();
            if (pos >= s.size()) return out;
            if (eat('+')) out += parse_term();
            else if (eat('-')) out -= parse_term();
            else fail("expected '+' or '-'");
        }
    }
};

}  // namespace

Poly Poly::parse(std::string_view s) {
    PolyParser parser{s};
    parser.skip_ws();
    if (parser.pos >= s.size()) throw std::invalid_argument("polynomial parse error: empty input");
    Poly p = parser.parse_sum();
    return p;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

RationalQat::RationalQat(Poly num, unsigned dpow) : num_(std::move(num)), dpow_(dpow) {
    if (num_.is_zero()) {
        dpow_ = 0;
        return;
    }
    const Poly omq = Poly::one_minus_q();
    while (dpow_ > 0) {
        auto quot = Poly::div_exact(num_, omq);
        if (!quot) break;
        num_ = std::move(*quot);
        --dpow_;
    }
}

RationalQat& RationalQat::operator+=(const RationalQat& r) {
    unsigned d = std::max(dpow_, r.dpow_);
    const Poly omq = Poly::one_minus_q();
    Poly num = num_ * omq.pow(d - dpow_) + r.num_ * omq.pow(d - r.dpow_);
    *this = RationalQat(std::move(num), d);
    return *this;
}

RationalQat& RationalQat::operator-=(const RationalQat& r) {
    unsigned d = std::max(dpow_, r.dpow_);
    const Poly omq = Poly::one_minus_q();
    Poly num = num_ * omq.pow(d - dpow_) - r.num_ * omq.pow(d - r.dpow_);
    *this = RationalQat(std::move(num), d);
    return *this;
}

RationalQat operator*(const RationalQat& l, const RationalQat& r) {
    return RationalQat(l.num_ * r.num_, l.dpow_ + r.dpow_);
}

RationalQat operator*(const Poly& p, const RationalQat& r) {
    return RationalQat(p * r.num_, r.dpow_);
}

Poly RationalQat::q_series(unsigned order) const {
    if (dpow_ == 0) return num_.truncate_q(order);
    // 1/(1-q)^d = sum_k C(k+d-1, d-1) q^k
    Poly geom;
    for (unsigned k = 0; k <= order; ++k)
        geom += Poly::monomial(k, 0, 0, binomial(k + dpow_ - 1, dpow_ - 1));
    return (num_ * geom).truncate_q(order);
}

std::string RationalQat::str() const {
    if (dpow_ == 0) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (1 - q)";
    if (dpow_ > 1) os << "^" << dpow_;
    return os.str();
}

std::string RationalQat::latex() const {
    if (dpow_ == 0) return num_.latex();
    std::ostringstream os;
    os << "\\frac{" << num_.latex() << "}{(1 - q)";
    if (dpow_ > 1) os << "^{" << dpow_ << "}";
    os << "}";
    return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
}

RatFunc::RatFunc(const RationalQat& x)
    : num_(x.num()), den_(Poly::one_minus_q().pow(x.dpow())) {
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // Common monomial factor.
    Monomial mn = num_.monomial_content();
    Monomial md = den_.monomial_content();
    Monomial g{std::min(mn.eq, md.eq), std::min(mn.ea, md.ea), std::min(mn.et, md.et)};
    if (g != Monomial{}) {
        num_ = num_.divide_monomial(g);
        den_ = den_.divide_monomial(g);
    }
    // Common powers of (1-q): the only polynomial factor our pipelines produce.
    const Poly omq = Poly::one_minus_q();
    for (;;) {
        auto qn = Poly::div_exact(num_, omq);
        if (!qn) break;
        auto qd = Poly::div_exact(den_, omq);
        if (!qd) break;
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    // Full division when exact.
    if (!den_.is_constant()) {
        if (auto quot = Poly::div_exact(num_, den_)) {
            num_ = std::move(*quot);
            den_ = Poly(1);
        }
    }
    // Integer content and denominator sign.
    Int g2 = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g2 > 1) {
        num_ = *Poly::div_exact(num_, Poly(g2));
        den_ = *Poly::div_exact(den_, Poly(g2));
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ = den_ * r.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ = den_ * r.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& r) {
    num_ *= r.num_;
    den_ *= r.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& r) {
    if (r.num_.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    num_ *= r.den_;
    den_ *= r.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

std::optional<Poly> RatFunc::as_polynomial() const {
    return Poly::div_exact(num_, den_);
}

RatFunc RatFunc::subst_t_one_plus_t() const {
    return RatFunc(num_.subst_t_one_plus_t(), den_.subst_t_one_plus_t());
}

RatFunc RatFunc::swap_qt() const {
    return RatFunc(num_.swap_qt(), den_.swap_qt());
}

std::string RatFunc::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string RatFunc::latex() const {
    if (den_ == Poly(1)) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

bool ratfunc_eq(const RatFunc& x, const RatFunc& y) { return x == y; }

namespace {

// den = unit * (1-q)^k with unit a nonzero integer; returns (unit, k).
std::pair<Int, unsigned> split_geometric_denominator(const Poly& den) {
    Poly rest = den;
    unsigned k = 0;
    const Poly omq = Poly::one_minus_q();
    while (!rest.is_constant()) {
        auto quot = Poly::div_exact(rest, omq);
        if (!quot)
            throw std::invalid_argument(
                "denominator is not an integer multiple of a power of (1-q): " + den.str());
        rest = std::move(*quot);
        ++k;
    }
    return {rest.constant_value(), k};
}

}  // namespace

std::pair<Poly, Int> q_series_constrained(const RatFunc& x, unsigned order) {
    auto [unit, k] = split_geometric_denominator(x.den());
    Poly num = x.num();
    if (unit < 0) {
        num = -num;
        unit = -unit;
    }
    Poly series = RationalQat(std::move(num), k).q_series(order);
    // RationalQat normalization may cancel (1-q) factors; that only changes the
    // representation, not the series.
    return {std::move(series), std::move(unit)};
}

RationalQat rational_from_ratfunc(const RatFunc& x) {
    auto [unit, k] = split_geometric_denominator(x.den());
    Poly num = x.num();
    if (unit < 0) {
        num = -num;
        unit = -unit;
    }
    if (unit != 1) {
        auto quot = Poly::div_exact(num, Poly(unit));
        if (!quot)
            throw std::invalid_argument("value is not integral: " + x.str());
        num = std::move(*quot);
    }
    return RationalQat(std::move(num), k);
}

}  // namespace linkhom

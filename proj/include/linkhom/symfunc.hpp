#pragma once

#include "linkhom/partition.hpp"
#include "linkhom/qt_arith.hpp"
#include "linkhom/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkhom {

// Homogeneous symmetric function stored by monomial-basis coefficients over
// the fraction field in q, t. Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc() = default;  // zero of degree 0
    explicit SymFunc(unsigned degree) : degree_(degree) {}
    static SymFunc one();  // degree 0, value 1

    unsigned degree() const { return degree_; }
    const std::map<Partition, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(const Partition& lambda) const;
    void set_coeff(const Partition& lambda, RatFunc c);  // validates |lambda| == degree
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc& operator+=(const SymFunc& r);  // degrees must match (zero is neutral)
    SymFunc& operator-=(const SymFunc& r);
    friend SymFunc operator+(SymFunc l, const SymFunc& r) { l += r; return l; }
    friend SymFunc operator-(SymFunc l, const SymFunc& r) { l -= r; return l; }
    friend SymFunc operator*(const RatFunc& c, const SymFunc& f);

    // Coefficient-wise cross-multiplication equality.
    bool eq(const SymFunc& r) const;

    SymFunc subst_t_one_plus_t() const;
    SymFunc swap_qt() const;

    std::string str() const;    // e.g. "m(2) + (1 + t)*m(1,1)"
    std::string latex() const;

private:
    unsigned degree_ = 0;
    std::map<Partition, RatFunc> coeffs_;
};

SymFunc sf_multiply(const SymFunc& f, const SymFunc& g);

SymFunc basis_m(const Partition& lambda);  // a single monomial basis element
SymFunc basis_e(const Partition& lambda);
SymFunc basis_h(const Partition& lambda);
SymFunc basis_p(const Partition& lambda);
SymFunc p1n(unsigned n);  // p_{1^n}

// Coordinates in the power-sum / elementary bases (keys cover all partitions
// of the degree, zeros included).
std::map<Partition, RatFunc> p_expand(const SymFunc& f);
std::map<Partition, RatFunc> e_expand(const SymFunc& f);

RatFunc hall_inner(const SymFunc& f, const SymFunc& g);  // throws on degree mismatch

// Link symmetric function of v from the finite barred-word formula.
SymFunc link_sym(const BinaryWord& v);
// (1-q)^{n-|v|} L_v; throws std::logic_error if any denominator fails to clear.
SymFunc link_sym_normalized(const BinaryWord& v);

// Coefficient of x_1^{a_1} ... x_k^{a_k} in L_v for an arbitrary composition;
// exposes the raw monomial extraction that backs the symmetry checks.
RatFunc link_sym_composition_coeff(const BinaryWord& v, const std::vector<unsigned>& alpha);

struct EPositivityResult {
    bool positive = false;
    // First offending coefficient when not positive.
    std::string partition;  // e-basis index, e.g. "(2,1)"
    std::string monomial;   // e.g. "q^3*t"
    std::string value;      // the negative rational coefficient
};

// Expands L_v(x; q, 1+t) over the elementary basis and checks that every
// coefficient of q^i t^j in the q-power series (up to q_order) is nonnegative.
EPositivityResult e_positivity_check(const BinaryWord& v, unsigned q_order);

}  // namespace linkhom

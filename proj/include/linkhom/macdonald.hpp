#pragma once

#include "linkhom/partition.hpp"
#include "linkhom/qt_arith.hpp"
#include "linkhom/symfunc.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace linkhom {

// One monomial q^i t^j per cell of a Ferrers diagram (French notation: row 0
// at the bottom, cell (i, j) contributes q^i t^j).
struct CellAlphabet {
    std::vector<std::pair<unsigned, unsigned>> cells;

    size_t size() const { return cells.size(); }
    std::vector<Poly> monomials() const;
    std::string str() const;  // "{1, q, q^2, t}"
};

CellAlphabet b_mu(const Partition& mu);

// F with x_1..x_n replaced by the monomials of A and the rest set to 0.
RatFunc pleth_eval(const SymFunc& f, const CellAlphabet& a);

// Product of all cell monomials of mu: q^{n(mu')} t^{n(mu)}.
Poly t_mu(const Partition& mu);

// Modified Macdonald polynomial in the monomial basis, from the inv/maj
// statistics on fillings of the diagram of mu.
SymFunc htilde(const Partition& mu);

// Coordinates in the modified Macdonald basis.
class MacExpansion {
public:
    MacExpansion() = default;
    explicit MacExpansion(unsigned degree) : degree_(degree) {}

    unsigned degree() const { return degree_; }
    const std::map<Partition, RatFunc>& coords() const { return coords_; }
    RatFunc coord(const Partition& mu) const;
    void set_coord(const Partition& mu, RatFunc c);

private:
    unsigned degree_ = 0;
    std::map<Partition, RatFunc> coords_;
};

// Solves for the coordinates of f; throws std::runtime_error if the computed
// basis were singular (that would be a bug in htilde).
MacExpansion mac_expand(const SymFunc& f);
SymFunc mac_assemble(const MacExpansion& x);

SymFunc nabla(const SymFunc& f);      // scales the mu-coordinate by t_mu
SymFunc nabla_inv(const SymFunc& f);  // ... by 1/t_mu
// Scales the mu-coordinate by f_op[B_mu].
SymFunc delta_op(const SymFunc& f_op, const SymFunc& g);

// Coefficient of htilde(mu) in p_1 * htilde(nu); mu must cover nu.
RatFunc pieri_d(const Partition& mu, const Partition& nu);

}  // namespace linkhom

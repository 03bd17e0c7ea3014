#include "linkhom/macdonald.hpp"

#include "linkhom/linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linkhom {

std::vector<Poly> CellAlphabet::monomials() const {
    std::vector<Poly> out;
    out.reserve(cells.size());
    for (auto [i, j] : cells) out.push_back(Poly::monomial(i, 0, j));
    return out;
}

std::string CellAlphabet::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) os << ", ";
        os << Poly::monomial(cells[k].first, 0, cells[k].second).str();
    }
    os << "}";
    return os.str();
}

CellAlphabet b_mu(const Partition& mu) {
    CellAlphabet out;
    for (size_t row = 0; row < mu.num_parts(); ++row)
        for (unsigned col = 0; col < mu.part(row); ++col)
            out.cells.emplace_back(col, static_cast<unsigned>(row));
    return out;
}

RatFunc pleth_eval(const SymFunc& f, const CellAlphabet& a) {
    if (f.is_zero()) return RatFunc();
    const std::vector<Poly> mons = a.monomials();
    RatFunc out;
    for (const auto& [lambda, c] : f.coeffs()) {
        if (lambda.num_parts() > mons.size()) continue;  // m_lambda vanishes
        // m_lambda evaluated on the alphabet: sum over distinct arrangements.
        std::vector<unsigned> exps(mons.size(), 0);
        std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
        std::sort(exps.begin(), exps.end());
        Poly value;
        do {
            Poly term(1);
            for (size_t k = 0; k < mons.size(); ++k)
                if (exps[k] > 0) term *= mons[k].pow(exps[k]);
            value += term;
        } while (std::next_permutation(exps.begin(), exps.end()));
        out += c * RatFunc(std::move(value));
    }
    return out;
}

Poly t_mu(const Partition& mu) {
    unsigned eq = 0, et = 0;
    for (auto [i, j] : b_mu(mu).cells) {
        eq += i;
        et += j;
    }
    return Poly::monomial(eq, 0, et);
}

namespace {

struct Cell {
    unsigned col, row;
    int south = -1;   // index of the cell directly below, -1 in the bottom row
    unsigned arm = 0;
    unsigned leg = 0;
};

// Cells listed in reading order: rows top to bottom, left to right.
std::vector<Cell> reading_cells(const Partition& mu) {
    std::vector<Cell> cells;
    for (size_t row = mu.num_parts(); row-- > 0;)
        for (unsigned col = 0; col < mu.part(row); ++col) {
            Cell c;
            c.col = col;
            c.row = static_cast<unsigned>(row);
            c.arm = mu.part(row) - 1 - col;
            unsigned leg = 0;
            for (size_t r = row + 1; r < mu.num_parts(); ++r)
                if (mu.part(r) > col) ++leg;
            c.leg = leg;
            cells.push_back(c);
        }
    for (size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].row == 0) continue;
        for (size_t l = 0; l < cells.size(); ++l)
            if (cells[l].col == cells[k].col && cells[l].row == cells[k].row - 1)
                cells[k].south = static_cast<int>(l);
    }
    return cells;
}

// q^{inv} t^{maj} of one filling (values listed in reading order).
Poly filling_weight(const std::vector<Cell>& cells, const std::vector<unsigned>& sigma) {
    unsigned maj = 0;
    int arm_sum = 0;
    for (size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].south < 0) continue;
        if (sigma[k] > sigma[static_cast<size_t>(cells[k].south)]) {
            maj += cells[k].leg + 1;
            arm_sum += static_cast<int>(cells[k].arm);
        }
    }
    int attacking = 0;
    for (size_t k = 0; k < cells.size(); ++k)
        for (size_t l = k + 1; l < cells.size(); ++l) {
            if (sigma[k] <= sigma[l]) continue;
            bool same_row = cells[k].row == cells[l].row;
            bool adjacent = cells[k].row == cells[l].row + 1 && cells[k].col > cells[l].col;
            if (same_row || adjacent) ++attacking;
        }
    int inv = attacking - arm_sum;
    if (inv < 0) throw std::logic_error("negative inv in Macdonald filling");
    return Poly::monomial(static_cast<unsigned>(inv), 0, maj);
}

SymFunc htilde_uncached(const Partition& mu) {
    const unsigned n = mu.sum();
    if (n == 0) return SymFunc::one();
    const std::vector<Cell> cells = reading_cells(mu);
    SymFunc out(n);
    for (const Partition& lambda : partitions_of(n)) {
        std::vector<unsigned> sigma;
        for (size_t i = 0; i < lambda.num_parts(); ++i)
            sigma.insert(sigma.end(), lambda.parts()[i], static_cast<unsigned>(i + 1));
        std::sort(sigma.begin(), sigma.end());
        Poly coeff;
        do {
            coeff += filling_weight(cells, sigma);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        if (!coeff.is_zero()) out.set_coeff(lambda, RatFunc(std::move(coeff)));
    }
    return out;
}

}  // namespace

SymFunc htilde(const Partition& mu) {
    thread_local std::map<Partition, SymFunc> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    SymFunc f = htilde_uncached(mu);
    cache.emplace(mu, f);
    return f;
}

RatFunc MacExpansion::coord(const Partition& mu) const {
    auto it = coords_.find(mu);
    return it == coords_.end() ? RatFunc() : it->second;
}

void MacExpansion::set_coord(const Partition& mu, RatFunc c) {
    if (mu.sum() != degree_)
        throw std::invalid_argument("MacExpansion: partition size does not match degree");
    if (c.is_zero()) coords_.erase(mu);
    else coords_[mu] = std::move(c);
}

MacExpansion mac_expand(const SymFunc& f) {
    const unsigned n = f.degree();
    const std::vector<Partition> parts = partitions_of(n);
    const size_t m = parts.size();
    std::vector<std::vector<RatFunc>> a(m, std::vector<RatFunc>(m));
    std::vector<RatFunc> b(m);
    for (size_t j = 0; j < m; ++j) {
        SymFunc hj = htilde(parts[j]);
        for (size_t i = 0; i < m; ++i) a[i][j] = hj.coeff(parts[i]);
    }
    for (size_t i = 0; i < m; ++i) b[i] = f.coeff(parts[i]);
    std::vector<RatFunc> x = linear_solve(std::move(a), std::move(b));
    MacExpansion out(n);
    for (size_t j = 0; j < m; ++j) out.set_coord(parts[j], x[j]);
    return out;
}

SymFunc mac_assemble(const MacExpansion& x) {
    SymFunc out(x.degree());
    for (const auto& [mu, c] : x.coords()) out += c * htilde(mu);
    return out;
}

namespace {

template <typename Scale>
SymFunc scale_mac_coords(const SymFunc& f, Scale scale) {
    if (f.is_zero()) return f;
    MacExpansion x = mac_expand(f);
    MacExpansion scaled(x.degree());
    for (const auto& [mu, c] : x.coords()) scaled.set_coord(mu, c * scale(mu));
    return mac_assemble(scaled);
}

}  // namespace

SymFunc nabla(const SymFunc& f) {
    return scale_mac_coords(f, [](const Partition& mu) { return RatFunc(t_mu(mu)); });
}

SymFunc nabla_inv(const SymFunc& f) {
    return scale_mac_coords(
        f, [](const Partition& mu) { return RatFunc(Poly(1), t_mu(mu)); });
}

SymFunc delta_op(const SymFunc& f_op, const SymFunc& g) {
    return scale_mac_coords(
        g, [&](const Partition& mu) { return pleth_eval(f_op, b_mu(mu)); });
}

RatFunc pieri_d(const Partition& mu, const Partition& nu) {
    if (!mu.covers(nu))
        throw std::invalid_argument("pieri_d: " + mu.str() + " does not cover " + nu.str());
    SymFunc p1h = sf_multiply(basis_p(Partition({1})), htilde(nu));
    return mac_expand(p1h).coord(mu);
}

}  // namespace linkhom

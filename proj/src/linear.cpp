#include "linkhom/linear.hpp"

#include <stdexcept>
#include <utility>

namespace linkhom {

std::vector<RatFunc> linear_solve(std::vector<std::vector<RatFunc>> a, std::vector<RatFunc> b) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("linear_solve: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("linear_solve: matrix not square");

    // Clear denominators row by row; afterwards every entry is a polynomial.
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        Poly scale(1);
        auto absorb = [&](const Poly& den) {
            if (!Poly::div_exact(scale, den)) scale *= den;
        };
        for (size_t j = 0; j < n; ++j) absorb(a[i][j].den());
        absorb(b[i].den());
        for (size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j].num() * *Poly::div_exact(scale, a[i][j].den());
        m[i][n] = b[i].num() * *Poly::div_exact(scale, b[i].den());
    }

    // Bareiss: entries stay polynomial, divisions are exact.
    Poly prev(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw std::runtime_error("linear_solve: singular system");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto quot = Poly::div_exact(num, prev);
                if (!quot) throw std::logic_error("linear_solve: inexact Bareiss division");
                m[i][j] = std::move(*quot);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }

    std::vector<RatFunc> x(n);
    for (size_t k = n; k-- > 0;) {
        RatFunc acc(m[k][n]);
        for (size_t j = k + 1; j < n; ++j) acc -= RatFunc(m[k][j]) * x[j];
        x[k] = acc / RatFunc(m[k][k]);
    }
    return x;
}

}  // namespace linkhom

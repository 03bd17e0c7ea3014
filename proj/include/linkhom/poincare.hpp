#pragma once

#include "linkhom/qt_arith.hpp"
#include "linkhom/words.hpp"

#include <string>

namespace linkhom {

enum class FvMethod { recurrence, barred_fubini, truncated_infinite, inner_product };

std::string fv_method_name(FvMethod m);
FvMethod fv_method_parse(const std::string& name);  // throws on unknown name

struct PoincareSeries {
    RationalQat value;
    BinaryWord v;
    FvMethod method;
};

// Product of (t^{left 1s + right 2s of u} + a) over the 1s of v, with u built
// from (v, w). w must have one letter per zero of v.
Poly pvw_product(const BinaryWord& v, const BinaryWord& w);

// Memoized recursion on subwords: the empty word gives 1, the all-zero word
// defers to 10^{n-1} with one extra (1-q) factor, and otherwise each
// w in {0,1}^{#zeros of v} contributes q^{#zeros of w} * P_{v,w} * f_w.
RationalQat f_recurrence(const BinaryWord& v);
void clear_recurrence_cache();

// Finite sum over the barred words of v with weight
// q^{area+bar} (1-q)^{-bar-chi} prod_i (a + t^{dinv_i}).
RationalQat f_barred_fubini(const BinaryWord& v);

// Direct truncation of the sum over all level words with the zero pattern of
// v (all entries positive when v is all-zero), up to q-degree <= order.
Poly f_truncated_infinite(const BinaryWord& v, unsigned order);

// sum_d <L_v, e_{n-d} h_d> a^d assembled from the symmetric-function side.
RationalQat f_via_inner_product(const BinaryWord& v);

// Dispatcher; `order` only matters for the truncated route. Checks the
// denominator-power bound for the exact routes.
PoincareSeries compute_fv(const BinaryWord& v, FvMethod method, unsigned order = 8);

}  // namespace linkhom

#include "linkhom/poincare.hpp"

#include "linkhom/partition.hpp"
#include "linkhom/symfunc.hpp"

#include <map>
#include <stdexcept>

namespace linkhom {

std::string fv_method_name(FvMethod m) {
    switch (m) {
        case FvMethod::recurrence: return "recurrence";
        case FvMethod::barred_fubini: return "barred-fubini";
        case FvMethod::truncated_infinite: return "truncated";
        case FvMethod::inner_product: return "inner-product";
    }
    return "?";
}

FvMethod fv_method_parse(const std::string& name) {
    if (name == "recurrence") return FvMethod::recurrence;
    if (name == "barred-fubini" || name == "barred") return FvMethod::barred_fubini;
    if (name == "truncated") return FvMethod::truncated_infinite;
    if (name == "inner-product" || name == "inner") return FvMethod::inner_product;
    throw std::invalid_argument("unknown method '" + name + "'");
}

Poly pvw_product(const BinaryWord& v, const BinaryWord& w) {
    std::vector<uint8_t> u = build_u_word(v, w);
    Poly out(1);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 1) continue;
        unsigned e = 0;
        for (size_t j = 0; j < i; ++j)
            if (u[j] == 1) ++e;
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[j] == 2) ++e;
        out *= Poly::monomial(0, 0, e) + Poly::a();
    }
    return out;
}

namespace {

thread_local std::map<BinaryWord, RationalQat> recurrence_cache;

RationalQat f_recurrence_impl(const BinaryWord& v) {
    if (v.empty()) return RationalQat::one();
    auto it = recurrence_cache.find(v);
    if (it != recurrence_cache.end()) return it->second;

    RationalQat out;
    if (v.all_zero()) {
        BinaryWord head = BinaryWord::ones(1) + BinaryWord::zeros(v.size() - 1);
        out = f_recurrence_impl(head).divided_by_one_minus_q();
    } else {
        const size_t zeros = v.size() - v.weight();
        for (const BinaryWord& w : all_binary_words(zeros)) {
            Poly factor = Poly::monomial(static_cast<unsigned>(zeros - w.weight()), 0, 0) *
                          pvw_product(v, w);
            out += factor * f_recurrence_impl(w);
        }
    }
    recurrence_cache.emplace(v, out);
    return out;
}

}  // namespace

RationalQat f_recurrence(const BinaryWord& v) { return f_recurrence_impl(v); }

void clear_recurrence_cache() { recurrence_cache.clear(); }

RationalQat f_barred_fubini(const BinaryWord& v) {
    if (v.empty()) throw std::invalid_argument("f_barred_fubini: empty word");
    const unsigned chi = v.all_zero() ? 1 : 0;
    RationalQat out;
    for (const BarredWord& gamma : enumerate_barred_fubini(v)) {
        Poly prod = Poly::monomial(gamma.area() + gamma.bar_count(), 0, 0);
        for (unsigned d : dinv_i_all(gamma)) prod *= Poly::a() + Poly::monomial(0, 0, d);
        out += RationalQat(std::move(prod), gamma.bar_count() + chi);
    }
    return out;
}

Poly f_truncated_infinite(const BinaryWord& v, unsigned order) {
    const size_t n = v.size();
    // Positions forced to zero; for the all-zero word there are none and every
    // entry ranges over positive values.
    std::vector<size_t> free_pos;
    for (size_t i = 0; i < n; ++i)
        if (v.all_zero() || v[i] == 0) free_pos.push_back(i);

    LevelWord gamma(n, 0);
    Poly out;
    BarredWord unbarred{gamma, std::vector<uint8_t>(n, 0)};
    auto emit = [&]() {
        Poly prod = Poly::monomial(area(unbarred.levels), 0, 0);
        for (unsigned d : dinv_i_all(unbarred)) prod *= Poly::a() + Poly::monomial(0, 0, d);
        out += prod;
    };
    // Entry k >= 1 contributes k-1 empty boxes, so entries above order+1 are
    // impossible within the area budget.
    auto rec = [&](auto&& self, size_t idx, unsigned area_used) -> void {
        if (idx == free_pos.size()) {
            emit();
            return;
        }
        for (unsigned val = 1; val + area_used <= order + 1; ++val) {
            unbarred.levels[free_pos[idx]] = val;
            self(self, idx + 1, area_used + val - 1);
        }
        unbarred.levels[free_pos[idx]] = 0;
    };
    rec(rec, 0, 0);
    return out.truncate_q(order);
}

RationalQat f_via_inner_product(const BinaryWord& v) {
    if (v.empty()) return RationalQat::one();
    const unsigned n = static_cast<unsigned>(v.size());
    SymFunc l = link_sym(v);
    RatFunc total;
    for (unsigned d = 0; d <= n; ++d) {
        SymFunc eh = sf_multiply(basis_e(d == n ? Partition() : Partition({n - d})),
                                 basis_h(d == 0 ? Partition() : Partition({d})));
        RatFunc pairing = hall_inner(l, eh);
        total += RatFunc(Poly::monomial(0, d, 0)) * pairing;
    }
    return rational_from_ratfunc(total);
}

PoincareSeries compute_fv(const BinaryWord& v, FvMethod method, unsigned order) {
    RationalQat value;
    switch (method) {
        case FvMethod::recurrence: value = f_recurrence(v); break;
        case FvMethod::barred_fubini: value = f_barred_fubini(v); break;
        case FvMethod::truncated_infinite: value = RationalQat(f_truncated_infinite(v, order)); break;
        case FvMethod::inner_product: value = f_via_inner_product(v); break;
    }
    if (method != FvMethod::truncated_infinite) {
        unsigned bound = static_cast<unsigned>(v.size()) - v.weight() + (v.all_zero() ? 1 : 0);
        if (value.dpow() > bound)
            throw std::logic_error("denominator power exceeds the weight bound for " + v.str());
    }
    return PoincareSeries{std::move(value), v, method};
}

}  // namespace linkhom

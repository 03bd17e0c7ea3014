#include "linkhom/symfunc.hpp"

#include "linkhom/linear.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace linkhom {

SymFunc SymFunc::one() {
    SymFunc f(0);
    f.coeffs_[Partition()] = RatFunc(1);
    return f;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void SymFunc::set_coeff(const Partition& lambda, RatFunc c) {
    if (lambda.sum() != degree_)
        throw std::invalid_argument("SymFunc: partition size does not match degree");
    if (c.is_zero()) coeffs_.erase(lambda);
    else coeffs_[lambda] = std::move(c);
}

SymFunc& SymFunc::operator+=(const SymFunc& r) {
    if (r.is_zero()) return *this;
    if (is_zero() && coeffs_.empty()) degree_ = r.degree_;
    if (degree_ != r.degree_)
        throw std::invalid_argument("SymFunc: degree mismatch in addition");
    for (const auto& [lambda, c] : r.coeffs_) {
        RatFunc sum = coeff(lambda) + c;
        set_coeff(lambda, std::move(sum));
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& r) {
    if (r.is_zero()) return *this;
    if (is_zero() && coeffs_.empty()) degree_ = r.degree_;
    if (degree_ != r.degree_)
        throw std::invalid_argument("SymFunc: degree mismatch in subtraction");
    for (const auto& [lambda, c] : r.coeffs_) {
        RatFunc sum = coeff(lambda) - c;
        set_coeff(lambda, std::move(sum));
    }
    return *this;
}

SymFunc operator*(const RatFunc& c, const SymFunc& f) {
    SymFunc out(f.degree());
    if (c.is_zero()) return out;
    for (const auto& [lambda, fc] : f.coeffs_) out.coeffs_[lambda] = c * fc;
    return out;
}

bool SymFunc::eq(const SymFunc& r) const {
    if (is_zero() || r.is_zero()) return is_zero() && r.is_zero();
    if (degree_ != r.degree_) return false;
    for (const auto& [lambda, c] : coeffs_)
        if (!(c == r.coeff(lambda))) return false;
    for (const auto& [lambda, c] : r.coeffs_)
        if (coeffs_.find(lambda) == coeffs_.end() && !c.is_zero()) return false;
    return true;
}

SymFunc SymFunc::subst_t_one_plus_t() const {
    SymFunc out(degree_);
    for (const auto& [lambda, c] : coeffs_) out.set_coeff(lambda, c.subst_t_one_plus_t());
    return out;
}

SymFunc SymFunc::swap_qt() const {
    SymFunc out(degree_);
    for (const auto& [lambda, c] : coeffs_) out.set_coeff(lambda, c.swap_qt());
    return out;
}

namespace {

std::string symfunc_text(const SymFunc& f, bool latex) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : f.coeffs()) {
        if (!first) os << " + ";
        first = false;
        auto p = c.as_polynomial();
        if (p && *p == Poly(1)) {
            // bare basis element
        } else if (latex) {
            os << "\\left(" << c.latex() << "\\right)";
        } else {
            bool single = p && p->terms().size() == 1;
            if (single) os << c.str() << "*";
            else os << "(" << c.str() << ")*";
        }
        if (latex) {
            os << "m_{" << (lambda.empty() ? "" : lambda.str().substr(1, lambda.str().size() - 2))
               << "}";
        } else {
            os << "m" << lambda.str();
        }
    }
    return os.str();
}

}  // namespace

std::string SymFunc::str() const { return symfunc_text(*this, false); }
std::string SymFunc::latex() const { return symfunc_text(*this, true); }

namespace {

using ExpVec = std::vector<unsigned>;

// Expansion of f into an honest polynomial in `nvars` variables. Faithful as
// long as nvars >= degree(f).
std::map<ExpVec, RatFunc> expand_in_vars(const SymFunc& f, size_t nvars) {
    std::map<ExpVec, RatFunc> out;
    for (const auto& [lambda, c] : f.coeffs()) {
        if (lambda.num_parts() > nvars)
            throw std::invalid_argument("expand_in_vars: too few variables");
        ExpVec exps(nvars, 0);
        std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
        std::sort(exps.begin(), exps.end());
        do {
            auto [it, inserted] = out.try_emplace(exps, c);
            if (!inserted) it->second += c;
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

}  // namespace

SymFunc sf_multiply(const SymFunc& f, const SymFunc& g) {
    const unsigned degree = f.degree() + g.degree();
    SymFunc out(degree);
    if (f.is_zero() || g.is_zero()) return out;
    const size_t nvars = std::max<size_t>(degree, 1);
    auto fe = expand_in_vars(f, nvars);
    auto ge = expand_in_vars(g, nvars);
    std::map<ExpVec, RatFunc> prod;
    for (const auto& [ef, cf] : fe)
        for (const auto& [eg, cg] : ge) {
            ExpVec e(nvars);
            for (size_t i = 0; i < nvars; ++i) e[i] = ef[i] + eg[i];
            // Only weakly decreasing exponent vectors are read back out.
            if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
            RatFunc term = cf * cg;
            auto [it, inserted] = prod.try_emplace(std::move(e), term);
            if (!inserted) it->second += term;
        }
    for (const auto& [e, c] : prod) {
        std::vector<unsigned> parts;
        for (unsigned x : e)
            if (x > 0) parts.push_back(x);
        RatFunc value = c;
        if (!value.is_zero()) out.set_coeff(Partition(std::move(parts)), std::move(value));
    }
    return out;
}

SymFunc basis_m(const Partition& lambda) {
    SymFunc f(lambda.sum());
    f.set_coeff(lambda, RatFunc(1));
    return f;
}

namespace {

SymFunc e_single(unsigned r) {
    SymFunc f(r);
    f.set_coeff(Partition(std::vector<unsigned>(r, 1)), RatFunc(1));
    return f;
}

SymFunc h_single(unsigned r) {
    SymFunc f(r);
    for (const Partition& lambda : partitions_of(r)) f.set_coeff(lambda, RatFunc(1));
    return f;
}

SymFunc p_single(unsigned r) {
    SymFunc f(r);
    if (r == 0) return SymFunc::one();
    f.set_coeff(Partition({r}), RatFunc(1));
    return f;
}

template <typename Single>
SymFunc product_basis(const Partition& lambda, Single single,
                      std::map<Partition, SymFunc>& cache) {
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    SymFunc f = SymFunc::one();
    for (unsigned part : lambda.parts()) f = sf_multiply(f, single(part));
    cache.emplace(lambda, f);
    return f;
}

}  // namespace

SymFunc basis_e(const Partition& lambda) {
    thread_local std::map<Partition, SymFunc> cache;
    return product_basis(lambda, e_single, cache);
}

SymFunc basis_h(const Partition& lambda) {
    thread_local std::map<Partition, SymFunc> cache;
    return product_basis(lambda, h_single, cache);
}

SymFunc basis_p(const Partition& lambda) {
    thread_local std::map<Partition, SymFunc> cache;
    return product_basis(lambda, p_single, cache);
}

SymFunc p1n(unsigned n) { return basis_p(Partition(std::vector<unsigned>(n, 1))); }

namespace {

// Coordinates of f in the basis whose elements are given by `basis_of`.
std::map<Partition, RatFunc> expand_in_basis(const SymFunc& f,
                                             const std::function<SymFunc(const Partition&)>& basis_of) {
    const std::vector<Partition> parts = partitions_of(f.degree());
    const size_t n = parts.size();
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> b(n);
    for (size_t j = 0; j < n; ++j) {
        SymFunc bj = basis_of(parts[j]);
        for (size_t i = 0; i < n; ++i) a[i][j] = bj.coeff(parts[i]);
    }
    for (size_t i = 0; i < n; ++i) b[i] = f.coeff(parts[i]);
    std::vector<RatFunc> x = linear_solve(std::move(a), std::move(b));
    std::map<Partition, RatFunc> out;
    for (size_t j = 0; j < n; ++j) out[parts[j]] = x[j];
    return out;
}

}  // namespace

std::map<Partition, RatFunc> p_expand(const SymFunc& f) {
    return expand_in_basis(f, basis_p);
}

std::map<Partition, RatFunc> e_expand(const SymFunc& f) {
    return expand_in_basis(f, basis_e);
}

RatFunc hall_inner(const SymFunc& f, const SymFunc& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
        throw std::invalid_argument("hall_inner: degree mismatch");
    if (f.is_zero() || g.is_zero()) return RatFunc();
    auto fp = p_expand(f);
    auto gp = p_expand(g);
    RatFunc out;
    for (const auto& [lambda, fc] : fp) {
        const RatFunc& gc = gp.at(lambda);
        out += RatFunc(Poly(lambda.z())) * fc * gc;
    }
    return out;
}

namespace {

// chi(v = 0^n) adjusts the (1-q) weight of the all-zero word.
unsigned zero_word_chi(const BinaryWord& v) { return v.all_zero() ? 1 : 0; }

// Sum of t^{dinv} over all words pi with content alpha (alpha_i letters i).
Poly content_dinv_sum(const BarredWord& gamma, const std::vector<unsigned>& alpha) {
    LabelWord labels;
    for (size_t i = 0; i < alpha.size(); ++i)
        labels.insert(labels.end(), alpha[i], static_cast<int>(i + 1));
    if (labels.size() != gamma.levels.size())
        throw std::invalid_argument("content does not match word length");
    std::sort(labels.begin(), labels.end());
    Poly out;
    do {
        out += Poly::monomial(0, 0, dinv_barred(gamma, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

}  // namespace

namespace {

SymFunc link_sym_uncached(const BinaryWord& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned chi = zero_word_chi(v);
    const std::vector<Partition> parts = partitions_of(n);

    // Group words by (q-power, bar count); the scalar weight only depends on
    // those, and integer polynomial accumulation is much cheaper than fraction
    // arithmetic per word.
    std::map<std::pair<unsigned, unsigned>, std::map<Partition, Poly>> classes;
    for (const BarredWord& gamma : enumerate_barred_fubini(v)) {
        auto& acc = classes[{gamma.area() + gamma.bar_count(), gamma.bar_count()}];
        for (const Partition& lambda : parts) {
            std::vector<unsigned> alpha = lambda.parts();
            acc[lambda] += content_dinv_sum(gamma, alpha);
        }
    }

    SymFunc out(n);
    const Poly omq = Poly::one_minus_q();
    for (const auto& [key, acc] : classes) {
        RatFunc weight(Poly::monomial(key.first, 0, 0), omq.pow(key.second + chi));
        for (const auto& [lambda, tpoly] : acc) {
            if (tpoly.is_zero()) continue;
            RatFunc c = out.coeff(lambda) + weight * RatFunc(tpoly);
            out.set_coeff(lambda, std::move(c));
        }
    }
    return out;
}

}  // namespace

SymFunc link_sym(const BinaryWord& v) {
    if (v.empty()) return SymFunc::one();
    thread_local std::map<BinaryWord, SymFunc> cache;
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    SymFunc f = link_sym_uncached(v);
    cache.emplace(v, f);
    return f;
}

SymFunc link_sym_normalized(const BinaryWord& v) {
    SymFunc l = link_sym(v);
    const unsigned n = static_cast<unsigned>(v.size());
    RatFunc factor(Poly::one_minus_q().pow(n - v.weight()));
    SymFunc out(n);
    for (const auto& [lambda, c] : l.coeffs()) {
        RatFunc scaled = factor * c;
        if (!scaled.as_polynomial())
            throw std::logic_error("link_sym_normalized: coefficient of m" + lambda.str() +
                                   " did not clear its denominator: " + scaled.str());
        out.set_coeff(lambda, std::move(scaled));
    }
    return out;
}

RatFunc link_sym_composition_coeff(const BinaryWord& v, const std::vector<unsigned>& alpha) {
    if (v.empty()) throw std::invalid_argument("composition coefficient needs n >= 1");
    const unsigned chi = zero_word_chi(v);
    const Poly omq = Poly::one_minus_q();
    RatFunc out;
    for (const BarredWord& gamma : enumerate_barred_fubini(v)) {
        Poly tpoly = content_dinv_sum(gamma, alpha);
        if (tpoly.is_zero()) continue;
        RatFunc weight(Poly::monomial(gamma.area() + gamma.bar_count(), 0, 0),
                       omq.pow(gamma.bar_count() + chi));
        out += weight * RatFunc(tpoly);
    }
    return out;
}

EPositivityResult e_positivity_check(const BinaryWord& v, unsigned q_order) {
    SymFunc shifted = link_sym(v).subst_t_one_plus_t();
    auto coords = e_expand(shifted);
    for (const auto& [lambda, c] : coords) {
        if (c.is_zero()) continue;
        auto [series, den] = q_series_constrained(c, q_order);
        for (const auto& [m, coeff] : series.terms()) {
            if (coeff < 0) {
                EPositivityResult r;
                r.positive = false;
                r.partition = lambda.str();
                r.monomial = Poly::monomial(m.eq, 0, m.et).str();
                std::ostringstream os;
                os << coeff;
                if (den != 1) os << "/" << den;
                r.value = os.str();
                return r;
            }
        }
    }
    return {true, "", "", ""};
}

}  // namespace linkhom

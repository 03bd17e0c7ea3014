#include "linkhom/conjectures.hpp"

#include "linkhom/macdonald.hpp"
#include "linkhom/partition.hpp"
#include "linkhom/poincare.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace linkhom {

namespace {

std::string fmt_n(unsigned n) { return "n=" + std::to_string(n); }

std::string word_or_empty(const BinaryWord& v) { return v.empty() ? "(empty)" : v.str(); }

Witness diff_witness(const std::string& partition, const RatFunc& expected,
                     const RatFunc& actual) {
    Witness w;
    w.partition = partition;
    RatFunc diff = expected - actual;
    if (!diff.num().is_zero()) {
        const Monomial& m = diff.num().terms().begin()->first;
        w.monomial = Poly::monomial(m.eq, m.ea, m.et).str();
    }
    w.expected = expected.str();
    w.actual = actual.str();
    return w;
}

ConjectureReport compare_rational(const std::string& id, const std::string& parameters,
                                  const RationalQat& expected, const RationalQat& actual,
                                  std::string note = "") {
    ConjectureReport r{id, parameters, expected == actual, std::nullopt, std::move(note)};
    if (!r.pass) r.witness = diff_witness("", RatFunc(expected), RatFunc(actual));
    return r;
}

ConjectureReport compare_poly(const std::string& id, const std::string& parameters,
                              const Poly& expected, const Poly& actual, std::string note = "") {
    ConjectureReport r{id, parameters, expected == actual, std::nullopt, std::move(note)};
    if (!r.pass) r.witness = diff_witness("", RatFunc(expected), RatFunc(actual));
    return r;
}

}  // namespace

ConjectureReport compare_sym(const std::string& id, const std::string& parameters,
                             const SymFunc& expected, const SymFunc& actual, std::string note) {
    ConjectureReport r{id, parameters, true, std::nullopt, std::move(note)};
    if (expected.degree() != actual.degree() && !expected.is_zero() && !actual.is_zero()) {
        r.pass = false;
        r.witness = Witness{"", "", "degree " + std::to_string(expected.degree()),
                            "degree " + std::to_string(actual.degree())};
        return r;
    }
    unsigned degree = expected.is_zero() ? actual.degree() : expected.degree();
    for (const Partition& lambda : partitions_of(degree)) {
        RatFunc e = expected.coeff(lambda);
        RatFunc a = actual.coeff(lambda);
        if (!(e == a)) {
            r.pass = false;
            r.witness = diff_witness("m" + lambda.str(), e, a);
            return r;
        }
    }
    return r;
}

ConjectureReport check_nabla_p1n_against(unsigned n, const SymFunc& normalized_link) {
    SymFunc lhs = nabla(p1n(n));
    return compare_sym("nabla-p1n", fmt_n(n), lhs, normalized_link);
}

ConjectureReport check_nabla_p1n(unsigned n) {
    return check_nabla_p1n_against(n, link_sym_normalized(BinaryWord::zeros(n)));
}

ConjectureReport check_delta_en1(unsigned n) {
    if (n == 0) throw std::invalid_argument("check_delta_en1: n must be positive");
    SymFunc eop = n == 1 ? SymFunc::one() : basis_e(Partition({n - 1}));
    SymFunc lhs = delta_op(eop, p1n(n));
    SymFunc rhs(n);
    for (size_t k = 0; k < n; ++k) {
        std::vector<uint8_t> bits(n, 0);
        bits[k] = 1;
        rhs += link_sym_normalized(BinaryWord(std::move(bits)));
    }
    return compare_sym("delta-e_{n-1}-p1n", fmt_n(n), lhs, rhs);
}

ConjectureReport check_append_zero(const BinaryWord& v) {
    SymFunc lhs = nabla(sf_multiply(basis_p(Partition({1})), nabla_inv(link_sym_normalized(v))));
    SymFunc rhs = link_sym_normalized(v + BinaryWord::zeros(1));
    return compare_sym("append-zero", "v=" + word_or_empty(v), lhs, rhs);
}

ConjectureReport check_b1(const BinaryWord& v) {
    SymFunc lhs = link_sym(v + BinaryWord::zeros(1));
    SymFunc rhs = link_sym(BinaryWord::ones(1) + v) +
                  RatFunc(Poly::q()) * link_sym(BinaryWord::zeros(1) + v);
    return compare_sym("B1", "v=" + word_or_empty(v), lhs, rhs);
}

ConjectureReport check_b2(unsigned n, unsigned k, bool printed_exponent) {
    if (k < 1 || k > n) throw std::invalid_argument("check_b2: need 1 <= k <= n");
    SymFunc lhs = link_sym(BinaryWord::zeros(n));
    SymFunc rhs(n);
    for (const BinaryWord& v : all_binary_words(k)) {
        unsigned e = (printed_exponent ? n : k) - v.weight();
        rhs += RatFunc(Poly::monomial(e, 0, 0)) * link_sym(v + BinaryWord::zeros(n - k));
    }
    std::ostringstream params;
    params << "n=" << n << " k=" << k;
    return compare_sym("B2", params.str(), lhs, rhs,
                       printed_exponent ? "as printed (exponent n-|v|)"
                                        : "derived variant (exponent k-|v|)");
}

ConjectureReport check_b3(const BinaryWord& u, const BinaryWord& v) {
    SymFunc l1 = link_sym(u + BinaryWord::parse("011") + v);
    SymFunc l2 = link_sym(u + BinaryWord::parse("101") + v);
    SymFunc l3 = link_sym(u + BinaryWord::parse("110") + v);
    SymFunc lhs = RatFunc(Poly::t()) * (l1 - l2);
    SymFunc rhs = l2 - l3;
    return compare_sym("B3", "u=" + word_or_empty(u) + " v=" + word_or_empty(v), lhs, rhs);
}

namespace {

BinaryWord b4_word(unsigned a, unsigned b, unsigned c) {
    return BinaryWord::zeros(a) + BinaryWord::ones(b) + BinaryWord::zeros(c);
}

}  // namespace

ConjectureReport check_b4(unsigned a, unsigned b, unsigned c) {
    Partition ones_b(std::vector<unsigned>(b, 1));
    SymFunc x = nabla(p1n(a));
    x = sf_multiply(htilde(ones_b), x);
    x = nabla_inv(x);
    x = nabla(sf_multiply(p1n(c), x));
    SymFunc rhs = link_sym_normalized(b4_word(a, b, c));
    std::ostringstream params;
    params << "a=" << a << " b=" << b << " c=" << c;
    return compare_sym("B4", params.str(), rhs, x);
}

ConjectureReport check_b5(unsigned a, unsigned b, bool normalized_lhs) {
    if (a + b == 0)
        throw std::invalid_argument("check_b5: the scalar is 0/0 when a = b = 0");
    BinaryWord word = BinaryWord::ones(a) + BinaryWord::zeros(1) + BinaryWord::ones(b);
    SymFunc lhs = normalized_lhs ? link_sym_normalized(word) : link_sym(word);

    SymFunc h = htilde(Partition(std::vector<unsigned>(a + b, 1)));
    SymFunc p1 = basis_p(Partition({1}));
    // [A, M](1) with A = nabla p_1 nabla^{-1} and M = multiplication by h:
    // A(M(1)) - M(A(1)) = nabla(p_1 nabla^{-1} h) - h p_1.
    SymFunc commutator = nabla(sf_multiply(p1, nabla_inv(h))) - sf_multiply(h, p1);
    RatFunc scalar(Poly::monomial(0, 0, a) - Poly(1), Poly::monomial(0, 0, a + b) - Poly(1));
    SymFunc rhs = scalar * commutator + sf_multiply(h, p1);

    std::ostringstream params;
    params << "a=" << a << " b=" << b;
    return compare_sym("B5", params.str(), lhs, rhs,
                       normalized_lhs ? "normalized variant" : "as printed (unnormalized)");
}

ConjectureReport check_epositivity(const BinaryWord& v, unsigned q_order) {
    EPositivityResult res = e_positivity_check(v, q_order);
    ConjectureReport r{"e-positivity", "v=" + v.str() + " order=" + std::to_string(q_order),
                       res.positive, std::nullopt, ""};
    if (!res.positive)
        r.witness = Witness{res.partition, res.monomial, ">= 0", res.value};
    return r;
}

VerifyScope verify_scope_parse(const std::string& name) {
    if (name == "routes") return VerifyScope::routes;
    if (name == "lemma23") return VerifyScope::lemma23;
    if (name == "conj43") return VerifyScope::conj43;
    if (name == "bergeron") return VerifyScope::bergeron;
    if (name == "epos") return VerifyScope::epos;
    if (name == "all") return VerifyScope::all;
    throw std::invalid_argument("unknown verify scope '" + name + "'");
}

std::string verify_scope_name(VerifyScope s) {
    switch (s) {
        case VerifyScope::routes: return "routes";
        case VerifyScope::lemma23: return "lemma23";
        case VerifyScope::conj43: return "conj43";
        case VerifyScope::bergeron: return "bergeron";
        case VerifyScope::epos: return "epos";
        case VerifyScope::all: return "all";
    }
    return "?";
}

namespace {

void append_routes(std::vector<Check>& out, const VerifyOptions& opt) {
    for (unsigned n = 1; n <= opt.max_n; ++n)
        for (const BinaryWord& v : all_binary_words(n))
            out.push_back({"route-rec-vs-barred", "v=" + v.str(), [v]() {
                               return compare_rational("route-rec-vs-barred", "v=" + v.str(),
                                                       f_recurrence(v), f_barred_fubini(v));
                           }});
    for (unsigned n = 1; n <= std::min(opt.max_n, 5u); ++n)
        for (const BinaryWord& v : all_binary_words(n))
            out.push_back({"route-inner-product", "v=" + v.str(), [v]() {
                               return compare_rational("route-inner-product", "v=" + v.str(),
                                                       f_barred_fubini(v), f_via_inner_product(v));
                           }});
    for (unsigned n = 1; n <= std::min(opt.max_n, 4u); ++n)
        for (const BinaryWord& v : all_binary_words(n)) {
            unsigned order = opt.trunc_order;
            std::string params = "v=" + v.str() + " order=" + std::to_string(order);
            out.push_back({"route-truncated", params, [v, order, params]() {
                               return compare_poly("route-truncated", params,
                                                   f_barred_fubini(v).q_series(order),
                                                   f_truncated_infinite(v, order));
                           }});
        }
}

void append_lemma23(std::vector<Check>& out, const VerifyOptions& opt) {
    for (unsigned n = 1; n <= std::min(opt.max_n, 5u); ++n)
        out.push_back({"scaling-zero-word", fmt_n(n), [n]() {
                           SymFunc lhs = RatFunc(Poly::one_minus_q()) *
                                         link_sym(BinaryWord::zeros(n));
                           SymFunc rhs = link_sym(BinaryWord::ones(1) + BinaryWord::zeros(n - 1));
                           return compare_sym("scaling-zero-word", fmt_n(n), lhs, rhs);
                       }});
}

void append_conj43(std::vector<Check>& out, const VerifyOptions& opt) {
    for (unsigned n = 1; n <= opt.max_n; ++n)
        out.push_back({"nabla-p1n", fmt_n(n), [n]() { return check_nabla_p1n(n); }});
    for (unsigned n = 1; n <= opt.max_n; ++n)
        out.push_back({"delta-e_{n-1}-p1n", fmt_n(n), [n]() { return check_delta_en1(n); }});
    for (unsigned len = 0; len + 1 <= opt.max_n; ++len)
        for (const BinaryWord& v : all_binary_words(len))
            out.push_back({"append-zero", "v=" + word_or_empty(v),
                           [v]() { return check_append_zero(v); }});
}

void append_bergeron(std::vector<Check>& out, const VerifyOptions& opt) {
    for (unsigned len = 0; len + 1 <= opt.max_n; ++len)
        for (const BinaryWord& v : all_binary_words(len))
            out.push_back({"B1", "v=" + word_or_empty(v), [v]() { return check_b1(v); }});
    for (unsigned n = 1; n <= opt.max_n; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (bool printed : {true, false}) {
                std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     (printed ? " [printed]" : " [derived]");
                out.push_back({"B2", params,
                               [n, k, printed]() { return check_b2(n, k, printed); }});
            }
    for (unsigned extra = 0; extra + 3 <= opt.max_n; ++extra)
        for (unsigned lu = 0; lu <= extra; ++lu)
            for (const BinaryWord& u : all_binary_words(lu))
                for (const BinaryWord& v : all_binary_words(extra - lu))
                    out.push_back({"B3", "u=" + word_or_empty(u) + " v=" + word_or_empty(v),
                                   [u, v]() { return check_b3(u, v); }});
    unsigned b4_max = std::min(opt.max_n, 4u);
    for (unsigned total = 1; total <= b4_max; ++total)
        for (unsigned a = 0; a <= total; ++a)
            for (unsigned b = 0; a + b <= total; ++b) {
                unsigned c = total - a - b;
                std::string params =
                    "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
                out.push_back({"B4", params, [a, b, c]() { return check_b4(a, b, c); }});
            }
    unsigned b5_max = std::min(opt.max_n >= 1 ? opt.max_n - 1 : 0u, 3u);
    for (unsigned total = 1; total <= b5_max; ++total)
        for (unsigned a = 0; a <= total; ++a)
            for (bool normalized : {false, true}) {
                unsigned b = total - a;
                std::string params = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                     (normalized ? " [normalized]" : " [printed]");
                out.push_back({"B5", params,
                               [a, b, normalized]() { return check_b5(a, b, normalized); }});
            }
}

void append_epos(std::vector<Check>& out, const VerifyOptions& opt) {
    for (unsigned n = 1; n <= opt.max_n; ++n)
        for (const BinaryWord& v : all_binary_words(n)) {
            unsigned order = opt.q_order;
            out.push_back({"e-positivity", "v=" + v.str() + " order=" + std::to_string(order),
                           [v, order]() { return check_epositivity(v, order); }});
        }
}

}  // namespace

std::vector<Check> build_suite(VerifyScope scope, const VerifyOptions& options) {
    std::vector<Check> out;
    switch (scope) {
        case VerifyScope::routes: append_routes(out, options); break;
        case VerifyScope::lemma23: append_lemma23(out, options); break;
        case VerifyScope::conj43: append_conj43(out, options); break;
        case VerifyScope::bergeron: append_bergeron(out, options); break;
        case VerifyScope::epos: append_epos(out, options); break;
        case VerifyScope::all:
            append_routes(out, options);
            append_lemma23(out, options);
            append_conj43(out, options);
            append_bergeron(out, options);
            append_epos(out, options);
            break;
    }
    return out;
}

std::vector<ConjectureReport> run_checks(const std::vector<Check>& checks, unsigned threads) {
    std::vector<ConjectureReport> reports(checks.size());
    if (threads <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) reports[i] = checks[i].run();
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            reports[i] = checks[i].run();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace linkhom

#pragma once

#include "linkhom/symfunc.hpp"
#include "linkhom/words.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace linkhom {

struct Witness {
    std::string partition;
    std::string monomial;
    std::string expected;
    std::string actual;
};

struct ConjectureReport {
    std::string id;
    std::string parameters;
    bool pass = false;
    std::optional<Witness> witness;
    std::string note;  // reading variant, degenerate-case remarks, ...
};

// Coefficient-by-coefficient comparison; on mismatch the witness names the
// first differing partition and the first monomial of the difference.
ConjectureReport compare_sym(const std::string& id, const std::string& parameters,
                             const SymFunc& expected, const SymFunc& actual,
                             std::string note = "");

// nabla p_{1^n} vs the normalized link function of 0^n.
ConjectureReport check_nabla_p1n(unsigned n);
// Same comparison against a caller-supplied right-hand side; lets tests drive
// the failure path with a perturbed input.
ConjectureReport check_nabla_p1n_against(unsigned n, const SymFunc& normalized_link);

// Delta_{e_{n-1}} p_{1^n} vs the sum of normalized link functions over words
// of weight 1.
ConjectureReport check_delta_en1(unsigned n);

// Normalized link function of v0 vs nabla p_1 nabla^{-1} applied to that of v.
ConjectureReport check_append_zero(const BinaryWord& v);

// L_{v0} = L_{1v} + q L_{0v}.
ConjectureReport check_b1(const BinaryWord& v);
// L_{0^n} vs sum over v in {0,1}^k of q^e L_{v 0^{n-k}}. The printed reading
// uses e = n-|v|; the derived reading (iterating the one-letter recursion)
// uses e = k-|v|.
ConjectureReport check_b2(unsigned n, unsigned k, bool printed_exponent);
// t (L_{u011v} - L_{u101v}) = L_{u101v} - L_{u110v}.
ConjectureReport check_b3(const BinaryWord& u, const BinaryWord& v);
// Normalized link function of 0^a 1^b 0^c vs the operator product
// nabla p_{1^c} nabla^{-1} Htilde_{1^b} nabla p_{1^a} applied to 1.
ConjectureReport check_b4(unsigned a, unsigned b, unsigned c);
// (t^a-1)/(t^{a+b}-1) [nabla p_1 nabla^{-1}, Htilde_{1^{a+b}}] + Htilde_{1^{a+b}} p_1
// against the link function of 1^a 0 1^b, unnormalized as printed or with the
// normalized left-hand side. (a, b) = (0, 0) is rejected: the scalar is 0/0.
ConjectureReport check_b5(unsigned a, unsigned b, bool normalized_lhs);

ConjectureReport check_epositivity(const BinaryWord& v, unsigned q_order);

// A named, deferred check; suites are built first so runners can schedule and
// print them deterministically.
struct Check {
    std::string id;
    std::string parameters;
    std::function<ConjectureReport()> run;
};

enum class VerifyScope { routes, lemma23, conj43, bergeron, epos, all };
VerifyScope verify_scope_parse(const std::string& name);
std::string verify_scope_name(VerifyScope s);

struct VerifyOptions {
    unsigned max_n = 4;
    unsigned q_order = 10;     // e-positivity series order
    unsigned trunc_order = 8;  // truncated-route comparison order
};

std::vector<Check> build_suite(VerifyScope scope, const VerifyOptions& options);

// Executes checks (in parallel when threads > 1) and returns reports in suite
// order. Results do not depend on the thread count.
std::vector<ConjectureReport> run_checks(const std::vector<Check>& checks, unsigned threads);

}  // namespace linkhom

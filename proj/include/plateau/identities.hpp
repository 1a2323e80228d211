#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plateau/bigint.hpp"
#include "plateau/polynomial.hpp"

namespace plateau {

// ---------------------------------------------------------------------------
// Reference polynomial families, each computable by independent methods.
// ---------------------------------------------------------------------------

enum class NMethod { stirling, matching, my, perm_exc, perm_cdes, recurrence };
NMethod parse_n_method(std::string_view name);
std::string n_method_name(NMethod m);

// The ascent-plateau polynomial N_n(x).
//   stirling   sum of x^ap over order-n Stirling permutations
//   matching   sum of x^so over matchings of [2n]
//   my         sum of x^(neg+star) over MY-sequences of length n
//   perm_exc   sum of x^(n-exc) 2^(n-cyc) over S_n
//   perm_cdes  sum of x^(cyc+cdes) 2^(n-cyc) over S_n
//   recurrence N_{m+1} = (2m+1) x N_m + 2x(1-x) N_m', from N_0 = 1
// The enumerative methods require n >= 1; the recurrence also accepts n = 0.
Polynomial poly_N(int n, NMethod method);

// Triangle N(n,k) via N(n+1,k) = 2k N(n,k) + (2n-2k+3) N(n,k-1) with
// N(1,1) = 1. Row n (1-based) is rows[n-1], holding k = 1..n.
std::vector<std::vector<BigInt>> table_N(int n_max);

// Classical Eulerian polynomial A_n(x) by excedance count; A_0 = 1.
Polynomial poly_eulerian(int n);

// A_n(x;q) = sum over S_n of x^exc q^cyc; n >= 1.
BiPolynomial poly_q_eulerian(int n);

enum class KMethod { invseq, substitution };
KMethod parse_k_method(std::string_view name);

// 1/k-Eulerian polynomial A_n^(k)(x): either the ascent distribution over
// k-inversion sequences, or k^n A_n(x;1/k) via exact substitution.
Polynomial poly_k_eulerian(int n, int k, KMethod method);

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

struct IdentityParams {
    int n = 0;      // > 0: check this n only; 0: the default range
    int n_max = 0;  // > 0: replaces the default range bound
    int k = 0;      // > 0: this k only (ids parameterised by k)
    int q = 0;      // > 0: this q only (egf-Aq)
    int order = -1; // >= 0: series order; default 8
};

struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, long long>> params;
    bool pass = false;
    std::string witness;      // first differing object/coefficient; empty on pass
    std::string detail_json;  // optional extra payload, already-serialized JSON
    long long elapsed_ms = 0;
};

const std::vector<std::string>& identity_catalog();
bool is_identity_id(std::string_view id);

// Evaluates both sides of the named identity exactly; throws
// std::invalid_argument for unknown ids or invalid parameters.
IdentityReport verify_identity(const std::string& id, const IdentityParams& params);

// Whole catalog over default ranges; max_n > 0 caps/replaces the range
// bounds, order >= 0 replaces the series order. One report per (id, k/q).
std::vector<IdentityReport> verify_all(int max_n = 0, int order = -1);

// `include_timing` controls the elapsed_ms field; leave it out wherever
// byte-identical output across runs matters.
std::string report_to_json(const IdentityReport& r, bool include_timing);

std::string json_escape(std::string_view s);

}  // namespace plateau

// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_COUNTING_HPP
#define HERMITIAN_COUNTING_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hermitian/curve.hpp"
#include "hermitian/field.hpp"

namespace hermitian {

enum class CountMethod { brute, fiber, subgroup, closed, formula };

const char* to_string(CountMethod m);
CountMethod count_method_from_string(const std::string& name);

// Exact point count with provenance. count includes the unique point at
// infinity; every counter adds exactly 1 to its affine count.
struct CountRecord {
    CurveParams params;
    std::uint64_t n = 1;
    mpz_class count;
    CountMethod method = CountMethod::brute;
};

// Enforces count >= 1 and the Hasse-Weil bound
// (count - (p^n+1))^2 <= 4 g^2 p^n, all in exact integers.
void validate(const CountRecord& rec);

// Enumeration limits. Exceeding one raises budget_error, never truncates.
struct Budgets {
    std::uint64_t brute_pairs = std::uint64_t{1} << 26;    // cap on p^{2n}
    std::uint64_t enum_elements = std::uint64_t{1} << 24;  // cap on p^n
    std::uint64_t subgroup_size = std::uint64_t{1} << 24;  // cap on (p^n-1)/e
};

// Full enumeration of (x, y) pairs. The independent oracle.
CountRecord count_brute(const CurveParams& params, std::uint64_t n, const Budgets& budgets = {});
CountRecord count_brute(const Field& F, const CurveParams& params, const Budgets& budgets = {});

// Enumerates x only, using the image subspace of y -> y^{p^k} + y: each
// representable right side contributes |kernel| solutions.
CountRecord count_fiber(const CurveParams& params, std::uint64_t n, const Budgets& budgets = {});
CountRecord count_fiber(const Field& F, const CurveParams& params, const Budgets& budgets = {});

// Enumerates only the image subgroup of x -> x^M (order (p^n-1)/e with
// e = gcd(M, p^n-1)) as generator powers; each member hit e times.
CountRecord count_subgroup(const CurveParams& params, std::uint64_t n, const Budgets& budgets = {});
CountRecord count_subgroup(const Field& F, const CurveParams& params, const Budgets& budgets = {});

// Exact count (affine + 1) of y^{p^k} + sign*y = mu * x^m over the given field.
mpz_class count_artin_schreier(const Field& F, unsigned k, const mpz_class& m, int sign,
                               const FieldElement& mu, const Budgets& budgets = {});
// Convenience overload with mu = 1 over F_{p^n}.
mpz_class count_artin_schreier(std::uint64_t p, unsigned k, const mpz_class& m, int sign,
                               std::uint64_t n, const Budgets& budgets = {});

// N = #{ x in F_{p^n} : Tr_{F_{p^n}/F_{p^d}}(mu * x^M) = 0 }, d | n.
// x^0 = 1 for every x, including x = 0.
mpz_class count_trace_form(const Field& F, unsigned d, const FieldElement& mu,
                           const mpz_class& M, const Budgets& budgets = {});

}  // namespace hermitian

#endif

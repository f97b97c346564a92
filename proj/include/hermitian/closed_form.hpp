// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_CLOSED_FORM_HPP
#define HERMITIAN_CLOSED_FORM_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hermitian/counting.hpp"
#include "hermitian/curve.hpp"

namespace hermitian {

// Legendre symbol via Euler's criterion a^{(p-1)/2} mod p. p must be an odd prime.
int legendre(const mpz_class& a, std::uint64_t p);

// Normalized deviation T with count = p^n + 1 - p^{n/2} T.
// Integral for this curve family: T = 0 whenever n is odd.
struct Deviation {
    CurveParams params;
    std::uint64_t n = 1;
    mpz_class T;
};

mpz_class count_from_deviation(const Deviation& dev);

// Transports a raw deviation D(m) = count(m) - (q^m + 1) of a supersingular
// curve over F_q (q = p^r, reduction modulus s) from degree m = gcd(n, s) to
// degree n: D(n) = q^{(n-m)/2} * D(m) * factor, where factor is 1, a Legendre
// symbol, or (-1)^{(step^2-1)/8} depending on the parity of m*r and on
// step = n/m relative to p.
mpz_class extend_raw_deviation(const mpz_class& base, std::uint64_t p, unsigned r,
                               std::uint64_t m, std::uint64_t n, std::uint64_t s);

// Same transport on normalized deviations: T(n) = T(m) * factor.
mpz_class extend_normalized_deviation(const mpz_class& base_T, std::uint64_t p, unsigned r,
                                      std::uint64_t m, std::uint64_t n, std::uint64_t s);

// Normalized-deviation wrapper for this curve family (r = 1).
Deviation extend_supersingular(const Deviation& base, std::uint64_t n);

// Ground truth: gcd split at the reduction modulus, base value from the
// reduction lemmas, then deviation transport. No enumeration; any n.
mpz_class closed_deviation(const CurveParams& params, std::uint64_t n);
CountRecord count_closed(const CurveParams& params, std::uint64_t n);

// The published closed-form tables, evaluated verbatim so the audit can
// compare them against ground truth. theorem45: t = 0, p odd. corollary12:
// t = 1. theorem11: t >= 1, retained exactly as printed (including its known
// mismatches with enumeration).
Deviation theorem45_deviation(std::uint64_t p, unsigned k, std::uint64_t n);
Deviation corollary12_deviation(std::uint64_t p, unsigned k, std::uint64_t n);
Deviation theorem11_deviation(std::uint64_t p, unsigned k, unsigned t, std::uint64_t n);

struct DiscrepancyRow {
    CurveParams params;
    std::uint64_t n = 1;
    mpz_class printed_T;
    mpz_class true_T;
    bool agree = false;
};

struct DiscrepancyRanges {
    std::vector<std::uint64_t> primes = {2, 3};
    unsigned k_max = 2;
    unsigned t_min = 1;  // the printed table needs t >= 1
    unsigned t_max = 2;
    std::uint64_t n_max = 8;
    Budgets budgets;
    unsigned threads = 1;
};

// One row per configuration, ordered lexicographically in (p, k, t, n).
// Ground truth is count_brute within budget, count_closed beyond it.
std::vector<DiscrepancyRow> discrepancy_report(const DiscrepancyRanges& ranges);

}  // namespace hermitian

#endif

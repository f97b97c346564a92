// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_FIELD_HPP
#define HERMITIAN_FIELD_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hermitian {

// Residue mod p. p < 2^16, so products fit comfortably in 64-bit accumulators.
using Coeff = std::uint32_t;

// Thrown when an operation would exceed a configured enumeration budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit model of F_{p^n}: a monic irreducible modulus of degree n over F_p,
// elements as coordinate vectors in the power basis of its root.
struct FieldSpec {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::vector<Coeff> modulus;  // constant term first, size n+1, monic

    bool operator==(const FieldSpec&) const = default;
};

// Element of a specific Field instance. field_id ties the element to the field
// that created it so mixed-field operands are rejected rather than miscomputed.
struct FieldElement {
    std::uint32_t field_id = 0;
    std::vector<Coeff> c;  // power-basis coordinates, c[0] constant

    bool operator==(const FieldElement&) const = default;
    bool operator<(const FieldElement& o) const { return c < o.c; }
};

// Image of a p-linearized map y -> y^{p^k} + sign*y, stored as an F_p-subspace
// in reduced row echelon form. Membership is an O(n^2) residual check.
class LinearSubspace {
public:
    LinearSubspace(std::uint64_t p, unsigned n, std::vector<std::vector<Coeff>> rref_rows);

    unsigned ambient_degree() const { return n_; }
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    unsigned kernel_dim() const { return n_ - rank(); }
    mpz_class size() const;         // p^rank
    mpz_class kernel_size() const;  // p^(n - rank)

    bool contains(const FieldElement& a) const;
    bool contains_coords(const std::vector<Coeff>& v) const;

    const std::vector<std::vector<Coeff>>& basis() const { return rows_; }

    // RREF is canonical, so row equality decides subspace equality.
    bool operator==(const LinearSubspace& o) const {
        return p_ == o.p_ && n_ == o.n_ && rows_ == o.rows_;
    }

private:
    std::uint64_t p_;
    unsigned n_;
    std::vector<std::vector<Coeff>> rows_;   // RREF, each of length n_
    std::vector<unsigned> pivots_;
};

class Field {
public:
    // Builds F_{p^n} with the lexicographically-first monic irreducible modulus.
    Field(std::uint64_t p, unsigned n);
    // Selects the (rank+1)-th irreducible in lex order instead; rank 0 is the
    // default modulus. Used to check that results are representation-independent.
    Field(std::uint64_t p, unsigned n, unsigned modulus_rank);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldSpec& spec() const { return spec_; }
    std::uint64_t p() const { return spec_.p; }
    unsigned degree() const { return spec_.n; }
    const mpz_class& order() const { return order_; }
    bool order_fits_u64() const { return order_fits_u64_; }
    std::uint64_t order_u64() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_coeffs(std::vector<Coeff> coords) const;
    FieldElement scalar(std::uint64_t value) const;  // value mod p embedded in F_p

    // Canonical index <-> element bijection (base-p encoding, c[0] least significant).
    // Requires the field order to fit in 64 bits.
    FieldElement element(std::uint64_t index) const;
    std::uint64_t index(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement inverse(const FieldElement& a) const;
    FieldElement mul_scalar(const FieldElement& a, std::uint64_t s) const;

    // a^e by square-and-multiply on the bits of e (e >= 0).
    FieldElement pow(const FieldElement& a, const mpz_class& e) const;
    // Same, with e reduced mod p^n - 1 for nonzero a. 0^0 = 1.
    FieldElement pow_reduced(const FieldElement& a, const mpz_class& e) const;

    // a^{p^e}. The p-power map is applied as a precomputed n x n matrix over F_p,
    // e reduced mod n.
    FieldElement frobenius(const FieldElement& a, std::uint64_t e = 1) const;

    // Relative trace onto the subfield of degree d (d | n):
    // sum of a^{p^{d i}} for i = 0..n/d-1. Result is fixed by frobenius(., d).
    FieldElement trace_to(const FieldElement& a, unsigned d) const;

    // Element of multiplicative order p^n - 1; the first such element in
    // lexicographic coefficient order. Cached after first computation.
    const FieldElement& generator() const;

    // { y^{p^k} + sign*y : y in F_{p^n} } as an explicit subspace.
    LinearSubspace linearized_image(unsigned k, int sign) const;
    // First nonzero kernel element of y -> y^{p^k} + sign*y, if the kernel is
    // nontrivial.
    std::optional<FieldElement> linearized_kernel_element(unsigned k, int sign) const;

private:
    void init();
    void check(const FieldElement& a) const;
    std::vector<Coeff> frobenius_matrix_power(unsigned e) const;  // row-major n x n

    FieldSpec spec_;
    std::uint32_t id_;
    mpz_class order_;
    bool order_fits_u64_ = false;
    std::uint64_t order_u64_ = 0;
    std::vector<Coeff> frob_;  // matrix of x -> x^p, row-major n x n

    mutable std::once_flag gen_once_;
    mutable std::optional<FieldElement> gen_;
};

// Spec'd constructors. build_field(p, n) is deterministic across runs.
Field build_field(std::uint64_t p, unsigned n);

bool is_prime_u64(std::uint64_t v);
// Prime factorization of v (Miller-Rabin + Pollard rho), ascending, with
// multiplicity collapsed to distinct primes. Throws budget_error if the
// iteration cap is exhausted.
std::vector<std::uint64_t> distinct_prime_factors_u64(std::uint64_t v);

}  // namespace hermitian

#endif

// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_LPOLYNOMIAL_HPP
#define HERMITIAN_LPOLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "hermitian/curve.hpp"

namespace hermitian {

// Raised when a computation is sound but a claimed property of its result
// fails (distinct from engine errors, so audits can report it as a finding).
struct claim_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense integer-coefficient polynomial, constant term first.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial one();

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial&) const = default;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

// Exact division over the rationals: true iff A | B with zero remainder.
// A must be nonzero. If quotient_integral is given, it reports whether the
// quotient has integer coefficients.
bool divides(const IntPolynomial& A, const IntPolynomial& B, bool* quotient_integral = nullptr);

// Quotient and remainder of B by monic A over the integers.
void divmod_monic(const IntPolynomial& B, const IntPolynomial& A, IntPolynomial& quotient,
                  IntPolynomial& remainder);

// s-th cyclotomic polynomial, computed by exact division of x^s - 1 by the
// lower cyclotomics.
IntPolynomial cyclotomic(std::uint64_t s);

// Exactly decides sum_j mult[j] * zeta_s^{multiplier * j} == target in Z[zeta_s]
// (reduction mod the s-th cyclotomic polynomial).
bool root_of_unity_combination_equals(const std::vector<mpz_class>& mult, std::uint64_t s,
                                      std::int64_t multiplier, const mpz_class& target);

// L-polynomial of a genus-g curve over F_q from its counts over F_{q^n},
// n = 1..2g: power sums P_n = (q^n + 1) - count_n converted by Newton's
// identities, every intermediate division checked exact. Asserts c_0 = 1 and
// c_{2g} = q^g; throws on inconsistent counts.
IntPolynomial lpoly_from_counts(const mpz_class& q, std::uint64_t g,
                                std::span<const mpz_class> counts);

// c_{2g-i} = q^{g-i} c_i for all i.
bool functional_equation_holds(const IntPolynomial& L, const mpz_class& q, std::uint64_t g);

// ord_p(c_i) >= i*r/2 for all i >= 1 (checked as 2*ord_p(c_i) >= i*r).
bool is_supersingular_lpoly(const IntPolynomial& L, std::uint64_t p, unsigned r);

// Multiplicities of the Weil numbers sqrt(p) * zeta_s^j, j = 0..s-1.
struct WeilSpectrum {
    std::uint64_t s = 1;
    std::uint64_t p = 0;
    std::vector<mpz_class> m;
};

void validate(const WeilSpectrum& spec, const mpz_class& genus);

// Spectrum from closed-form deviations T_1..T_s by inverse DFT, rounded from
// complex floating point (residual cap 1e-6) and then verified exactly:
// sum_j m_j zeta_s^{jn} == T_n for n = 1..2s in Z[zeta_s].
WeilSpectrum weil_spectrum(const CurveParams& params);

// Re-indexes a spectrum to a larger modulus S (s | S).
WeilSpectrum lift_spectrum(const WeilSpectrum& spec, std::uint64_t S);

// Multiplicity surplus of the k-doubled curve: inverse DFT of
// U_n = T_{(p,2k,1)}(n) - T_{(p,k,1)}(n) at modulus 8k (index 0 read from
// n = 8k). Coefficients must come out as nonnegative integers; a negative
// one raises an error instead of being clamped.
std::vector<mpz_class> spectrum_difference(std::uint64_t p, unsigned k);

// Smallest s' | s with m_j = 0 whenever j*s'/s is non-integral; 1 for the
// zero spectrum.
std::uint64_t minimal_period(const WeilSpectrum& spec);

}  // namespace hermitian

#endif

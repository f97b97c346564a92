// SPDX-License-Identifier: Apache-2.0
#include "hermitian/lpolynomial.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hermitian/closed_form.hpp"

namespace hermitian {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({mpz_class(1)}); }

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

bool divides(const IntPolynomial& A, const IntPolynomial& B, bool* quotient_integral) {
    if (A.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (quotient_integral) *quotient_integral = true;
    if (B.is_zero()) return true;
    const int da = A.degree();
    const int db = B.degree();
    if (db < da) return false;

    std::vector<mpq_class> rem(B.coeffs().begin(), B.coeffs().end());
    const mpq_class lead(A.coeff(static_cast<std::size_t>(da)));
    bool integral = true;
    for (int i = db; i >= da; --i) {
        mpq_class q = rem[static_cast<std::size_t>(i)] / lead;
        q.canonicalize();
        if (q != 0) {
            if (q.get_den() != 1) integral = false;
            for (int j = 0; j <= da; ++j)
                rem[static_cast<std::size_t>(i - da + j)] -= q * mpq_class(A.coeff(j));
        }
    }
    for (int i = 0; i < da; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) return false;
    if (quotient_integral) *quotient_integral = integral;
    return true;
}

void divmod_monic(const IntPolynomial& B, const IntPolynomial& A, IntPolynomial& quotient,
                  IntPolynomial& remainder) {
    const int da = A.degree();
    if (da < 0 || A.coeff(static_cast<std::size_t>(da)) != 1)
        throw std::invalid_argument("divisor must be monic");
    std::vector<mpz_class> rem(B.coeffs());
    std::vector<mpz_class> quot;
    const int db = B.degree();
    if (db >= da) quot.assign(static_cast<std::size_t>(db - da + 1), mpz_class(0));
    for (int i = db; i >= da; --i) {
        mpz_class q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - da)] = q;
        for (int j = 0; j <= da; ++j) rem[static_cast<std::size_t>(i - da + j)] -= q * A.coeff(j);
    }
    quotient = IntPolynomial(std::move(quot));
    remainder = IntPolynomial(std::move(rem));
}

IntPolynomial cyclotomic(std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("cyclotomic index must be positive");
    static std::mutex cache_mutex;
    static std::map<std::uint64_t, IntPolynomial> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    std::function<IntPolynomial(std::uint64_t)> compute = [&](std::uint64_t v) -> IntPolynomial {
        auto hit = cache.find(v);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> xs_minus_1(static_cast<std::size_t>(v) + 1, mpz_class(0));
        xs_minus_1[0] = -1;
        xs_minus_1.back() = 1;
        IntPolynomial acc(std::move(xs_minus_1));
        for (std::uint64_t d = 1; d < v; ++d) {
            if (v % d != 0) continue;
            IntPolynomial q, r;
            divmod_monic(acc, compute(d), q, r);
            if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
            acc = std::move(q);
        }
        cache.emplace(v, acc);
        return acc;
    };
    return compute(s);
}

bool root_of_unity_combination_equals(const std::vector<mpz_class>& mult, std::uint64_t s,
                                      std::int64_t multiplier, const mpz_class& target) {
    if (s == 0 || mult.size() != s) throw std::invalid_argument("multiplicity vector must have length s");
    const std::uint64_t mm =
        static_cast<std::uint64_t>(((multiplier % static_cast<std::int64_t>(s)) +
                                    static_cast<std::int64_t>(s))) % s;
    std::vector<mpz_class> v(static_cast<std::size_t>(s), mpz_class(0));
    for (std::uint64_t j = 0; j < s; ++j) v[static_cast<std::size_t>((mm * j) % s)] += mult[j];
    v[0] -= target;
    IntPolynomial combo(std::move(v));
    if (combo.is_zero()) return true;
    IntPolynomial q, r;
    divmod_monic(combo, cyclotomic(s), q, r);
    return r.is_zero();
}

IntPolynomial lpoly_from_counts(const mpz_class& q, std::uint64_t g,
                                std::span<const mpz_class> counts) {
    if (counts.size() != 2 * g)
        throw std::invalid_argument("need exactly 2g counts, one per extension degree");
    if (g == 0) return IntPolynomial::one();

    // P_n = (q^n + 1) - count_n, the power sums of the reciprocal roots
    std::vector<mpz_class> P(2 * g + 1);
    mpz_class qn = 1;
    mpz_class bound = 4 * mpz_class(static_cast<unsigned long>(g)) *
                      mpz_class(static_cast<unsigned long>(g));
    for (std::uint64_t n = 1; n <= 2 * g; ++n) {
        qn *= q;
        P[n] = qn + 1 - counts[n - 1];
        if (P[n] * P[n] > bound * qn)
            throw std::invalid_argument("count violates the Hasse-Weil bound");
    }

    // Newton's identities; every division by n must land exactly
    std::vector<mpz_class> e(2 * g + 1);
    e[0] = 1;
    for (std::uint64_t i = 1; i <= 2 * g; ++i) {
        mpz_class acc = 0;
        for (std::uint64_t j = 1; j <= i; ++j) {
            if (j % 2 == 1)
                acc += e[i - j] * P[j];
            else
                acc -= e[i - j] * P[j];
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(i)))
            throw std::invalid_argument("counts are inconsistent: non-integral coefficient");
        e[i] = acc / static_cast<unsigned long>(i);
    }

    std::vector<mpz_class> c(2 * g + 1);
    for (std::uint64_t i = 0; i <= 2 * g; ++i) c[i] = i % 2 == 0 ? e[i] : -e[i];
    mpz_class qg;
    mpz_pow_ui(qg.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g));
    if (c[0] != 1 || c[2 * g] != qg)
        throw std::invalid_argument("counts are inconsistent: endpoint coefficients are off");
    return IntPolynomial(std::move(c));
}

bool functional_equation_holds(const IntPolynomial& L, const mpz_class& q, std::uint64_t g) {
    if (L.degree() != static_cast<int>(2 * g)) return false;
    mpz_class qpow = 1;
    for (std::uint64_t i = g + 1; i-- > 0;) {
        // qpow = q^{g-i}
        if (L.coeff(2 * g - i) != qpow * L.coeff(i)) return false;
        qpow *= q;
    }
    return true;
}

bool is_supersingular_lpoly(const IntPolynomial& L, std::uint64_t p, unsigned r) {
    if (L.coeff(0) != 1) throw std::invalid_argument("L-polynomial must have constant term 1");
    const mpz_class pz(static_cast<unsigned long>(p));
    for (int i = 1; i <= L.degree(); ++i) {
        const mpz_class& ci = L.coeff(static_cast<std::size_t>(i));
        if (ci == 0) continue;
        mpz_class reduced;
        mp_bitcnt_t ord = mpz_remove(reduced.get_mpz_t(), ci.get_mpz_t(), pz.get_mpz_t());
        if (2 * static_cast<std::uint64_t>(ord) < static_cast<std::uint64_t>(i) * r) return false;
    }
    return true;
}

void validate(const WeilSpectrum& spec, const mpz_class& g) {
    if (spec.s == 0 || spec.m.size() != spec.s)
        throw std::logic_error("spectrum length must equal its modulus");
    mpz_class total = 0;
    for (std::uint64_t j = 0; j < spec.s; ++j) {
        if (spec.m[j] < 0) throw std::logic_error("spectrum multiplicities must be nonnegative");
        if (spec.m[j] != spec.m[(spec.s - j) % spec.s])
            throw std::logic_error("spectrum must be symmetric under conjugation");
        total += spec.m[j];
    }
    if (total != 2 * g) throw std::logic_error("spectrum multiplicities must sum to 2g");
}

namespace {

// Rounded inverse DFT of values[1..s] (index 0 role played by values[s-1],
// i.e. the degree-s entry). Rejects when floating-point play exceeds 1e-6.
std::vector<mpz_class> rounded_idft(const std::vector<mpz_class>& values, std::uint64_t s,
                                    int exponent_sign) {
    constexpr double kResidualCap = 1e-6;
    std::vector<mpz_class> out(static_cast<std::size_t>(s));
    const double tau = 2.0 * std::acos(-1.0);
    for (std::uint64_t j = 0; j < s; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::uint64_t n = 1; n <= s; ++n) {
            const double angle =
                tau * static_cast<double>(exponent_sign) * static_cast<double>((j * n) % s) /
                static_cast<double>(s);
            acc += values[n - 1].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        acc /= static_cast<double>(s);
        const double rounded = std::nearbyint(acc.real());
        if (std::abs(acc.real() - rounded) > kResidualCap || std::abs(acc.imag()) > kResidualCap)
            throw std::runtime_error("spectrum rounding residual too large");
        out[j] = mpz_class(static_cast<long>(rounded));
    }
    return out;
}

}  // namespace

WeilSpectrum weil_spectrum(const CurveParams& params) {
    validate(params);
    const mpz_class g = genus(params);
    if (g == 0) return WeilSpectrum{1, params.p, {mpz_class(0)}};

    const std::uint64_t s = reduction_modulus(params);
    std::vector<mpz_class> T(static_cast<std::size_t>(s));
    for (std::uint64_t n = 1; n <= s; ++n) {
        T[n - 1] = closed_deviation(params, n);
        if (n % 2 == 1 && T[n - 1] != 0)
            throw std::logic_error("odd-degree deviation must vanish");
    }
    WeilSpectrum spec{s, params.p, rounded_idft(T, s, +1)};

    // exact reconstruction: sum_j m_j zeta^{jn} = T_n for n = 1..2s
    for (std::uint64_t n = 1; n <= 2 * s; ++n) {
        const mpz_class target = closed_deviation(params, n);
        if (!root_of_unity_combination_equals(spec.m, s, static_cast<std::int64_t>(n), target))
            throw std::runtime_error("spectrum does not reconstruct the counts");
    }
    validate(spec, g);
    return spec;
}

WeilSpectrum lift_spectrum(const WeilSpectrum& spec, std::uint64_t S) {
    if (S == 0 || S % spec.s != 0)
        throw std::invalid_argument("target modulus must be a multiple of the source modulus");
    WeilSpectrum out{S, spec.p, std::vector<mpz_class>(static_cast<std::size_t>(S), mpz_class(0))};
    const std::uint64_t stride = S / spec.s;
    for (std::uint64_t j = 0; j < spec.s; ++j) out.m[j * stride] = spec.m[j];
    return out;
}

std::vector<mpz_class> spectrum_difference(std::uint64_t p, unsigned k) {
    const CurveParams doubled{p, 2 * k, 1};
    const CurveParams single{p, k, 1};
    validate(doubled);
    const std::uint64_t s = 8ull * k;

    std::vector<mpz_class> U(static_cast<std::size_t>(s));
    for (std::uint64_t n = 1; n <= s; ++n)
        U[n - 1] = closed_deviation(doubled, n) - closed_deviation(single, n);

    std::vector<mpz_class> u = rounded_idft(U, s, +1);

    // exact check of the defining sums U_n = sum_j u_j zeta^{-jn}, n = 1..2s
    for (std::uint64_t n = 1; n <= 2 * s; ++n) {
        const mpz_class target = closed_deviation(doubled, n) - closed_deviation(single, n);
        if (!root_of_unity_combination_equals(u, s, -static_cast<std::int64_t>(n), target))
            throw std::runtime_error("difference spectrum does not reconstruct the deviations");
    }
    for (std::uint64_t j = 0; j < s; ++j) {
        if (u[j] < 0)
            throw claim_violation("difference spectrum has a negative multiplicity at index " +
                                  std::to_string(j));
    }
    return u;
}

std::uint64_t minimal_period(const WeilSpectrum& spec) {
    std::uint64_t G = spec.s;
    bool any = false;
    for (std::uint64_t j = 0; j < spec.s; ++j) {
        if (spec.m[j] == 0) continue;
        any = true;
        if (j > 0) G = std::gcd(G, j);
    }
    if (!any) return 1;
    return spec.s / G;
}

}  // namespace hermitian

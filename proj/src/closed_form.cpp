// SPDX-License-Identifier: Apache-2.0
#include "hermitian/closed_form.hpp"

#include <numeric>
#include <stdexcept>

#include "hermitian/field.hpp"
#include "hermitian/parallel.hpp"

namespace hermitian {
namespace {

mpz_class pow_of(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

unsigned v2(std::uint64_t x) {
    unsigned v = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

// Correction applied when a deviation moves from degree m to n = m * step
// over F_{p^r}: trivial unless m*r is odd, in which case the sign depends on
// step modulo 8 (p = 2) or on a Legendre symbol (p odd, p not dividing step).
int extension_factor(std::uint64_t p, unsigned r, std::uint64_t m, std::uint64_t step) {
    if ((m * r) % 2 == 0) return 1;
    if (step % 2 == 0)
        throw std::logic_error("odd base degree with even step contradicts an even modulus");
    if (p == 2) return (step % 8 == 1 || step % 8 == 7) ? 1 : -1;
    if (step % p == 0) return 1;
    mpz_class a(static_cast<unsigned long>(step));
    if (((step - 1) / 2) % 2 == 1) a = -a;
    return legendre(a, p);
}

// Deviation of the t = 0 curve at a degree m | 4k (p odd), straight from the
// three base reductions: trivial on subfields of F_{p^k}, one maximal step at
// twice an exact divisor, minimal at four times.
mpz_class hk0_base_deviation_at(std::uint64_t p, unsigned k, std::uint64_t m) {
    if ((4ull * k) % m != 0) throw std::logic_error("base degree must divide 4k");
    if (k % m == 0) return 0;
    if ((2ull * k) % m == 0) return -(pow_of(p, m / 2) - 1);
    return pow_of(p, m / 4) - 1;
}

// Deviation of the t = 0 curve at an arbitrary degree m (p odd).
mpz_class hk0_deviation(std::uint64_t p, unsigned k, std::uint64_t m) {
    const std::uint64_t s0 = 4ull * k;
    const std::uint64_t m2 = std::gcd(m, s0);
    mpz_class T = hk0_base_deviation_at(p, k, m2);
    return extend_normalized_deviation(T, p, 1, m2, m, s0);
}

// Deviation at the gcd degree m = gcd(n, 4kt) for t >= 1, by the reduction
// chain: m | kt collapses the right side to x^2; m/2 | kt reduces to a curve
// that is extremal at exactly this degree; otherwise the curve is minimal here.
mpz_class base_deviation_at_gcd(std::uint64_t p, unsigned k, unsigned t, std::uint64_t m) {
    const std::uint64_t kt = std::uint64_t{k} * t;
    if (kt % m == 0) return p == 2 ? mpz_class(0) : hk0_deviation(p, k, m);
    if (m % 2 == 0 && kt % (m / 2) == 0) {
        const std::uint64_t c = std::gcd(std::uint64_t{k}, m / 2);
        const std::uint64_t sub_t = (m / 2) / c;
        if (p == 2 || sub_t % 2 == 1) return -(pow_of(p, c) - 1) * pow_of(p, m / 2);
        return pow_of(p, c) - 1;
    }
    if (m % 4 != 0 || (2 * kt) % m == 0 || (4 * kt) % m != 0)
        throw std::logic_error("gcd degree fell outside the reduction trichotomy");
    const std::uint64_t c = std::gcd(std::uint64_t{k}, m / 4);
    return (pow_of(p, c) - 1) * pow_of(p, m / 4);
}

}  // namespace

int legendre(const mpz_class& a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("Legendre symbol needs an odd prime modulus");
    mpz_class mod(static_cast<unsigned long>(p));
    mpz_class exp = (mod - 1) / 2;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == mod - 1) return -1;
    throw std::logic_error("Euler's criterion produced a non-root of unity");
}

mpz_class extend_raw_deviation(const mpz_class& base, std::uint64_t p, unsigned r,
                               std::uint64_t m, std::uint64_t n, std::uint64_t s) {
    if (m == 0 || n == 0) throw std::invalid_argument("degrees must be positive");
    if (std::gcd(n, s) != m) throw std::invalid_argument("base degree must equal gcd(n, s)");
    if (base == 0) return 0;
    const std::uint64_t scaled = r * (n - m);
    if (scaled % 2 != 0)
        throw std::logic_error("nonzero deviation cannot scale by a half-integral power");
    return base * pow_of(p, scaled / 2) * extension_factor(p, r, m, n / m);
}

mpz_class extend_normalized_deviation(const mpz_class& base_T, std::uint64_t p, unsigned r,
                                      std::uint64_t m, std::uint64_t n, std::uint64_t s) {
    if (m == 0 || n == 0) throw std::invalid_argument("degrees must be positive");
    if (std::gcd(n, s) != m) throw std::invalid_argument("base degree must equal gcd(n, s)");
    if (base_T == 0) return 0;
    return base_T * extension_factor(p, r, m, n / m);
}

Deviation extend_supersingular(const Deviation& base, std::uint64_t n) {
    const std::uint64_t s = reduction_modulus(base.params);
    mpz_class T = extend_normalized_deviation(base.T, base.params.p, 1, base.n, n, s);
    return Deviation{base.params, n, std::move(T)};
}

mpz_class count_from_deviation(const Deviation& dev) {
    mpz_class count = pow_of(dev.params.p, dev.n) + 1;
    if (dev.T == 0) return count;
    if (dev.n % 2 != 0)
        throw std::logic_error("nonzero deviation at odd degree has no integral count");
    return count - pow_of(dev.params.p, dev.n / 2) * dev.T;
}

mpz_class closed_deviation(const CurveParams& params, std::uint64_t n) {
    validate(params);
    if (n == 0) throw std::invalid_argument("extension degree must be positive");
    if (genus(params) == 0) return 0;
    const std::uint64_t s = reduction_modulus(params);
    const std::uint64_t m = std::gcd(n, s);
    mpz_class Tm = params.t >= 1 ? base_deviation_at_gcd(params.p, params.k, params.t, m)
                                 : hk0_base_deviation_at(params.p, params.k, m);
    return extend_normalized_deviation(Tm, params.p, 1, m, n, s);
}

CountRecord count_closed(const CurveParams& params, std::uint64_t n) {
    Deviation dev{params, n, closed_deviation(params, n)};
    mpz_class g2 = 2 * genus(params);
    if (dev.T > g2 || dev.T < -g2)
        throw std::logic_error("closed-form deviation violates the Hasse-Weil bound");
    CountRecord rec{params, n, count_from_deviation(dev), CountMethod::closed};
    if (rec.count < 1) throw std::logic_error("point count must be at least 1");
    return rec;
}

Deviation theorem45_deviation(std::uint64_t p, unsigned k, std::uint64_t n) {
    CurveParams params{p, k, 0};
    validate(params);
    if (p == 2) throw std::invalid_argument("this formula requires an odd characteristic");
    const unsigned v = v2(k);
    const std::uint64_t d = std::gcd(n, 4ull * k);
    mpz_class T = 0;
    if (v2(d) == v + 1)
        T = -(pow_of(p, d / 2) - 1);
    else if (v2(d) >= v + 2)
        T = pow_of(p, d / 4) - 1;
    return Deviation{params, n, std::move(T)};
}

Deviation corollary12_deviation(std::uint64_t p, unsigned k, std::uint64_t n) {
    CurveParams params{p, k, 1};
    validate(params);
    const unsigned v = v2(k);
    const std::uint64_t d = std::gcd(n, 4ull * k);
    mpz_class T = 0;
    if (v2(d) == v + 1)
        T = -pow_of(p, d / 2) * (pow_of(p, d / 2) - 1);
    else if (v2(d) >= v + 2)
        T = pow_of(p, d / 4) * (pow_of(p, d / 4) - 1);
    return Deviation{params, n, std::move(T)};
}

Deviation theorem11_deviation(std::uint64_t p, unsigned k, unsigned t, std::uint64_t n) {
    CurveParams params{p, k, t};
    validate(params);
    if (t < 1) throw std::invalid_argument("the printed table requires t >= 1");
    const unsigned v = v2(k);
    const std::uint64_t kt = std::uint64_t{k} * t;
    const std::uint64_t d = std::gcd(n, 4ull * kt);
    const std::uint64_t c = std::gcd(n, 4ull * k);
    const int eps = p == 2 ? 0 : 1;
    mpz_class T;
    if (kt % d == 0) {
        if (v2(d) <= v)
            T = 0;
        else if (v2(d) == v + 1)
            T = eps * (pow_of(p, c / 2) - 1);
        else
            T = eps * (pow_of(p, c / 4) - 1);
    } else if (d % 2 == 0 && kt % (d / 2) == 0) {
        if (t % 2 == 0)
            T = pow_of(p, c) - 1;
        else
            T = -(pow_of(p, c) - 1) * (pow_of(p, d / 2) - 1);
    } else {
        T = (pow_of(p, c) - 1) * (pow_of(p, d / 4) - 1);
    }
    return Deviation{params, n, std::move(T)};
}

namespace {

mpz_class true_deviation(const CurveParams& params, std::uint64_t n, const Budgets& budgets) {
    mpz_class pn = pow_of(params.p, n);
    bool brute_ok = false;
    std::uint64_t q = 0;
    if (pn.fits_ulong_p()) {
        q = mpz_get_ui(pn.get_mpz_t());
        brute_ok = q <= budgets.brute_pairs / q;
    }
    if (!brute_ok) return closed_deviation(params, n);
    CountRecord rec = count_brute(params, n, budgets);
    mpz_class dev = pn + 1 - rec.count;
    if (dev == 0) return 0;
    if (n % 2 != 0) throw std::logic_error("nonzero deviation at odd degree");
    mpz_class half = pow_of(params.p, n / 2);
    if (!mpz_divisible_p(dev.get_mpz_t(), half.get_mpz_t()))
        throw std::logic_error("deviation is not a multiple of p^{n/2}");
    return dev / half;
}

}  // namespace

std::vector<DiscrepancyRow> discrepancy_report(const DiscrepancyRanges& ranges) {
    std::vector<std::uint64_t> primes = ranges.primes;
    std::sort(primes.begin(), primes.end());
    struct Config {
        CurveParams params;
        std::uint64_t n;
    };
    std::vector<Config> configs;
    for (std::uint64_t p : primes)
        for (unsigned k = 1; k <= ranges.k_max; ++k)
            for (unsigned t = std::max(1u, ranges.t_min); t <= ranges.t_max; ++t)
                for (std::uint64_t n = 1; n <= ranges.n_max; ++n)
                    configs.push_back({CurveParams{p, k, t}, n});

    std::vector<DiscrepancyRow> rows(configs.size());
    parallel_for(configs.size(), ranges.threads, [&](std::size_t i) {
        const auto& cfg = configs[i];
        DiscrepancyRow row;
        row.params = cfg.params;
        row.n = cfg.n;
        row.printed_T =
            theorem11_deviation(cfg.params.p, cfg.params.k, cfg.params.t, cfg.n).T;
        row.true_T = true_deviation(cfg.params, cfg.n, ranges.budgets);
        row.agree = row.printed_T == row.true_T;
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace hermitian

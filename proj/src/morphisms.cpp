// SPDX-License-Identifier: Apache-2.0
#include "hermitian/morphisms.hpp"

#include <map>
#include <stdexcept>

namespace hermitian {
namespace {

mpz_class x_exponent(const CurveParams& params) {
    if (params.t == 0) return 2;
    mpz_class pkt;
    mpz_ui_pow_ui(pkt.get_mpz_t(), static_cast<unsigned long>(params.p),
                  static_cast<unsigned long>(params.k) * params.t);
    return pkt + 1;
}

}  // namespace

bool on_curve(const Field& F, const CurveParams& params, const AffinePoint& pt) {
    if (F.p() != params.p) throw std::invalid_argument("field characteristic differs from curve p");
    FieldElement lhs = F.add(F.frobenius(pt.y, params.k), pt.y);
    FieldElement rhs = F.pow_reduced(pt.x, x_exponent(params));
    return lhs == rhs;
}

std::vector<AffinePoint> enumerate_affine_points(const Field& F, const CurveParams& params,
                                                 const Budgets& budgets) {
    validate(params);
    if (F.p() != params.p) throw std::invalid_argument("field characteristic differs from curve p");
    if (!F.order_fits_u64() || F.order_u64() > budgets.enum_elements)
        throw budget_error("point enumeration: field size exceeds budget");
    const std::uint64_t q = F.order_u64();

    std::map<std::uint64_t, std::vector<std::uint64_t>> fibers;  // L(y) index -> y indexes
    for (std::uint64_t j = 0; j < q; ++j) {
        FieldElement y = F.element(j);
        fibers[F.index(F.add(F.frobenius(y, params.k), y))].push_back(j);
    }

    const mpz_class M = x_exponent(params);
    std::vector<AffinePoint> points;
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement x = F.element(i);
        FieldElement rhs = F.is_zero(x) ? F.zero() : F.pow_reduced(x, M);
        auto it = fibers.find(F.index(rhs));
        if (it == fibers.end()) continue;
        for (std::uint64_t j : it->second)
            points.push_back(AffinePoint{x, F.element(j), F.degree()});
    }
    return points;
}

AffinePoint map_down(const Field& F, const CurveParams& params, const AffinePoint& pt) {
    validate(params);
    if (params.t % 2 == 0)
        throw std::invalid_argument("x-exponent map needs odd t so that p^k+1 divides p^{kt}+1");
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(params.p), params.k);
    mpz_class num = x_exponent(params);
    mpz_class den = pk + 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("exponent ratio must be integral for odd t");
    mpz_class e = num / den;
    FieldElement x = F.is_zero(pt.x) ? F.zero() : F.pow_reduced(pt.x, e);
    return AffinePoint{std::move(x), pt.y, F.degree()};
}

AffinePoint map_up(const Field& F, const CurveParams& params, const AffinePoint& pt) {
    validate(params);
    if (params.t == 0) throw std::invalid_argument("target curve needs t >= 1");
    if (params.p != 2 && params.t % 2 == 0)
        throw std::invalid_argument("odd characteristic needs odd t for the alternating sum");
    FieldElement acc = pt.y;
    FieldElement power = pt.y;
    for (unsigned i = 1; i < params.t; ++i) {
        power = F.frobenius(power, params.k);
        acc = (params.p == 2 || i % 2 == 0) ? F.add(acc, power) : F.sub(acc, power);
    }
    return AffinePoint{pt.x, std::move(acc), F.degree()};
}

bool check_quotient_maximality(std::uint64_t p, unsigned k, unsigned t, std::uint64_t m,
                               bool twisted, const Budgets& budgets) {
    CurveParams params{p, k, t};
    validate(params);
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (m < 2) throw std::invalid_argument("exponent m must be at least 2");
    if (p != 2 && t % 2 == 0) throw std::invalid_argument("odd characteristic needs odd t");
    mpz_class pkt_plus_1 = x_exponent(params);
    if (!mpz_divisible_ui_p(pkt_plus_1.get_mpz_t(), static_cast<unsigned long>(m)))
        throw std::invalid_argument("exponent m must divide p^{kt}+1");

    const unsigned n = 2 * k * t;
    Field F(p, n);
    FieldElement mu = F.one();
    int sign = +1;
    if (twisted) {
        auto kernel = F.linearized_kernel_element(k, +1);
        if (!kernel) throw std::logic_error("no nonzero root of x^{p^k} + x in the target field");
        mu = *kernel;
        sign = -1;
    }
    mpz_class count = count_artin_schreier(F, k, mpz_class(static_cast<unsigned long>(m)), sign,
                                           mu, budgets);

    // genus of y^{p^k} + y = x^m with gcd(m, p) = 1
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    mpz_class two_genus = (pk - 1) * (m - 1);
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), n);
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k) * t);
    return count == pn + 1 + two_genus * half;
}

}  // namespace hermitian

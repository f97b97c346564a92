// SPDX-License-Identifier: Apache-2.0
#include "hermitian/counting.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hermitian {
namespace {

// p^{kt} + 1, the x-exponent of the curve; x^2 when t = 0.
mpz_class x_exponent(const CurveParams& params) {
    if (params.t == 0) return 2;
    mpz_class pkt;
    mpz_ui_pow_ui(pkt.get_mpz_t(), static_cast<unsigned long>(params.p),
                  static_cast<unsigned long>(params.k) * params.t);
    return pkt + 1;
}

std::uint64_t mod_u64(const mpz_class& e, std::uint64_t m) {
    if (m == 0) return 0;
    mpz_class r = e % mpz_class(static_cast<unsigned long>(m));
    return mpz_get_ui(r.get_mpz_t());
}

void require_field_matches(const Field& F, const CurveParams& params) {
    if (F.p() != params.p) throw std::invalid_argument("field characteristic differs from curve p");
}

std::uint64_t enumerable_order(const Field& F, std::uint64_t cap, const char* what) {
    if (!F.order_fits_u64() || F.order_u64() > cap)
        throw budget_error(std::string(what) + ": field size exceeds enumeration budget");
    return F.order_u64();
}

// Indexes of a^e for every element a, e already reduced for nonzero bases.
std::vector<std::uint64_t> power_table(const Field& F, const mpz_class& e, std::uint64_t q) {
    std::vector<std::uint64_t> table(q);
    const std::uint64_t e_red = q > 1 ? mod_u64(e, q - 1) : 0;
    const bool e_zero = sgn(e) == 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement a = F.element(i);
        FieldElement v;
        if (F.is_zero(a))
            v = e_zero ? F.one() : F.zero();  // x^0 = 1 everywhere
        else
            v = F.pow(a, mpz_class(static_cast<unsigned long>(e_red)));
        table[i] = F.index(v);
    }
    return table;
}

std::vector<std::uint64_t> left_side_table(const Field& F, unsigned k, std::uint64_t q) {
    std::vector<std::uint64_t> table(q);
    for (std::uint64_t j = 0; j < q; ++j) {
        FieldElement y = F.element(j);
        table[j] = F.index(F.add(F.frobenius(y, k), y));
    }
    return table;
}

}  // namespace

const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::brute: return "brute";
        case CountMethod::fiber: return "fiber";
        case CountMethod::subgroup: return "subgroup";
        case CountMethod::closed: return "closed";
        case CountMethod::formula: return "formula";
    }
    return "unknown";
}

CountMethod count_method_from_string(const std::string& name) {
    if (name == "brute") return CountMethod::brute;
    if (name == "fiber") return CountMethod::fiber;
    if (name == "subgroup") return CountMethod::subgroup;
    if (name == "closed") return CountMethod::closed;
    if (name == "formula") return CountMethod::formula;
    throw std::invalid_argument("unknown counting method: " + name);
}

void validate(const CountRecord& rec) {
    if (rec.count < 1) throw std::logic_error("point count must be at least 1");
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(rec.params.p),
                  static_cast<unsigned long>(rec.n));
    mpz_class dev = rec.count - (pn + 1);
    mpz_class g = genus(rec.params);
    if (dev * dev > 4 * g * g * pn)
        throw std::logic_error("point count violates the Hasse-Weil bound");
}

CountRecord count_brute(const CurveParams& params, std::uint64_t n, const Budgets& budgets) {
    validate(params);
    Field F(params.p, static_cast<unsigned>(n));
    return count_brute(F, params, budgets);
}

CountRecord count_brute(const Field& F, const CurveParams& params, const Budgets& budgets) {
    validate(params);
    require_field_matches(F, params);
    if (!F.order_fits_u64()) throw budget_error("brute count: field order exceeds 64 bits");
    const std::uint64_t q = F.order_u64();
    if (q > budgets.brute_pairs / q)  // overflow-safe q^2 <= budget
        throw budget_error("brute count: p^{2n} exceeds the pair budget");

    const std::vector<std::uint64_t> rhs = power_table(F, x_exponent(params), q);
    const std::vector<std::uint64_t> lhs = left_side_table(F, params.k, q);

    std::uint64_t affine = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        const std::uint64_t target = rhs[i];
        std::uint64_t hits = 0;
        for (std::uint64_t j = 0; j < q; ++j) hits += (lhs[j] == target);
        affine += hits;
    }
    CountRecord rec{params, F.degree(), mpz_class(static_cast<unsigned long>(affine)) + 1,
                    CountMethod::brute};
    validate(rec);
    return rec;
}

CountRecord count_fiber(const CurveParams& params, std::uint64_t n, const Budgets& budgets) {
    validate(params);
    Field F(params.p, static_cast<unsigned>(n));
    return count_fiber(F, params, budgets);
}

CountRecord count_fiber(const Field& F, const CurveParams& params, const Budgets& budgets) {
    validate(params);
    require_field_matches(F, params);
    const std::uint64_t q = enumerable_order(F, budgets.enum_elements, "fiber count");

    const LinearSubspace image = F.linearized_image(params.k, +1);
    const mpz_class kernel = image.kernel_size();
    const mpz_class M = x_exponent(params);
    const std::uint64_t e_red = q > 1 ? mod_u64(M, q - 1) : 0;

    std::uint64_t representable = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement x = F.element(i);
        FieldElement v = F.is_zero(x) ? F.zero()
                                      : F.pow(x, mpz_class(static_cast<unsigned long>(e_red)));
        representable += image.contains(v);
    }
    CountRecord rec{params, F.degree(),
                    kernel * mpz_class(static_cast<unsigned long>(representable)) + 1,
                    CountMethod::fiber};
    validate(rec);
    return rec;
}

CountRecord count_subgroup(const CurveParams& params, std::uint64_t n, const Budgets& budgets) {
    validate(params);
    Field F(params.p, static_cast<unsigned>(n));
    return count_subgroup(F, params, budgets);
}

CountRecord count_subgroup(const Field& F, const CurveParams& params, const Budgets& budgets) {
    validate(params);
    require_field_matches(F, params);
    if (!F.order_fits_u64()) throw budget_error("subgroup count: field order exceeds 64 bits");
    const std::uint64_t q = F.order_u64();
    const std::uint64_t group = q - 1;

    const mpz_class M = x_exponent(params);
    const std::uint64_t e = group == 0 ? 1 : std::gcd(mod_u64(M, group), group);
    const std::uint64_t sub_order = group == 0 ? 0 : group / e;
    if (sub_order > budgets.subgroup_size)
        throw budget_error("subgroup count: (p^n-1)/e exceeds the subgroup budget");

    const LinearSubspace image = F.linearized_image(params.k, +1);
    const mpz_class kernel = image.kernel_size();

    std::uint64_t members = 0;
    if (group > 0) {
        const FieldElement step = F.pow(F.generator(), mpz_class(static_cast<unsigned long>(e)));
        FieldElement u = F.one();
        for (std::uint64_t i = 0; i < sub_order; ++i) {
            members += image.contains(u);
            u = F.mul(u, step);
        }
    }
    // x = 0 lands in the image subspace for free; nonzero x hit each subgroup
    // member exactly e times.
    mpz_class affine = kernel * (1 + mpz_class(static_cast<unsigned long>(e)) *
                                         mpz_class(static_cast<unsigned long>(members)));
    CountRecord rec{params, F.degree(), affine + 1, CountMethod::subgroup};
    validate(rec);
    return rec;
}

mpz_class count_artin_schreier(const Field& F, unsigned k, const mpz_class& m, int sign,
                               const FieldElement& mu, const Budgets& budgets) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (m < 1) throw std::invalid_argument("exponent m must be at least 1");
    if (F.is_zero(mu)) throw std::invalid_argument("twist coefficient mu must be nonzero");
    const std::uint64_t q = enumerable_order(F, budgets.enum_elements, "Artin-Schreier count");

    const LinearSubspace image = F.linearized_image(k, sign);
    const mpz_class kernel = image.kernel_size();
    const std::uint64_t e_red = q > 1 ? mod_u64(m, q - 1) : 0;

    std::uint64_t representable = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement x = F.element(i);
        FieldElement xm = F.is_zero(x) ? F.zero()
                                       : F.pow(x, mpz_class(static_cast<unsigned long>(e_red)));
        representable += image.contains(F.mul(mu, xm));
    }
    return kernel * mpz_class(static_cast<unsigned long>(representable)) + 1;
}

mpz_class count_artin_schreier(std::uint64_t p, unsigned k, const mpz_class& m, int sign,
                               std::uint64_t n, const Budgets& budgets) {
    Field F(p, static_cast<unsigned>(n));
    return count_artin_schreier(F, k, m, sign, F.one(), budgets);
}

mpz_class count_trace_form(const Field& F, unsigned d, const FieldElement& mu,
                           const mpz_class& M, const Budgets& budgets) {
    if (d == 0 || F.degree() % d != 0)
        throw std::invalid_argument("trace target degree must divide the field degree");
    if (sgn(M) < 0) throw std::invalid_argument("exponent must be nonnegative");
    const std::uint64_t q = enumerable_order(F, budgets.enum_elements, "trace-form count");

    const bool M_zero = sgn(M) == 0;
    const std::uint64_t e_red = q > 1 ? mod_u64(M, q - 1) : 0;
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement x = F.element(i);
        FieldElement xM;
        if (F.is_zero(x))
            xM = M_zero ? F.one() : F.zero();
        else
            xM = F.pow(x, mpz_class(static_cast<unsigned long>(e_red)));
        zeros += F.is_zero(F.trace_to(F.mul(mu, xM), d));
    }
    return mpz_class(static_cast<unsigned long>(zeros));
}

}  // namespace hermitian

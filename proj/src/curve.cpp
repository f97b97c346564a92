// SPDX-License-Identifier: Apache-2.0
#include "hermitian/curve.hpp"

#include <stdexcept>

#include "hermitian/field.hpp"

namespace hermitian {

void validate(const CurveParams& params) {
    if (!is_prime_u64(params.p)) throw std::invalid_argument("p must be prime");
    if (params.p >= (std::uint64_t{1} << 16)) throw std::invalid_argument("p must be below 2^16");
    if (params.k < 1) throw std::invalid_argument("k must be at least 1");
}

mpz_class genus(const CurveParams& params) {
    validate(params);
    if (params.p == 2 && params.t == 0) return 0;
    mpz_class pk, pkt;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(params.p), params.k);
    mpz_ui_pow_ui(pkt.get_mpz_t(), static_cast<unsigned long>(params.p),
                  static_cast<unsigned long>(params.k) * params.t);
    return pkt * (pk - 1) / 2;
}

std::uint64_t reduction_modulus(const CurveParams& params) {
    validate(params);
    if (params.t >= 1) return 4ull * params.k * params.t;
    if (params.p == 2) return 1;  // genus 0, every deviation vanishes
    return 4ull * params.k;
}

ExtremalFields predicted_extremal_fields(const CurveParams& params) {
    validate(params);
    if (genus(params) == 0) throw std::invalid_argument("genus-0 curve has no extremal fields");
    ExtremalFields out;
    if (params.t == 0) {  // p odd here
        out.maximal_over = 2ull * params.k;
        out.minimal_over = 4ull * params.k;
        return out;
    }
    out.minimal_over = 4ull * params.k * params.t;
    if (params.p == 2 || params.t % 2 == 1) out.maximal_over = 2ull * params.k * params.t;
    return out;
}

}  // namespace hermitian

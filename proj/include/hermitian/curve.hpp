// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_CURVE_HPP
#define HERMITIAN_CURVE_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace hermitian {

// Parameters of the curve y^{p^k} + y = x^{p^{kt}+1} over F_p.
// t = 0 degenerates the right side to x^2.
struct CurveParams {
    std::uint64_t p = 0;
    unsigned k = 1;
    unsigned t = 1;

    bool operator==(const CurveParams&) const = default;
};

void validate(const CurveParams& params);

// p^{kt} (p^k - 1) / 2, except 0 for (p, t) = (2, 0).
mpz_class genus(const CurveParams& params);

// Even exponent s with all normalized Weil ratios s-th roots of unity:
// 4kt for t >= 1, 4k for t = 0 with p odd, and the degenerate 1 for (2, k, 0).
// Not necessarily the minimal period; see minimal_period() on the spectrum.
std::uint64_t reduction_modulus(const CurveParams& params);

struct ExtremalFields {
    std::optional<std::uint64_t> maximal_over;  // none when p odd and t even >= 2
    std::uint64_t minimal_over = 0;
};

// Degrees where the curve meets the Hasse-Weil bound. Requires genus > 0.
ExtremalFields predicted_extremal_fields(const CurveParams& params);

}  // namespace hermitian

#endif

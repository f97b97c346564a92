// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_MORPHISMS_HPP
#define HERMITIAN_MORPHISMS_HPP

#include <cstdint>
#include <vector>

#include "hermitian/counting.hpp"
#include "hermitian/curve.hpp"
#include "hermitian/field.hpp"

namespace hermitian {

struct AffinePoint {
    FieldElement x;
    FieldElement y;
    unsigned n = 1;  // field degree

    bool operator==(const AffinePoint&) const = default;
    bool operator<(const AffinePoint& o) const {
        return x < o.x || (x == o.x && y < o.y);
    }
};

bool on_curve(const Field& F, const CurveParams& params, const AffinePoint& pt);

// All affine points of the curve over F, sorted by (x, y) index.
std::vector<AffinePoint> enumerate_affine_points(const Field& F, const CurveParams& params,
                                                 const Budgets& budgets = {});

// (x, y) -> (x^{(p^{kt}+1)/(p^k+1)}, y), from the parameter-t curve down to
// the t = 1 curve with the same (p, k). Requires t odd.
AffinePoint map_down(const Field& F, const CurveParams& params, const AffinePoint& pt);

// (x, y) -> (x, alternating-sign sum of y^{p^{ki}}, i = 0..t-1), from the
// (p, kt, 1) curve up to the (p, k, t) curve. Requires t odd when p is odd;
// for p = 2 the plain sum works for every t.
AffinePoint map_up(const Field& F, const CurveParams& params, const AffinePoint& pt);

// Counts y^{p^k} + y = x^m (or, twisted, y^{p^k} - y = mu x^m with mu a
// nonzero root of x^{p^k} + x) over F_{p^{2kt}} and compares with the
// Hasse-Weil upper bound for its genus (p^k-1)(m-1)/2.
// Requires m >= 2, m | p^{kt}+1, and t odd when p is odd.
bool check_quotient_maximality(std::uint64_t p, unsigned k, unsigned t, std::uint64_t m,
                               bool twisted = false, const Budgets& budgets = {});

}  // namespace hermitian

#endif

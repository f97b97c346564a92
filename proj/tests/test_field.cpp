// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hermitian/field.hpp"
#include "hermitian/io.hpp"

using namespace hermitian;

namespace {

// Test-only irreducibility oracle: exhaust all monic factor pairs.
using TPoly = std::vector<std::uint32_t>;  // constant first, trailing zeros allowed

TPoly tmul(const TPoly& a, const TPoly& b, std::uint64_t p) {
    TPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return r;
}

void enumerate_monic(std::uint64_t p, unsigned deg, std::vector<TPoly>& out) {
    TPoly f(deg + 1, 0);
    f[deg] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < deg; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        out.push_back(f);
    }
}

bool oracle_irreducible(const TPoly& f, std::uint64_t p) {
    const unsigned n = static_cast<unsigned>(f.size()) - 1;
    if (n == 0) return false;
    for (unsigned da = 1; 2 * da <= n; ++da) {
        std::vector<TPoly> lows, highs;
        enumerate_monic(p, da, lows);
        enumerate_monic(p, n - da, highs);
        for (const TPoly& g : lows)
            for (const TPoly& h : highs)
                if (tmul(g, h, p) == f) return false;
    }
    return true;
}

// Lexicographically-first irreducible monic of degree n, by exhaustion.
TPoly oracle_first_irreducible(std::uint64_t p, unsigned n) {
    std::vector<TPoly> candidates;
    enumerate_monic(p, n, candidates);
    std::sort(candidates.begin(), candidates.end(), [n](const TPoly& a, const TPoly& b) {
        for (unsigned i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    for (const TPoly& f : candidates)
        if (oracle_irreducible(f, p)) return f;
    return {};
}

}  // namespace

TEST_CASE("modulus selection matches the exhaustive oracle") {
    CHECK(Field(2, 1).spec().modulus == std::vector<Coeff>{0, 1});

    Field f22(2, 2);
    CHECK(f22.spec().modulus == std::vector<Coeff>{1, 1, 1});
    // the only irreducible monic quadratic over F_2
    std::vector<TPoly> quads;
    enumerate_monic(2, 2, quads);
    int irreducible = 0;
    for (const auto& f : quads) irreducible += oracle_irreducible(f, 2);
    CHECK(irreducible == 1);

    Field f32(3, 2);
    CHECK(f32.spec().modulus == std::vector<Coeff>{1, 0, 1});
    TPoly first = oracle_first_irreducible(3, 2);
    CHECK(std::equal(first.begin(), first.end(), f32.spec().modulus.begin()));

    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 4},
                        {2, 6},
                        {3, 3},
                        {5, 2},
                        {7, 2}}) {
        Field F(p, n);
        TPoly expect = oracle_first_irreducible(p, n);
        REQUIRE(!expect.empty());
        CHECK(std::equal(expect.begin(), expect.end(), F.spec().modulus.begin()));
    }
}

TEST_CASE("alternative modulus rank gives a different irreducible") {
    Field a(3, 2);
    Field b(3, 2, 1);
    CHECK(a.spec().modulus != b.spec().modulus);
    TPoly other(b.spec().modulus.begin(), b.spec().modulus.end());
    CHECK(oracle_irreducible(other, 3));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(65537, 1), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
    Field f4(2, 2);
    FieldElement g = f4.generator();
    CHECK(f4.mul(g, f4.mul(g, g)) == f4.one());  // g * g^2 = 1 in a group of order 3

    Field f3(3, 1);
    CHECK(f3.add(f3.scalar(2), f3.scalar(2)) == f3.one());

    Field f9(3, 2);
    FieldElement x = f9.from_coeffs({0, 1});
    CHECK(f9.mul(x, x) == f9.scalar(2));  // x^2 = -1 mod x^2+1
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 1}}) {
        Field F(p, n);
        const std::uint64_t q = F.order_u64();
        for (std::uint64_t i = 0; i < q; ++i) {
            FieldElement a = F.element(i);
            CHECK(F.index(a) == i);
            CHECK(F.add(a, F.zero()) == a);
            CHECK(F.mul(a, F.one()) == a);
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (!F.is_zero(a)) {
                CHECK(F.mul(a, F.inverse(a)) == F.one());
                CHECK(F.div(a, a) == F.one());
            }
            for (std::uint64_t j = 0; j < q; ++j) {
                FieldElement b = F.element(j);
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (std::uint64_t l = 0; l < q; ++l) {
                    FieldElement c = F.element(l);
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("division errors") {
    Field f9(3, 2);
    CHECK_THROWS_AS(f9.div(f9.one(), f9.zero()), std::invalid_argument);
    Field other(3, 2);
    CHECK_THROWS_AS(f9.add(f9.one(), other.one()), std::invalid_argument);
}

TEST_CASE("frobenius fixes the prime field and closes at degree n") {
    Field f9(3, 2);
    FieldElement x = f9.from_coeffs({0, 1});
    CHECK(f9.frobenius(x, 1) == f9.mul_scalar(x, 2));  // x^3 = -x mod x^2+1
    for (std::uint64_t v = 0; v < 3; ++v)
        CHECK(f9.frobenius(f9.scalar(v), 5) == f9.scalar(v));

    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}}) {
        Field F(p, n);
        for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
            FieldElement a = F.element(i);
            CHECK(F.frobenius(a, n) == a);
            // frobenius is the p-power map
            CHECK(F.frobenius(a, 1) == F.pow(a, mpz_class(static_cast<unsigned long>(p))));
        }
    }
}

TEST_CASE("trace examples and properties") {
    Field f9(3, 2);
    FieldElement x = f9.from_coeffs({0, 1});
    CHECK(f9.trace_to(x, 1) == f9.zero());  // x + x^3 = 0 mod x^2+1
    CHECK(f9.trace_to(x, 2) == x);
    CHECK_THROWS_AS(f9.trace_to(x, 4), std::invalid_argument);

    for (auto [p, n, d] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 4, 2},
                           {3, 4, 2},
                           {2, 6, 3},
                           {5, 2, 1}}) {
        Field F(p, n);
        std::set<std::uint64_t> image;
        for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
            FieldElement a = F.element(i);
            FieldElement tr = F.trace_to(a, d);
            CHECK(F.frobenius(tr, d) == tr);  // lands in the subfield
            image.insert(F.index(tr));
            // additivity
            FieldElement b = F.element((i * 7 + 3) % F.order_u64());
            CHECK(F.trace_to(F.add(a, b), d) == F.add(F.trace_to(a, d), F.trace_to(b, d)));
        }
        std::uint64_t subfield_size = 1;
        for (unsigned i = 0; i < d; ++i) subfield_size *= p;
        CHECK(image.size() == subfield_size);  // surjective onto the subfield
    }

    // transitivity through a tower: the full trace equals the degree-2
    // subfield's own two-term trace applied to the intermediate trace
    for (auto [p, deg] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 4}}) {
        Field F(p, deg);
        for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
            FieldElement a = F.element(i);
            FieldElement mid = F.trace_to(a, 2);
            FieldElement towered = F.add(mid, F.frobenius(mid, 1));
            CHECK(F.trace_to(a, 1) == towered);
        }
    }
}

TEST_CASE("generator examples and exact order") {
    Field f2(2, 1);
    CHECK(f2.generator() == f2.one());

    Field f4(2, 2);
    CHECK(f4.generator() == f4.from_coeffs({0, 1}));

    Field f9(3, 2);
    CHECK(f9.generator() == f9.from_coeffs({1, 1}));

    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
        Field F(p, n);
        FieldElement g = F.generator();
        // brute-force multiplicative order
        std::uint64_t order = 1;
        FieldElement cur = g;
        while (!(cur == F.one())) {
            cur = F.mul(cur, g);
            ++order;
        }
        CHECK(order == F.order_u64() - 1);
    }
}

TEST_CASE("linearized image matches direct enumeration") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}}) {
        Field F(p, n);
        for (unsigned k = 1; k <= 4; ++k) {
            for (int sign : {+1, -1}) {
                LinearSubspace im = F.linearized_image(k, sign);
                std::set<std::uint64_t> direct;
                for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
                    FieldElement y = F.element(i);
                    FieldElement v = sign > 0 ? F.add(F.frobenius(y, k), y)
                                              : F.sub(F.frobenius(y, k), y);
                    direct.insert(F.index(v));
                }
                CHECK(im.size() == mpz_class(static_cast<unsigned long>(direct.size())));
                for (std::uint64_t i = 0; i < F.order_u64(); ++i)
                    CHECK(im.contains(F.element(i)) == (direct.count(i) > 0));
            }
        }
    }
}

TEST_CASE("image of the full-degree difference map is the zero subspace") {
    Field F(3, 2);
    LinearSubspace im = F.linearized_image(2, -1);
    CHECK(im.rank() == 0);
    CHECK(im.contains(F.zero()));
    CHECK(!im.contains(F.one()));
}

TEST_CASE("difference images depend only on gcd(n, k)") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (unsigned n = 1; n <= 6; ++n) {
            Field F(p, n);
            for (unsigned k = 1; k <= 8; ++k) {
                unsigned d = std::gcd(n, k);
                CHECK(F.linearized_image(k, -1) == F.linearized_image(d, -1));
            }
        }
    }
}

TEST_CASE("sum images collapse when k/d is odd and n/d is even") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (unsigned n = 1; n <= 6; ++n) {
            Field F(p, n);
            for (unsigned k = 1; k <= 8; ++k) {
                unsigned d = std::gcd(n, k);
                if ((k / d) % 2 == 1 && (n / d) % 2 == 0)
                    CHECK(F.linearized_image(k, +1) == F.linearized_image(d, +1));
            }
        }
    }
}

TEST_CASE("image cardinality complements the kernel") {
    Field F(3, 4);
    for (unsigned k = 1; k <= 4; ++k) {
        LinearSubspace im = F.linearized_image(k, +1);
        CHECK(im.size() * im.kernel_size() == F.order());
    }
}

TEST_CASE("field spec serializes with constant term first") {
    Field f9(3, 2);
    CHECK(to_json(f9.spec()).dump() == "{\"p\":3,\"n\":2,\"modulus\":[1,0,1]}");
}

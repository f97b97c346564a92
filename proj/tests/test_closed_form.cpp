// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "hermitian/closed_form.hpp"
#include "hermitian/field.hpp"

using namespace hermitian;

namespace {

mpz_class pow_of(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

// Test-only elliptic counters, used as independent oracles for the deviation
// transport. Points are counted with the single point at infinity.

// y^2 = x^3 - x - 1 over F_{3^n}; trace 3 at n = 1, period 12.
mpz_class count_e1(unsigned n) {
    Field F(3, n);
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
        FieldElement y = F.element(i);
        squares.insert(F.index(F.mul(y, y)));
    }
    std::uint64_t affine = 0;
    for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
        FieldElement x = F.element(i);
        FieldElement rhs = F.sub(F.sub(F.mul(F.mul(x, x), x), x), F.one());
        if (F.is_zero(rhs))
            affine += 1;
        else if (squares.count(F.index(rhs)))
            affine += 2;
    }
    return mpz_class(static_cast<unsigned long>(affine)) + 1;
}

// y^2 + y = x^3 + x over F_{2^n}; trace -2 at n = 1, period 8.
mpz_class count_e2(unsigned n) {
    Field F(2, n);
    std::uint64_t affine = 0;
    for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
        FieldElement x = F.element(i);
        FieldElement rhs = F.add(F.mul(F.mul(x, x), x), x);
        if (F.is_zero(F.trace_to(rhs, 1))) affine += 2;  // y^2+y=c solvable iff Tr(c)=0
    }
    return mpz_class(static_cast<unsigned long>(affine)) + 1;
}

// Exact power sums of the two Frobenius roots with trace a over F_p.
std::vector<mpz_class> frobenius_power_sums(long a, std::uint64_t p, unsigned n_max) {
    std::vector<mpz_class> s(n_max + 1);
    s[0] = 2;
    if (n_max >= 1) s[1] = a;
    for (unsigned n = 2; n <= n_max; ++n)
        s[n] = a * s[n - 1] - mpz_class(static_cast<unsigned long>(p)) * s[n - 2];
    return s;
}

}  // namespace

TEST_CASE("Legendre symbol by Euler's criterion") {
    CHECK(legendre(1, 3) == 1);
    CHECK(legendre(2, 3) == -1);
    CHECK(legendre(3, 3) == 0);
    CHECK_THROWS_AS(legendre(1, 2), std::invalid_argument);
    // cross-check against explicit squares mod 7
    std::set<long> squares;
    for (long x = 1; x < 7; ++x) squares.insert(x * x % 7);
    for (long a = 1; a < 7; ++a) CHECK(legendre(a, 7) == (squares.count(a) ? 1 : -1));
}

TEST_CASE("closed counts, anchor values") {
    CHECK(count_closed({3, 1, 1}, 2).count == 28);
    CHECK(count_closed({3, 1, 1}, 3).count == 28);
    CHECK(count_closed({3, 1, 1}, 4).count == 28);
    CHECK(count_closed({3, 1, 2}, 4).count == 64);
    CHECK(count_closed({2, 2, 1}, 8).count == 65);
    CHECK(count_closed({3, 1, 0}, 2).count == 16);
    CHECK(count_closed({2, 1, 0}, 5).count == 33);  // genus 0
    CHECK(count_closed({3, 1, 1}, 6).count == 892);
    CHECK(count_closed({3, 1, 1}, 5).count == 244);
}

TEST_CASE("closed counts equal brute force on a dense grid") {
    for (std::uint64_t p : {2ull, 3ull}) {
        unsigned n_max = 0;
        for (std::uint64_t q = 1; q <= (std::uint64_t{1} << 10) / p; q *= p) ++n_max;
        for (unsigned k = 1; k <= 2; ++k)
            for (unsigned t = 0; t <= 2; ++t)
                for (unsigned n = 1; n <= n_max; ++n)
                    CHECK(count_closed({p, k, t}, n).count == count_brute({p, k, t}, n).count);
    }
}

TEST_CASE("odd degrees always give the trivial count") {
    for (CurveParams params : {CurveParams{3, 1, 1}, {2, 2, 2}, {5, 2, 3}, {7, 1, 0}}) {
        for (std::uint64_t n = 1; n <= 15; n += 2)
            CHECK(count_closed(params, n).count == pow_of(params.p, n) + 1);
    }
}

TEST_CASE("printed t=0 table: examples and agreement with ground truth") {
    CHECK(theorem45_deviation(3, 1, 2).T == -2);
    CHECK(count_from_deviation(theorem45_deviation(3, 1, 2)) == 16);
    CHECK(theorem45_deviation(3, 1, 4).T == 2);
    CHECK(count_from_deviation(theorem45_deviation(3, 1, 4)) == 64);
    CHECK(theorem45_deviation(3, 1, 1).T == 0);
    CHECK_THROWS_AS(theorem45_deviation(2, 1, 2), std::invalid_argument);

    for (std::uint64_t p : {3ull, 5ull, 7ull})
        for (unsigned k = 1; k <= 3; ++k)
            for (std::uint64_t n = 1; n <= 12ull * k; ++n)
                CHECK(count_from_deviation(theorem45_deviation(p, k, n)) ==
                      count_closed({p, k, 0}, n).count);
}

TEST_CASE("printed t=1 table: examples and agreement with ground truth") {
    CHECK(corollary12_deviation(3, 1, 2).T == -6);
    CHECK(count_from_deviation(corollary12_deviation(3, 1, 2)) == 28);
    CHECK(corollary12_deviation(2, 1, 4).T == 2);
    CHECK(count_from_deviation(corollary12_deviation(2, 1, 4)) == 9);
    CHECK(corollary12_deviation(5, 1, 3).T == 0);
    CHECK(count_from_deviation(corollary12_deviation(5, 1, 3)) == 126);

    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        for (unsigned k = 1; k <= 3; ++k)
            for (std::uint64_t n = 1; n <= 12ull * k; ++n)
                CHECK(count_from_deviation(corollary12_deviation(p, k, n)) ==
                      count_closed({p, k, 1}, n).count);
}

TEST_CASE("printed master table: faithful values, including the known mismatch") {
    CHECK(theorem11_deviation(2, 1, 1, 1).T == 0);
    CHECK(theorem11_deviation(3, 1, 1, 2).T == -16);
    CHECK(closed_deviation({3, 1, 1}, 2) == -6);  // ground truth disagrees
    CHECK(theorem11_deviation(3, 1, 1, 1).T == 0);
}

TEST_CASE("deviation transport on this family") {
    Deviation base{{3, 1, 1}, 2, mpz_class(-6)};
    Deviation at6 = extend_supersingular(base, 6);
    CHECK(at6.T == -6);
    CHECK(count_from_deviation(at6) == 892);

    Deviation odd_base{{3, 1, 1}, 1, mpz_class(0)};
    CHECK(count_from_deviation(extend_supersingular(odd_base, 3)) == 28);
    CHECK(count_from_deviation(extend_supersingular(odd_base, 5)) == 244);
    CHECK_THROWS_AS(extend_supersingular(base, 5), std::invalid_argument);  // gcd(5,4) != 2
}

TEST_CASE("deviation transport against elliptic oracles, odd characteristic") {
    // brute-validate the recurrence first
    std::vector<mpz_class> s = frobenius_power_sums(3, 3, 24);
    for (unsigned n = 1; n <= 6; ++n) CHECK(count_e1(n) == pow_of(3, n) + 1 - s[n]);

    // the transport must reproduce every degree from the gcd base degree
    for (std::uint64_t n = 1; n <= 24; ++n) {
        std::uint64_t m = std::gcd(n, std::uint64_t{12});
        mpz_class base = -s[static_cast<unsigned>(m)];       // raw deviation at m
        mpz_class expect = -s[static_cast<unsigned>(n)];
        CHECK(extend_raw_deviation(base, 3, 1, m, n, 12) == expect);
    }
    CHECK_THROWS_AS(extend_raw_deviation(mpz_class(1), 3, 1, 2, 5, 12), std::invalid_argument);
}

TEST_CASE("deviation transport against elliptic oracles, characteristic 2") {
    std::vector<mpz_class> s = frobenius_power_sums(-2, 2, 24);
    for (unsigned n = 1; n <= 8; ++n) CHECK(count_e2(n) == pow_of(2, n) + 1 - s[n]);

    for (std::uint64_t n = 1; n <= 24; ++n) {
        std::uint64_t m = std::gcd(n, std::uint64_t{8});
        mpz_class base = -s[static_cast<unsigned>(m)];
        mpz_class expect = -s[static_cast<unsigned>(n)];
        CHECK(extend_raw_deviation(base, 2, 1, m, n, 8) == expect);
    }
}

TEST_CASE("deviation depends only on gcd with the reduction modulus") {
    for (CurveParams params : {CurveParams{3, 1, 1}, {2, 2, 1}, {3, 2, 2}, {5, 1, 2}}) {
        const std::uint64_t s = reduction_modulus(params);
        for (std::uint64_t n = 1; n <= 40; ++n)
            for (std::uint64_t m = 1; m <= 40; ++m)
                if (std::gcd(n, s) == std::gcd(m, s))
                    CHECK(closed_deviation(params, n) == closed_deviation(params, m));
    }
}

TEST_CASE("nonzero deviation at an odd degree is rejected") {
    Deviation bad{{3, 1, 1}, 3, mpz_class(1)};
    CHECK_THROWS_AS(count_from_deviation(bad), std::logic_error);
}

TEST_CASE("discrepancy report flags the printed mismatch") {
    DiscrepancyRanges ranges;
    ranges.primes = {2, 3};
    ranges.k_max = 2;
    ranges.t_max = 2;
    ranges.n_max = 6;
    std::vector<DiscrepancyRow> rows = discrepancy_report(ranges);

    bool found = false;
    for (const auto& row : rows) {
        if (row.params == CurveParams{3, 1, 1} && row.n == 2) {
            found = true;
            CHECK(row.printed_T == -16);
            CHECK(row.true_T == -6);
            CHECK(!row.agree);
        }
        if (row.params == CurveParams{2, 1, 1} && row.n == 1) CHECK(row.agree);
        if (row.n % 2 == 1) CHECK(row.true_T == 0);
    }
    CHECK(found);

    // lexicographic ordering in (p, k, t, n)
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto key = [](const DiscrepancyRow& r) {
            return std::tuple(r.params.p, r.params.k, r.params.t, r.n);
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }

    // a threaded run must produce the identical report
    DiscrepancyRanges threaded = ranges;
    threaded.threads = 4;
    std::vector<DiscrepancyRow> rows2 = discrepancy_report(threaded);
    REQUIRE(rows.size() == rows2.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].params == rows2[i].params);
        CHECK(rows[i].printed_T == rows2[i].printed_T);
        CHECK(rows[i].true_T == rows2[i].true_T);
    }
}

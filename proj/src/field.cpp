// SPDX-License-Identifier: Apache-2.0
#include "hermitian/field.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace hermitian {
namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 16;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// ---- scalar arithmetic mod p (p < 2^16) ----

inline Coeff addp(Coeff a, Coeff b, std::uint64_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p ? s - p : s);
}

inline Coeff subp(Coeff a, Coeff b, std::uint64_t p) {
    return static_cast<Coeff>(a >= b ? a - b : a + p - b);
}

inline Coeff mulp(Coeff a, Coeff b, std::uint64_t p) {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p);
}

inline Coeff negp(Coeff a, std::uint64_t p) { return a == 0 ? 0 : static_cast<Coeff>(p - a); }

Coeff invp(Coeff a, std::uint64_t p) {
    return static_cast<Coeff>(powmod_u64(a, p - 2, p));
}

// ---- dense polynomials over F_p, constant term first ----

using Poly = std::vector<Coeff>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly psub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Coeff x = i < a.size() ? a[i] : 0;
        Coeff y = i < b.size() ? b[i] : 0;
        r[i] = subp(x, y, p);
    }
    trim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<Coeff>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    trim(r);
    return r;
}

Poly pmod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const int df = pdeg(f);
    Coeff lead_inv = invp(f.back(), p);
    while (pdeg(a) >= df) {
        Coeff q = mulp(a.back(), lead_inv, p);
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = subp(a[shift + i], mulp(q, f[i], p), p);
        trim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return pmod(pmul(a, b, p), f, p);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: x^{p^n} = x mod f and gcd(x^{p^{n/l}} - x, f) = 1 for prime l | n.
bool is_irreducible(const Poly& f, std::uint64_t p, unsigned n,
                    const std::vector<std::uint64_t>& prime_divisors_of_n) {
    // frob[i] = x^{p^i} mod f, built by repeated p-th powering
    Poly x{0, 1};
    std::vector<Poly> frob(n + 1);
    frob[0] = x;
    for (unsigned i = 1; i <= n; ++i) frob[i] = ppowmod(frob[i - 1], p, f, p);
    if (frob[n] != pmod(x, f, p)) return false;
    for (std::uint64_t l : prime_divisors_of_n) {
        Poly g = pgcd(psub(frob[n / l], x, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

// Lexicographic odometer over (c_0, ..., c_{len-1}); compares c_0 first, so
// the rightmost coordinate advances fastest. Returns false on wrap-around.
bool lex_advance(std::vector<Coeff>& c, std::uint64_t p) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

std::atomic<std::uint32_t> next_field_id{1};

}  // namespace

// ---- u64 primality / factorization ----

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (v % q == 0) return v == q;
    }
    std::uint64_t d = v - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, v);
            if (x == v - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t v, std::uint64_t& fuel) {
    if ((v & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            if (fuel-- == 0) throw budget_error("factorization budget exceeded");
            x = (mulmod_u64(x, x, v) + c) % v;
            y = (mulmod_u64(y, y, v) + c) % v;
            y = (mulmod_u64(y, y, v) + c) % v;
            d = std::gcd(x > y ? x - y : y - x, v);
        }
        if (d != v) return d;
    }
}

void factor_rec(std::uint64_t v, std::vector<std::uint64_t>& out, std::uint64_t& fuel) {
    if (v == 1) return;
    if (is_prime_u64(v)) {
        out.push_back(v);
        return;
    }
    std::uint64_t d = pollard_rho(v, fuel);
    factor_rec(d, out, fuel);
    factor_rec(v / d, out, fuel);
}

}  // namespace

std::vector<std::uint64_t> distinct_prime_factors_u64(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    std::uint64_t fuel = 20'000'000;
    factor_rec(v, out, fuel);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- LinearSubspace ----

LinearSubspace::LinearSubspace(std::uint64_t p, unsigned n, std::vector<std::vector<Coeff>> rows)
    : p_(p), n_(n), rows_(std::move(rows)) {
    pivots_.reserve(rows_.size());
    for (const auto& row : rows_) {
        unsigned piv = n_;
        for (unsigned j = 0; j < n_; ++j) {
            if (row[j] != 0) {
                piv = j;
                break;
            }
        }
        pivots_.push_back(piv);
    }
}

mpz_class LinearSubspace::size() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), rank());
    return r;
}

mpz_class LinearSubspace::kernel_size() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), kernel_dim());
    return r;
}

bool LinearSubspace::contains(const FieldElement& a) const { return contains_coords(a.c); }

bool LinearSubspace::contains_coords(const std::vector<Coeff>& v) const {
    std::vector<Coeff> rem = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        unsigned piv = pivots_[r];
        if (piv >= n_ || rem[piv] == 0) continue;
        // rows are RREF with unit pivots
        Coeff factor = rem[piv];
        for (unsigned j = 0; j < n_; ++j) rem[j] = subp(rem[j], mulp(factor, rows_[r][j], p_), p_);
    }
    return std::all_of(rem.begin(), rem.end(), [](Coeff c) { return c == 0; });
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<unsigned> rref(std::vector<std::vector<Coeff>>& rows, unsigned cols, std::uint64_t p) {
    std::vector<unsigned> pivots;
    std::size_t rank = 0;
    for (unsigned col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Coeff inv = invp(rows[rank][col], p);
        for (unsigned j = 0; j < cols; ++j) rows[rank][j] = mulp(rows[rank][j], inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Coeff factor = rows[r][col];
            for (unsigned j = 0; j < cols; ++j)
                rows[r][j] = subp(rows[r][j], mulp(factor, rows[rank][j], p), p);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

}  // namespace

// ---- Field ----

Field::Field(std::uint64_t p, unsigned n) : Field(p, n, 0) {}

Field::Field(std::uint64_t p, unsigned n, unsigned modulus_rank)
    : id_(next_field_id.fetch_add(1)) {
    if (p < 2 || p >= kMaxPrime || !is_prime_u64(p))
        throw std::invalid_argument("field characteristic must be a prime below 2^16");
    if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
    spec_.p = p;
    spec_.n = n;

    auto n_primes = distinct_prime_factors_u64(n);
    std::vector<Coeff> low(n, 0);  // (c_0, ..., c_{n-1}) of the monic candidate
    unsigned found = 0;
    for (;;) {
        Poly f(low.begin(), low.end());
        f.push_back(1);
        if (is_irreducible(f, p, n, n_primes)) {
            if (found == modulus_rank) {
                spec_.modulus.assign(f.begin(), f.end());
                break;
            }
            ++found;
        }
        if (!lex_advance(low, p))
            throw std::invalid_argument("fewer irreducible polynomials of this degree than the "
                                        "requested modulus rank");
    }
    init();
}

void Field::init() {
    const std::uint64_t p = spec_.p;
    const unsigned n = spec_.n;
    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(p), n);
    order_fits_u64_ = order_.fits_ulong_p() != 0;
    if (order_fits_u64_) order_u64_ = mpz_get_ui(order_.get_mpz_t());

    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    Poly xp = ppowmod(Poly{0, 1}, p, f, p);
    frob_.assign(std::size_t{n} * n, 0);
    Poly acc{1};  // (x^p)^j
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned r = 0; r < n; ++r)
            frob_[std::size_t{r} * n + j] = r < acc.size() ? acc[r] : 0;
        if (j + 1 < n) acc = pmulmod(acc, xp, f, p);
    }
}

std::uint64_t Field::order_u64() const {
    if (!order_fits_u64_) throw budget_error("field order does not fit in 64 bits");
    return order_u64_;
}

void Field::check(const FieldElement& a) const {
    if (a.field_id != id_ || a.c.size() != spec_.n)
        throw std::invalid_argument("operand belongs to a different field");
}

FieldElement Field::zero() const { return FieldElement{id_, std::vector<Coeff>(spec_.n, 0)}; }

FieldElement Field::one() const {
    FieldElement e = zero();
    e.c[0] = 1 % static_cast<Coeff>(spec_.p);
    return e;
}

FieldElement Field::scalar(std::uint64_t value) const {
    FieldElement e = zero();
    e.c[0] = static_cast<Coeff>(value % spec_.p);
    return e;
}

FieldElement Field::from_coeffs(std::vector<Coeff> coords) const {
    if (coords.size() != spec_.n) throw std::invalid_argument("coordinate vector has wrong length");
    for (Coeff& c : coords) c = static_cast<Coeff>(c % spec_.p);
    return FieldElement{id_, std::move(coords)};
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= order_u64()) throw std::invalid_argument("element index out of range");
    FieldElement e = zero();
    for (unsigned i = 0; i < spec_.n && index; ++i) {
        e.c[i] = static_cast<Coeff>(index % spec_.p);
        index /= spec_.p;
    }
    return e;
}

std::uint64_t Field::index(const FieldElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (unsigned i = spec_.n; i-- > 0;) idx = idx * spec_.p + a.c[i];
    return idx;
}

bool Field::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](Coeff c) { return c == 0; });
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = a;
    for (unsigned i = 0; i < spec_.n; ++i) r.c[i] = addp(r.c[i], b.c[i], spec_.p);
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = a;
    for (unsigned i = 0; i < spec_.n; ++i) r.c[i] = subp(r.c[i], b.c[i], spec_.p);
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement r = a;
    for (Coeff& c : r.c) c = negp(c, spec_.p);
    return r;
}

FieldElement Field::mul_scalar(const FieldElement& a, std::uint64_t s) const {
    check(a);
    FieldElement r = a;
    Coeff sc = static_cast<Coeff>(s % spec_.p);
    for (Coeff& c : r.c) c = mulp(c, sc, spec_.p);
    return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    Poly prod = pmul(Poly(a.c.begin(), a.c.end()), Poly(b.c.begin(), b.c.end()), spec_.p);
    Poly red = pmod(std::move(prod), f, spec_.p);
    FieldElement r = zero();
    for (std::size_t i = 0; i < red.size(); ++i) r.c[i] = red[i];
    return r;
}

FieldElement Field::inverse(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::invalid_argument("division by zero");
    // extended Euclid in F_p[x]: u*a + v*f = gcd, gcd constant since f irreducible
    Poly r0(spec_.modulus.begin(), spec_.modulus.end());
    Poly r1(a.c.begin(), a.c.end());
    trim(r1);
    Poly s0{}, s1{1};  // coefficients of a
    while (pdeg(r1) > 0) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        Coeff lead_inv = invp(r1.back(), spec_.p);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        while (pdeg(rem) >= pdeg(r1)) {
            Coeff qc = mulp(rem.back(), lead_inv, spec_.p);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = qc;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = subp(rem[shift + i], mulp(qc, r1[i], spec_.p), spec_.p);
            trim(rem);
        }
        Poly s2 = psub(s0, pmul(q, s1, spec_.p), spec_.p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("gcd with an irreducible modulus must be constant");
    Coeff scale = invp(r1[0], spec_.p);
    FieldElement r = zero();
    for (std::size_t i = 0; i < s1.size() && i < r.c.size(); ++i)
        r.c[i] = mulp(s1[i], scale, spec_.p);
    return r;
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inverse(b));
}

FieldElement Field::pow(const FieldElement& a, const mpz_class& e) const {
    check(a);
    if (sgn(e) < 0) throw std::invalid_argument("exponent must be nonnegative");
    if (sgn(e) == 0) return one();
    FieldElement r = one();
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

FieldElement Field::pow_reduced(const FieldElement& a, const mpz_class& e) const {
    check(a);
    if (sgn(e) == 0) return one();
    if (is_zero(a)) return zero();
    mpz_class reduced = e % (order_ - 1);
    if (sgn(reduced) == 0) return one();
    return pow(a, reduced);
}

FieldElement Field::frobenius(const FieldElement& a, std::uint64_t e) const {
    check(a);
    e %= spec_.n;
    const unsigned n = spec_.n;
    FieldElement cur = a;
    std::vector<Coeff> next(n);
    for (std::uint64_t step = 0; step < e; ++step) {
        for (unsigned r = 0; r < n; ++r) {
            std::uint64_t acc = 0;
            const Coeff* row = &frob_[std::size_t{r} * n];
            for (unsigned c = 0; c < n; ++c) acc += std::uint64_t{row[c]} * cur.c[c];
            next[r] = static_cast<Coeff>(acc % spec_.p);
        }
        cur.c = next;
    }
    return cur;
}

FieldElement Field::trace_to(const FieldElement& a, unsigned d) const {
    check(a);
    if (d == 0 || spec_.n % d != 0)
        throw std::invalid_argument("trace target degree must divide the field degree");
    FieldElement acc = a;
    FieldElement cur = a;
    for (unsigned i = 1; i < spec_.n / d; ++i) {
        cur = frobenius(cur, d);
        acc = add(acc, cur);
    }
    if (!(frobenius(acc, d) == acc)) throw std::logic_error("trace landed outside the subfield");
    return acc;
}

const FieldElement& Field::generator() const {
    std::call_once(gen_once_, [this] {
        if (!order_fits_u64_)
            throw budget_error("factorization budget exceeded for p^n - 1");
        const std::uint64_t group = order_u64_ - 1;
        std::vector<std::uint64_t> primes =
            group == 0 ? std::vector<std::uint64_t>{} : distinct_prime_factors_u64(group);
        std::vector<Coeff> coords(spec_.n, 0);
        for (;;) {
            if (!lex_advance(coords, spec_.p))
                throw std::logic_error("no multiplicative generator found");
            FieldElement cand{id_, coords};
            bool full_order = true;
            for (std::uint64_t l : primes) {
                if (pow(cand, mpz_class(group / l)) == one()) {
                    full_order = false;
                    break;
                }
            }
            if (full_order) {
                gen_ = cand;
                return;
            }
        }
    });
    return *gen_;
}

std::vector<Coeff> Field::frobenius_matrix_power(unsigned e) const {
    const unsigned n = spec_.n;
    std::vector<Coeff> m(std::size_t{n} * n, 0);
    for (unsigned i = 0; i < n; ++i) m[std::size_t{i} * n + i] = 1;
    for (unsigned step = 0; step < e; ++step) {
        std::vector<Coeff> out(std::size_t{n} * n, 0);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                std::uint64_t acc = 0;
                for (unsigned j = 0; j < n; ++j)
                    acc += std::uint64_t{frob_[std::size_t{r} * n + j]} * m[std::size_t{j} * n + c];
                out[std::size_t{r} * n + c] = static_cast<Coeff>(acc % spec_.p);
            }
        m = std::move(out);
    }
    return m;
}

LinearSubspace Field::linearized_image(unsigned k, int sign) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (k < 1) throw std::invalid_argument("frobenius power must be at least 1");
    const unsigned n = spec_.n;
    std::vector<Coeff> mat = frobenius_matrix_power(k % n);
    for (unsigned i = 0; i < n; ++i) {
        Coeff& d = mat[std::size_t{i} * n + i];
        d = sign > 0 ? addp(d, 1 % static_cast<Coeff>(spec_.p), spec_.p)
                     : subp(d, 1 % static_cast<Coeff>(spec_.p), spec_.p);
    }
    // image = column space: row-reduce the transpose
    std::vector<std::vector<Coeff>> rows(n, std::vector<Coeff>(n));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) rows[r][c] = mat[std::size_t{c} * n + r];
    rref(rows, n, spec_.p);
    return LinearSubspace(spec_.p, n, std::move(rows));
}

std::optional<FieldElement> Field::linearized_kernel_element(unsigned k, int sign) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const unsigned n = spec_.n;
    std::vector<Coeff> mat = frobenius_matrix_power(k % n);
    for (unsigned i = 0; i < n; ++i) {
        Coeff& d = mat[std::size_t{i} * n + i];
        d = sign > 0 ? addp(d, 1 % static_cast<Coeff>(spec_.p), spec_.p)
                     : subp(d, 1 % static_cast<Coeff>(spec_.p), spec_.p);
    }
    std::vector<std::vector<Coeff>> rows(n, std::vector<Coeff>(n));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) rows[r][c] = mat[std::size_t{r} * n + c];
    std::vector<unsigned> pivots = rref(rows, n, spec_.p);
    if (pivots.size() == n) return std::nullopt;
    // first free column; back-substitute the pivot rows
    std::vector<bool> is_pivot(n, false);
    for (unsigned pc : pivots) is_pivot[pc] = true;
    unsigned free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Coeff> v(n, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = negp(rows[r][free_col], spec_.p);
    return FieldElement{id_, std::move(v)};
}

Field build_field(std::uint64_t p, unsigned n) { return Field(p, n); }

}  // namespace hermitian

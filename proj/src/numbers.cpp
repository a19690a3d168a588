#include "cmint/numbers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "cmint/error.hpp"

namespace cmint {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw InputError("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s)
{
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) {
        return false;
    }
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return false;
        }
    }
    return true;
}

std::uint64_t pollard_brent(std::uint64_t n, std::mt19937_64& rng)
{
    if (n % 2 == 0) {
        return 2;
    }
    std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
    for (;;) {
        std::uint64_t y = dist(rng);
        std::uint64_t const c = dist(rng);
        std::uint64_t const block = 128;
        std::uint64_t g = 1;
        std::uint64_t q = 1;
        std::uint64_t x = 0;
        std::uint64_t ys = 0;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            for (std::uint64_t k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out, std::mt19937_64& rng)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t const d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) {
            return false;
        }
    }
    return true;
}

bool is_prime(const Integer& n)
{
    if (n < 2) {
        return false;
    }
    if (n.fits_ulong_p()) {
        return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer isqrt(const Integer& n)
{
    if (n < 0) {
        throw InputError("isqrt of a negative number");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_squarefree(const Integer& n)
{
    if (n == 0) {
        return false;
    }
    for (auto const& [p, e] : factor(n)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

long ord_int(const Integer& x, std::uint64_t p)
{
    if (x == 0) {
        throw InputError("valuation of zero");
    }
    if (p < 2) {
        throw InputError("valuation at a non-prime");
    }
    Integer const pz(static_cast<unsigned long>(p));
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

std::uint64_t to_u64(const Integer& z)
{
    if (z < 0 || !z.fits_ulong_p()) {
        throw ResourceError("integer does not fit in 64 bits: " + z.get_str());
    }
    return z.get_ui();
}

std::int64_t to_i64(const Integer& z)
{
    if (!z.fits_slong_p()) {
        throw ResourceError("integer does not fit in 64 bits: " + z.get_str());
    }
    return z.get_si();
}

std::map<std::uint64_t, int> factor(std::uint64_t n)
{
    if (n == 0) {
        throw InputError("factor(0)");
    }
    std::map<std::uint64_t, int> out;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    // Fixed seed keeps the factorizer deterministic.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    factor_into(n, out, rng);
    return out;
}

std::map<std::uint64_t, int> factor(const Integer& n)
{
    Integer const a = abs(n);
    if (a == 0) {
        throw InputError("factor(0)");
    }
    if (!a.fits_ulong_p()) {
        throw ResourceError("factorization limited to 64-bit integers: " + a.get_str());
    }
    return factor(static_cast<std::uint64_t>(a.get_ui()));
}

}  // namespace cmint

#include "cmint/padic.hpp"

#include "cmint/error.hpp"

namespace cmint {

namespace {

Integer pow_ui(std::uint64_t base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

void require_odd_prime(std::uint64_t p)
{
    if (p == 2 || !is_prime(p)) {
        throw InputError("expected an odd prime, got " + std::to_string(p));
    }
}

struct UnitSplit {
    long exponent;
    Rational unit;  // ord_p(unit) == 0
};

UnitSplit split_unit(const Rational& x, std::uint64_t p)
{
    Integer num = x.get_num();
    Integer den = x.get_den();
    Integer const pz(static_cast<unsigned long>(p));
    long const a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    long const b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    return {a - b, make_rational(num, den)};
}

// Legendre symbol of a p-adic unit rational.
int unit_legendre(const Rational& u, std::uint64_t p)
{
    return legendre(u.get_num(), p) * legendre(u.get_den(), p);
}

int mod8(const Rational& u) { return static_cast<int>(residue(u, 8).get_ui()); }

}  // namespace

std::string Valuation::str() const { return infinite ? "inf" : std::to_string(value); }

Valuation operator+(const Valuation& a, const Valuation& b)
{
    if (a.infinite || b.infinite) {
        return Valuation::infinity();
    }
    return Valuation::of(a.value + b.value);
}

Valuation ord(const Rational& x, std::uint64_t l)
{
    if (x == 0) {
        return Valuation::infinity();
    }
    return Valuation::of(ord_int(x.get_num(), l) - ord_int(x.get_den(), l));
}

int legendre(const Integer& a, std::uint64_t p)
{
    require_odd_prime(p);
    Integer const pz(static_cast<unsigned long>(p));
    return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

int kronecker(const Integer& a, const Integer& n)
{
    if (n == 0) {
        throw InputError("kronecker symbol with n = 0");
    }
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer residue(const Rational& x, const Integer& modulus)
{
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        if (modulus == 1) {
            return 0;
        }
        throw InputError("residue: denominator not invertible");
    }
    Integer r = x.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

int hilbert(const Rational& a, const Rational& b, Place v)
{
    if (a == 0 || b == 0) {
        throw InputError("hilbert symbol of zero");
    }
    if (v.is_infinite()) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    std::uint64_t const p = v.prime;
    if (!is_prime(p)) {
        throw InputError("hilbert symbol at a non-prime " + std::to_string(p));
    }
    auto const [alpha, u] = split_unit(a, p);
    auto const [beta, w] = split_unit(b, p);
    if (p == 2) {
        int const u8 = mod8(u);
        int const w8 = mod8(w);
        auto eps = [](int x) { return ((x - 1) / 2) & 1; };
        auto omega = [](int x) { return ((x * x - 1) / 8) & 1; };
        int const e = eps(u8) * eps(w8) + static_cast<int>((alpha & 1) * omega(w8)) +
                      static_cast<int>((beta & 1) * omega(u8));
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && (p % 4 == 3)) {
        s = -s;
    }
    if (beta & 1) {
        s *= unit_legendre(u, p);
    }
    if (alpha & 1) {
        s *= unit_legendre(w, p);
    }
    return s;
}

std::optional<Integer> hensel_sqrt(const Rational& a, std::uint64_t l, unsigned k)
{
    if (!is_prime(l)) {
        throw InputError("hensel_sqrt: modulus base is not prime");
    }
    if (k == 0) {
        throw InputError("hensel_sqrt: precision must be positive");
    }
    if (a == 0 || ord(a, l).value != 0) {
        throw InputError("hensel_sqrt: argument must be an l-adic unit");
    }
    Integer const modulus = pow_ui(l, k);
    if (l == 2) {
        if (mod8(a) != 1) {
            return std::nullopt;
        }
        // s^2 = a mod 2^(k+1) pins the root mod 2^k.
        Integer const target = residue(a, pow_ui(2, k + 2));
        Integer s = 1;
        for (unsigned j = 3; j < k + 2; ++j) {
            Integer const mj1 = pow_ui(2, j + 1);
            Integer diff = s * s - target;
            mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), mj1.get_mpz_t());
            if (diff != 0) {
                s += pow_ui(2, j - 1);
            }
        }
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
        return r;
    }
    Integer const a0 = residue(a, l);
    if (legendre(a0, l) != 1) {
        return std::nullopt;
    }
    Integer const lz(static_cast<unsigned long>(l));
    Integer r0;
    if (l % 4 == 3) {
        mpz_powm_ui(r0.get_mpz_t(), a0.get_mpz_t(), (l + 1) / 4, lz.get_mpz_t());
    } else {
        // Tonelli-Shanks.
        std::uint64_t q = l - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        Integer z = 2;
        while (legendre(z, l) != -1) {
            ++z;
        }
        Integer c;
        mpz_powm_ui(c.get_mpz_t(), z.get_mpz_t(), q, lz.get_mpz_t());
        Integer t;
        mpz_powm_ui(t.get_mpz_t(), a0.get_mpz_t(), q, lz.get_mpz_t());
        mpz_powm_ui(r0.get_mpz_t(), a0.get_mpz_t(), (q + 1) / 2, lz.get_mpz_t());
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            Integer tt = t;
            while (tt != 1) {
                tt = tt * tt % lz;
                ++i;
            }
            Integer b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) {
                b = b * b % lz;
            }
            m = i;
            c = b * b % lz;
            t = t * c % lz;
            r0 = r0 * b % lz;
        }
    }
    if (2 * r0 > lz) {
        r0 = lz - r0;
    }
    // Newton iteration doubles the precision each step.
    Integer r = r0;
    Integer const target = residue(a, modulus);
    for (unsigned prec = 1; prec < k;) {
        prec = std::min(2 * prec, k);
        Integer const mod = pow_ui(l, prec);
        Integer inv;
        Integer two_r = 2 * r;
        mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t());
        r = r - (r * r - target) * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    }
    return r;
}

bool is_square_Ql(const Rational& x, std::uint64_t l)
{
    if (x == 0) {
        throw InputError("is_square_Ql(0)");
    }
    auto const [e, u] = split_unit(x, l);
    if (e & 1) {
        return false;
    }
    if (l == 2) {
        return mod8(u) == 1;
    }
    return unit_legendre(u, l) == 1;
}

}  // namespace cmint

#include "cmint/quadfield.hpp"

#include <array>
#include <set>
#include <utility>

#include "cmint/error.hpp"

namespace cmint {

namespace {

Integer pow_ui(std::uint64_t base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Integer mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Rational rational_pow(std::uint64_t l, long e)
{
    Integer const p = pow_ui(l, static_cast<unsigned long>(std::abs(e)));
    return e >= 0 ? Rational(p) : make_rational(1, p);
}

Integer lz(std::uint64_t l) { return Integer(static_cast<unsigned long>(l)); }

Integer divexact_pow(const Integer& a, std::uint64_t l, long e)
{
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), pow_ui(l, static_cast<unsigned long>(e)).get_mpz_t());
    return r;
}

// Valuation at a split spot of the integral element x + y sqrt(d) together
// with the residue of (x + y sqrt(d)) / l^v modulo l^unit_digits.
struct SplitImage {
    long valuation;
    Integer unit;
};

SplitImage split_image(const QuadField& field, const Integer& x, const Integer& y,
                       const PrimeSpot& spot, unsigned unit_digits)
{
    std::uint64_t const l = spot.l;
    long content = 0;
    Integer xs = x;
    Integer ys = y;
    if (x == 0) {
        content = ord_int(y, l);
    } else if (y == 0) {
        content = ord_int(x, l);
    } else {
        content = std::min(ord_int(x, l), ord_int(y, l));
    }
    xs = divexact_pow(x, l, content);
    ys = divexact_pow(y, l, content);
    Integer const norm = xs * xs - ys * ys * field.disc();
    // The valuation at one spot is bounded by the norm valuation, so this
    // precision determines it; the loop only guards the invariant.
    long const bound = norm == 0 ? 0 : ord_int(norm, l);
    unsigned k = static_cast<unsigned>(bound) + 2 + unit_digits;
    for (;;) {
        Integer const modulus = pow_ui(l, k);
        Integer const value = mod(xs + ys * spot_root(field, spot, k), modulus);
        if (value != 0) {
            long const v = ord_int(value, l);
            if (static_cast<unsigned long>(v) + unit_digits <= k) {
                Integer const unit = mod(divexact_pow(value, l, v), pow_ui(l, unit_digits));
                return {content + v, unit};
            }
        }
        k *= 2;
    }
}

// Squares of units of O_F / 2^k O_F for 2 inert, elements a + b*phi with
// phi = (1 + sqrt d)/2 encoded as a * 8 + b.
std::set<std::pair<int, int>> dyadic_inert_unit_squares(const Integer& disc, int modulus)
{
    int const c = static_cast<int>(mod((disc - 1) / 4, modulus).get_si());  // phi^2 = phi + c
    std::set<std::pair<int, int>> squares;
    for (int a = 0; a < modulus; ++a) {
        for (int b = 0; b < modulus; ++b) {
            if (a % 2 == 0 && b % 2 == 0) {
                continue;
            }
            // (a + b phi)^2 = a^2 + b^2 c + (2ab + b^2) phi
            int const s0 = ((a * a + b * b * c) % modulus + modulus) % modulus;
            int const s1 = ((2 * a * b + b * b) % modulus + modulus) % modulus;
            squares.emplace(s0, s1);
        }
    }
    return squares;
}

}  // namespace

std::string to_string(SpotKind kind)
{
    switch (kind) {
    case SpotKind::split:
        return "split";
    case SpotKind::inert:
        return "inert";
    case SpotKind::ramified:
        return "ramified";
    }
    return "?";
}

QuadField::QuadField(Integer disc) : disc_(std::move(disc))
{
    if (disc_ <= 1 || mod(disc_, 4) != 1 || !is_squarefree(disc_)) {
        throw InputError("quadratic field discriminant must be squarefree, > 1 and = 1 mod 4: " +
                         disc_.get_str());
    }
}

QuadElem::QuadElem(Integer x, Integer y, Integer den) : x_(std::move(x)), y_(std::move(y)), den_(std::move(den))
{
    if (den_ == 0) {
        throw InputError("quadratic element with zero denominator");
    }
    if (den_ < 0) {
        x_ = -x_;
        y_ = -y_;
        den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        x_ /= g;
        y_ /= g;
        den_ /= g;
    }
}

QuadElem QuadElem::from_rational(const Rational& q) { return QuadElem(q.get_num(), 0, q.get_den()); }

QuadElem QuadElem::from_parts(const Rational& q0, const Rational& q1)
{
    Integer den;
    mpz_lcm(den.get_mpz_t(), q0.get_den().get_mpz_t(), q1.get_den().get_mpz_t());
    return QuadElem(q0.get_num() * (den / q0.get_den()), q1.get_num() * (den / q1.get_den()), den);
}

std::string QuadElem::str(const Integer& D) const
{
    std::string root = D == 0 ? std::string("sqrt") : "sqrt(" + D.get_str() + ")";
    std::string s = "(" + x_.get_str() + (y_ < 0 ? " - " : " + ") + Integer(abs(y_)).get_str() + "*" + root + ")";
    if (den_ != 1) {
        s += "/" + den_.get_str();
    }
    return s;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b)
{
    return QuadElem::from_parts(a.rational_part() + b.rational_part(), a.sqrt_part() + b.sqrt_part());
}

QuadElem operator-(const QuadElem& a, const QuadElem& b)
{
    return QuadElem::from_parts(a.rational_part() - b.rational_part(), a.sqrt_part() - b.sqrt_part());
}

QuadElem scale(const QuadElem& a, const Rational& q)
{
    return QuadElem::from_parts(a.rational_part() * q, a.sqrt_part() * q);
}

QuadElem mul(const QuadField& field, const QuadElem& a, const QuadElem& b)
{
    return QuadElem(a.x() * b.x() + a.y() * b.y() * field.disc(), a.x() * b.y() + a.y() * b.x(),
                    a.den() * b.den());
}

Rational elem_norm(const QuadField& field, const QuadElem& e)
{
    return make_rational(e.x() * e.x() - e.y() * e.y() * field.disc(), e.den() * e.den());
}

Rational elem_trace(const QuadElem& e) { return make_rational(2 * e.x(), e.den()); }

bool is_integral(const QuadField& field, const QuadElem& e)
{
    return elem_trace(e).get_den() == 1 && elem_norm(field, e).get_den() == 1;
}

std::string PrimeSpot::str() const
{
    std::string s = "(" + std::to_string(l) + "," + to_string(kind);
    if (kind == SpotKind::split) {
        s += ",root=" + std::to_string(label);
    }
    return s + ")";
}

int residue_degree(const PrimeSpot& spot) { return spot.kind == SpotKind::inert ? 2 : 1; }

int ramification_index(const PrimeSpot& spot) { return spot.kind == SpotKind::ramified ? 2 : 1; }

std::vector<PrimeSpot> splitting(const QuadField& field, std::uint64_t l)
{
    if (!is_prime(l)) {
        throw InputError("splitting: not a prime: " + std::to_string(l));
    }
    int const k = kronecker(field.disc(), lz(l));
    if (k == 0) {
        return {PrimeSpot{l, SpotKind::ramified, 0, 0}};
    }
    if (k == -1) {
        return {PrimeSpot{l, SpotKind::inert, 0, 0}};
    }
    std::uint64_t const label_mod = l == 2 ? 4 : l;
    Integer const r = *hensel_sqrt(Rational(field.disc()), l, l == 2 ? 2 : 1);
    std::uint64_t const r0 = mod(r, lz(label_mod)).get_ui();
    return {PrimeSpot{l, SpotKind::split, +1, r0}, PrimeSpot{l, SpotKind::split, -1, label_mod - r0}};
}

Integer spot_root(const QuadField& field, const PrimeSpot& spot, unsigned k)
{
    if (spot.kind != SpotKind::split) {
        throw InputError("spot_root: spot is not split");
    }
    auto const r = hensel_sqrt(Rational(field.disc()), spot.l, k);
    if (!r) {
        throw ConsistencyError("split spot without a square root of the discriminant");
    }
    Integer const modulus = pow_ui(spot.l, k);
    return spot.sign > 0 ? *r : mod(-*r, modulus);
}

long ord_at(const QuadField& field, const QuadElem& e, const PrimeSpot& spot)
{
    if (e.is_zero()) {
        throw InputError("ord_at: zero element");
    }
    switch (spot.kind) {
    case SpotKind::inert:
        return ord(elem_norm(field, e), spot.l).value / 2;
    case SpotKind::ramified:
        return ord(elem_norm(field, e), spot.l).value;
    case SpotKind::split:
        break;
    }
    long const den_ord = ord_int(e.den(), spot.l);
    return split_image(field, e.x(), e.y(), spot, 0).valuation - den_ord;
}

long ord_at(const Rational& q, const PrimeSpot& spot)
{
    if (q == 0) {
        throw InputError("ord_at: zero rational");
    }
    return ramification_index(spot) * ord(q, spot.l).value;
}

LogCombo spot_norm_log(const PrimeSpot& spot) { return LogCombo::single(spot.l, residue_degree(spot)); }

SpotKind local_quadratic_type(const QuadField& field, const QuadElem& a, const PrimeSpot& spot)
{
    if (a.is_zero()) {
        throw InputError("local_quadratic_type: zero element");
    }
    std::uint64_t const l = spot.l;
    Rational const norm = elem_norm(field, a);
    switch (spot.kind) {
    case SpotKind::split: {
        unsigned const digits = l == 2 ? 3 : 1;
        auto const image = split_image(field, a.x(), a.y(), spot, digits);
        long const den_ord = ord_int(a.den(), l);
        if ((image.valuation - den_ord) % 2 != 0) {
            return SpotKind::ramified;
        }
        Integer const den_unit = divexact_pow(a.den(), l, den_ord);
        // 1/den_unit and den_unit share a square class.
        Integer const unit = mod(image.unit * den_unit, pow_ui(l, digits));
        if (l == 2) {
            if (unit == 1) {
                return SpotKind::split;
            }
            return unit == 5 ? SpotKind::inert : SpotKind::ramified;
        }
        return legendre(unit, l) == 1 ? SpotKind::split : SpotKind::inert;
    }
    case SpotKind::inert: {
        long const v2 = ord(norm, l).value;
        long const v = v2 / 2;
        if (v % 2 != 0) {
            return SpotKind::ramified;
        }
        if (l != 2) {
            // A unit of F_{l^2} is a square iff its norm is a square in F_l.
            Rational const unit_norm = norm / rational_pow(l, v2);
            return legendre(unit_norm.get_num() * unit_norm.get_den(), l) == 1 ? SpotKind::split
                                                                               : SpotKind::inert;
        }
        // u = a * den_odd^2 / 2^v is a unit in the same square class. Writing
        // X + Y sqrt d = (x + y sqrt d) * den_odd, u = (X + Y sqrt d) / 2^shift
        // = (X2 + Y2 sqrt d) / 2.
        long const den2 = ord_int(a.den(), 2);
        Integer const den_odd = divexact_pow(a.den(), 2, den2);
        Integer const X = a.x() * den_odd;
        Integer const Y = a.y() * den_odd;
        long const shift = v + den2;
        Integer X2;
        Integer Y2;
        if (shift >= 1) {
            X2 = divexact_pow(X, 2, shift - 1);
            Y2 = divexact_pow(Y, 2, shift - 1);
        } else {
            X2 = X * 2 * pow_ui(2, static_cast<unsigned long>(-shift));
            Y2 = Y * 2 * pow_ui(2, static_cast<unsigned long>(-shift));
        }
        Integer const alpha = mod((X2 - Y2) / 2, 8);
        Integer const beta = mod(Y2, 8);
        std::pair<int, int> const u{static_cast<int>(alpha.get_si()), static_cast<int>(beta.get_si())};
        if (dyadic_inert_unit_squares(field.disc(), 8).contains(u)) {
            return SpotKind::split;
        }
        std::pair<int, int> const u4{u.first % 4, u.second % 4};
        return dyadic_inert_unit_squares(field.disc(), 4).contains(u4) ? SpotKind::inert : SpotKind::ramified;
    }
    case SpotKind::ramified: {
        if (l == 2) {
            throw ConsistencyError("dyadic ramified spot in a field with disc = 1 mod 4");
        }
        long const v = ord(norm, l).value;
        if (v % 2 != 0) {
            return SpotKind::ramified;
        }
        // a / sqrt(d)^v is a unit whose residue is that of its rational part.
        Rational power(1);
        for (long i = 0; i < std::abs(v / 2); ++i) {
            power *= Rational(field.disc());
        }
        Rational const r = v >= 0 ? Rational(a.rational_part() / power) : Rational(a.rational_part() * power);
        if (ord(r, l).value != 0) {
            throw ConsistencyError("ramified spot: rational part is not a unit");
        }
        return legendre(r.get_num() * r.get_den(), l) == 1 ? SpotKind::split : SpotKind::inert;
    }
    }
    return SpotKind::inert;
}

std::vector<PrimeSpot> spots_above(const QuadField& field, const Rational& q)
{
    std::set<std::uint64_t> primes;
    for (Integer const* part : {&q.get_num(), &q.get_den()}) {
        if (*part != 0) {
            for (auto const& [p, e] : factor(*part)) {
                primes.insert(p);
            }
        }
    }
    std::vector<PrimeSpot> out;
    for (std::uint64_t p : primes) {
        for (auto const& s : splitting(field, p)) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace cmint

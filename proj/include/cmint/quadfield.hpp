#pragma once

// Real quadratic fields Q(sqrt d), d squarefree and d = 1 mod 4: element
// arithmetic, prime splitting and valuations of explicit elements at primes.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cmint/logcombo.hpp"
#include "cmint/numbers.hpp"
#include "cmint/padic.hpp"

namespace cmint {

enum class SpotKind { split, inert, ramified };

std::string to_string(SpotKind kind);

class QuadField {
public:
    /// Throws InputError unless disc is squarefree, disc = 1 mod 4, disc > 1.
    explicit QuadField(Integer disc);

    const Integer& disc() const { return disc_; }

private:
    Integer disc_;
};

/// (x + y sqrt(disc)) / den, kept with den > 0 and gcd(x, y, den) = 1.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(Integer x, Integer y, Integer den = 1);

    static QuadElem from_rational(const Rational& q);
    /// q0 + q1 sqrt(disc)
    static QuadElem from_parts(const Rational& q0, const Rational& q1);

    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    const Integer& den() const { return den_; }

    Rational rational_part() const { return make_rational(x_, den_); }
    Rational sqrt_part() const { return make_rational(y_, den_); }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    QuadElem conj() const { return QuadElem(x_, -y_, den_); }

    bool operator==(const QuadElem& other) const = default;
    /// "(x + y*sqrt)/den", or "(x + y*sqrt(D))/den" when D is given.
    std::string str(const Integer& D = 0) const;

private:
    Integer x_ = 0;
    Integer y_ = 0;
    Integer den_ = 1;
};

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem scale(const QuadElem& a, const Rational& q);
QuadElem mul(const QuadField& field, const QuadElem& a, const QuadElem& b);

Rational elem_norm(const QuadField& field, const QuadElem& e);
Rational elem_trace(const QuadElem& e);

/// e lies in the maximal order.
bool is_integral(const QuadField& field, const QuadElem& e);

/// A prime ideal of the field above the rational prime l.
/// Split primes carry the embedding sqrt(disc) -> sign * r, r the canonical
/// Hensel root; `label` is that root reduced mod l (mod 4 when l = 2).
struct PrimeSpot {
    std::uint64_t l = 0;
    SpotKind kind = SpotKind::inert;
    int sign = 0;
    std::uint64_t label = 0;

    auto operator<=>(const PrimeSpot&) const = default;
    std::string str() const;
};

int residue_degree(const PrimeSpot& spot);
/// Ramification index of the spot over l.
int ramification_index(const PrimeSpot& spot);

std::vector<PrimeSpot> splitting(const QuadField& field, std::uint64_t l);

/// Image of sqrt(disc) in Z_l / l^k under a split spot's embedding.
Integer spot_root(const QuadField& field, const PrimeSpot& spot, unsigned k);

/// Exact valuation of a nonzero element at the spot.
long ord_at(const QuadField& field, const QuadElem& e, const PrimeSpot& spot);
long ord_at(const Rational& q, const PrimeSpot& spot);

/// f * log l.
LogCombo spot_norm_log(const PrimeSpot& spot);

/// Behaviour of the spot in the quadratic extension field(sqrt a), a != 0,
/// read off from the local square class of a.
SpotKind local_quadratic_type(const QuadField& field, const QuadElem& a, const PrimeSpot& spot);

/// All spots above the primes dividing numerator or denominator of q.
std::vector<PrimeSpot> spots_above(const QuadField& field, const Rational& q);

}  // namespace cmint

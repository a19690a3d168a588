#pragma once

// Rational p-adic primitives: residue symbols, Hilbert symbols, valuations,
// Hensel square roots and local square tests over completions of Q.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "cmint/numbers.hpp"

namespace cmint {

/// Valuation of a rational at a prime; +inf represents ord(0).
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation infinity() { return {true, 0}; }
    static Valuation of(long v) { return {false, v}; }

    bool operator==(const Valuation&) const = default;
    std::string str() const;
};

Valuation operator+(const Valuation& a, const Valuation& b);

/// ord_l(x) for a rational x; infinity for x = 0.
Valuation ord(const Rational& x, std::uint64_t l);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, std::uint64_t p);

/// Kronecker symbol (a/n), n != 0.
int kronecker(const Integer& a, const Integer& n);

/// A place of Q: a finite prime or the real place.
struct Place {
    std::uint64_t prime = 0;  // 0 denotes the real place

    static Place infinity() { return {0}; }
    static Place at(std::uint64_t p) { return {p}; }
    bool is_infinite() const { return prime == 0; }
};

/// Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert(const Rational& a, const Rational& b, Place v);

/// Residue of the l-adic integer `x` modulo `modulus` (a power of l).
/// `x` must have nonnegative valuation at l.
Integer residue(const Rational& x, const Integer& modulus);

/// l-adic square root of a unit a, reduced mod l^k. The root is the lift of
/// r0 with 1 <= r0 <= (l-1)/2 for odd l and the root = 1 mod 4 for l = 2, so
/// roots at different precisions are compatible.
std::optional<Integer> hensel_sqrt(const Rational& a, std::uint64_t l, unsigned k);

/// True iff x is a square in Q_l.
bool is_square_Ql(const Rational& x, std::uint64_t l);

}  // namespace cmint

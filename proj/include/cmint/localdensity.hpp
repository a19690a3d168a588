#pragma once

// Local factors b_l(p, mu n, m) of the product formula for b_m(p), and the
// factors beta_l of the prime-level (m = q) local density computation.

#include <cstdint>
#include <optional>

#include "cmint/cmfield.hpp"
#include "cmint/tmatrix.hpp"

namespace cmint {

struct LocalFactorInput {
    const CMFieldData* field = nullptr;
    TMatrix T;
    std::uint64_t p = 0;
    std::uint64_t l = 0;
    long t_l = 0;  // ord_l((m^2 Dtilde - n^2) / (4 D m^2))
};

LocalFactorInput make_local_input(const CMFieldData& field, const TMatrix& T, std::uint64_t p, std::uint64_t l);

/// A unit value primitively represented by a x^2 + 2 b x y + c y^2 over Z_l,
/// reduced mod l (mod 8 for l = 2). Entries must be l-integral.
Integer alpha_l(const Rational& a, const Rational& b, const Rational& c, std::uint64_t l);
Integer alpha_l(const TMatrix& T, std::uint64_t l);

/// (-alpha, l)_l
int alpha_symbol(const Integer& alpha, std::uint64_t l);

/// Guards for the product formula: m squarefree and gcd(m, 2 D Dtilde p) = 1.
bool product_formula_applies(const CMFieldData& field, long m, std::uint64_t p);

/// b_l(p, mu n, m); nullopt when the product-formula guards fail.
std::optional<Integer> b_l_factor(const LocalFactorInput& in);

/// beta_l(T_q(mu n)) for q an odd prime split in F, p != q.
Integer beta_l_factor(const CMFieldData& field, const TMatrix& T, std::uint64_t q, std::uint64_t p,
                      std::uint64_t l);

/// l splits completely in the Galois closure K K~ (l prime to D Dtilde).
bool splits_completely_in_closure(const CMFieldData& field, std::uint64_t l);

}  // namespace cmint

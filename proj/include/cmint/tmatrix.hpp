#pragma once

// Binary forms T_m(mu n) = [[a, b], [b, c]] attached to a CM field and an
// index pair (m, n) with 0 < n < m sqrt(Dtilde).

#include <optional>
#include <vector>

#include "cmint/cmfield.hpp"
#include "cmint/numbers.hpp"

namespace cmint {

struct TMatrix {
    Rational a;
    Rational b;
    Rational c;
    long m = 1;
    long n = 1;
    int mu = 1;

    Rational det() const { return a * c - b * b; }
    /// Q(x, y) = a x^2 + 2 b x y + c y^2
    Rational value(const Integer& x, const Integer& y) const { return a * x * x + 2 * b * x * y + c * y * y; }
};

/// Solves the linear system tying (a, b, c) to Delta, n/m and mu, then checks
/// m-integrality, positive definiteness, the determinant identity and the two
/// integrality congruences. nullopt when any of them fails.
std::optional<TMatrix> t_matrix(const CMFieldData& field, long m, long n, int mu);

/// Signs mu admitting a T-matrix: both when D | n, otherwise the unique one.
/// Throws ConsistencyError when the sign count contradicts that.
std::vector<int> mu_candidates(const CMFieldData& field, long m, long n);

/// (m^2 Dtilde - n^2) / (4 D) as an exact rational.
Rational index_norm(const CMFieldData& field, long m, long n);

}  // namespace cmint

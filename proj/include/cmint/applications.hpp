#pragma once

// Consequences of the b_m formula: intersections with Humbert surfaces, primes
// of bad reduction for CM curves, and Igusa denominator bounds.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cmint/bm.hpp"

namespace cmint {

/// Indices (D m - n^2)/4 over n > 0 where that quotient is a positive integer.
std::vector<long> humbert_indices(const Integer& D, long m);

/// Half the sum of b_k over the Humbert indices k. Throws InputError when D m
/// is a square (the intersection is improper).
LogCombo humbert_intersection(const CMFieldData& field, long m);

struct BadReductionCertificate {
    std::string field_id;
    std::vector<long> indices;  // (D - n^2)/4 for odd 0 < n < sqrt D
    LogCombo totals;            // sum of b over the indices
    std::vector<std::uint64_t> bad_primes;
    Rational bound;  // D Dtilde / 64

    Json to_json() const;
};

/// Odd-n indices (D - n^2)/4 with 0 < n < sqrt D.
std::vector<long> bad_reduction_indices(const Integer& D);

/// Strict mode only. Throws ConsistencyError if a prime exceeds the bound.
BadReductionCertificate bad_reduction_primes(const CMFieldData& field);

using Factored = std::map<std::uint64_t, Integer>;

struct IgusaBounds {
    Factored A1;
    Factored A2;
    Factored A3;
    LogCombo S;

    Json to_json(bool expand = false) const;
};

/// exp(3 W_K S), exp(2 W_K S), exp(2 W_K S) where S sums b over the
/// bad-reduction indices. Strict mode only.
IgusaBounds igusa_denominator_bounds(const CMFieldData& field);

/// Product of p^e; ResourceError when the result would exceed `max_bits`.
Integer expand(const Factored& f, std::size_t max_bits = 1u << 16);

}  // namespace cmint

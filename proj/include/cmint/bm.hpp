#pragma once

// b_m = sum_p b_m(p) log p, evaluated by the ideal-counting definition
// (route a) and, where its guards hold, by the local-factor product formula
// (route b). Route a is authoritative; route b must agree with it.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmint/cmfield.hpp"
#include "cmint/logcombo.hpp"

namespace cmint {

/// One nonzero contribution B_t(p) to b_m(p): t = (n + m sqrt Dtilde)/(2D).
struct DefinitionTerm {
    long n = 0;
    PrimeSpot spot;
    long ord_t = 0;  // ord_spot(t)
    Integer rho;     // rho(t d spot^-1)
    Integer term;    // (ord_t + 1) * rho * f
};

/// Per-n contribution to the product formula: (ord_p N + 1) sum_mu prod_l b_l.
struct ProductTerm {
    long n = 0;
    std::vector<int> mus;
    Integer term;
};

/// Full route-a evaluation for one (field, m).
struct DefinitionScan {
    std::map<std::uint64_t, Integer> totals;
    std::map<std::uint64_t, std::vector<DefinitionTerm>> terms;
    std::set<std::uint64_t> support;  // primes dividing N(t d) for admissible t
    std::vector<long> admissible_n;
    std::vector<std::string> flags;
};

/// True iff t = (n + m sqrt Dtilde)/(2D) lies in the inverse relative different.
bool in_inverse_different(const CMFieldData& field, long m, long n);

DefinitionScan scan_definition(const CMFieldData& field, long m);

Integer bm_p_definition(const CMFieldData& field, long m, std::uint64_t p);

/// nullopt when m is not squarefree or gcd(m, 2 D Dtilde p) != 1.
std::optional<Integer> bm_p_product(const CMFieldData& field, long m, std::uint64_t p,
                                    std::vector<ProductTerm>* breakdown = nullptr);

/// Primes dividing (m^2 Dtilde - n^2)/(4D) for some 0 <= n < m sqrt(Dtilde)
/// where that quotient is a positive integer.
std::set<std::uint64_t> candidate_primes(const CMFieldData& field, long m);

struct BmEntry {
    std::uint64_t p = 0;
    Integer b;
    Integer route_a;
    std::optional<Integer> route_b;  // nullopt: inapplicable
    std::vector<DefinitionTerm> per_n;
};

struct BmReport {
    Integer D;
    QuadElem delta;
    Mode mode = Mode::strict;
    long m = 1;
    std::vector<BmEntry> entries;  // nonzero b_m(p), ascending p
    std::vector<std::string> flags;

    LogCombo bm() const;
    Json to_json() const;
};

/// Evaluates every support prime; throws ConsistencyError if the routes differ.
BmReport bm_report(const CMFieldData& field, long m);

LogCombo bm_full(const CMFieldData& field, long m);

/// Intersection number T_m . CM(K) = b_m / 2.
LogCombo intersection_number(const CMFieldData& field, long m);

}  // namespace cmint

#pragma once

// Quartic CM fields K = F(sqrt Delta), F = Q(sqrt D), together with the reflex
// data F~ = Q(sqrt D~), D~ = Delta Delta', and K~ = F~(sqrt Delta~).

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cmint/numbers.hpp"
#include "cmint/quadfield.hpp"

namespace cmint {

enum class Mode { strict, permissive };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct SpotExponent {
    PrimeSpot spot;
    long exponent = 0;

    bool operator==(const SpotExponent&) const = default;
};

struct CMFieldData {
    Integer D;
    QuadElem delta;  // element of F, totally negative
    QuadElem w;      // w^2 = delta mod 4 O_F
    Integer Dtilde;  // norm(delta)
    QuadElem delta_tilde;  // 2 delta0 + 2 sqrt(Dtilde), element of F~
    std::vector<SpotExponent> rel_diff;  // relative discriminant of K~/F~
    int W_K = 2;
    Mode mode = Mode::strict;
    QuadField F;
    QuadField Ftilde;
    Rational delta0;  // delta = delta0 + delta1 sqrt(D)
    Rational delta1;

    /// "D=5,delta=(-13 + 1*sqrt(5))/2".
    std::string id() const;
};

/// Validates (D, Delta) and builds the reflex data. Throws FieldRejected with
/// the reason when the input is outside the supported family.
CMFieldData build_cm_field(const Integer& D, const QuadElem& delta, Mode mode);

/// Relative discriminant of K~/F~ as spot exponents. Every ramified spot is
/// odd; dyadic ramification throws ConsistencyError.
std::vector<SpotExponent> relative_different(const CMFieldData& field);

/// Behaviour in K~ of a prime spot of F~.
SpotKind classify_in_reflex_cm(const CMFieldData& field, const PrimeSpot& spot);

/// Number of integral ideals of K~ whose relative norm is the ideal with the
/// given valuation vector (which must list every spot of nonzero exponent).
Integer rho(const CMFieldData& field, std::span<const SpotExponent> vals);

/// Memoizing wrapper around classify_in_reflex_cm for repeated queries.
class ReflexSplitting {
public:
    explicit ReflexSplitting(const CMFieldData& field) : field_(&field) {}

    SpotKind operator()(const PrimeSpot& spot) const;

private:
    const CMFieldData* field_;
    mutable std::map<PrimeSpot, SpotKind> cache_;
};

Integer rho(std::span<const SpotExponent> vals, const std::function<SpotKind(const PrimeSpot&)>& classify);

/// Absolute norm of the ideal with the given valuation vector (exponents >= 0).
Integer ideal_norm(std::span<const SpotExponent> vals);

/// Every Delta = (x + y sqrt D)/2 with norm <= max_dtilde that validates in
/// `mode`, one representative per class modulo totally positive units
/// (both conjugates are kept).
std::vector<CMFieldData> enumerate_fields(const Integer& D, const Integer& max_dtilde, Mode mode);

}  // namespace cmint

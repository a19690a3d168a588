#include "cmint/cmfield.hpp"

#include <optional>
#include <set>

#include "cmint/error.hpp"

namespace cmint {

namespace {

Integer mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<SpotExponent> compute_rel_diff(const QuadField& ftilde, const QuadElem& delta_tilde)
{
    std::set<std::uint64_t> primes{2};
    for (auto const& [p, e] : factor(elem_norm(ftilde, delta_tilde).get_num())) {
        primes.insert(p);
    }
    std::vector<SpotExponent> out;
    for (std::uint64_t l : primes) {
        for (auto const& spot : splitting(ftilde, l)) {
            if (local_quadratic_type(ftilde, delta_tilde, spot) != SpotKind::ramified) {
                continue;
            }
            if (l == 2) {
                throw ConsistencyError("K~/F~ is ramified above 2: outside the supported hypotheses");
            }
            out.push_back({spot, 1});
        }
    }
    return out;
}

// The 16 residues a + b*phi, phi = (1 + sqrt D)/2, searched for w.
std::optional<QuadElem> find_w(const QuadField& F, const QuadElem& delta)
{
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            QuadElem const w(2 * a + b, b, 2);
            QuadElem const diff = mul(F, w, w) - delta;
            if (is_integral(F, scale(diff, make_rational(1, 4)))) {
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::strict ? "strict" : "permissive"; }

Mode parse_mode(const std::string& text)
{
    if (text == "strict") {
        return Mode::strict;
    }
    if (text == "permissive") {
        return Mode::permissive;
    }
    throw InputError("unknown mode '" + text + "' (expected strict or permissive)");
}

std::string CMFieldData::id() const { return "D=" + D.get_str() + ",delta=" + delta.str(D); }

CMFieldData build_cm_field(const Integer& D, const QuadElem& delta, Mode mode)
{
    if (!is_prime(D) || mod(D, 4) != 1) {
        throw FieldRejected("bad_D", "D must be a prime = 1 mod 4, got " + D.get_str());
    }
    QuadField F(D);
    if (!is_integral(F, delta)) {
        throw FieldRejected("delta_not_integral", "Delta is not integral in O_F");
    }
    Rational const delta0 = delta.rational_part();
    Rational const delta1 = delta.sqrt_part();
    Rational const norm = elem_norm(F, delta);
    if (!(delta0 < 0 && norm > 0)) {
        throw FieldRejected("not_totally_negative", "Delta is not totally negative");
    }
    Integer const dtilde = norm.get_num();
    if (is_square(dtilde)) {
        throw FieldRejected("dtilde_square", "Dtilde = " + dtilde.get_str() + " is a square (biquadratic or degenerate)");
    }
    if (mod(dtilde, 4) != 1) {
        throw FieldRejected("dtilde_not_1_mod_4", "Dtilde = " + dtilde.get_str() + " is not = 1 mod 4");
    }
    if (!is_squarefree(dtilde)) {
        throw FieldRejected("dtilde_not_squarefree", "Dtilde = " + dtilde.get_str() + " is not squarefree");
    }
    if (mode == Mode::strict && !is_prime(dtilde)) {
        throw FieldRejected("dtilde_not_prime", "strict mode requires Dtilde prime, got " + dtilde.get_str());
    }
    auto const w = find_w(F, delta);
    if (!w) {
        throw FieldRejected("no_free_basis", "O_K not of the assumed free form: no w with w^2 = Delta mod 4");
    }
    QuadField Ftilde(dtilde);
    QuadElem const delta_tilde = QuadElem::from_parts(2 * delta0, 2);
    if (elem_norm(Ftilde, delta_tilde) != 4 * D * delta1 * delta1) {
        throw ConsistencyError("norm(Delta~) != 4 D Delta1^2");
    }
    auto rel_diff = compute_rel_diff(Ftilde, delta_tilde);
    int const W_K = (D == 5 && dtilde == 5) ? 10 : 2;
    return CMFieldData{D,         delta, *w,   dtilde,        delta_tilde,  std::move(rel_diff),
                       W_K,       mode,  F,    Ftilde,        delta0,       delta1};
}

std::vector<SpotExponent> relative_different(const CMFieldData& field)
{
    return compute_rel_diff(field.Ftilde, field.delta_tilde);
}

SpotKind classify_in_reflex_cm(const CMFieldData& field, const PrimeSpot& spot)
{
    return local_quadratic_type(field.Ftilde, field.delta_tilde, spot);
}

SpotKind ReflexSplitting::operator()(const PrimeSpot& spot) const
{
    auto const it = cache_.find(spot);
    if (it != cache_.end()) {
        return it->second;
    }
    SpotKind const kind = classify_in_reflex_cm(*field_, spot);
    cache_.emplace(spot, kind);
    return kind;
}

Integer rho(std::span<const SpotExponent> vals, const std::function<SpotKind(const PrimeSpot&)>& classify)
{
    for (auto const& v : vals) {
        if (v.exponent < 0) {
            return 0;
        }
    }
    Integer count = 1;
    for (auto const& v : vals) {
        if (v.exponent == 0) {
            continue;
        }
        switch (classify(v.spot)) {
        case SpotKind::ramified:
            break;
        case SpotKind::inert:
            if (v.exponent % 2 != 0) {
                return 0;
            }
            break;
        case SpotKind::split:
            count *= v.exponent + 1;
            break;
        }
    }
    return count;
}

Integer rho(const CMFieldData& field, std::span<const SpotExponent> vals)
{
    return rho(vals, [&](const PrimeSpot& s) { return classify_in_reflex_cm(field, s); });
}

Integer ideal_norm(std::span<const SpotExponent> vals)
{
    Integer n = 1;
    for (auto const& v : vals) {
        if (v.exponent < 0) {
            throw InputError("ideal_norm: negative exponent");
        }
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), v.spot.l, static_cast<unsigned long>(residue_degree(v.spot) * v.exponent));
        n *= p;
    }
    return n;
}

std::vector<CMFieldData> enumerate_fields(const Integer& D, const Integer& max_dtilde, Mode mode)
{
    if (!is_prime(D) || mod(D, 4) != 1) {
        throw InputError("enumerate_fields: D must be a prime = 1 mod 4");
    }
    // Fundamental unit (t + u sqrt D)/2 via the smallest u with D u^2 +- 4 square.
    Integer trace;
    for (Integer u = 1;; ++u) {
        if (is_square(D * u * u - 4)) {
            trace = isqrt(D * u * u - 4);
            break;
        }
        if (is_square(D * u * u + 4)) {
            trace = isqrt(D * u * u + 4);
            break;
        }
    }
    // Reducing rho^2 = Delta/Delta' into one period of the totally positive
    // units gives |rho - 1/rho| <= eps - 1/eps <= tr(eps), so
    // D y^2 <= tr(eps)^2 Dtilde.
    Integer const spread = trace;
    std::vector<CMFieldData> out;
    for (Integer dt = 5; dt <= max_dtilde; dt += 4) {
        Integer const ymax = isqrt(spread * spread * dt / D);
        for (Integer y = -ymax; y <= ymax; ++y) {
            if (D * y * y > spread * spread * dt) {
                continue;
            }
            Integer const x2 = 4 * dt + D * y * y;
            if (!is_square(x2)) {
                continue;
            }
            Integer const x = -isqrt(x2);
            try {
                out.push_back(build_cm_field(D, QuadElem(x, y, 2), mode));
            } catch (const FieldRejected&) {
            }
        }
    }
    return out;
}

}  // namespace cmint

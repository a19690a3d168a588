#include "cmint/applications.hpp"

#include <cmath>

#include "cmint/error.hpp"

namespace cmint {

namespace {

void require_strict(const CMFieldData& field, const char* what)
{
    if (field.mode != Mode::strict) {
        throw InputError(std::string(what) + " requires a strict-mode field");
    }
}

LogCombo sum_over(const CMFieldData& field, const std::vector<long>& indices)
{
    LogCombo total;
    for (long k : indices) {
        total += bm_full(field, k);
    }
    return total;
}

Json factored_json(const Factored& f)
{
    Json j = Json::object();
    for (auto const& [p, e] : f) {
        j[std::to_string(p)] = rational_to_json(Rational(e));
    }
    return j;
}

Factored exponential(const LogCombo& s, long scale)
{
    Factored out;
    for (auto const& [p, c] : s) {
        Rational const e = c * scale;
        if (e.get_den() != 1) {
            throw ConsistencyError("non-integral exponent " + to_string(e) + " at p=" + std::to_string(p));
        }
        out[p] = e.get_num();
    }
    return out;
}

}  // namespace

std::vector<long> humbert_indices(const Integer& D, long m)
{
    std::vector<long> out;
    Integer const dm = D * m;
    for (long n = 1; Integer(n) * n < dm; ++n) {
        Integer const r = dm - Integer(n) * n;
        if (r % 4 == 0) {
            out.push_back(to_i64(r / 4));
        }
    }
    return out;
}

LogCombo humbert_intersection(const CMFieldData& field, long m)
{
    if (m < 1) {
        throw InputError("m must be positive");
    }
    if (is_square(field.D * m)) {
        throw InputError("improper intersection: D m = " + Integer(field.D * m).get_str() + " is a square");
    }
    return sum_over(field, humbert_indices(field.D, m)).scaled(make_rational(1, 2));
}

std::vector<long> bad_reduction_indices(const Integer& D)
{
    std::vector<long> out;
    for (long n = 1; Integer(n) * n < D; n += 2) {
        out.push_back(to_i64((D - Integer(n) * n) / 4));
    }
    return out;
}

BadReductionCertificate bad_reduction_primes(const CMFieldData& field)
{
    require_strict(field, "bad_reduction_primes");
    BadReductionCertificate cert;
    cert.field_id = field.id();
    cert.indices = bad_reduction_indices(field.D);
    cert.totals = sum_over(field, cert.indices);
    cert.bound = make_rational(field.D * field.Dtilde, 64);
    for (auto const& [l, c] : cert.totals) {
        if (Rational(l) > cert.bound) {
            throw ConsistencyError("bad prime " + std::to_string(l) + " exceeds bound " + to_string(cert.bound) +
                                   " for " + field.id());
        }
        cert.bad_primes.push_back(l);
    }
    return cert;
}

Json BadReductionCertificate::to_json() const
{
    Json j;
    j["field"] = field_id;
    j["indices"] = indices;
    j["totals"] = totals.to_json();
    j["bad_primes"] = bad_primes;
    j["bound"] = to_string(bound);
    return j;
}

IgusaBounds igusa_denominator_bounds(const CMFieldData& field)
{
    require_strict(field, "igusa_denominator_bounds");
    IgusaBounds out;
    out.S = sum_over(field, bad_reduction_indices(field.D));
    out.A1 = exponential(out.S, 3L * field.W_K);
    out.A2 = exponential(out.S, 2L * field.W_K);
    out.A3 = out.A2;
    return out;
}

Json IgusaBounds::to_json(bool expand_values) const
{
    Json j;
    j["A1"] = factored_json(A1);
    j["A2"] = factored_json(A2);
    j["A3"] = factored_json(A3);
    if (expand_values) {
        j["A1_value"] = expand(A1).get_str();
        j["A2_value"] = expand(A2).get_str();
        j["A3_value"] = expand(A3).get_str();
    }
    return j;
}

Integer expand(const Factored& f, std::size_t max_bits)
{
    double bits = 0;
    for (auto const& [p, e] : f) {
        bits += std::log2(static_cast<double>(p)) * e.get_d();
    }
    if (bits > static_cast<double>(max_bits)) {
        throw ResourceError("expansion would need about " + std::to_string(static_cast<long>(bits)) + " bits");
    }
    Integer out = 1;
    for (auto const& [p, e] : f) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, to_u64(e));
        out *= pe;
    }
    return out;
}

}  // namespace cmint

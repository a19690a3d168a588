#include "cmint/bm.hpp"

#include <algorithm>
#include <string>

#include "cmint/error.hpp"
#include "cmint/localdensity.hpp"
#include "cmint/tmatrix.hpp"

namespace cmint {

namespace {

long rel_exponent(const CMFieldData& field, const PrimeSpot& spot)
{
    for (auto const& r : field.rel_diff) {
        if (r.spot == spot) {
            return r.exponent;
        }
    }
    return 0;
}

long max_abs_n(const CMFieldData& field, long m)
{
    // Dtilde is not a square, so n^2 < m^2 Dtilde iff |n| <= isqrt(m^2 Dtilde).
    return to_i64(isqrt(Integer(m) * m * field.Dtilde));
}

// Small-integer prefilter: (m^2 Dtilde - n^2) * factor divisible by modulus.
bool divisible(long m, long n, std::int64_t dtilde, std::int64_t factor, std::int64_t modulus)
{
    __int128 const v = (static_cast<__int128>(m) * m * dtilde - static_cast<__int128>(n) * n) * factor;
    return v % modulus == 0;
}

QuadElem t_element(const CMFieldData& field, long m, long n)
{
    return QuadElem(Integer(n), Integer(m), 2 * field.D);
}

}  // namespace

bool in_inverse_different(const CMFieldData& field, long m, long n)
{
    Integer const nd = ideal_norm(field.rel_diff);
    std::int64_t const D = to_i64(field.D);
    if (!divisible(m, n, to_i64(field.Dtilde), to_i64(nd), 4 * D * D)) {
        return false;
    }
    QuadElem const t = t_element(field, m, n);
    for (auto const& spot : spots_above(field.Ftilde, Rational(2 * field.D))) {
        if (ord_at(field.Ftilde, t, spot) + rel_exponent(field, spot) < 0) {
            return false;
        }
    }
    return true;
}

DefinitionScan scan_definition(const CMFieldData& field, long m)
{
    if (m < 1) {
        throw InputError("m must be positive");
    }
    DefinitionScan scan;
    ReflexSplitting const classify(field);
    Integer const nd = ideal_norm(field.rel_diff);
    long const nmax = max_abs_n(field, m);
    for (long n = -nmax; n <= nmax; ++n) {
        if (!in_inverse_different(field, m, n)) {
            continue;
        }
        scan.admissible_n.push_back(n);
        QuadElem const t = t_element(field, m, n);
        Rational const td_norm = abs(elem_norm(field.Ftilde, t)) * nd;
        if (td_norm.get_den() != 1) {
            throw ConsistencyError("t d is not integral although t lies in d^-1");
        }
        if (td_norm == 1) {
            continue;
        }
        std::vector<SpotExponent> vals;
        for (auto const& [p, e] : factor(td_norm.get_num())) {
            scan.support.insert(p);
            for (auto const& spot : splitting(field.Ftilde, p)) {
                vals.push_back({spot, ord_at(field.Ftilde, t, spot) + rel_exponent(field, spot)});
            }
        }
        for (std::size_t i = 0; i < vals.size(); ++i) {
            PrimeSpot const& spot = vals[i].spot;
            if (vals[i].exponent < 1 || classify(spot) == SpotKind::split) {
                continue;
            }
            std::vector<SpotExponent> reduced = vals;
            reduced[i].exponent -= 1;
            Integer const r = rho(reduced, std::cref(classify));
            long const ord_t = ord_at(field.Ftilde, t, spot);
            Integer const term = Integer(ord_t + 1) * r * residue_degree(spot);
            if (term == 0) {
                continue;
            }
            scan.totals[spot.l] += term;
            scan.terms[spot.l].push_back({n, spot, ord_t, r, term});
        }
    }
    for (long n : scan.admissible_n) {
        if (n > 0 && Integer(n) % field.D != 0 &&
            std::binary_search(scan.admissible_n.begin(), scan.admissible_n.end(), -n)) {
            scan.flags.push_back("dual_membership:n=" + std::to_string(n));
        }
    }
    return scan;
}

Integer bm_p_definition(const CMFieldData& field, long m, std::uint64_t p)
{
    auto const scan = scan_definition(field, m);
    auto const it = scan.totals.find(p);
    return it == scan.totals.end() ? Integer(0) : it->second;
}

std::optional<Integer> bm_p_product(const CMFieldData& field, long m, std::uint64_t p,
                                    std::vector<ProductTerm>* breakdown)
{
    if (!product_formula_applies(field, m, p)) {
        return std::nullopt;
    }
    std::int64_t const D = to_i64(field.D);
    std::int64_t const dtilde = to_i64(field.Dtilde);
    long const nmax = max_abs_n(field, m);
    Integer total = 0;
    for (long n = 1; n <= nmax; ++n) {
        if (!divisible(m, n, dtilde, 1, 4 * D * static_cast<std::int64_t>(p))) {
            continue;
        }
        Integer const N = index_norm(field, m, n).get_num();
        long const ord_p = ord_int(N, p);
        std::vector<int> const mus = mu_candidates(field, m, n);
        auto const primes = factor(N);
        Integer sum_mu = 0;
        for (int mu : mus) {
            auto const T = t_matrix(field, m, n, mu);
            Integer prod = 1;
            for (auto const& [l, e] : primes) {
                auto const b = b_l_factor(make_local_input(field, *T, p, l));
                prod *= *b;
                if (prod == 0) {
                    break;
                }
            }
            sum_mu += prod;
        }
        Integer const term = Integer(ord_p + 1) * sum_mu;
        total += term;
        if (breakdown != nullptr) {
            breakdown->push_back({n, mus, term});
        }
    }
    return total;
}

std::set<std::uint64_t> candidate_primes(const CMFieldData& field, long m)
{
    std::set<std::uint64_t> out;
    std::int64_t const D = to_i64(field.D);
    std::int64_t const dtilde = to_i64(field.Dtilde);
    long const nmax = max_abs_n(field, m);
    for (long n = 0; n <= nmax; ++n) {
        if (!divisible(m, n, dtilde, 1, 4 * D)) {
            continue;
        }
        Integer const N = index_norm(field, m, n).get_num();
        if (N > 1) {
            for (auto const& [p, e] : factor(N)) {
                out.insert(p);
            }
        }
    }
    return out;
}

LogCombo BmReport::bm() const
{
    LogCombo out;
    for (auto const& e : entries) {
        out.add(e.p, Rational(e.b));
    }
    return out;
}

namespace {

Json integer_json(const Integer& z) { return rational_to_json(Rational(z)); }

}  // namespace

Json BmReport::to_json() const
{
    Json j;
    j["D"] = integer_json(D);
    j["delta"] = {{"x", integer_json(delta.x())}, {"y", integer_json(delta.y())}, {"den", integer_json(delta.den())}};
    j["mode"] = to_string(mode);
    j["m"] = m;
    j["entries"] = Json::array();
    for (auto const& e : entries) {
        Json entry;
        entry["p"] = e.p;
        entry["b"] = integer_json(e.b);
        entry["route_a"] = integer_json(e.route_a);
        entry["route_b"] = e.route_b ? integer_json(*e.route_b) : Json("inapplicable");
        entry["per_n"] = Json::array();
        for (auto const& t : e.per_n) {
            entry["per_n"].push_back({{"n", t.n},
                                      {"spot", t.spot.str()},
                                      {"ord_t", t.ord_t},
                                      {"rho", integer_json(t.rho)},
                                      {"term", integer_json(t.term)}});
        }
        j["entries"].push_back(std::move(entry));
    }
    j["flags"] = flags;
    return j;
}

BmReport bm_report(const CMFieldData& field, long m)
{
    DefinitionScan scan = scan_definition(field, m);
    std::set<std::uint64_t> primes = candidate_primes(field, m);
    primes.insert(scan.support.begin(), scan.support.end());
    for (auto const& [p, v] : scan.totals) {
        primes.insert(p);
    }
    BmReport report{field.D, field.delta, field.mode, m, {}, scan.flags};
    if (field.mode == Mode::permissive) {
        report.flags.push_back("conjectural");
    }
    for (std::uint64_t p : primes) {
        auto const it = scan.totals.find(p);
        Integer const a = it == scan.totals.end() ? Integer(0) : it->second;
        auto const b = bm_p_product(field, m, p);
        if (b && *b != a) {
            throw ConsistencyError("route disagreement for " + field.id() + ", m=" + std::to_string(m) +
                                   ", p=" + std::to_string(p) + ": definition " + a.get_str() + ", product " +
                                   b->get_str());
        }
        if (a != 0) {
            report.entries.push_back({p, a, a, b, scan.terms[p]});
        }
    }
    return report;
}

LogCombo bm_full(const CMFieldData& field, long m) { return bm_report(field, m).bm(); }

LogCombo intersection_number(const CMFieldData& field, long m)
{
    return bm_full(field, m).scaled(make_rational(1, 2));
}

}  // namespace cmint

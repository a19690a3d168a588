#include "cmint/selfcheck.hpp"

#include <filesystem>
#include <functional>
#include <random>

#include "cmint/applications.hpp"
#include "cmint/cache.hpp"
#include "cmint/error.hpp"
#include "cmint/padic.hpp"

namespace cmint {

namespace {

struct SuiteSize {
    std::vector<long> discriminants;
    long max_dtilde;
    long max_m;
    int hilbert_pairs;
    std::uint64_t max_l;
    unsigned max_k;
    int elements;
};

using Check = std::function<std::string()>;  // empty string: pass

CheckResult run_one(const std::string& name, const Check& check)
{
    try {
        std::string const failure = check();
        return {name, failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::vector<CMFieldData> sweep_fields(const SuiteSize& size)
{
    std::vector<CMFieldData> out;
    for (long D : size.discriminants) {
        for (auto& f : enumerate_fields(D, size.max_dtilde, Mode::strict)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

LogCombo combo(std::initializer_list<std::pair<std::uint64_t, long>> terms)
{
    LogCombo out;
    for (auto const& [p, c] : terms) {
        out.add(p, Rational(c));
    }
    return out;
}

std::string worked_instance()
{
    auto const f = build_cm_field(5, QuadElem(-13, 1, 2), Mode::strict);
    if (bm_full(f, 1) != combo({{2, 2}})) {
        return "b_1 != {2: 2}";
    }
    if (intersection_number(f, 1) != combo({{2, 1}})) {
        return "intersection != {2: 1}";
    }
    if (humbert_intersection(f, 1) != combo({{2, 1}})) {
        return "humbert(1) != {2: 1}";
    }
    auto const cert = bad_reduction_primes(f);
    if (cert.bad_primes != std::vector<std::uint64_t>{2} || cert.bound != make_rational(205, 64)) {
        return "bad primes != {2} within 205/64";
    }
    auto const A = igusa_denominator_bounds(f);
    if (A.A1 != Factored{{2, 12}} || A.A2 != Factored{{2, 8}} || A.A3 != Factored{{2, 8}}) {
        return "Igusa bounds != (2^12, 2^8, 2^8)";
    }
    return {};
}

std::string zeta5_instance()
{
    auto const f = build_cm_field(5, QuadElem(-5, -1, 2), Mode::strict);
    if (f.W_K != 10) {
        return "W_K != 10";
    }
    for (long m : {1, 3}) {
        if (!bm_full(f, m).empty()) {
            return "b_" + std::to_string(m) + " not empty";
        }
    }
    if (bm_p_definition(f, 7, 11) != 0 || bm_p_product(f, 7, 11) != Integer(0)) {
        return "b_7(11) != 0";
    }
    return {};
}

std::string route_equality(const std::vector<CMFieldData>& fields, long max_m)
{
    for (auto const& f : fields) {
        for (long m = 1; m <= max_m; ++m) {
            if (!is_squarefree(Integer(m)) || gcd(Integer(m), 2 * f.D * f.Dtilde) != 1) {
                continue;
            }
            bm_report(f, m);  // throws on disagreement
        }
    }
    return {};
}

std::string vanishing_and_support(const std::vector<CMFieldData>& fields, long max_m)
{
    for (auto const& f : fields) {
        for (long m = 1; m <= max_m; ++m) {
            LogCombo const b = bm_full(f, m);
            Integer const top = Integer(m) * m * f.Dtilde;
            if (top <= 4 * f.D && !b.empty()) {
                return "nonempty b_" + std::to_string(m) + " for " + f.id();
            }
            for (auto const& [p, c] : b) {
                if (c < 0 || c.get_den() != 1) {
                    return "coefficient " + to_string(c) + " not a nonnegative integer";
                }
                bool witnessed = false;
                for (Integer n = 0; n * n < top && !witnessed; ++n) {
                    witnessed = (top - n * n) % (4 * f.D * p) == 0;
                }
                if (!witnessed) {
                    return "p=" + std::to_string(p) + " outside the support for " + f.id() + ", m=" + std::to_string(m);
                }
            }
        }
    }
    return {};
}

std::string hilbert_product(int pairs)
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 300);
    for (int i = 0; i < pairs; ++i) {
        long an = num(rng), bn = num(rng);
        if (an == 0 || bn == 0) {
            continue;
        }
        Rational const a = make_rational(an, den(rng));
        Rational const b = make_rational(bn, den(rng));
        int prod = hilbert(a, b, Place::infinity());
        std::set<std::uint64_t> primes{2};
        for (Integer const& z : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
            for (auto const& [p, e] : factor(Integer(abs(z)))) {
                primes.insert(p);
            }
        }
        for (auto p : primes) {
            prod *= hilbert(a, b, Place{p});
        }
        if (prod != 1) {
            return "product formula fails for (" + to_string(a) + ", " + to_string(b) + ")";
        }
    }
    return {};
}

std::string hensel_round_trip(std::uint64_t max_l, unsigned max_k)
{
    for (std::uint64_t l = 2; l <= max_l; ++l) {
        if (!is_prime(l)) {
            continue;
        }
        for (unsigned k = 1; k <= max_k; ++k) {
            Integer modulus;
            mpz_ui_pow_ui(modulus.get_mpz_t(), l, k);
            for (long a = 1; a < 60; ++a) {
                if (a % static_cast<long>(l) == 0) {
                    continue;
                }
                auto const r = hensel_sqrt(Rational(a), l, k);
                if (r && (*r * *r - a) % modulus != 0) {
                    return "hensel_sqrt(" + std::to_string(a) + ", " + std::to_string(l) + ", " + std::to_string(k) +
                           ") is not a root";
                }
                if (r.has_value() != is_square_Ql(Rational(a), l)) {
                    return "hensel_sqrt and is_square_Ql disagree at a=" + std::to_string(a) + ", l=" +
                           std::to_string(l);
                }
            }
        }
    }
    return {};
}

std::string valuation_consistency(const std::vector<CMFieldData>& fields, int elements)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-500, 500);
    std::uniform_int_distribution<long> den(1, 60);
    for (auto const& f : fields) {
        for (int i = 0; i < elements; ++i) {
            QuadElem const e(coord(rng), coord(rng), den(rng));
            if (e.is_zero()) {
                continue;
            }
            Rational const N = elem_norm(f.Ftilde, e);
            for (auto const& [l, unused] : factor(Integer(abs(N.get_num()) * N.get_den()))) {
                long sum = 0;
                for (auto const& spot : splitting(f.Ftilde, l)) {
                    sum += residue_degree(spot) * ord_at(f.Ftilde, e, spot);
                }
                if (Valuation::of(sum) != ord(N, l)) {
                    return "valuation sum mismatch for " + e.str() + " at l=" + std::to_string(l) + " in " + f.id();
                }
            }
        }
    }
    return {};
}

std::string cache_identity(const std::vector<CMFieldData>& fields)
{
    auto const dir = std::filesystem::temp_directory_path() /
                     ("cmint-selfcheck-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
    std::string failure;
    {
        Cache writer(dir);
        for (auto const& f : fields) {
            bm_report_json(f, 3, &writer);
        }
    }
    Cache reader(dir);
    for (auto const& f : fields) {
        if (bm_report_json(f, 3, &reader).dump() != bm_report(f, 3).to_json().dump()) {
            failure = "cache hit differs from recomputation for " + f.id();
            break;
        }
    }
    std::filesystem::remove_all(dir);
    return failure;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const std::string& suite)
{
    SuiteSize size;
    if (suite == "small") {
        size = {{5}, 200, 12, 500, 31, 6, 50};
    } else if (suite == "full") {
        size = {{5, 13, 17}, 500, 30, 10000, 97, 12, 1000};
    } else {
        throw InputError("unknown suite \"" + suite + "\" (expected small or full)");
    }
    std::vector<CMFieldData> const fields = sweep_fields(size);
    std::vector<CMFieldData> const sample(fields.begin(), fields.begin() + std::min<std::size_t>(fields.size(), 8));
    return {
        run_one("worked_instance", worked_instance),
        run_one("zeta5_instance", zeta5_instance),
        run_one("route_equality", [&] { return route_equality(fields, size.max_m); }),
        run_one("vanishing_and_support", [&] { return vanishing_and_support(sample, size.max_m); }),
        run_one("hilbert_product_formula", [&] { return hilbert_product(size.hilbert_pairs); }),
        run_one("hensel_round_trip", [&] { return hensel_round_trip(size.max_l, size.max_k); }),
        run_one("valuation_consistency", [&] { return valuation_consistency(sample, size.elements); }),
        run_one("cache_identity", [&] { return cache_identity(sample); }),
    };
}

Json selfcheck_json(const std::string& suite, const std::vector<CheckResult>& results)
{
    Json j;
    j["suite"] = suite;
    bool all = true;
    j["checks"] = Json::array();
    for (auto const& r : results) {
        all = all && r.passed;
        j["checks"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    j["passed"] = all;
    return j;
}

}  // namespace cmint

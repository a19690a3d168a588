#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmint/bm.hpp"
#include "cmint/error.hpp"
#include "fixtures.hpp"

using namespace cmint;
using fixtures::combo;
using fixtures::d41;
using fixtures::zeta5;

TEST_CASE("zeta5 examples")
{
    auto const f = zeta5();
    CHECK(bm_full(f, 1).empty());
    CHECK(scan_definition(f, 1).admissible_n.empty());
    CHECK(bm_p_definition(f, 1, 2) == 0);
    CHECK(bm_p_definition(f, 7, 11) == 0);
    CHECK(bm_p_product(f, 7, 11) == Integer(0));
    CHECK(bm_full(f, 3).empty());
    CHECK(intersection_number(f, 1).empty());
    for (auto p : candidate_primes(f, 3)) {
        CHECK(bm_p_product(f, 3, p) == Integer(0));
    }
}

TEST_CASE("Dtilde = 41, m = 1")
{
    auto const f = d41();
    auto const scan = scan_definition(f, 1);
    CHECK(scan.admissible_n == std::vector<long>{-1});
    CHECK(bm_p_definition(f, 1, 2) == 2);
    std::vector<ProductTerm> breakdown;
    CHECK(bm_p_product(f, 1, 2, &breakdown) == Integer(2));
    REQUIRE(breakdown.size() == 1);
    CHECK(breakdown[0].n == 1);
    CHECK(breakdown[0].mus == std::vector<int>{1});
    CHECK(bm_full(f, 1) == combo({{2, 2}}));
    CHECK(intersection_number(f, 1) == combo({{2, 1}}));
}

TEST_CASE("report structure and JSON")
{
    auto const f = d41();
    auto const r = bm_report(f, 1);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].p == 2);
    CHECK(r.entries[0].route_b == Integer(2));
    REQUIRE(r.entries[0].per_n.size() == 1);
    CHECK(r.entries[0].per_n[0].n == -1);
    CHECK(r.entries[0].per_n[0].ord_t == 1);
    CHECK(r.entries[0].per_n[0].rho == 1);
    Json const j = r.to_json();
    CHECK(j["D"] == 5);
    CHECK(j["m"] == 1);
    CHECK(j["delta"]["x"] == -13);
    CHECK(j["entries"][0]["p"] == 2);
    CHECK(j["entries"][0]["b"] == 2);
    CHECK(j["flags"].empty());
    auto const r4 = bm_report(build_cm_field(13, QuadElem(-9, 1, 2), Mode::strict), 4);
    REQUIRE(!r4.entries.empty());
    CHECK(r4.to_json()["entries"][0]["route_b"] == "inapplicable");
}

TEST_CASE("per-n terms add up to b_m(p)")
{
    for (auto const& f : fixtures::strict_sweep(200)) {
        for (long m = 1; m <= 10; ++m) {
            for (auto const& e : bm_report(f, m).entries) {
                Integer sum = 0;
                for (auto const& t : e.per_n) {
                    sum += t.term;
                    CHECK(t.term == (t.ord_t + 1) * t.rho * residue_degree(t.spot));
                    CHECK(t.spot.l == e.p);
                }
                CHECK(sum == e.b);
                CHECK(e.b > 0);
            }
        }
    }
}

TEST_CASE("route equality where the product formula applies")
{
    int nonzero = 0;
    for (auto const& f : fixtures::strict_sweep(300)) {
        for (long m = 1; m <= 15; ++m) {
            auto const scan = scan_definition(f, m);
            std::set<std::uint64_t> primes = candidate_primes(f, m);
            primes.insert(scan.support.begin(), scan.support.end());
            for (auto p : primes) {
                auto const b = bm_p_product(f, m, p);
                if (!b) {
                    CHECK_FALSE(product_formula_applies(f, m, p));
                    continue;
                }
                auto const it = scan.totals.find(p);
                Integer const a = it == scan.totals.end() ? Integer(0) : it->second;
                INFO(f.id(), " m=", m, " p=", p);
                CHECK(a == *b);
                nonzero += a != 0 ? 1 : 0;
            }
        }
    }
    CHECK(nonzero > 100);
}

TEST_CASE("route equality in the split-completely local case")
{
    int checked = 0;
    for (auto const& f : fixtures::strict_sweep(500)) {
        auto const c = fixtures::split_complete_case(f);
        if (!c || !product_formula_applies(f, c->m, c->p)) {
            continue;
        }
        INFO(f.id(), " m=", c->m);
        auto const scan = scan_definition(f, c->m);
        auto const it = scan.totals.find(c->p);
        Integer const a = it == scan.totals.end() ? Integer(0) : it->second;
        CHECK(bm_p_product(f, c->m, c->p) == a);
        ++checked;
    }
    CHECK(checked > 5);
}

TEST_CASE("vanishing and support laws")
{
    for (Mode mode : {Mode::strict, Mode::permissive}) {
        for (long D : {5, 13, 17, 29, 37, 41, 53}) {
            for (auto const& f : enumerate_fields(D, 4 * D, mode)) {
                for (long m = 1; Integer(m) * m * f.Dtilde <= 4 * f.D; ++m) {
                    CHECK(bm_full(f, m).empty());
                }
            }
        }
    }
    for (auto const& f : fixtures::strict_sweep(200)) {
        for (long m = 1; m <= 12; ++m) {
            Integer const top = Integer(m) * m * f.Dtilde;
            for (auto const& [p, c] : bm_full(f, m)) {
                CHECK(c.get_den() == 1);
                CHECK(c > 0);
                bool witnessed = false;
                for (Integer n = 0; n * n < top && !witnessed; ++n) {
                    witnessed = (top - n * n) % (4 * f.D * p) == 0;
                }
                CHECK(witnessed);
            }
        }
    }
}

TEST_CASE("membership is the inverse-different test")
{
    auto const f = d41();
    CHECK(in_inverse_different(f, 1, -1));
    CHECK_FALSE(in_inverse_different(f, 1, 1));
    CHECK_FALSE(in_inverse_different(f, 1, 2));
    auto const z = zeta5();
    // D | n: t = (5 + 3 sqrt 5)/10 = sqrt5 (sqrt5 + 3)/10 lies in d^-1 for both signs
    CHECK(in_inverse_different(z, 3, 5));
    CHECK(in_inverse_different(z, 3, -5));
}

TEST_CASE("dual membership only when D divides n")
{
    for (auto const& f : fixtures::strict_sweep(300)) {
        for (long m = 1; m <= 12; ++m) {
            auto const scan = scan_definition(f, m);
            CHECK(scan.flags.empty());
            for (long n : scan.admissible_n) {
                if (n > 0 && std::binary_search(scan.admissible_n.begin(), scan.admissible_n.end(), -n)) {
                    CHECK(Integer(n) % f.D == 0);
                }
            }
        }
    }
}

TEST_CASE("permissive reports are flagged conjectural")
{
    auto const fields = enumerate_fields(5, 400, Mode::permissive);
    bool composite = false;
    for (auto const& f : fields) {
        if (is_prime(f.Dtilde)) {
            continue;
        }
        composite = true;
        auto const r = bm_report(f, 3);
        CHECK(std::find(r.flags.begin(), r.flags.end(), "conjectural") != r.flags.end());
    }
    CHECK(composite);
    auto const r = bm_report(d41(), 1);
    CHECK(std::find(r.flags.begin(), r.flags.end(), "conjectural") == r.flags.end());
}

TEST_CASE("m must be positive")
{
    CHECK_THROWS_AS(scan_definition(d41(), 0), InputError);
}

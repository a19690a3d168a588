#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmint/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cmint;
using fixtures::d41;
using fixtures::zeta5;

namespace {

std::string rejection(const Integer& D, const QuadElem& delta, Mode mode = Mode::strict)
{
    try {
        build_cm_field(D, delta, mode);
    } catch (const FieldRejected& e) {
        return e.code();
    }
    return "accepted";
}

bool w_valid(const CMFieldData& f)
{
    QuadElem const diff = mul(f.F, f.w, f.w) - f.delta;
    return is_integral(f.F, scale(diff, make_rational(1, 4)));
}

}  // namespace

TEST_CASE("zeta5 field")
{
    auto const f = zeta5();
    CHECK(f.Dtilde == 5);
    CHECK(f.W_K == 10);
    CHECK(w_valid(f));
    CMFieldData g = f;
    g.w = QuadElem(-1, 1, 2);
    CHECK(w_valid(g));
    REQUIRE(f.rel_diff.size() == 1);
    CHECK(f.rel_diff[0].spot.l == 5);
    CHECK(f.rel_diff[0].spot.kind == SpotKind::ramified);
    CHECK(f.rel_diff[0].exponent == 1);
}

TEST_CASE("Dtilde = 41 field")
{
    auto const f = d41();
    CHECK(f.Dtilde == 41);
    CHECK(f.W_K == 2);
    CHECK(w_valid(f));
    CMFieldData g = f;
    g.w = QuadElem(1, 1, 2);
    CHECK(w_valid(g));
    REQUIRE(f.rel_diff.size() == 1);
    PrimeSpot const s = f.rel_diff[0].spot;
    CHECK(s.l == 5);
    CHECK(s.kind == SpotKind::split);
    CHECK(f.rel_diff[0].exponent == 1);
    // Delta~ = -13 + 2 sqrt 41 vanishes at the spot: -13 + 2 r = 0 mod 5, r = -1.
    CHECK(spot_root(f.Ftilde, s, 1) == 4);
}

TEST_CASE("rejections carry a reason")
{
    CHECK(rejection(5, QuadElem(-7, 1, 2)) == "dtilde_not_1_mod_4");
    CHECK(rejection(7, QuadElem(-7, 1, 2)) == "bad_D");
    CHECK(rejection(5, QuadElem(13, 1, 2)) == "not_totally_negative");
    CHECK(rejection(5, QuadElem(-1, 1, 3)) == "delta_not_integral");
    CHECK(rejection(5, QuadElem(-3, 0)) == "dtilde_square");
    // (-15 + sqrt 5)/2 has norm 55 = 5 * 11, which is 3 mod 4
    CHECK(rejection(5, QuadElem(-15, 1, 2)) == "dtilde_not_1_mod_4");
    // -7 - 2 sqrt 5 has norm 29, prime, but (w^2 - Delta)/4 is never integral
    CHECK(rejection(5, QuadElem(-7, -2)) == "no_free_basis");
    // (-19 + sqrt 5)/2 has prime norm 89 but is 2 + phi mod 4, not a square there
    CHECK(rejection(5, QuadElem(-19, 1, 2)) == "no_free_basis");
    CHECK(rejection(5, QuadElem(-13, 1, 2)) == "accepted");
}

TEST_CASE("strict and permissive modes")
{
    bool found = false;
    for (long x = 7; x < 200 && !found; x += 2) {
        QuadElem const delta(-x, 1, 2);
        Integer const N = (Integer(x) * x - 5) / 4;
        if (is_prime(N) || !is_squarefree(N) || N % 4 != 1) {
            continue;
        }
        if (rejection(5, delta, Mode::permissive) != "accepted") {
            continue;
        }
        found = true;
        CHECK(rejection(5, delta, Mode::strict) == "dtilde_not_prime");
    }
    CHECK(found);
    CHECK(parse_mode("permissive") == Mode::permissive);
    CHECK_THROWS_AS(parse_mode("lenient"), InputError);
}

TEST_CASE("field invariants over the sweep")
{
    for (Mode mode : {Mode::strict, Mode::permissive}) {
        for (long D : {5, 13, 17, 29}) {
            for (auto const& f : enumerate_fields(D, 800, mode)) {
                INFO(f.id());
                CHECK(f.Dtilde == elem_norm(f.F, f.delta));
                CHECK(f.delta0 < 0);
                CHECK(elem_norm(f.F, f.delta) > 0);
                CHECK(w_valid(f));
                CHECK(elem_norm(f.Ftilde, f.delta_tilde) == 4 * f.D * f.delta1 * f.delta1);
                CHECK((f.W_K == 10) == (f.D == 5 && f.Dtilde == 5));
                CHECK(ideal_norm(f.rel_diff) == f.D);
                for (auto const& r : f.rel_diff) {
                    CHECK(r.spot.l % 2 == 1);
                }
            }
        }
    }
}

TEST_CASE("reflex classification examples")
{
    auto const f = d41();
    for (auto const& s : splitting(f.Ftilde, 2)) {
        Integer const r = spot_root(f.Ftilde, s, 5);
        if (r == 13) {
            CHECK(classify_in_reflex_cm(f, s) == SpotKind::inert);
        } else {
            CHECK(classify_in_reflex_cm(f, s) == SpotKind::split);
        }
    }
    auto const z = zeta5();
    for (auto const& s : splitting(z.Ftilde, 11)) {
        CHECK(classify_in_reflex_cm(z, s) == SpotKind::split);
    }
}

TEST_CASE("ramified classification matches the relative discriminant")
{
    for (auto const& f : fixtures::strict_sweep(400)) {
        for (std::uint64_t l = 2; l < 120; ++l) {
            if (!is_prime(l)) {
                continue;
            }
            for (auto const& s : splitting(f.Ftilde, l)) {
                bool const in_diff = std::any_of(f.rel_diff.begin(), f.rel_diff.end(),
                                                 [&](const SpotExponent& e) { return e.spot == s; });
                CHECK((classify_in_reflex_cm(f, s) == SpotKind::ramified) == in_diff);
            }
        }
    }
}

TEST_CASE("split classification agrees with roots of the reflex polynomial")
{
    for (auto const& f : fixtures::strict_sweep(400)) {
        for (std::uint64_t l = 3; l < 150; l += 2) {
            if (!is_prime(l) || kronecker(f.Dtilde, l) != 1 ||
                !oracle::reflex_poly_separable_mod(f.delta0, f.Dtilde, l)) {
                continue;
            }
            int split_spots = 0;
            for (auto const& s : splitting(f.Ftilde, l)) {
                split_spots += classify_in_reflex_cm(f, s) == SpotKind::split ? 1 : 0;
            }
            INFO(f.id(), " l=", l);
            CHECK(2 * split_spots == oracle::reflex_root_count(f.delta0, f.Dtilde, l));
        }
    }
}

TEST_CASE("classification depends only on the square class of Delta~")
{
    auto const f = d41();
    for (long x = -3; x <= 3; ++x) {
        for (long y = -3; y <= 3; ++y) {
            QuadElem const s(x, y);
            if (s.is_zero()) {
                continue;
            }
            QuadElem const twisted = mul(f.Ftilde, f.delta_tilde, mul(f.Ftilde, s, s));
            for (std::uint64_t l : {2, 3, 5, 7, 11, 41}) {
                for (auto const& spot : splitting(f.Ftilde, l)) {
                    if (ord_at(f.Ftilde, s, spot) != 0) {
                        continue;
                    }
                    CHECK(local_quadratic_type(f.Ftilde, twisted, spot) == classify_in_reflex_cm(f, spot));
                }
            }
        }
    }
}

TEST_CASE("rho examples and properties")
{
    auto const f = d41();
    auto const spots2 = splitting(f.Ftilde, 2);
    PrimeSpot inert_spot, split_spot;
    for (auto const& s : spots2) {
        (classify_in_reflex_cm(f, s) == SpotKind::inert ? inert_spot : split_spot) = s;
    }
    PrimeSpot const ram = f.rel_diff[0].spot;
    CHECK(rho(f, std::vector<SpotExponent>{}) == 1);
    CHECK(rho(f, std::vector<SpotExponent>{{inert_spot, 1}}) == 0);
    CHECK(rho(f, std::vector<SpotExponent>{{inert_spot, 2}}) == 1);
    CHECK(rho(f, std::vector<SpotExponent>{{split_spot, 3}}) == 4);
    CHECK(rho(f, std::vector<SpotExponent>{{ram, 5}}) == 1);
    CHECK(rho(f, std::vector<SpotExponent>{{split_spot, -1}}) == 0);
    CHECK(rho(f, std::vector<SpotExponent>{{split_spot, 2}, {ram, 1}}) ==
          rho(f, std::vector<SpotExponent>{{split_spot, 2}}) * rho(f, std::vector<SpotExponent>{{ram, 1}}));
    CHECK(rho(f, std::vector<SpotExponent>{{split_spot, 2}, {inert_spot, 3}}) == 0);
}

TEST_CASE("enumeration keeps both conjugates and unit-reduced representatives")
{
    auto const fields = enumerate_fields(5, 500, Mode::strict);
    CHECK(!fields.empty());
    for (auto const& f : fields) {
        bool conj_found = std::any_of(fields.begin(), fields.end(),
                                      [&](const CMFieldData& g) { return g.delta == f.delta.conj(); });
        CHECK(conj_found);
    }
    bool has_d41 = std::any_of(fields.begin(), fields.end(),
                               [](const CMFieldData& g) { return g.delta == QuadElem(-13, 1, 2); });
    CHECK(has_d41);
}

#include "cmint/localdensity.hpp"

#include <numeric>
#include <string>

#include "cmint/error.hpp"
#include "cmint/padic.hpp"

namespace cmint {

namespace {

Integer lz(std::uint64_t l) { return Integer(static_cast<unsigned long>(l)); }

long ord_l_index(const TMatrix& T, std::uint64_t l)
{
    Rational const det_quarter = T.det() / 4;
    return ord(det_quarter, l).value;
}

// Both spots of a split l in F~ split in K~.
bool splits_completely_in_reflex(const CMFieldData& field, std::uint64_t l)
{
    if (kronecker(field.Dtilde, lz(l)) != 1) {
        return false;
    }
    for (auto const& spot : splitting(field.Ftilde, l)) {
        if (classify_in_reflex_cm(field, spot) != SpotKind::split) {
            return false;
        }
    }
    return true;
}

// l inert in F~ and l O_F~ splits in K~.
bool inert_then_split(const CMFieldData& field, std::uint64_t l)
{
    if (kronecker(field.Dtilde, lz(l)) != -1) {
        return false;
    }
    return classify_in_reflex_cm(field, splitting(field.Ftilde, l).front()) == SpotKind::split;
}

TMatrix rescaled(const CMFieldData& field, const TMatrix& T, std::uint64_t l)
{
    long const ll = static_cast<long>(l);
    if (T.m % ll != 0 || T.n % ll != 0) {
        throw ConsistencyError("rescaling T by a prime not dividing m and n");
    }
    auto const Tl = t_matrix(field, T.m / ll, T.n / ll, T.mu);
    if (!Tl) {
        throw ConsistencyError("T_{m/l}(mu n/l) does not exist for m=" + std::to_string(T.m) +
                               ", n=" + std::to_string(T.n) + ", l=" + std::to_string(l));
    }
    return *Tl;
}

Integer symbol_power(int h, long t) { return (h == -1 && (t % 2 != 0)) ? -1 : 1; }

}  // namespace

LocalFactorInput make_local_input(const CMFieldData& field, const TMatrix& T, std::uint64_t p, std::uint64_t l)
{
    return LocalFactorInput{&field, T, p, l, ord_l_index(T, l)};
}

Integer alpha_l(const Rational& a, const Rational& b, const Rational& c, std::uint64_t l)
{
    Integer const modulus = l == 2 ? Integer(8) : lz(l);
    long const box = static_cast<long>(std::min<std::uint64_t>(l == 2 ? 8 : l, 8));
    for (long y = 0; y < box; ++y) {
        for (long x = 0; x < box; ++x) {
            if (x % static_cast<long>(l) == 0 && y % static_cast<long>(l) == 0) {
                continue;
            }
            Rational const v = a * x * x + 2 * b * x * y + c * y * y;
            if (ord(v, l).infinite) {
                continue;
            }
            long const o = ord(v, l).value;
            if (o < 0) {
                throw InputError("alpha_l: form is not l-integral");
            }
            if (o == 0) {
                return residue(v, modulus);
            }
        }
    }
    throw ConsistencyError("alpha_l: form represents no l-adic unit at l=" + std::to_string(l));
}

Integer alpha_l(const TMatrix& T, std::uint64_t l) { return alpha_l(T.a, T.b, T.c, l); }

int alpha_symbol(const Integer& alpha, std::uint64_t l)
{
    return hilbert(Rational(-alpha), Rational(lz(l)), Place::at(l));
}

bool product_formula_applies(const CMFieldData& field, long m, std::uint64_t p)
{
    if (m < 1 || !is_squarefree(Integer(m))) {
        return false;
    }
    Integer g;
    Integer const modulus = 2 * field.D * field.Dtilde * lz(p);
    Integer const mz(m);
    mpz_gcd(g.get_mpz_t(), mz.get_mpz_t(), modulus.get_mpz_t());
    return g == 1;
}

bool splits_completely_in_closure(const CMFieldData& field, std::uint64_t l)
{
    return kronecker(field.D, lz(l)) == 1 && splits_completely_in_reflex(field, l);
}

std::optional<Integer> b_l_factor(const LocalFactorInput& in)
{
    CMFieldData const& field = *in.field;
    TMatrix const& T = in.T;
    std::uint64_t const l = in.l;
    if (!product_formula_applies(field, T.m, in.p)) {
        return std::nullopt;
    }
    Rational const N = index_norm(field, T.m, T.n);
    if (N.get_den() != 1 || ord(N, l).value < 1) {
        throw InputError("b_l_factor requires l | (m^2 Dtilde - n^2)/(4D)");
    }
    long const t = in.t_l;
    if (T.m % static_cast<long>(l) != 0) {
        int const h = alpha_symbol(alpha_l(T, l), l);
        if (l == in.p) {
            return (1 - symbol_power(h, t)) / 2;
        }
        if (h == 1) {
            return Integer(t + 1);
        }
        return Integer(t % 2 == 0 ? 1 : 0);
    }
    if (t == 0) {
        if (splits_completely_in_closure(field, l)) {
            return Integer(4);
        }
        return Integer(inert_then_split(field, l) ? 2 : 0);
    }
    int const h = alpha_symbol(alpha_l(rescaled(field, T, l), l), l);
    if (kronecker(field.D, lz(l)) == 1) {
        return h == -1 ? Integer(0) : Integer(2 * (t + 2));
    }
    return h == -1 ? Integer(t % 2 != 0 ? 2 : 0) : Integer(0);
}

Integer beta_l_factor(const CMFieldData& field, const TMatrix& T, std::uint64_t q, std::uint64_t p,
                      std::uint64_t l)
{
    if (T.m != static_cast<long>(q) || q == 2 || !is_prime(q) || kronecker(field.D, lz(q)) != 1) {
        throw InputError("beta_l_factor requires T = T_q with q an odd prime split in F");
    }
    if (p == q) {
        throw InputError("beta_l_factor requires p != q");
    }
    long const t = ord_l_index(T, l);
    if (l != q) {
        int const h = alpha_symbol(alpha_l(T, l), l);
        if (l == p) {
            return 1 - symbol_power(h, t);
        }
        if (h == -1) {
            return Integer(t % 2 == 0 ? 1 : 0);
        }
        return Integer(t + 1);
    }
    if (T.n % static_cast<long>(q) != 0) {
        return 1;
    }
    if (t == 0) {
        if (splits_completely_in_reflex(field, q)) {
            return 4;
        }
        return inert_then_split(field, q) ? 2 : 0;
    }
    int const h = alpha_symbol(alpha_l(rescaled(field, T, q), q), q);
    return h == -1 ? Integer(0) : Integer(2 * (t + 2));
}

}  // namespace cmint

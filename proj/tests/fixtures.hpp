#pragma once

#include <optional>
#include <vector>

#include "cmint/cmfield.hpp"
#include "cmint/localdensity.hpp"
#include "cmint/tmatrix.hpp"

namespace fixtures {

using namespace cmint;

inline CMFieldData zeta5() { return build_cm_field(5, QuadElem(-5, -1, 2), Mode::strict); }

inline CMFieldData d41() { return build_cm_field(5, QuadElem(-13, 1, 2), Mode::strict); }

/// Strict-mode fields for D in {5, 13, 17} with Dtilde <= max_dtilde.
inline std::vector<CMFieldData> strict_sweep(long max_dtilde)
{
    std::vector<CMFieldData> out;
    for (long D : {5, 13, 17}) {
        for (auto& f : enumerate_fields(D, max_dtilde, Mode::strict)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

inline LogCombo combo(std::initializer_list<std::pair<std::uint64_t, long>> terms)
{
    LogCombo out;
    for (auto const& [p, c] : terms) {
        out.add(p, Rational(c));
    }
    return out;
}

struct SplitCompleteCase {
    long m;
    long n;
    std::uint64_t l;
    std::uint64_t p;
};

/// (m, n) = (l m1, l n1) with l split completely in the Galois closure and
/// l prime to (m1^2 Dtilde - n1^2)/(4D), so t_l = 0 at l | m. p is a prime
/// dividing that quotient; l is the smallest suitable prime.
inline std::optional<SplitCompleteCase> split_complete_case(const CMFieldData& f)
{
    for (std::uint64_t l = 3; l < 400; l += 2) {
        if (!is_prime(l) || gcd(Integer(l), f.D * f.Dtilde) != 1 || !splits_completely_in_closure(f, l)) {
            continue;
        }
        long const m1 = 1;
        for (long n1 = 1; Integer(n1) * n1 < f.Dtilde; ++n1) {
            Rational const N1 = index_norm(f, m1, n1);
            if (N1.get_den() != 1 || N1 == 1 || N1.get_num() % l == 0) {
                continue;
            }
            std::uint64_t const p = factor(N1.get_num()).begin()->first;
            return SplitCompleteCase{static_cast<long>(l) * m1, static_cast<long>(l) * n1, l, p};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace fixtures

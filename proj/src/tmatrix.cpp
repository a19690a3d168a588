#include "cmint/tmatrix.hpp"

#include <string>

#include "cmint/error.hpp"

namespace cmint {

namespace {

void require_range(const CMFieldData& field, long m, long n)
{
    if (m < 1 || n < 1 || Integer(n) * n >= Integer(m) * m * field.Dtilde) {
        throw InputError("T-matrix requires 0 < n < m sqrt(Dtilde); got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n));
    }
}

bool is_int(const Rational& q) { return q.get_den() == 1; }

}  // namespace

Rational index_norm(const CMFieldData& field, long m, long n)
{
    return make_rational(Integer(m) * m * field.Dtilde - Integer(n) * n, 4 * field.D);
}

std::optional<TMatrix> t_matrix(const CMFieldData& field, long m, long n, int mu)
{
    require_range(field, m, n);
    if (mu != 1 && mu != -1) {
        throw InputError("mu must be +1 or -1");
    }
    Rational const D(field.D);
    Rational const n1 = make_rational(mu * Integer(n), m);  // mu n / m
    Rational const c = (2 * n1 - 2 * field.delta0) / D;
    Rational const b = (-2 * field.delta1 - D * c) / 2;
    Rational const a = -n1 - D * b - (D * D - D) / 4 * c;
    TMatrix T{a, b, c, m, n, mu};

    if (!is_int(Rational(m * a)) || !is_int(Rational(m * b)) || !is_int(Rational(m * c))) {
        return std::nullopt;
    }
    if (!(a > 0 && T.det() > 0)) {
        return std::nullopt;
    }
    Rational const expected_det =
        make_rational(Integer(m) * m * field.Dtilde - Integer(n) * n, field.D * m * m);
    if (T.det() != expected_det) {
        return std::nullopt;
    }
    if (!is_int(Rational(2 * n1 - D * c)) || !is_int(Rational(2 * b + D * c))) {
        return std::nullopt;
    }
    return T;
}

std::vector<int> mu_candidates(const CMFieldData& field, long m, long n)
{
    require_range(field, m, n);
    Integer const num = Integer(m) * m * field.Dtilde - Integer(n) * n;
    if (num % field.D != 0) {
        throw InputError("mu_candidates requires D | m^2 Dtilde - n^2");
    }
    std::vector<int> admissible;
    for (int mu : {1, -1}) {
        if (t_matrix(field, m, n, mu)) {
            admissible.push_back(mu);
        }
    }
    bool const d_divides_n = Integer(n) % field.D == 0;
    if (d_divides_n ? admissible.size() != 2 : admissible.size() != 1) {
        throw ConsistencyError("sign count " + std::to_string(admissible.size()) + " for m=" + std::to_string(m) +
                               ", n=" + std::to_string(n) + " contradicts the T-matrix lemma (" + field.id() +
                               ")");
    }
    return admissible;
}

}  // namespace cmint

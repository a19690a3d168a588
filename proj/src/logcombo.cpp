#include "cmint/logcombo.hpp"

#include <string>

#include "cmint/error.hpp"

namespace cmint {

LogCombo LogCombo::single(std::uint64_t p, const Rational& c)
{
    LogCombo out;
    out.add(p, c);
    return out;
}

void LogCombo::add(std::uint64_t p, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LogCombo& LogCombo::operator+=(const LogCombo& other)
{
    for (auto const& [p, c] : other.terms_) {
        add(p, c);
    }
    return *this;
}

LogCombo LogCombo::scaled(const Rational& factor) const
{
    LogCombo out;
    for (auto const& [p, c] : terms_) {
        out.add(p, c * factor);
    }
    return out;
}

Rational LogCombo::coefficient(std::uint64_t p) const
{
    auto const it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LogCombo::all_integral() const
{
    for (auto const& [p, c] : terms_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

Json rational_to_json(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(Integer(std::to_string(j.get<long long>())));
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw InputError("expected an exact rational, got " + j.dump());
}

Json LogCombo::to_json() const
{
    auto j = Json::object();
    for (auto const& [p, c] : terms_) {
        j[std::to_string(p)] = rational_to_json(c);
    }
    return j;
}

LogCombo LogCombo::from_json(const Json& j)
{
    LogCombo out;
    for (auto const& [key, value] : j.items()) {
        out.add(std::stoull(key), rational_from_json(value));
    }
    return out;
}

}  // namespace cmint

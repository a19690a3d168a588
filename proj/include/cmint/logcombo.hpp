#pragma once

#include <cstdint>
#include <map>

#include <json.hpp>

#include "cmint/numbers.hpp"

namespace cmint {

using Json = nlohmann::ordered_json;

/// Exact sum  sum_p c_p log p  stored as prime -> rational coefficient.
/// Zero coefficients are never stored.
class LogCombo {
public:
    LogCombo() = default;

    static LogCombo single(std::uint64_t p, const Rational& c);

    void add(std::uint64_t p, const Rational& c);
    LogCombo& operator+=(const LogCombo& other);
    LogCombo scaled(const Rational& factor) const;

    Rational coefficient(std::uint64_t p) const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool all_integral() const;

    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LogCombo& other) const { return terms_ == other.terms_; }

    /// {"2": 2, "3": "1/2"}: integers as JSON numbers, fractions as strings.
    Json to_json() const;
    static LogCombo from_json(const Json& j);

private:
    std::map<std::uint64_t, Rational> terms_;
};

/// Exact JSON encoding of a rational: number when integral, "n/d" otherwise.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

}  // namespace cmint

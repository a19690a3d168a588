#include "cmint/io.hpp"

#include <fstream>
#include <sstream>

#include "cmint/error.hpp"

namespace cmint {

namespace {

Integer json_integer(const Json& j, const char* key)
{
    if (!j.contains(key)) {
        throw FieldRejected("malformed_field", std::string("missing key \"") + key + "\"");
    }
    Json const& v = j.at(key);
    if (v.is_number_integer()) {
        return Integer(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        Integer z;
        if (z.set_str(v.get<std::string>(), 10) == 0) {
            return z;
        }
    }
    throw FieldRejected("malformed_field", std::string("\"") + key + "\" is not an integer");
}

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string out;
    for (auto const& s : items) {
        if (!out.empty()) {
            out += sep;
        }
        out += s;
    }
    return out;
}

}  // namespace

CMFieldData parse_field(const Json& j, std::optional<Mode> mode_override)
{
    if (!j.is_object()) {
        throw FieldRejected("malformed_field", "field description must be a JSON object");
    }
    Integer const D = json_integer(j, "D");
    if (!j.contains("delta") || !j.at("delta").is_object()) {
        throw FieldRejected("malformed_field", "missing object \"delta\"");
    }
    Json const& d = j.at("delta");
    Integer const x = json_integer(d, "x");
    Integer const y = json_integer(d, "y");
    Integer const den = json_integer(d, "den");
    if (den != 1 && den != 2) {
        throw FieldRejected("bad_den", "delta.den must be 1 or 2");
    }
    Mode mode = Mode::strict;
    if (mode_override) {
        mode = *mode_override;
    } else if (j.contains("mode")) {
        if (!j.at("mode").is_string()) {
            throw FieldRejected("malformed_field", "\"mode\" must be a string");
        }
        try {
            mode = parse_mode(j.at("mode").get<std::string>());
        } catch (const InputError& e) {
            throw FieldRejected("malformed_field", e.what());
        }
    }
    if (D <= 1) {
        throw FieldRejected("bad_D", "D must be a prime = 1 mod 4, got " + D.get_str());
    }
    // QuadElem reduces by gcd; integrality is judged on the reduced form.
    return build_cm_field(D, QuadElem(x, y, den), mode);
}

CMFieldData load_field(const std::string& path, std::optional<Mode> mode_override)
{
    std::ifstream in(path);
    if (!in) {
        throw FieldRejected("unreadable_file", "cannot open " + path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FieldRejected("malformed_json", e.what());
    }
    return parse_field(j, mode_override);
}

Json field_to_json(const CMFieldData& field)
{
    Json j;
    j["D"] = rational_to_json(Rational(field.D));
    j["delta"] = {{"x", rational_to_json(Rational(field.delta.x()))},
                  {"y", rational_to_json(Rational(field.delta.y()))},
                  {"den", rational_to_json(Rational(field.delta.den()))}};
    j["mode"] = to_string(field.mode);
    return j;
}

std::string csv_cell(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string bm_reports_csv(const std::vector<BmReport>& reports)
{
    std::ostringstream out;
    out << "D,delta_x,delta_y,delta_den,mode,m,flags,p,b,route_a,route_b,n,spot,ord_t,rho,term\n";
    for (auto const& r : reports) {
        std::string const head = r.D.get_str() + "," + r.delta.x().get_str() + "," + r.delta.y().get_str() + "," +
                                 r.delta.den().get_str() + "," + to_string(r.mode) + "," + std::to_string(r.m) +
                                 "," + csv_cell(join(r.flags, ';'));
        if (r.entries.empty()) {
            out << head << ",,,,,,,,,\n";
        }
        for (auto const& e : r.entries) {
            std::string const entry = head + "," + std::to_string(e.p) + "," + e.b.get_str() + "," +
                                      e.route_a.get_str() + "," +
                                      (e.route_b ? e.route_b->get_str() : std::string("inapplicable"));
            for (auto const& t : e.per_n) {
                out << entry << "," << t.n << "," << csv_cell(t.spot.str()) << "," << t.ord_t << ","
                    << t.rho.get_str() << "," << t.term.get_str() << "\n";
            }
        }
    }
    return out.str();
}

std::string log_combos_csv(const std::vector<std::pair<long, LogCombo>>& rows)
{
    std::ostringstream out;
    out << "m,p,coefficient\n";
    for (auto const& [m, combo] : rows) {
        if (combo.empty()) {
            out << m << ",,\n";
        }
        for (auto const& [p, c] : combo) {
            out << m << "," << p << "," << to_string(c) << "\n";
        }
    }
    return out.str();
}

std::string certificate_csv(const BadReductionCertificate& cert)
{
    std::ostringstream out;
    out << "p,total,bound\n";
    if (cert.bad_primes.empty()) {
        out << ",," << to_string(cert.bound) << "\n";
    }
    for (auto p : cert.bad_primes) {
        out << p << "," << to_string(cert.totals.coefficient(p)) << "," << to_string(cert.bound) << "\n";
    }
    return out.str();
}

std::string igusa_csv(const IgusaBounds& bounds)
{
    std::ostringstream out;
    out << "A,p,exponent\n";
    auto emit = [&out](const char* name, const Factored& f) {
        if (f.empty()) {
            out << name << ",,\n";
        }
        for (auto const& [p, e] : f) {
            out << name << "," << p << "," << e.get_str() << "\n";
        }
    };
    emit("A1", bounds.A1);
    emit("A2", bounds.A2);
    emit("A3", bounds.A3);
    return out.str();
}

}  // namespace cmint

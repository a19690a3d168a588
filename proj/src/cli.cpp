#include "cmint/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <set>

#include "cmint/applications.hpp"
#include "cmint/cache.hpp"
#include "cmint/error.hpp"
#include "cmint/io.hpp"
#include "cmint/selfcheck.hpp"

namespace cmint {

namespace {

constexpr int exit_usage = 1;
constexpr int exit_invalid_field = 2;
constexpr int exit_consistency = 3;

struct Options {
    std::string field_path;
    std::string m_range = "1";
    std::string mode;
    std::string format = "json";
    std::string suite = "small";
    bool no_cache = false;
    bool expand = false;
};

long parse_positive(const std::string& text)
{
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw InputError("not an integer: \"" + text + "\"");
    }
    if (used != text.size() || value < 1) {
        throw InputError("expected a positive integer, got \"" + text + "\"");
    }
    return value;
}

Json error_json(const std::string& kind, const std::string& message, const std::string& reason = {})
{
    Json j;
    j["error"] = kind;
    if (!reason.empty()) {
        j["reason"] = reason;
    }
    j["message"] = message;
    return j;
}

class Runner {
public:
    Runner(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

    void bm()
    {
        auto const field = load();
        if (opts_.format == "csv") {
            std::vector<BmReport> reports;
            for (long m : parse_range(opts_.m_range)) {
                reports.push_back(bm_report(field, m));
            }
            out_ << bm_reports_csv(reports);
            return;
        }
        std::unique_ptr<Cache> cache = open_cache();
        std::vector<Json> reports;
        for (long m : parse_range(opts_.m_range)) {
            reports.push_back(bm_report_json(field, m, cache.get()));
        }
        emit_list(reports);
    }

    void intersect()
    {
        auto const field = load();
        std::unique_ptr<Cache> cache = open_cache();
        std::vector<std::pair<long, LogCombo>> rows;
        std::vector<Json> items;
        for (long m : parse_range(opts_.m_range)) {
            Json const report = bm_report_json(field, m, cache.get());
            LogCombo b;
            for (auto const& e : report["entries"]) {
                b.add(e["p"].get<std::uint64_t>(), rational_from_json(e["b"]));
            }
            LogCombo const half = b.scaled(make_rational(1, 2));
            rows.emplace_back(m, half);
            Json j = field_to_json(field);
            j["m"] = m;
            j["intersection"] = half.to_json();
            j["flags"] = report["flags"];
            items.push_back(std::move(j));
        }
        if (opts_.format == "csv") {
            out_ << log_combos_csv(rows);
            return;
        }
        emit_list(items);
    }

    void humbert()
    {
        auto const field = load();
        std::vector<std::pair<long, LogCombo>> rows;
        std::vector<Json> items;
        for (long m : parse_range(opts_.m_range)) {
            LogCombo const h = humbert_intersection(field, m);
            rows.emplace_back(m, h);
            Json j = field_to_json(field);
            j["m"] = m;
            j["indices"] = humbert_indices(field.D, m);
            j["humbert"] = h.to_json();
            items.push_back(std::move(j));
        }
        if (opts_.format == "csv") {
            out_ << log_combos_csv(rows);
            return;
        }
        emit_list(items);
    }

    void badprimes()
    {
        auto const cert = bad_reduction_primes(load());
        if (opts_.format == "csv") {
            out_ << certificate_csv(cert);
            return;
        }
        out_ << cert.to_json().dump(2) << "\n";
    }

    void igusa()
    {
        auto const bounds = igusa_denominator_bounds(load());
        if (opts_.format == "csv") {
            out_ << igusa_csv(bounds);
            return;
        }
        out_ << bounds.to_json(opts_.expand).dump(2) << "\n";
    }

    bool selfcheck()
    {
        auto const results = run_selfcheck(opts_.suite);
        Json const j = selfcheck_json(opts_.suite, results);
        if (opts_.format == "csv") {
            out_ << "check,passed,detail\n";
            for (auto const& r : results) {
                out_ << r.name << "," << (r.passed ? "true" : "false") << "," << csv_cell(r.detail) << "\n";
            }
        } else {
            out_ << j.dump(2) << "\n";
        }
        return j["passed"].get<bool>();
    }

private:
    CMFieldData load() const
    {
        if (opts_.field_path.empty()) {
            throw InputError("--field is required");
        }
        std::optional<Mode> mode;
        if (!opts_.mode.empty()) {
            mode = parse_mode(opts_.mode);
        }
        return load_field(opts_.field_path, mode);
    }

    std::unique_ptr<Cache> open_cache() const
    {
        if (opts_.no_cache) {
            return nullptr;
        }
        return std::make_unique<Cache>(default_cache_dir());
    }

    void emit_list(const std::vector<Json>& items)
    {
        if (items.size() == 1) {
            out_ << items.front().dump(2) << "\n";
            return;
        }
        out_ << Json(items).dump(2) << "\n";
    }

    const Options& opts_;
    std::ostream& out_;
};

}  // namespace

int report_error(const std::exception& e, std::ostream& out, std::ostream& err)
{
    if (auto const* rejected = dynamic_cast<const FieldRejected*>(&e)) {
        out << error_json("invalid_field", e.what(), rejected->code()).dump() << "\n";
        return exit_invalid_field;
    }
    if (dynamic_cast<const ConsistencyError*>(&e) != nullptr) {
        out << error_json("consistency", e.what()).dump() << "\n";
        return exit_consistency;
    }
    err << "cmint: " << e.what() << "\n";
    return exit_usage;
}

std::vector<long> parse_range(const std::string& text)
{
    std::set<long> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t const comma = text.find(',', start);
        std::string const part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t const dash = part.find('-');
        if (dash == std::string::npos) {
            values.insert(parse_positive(part));
        } else {
            long const lo = parse_positive(part.substr(0, dash));
            long const hi = parse_positive(part.substr(dash + 1));
            if (hi < lo) {
                throw InputError("empty range \"" + part + "\"");
            }
            for (long m = lo; m <= hi; ++m) {
                values.insert(m);
            }
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return {values.begin(), values.end()};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opts;
    CLI::App app{"Arithmetic intersection numbers T_m . CM(K) for quartic CM fields"};
    app.name("cmint");
    app.require_subcommand(1);

    auto add_common = [&opts](CLI::App* sub, bool with_m) {
        sub->add_option("--field", opts.field_path, "field description (JSON)")->required();
        if (with_m) {
            sub->add_option("--m", opts.m_range, "index or range, e.g. 1-10 or 1,3,5");
        }
        sub->add_option("--mode", opts.mode, "override the field's mode")->check(CLI::IsMember({"strict", "permissive"}));
        sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* bm = app.add_subcommand("bm", "b_m per prime, both evaluation routes");
    add_common(bm, true);
    bm->add_flag("--no-cache", opts.no_cache, "neither read nor write the result cache");
    auto* intersect = app.add_subcommand("intersect", "T_m . CM(K) = b_m / 2");
    add_common(intersect, true);
    intersect->add_flag("--no-cache", opts.no_cache, "neither read nor write the result cache");
    auto* humbert = app.add_subcommand("humbert", "intersection with the Humbert surface G_m");
    add_common(humbert, true);
    auto* badprimes = app.add_subcommand("badprimes", "primes of bad reduction for curves with CM by K");
    add_common(badprimes, false);
    auto* igusa = app.add_subcommand("igusa", "denominator bounds A1, A2, A3 for Igusa invariants");
    add_common(igusa, false);
    igusa->add_flag("--expand", opts.expand, "also print the expanded integers");
    auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in invariant suites");
    selfcheck->add_option("--suite", opts.suite, "small or full")->check(CLI::IsMember({"small", "full"}));
    selfcheck->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    Runner runner(opts, out);
    try {
        if (bm->parsed()) {
            runner.bm();
        } else if (intersect->parsed()) {
            runner.intersect();
        } else if (humbert->parsed()) {
            runner.humbert();
        } else if (badprimes->parsed()) {
            runner.badprimes();
        } else if (igusa->parsed()) {
            runner.igusa();
        } else if (selfcheck->parsed()) {
            return runner.selfcheck() ? 0 : exit_usage;
        }
    } catch (const std::exception& e) {
        return report_error(e, out, err);
    }
    return 0;
}

}  // namespace cmint

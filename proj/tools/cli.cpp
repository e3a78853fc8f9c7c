#include "cli.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/geometry.hpp"
#include "trapezoid/party_wall.hpp"
#include "trapezoid/sexagesimal.hpp"
#include "trapezoid/wall_solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

namespace trapezoid::cli {

namespace {

using Json = nlohmann::ordered_json;

std::size_t places_or_default(const OutputConfig& cfg) { return cfg.places.value_or(kDefaultPlaces); }

std::string decimal(const Rational& truncated_value, std::size_t places) {
    // truncated_value already has at most `places` decimal digits.
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const Integer scaled = Rational(abs(truncated_value) * scale).get_num();
    std::string digits = to_string(scaled);
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    if (places > 0) {
        digits.insert(digits.size() - places, ".");
    }
    return std::string("~") + (sgn(truncated_value) < 0 ? "-" : "") + digits;
}

Rational truncate_decimal(const Rational& x, std::size_t places) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const Integer cut = floor_of(Rational(abs(x) * scale));
    const Rational magnitude = make_rational(cut, scale);
    return sgn(x) < 0 ? Rational(-magnitude) : magnitude;
}

struct Rendered {
    std::string text;
    bool truncated = false;
};

std::optional<std::string> exact_sex(const Rational& x) {
    const auto places = sex_places_needed(x);
    if (!places) {
        return std::nullopt;
    }
    return format_sex(rational_to_sex(x, *places));
}

Rendered render(const Rational& x, const OutputConfig& cfg) {
    switch (cfg.numeral) {
        case Numeral::rat:
            return {to_string(x), false};
        case Numeral::dec: {
            const std::size_t places = cfg.places.value_or(6);
            return {decimal(truncate_decimal(x, places), places), true};
        }
        case Numeral::sex:
            break;
    }
    if (auto text = exact_sex(x)) {
        return {*text, false};
    }
    return {format_sex(truncate_to_sex(x, places_or_default(cfg))), true};
}

Rendered render(const QuadraticLength& len, const OutputConfig& cfg) {
    if (len.exact_root()) {
        return render(*len.exact_root(), cfg);
    }
    switch (cfg.numeral) {
        case Numeral::rat:
            return {"sqrt(" + to_string(len.square()) + ")", false};
        case Numeral::dec: {
            const std::size_t places = cfg.places.value_or(6);
            return {decimal(truncated_sqrt(len.square(), Integer(10), places), places), true};
        }
        case Numeral::sex:
            break;
    }
    return {format_sex(sqrt_sex(len.square(), places_or_default(cfg))), true};
}

std::string with_flag(const Rendered& r) { return r.truncated ? r.text + " (truncated)" : r.text; }

Json value_json(const Rational& x) {
    Json j;
    j["rational"] = to_string(x);
    if (auto text = exact_sex(x)) {
        j["sexagesimal"] = *text;
    } else {
        j["sexagesimal"] = nullptr;
    }
    return j;
}

Json length_json(const QuadraticLength& len, const OutputConfig& cfg) {
    Json j;
    j["square"] = to_string(len.square());
    if (len.exact_root()) {
        j["rational"] = to_string(*len.exact_root());
        if (auto text = exact_sex(*len.exact_root())) {
            j["sexagesimal"] = *text;
            j["truncated"] = false;
        } else {
            j["sexagesimal"] = format_sex(truncate_to_sex(*len.exact_root(), places_or_default(cfg)));
            j["truncated"] = true;
        }
    } else {
        j["rational"] = nullptr;
        j["sexagesimal"] = format_sex(sqrt_sex(len.square(), places_or_default(cfg)));
        j["truncated"] = true;
    }
    return j;
}

void print_row(std::ostream& out, const std::vector<std::string>& cells, const std::vector<int>& widths) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << "  ";
        if (i + 1 < cells.size()) {
            out << std::left << std::setw(widths[i]) << cells[i] << std::right;
        } else {
            out << cells[i];
        }
    }
    out << '\n';
}

// --- commands -------------------------------------------------------------

int cmd_convert(const std::string& text, const OutputConfig& cfg, std::ostream& out) {
    const Rational x = parse_input(text);
    Rendered r;
    if (cfg.numeral == Numeral::sex && !cfg.places) {
        r = {format_sex(rational_to_sex(x, std::numeric_limits<std::size_t>::max())), false};
    } else if (cfg.numeral == Numeral::sex) {
        const auto needed = sex_places_needed(x);
        r = needed && *needed <= *cfg.places ? Rendered{*exact_sex(x), false}
                                            : Rendered{format_sex(truncate_to_sex(x, *cfg.places)), true};
    } else {
        r = render(x, cfg);
    }
    if (cfg.format == Format::jsonl) {
        Json j = value_json(x);
        j["input"] = text;
        j["output"] = r.text;
        j["truncated"] = r.truncated;
        out << j.dump() << '\n';
    } else {
        out << with_flag(r) << '\n';
    }
    return exit_code::ok;
}

int cmd_bisect(const std::string& a_text, const std::string& b_text, const OutputConfig& cfg, std::ostream& out) {
    const Rational a = parse_input(a_text);
    const Rational b = parse_input(b_text);
    const QuadraticLength d = transversal_bisector(a, b);
    if (cfg.format == Format::jsonl) {
        Json j;
        j["d_sq"] = value_json(d.square());
        j["d"] = length_json(d, cfg);
        out << j.dump() << '\n';
    } else {
        out << "d^2 = " << with_flag(render(d.square(), cfg)) << '\n';
        out << "d   = " << with_flag(render(d, cfg)) << (d.is_exact() ? " (exact)" : "") << '\n';
    }
    return exit_code::ok;
}

int cmd_strips(const Trapezoid& t, std::int64_t n, const OutputConfig& cfg, std::ostream& out) {
    if (n < 1) {
        throw DomainError("strip count must be at least 1");
    }
    const std::vector<int> widths{5, 22, 22, 22};
    if (cfg.format == Format::table) {
        print_row(out, {"k", "d_k", "S_k", "S'_k"}, widths);
    }
    for (std::int64_t k = 0; k <= n; ++k) {
        const Rational d = transversal_at(t, k, n);
        const Rational s = cumulative_area(t, k, n);
        const Rational rest = complement_area(t, k, n);
        if (cfg.format == Format::jsonl) {
            Json j;
            j["k"] = k;
            j["d"] = value_json(d);
            j["S"] = value_json(s);
            j["S_complement"] = value_json(rest);
            out << j.dump() << '\n';
        } else {
            print_row(out, {std::to_string(k), with_flag(render(d, cfg)), with_flag(render(s, cfg)),
                            with_flag(render(rest, cfg))},
                      widths);
        }
    }
    return exit_code::ok;
}

int cmd_wall(const Trapezoid& t, std::int64_t n, const OutputConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto walls = solve_k0(t.upper(), t.lower(), n);
    if (walls.empty()) {
        (cfg.format == Format::jsonl ? err : out) << "no admissible wall\n";
        return exit_code::no_solution;
    }
    for (const std::int64_t k0 : walls) {
        const PartyWallPlan p = plan_wall(t, n, k0);
        const std::vector<std::pair<const char*, const Rational*>> fields = {
            {"c", &p.left_edge},       {"e", &p.right_edge},     {"d_mid", &p.midline},
            {"x", &p.edge_difference}, {"h0", &p.thickness},     {"h1", &p.left_height},
            {"h2", &p.right_height},   {"S_left", &p.left_area}, {"S_wall", &p.wall_area},
            {"S_right", &p.right_area},
        };
        if (cfg.format == Format::jsonl) {
            Json j;
            j["k0"] = k0;
            for (const auto& [name, value] : fields) j[name] = value_json(*value);
            out << j.dump() << '\n';
        } else {
            out << "k0 = " << k0 << '\n';
            for (const auto& [name, value] : fields) {
                out << "  " << std::left << std::setw(8) << name << std::right << with_flag(render(*value, cfg))
                    << '\n';
            }
        }
    }
    return exit_code::ok;
}

int cmd_search(const SearchRange& range, bool regular_only, unsigned workers, const OutputConfig& cfg,
               std::ostream& out) {
    const auto hits = search_hits(range, SearchOptions{regular_only, workers});
    const std::vector<int> widths{5, 6, 6, 7};
    if (cfg.format == Format::table) {
        print_row(out, {"r", "n", "k0", "regular"}, widths);
    }
    for (const auto& h : hits) {
        if (cfg.format == Format::jsonl) {
            Json j;
            j["r"] = h.r;
            j["n"] = h.n;
            j["k0"] = h.k0;
            j["n_regular"] = h.n_regular;
            out << j.dump() << '\n';
        } else {
            print_row(out, {std::to_string(h.r), std::to_string(h.n), std::to_string(h.k0), h.n_regular ? "yes" : "no"},
                      widths);
        }
    }
    const std::string cases = to_string(range.case_count());
    if (cfg.format == Format::jsonl) {
        Json j;
        j["cases"] = std::stoll(cases);
        j["hits"] = hits.size();
        out << j.dump() << '\n';
    } else {
        out << "cases " << cases << "  hits " << hits.size() << '\n';
    }
    return exit_code::ok;
}

void print_step(const TraceStep& s, const OutputConfig& cfg, std::size_t width, std::ostream& out) {
    if (cfg.format == Format::jsonl) {
        Json j;
        j["label"] = s.label;
        j["description"] = s.description;
        j["rational"] = to_string(s.value);
        j["sexagesimal"] = format_sex(s.sex);
        j["truncated"] = s.truncated;
        out << j.dump() << '\n';
        return;
    }
    const std::string shown = cfg.numeral == Numeral::sex ? format_sex(s.sex) : render(s.value, cfg).text;
    out << std::left << std::setw(12) << s.label << std::setw(static_cast<int>(width + 2)) << s.description << std::right
        << shown
        << (s.truncated ? " (truncated)" : "") << '\n';
}

int cmd_smt26(const std::string& part, const OutputConfig& cfg, std::ostream& out) {
    std::vector<TraceStep> steps = part == "obverse1" ? scribe_trace_obverse1() : scribe_trace_smt26();
    if (part == "reverse") {
        const PartyWallPlan plan =
            plan_wall(Trapezoid(make_rational(5, 3), make_rational(1, 3), Rational(1)), 10, 4);
        const Rational total = plan.left_area + plan.wall_area + plan.right_area;
        steps.push_back({"check", "S_left + S_wall + S_right", total, rational_to_sex(total, kMaxPlaces), false});
    }
    std::size_t width = 0;
    for (const auto& s : steps) width = std::max(width, s.description.size());
    for (const auto& s : steps) print_step(s, cfg, width, out);
    return exit_code::ok;
}

}  // namespace

Rational parse_input(std::string_view text) {
    if (text.find_first_of(";,") != std::string_view::npos) {
        return sex_to_rational(parse_sex(text));
    }
    return parse_rational(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact trapezoid bisection and party-wall calculator", "trapezoid"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputConfig cfg;
    const std::map<std::string, Format> formats{{"table", Format::table}, {"jsonl", Format::jsonl}};
    const std::map<std::string, Numeral> numerals{{"sex", Numeral::sex}, {"rat", Numeral::rat}, {"dec", Numeral::dec}};
    std::size_t places = 0;
    app.add_option("--format", cfg.format, "table or jsonl")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--numeral", cfg.numeral, "sex, rat or dec")->transform(CLI::CheckedTransformer(numerals));
    auto* places_opt =
        app.add_option("--places", places, "fractional places for truncated values")->check(CLI::Range(std::size_t{0}, kMaxPlaces));

    std::string value;
    auto* convert = app.add_subcommand("convert", "convert a numeral");
    convert->add_option("value", value, "sexagesimal (1;40) or rational (5/3)")->required();

    std::string a_text, b_text, h_text;
    std::int64_t n = 0;
    auto* bisect = app.add_subcommand("bisect", "transversal bisector of a trapezoid");
    bisect->add_option("upper", a_text, "upper width a")->required();
    bisect->add_option("lower", b_text, "lower width b")->required();

    auto* strips = app.add_subcommand("strips", "transversals and strip areas for n equal strips");
    auto* wall = app.add_subcommand("wall", "find a party wall that leaves equal shares");
    for (auto* sub : {strips, wall}) {
        sub->add_option("upper", a_text, "upper width a")->required();
        sub->add_option("lower", b_text, "lower width b")->required();
        sub->add_option("height", h_text, "height h")->required();
        sub->add_option("strips", n, "number of strips n")->required();
    }

    SearchRange range{2, 20, 3, 1000};
    bool regular_only = false;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    auto* search = app.add_subcommand("search", "scan integral ratios r and strip counts n for walls");
    search->add_option("r_lo", range.r_lo)->capture_default_str();
    search->add_option("r_hi", range.r_hi)->capture_default_str();
    search->add_option("n_lo", range.n_lo)->capture_default_str();
    search->add_option("n_hi", range.n_hi)->capture_default_str();
    search->add_flag("--regular-only", regular_only, "keep only regular n");
    search->add_option("--workers", workers, "threads")->check(CLI::Range(1u, 256u));

    std::string part = "reverse";
    auto* smt26 = app.add_subcommand("smt26", "replay the tablet computations");
    smt26->add_option("--part", part, "reverse or obverse1")->check(CLI::IsMember({"reverse", "obverse1"}));

    std::vector<std::string> argv_storage{"trapezoid"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::syntax;
    }
    if (*places_opt) {
        cfg.places = places;
    }

    try {
        if (*convert) return cmd_convert(value, cfg, out);
        if (*bisect) return cmd_bisect(a_text, b_text, cfg, out);
        if (*search) return cmd_search(range, regular_only, workers, cfg, out);
        if (*smt26) return cmd_smt26(part, cfg, out);
        const Rational a = parse_input(a_text);
        const Rational b = parse_input(b_text);
        const Rational h = parse_input(h_text);
        const Trapezoid t(a, b, h);
        if (*strips) return cmd_strips(t, n, cfg, out);
        return cmd_wall(t, n, cfg, out, err);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::syntax;
    } catch (const NonTerminating& e) {
        err << "error: " << e.what() << " (use --places to truncate)\n";
        return exit_code::representation;
    } catch (const PlacesExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::representation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

}  // namespace trapezoid::cli

// Command-line front end: partner | bound | scatter | area | delta | reproduce.
// Scenario files are JSON with the same field names as the flags; explicit
// flags override scenario fields. Exit codes: 0 ok, 1 reproduce-table row
// failed, 2 validation/parse error, 3 numerical or I/O failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "susyhbs/area.hpp"
#include "susyhbs/bound_solver.hpp"
#include "susyhbs/delta_model.hpp"
#include "susyhbs/io.hpp"
#include "susyhbs/partner.hpp"
#include "susyhbs/scattering.hpp"

using nlohmann::json;
using namespace susyhbs;
namespace fs = std::filesystem;

namespace {

struct Scenario {
    std::string task;

    std::optional<std::string> family;
    std::optional<scalar_t> offset;
    scalar_t width = 1.0;
    std::optional<json> table;

    std::optional<scalar_t> delta_u1;
    std::optional<scalar_t> delta_a;
    std::optional<std::vector<DeltaSpike>> deltas;

    scalar_t grid_half_width = 12.0;
    index_t grid_points = 4801;

    std::string side = "minus";
    scalar_t scale_factor = 1.0;
    bool negate = false;

    scalar_t e_min = 1e-3;
    scalar_t e_max = 20.0;
    index_t n_energies = 400;

    std::string figure;
    std::string only;
    bool all = false;

    std::string out;
    std::string out_dir = ".";
    std::optional<std::string> format;  // csv|json; per-task default when absent

    std::string fmt() const {
        if (format) return *format;
        return (task == "area" || task == "delta") ? "json" : "csv";
    }
};

void merge_scenario_file(Scenario& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario JSON: ") + e.what());
    }
    try {
        if (j.contains("task")) s.task = j["task"].get<std::string>();
        if (j.contains("ansatz")) {
            const auto& a = j["ansatz"];
            s.family = a.at("family").get<std::string>();
            s.offset = a.at("offset").get<scalar_t>();
            if (a.contains("params") && a["params"].contains("width"))
                s.width = a["params"]["width"].get<scalar_t>();
            if (a.contains("table")) s.table = a["table"];
        }
        if (j.contains("delta")) {
            const auto& d = j["delta"];
            if (d.contains("u1")) {
                s.delta_u1 = d["u1"].get<scalar_t>();
                s.delta_a = d.value("a", 1.0);
            }
            if (d.contains("deltas")) {
                std::vector<DeltaSpike> spikes;
                for (const auto& item : d["deltas"])
                    spikes.push_back({item.at("position").get<scalar_t>(),
                                      item.at("strength").get<scalar_t>()});
                s.deltas = std::move(spikes);
            }
        }
        if (j.contains("grid")) {
            s.grid_half_width = j["grid"].value("L", s.grid_half_width);
            s.grid_points = j["grid"].value("n", s.grid_points);
        }
        if (j.contains("side")) s.side = j["side"].get<std::string>();
        if (j.contains("scale")) s.scale_factor = j["scale"].get<scalar_t>();
        if (j.contains("negate")) s.negate = j["negate"].get<bool>();
        if (j.contains("energies")) {
            s.e_min = j["energies"].value("min", s.e_min);
            s.e_max = j["energies"].value("max", s.e_max);
            s.n_energies = j["energies"].value("count", s.n_energies);
        }
        if (j.contains("figure")) s.figure = j["figure"].get<std::string>();
        if (j.contains("only")) s.only = j["only"].get<std::string>();
        if (j.contains("out")) s.out = j["out"].get<std::string>();
        if (j.contains("out_dir")) s.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("format")) s.format = j["format"].get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario fields: ") + e.what());
    }
}

HbsAnsatz ansatz_from(const Scenario& s) {
    if (!s.family || !s.offset)
        throw InvalidParams("an ansatz needs --family and --offset");
    const Family family = family_from_name(*s.family);
    if (family == Family::Tabulated) {
        if (!s.table) throw InvalidParams("tabulated ansatz needs a table");
        const auto get = [&](const char* key) {
            const auto& col = s.table->at(key);
            ArrayXr v(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) v(i) = col[i].get<scalar_t>();
            return v;
        };
        return make_tabulated(*s.offset, get("x"), get("f"), get("f_prime"),
                              get("f_second"));
    }
    return make_ansatz(family, *s.offset, s.width);
}

Grid grid_from(const Scenario& s) {
    if (!(s.grid_half_width > 0)) throw InvalidParams("--grid-L must be positive");
    index_t n = s.grid_points;
    if (n < 3) throw InvalidParams("--grid-n must be at least 3");
    if (n % 2 == 0) throw InvalidParams("--grid-n must be odd (Simpson grid)");
    return Grid(-s.grid_half_width, s.grid_half_width, n);
}

PotentialFn potential_fn(const HbsAnsatz& ansatz, Side side, scalar_t factor) {
    return [ansatz, side, factor](scalar_t x) {
        const auto s = superpotential(ansatz, x);
        const scalar_t v =
            side == Side::Minus ? s.w * s.w - s.w_prime : s.w * s.w + s.w_prime;
        return factor * v;
    };
}

ArrayXr sample_potential(const PotentialFn& fn, const Grid& g) {
    ArrayXr v(g.n_points);
    for (index_t i = 0; i < g.n_points; ++i) v(i) = fn(g.x(i));
    return v;
}

void emit(const Scenario& s, const std::string& content) {
    if (s.out.empty()) {
        std::cout << content;
    } else {
        atomic_write(s.out, content);
        std::cerr << "wrote " << s.out << "\n";
    }
}

std::string spectrum_json(const Spectrum& sp) {
    json j = json::array();
    for (std::size_t i = 0; i < sp.size(); ++i)
        j.push_back({{"index", i},
                     {"E", sp.energies[i]},
                     {"nodes", sp.node_counts[i]},
                     {"residual", sp.diagnostics[i].mismatch_residual},
                     {"domain_used", sp.diagnostics[i].domain_used}});
    return j.dump(2) + "\n";
}

std::string curve_json(const ScatteringCurve& curve) {
    json j = json::array();
    for (const auto& p : curve.points)
        j.push_back({{"E", p.E}, {"R", p.R}, {"T", p.T},
                     {"residual", p.unitarity_residual}});
    return j.dump(2) + "\n";
}

std::string pair_json(const PartnerPair& pair) {
    json j = json::array();
    for (index_t i = 0; i < pair.grid.n_points; ++i)
        j.push_back({{"x", pair.grid.x(i)},
                     {"W", pair.w(i)},
                     {"Wprime", pair.w_prime(i)},
                     {"Vminus", pair.v_minus(i)},
                     {"Vplus", pair.v_plus(i)}});
    return j.dump(2) + "\n";
}

int run_partner(const Scenario& s) {
    const auto pair = build_pair(ansatz_from(s), grid_from(s));
    emit(s, s.fmt() == "json" ? pair_json(pair) : pair_csv(pair));
    return 0;
}

int run_bound(const Scenario& s) {
    const auto ansatz = ansatz_from(s);
    if (!(s.scale_factor > 0)) throw NonPositiveScale("--scale must be positive");
    const scalar_t factor = (s.negate ? -1.0 : 1.0) * s.scale_factor;
    SolverOptions opts;
    opts.domain_half_width = s.grid_half_width;
    opts.step = grid_from(s).h();
    const auto spectrum =
        find_bound_states(potential_fn(ansatz, side_from_name(s.side), factor), opts);
    emit(s, s.fmt() == "json" ? spectrum_json(spectrum) : spectrum_csv(spectrum));
    return 0;
}

int run_scatter(const Scenario& s) {
    const auto ansatz = ansatz_from(s);
    if (!(s.scale_factor > 0)) throw NonPositiveScale("--scale must be positive");
    const scalar_t factor = (s.negate ? -1.0 : 1.0) * s.scale_factor;
    const Grid g = grid_from(s);
    const ArrayXr v =
        sample_potential(potential_fn(ansatz, side_from_name(s.side), factor), g);
    const auto curve = scan(v, g, log_spaced_energies(s.e_min, s.e_max, s.n_energies));
    emit(s, s.fmt() == "json" ? curve_json(curve) : curve_csv(curve));
    return 0;
}

int run_area(const Scenario& s) {
    const auto ansatz = ansatz_from(s);
    if (!(s.scale_factor > 0)) throw NonPositiveScale("--scale must be positive");
    const scalar_t factor = (s.negate ? -1.0 : 1.0) * s.scale_factor;
    const Grid g = grid_from(s);
    const ArrayXr v =
        sample_potential(potential_fn(ansatz, side_from_name(s.side), factor), g);
    const auto report = simon_classify(v, g);
    if (s.fmt() == "json") {
        emit(s, area_json(report));
    } else {
        std::string csv = "I,I_weighted,sign,prediction\n";
        csv += format_number(report.I) + "," + format_number(report.I_weighted) + "," +
               area_sign_name(report.sign) + "," + prediction_name(report.prediction) +
               "\n";
        emit(s, csv);
    }
    return 0;
}

int run_delta(const Scenario& s) {
    json out;
    Spectrum spectrum;
    if (s.delta_u1) {
        const auto hbs = solve_hbs(*s.delta_u1, s.delta_a.value_or(1.0));
        const auto info = classify_case(hbs.u1, hbs.a);
        spectrum = delta_bound_states(triple_array(hbs));
        out["u1"] = hbs.u1;
        out["u2"] = hbs.u2;
        out["a"] = hbs.a;
        out["coefficients"] = {
            {"A", hbs.A}, {"B", hbs.B}, {"C", hbs.C}, {"D", hbs.D}, {"F", hbs.F}};
        out["case"] = delta_case_name(info.label);
        out["node_count"] = info.node_count;
    } else if (s.deltas) {
        spectrum = delta_bound_states(make_delta_array(*s.deltas));
    } else {
        throw InvalidParams("delta needs --u1/--a or a scenario delta array");
    }
    out["bound_states"] = json::array();
    for (scalar_t e : spectrum.energies) out["bound_states"].push_back(e);
    if (s.fmt() == "csv") {
        emit(s, spectrum_csv(spectrum));
    } else {
        emit(s, out.dump(2) + "\n");
    }
    return 0;
}

struct FigureCase {
    const char* name;
    Family family;
    scalar_t offset;
};

const FigureCase kFigures[] = {
    {"2a", Family::Gaussian, 0.5}, {"2b", Family::Gaussian, 1.0},
    {"2c", Family::Gaussian, -2.0}, {"3a", Family::Tanh, 2.0},
    {"3b", Family::Erf, 2.0},      {"3c", Family::XGauss, 2.0},
};

int run_reproduce_figure(const Scenario& s) {
    const FigureCase* chosen = nullptr;
    for (const auto& f : kFigures)
        if (s.figure == f.name) chosen = &f;
    if (!chosen)
        throw InvalidParams("--figure must be one of 2a 2b 2c 3a 3b 3c");

    const Grid g = grid_from(s);
    const auto ansatz = make_ansatz(chosen->family, chosen->offset);
    const auto pair = build_pair(ansatz, g);

    SolverOptions opts;
    opts.domain_half_width = s.grid_half_width;
    opts.step = g.h();
    const auto spec_minus = find_bound_states(potential_fn(ansatz, Side::Minus, 1.0), opts);
    const auto spec_plus = find_bound_states(potential_fn(ansatz, Side::Plus, 1.0), opts);
    const auto report = simon_classify(pair.v_minus, g);

    const fs::path dir(s.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    atomic_write(dir / ("fig" + s.figure + "_pair.csv"), pair_csv(pair));
    atomic_write(dir / ("fig" + s.figure + "_spectrum_minus.csv"), spectrum_csv(spec_minus));
    atomic_write(dir / ("fig" + s.figure + "_spectrum_plus.csv"), spectrum_csv(spec_plus));
    atomic_write(dir / ("fig" + s.figure + "_area.json"), area_json(report));
    std::cerr << "wrote fig" << s.figure << "_{pair.csv,spectrum_minus.csv,"
              << "spectrum_plus.csv,area.json} in " << s.out_dir << "\n";
    return 0;
}

struct TableRow {
    std::string group;
    std::string label;
    std::string computed;
    std::string reference;
    bool pass;
};

scalar_t ground_state(const PotentialFn& fn) {
    const auto spectrum = find_bound_states(fn);
    if (spectrum.empty()) return std::numeric_limits<scalar_t>::quiet_NaN();
    return spectrum.energies[0];
}

int run_reproduce_all(const Scenario& s) {
    std::vector<TableRow> rows;
    const Grid g = grid_from(s);
    const bool want = s.only.empty();
    auto wanted = [&](const std::string& group) { return want || s.only == group; };

    if (wanted("eigenvalues")) {
        const struct { scalar_t offset; Side side; scalar_t ref; } cases[] = {
            {0.5, Side::Minus, -0.2432},  {1.0, Side::Minus, -0.07344},
            {-2.0, Side::Minus, -0.3127}, {0.5, Side::Plus, -0.5837},
            {1.0, Side::Plus, -0.2151},   {-2.0, Side::Plus, -0.0924}};
        for (const auto& c : cases) {
            const auto ansatz = make_ansatz(Family::Gaussian, c.offset);
            const scalar_t e0 = ground_state(potential_fn(ansatz, c.side, -1.0));
            const scalar_t tol = std::max<scalar_t>(2e-3, 0.01 * std::abs(c.ref));
            char label[64];
            std::snprintf(label, sizeof label, "E0(-V%s) gaussian A=%g",
                          c.side == Side::Minus ? "-" : "+", c.offset);
            rows.push_back({"eigenvalues", label, format_number(e0),
                            format_number(c.ref), std::abs(e0 - c.ref) <= tol});
        }
    }

    if (wanted("areas")) {
        const struct { scalar_t offset, ref; } cases[] = {
            {0.5, 1.38}, {1.0, 0.56}, {-2.0, 0.64}};
        for (const auto& c : cases) {
            const auto id = w2_identity(make_ansatz(Family::Gaussian, c.offset), g);
            const bool pass = std::abs(id.lhs_minus - c.ref) <= 0.02 &&
                              std::abs(id.lhs_plus - c.ref) <= 0.02 &&
                              std::abs(id.lhs_minus - id.rhs) <= 1e-8 &&
                              std::abs(id.lhs_plus - id.rhs) <= 1e-8;
            char label[64];
            std::snprintf(label, sizeof label, "area(V-)=area(V+)=area(W^2), A=%g",
                          c.offset);
            rows.push_back({"areas", label, format_number(id.lhs_minus),
                            format_number(c.ref), pass});
        }
    }

    if (wanted("scaled")) {
        const auto ansatz = make_ansatz(Family::Gaussian, 0.5);
        const scalar_t em = ground_state(potential_fn(ansatz, Side::Minus, 1.1));
        rows.push_back({"scaled", "E0(1.1 V-) gaussian A=1/2", format_number(em),
                        format_number(-0.01990), std::abs(em - (-0.01990)) <= 5e-4});
        const scalar_t ep = ground_state(potential_fn(ansatz, Side::Plus, 1.1));
        rows.push_back({"scaled", "E0(1.1 V+) gaussian A=1/2", format_number(ep),
                        format_number(-0.00063), std::abs(ep - (-0.00063)) <= 3e-4});
        const auto pair = build_pair(ansatz, g);
        const scalar_t area = area_integral(scale(pair, Side::Plus, 1.1).values, g);
        rows.push_back({"scaled", "area(1.1 V+) gaussian A=1/2", format_number(area),
                        format_number(1.52112), std::abs(area - 1.52112) <= 0.02});
    }

    if (wanted("delta")) {
        const struct { scalar_t u1; int expect; } cases[] = {
            {2.0, 2}, {0.5, 0}, {-2.0, 0}};
        for (const auto& c : cases) {
            const auto hbs = solve_hbs(c.u1, 1.0);
            const auto info = classify_case(c.u1, 1.0);
            const auto spectrum = delta_bound_states(triple_array(hbs));
            char label[64], got[64], ref[64];
            std::snprintf(label, sizeof label, "triple delta u1=%g a=1 (u2=%g)",
                          c.u1, hbs.u2);
            std::snprintf(got, sizeof got, "%d nodes, %d states", info.node_count,
                          int(spectrum.size()));
            std::snprintf(ref, sizeof ref, "%d nodes, %d states", c.expect, c.expect);
            rows.push_back({"delta", label, got, ref,
                            info.node_count == c.expect &&
                                int(spectrum.size()) == c.expect});
        }
    }

    if (wanted("rminima")) {
        const struct { Family family; scalar_t e_star, r_star; } cases[] = {
            {Family::Tanh, 4.7, 0.25e-3},
            {Family::Erf, 5.2, 0.16e-3},
            {Family::XGauss, 15.2, 0.16e-5}};
        for (const auto& c : cases) {
            const auto pair = build_pair(make_ansatz(c.family, 2.0), g);
            scalar_t best_windowed = 1.0, best_at_star = 1.0;
            for (Side side : {Side::Minus, Side::Plus}) {
                const ArrayXr& v = pair.side(side);
                const auto curve =
                    scan(v, g, log_spaced_energies(c.e_star - 1.0, c.e_star + 1.0, 41));
                for (const auto& p : curve.points)
                    best_windowed = std::min(best_windowed, p.R);
                best_at_star = std::min(best_at_star, rt_coefficients(v, g, c.e_star).R);
            }
            const scalar_t ratio = best_at_star / c.r_star;
            const bool pass =
                best_windowed < 1e-2 && ratio <= 10.0 && ratio >= 0.1;
            char label[80];
            std::snprintf(label, sizeof label, "min R near E=%g (%s A=2)", c.e_star,
                          family_name(c.family));
            rows.push_back({"rminima", label,
                            format_number(best_at_star) + " at E*",
                            format_number(c.r_star), pass});
        }
    }

    if (rows.empty())
        throw InvalidParams("--only must be one of eigenvalues areas scaled delta rminima");

    std::string table;
    int failures = 0;
    for (const auto& r : rows) {
        const char* verdict = r.pass ? "PASS" : "FAIL";
        if (!r.pass) ++failures;
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-12s %-40s computed=%-18s ref=%s\n",
                      verdict, r.group.c_str(), r.label.c_str(), r.computed.c_str(),
                      r.reference.c_str());
        table += line;
    }
    char tail[64];
    std::snprintf(tail, sizeof tail, "%d/%zu rows passed\n", int(rows.size()) - failures,
                  rows.size());
    table += tail;

    std::cout << table;
    if (!s.out.empty()) atomic_write(s.out, table);
    return failures == 0 ? 0 : 1;
}

int dispatch(const Scenario& s) {
    if (s.task == "partner") return run_partner(s);
    if (s.task == "bound") return run_bound(s);
    if (s.task == "scatter") return run_scatter(s);
    if (s.task == "area") return run_area(s);
    if (s.task == "delta") return run_delta(s);
    if (s.task == "reproduce") {
        if (!s.figure.empty()) return run_reproduce_figure(s);
        if (s.all || !s.only.empty()) return run_reproduce_all(s);
        throw InvalidParams("reproduce needs --figure or --all/--only");
    }
    throw InvalidParams("unknown task: " + s.task);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersymmetric partner potentials from nodeless half bound states"};
    app.require_subcommand(1);

    Scenario s;
    std::string scenario_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_path, "JSON scenario file");
        cmd->add_option("--grid-L", s.grid_half_width, "grid half-width");
        cmd->add_option("--grid-n", s.grid_points, "grid points (odd)");
        cmd->add_option("--out", s.out, "output path (stdout when omitted)");
        cmd->add_option("--format", s.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_ansatz = [&](CLI::App* cmd) {
        cmd->add_option("--family", s.family, "gaussian|tanh|erf|xgauss|tabulated");
        cmd->add_option("--offset", s.offset, "the additive constant of psi*");
        cmd->add_option("--width", s.width, "family width parameter");
    };
    auto add_selection = [&](CLI::App* cmd) {
        cmd->add_option("--side", s.side, "minus or plus");
        cmd->add_option("--scale", s.scale_factor, "positive scale factor c");
        cmd->add_flag("--negate", s.negate, "use -c V instead of c V");
    };

    auto* partner = app.add_subcommand("partner", "sampled W, W', V-, V+ tables");
    add_common(partner);
    add_ansatz(partner);

    auto* bound = app.add_subcommand("bound", "bound states of the selected potential");
    add_common(bound);
    add_ansatz(bound);
    add_selection(bound);

    auto* scatter = app.add_subcommand("scatter", "R(E), T(E) scan");
    add_common(scatter);
    add_ansatz(scatter);
    add_selection(scatter);
    scatter->add_option("--e-min", s.e_min, "lowest energy");
    scatter->add_option("--e-max", s.e_max, "highest energy");
    scatter->add_option("--n-energies", s.n_energies, "scan size");

    auto* area = app.add_subcommand("area", "Simpson area and Simon classification");
    add_common(area);
    add_ansatz(area);
    add_selection(area);

    auto* delta = app.add_subcommand("delta", "triple-delta HBS and bound states");
    add_common(delta);
    delta->add_option("--u1", s.delta_u1, "side-well strength");
    delta->add_option("--a", s.delta_a, "half spacing (default 1)");

    auto* reproduce = app.add_subcommand("reproduce", "paper-value reproduction");
    add_common(reproduce);
    reproduce->add_option("--figure", s.figure, "2a 2b 2c 3a 3b 3c");
    reproduce->add_flag("--all", s.all, "full comparison table");
    reproduce->add_option("--only", s.only,
                          "eigenvalues|areas|scaled|delta|rminima");
    reproduce->add_option("--out-dir", s.out_dir, "directory for figure artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Scenario merged;
        if (!scenario_path.empty()) merge_scenario_file(merged, scenario_path);

        // CLI flags win over scenario fields.
        CLI::App* sub = app.get_subcommands().front();
        merged.task = sub->get_name();
        auto overridden = [&](const char* flag) {
            return sub->get_option_no_throw(flag) && sub->count(flag) > 0;
        };
        if (s.family) merged.family = s.family;
        if (s.offset) merged.offset = s.offset;
        if (overridden("--width")) merged.width = s.width;
        if (s.delta_u1) merged.delta_u1 = s.delta_u1;
        if (s.delta_a) merged.delta_a = s.delta_a;
        if (overridden("--grid-L")) merged.grid_half_width = s.grid_half_width;
        if (overridden("--grid-n")) merged.grid_points = s.grid_points;
        if (overridden("--side")) merged.side = s.side;
        if (overridden("--scale")) merged.scale_factor = s.scale_factor;
        if (s.negate) merged.negate = true;
        if (overridden("--e-min")) merged.e_min = s.e_min;
        if (overridden("--e-max")) merged.e_max = s.e_max;
        if (overridden("--n-energies")) merged.n_energies = s.n_energies;
        if (!s.figure.empty()) merged.figure = s.figure;
        if (!s.only.empty()) merged.only = s.only;
        if (s.all) merged.all = true;
        if (!s.out.empty()) merged.out = s.out;
        if (overridden("--out-dir")) merged.out_dir = s.out_dir;
        if (overridden("--format")) merged.format = s.format;
        if (merged.format && *merged.format != "csv" && *merged.format != "json")
            throw ParseError("format must be csv or json");

        return dispatch(merged);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NodeDetected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveScale& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

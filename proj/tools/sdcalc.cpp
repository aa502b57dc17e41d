#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdc/acceptance.hpp"
#include "sdc/bench.hpp"
#include "sdc/cdf.hpp"
#include "sdc/curve.hpp"
#include "sdc/detach.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/io.hpp"
#include "sdc/sat.hpp"
#include "sdc/slanted.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    sdc::LimitConfig cfg;
    std::string config_path;
    std::string format = "json";
    uint64_t seed = 1;
    double tol = 1e-7;
};

void add_limit_flags(CLI::App* app, GlobalOpts& g) {
    app->add_option("--h0", g.cfg.h0, "initial ladder offset");
    app->add_option("--ratio", g.cfg.ratio, "geometric shrink factor");
    app->add_option("--steps", g.cfg.steps, "ladder length");
    app->add_option("--tail", g.cfg.tail_len, "stabilization window");
    app->add_option("--zero-tol", g.cfg.zero_tol, "relative sign deadband");
    app->add_option("--config", g.config_path, "JSON file with limit-config overrides");
    app->add_option("--seed", g.seed, "RNG seed");
    app->add_option("--tol", g.tol, "quadrature tolerance");
    app->add_option("--format", g.format, "output format: json or csv");
}

sdc::LimitConfig resolve_cfg(const GlobalOpts& g) {
    sdc::LimitConfig cfg = g.cfg;
    if (!g.config_path.empty()) cfg = sdc::io::read_limit_config_json(g.config_path, cfg);
    cfg.validate();
    return cfg;
}

json sign_json(const std::optional<sdc::Sign>& s) {
    if (!s) return nullptr;
    return *s;
}

void emit(const json& j, const std::string& format) {
    if (format == "csv" && j.is_array()) {
        for (const auto& row : j) {
            bool first = true;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                if (!first) std::cout << ",";
                std::cout << value;
                first = false;
            }
            std::cout << "\n";
        }
        return;
    }
    std::cout << j.dump(2) << "\n";
}

// ---- classify -----------------------------------------------------------------

json classify_handle(const sdc::FunctionHandle& h, double x, const sdc::LimitConfig& cfg) {
    using namespace sdc;
    json out;
    out["point"] = x;
    const auto vec = partial_detachments_vector(h, x, cfg);
    out["vector"] = vec.to_string();
    const auto flags = classify_disdetachment(vec);
    json fl = json::array();
    for (int i = 0; i < 6; ++i)
        if (flags.type[i]) fl.push_back(i + 1);
    out["flags"] = fl;
    out["extrema_indicator"] = extrema_indicator(vec);
    out["detachment_left"] = sign_json(detachment(h, x, SideSpec::Left, cfg));
    out["detachment_right"] = sign_json(detachment(h, x, SideSpec::Right, cfg));
    out["detachment"] = sign_json(detachment(h, x, SideSpec::Both, cfg));
    out["signposted"] = sign_json(signposted_detachment(h, x, cfg));
    out["tendency"] = sign_json(tendency(h, x, cfg));
    const auto joint = classify_joint_point(h, x, cfg);
    switch (joint.type) {
        case JointType::First: out["joint"] = "first"; break;
        case JointType::Second: out["joint"] = "second"; break;
        case JointType::Third: out["joint"] = "third"; break;
        case JointType::NotJoint: out["joint"] = "none (" + joint.reason + ")"; break;
    }
    const auto dini = dini_derivates(h, x, cfg);
    out["derivates"] = {{"upper_right", dini.upper_right},
                        {"upper_left", dini.upper_left},
                        {"lower_right", dini.lower_right},
                        {"lower_left", dini.lower_left}};
    return out;
}

// A sampled series as a function handle: the lattice neighbors stand in for
// the one-sided limits.
json classify_series(const sdc::io::Series& s, size_t index) {
    using namespace sdc;
    if (index == 0 || index + 1 >= s.value.size())
        throw InvalidInput("classify: series index needs both neighbors");
    SignSet left, right;
    left.add(sgn(s.value[index - 1] - s.value[index]));
    right.add(sgn(s.value[index + 1] - s.value[index]));
    const auto vec = PartialDetachmentsVector::from_sides(left, right);
    json out;
    out["index"] = index;
    out["t"] = s.t[index];
    out["vector"] = vec.to_string();
    const auto flags = classify_disdetachment(vec);
    json fl = json::array();
    for (int i = 0; i < 6; ++i)
        if (flags.type[i]) fl.push_back(i + 1);
    out["flags"] = fl;
    out["extrema_indicator"] = extrema_indicator(vec);
    out["tendency"] = int(sgn(double(right.only()) - double(left.only())));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-discrete calculus toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;

    // sat ------------------------------------------------------------------
    auto* sat_cmd = app.add_subcommand("sat", "summed-area-table region sums");
    std::string sat_grid, sat_boxes, sat_grid_nd, sat_boxes_nd;
    sat_cmd->add_option("--grid", sat_grid, "2-D grid CSV");
    sat_cmd->add_option("--boxes", sat_boxes, "2-D boxes CSV (a,b,c,d inclusive)");
    sat_cmd->add_option("--grid-nd", sat_grid_nd, "n-D grid JSON {dims, values}");
    sat_cmd->add_option("--boxes-nd", sat_boxes_nd, "n-D boxes JSON");
    add_limit_flags(sat_cmd, g);

    // classify --------------------------------------------------------------
    auto* cls_cmd = app.add_subcommand("classify", "pointwise detachment report");
    std::string cls_fixture, cls_series;
    double cls_point = 0.0;
    long cls_index = -1;
    cls_cmd->add_option("--fixture", cls_fixture, "fixture name");
    cls_cmd->add_option("--point", cls_point, "evaluation point");
    cls_cmd->add_option("--series", cls_series, "series CSV (t,value)");
    cls_cmd->add_option("--index", cls_index, "sample index into the series");
    add_limit_flags(cls_cmd, g);

    // curve -----------------------------------------------------------------
    auto* curve_cmd = app.add_subcommand("curve", "per-vertex curve classification");
    std::string curve_file;
    bool curve_closed = false;
    curve_cmd->add_option("--input", curve_file, "curve CSV (t,x,y or x,y)")->required();
    curve_cmd->add_flag("--closed", curve_closed, "treat the polyline as closed");
    add_limit_flags(curve_cmd, g);

    // integrate ---------------------------------------------------------------
    auto* int_cmd = app.add_subcommand("integrate", "GRD or curve integral of a field");
    std::string int_grd, int_curve, int_field = "const";
    std::vector<double> int_anchor = {0.0, 0.0};
    int_cmd->add_option("--grd", int_grd, "GRD JSON vertex list");
    int_cmd->add_option("--curve", int_curve, "closed curve CSV");
    int_cmd->add_option("--field", int_field, "field name");
    int_cmd->add_option("--anchor", int_anchor, "CDF anchor")->expected(2);
    add_limit_flags(int_cmd, g);

    // slanted -----------------------------------------------------------------
    auto* sl_cmd = app.add_subcommand("slanted", "slanted line integral over a closed curve");
    std::string sl_curve, sl_field = "const";
    std::vector<double> sl_anchor = {0.0, 0.0};
    bool sl_check = false;
    sl_cmd->add_option("--curve", sl_curve, "closed curve CSV")->required();
    sl_cmd->add_option("--field", sl_field, "field name");
    sl_cmd->add_option("--anchor", sl_anchor, "CDF anchor")->expected(2);
    sl_cmd->add_flag("--check", sl_check, "also run the double-integral comparison");
    add_limit_flags(sl_cmd, g);

    // verify / bench ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance battery");
    add_limit_flags(verify_cmd, g);
    auto* bench_cmd = app.add_subcommand("bench", "sign vs quotient microbenchmark");
    int64_t bench_samples = 1 << 22;
    bench_cmd->add_option("--samples", bench_samples, "samples per kernel");
    add_limit_flags(bench_cmd, g);

    CLI11_PARSE(app, argc, argv);

    try {
        const sdc::LimitConfig cfg = resolve_cfg(g);

        if (sat_cmd->parsed()) {
            json records = json::array();
            if (!sat_grid.empty()) {
                if (sat_boxes.empty()) throw sdc::InvalidInput("sat: --grid needs --boxes");
                const auto loaded = sdc::io::read_grid_csv(sat_grid);
                const auto boxes = sdc::io::read_boxes_csv(sat_boxes);
                if (loaded.integral) {
                    const auto table = sdc::sat::build_sat_2d(loaded.igrid);
                    for (const auto& b : boxes)
                        records.push_back({{"box", {b.a, b.b, b.c, b.d}},
                                           {"sum", table.region_sum(b.a, b.b, b.c, b.d)}});
                } else {
                    const auto table = sdc::sat::build_sat_2d(loaded.dgrid);
                    for (const auto& b : boxes)
                        records.push_back({{"box", {b.a, b.b, b.c, b.d}},
                                           {"sum", table.region_sum(b.a, b.b, b.c, b.d)}});
                }
            }
            if (!sat_grid_nd.empty()) {
                if (sat_boxes_nd.empty()) throw sdc::InvalidInput("sat: --grid-nd needs --boxes-nd");
                const auto grid = sdc::io::read_grid_nd_json(sat_grid_nd);
                const auto boxes = sdc::io::read_boxes_nd_json(sat_boxes_nd);
                const auto table = sdc::sat::build_sat_nd(grid);
                for (const auto& b : boxes)
                    records.push_back({{"box", {{"lo", b.lo}, {"hi", b.hi}}},
                                       {"sum", sdc::sat::region_sum_nd(table, b)}});
            }
            if (records.empty()) throw sdc::InvalidInput("sat: nothing to do");
            emit(records, g.format);
            return 0;
        }

        if (cls_cmd->parsed()) {
            if (!cls_series.empty()) {
                const auto series = sdc::io::read_series_csv(cls_series);
                if (cls_index < 0) throw sdc::InvalidInput("classify: --series needs --index");
                emit(classify_series(series, size_t(cls_index)), g.format);
            } else if (!cls_fixture.empty()) {
                const sdc::Fixture fx = sdc::get_fixture(cls_fixture);
                emit(classify_handle(fx.handle, cls_point, cfg), g.format);
            } else {
                throw sdc::InvalidInput("classify: need --fixture or --series");
            }
            return 0;
        }

        if (curve_cmd->parsed()) {
            const sdc::Curve2D c = sdc::io::read_curve_csv(curve_file, curve_closed);
            json rows = json::array();
            const size_t begin = c.closed ? 0 : 1;
            const size_t end = c.closed ? c.size() : c.size() - 1;
            for (size_t j = begin; j < end; ++j) {
                json row;
                row["index"] = j;
                row["tiv"] = sdc::curve_tiv(c, j).to_string();
                const auto cl = sdc::classify_point(c, j);
                row["class"] = cl.cls ? sdc::point_class_name(*cl.cls) : ("? " + cl.reason);
                const auto ori = sdc::local_orientation(c, j);
                row["orientation"] = ori ? json(*ori) : json(nullptr);
                const auto tau = sdc::curve_tendency(c, j);
                row["tendency"] = tau.value ? json(int(*tau.value)) : json(nullptr);
                rows.push_back(row);
            }
            json out;
            out["vertices"] = rows;
            const auto pieces = sdc::uniform_division_curve(c);
            json jp = json::array();
            for (const auto& p : pieces)
                jp.push_back({{"first", p.first},
                              {"last", p.last},
                              {"tendency", int(p.beta)},
                              {"orientation", p.orientation}});
            out["pieces"] = jp;
            emit(out, g.format);
            return 0;
        }

        if (int_cmd->parsed()) {
            const sdc::ScalarField f = sdc::get_field(int_field, 2);
            const sdc::LocalCDF F = f.antiderivative
                                        ? sdc::LocalCDF::analytic(f, {int_anchor[0], int_anchor[1]})
                                        : sdc::LocalCDF::numeric(f, {int_anchor[0], int_anchor[1]},
                                                                 g.tol);
            json out;
            if (!int_grd.empty()) {
                const sdc::GRD grd = sdc::io::read_grd_json(int_grd);
                out["value"] = sdc::grd_integral(F, grd);
                json alphas = json::array();
                for (const auto& [v, a] : sdc::grd_alpha(grd))
                    alphas.push_back({{"x", v.x}, {"y", v.y}, {"alpha", a}});
                out["per_vertex_alpha"] = alphas;
            } else if (!int_curve.empty()) {
                const sdc::Curve2D c = sdc::io::read_curve_csv(int_curve, true);
                out["value"] = sdc::slanted_integral(F, f, c);
            } else {
                throw sdc::InvalidInput("integrate: need --grd or --curve");
            }
            emit(out, g.format);
            return 0;
        }

        if (sl_cmd->parsed()) {
            const sdc::ScalarField f = sdc::get_field(sl_field, 2);
            const sdc::LocalCDF F = f.antiderivative
                                        ? sdc::LocalCDF::analytic(f, {sl_anchor[0], sl_anchor[1]})
                                        : sdc::LocalCDF::numeric(f, {sl_anchor[0], sl_anchor[1]},
                                                                 g.tol);
            const sdc::Curve2D c = sdc::io::read_curve_csv(sl_curve, true);
            json out;
            if (sl_check) {
                const auto chk = sdc::extended_formula_check(f, F, c);
                out["value"] = chk.slanted_total;
                out["double_integral"] = chk.double_integral;
                out["residual"] = chk.residual;
                out["reversed"] = chk.reversed;
            } else {
                out["value"] = sdc::slanted_integral(F, f, c);
            }
            emit(out, g.format);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto results = sdc::run_acceptance(g.seed);
            const bool ok = sdc::report_acceptance(results, std::cout);
            return ok ? 0 : 1;
        }

        if (bench_cmd->parsed()) {
            const sdc::BenchReport b = sdc::run_sign_vs_quotient_bench(bench_samples, g.seed);
            json out;
            out["sign_ns_per_sample"] = b.sign_ns_per_sample;
            out["quotient_ns_per_sample"] = b.quotient_ns_per_sample;
            out["ratio"] = b.ratio;
            out["samples"] = b.samples;
            emit(out, g.format);
            return 0;
        }
    } catch (const sdc::ParseError& e) {
        std::cerr << "input error (line " << e.line << "): " << e.what() << "\n";
        return 2;
    } catch (const sdc::InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const sdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

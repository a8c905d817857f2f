#include "dynbarrier/frontend.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

#include "dynbarrier/bessel.hpp"
#include "dynbarrier/spectrum.hpp"
#include "dynbarrier/tg_sidebands.hpp"
#include "dynbarrier/transmission.hpp"
#include "dynbarrier/traversal.hpp"

namespace dynbarrier::cli {

using nlohmann::json;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string cell(double v) { return std::isnan(v) ? std::string() : format_full(v); }

double parse_double(const std::string& s, const std::string& context) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw NumericalError("verify: cell '" + s + "' in " + context + " is not numeric");
    }
}

const std::vector<std::string> kCommands = {"static",   "spectrum", "transmit", "traverse",
                                            "dos",      "tg-compare", "oracle"};
const std::vector<std::string> kSweepable = {"v0", "b", "v1", "omega", "e_incident"};

bool command_supports_svg(const std::string& cmd) {
    return cmd == "spectrum" || cmd == "dos" || cmd == "static" || cmd == "transmit";
}

double require_number(const json& j, const std::string& path) {
    const json* cur = &j;
    std::string part;
    std::istringstream ss(path);
    while (std::getline(ss, part, '.')) {
        if (!cur->is_object() || !cur->contains(part))
            throw ValidationError("config field " + path + ": missing");
        cur = &(*cur)[part];
    }
    if (!cur->is_number())
        throw ValidationError("config field " + path + ": must be a number");
    return cur->get<double>();
}

double optional_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number())
        throw ValidationError("config field " + key + ": must be a number");
    return j[key].get<double>();
}

void set_barrier_field(BarrierConfig& cfg, const std::string& name, double value) {
    if (name == "v0") cfg.v0 = value;
    else if (name == "b") cfg.b = value;
    else if (name == "v1") cfg.v1 = value;
    else if (name == "omega") cfg.omega = value;
    else if (name == "e_incident") cfg.e_incident = value;
    else throw ValidationError("sweep.parameter: unknown barrier field '" + name + "'");
}

std::vector<double> sweep_values(const SweepSpec& sweep, std::uint64_t seed) {
    std::vector<double> values;
    values.reserve(static_cast<size_t>(sweep.count));
    if (sweep.spacing == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(sweep.start, sweep.stop);
        for (int i = 0; i < sweep.count; ++i) values.push_back(dist(rng));
        std::sort(values.begin(), values.end());
        return values;
    }
    for (int i = 0; i < sweep.count; ++i) {
        const double f = static_cast<double>(i) / (sweep.count - 1);
        if (sweep.spacing == "log")
            values.push_back(sweep.start * std::pow(sweep.stop / sweep.start, f));
        else
            values.push_back(sweep.start + f * (sweep.stop - sweep.start));
    }
    return values;
}

// ---------------------------------------------------------------- tables

Table static_table(const RunConfig& rc) {
    Table t;
    t.columns = {"v0", "b", "v1", "omega", "e_incident", "k0", "kappa0",
                 "transmission", "transmission_opaque", "reflection"};
    std::vector<BarrierConfig> configs;
    if (rc.sweep) {
        for (double v : sweep_values(*rc.sweep, rc.seed)) {
            BarrierConfig c = rc.barrier;
            set_barrier_field(c, rc.sweep->parameter, v);
            configs.push_back(c);
        }
    } else {
        configs.push_back(rc.barrier);
    }
    for (const auto& c : configs) {
        const StaticSolution sol = match_static(c);
        t.rows.push_back({cell(c.v0), cell(c.b), cell(c.v1), cell(c.omega),
                          cell(c.e_incident), cell(sol.k0), cell(sol.kappa0),
                          cell(transmission_static(c)), cell(transmission_opaque(c)),
                          cell(sol.reflection)});
    }
    return t;
}

std::string spectrum_note(const ChannelSpectrum& sp) {
    if (sp.degenerate) return "degenerate";
    if (sp.nonintegral_ratio) return "nonintegral-ratio";
    return "";
}

Table spectrum_table(const RunConfig& rc) {
    const ChannelSpectrum sp = build_spectrum(rc.barrier);
    Table t;
    t.columns = {"n",     "sign",  "n_alpha",   "energy", "classification",
                 "snapshot_height", "n_max", "alpha", "e_elastic", "tau", "note"};
    const std::string note = spectrum_note(sp);
    for (const auto& ch : sp.channels) {
        t.rows.push_back({std::to_string(ch.n), side_label(ch.side),
                          cell(ch.n * sp.alpha), cell(ch.energy),
                          channel_class_label(ch.classification), cell(ch.snapshot_height),
                          std::to_string(sp.n_max), cell(sp.alpha), cell(sp.e_elastic),
                          cell(sp.tau), note});
    }
    return t;
}

Table transmit_table(const RunConfig& rc) {
    Table t;
    if (rc.sweep) {
        t.columns = {"v0", "b", "v1", "omega", "e_incident",
                     "total", "normalized", "open_count", "closed_count"};
        for (double v : sweep_values(*rc.sweep, rc.seed)) {
            BarrierConfig c = rc.barrier;
            set_barrier_field(c, rc.sweep->parameter, v);
            const TransmissionResult res = transmission_total(c);
            t.rows.push_back({cell(c.v0), cell(c.b), cell(c.v1), cell(c.omega),
                              cell(c.e_incident), cell(res.total), cell(res.normalized),
                              std::to_string(res.open_count),
                              std::to_string(res.closed_count)});
        }
        return t;
    }
    const TransmissionResult res = transmission_total(rc.barrier);
    t.columns = {"n", "sign", "energy", "k_n", "kappa_n", "snapshot_height",
                 "classification", "t_n", "total", "normalized", "open_count",
                 "closed_count"};
    for (const auto& ct : res.per_channel) {
        t.rows.push_back({std::to_string(ct.n), side_label(ct.side), cell(ct.energy),
                          cell(ct.k), cell(ct.kappa), cell(ct.snapshot_height),
                          channel_class_label(ct.classification), cell(ct.t),
                          cell(res.total), cell(res.normalized),
                          std::to_string(res.open_count),
                          std::to_string(res.closed_count)});
    }
    return t;
}

Table traverse_table(const RunConfig& rc) {
    const ChannelSpectrum sp = build_spectrum(rc.barrier);
    if (sp.degenerate)
        throw ValidationError(
            "traverse: spectrum is degenerate (v1 < omega); no transitions exist");
    Table t;
    t.columns = {"n", "m", "n_max", "omega", "regime", "t_plus", "t_minus",
                 "tan_theta_plus", "tan_theta_minus", "ratio"};

    std::vector<std::pair<int, int>> pairs;
    if (rc.traverse_n || rc.traverse_m) {
        if (!rc.traverse_n || !rc.traverse_m)
            throw ValidationError("traverse: n and m must be given together");
        pairs.emplace_back(*rc.traverse_n, *rc.traverse_m);
    } else {
        for (int n = 1; n <= sp.n_max; ++n)
            for (int m = 0; m < n; ++m) pairs.emplace_back(n, m);
    }

    const std::string empty;
    for (const auto& [n, m] : pairs) {
        const auto roots = traversal_exact(n, m, sp.n_max, sp.omega);
        t.rows.push_back({std::to_string(n), std::to_string(m), std::to_string(sp.n_max),
                          cell(sp.omega), "exact", cell(roots[0]), cell(roots[1]), empty,
                          empty, empty});
        if (n < sp.n_max) {
            const TraversalTimes low = traversal_low(n, m, sp.n_max, sp.tau);
            t.rows.push_back({std::to_string(n), std::to_string(m),
                              std::to_string(sp.n_max), cell(sp.omega), "low-frequency",
                              cell(low.t_plus), cell(low.t_minus), empty, empty, empty});
        }
        if (m > 0 && n < sp.n_max) {
            const HighFrequencySolution hi =
                traversal_high(n, m, sp.n_max, sp.omega, rc.branch);
            t.rows.push_back({std::to_string(n), std::to_string(m),
                              std::to_string(sp.n_max), cell(sp.omega), "high-frequency",
                              cell(hi.t_plus), cell(hi.t_minus), cell(hi.tan_theta_plus),
                              cell(hi.tan_theta_minus), cell(hi.ratio)});
        }
    }
    return t;
}

Table dos_table(const RunConfig& rc) {
    const ChannelSpectrum sp = build_spectrum(rc.barrier);
    Table t;
    t.columns = {"n", "n_alpha", "rho", "n_max", "alpha", "omega"};
    for (int n = -sp.n_max; n <= sp.n_max; ++n) {
        const StateDensity d = density_of_states(n, sp.alpha, sp.omega);
        t.rows.push_back({std::to_string(n), cell(n * sp.alpha),
                          d.unbounded ? "unbounded" : cell(d.value),
                          std::to_string(sp.n_max), cell(sp.alpha), cell(sp.omega)});
    }
    return t;
}

Table tg_table(const RunConfig& rc) {
    const TransmissionResult res = transmission_total(rc.barrier);
    const SidebandTable tg = tg_sidebands(rc.barrier, rc.cutoff_tol);
    const ChannelSpectrum& sp = res.spectrum;
    Table t;
    t.columns = {"method", "n", "sign", "energy", "weight", "transmission",
                 "classification", "n_max", "alpha", "e_elastic", "cutoff_tol"};
    const std::string empty;
    for (const auto& ct : res.per_channel) {
        t.rows.push_back({"channel", std::to_string(ct.n), side_label(ct.side),
                          cell(ct.energy), empty, cell(ct.t),
                          channel_class_label(ct.classification), std::to_string(sp.n_max),
                          cell(sp.alpha), cell(sp.e_elastic), cell(rc.cutoff_tol)});
    }
    for (const auto& row : tg.rows) {
        t.rows.push_back({"sideband", std::to_string(row.n), empty, cell(row.energy),
                          cell(row.weight), cell(row.transmission),
                          row.closed ? "closed" : "open", std::to_string(sp.n_max),
                          cell(sp.alpha), cell(sp.e_elastic), cell(rc.cutoff_tol)});
    }
    return t;
}

Table oracle_table(const RunConfig& rc) {
    const tdse::WavePacketState state = tdse::propagate(rc.barrier, rc.grid, rc.packet);
    const double fraction = tdse::transmitted_fraction(state, rc.barrier);
    const auto spectrum = tdse::transmitted_momentum_spectrum(state, rc.barrier);
    Table t;
    t.columns = {"k", "energy", "density", "transmitted_fraction", "norm_drift",
                 "final_time", "steps"};
    for (const auto& s : spectrum) {
        t.rows.push_back({cell(s.k), cell(s.energy), cell(s.density), cell(fraction),
                          cell(state.norm_drift), cell(state.time),
                          std::to_string(state.steps_taken)});
    }
    return t;
}

// ---------------------------------------------------------------- svg

struct Extent {
    double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
    void include(double x, double y) {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    }
};

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

class SvgWriter {
public:
    SvgWriter(Extent ext, std::string x_label, std::string y_label)
        : ext_(ext), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {
        const double pad_x = 0.08 * (ext_.x_hi - ext_.x_lo + 1e-300);
        const double pad_y = 0.08 * (ext_.y_hi - ext_.y_lo + 1e-300);
        ext_.x_lo -= pad_x;
        ext_.x_hi += pad_x;
        ext_.y_lo -= pad_y;
        ext_.y_hi += pad_y;
    }

    double px(double x) const {
        return kMargin + (x - ext_.x_lo) / (ext_.x_hi - ext_.x_lo) * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin -
               (y - ext_.y_lo) / (ext_.y_hi - ext_.y_lo) * (kHeight - 2 * kMargin);
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& colour) {
        if (pts.empty()) return;
        body_ << "<polyline fill=\"none\" stroke=\"" << colour
              << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) body_ << svg_coord(px(x)) << "," << svg_coord(py(y)) << " ";
        body_ << "\"/>\n";
    }

    void scatter(const std::vector<std::pair<double, double>>& pts,
                 const std::string& colour) {
        for (const auto& [x, y] : pts)
            body_ << "<circle cx=\"" << svg_coord(px(x)) << "\" cy=\"" << svg_coord(py(y))
                  << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
            << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
            << "\">\n<rect width=\"" << kWidth << "\" height=\"" << kHeight
            << "\" fill=\"white\"/>\n";
        // axes
        out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
            << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
            << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 8
            << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label_ << "</text>\n";
        out << "<text x=\"14\" y=\"" << kHeight / 2
            << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
            << kHeight / 2 << ")\">" << y_label_ << "</text>\n";
        // extent labels
        out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
            << "\" font-size=\"11\">" << svg_coord(ext_.x_lo) << "</text>\n";
        out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
            << "\" font-size=\"11\" text-anchor=\"end\">" << svg_coord(ext_.x_hi)
            << "</text>\n";
        out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
            << "\" font-size=\"11\" text-anchor=\"end\">" << svg_coord(ext_.y_lo)
            << "</text>\n";
        out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << svg_coord(ext_.y_hi)
            << "</text>\n";
        out << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    static constexpr int kWidth = 640;
    static constexpr int kHeight = 480;
    static constexpr int kMargin = 56;
    Extent ext_;
    std::string x_label_, y_label_;
    std::ostringstream body_;
};

size_t column_index(const Table& t, const std::string& name) {
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) return i;
    throw NumericalError("verify: column '" + name + "' missing from table");
}

std::string spectrum_svg(const RunConfig& rc, const Table& t) {
    const size_t na = column_index(t, "n_alpha");
    const size_t en = column_index(t, "energy");
    const size_t nm = column_index(t, "n_max");
    const size_t al = column_index(t, "alpha");
    const size_t ee = column_index(t, "e_elastic");
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : t.rows) {
        const double x = parse_double(row[na], "n_alpha");
        const double y = parse_double(row[en], "energy");
        pts.emplace_back(x, y);
        if (x != 0.0) pts.emplace_back(-x, y); // mirror: circle is even in n alpha
    }
    const double n_max = parse_double(t.rows.front()[nm], "n_max");
    const double alpha = parse_double(t.rows.front()[al], "alpha");
    const double e0 = parse_double(t.rows.front()[ee], "e_elastic");
    const double radius = n_max * alpha;

    Extent ext{-radius, radius, e0 - radius, e0 + radius};
    for (const auto& [x, y] : pts) ext.include(x, y);
    SvgWriter svg(ext, "n alpha", "channel energy");
    if (radius > 0.0) {
        std::vector<std::pair<double, double>> circle;
        for (int i = 0; i <= 256; ++i) {
            const double th = 2.0 * std::numbers::pi * i / 256;
            circle.emplace_back(radius * std::cos(th), e0 + radius * std::sin(th));
        }
        svg.polyline(circle, "#999999");
    }
    svg.scatter(pts, "#c0392b");
    (void)rc;
    return svg.finish();
}

std::string dos_svg(const RunConfig& rc, const Table& t) {
    const size_t na = column_index(t, "n_alpha");
    const size_t rh = column_index(t, "rho");
    const size_t nm = column_index(t, "n_max");
    const size_t al = column_index(t, "alpha");
    const size_t om = column_index(t, "omega");
    std::vector<std::pair<double, double>> pts;
    double y_cap = 0.0;
    for (const auto& row : t.rows) {
        if (row[rh] == "unbounded") continue;
        pts.emplace_back(parse_double(row[na], "n_alpha"), parse_double(row[rh], "rho"));
        y_cap = std::max(y_cap, pts.back().second);
    }
    const double n_max = parse_double(t.rows.front()[nm], "n_max");
    const double alpha = parse_double(t.rows.front()[al], "alpha");
    const double omega = parse_double(t.rows.front()[om], "omega");
    Extent ext{-n_max * alpha, n_max * alpha, 0.0, y_cap * 1.05};
    SvgWriter svg(ext, "n alpha", "density of states");
    // continuous 1/|x w| branches, clipped at the plot ceiling
    for (int sign : {-1, 1}) {
        std::vector<std::pair<double, double>> branch;
        const double x_edge = n_max * alpha;
        const double x_inner = 1.0 / (omega * (y_cap * 1.05));
        for (int i = 0; i <= 200; ++i) {
            const double x = x_inner + (x_edge - x_inner) * i / 200.0;
            branch.emplace_back(sign * x, 1.0 / (omega * x));
        }
        svg.polyline(branch, "#2980b9");
    }
    svg.scatter(pts, "#c0392b");
    (void)rc;
    return svg.finish();
}

std::string sweep_svg(const RunConfig& rc, const Table& t, const std::string& y_col) {
    if (!rc.sweep)
        throw ValidationError("format svg for '" + rc.command + "' requires a sweep");
    const size_t xi = column_index(t, rc.sweep->parameter);
    const size_t yi = column_index(t, y_col);
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : t.rows)
        pts.emplace_back(parse_double(row[xi], "sweep"), parse_double(row[yi], y_col));
    Extent ext{pts.front().first, pts.front().first, pts.front().second,
               pts.front().second};
    for (const auto& [x, y] : pts) ext.include(x, y);
    SvgWriter svg(ext, rc.sweep->parameter, y_col);
    svg.polyline(pts, "#2980b9");
    svg.scatter(pts, "#c0392b");
    return svg.finish();
}

// ---------------------------------------------------------------- verify

void verify_static(const RunConfig& rc, const Table& t) {
    const size_t v0 = column_index(t, "v0");
    const size_t b = column_index(t, "b");
    const size_t e = column_index(t, "e_incident");
    const size_t v1 = column_index(t, "v1");
    const size_t om = column_index(t, "omega");
    const size_t tr = column_index(t, "transmission");
    const size_t rf = column_index(t, "reflection");
    const size_t op = column_index(t, "transmission_opaque");
    double prev = 2.0;
    const bool b_sweep = rc.sweep && rc.sweep->parameter == "b";
    for (const auto& row : t.rows) {
        const double T = parse_double(row[tr], "transmission");
        const double R = parse_double(row[rf], "reflection");
        const double To = parse_double(row[op], "transmission_opaque");
        if (!(T >= 0.0 && T <= 1.0))
            throw NumericalError("verify static: transmission outside [0, 1]");
        if (!(To >= 0.0 && To <= 1.0))
            throw NumericalError("verify static: opaque transmission outside [0, 1]");
        if (std::abs(T + R - 1.0) > 1e-12)
            throw NumericalError("verify static: flux conservation violated");
        BarrierConfig c;
        c.v0 = parse_double(row[v0], "v0");
        c.b = parse_double(row[b], "b");
        c.v1 = parse_double(row[v1], "v1");
        c.omega = parse_double(row[om], "omega");
        c.e_incident = parse_double(row[e], "e_incident");
        if (format_full(transmission_static(c)) != row[tr])
            throw NumericalError("verify static: transmission does not reproduce");
        if (b_sweep && !(T < prev))
            throw NumericalError("verify static: transmission not decreasing in b");
        if (b_sweep) prev = T;
    }
}

void verify_spectrum_rows(const Table& t) {
    const size_t n = column_index(t, "n");
    const size_t en = column_index(t, "energy");
    const size_t na = column_index(t, "n_alpha");
    const size_t nm = column_index(t, "n_max");
    const size_t ee = column_index(t, "e_elastic");
    const size_t al = column_index(t, "alpha");
    if (t.rows.empty()) throw NumericalError("verify spectrum: no channels");
    const int n_max = static_cast<int>(parse_double(t.rows.front()[nm], "n_max"));
    const double e0 = parse_double(t.rows.front()[ee], "e_elastic");
    const double alpha = parse_double(t.rows.front()[al], "alpha");
    const double radius = n_max * alpha;
    const size_t expected = n_max == 0 ? 1 : static_cast<size_t>(2 * n_max + 1);
    if (t.rows.size() != expected)
        throw NumericalError("verify spectrum: channel count is not 2N+1");
    const double scale = std::max(1.0, radius * radius);
    std::vector<double> offsets;
    for (const auto& row : t.rows) {
        const double energy = parse_double(row[en], "energy");
        const double n_alpha = parse_double(row[na], "n_alpha");
        const double resid =
            std::abs((energy - e0) * (energy - e0) + n_alpha * n_alpha - radius * radius);
        if (resid > 1e-12 * scale)
            throw NumericalError("verify spectrum: energy-circle identity violated (n=" +
                                 row[n] + ")");
        if (energy < e0 - radius - 1e-12 || energy > e0 + radius + 1e-12)
            throw NumericalError("verify spectrum: energy outside the band");
        offsets.push_back(energy - e0);
    }
    // offsets must be closed under negation
    for (double o : offsets) {
        bool found = false;
        for (double p : offsets)
            if (std::abs(p + o) <= 1e-12 * std::max(1.0, std::abs(o))) {
                found = true;
                break;
            }
        if (!found)
            throw NumericalError("verify spectrum: offsets not symmetric about E_N");
    }
}

void verify_transmit(const RunConfig& rc, const Table& t) {
    if (rc.sweep) {
        const size_t tot = column_index(t, "total");
        const size_t oc = column_index(t, "open_count");
        for (const auto& row : t.rows) {
            if (!(parse_double(row[tot], "total") >= 0.0))
                throw NumericalError("verify transmit: negative total");
            if (std::stoi(row[oc]) < 1)
                throw NumericalError("verify transmit: no open channels");
        }
        return;
    }
    const size_t tn = column_index(t, "t_n");
    const size_t cl = column_index(t, "classification");
    const size_t tot = column_index(t, "total");
    double sum = 0.0;
    for (const auto& row : t.rows) {
        const double v = parse_double(row[tn], "t_n");
        if (!(v >= 0.0 && v <= 1.0))
            throw NumericalError("verify transmit: channel transmission outside [0, 1]");
        if (row[cl] != "closed") sum += v;
    }
    const double total = parse_double(t.rows.front()[tot], "total");
    if (std::abs(sum - total) > 1e-12 * std::max(1.0, std::abs(total)))
        throw NumericalError("verify transmit: total does not match channel sum");
}

void verify_traverse(const Table& t) {
    const size_t n_i = column_index(t, "n");
    const size_t m_i = column_index(t, "m");
    const size_t nm_i = column_index(t, "n_max");
    const size_t om_i = column_index(t, "omega");
    const size_t rg = column_index(t, "regime");
    const size_t tp = column_index(t, "t_plus");
    const size_t tm = column_index(t, "t_minus");
    const size_t ra = column_index(t, "ratio");
    for (const auto& row : t.rows) {
        const int n = std::stoi(row[n_i]);
        const int m = std::stoi(row[m_i]);
        const int n_max = std::stoi(row[nm_i]);
        const double omega = parse_double(row[om_i], "omega");
        if (!row[tp].empty() && !(parse_double(row[tp], "t_plus") > 0.0))
            throw NumericalError("verify traverse: non-positive duration");
        if (row[rg] == "low-frequency" && row[tp] != row[tm])
            throw NumericalError("verify traverse: low-frequency t_plus != t_minus");
        if (row[rg] == "exact") {
            for (size_t col : {tp, tm}) {
                const double T = parse_double(row[col], "exact root");
                const double resid =
                    std::cos(std::acos(static_cast<double>(n) / n_max) + omega * T) -
                    static_cast<double>(m) / n_max;
                if (std::abs(resid) > 1e-9)
                    throw NumericalError("verify traverse: exact root residual too large");
            }
        }
        if (row[rg] == "high-frequency" && !row[ra].empty()) {
            if (!(parse_double(row[ra], "ratio") < 1.0))
                throw NumericalError("verify traverse: high-frequency ratio not < 1");
            const double A = static_cast<double>(n_max) * n_max -
                             static_cast<double>(n) * n - static_cast<double>(m) * m;
            const double B =
                n * std::sqrt(static_cast<double>(n_max) * n_max - static_cast<double>(n) * n);
            const double C = static_cast<double>(n) * n - static_cast<double>(m) * m;
            const double scale =
                std::max({std::abs(A), std::abs(B), std::abs(C)});
            const size_t cols[] = {column_index(t, "tan_theta_plus"),
                                   column_index(t, "tan_theta_minus")};
            for (size_t col : cols) {
                if (row[col].empty()) continue;
                const double tan = parse_double(row[col], "tan_theta");
                if (std::abs(A * tan * tan + 2.0 * B * tan + C) > 1e-9 * scale)
                    throw NumericalError("verify traverse: quadratic residual too large");
            }
        }
    }
}

void verify_dos(const Table& t) {
    const size_t n_i = column_index(t, "n");
    const size_t rh = column_index(t, "rho");
    const size_t al = column_index(t, "alpha");
    const size_t om = column_index(t, "omega");
    for (const auto& row : t.rows) {
        const int n = std::stoi(row[n_i]);
        if (n == 0) {
            if (row[rh] != "unbounded")
                throw NumericalError("verify dos: band centre must be the unbounded sentinel");
            continue;
        }
        const double rho = parse_double(row[rh], "rho");
        const double alpha = parse_double(row[al], "alpha");
        const double omega = parse_double(row[om], "omega");
        if (std::abs(rho * std::abs(n * alpha * omega) - 1.0) > 1e-12)
            throw NumericalError("verify dos: rho |n alpha omega| != 1");
    }
}

void verify_tg(const RunConfig& rc, const Table& t) {
    const size_t me = column_index(t, "method");
    const size_t n_i = column_index(t, "n");
    const size_t we = column_index(t, "weight");
    const size_t en = column_index(t, "energy");
    const size_t al = column_index(t, "alpha");
    double weight_sum = 0.0;
    std::vector<std::pair<int, std::string>> weights;
    std::vector<std::pair<int, double>> energies;
    double alpha = 0.0;
    for (const auto& row : t.rows) {
        if (row[me] != "sideband") continue;
        weight_sum += parse_double(row[we], "weight");
        weights.emplace_back(std::stoi(row[n_i]), row[we]);
        energies.emplace_back(std::stoi(row[n_i]), parse_double(row[en], "energy"));
        alpha = parse_double(row[al], "alpha");
    }
    if (weight_sum < 1.0 - rc.cutoff_tol || weight_sum > 1.0 + 1e-12)
        throw NumericalError("verify tg-compare: weight sum outside [1 - tol, 1]");
    for (const auto& [n, w] : weights) {
        for (const auto& [n2, w2] : weights)
            if (n2 == -n && w2 != w)
                throw NumericalError("verify tg-compare: weights not symmetric in n");
    }
    for (const auto& [n, e] : energies)
        for (const auto& [n2, e2] : energies)
            if (n2 == n + 1 && std::abs(e2 - e - alpha) > 1e-12 * std::max(1.0, std::abs(e)))
                throw NumericalError("verify tg-compare: sideband spacing is not alpha");
    // channel rows reuse the spectrum checks via a projected table
    Table channels;
    channels.columns = {"n", "sign", "energy", "n_alpha", "n_max", "alpha", "e_elastic"};
    const size_t sg = column_index(t, "sign");
    const size_t nm = column_index(t, "n_max");
    const size_t ee = column_index(t, "e_elastic");
    for (const auto& row : t.rows) {
        if (row[me] != "channel") continue;
        const double nv = parse_double(row[n_i], "n");
        channels.rows.push_back({row[n_i], row[sg], row[en],
                                 format_full(nv * parse_double(row[al], "alpha")), row[nm],
                                 row[al], row[ee]});
    }
    if (!channels.rows.empty()) verify_spectrum_rows(channels);
}

void verify_oracle(const Table& t) {
    const size_t fr = column_index(t, "transmitted_fraction");
    const size_t dr = column_index(t, "norm_drift");
    const size_t de = column_index(t, "density");
    const size_t k_i = column_index(t, "k");
    double prev_k = 0.0;
    for (const auto& row : t.rows) {
        const double f = parse_double(row[fr], "transmitted_fraction");
        if (!(f >= 0.0 && f <= 1.0))
            throw NumericalError("verify oracle: transmitted fraction outside [0, 1]");
        if (!(parse_double(row[dr], "norm_drift") <= 1e-10))
            throw NumericalError("verify oracle: norm drift above 1e-10");
        if (!(parse_double(row[de], "density") >= 0.0))
            throw NumericalError("verify oracle: negative momentum density");
        const double k = parse_double(row[k_i], "k");
        if (!(k > prev_k)) throw NumericalError("verify oracle: k grid not ascending");
        prev_k = k;
    }
}

} // namespace

Table build_table(const RunConfig& rc) {
    if (rc.command == "static") return static_table(rc);
    if (rc.command == "spectrum") return spectrum_table(rc);
    if (rc.command == "transmit") return transmit_table(rc);
    if (rc.command == "traverse") return traverse_table(rc);
    if (rc.command == "dos") return dos_table(rc);
    if (rc.command == "tg-compare") return tg_table(rc);
    if (rc.command == "oracle") return oracle_table(rc);
    throw ValidationError("unknown command: " + rc.command);
}

std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (size_t i = 0; i < t.columns.size(); ++i)
        out << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
    return out.str();
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cellv;
        std::istringstream ls(line);
        while (std::getline(ls, cellv, ',')) cells.push_back(cellv);
        if (line.back() == ',') cells.push_back("");
        if (header) {
            t.columns = cells;
            header = false;
        } else {
            cells.resize(t.columns.size());
            t.rows.push_back(cells);
        }
    }
    return t;
}

std::string render_json(const RunConfig& rc, const Table& t) {
    json doc;
    doc["command"] = rc.command;
    doc["seed"] = rc.seed;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& row : t.rows) {
        json jrow = json::array();
        for (const auto& c : row) {
            if (c.empty()) {
                jrow.push_back(nullptr);
                continue;
            }
            if (c.find_first_not_of("-0123456789") == std::string::npos) {
                try {
                    jrow.push_back(std::stoll(c));
                    continue;
                } catch (const std::exception&) {
                }
            }
            try {
                size_t pos = 0;
                const double v = std::stod(c, &pos);
                if (pos == c.size()) {
                    jrow.push_back(v);
                    continue;
                }
            } catch (const std::exception&) {
            }
            jrow.push_back(c);
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(1) + "\n";
}

std::string render_svg(const RunConfig& rc, const Table& t) {
    if (rc.command == "spectrum") return spectrum_svg(rc, t);
    if (rc.command == "dos") return dos_svg(rc, t);
    if (rc.command == "static") return sweep_svg(rc, t, "transmission");
    if (rc.command == "transmit") return sweep_svg(rc, t, "total");
    throw ValidationError("format svg is not supported for command '" + rc.command + "'");
}

void verify_table(const RunConfig& rc, const Table& t) {
    if (rc.command == "static") verify_static(rc, t);
    else if (rc.command == "spectrum") verify_spectrum_rows(t);
    else if (rc.command == "transmit") verify_transmit(rc, t);
    else if (rc.command == "traverse") verify_traverse(t);
    else if (rc.command == "dos") verify_dos(t);
    else if (rc.command == "tg-compare") verify_tg(rc, t);
    else if (rc.command == "oracle") verify_oracle(t);
    else throw ValidationError("unknown command: " + rc.command);
}

RunConfig parse_run_config(const std::string& json_text, const std::string& command) {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        throw ValidationError("unknown command: " + command);

    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be an object");

    RunConfig rc;
    rc.command = command;
    rc.barrier.v0 = require_number(j, "barrier.v0");
    rc.barrier.b = require_number(j, "barrier.b");
    rc.barrier.v1 = optional_number(j["barrier"], "v1", 0.0);
    rc.barrier.omega = optional_number(j["barrier"], "omega", 1.0);
    rc.barrier.e_incident = require_number(j, "barrier.e_incident");
    if (command != "oracle") rc.barrier.validate();

    if (j.contains("sweep")) {
        if (command != "static" && command != "transmit")
            throw ValidationError("config field sweep: only supported for static/transmit");
        const json& s = j["sweep"];
        SweepSpec sweep;
        if (!s.contains("parameter") || !s["parameter"].is_string())
            throw ValidationError("config field sweep.parameter: missing or not a string");
        sweep.parameter = s["parameter"].get<std::string>();
        if (std::find(kSweepable.begin(), kSweepable.end(), sweep.parameter) ==
            kSweepable.end())
            throw ValidationError("config field sweep.parameter: unknown barrier field '" +
                                  sweep.parameter + "'");
        sweep.start = require_number(s, "start");
        sweep.stop = require_number(s, "stop");
        sweep.count = static_cast<int>(require_number(s, "count"));
        if (sweep.count < 2)
            throw ValidationError("config field sweep.count: must be >= 2");
        if (s.contains("spacing")) sweep.spacing = s["spacing"].get<std::string>();
        if (sweep.spacing != "linear" && sweep.spacing != "log" &&
            sweep.spacing != "random")
            throw ValidationError("config field sweep.spacing: must be linear|log|random");
        if (sweep.spacing == "log" && (sweep.start <= 0.0 || sweep.stop <= 0.0))
            throw ValidationError("config field sweep: log spacing needs positive bounds");
        rc.sweep = sweep;
    }

    rc.cutoff_tol = optional_number(j, "cutoff_tol", 1e-6);
    rc.branch = static_cast<int>(optional_number(j, "branch", 1.0));
    if (j.contains("traverse")) {
        const json& tr = j["traverse"];
        if (tr.contains("n")) rc.traverse_n = static_cast<int>(require_number(tr, "n"));
        if (tr.contains("m")) rc.traverse_m = static_cast<int>(require_number(tr, "m"));
    }

    if (command == "oracle") {
        if (!j.contains("grid") || !j.contains("packet"))
            throw ValidationError("config: oracle requires grid and packet sections");
        const json& g = j["grid"];
        rc.grid.x_min = require_number(g, "x_min");
        rc.grid.x_max = require_number(g, "x_max");
        rc.grid.points = static_cast<int>(require_number(g, "points"));
        rc.grid.dt = require_number(g, "dt");
        rc.grid.steps = static_cast<int>(optional_number(g, "steps", 0.0));
        const json& p = j["packet"];
        rc.packet.center = require_number(p, "center");
        rc.packet.sigma = require_number(p, "sigma");
        rc.packet.k_mean = require_number(p, "k_mean");
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw ValidationError("config field seed: must be an integer");
        rc.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("format")) rc.format = j["format"].get<std::string>();
    if (j.contains("out")) rc.out_path = j["out"].get<std::string>();
    if (j.contains("verify")) rc.verify = j["verify"].get<bool>();

    if (rc.format != "csv" && rc.format != "json" && rc.format != "svg")
        throw ValidationError("config field format: must be csv|json|svg");
    if (rc.format == "svg" && !command_supports_svg(command))
        throw ValidationError("format svg is not supported for command '" + command + "'");
    return rc;
}

int run(const RunConfig& rc) {
    const Table table = build_table(rc);
    std::string payload;
    if (rc.format == "csv") payload = render_csv(table);
    else if (rc.format == "json") payload = render_json(rc, table);
    else payload = render_svg(rc, table);

    if (rc.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(rc.out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot open output file: " + rc.out_path);
        out << payload;
    }

    if (rc.verify) {
        if (rc.format == "csv" && !rc.out_path.empty()) {
            std::ifstream in(rc.out_path, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            verify_table(rc, parse_csv(buf.str()));
        } else if (rc.format == "csv") {
            verify_table(rc, parse_csv(payload));
        } else {
            verify_table(rc, table);
        }
    }
    return 0;
}

} // namespace dynbarrier::cli

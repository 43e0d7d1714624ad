#include "cli.hpp"

#include <polarstroke/diffgeo.hpp>
#include <polarstroke/error.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace polarstroke::cli {

using nlohmann::json;

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

const std::array<std::pair<Layer, std::string_view>, 6> kLayerNames{{
    {Layer::Generator, "generator"},
    {Layer::Ribs, "ribs"},
    {Layer::PositiveBoundary, "positive_boundary"},
    {Layer::NegativeBoundary, "negative_boundary"},
    {Layer::OffsetCusps, "offset_cusps"},
    {Layer::ExtraordinaryMarkers, "extraordinary_markers"},
}};

std::string_view default_color(Layer layer) {
    switch (layer) {
    case Layer::Generator: return "#000000";
    case Layer::Ribs: return "#7f7f7f";
    case Layer::PositiveBoundary: return "#1f77b4";
    case Layer::NegativeBoundary: return "#2ca02c";
    case Layer::OffsetCusps: return "#d62728";
    case Layer::ExtraordinaryMarkers: return "#ff7f0e";
    }
    return "#000000";
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json nullable(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

std::string_view origin_name(RibOrigin o) { return o == RibOrigin::Interval ? "interval" : "cusp_fan"; }

std::string_view edge_name(EdgeKind k) {
    switch (k) {
    case EdgeKind::Interval: return "interval";
    case EdgeKind::CuspFan: return "cusp_fan";
    case EdgeKind::Corner: return "corner";
    }
    return "interval";
}

json cusp_json(const OffsetCusp& c) {
    return {
        {"segment", c.segment_index},
        {"t", c.t},
        {"branch", static_cast<int>(c.branch)},
        {"position", point_json(c.position)},
        {"kappa_g", c.kappa_g},
        {"touching", c.touching},
    };
}

json facet_json(const FacetRecord& f) {
    json cusps = json::array();
    for (const auto& c : f.straddled_cusps) cusps.push_back(c.path_parameter());
    return {
        {"branch", static_cast<int>(f.branch)},
        {"vertex", f.vertex_index},
        {"angle", f.angle},
        {"theta_local", f.theta_local},
        {"class", to_string(f.classification)},
        {"junction", f.junction},
        {"straddled_cusps", cusps},
    };
}

json counts_json(const CuspReport& report) {
    json counts = json::array();
    for (const auto& c : report.counts) {
        counts.push_back({
            {"segment", c.segment_index},
            {"kind", to_string(c.kind)},
            {"positive", c.positive},
            {"negative", c.negative},
            {"worst_case", c.worst_case},
        });
    }
    return counts;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- SVG ----

struct Bounds {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(Point2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
};

std::string num(double v) { return format_number(v); }

std::string xy(Point2 p) { return num(p.x) + "," + num(p.y); }

std::string polyline_points(const std::vector<Point2>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += xy(pts[i]);
    }
    return s;
}

std::string segment_path_data(const Path& path) {
    std::string d = "M " + xy(path[0].start());
    for (const auto& seg : path.segments()) {
        switch (seg.kind()) {
        case SegmentKind::Line: d += " L " + xy(seg.end()); break;
        case SegmentKind::Quadratic: d += " Q " + xy(seg.point(1)) + " " + xy(seg.end()); break;
        case SegmentKind::Cubic:
            d += " C " + xy(seg.point(1)) + " " + xy(seg.point(2)) + " " + xy(seg.end());
            break;
        case SegmentKind::RationalQuadratic:
            // No conic primitive in SVG path data; flatten.
            for (int i = 1; i <= 64; ++i) d += " L " + xy(evaluate(seg, i / 64.0));
            break;
        }
    }
    return d;
}

Bounds drawn_bounds(const Path& path, const Quadrangulation& quad) {
    Bounds b;
    for (const auto& seg : path.segments())
        for (double t = 0.0; t <= 1.0; t += 1.0 / 64.0) b.add(evaluate(seg, t));
    for (const auto& r : quad.ribs) {
        b.add(r.P);
        b.add(r.N);
    }
    return b;
}

} // namespace

std::string_view to_string(Layer layer) {
    for (const auto& [l, name] : kLayerNames)
        if (l == layer) return name;
    return "generator";
}

std::optional<Layer> parse_layer(std::string_view name) {
    for (const auto& [l, n] : kLayerNames)
        if (n == name) return l;
    return std::nullopt;
}

const std::vector<Layer>& all_layers() {
    static const std::vector<Layer> layers = [] {
        std::vector<Layer> v;
        for (const auto& entry : kLayerNames) v.push_back(entry.first);
        return v;
    }();
    return layers;
}

void RenderOptions::validate() const {
    if (show.empty()) throw Error(ErrorCode::InvalidStyle, "no render layer enabled");
    if (viewport && !(viewport->x1 > viewport->x0 && viewport->y1 > viewport->y0))
        throw Error(ErrorCode::InvalidStyle, "empty viewport");
}

std::string RenderOptions::color(Layer layer) const {
    auto it = colors.find(layer);
    return it != colors.end() ? it->second : std::string(default_color(layer));
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    return fmt::format("{:.9g}", v);
}

std::string tessellation_json(const Quadrangulation& quad) {
    json ribs = json::array();
    for (const auto& r : quad.ribs) {
        ribs.push_back({
            {"segment", r.segment_index},
            {"t", r.t},
            {"origin", origin_name(r.origin)},
            {"owner", r.owner},
            {"step", r.step},
            {"g", point_json(r.g)},
            {"P", point_json(r.P)},
            {"N", point_json(r.N)},
            {"psi", r.psi},
        });
    }
    json edges = json::array();
    for (const auto& e : quad.edges)
        edges.push_back({{"kind", edge_name(e.kind)}, {"owner", e.owner}, {"theta", e.theta}});
    json intervals = json::array();
    for (std::size_t k = 0; k < quad.intervals.size(); ++k) {
        const auto& iv = quad.intervals[k];
        const auto& plan = quad.interval_plans[k];
        intervals.push_back({
            {"segment", iv.segment_index},
            {"t_lo", iv.t_lo},
            {"t_hi", iv.t_hi},
            {"psi_lo", iv.psi_lo},
            {"psi_hi", iv.psi_hi},
            {"rotation", plan.rotation},
            {"steps", plan.steps},
            {"theta", plan.theta},
        });
    }
    json fans = json::array();
    for (const auto& f : quad.fans) {
        fans.push_back({
            {"segment", f.cusp.segment_index},
            {"t", f.cusp.t},
            {"position", point_json(f.cusp.position)},
            {"psi_in", f.cusp.psi_in},
            {"psi_out", f.cusp.psi_out},
            {"steps", f.plan.steps},
            {"theta", f.plan.theta},
        });
    }
    return dump({
        {"width", quad.style.width},
        {"quality_deg", quad.style.quality / kDegree},
        {"ribs", ribs},
        {"edges", edges},
        {"intervals", intervals},
        {"fans", fans},
    });
}

std::string audit_summary(const AuditReport& report) {
    return fmt::format("ordinary_max_ratio={} violations={} extraordinary={} cusps={}",
                       format_number(report.max_ordinary_ratio), report.violations.size(),
                       report.extraordinary_count, report.cusp_report.cusps.size());
}

std::string audit_json(const AuditReport& report, const StrokeStyle& style) {
    json facets = json::array();
    for (const auto& f : report.facets) facets.push_back(facet_json(f));
    json violations = json::array();
    for (const auto& f : report.violations) violations.push_back(facet_json(f));
    json cusps = json::array();
    for (const auto& c : report.cusp_report.cusps) cusps.push_back(cusp_json(c));
    json count_violations = json::array();
    for (const auto& v : report.cusp_count_violations) {
        count_violations.push_back({
            {"segment", v.segment_index},
            {"kind", to_string(v.kind)},
            {"found", v.found},
            {"allowed", v.allowed},
        });
    }
    return dump({
        {"width", style.width},
        {"quality_deg", style.quality / kDegree},
        {"summary",
         {
             {"ordinary_max_ratio", report.max_ordinary_ratio},
             {"violations", report.violations.size()},
             {"extraordinary", report.extraordinary_count},
             {"cusps", report.cusp_report.cusps.size()},
             {"ribs", report.rib_count},
         }},
        {"facets", facets},
        {"violations", violations},
        {"cusps", cusps},
        {"cusp_counts", counts_json(report.cusp_report)},
        {"cusp_count_violations", count_violations},
        {"warnings", report.warnings},
    });
}

std::string cusps_json(const CuspReport& report) {
    json cusps = json::array();
    for (const auto& c : report.cusps) cusps.push_back(cusp_json(c));
    return dump(cusps);
}

std::string threshold_json(const Path& path) {
    json rows = json::array();
    for (std::size_t i = 0; i < path.size(); ++i) {
        rows.push_back({
            {"segment", i},
            {"kind", to_string(path[i].kind())},
            {"positive", nullable(cusp_threshold_width(path[i], Branch::Positive))},
            {"negative", nullable(cusp_threshold_width(path[i], Branch::Negative))},
        });
    }
    return dump(rows);
}

std::string render_svg(const Path& path, const Quadrangulation& quad, const AuditReport& report,
                       const RenderOptions& options) {
    options.validate();
    Viewport vp;
    if (options.viewport) {
        vp = *options.viewport;
    } else {
        Bounds b = drawn_bounds(path, quad);
        const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-9});
        const double margin = 0.05 * span;
        vp = {b.x0 - margin, b.y0 - margin, b.x1 + margin, b.y1 + margin};
    }
    const double vw = vp.x1 - vp.x0;
    const double vh = vp.y1 - vp.y0;
    const double scale = 800.0 / std::max(vw, vh);
    const double marker = 4.0 / scale;
    const auto on = [&](Layer l) { return options.show.count(l) > 0; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // Flip y so the drawing matches the mathematical orientation of the input.
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(vw * scale)
      << "\" height=\"" << num(vh * scale) << "\" viewBox=\"" << num(vp.x0) << ' ' << num(-vp.y1) << ' ' << num(vw)
      << ' ' << num(vh) << "\">\n";
    s << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";

    for (Layer layer : all_layers()) {
        if (!on(layer)) continue;
        const std::string color = options.color(layer);
        s << "<g id=\"" << to_string(layer) << "\"";
        switch (layer) {
        case Layer::Generator:
            s << " stroke=\"" << color << "\">\n";
            s << "<path vector-effect=\"non-scaling-stroke\" stroke-width=\"1.5\" d=\"" << segment_path_data(path)
              << "\"/>\n";
            break;
        case Layer::Ribs:
            s << " stroke=\"" << color << "\" stroke-width=\"0.5\">\n";
            for (const auto& r : quad.ribs)
                s << "<line vector-effect=\"non-scaling-stroke\" x1=\"" << num(r.P.x) << "\" y1=\"" << num(r.P.y)
                  << "\" x2=\"" << num(r.N.x) << "\" y2=\"" << num(r.N.y) << "\"/>\n";
            break;
        case Layer::PositiveBoundary:
        case Layer::NegativeBoundary: {
            const auto& pts = layer == Layer::PositiveBoundary ? quad.positive_boundary : quad.negative_boundary;
            s << " stroke=\"" << color << "\">\n";
            s << "<polyline vector-effect=\"non-scaling-stroke\" stroke-width=\"1\" points=\""
              << polyline_points(pts) << "\"/>\n";
            break;
        }
        case Layer::OffsetCusps:
            s << " fill=\"" << color << "\" stroke=\"none\">\n";
            for (const auto& c : report.cusp_report.cusps)
                s << "<circle cx=\"" << num(c.position.x) << "\" cy=\"" << num(c.position.y) << "\" r=\""
                  << num(marker) << "\"/>\n";
            break;
        case Layer::ExtraordinaryMarkers:
            s << " stroke=\"" << color << "\">\n";
            for (const auto& f : report.facets) {
                if (f.classification != FacetClass::Extraordinary) continue;
                const Point2 p = quad.ribs.at(f.vertex_index).boundary(f.branch);
                s << "<circle class=\"extraordinary\" vector-effect=\"non-scaling-stroke\" stroke-width=\"1.5\" cx=\""
                  << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(1.5 * marker) << "\"/>\n";
            }
            break;
        }
        s << "</g>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

// ---- command line ----

namespace {

struct IOFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    std::string input;
    double width = std::numeric_limits<double>::quiet_NaN();
    double q_deg = 4.0;
    std::string output;
};

std::string read_file(const std::string& name) {
    std::ifstream in(name, std::ios::binary);
    if (!in) throw IOFailure("cannot read " + name);
    std::ostringstream s;
    s << in.rdbuf();
    if (in.bad()) throw IOFailure("cannot read " + name);
    return s.str();
}

void write_file(const std::string& name, const std::string& text) {
    std::ofstream out(name, std::ios::binary);
    out << text;
    out.flush();
    if (!out) throw IOFailure("cannot write " + name);
}

void emit(const std::string& output, const std::string& text, std::ostream& out) {
    if (output.empty() || output == "-")
        out << text;
    else
        write_file(output, text);
}

StrokeStyle make_style(const CommonArgs& a) {
    StrokeStyle style;
    style.width = a.width;
    style.quality = a.q_deg * kDegree;
    style.validate();
    return style;
}

RenderOptions make_render_options(const std::vector<std::string>& show, const std::vector<std::string>& colors,
                                  const std::string& viewport) {
    RenderOptions opt;
    for (const auto& item : show) {
        std::stringstream ss(item);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            auto layer = parse_layer(name);
            if (!layer) throw Error(ErrorCode::InvalidStyle, "unknown layer '" + name + "'");
            opt.show.insert(*layer);
        }
    }
    for (const auto& c : colors) {
        const auto eq = c.find('=');
        auto layer = eq == std::string::npos ? std::nullopt : parse_layer(c.substr(0, eq));
        if (!layer) throw Error(ErrorCode::InvalidStyle, "bad --color '" + c + "', expected LAYER=COLOR");
        opt.colors[*layer] = c.substr(eq + 1);
    }
    if (!viewport.empty()) {
        Viewport v;
        char comma[3];
        std::istringstream in(viewport);
        in >> v.x0 >> comma[0] >> v.y0 >> comma[1] >> v.x1 >> comma[2] >> v.y1;
        if (!in || comma[0] != ',' || comma[1] != ',' || comma[2] != ',')
            throw Error(ErrorCode::InvalidStyle, "bad --viewport '" + viewport + "', expected X0,Y0,X1,Y1");
        opt.viewport = v;
    }
    opt.validate();
    return opt;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polar stroking of Bezier paths with facet-angle auditing", "polarstroke"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string format = "json";
    std::string json_out;
    bool threshold = false;
    std::vector<std::string> show;
    std::vector<std::string> colors;
    std::string viewport;

    auto add_common = [&](CLI::App* sub, bool width_required) {
        sub->add_option("input", a.input, "Path file (SVG path data or JSON segment list)")->required();
        auto* w = sub->add_option("--width", a.width, "Stroke width in user units");
        if (width_required) w->required();
        sub->add_option("--q-deg", a.q_deg, "Tangent angle step threshold in degrees")->capture_default_str();
    };

    auto* tess = app.add_subcommand("tessellate", "Write the rib tessellation");
    add_common(tess, true);
    tess->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "svg"}));
    tess->add_option("-o,--output", a.output, "Output file (default stdout)");

    auto* aud = app.add_subcommand("audit", "Check facet angles against the 2 theta bound");
    add_common(aud, true);
    aud->add_option("--json-out", json_out, "Write the full report here");

    auto* cus = app.add_subcommand("cusps", "List offset cusps or per-branch threshold widths");
    add_common(cus, false);
    cus->add_flag("--threshold", threshold, "Report per-branch threshold widths; --width is ignored");
    cus->add_option("-o,--output", a.output, "Output file (default stdout)");

    auto* ren = app.add_subcommand("render", "Layered SVG rendering");
    add_common(ren, true);
    std::vector<std::string> default_show;
    for (Layer l : all_layers()) default_show.emplace_back(to_string(l));
    show = default_show;
    ren->add_option("--show", show, "Comma-separated layers")->delimiter(',')->expected(0, -1);
    ren->add_option("--color", colors, "LAYER=COLOR, repeatable");
    ren->add_option("--viewport", viewport, "X0,Y0,X1,Y1 (default: fit)");
    ren->add_option("-o,--output", a.output, "Output file (default stdout)");

    std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        // Usage problems are reported before the input is touched.
        std::optional<StrokeStyle> style;
        std::optional<RenderOptions> render_options;
        if (cus->parsed()) {
            if (!threshold && !(a.width > 0.0 && std::isfinite(a.width)))
                throw Error(ErrorCode::InvalidStyle, "cusps needs a positive --width or --threshold");
        } else {
            style = make_style(a);
        }
        if (ren->parsed()) render_options = make_render_options(show, colors, viewport);

        const Path path = parse_path(read_file(a.input));

        if (tess->parsed()) {
            const Quadrangulation quad = tessellate_path(path, *style);
            if (format == "svg") {
                RenderOptions opt;
                opt.show = {Layer::Generator, Layer::Ribs, Layer::PositiveBoundary, Layer::NegativeBoundary};
                emit(a.output, render_svg(path, quad, audit(path, *style), opt), out);
            } else {
                emit(a.output, tessellation_json(quad), out);
            }
            return kOk;
        }
        if (aud->parsed()) {
            const AuditReport report = audit(path, *style);
            if (!json_out.empty()) write_file(json_out, audit_json(report, *style));
            out << audit_summary(report) << "\n";
            for (const auto& w : report.warnings) err << "warning: " << w << "\n";
            return report.violations.empty() ? kOk : kViolations;
        }
        if (cus->parsed()) {
            if (threshold) {
                emit(a.output, threshold_json(path), out);
            } else {
                const CuspReport report = build_cusp_report(path, a.width);
                emit(a.output, cusps_json(report), out);
                for (const auto& w : report.warnings) err << "warning: " << w << "\n";
            }
            return kOk;
        }
        emit(a.output, render_svg(path, tessellate_path(path, *style), audit(path, *style), *render_options), out);
        return kOk;
    } catch (const IOFailure& e) {
        err << "polarstroke: " << e.what() << "\n";
        return kIOError;
    } catch (const Error& e) {
        err << "polarstroke: " << e.what() << "\n";
        if (e.is_parse_error() || e.code() == ErrorCode::DegenerateSegment) return kParseError;
        if (e.code() == ErrorCode::InvalidStyle) return kUsageError;
        return kInternalError;
    } catch (const std::exception& e) {
        err << "polarstroke: internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace polarstroke::cli

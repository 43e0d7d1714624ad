#pragma once

#include <polarstroke/auditor.hpp>
#include <polarstroke/cusps.hpp>
#include <polarstroke/path.hpp>
#include <polarstroke/tessellator.hpp>

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polarstroke::cli {

enum ExitCode : int {
    kOk = 0,
    kViolations = 1,
    kIOError = 2,
    kParseError = 3,
    kUsageError = 4,
    kInternalError = 5,
};

enum class Layer {
    Generator,
    Ribs,
    PositiveBoundary,
    NegativeBoundary,
    OffsetCusps,
    ExtraordinaryMarkers,
};

std::string_view to_string(Layer layer);
std::optional<Layer> parse_layer(std::string_view name);
const std::vector<Layer>& all_layers();

struct Viewport {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;
};

struct RenderOptions {
    std::set<Layer> show;
    /// Auto-fit to the drawn geometry when empty.
    std::optional<Viewport> viewport;
    std::map<Layer, std::string> colors;

    /// Throws polarstroke::Error(InvalidStyle) when no layer is enabled.
    void validate() const;
    std::string color(Layer layer) const;
};

/// 9 significant digits, shortest form.
std::string format_number(double v);

std::string tessellation_json(const Quadrangulation& quad);
std::string audit_json(const AuditReport& report, const StrokeStyle& style);
std::string audit_summary(const AuditReport& report);
std::string cusps_json(const CuspReport& report);
std::string threshold_json(const Path& path);

std::string render_svg(const Path& path, const Quadrangulation& quad, const AuditReport& report,
                       const RenderOptions& options);

/// Full command line, argv[0] included. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polarstroke::cli

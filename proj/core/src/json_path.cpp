#include <polarstroke/error.hpp>
#include <polarstroke/path.hpp>

#include <json.hpp>

#include <string>

namespace polarstroke {

namespace {

using nlohmann::json;

std::size_t expected_points(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::Line: return 2;
    case SegmentKind::Quadratic:
    case SegmentKind::RationalQuadratic: return 3;
    case SegmentKind::Cubic: return 4;
    }
    return 0;
}

SegmentKind kind_from_string(const std::string& s, std::size_t index) {
    if (s == "line") return SegmentKind::Line;
    if (s == "quad") return SegmentKind::Quadratic;
    if (s == "rquad") return SegmentKind::RationalQuadratic;
    if (s == "cubic") return SegmentKind::Cubic;
    throw Error(ErrorCode::SchemaError, "segment " + std::to_string(index) + ": unknown kind '" + s + "'");
}

PathSegment segment_from_json(const json& item, std::size_t index) {
    const std::string where = "segment " + std::to_string(index);
    if (!item.is_object()) {
        throw Error(ErrorCode::SchemaError, where + " is not an object");
    }
    auto kind_it = item.find("kind");
    if (kind_it == item.end() || !kind_it->is_string()) {
        throw Error(ErrorCode::SchemaError, where + ": missing string field 'kind'");
    }
    const SegmentKind kind = kind_from_string(kind_it->get<std::string>(), index);

    auto pts_it = item.find("points");
    if (pts_it == item.end() || !pts_it->is_array()) {
        throw Error(ErrorCode::SchemaError, where + ": missing array field 'points'");
    }
    if (pts_it->size() != expected_points(kind)) {
        throw Error(ErrorCode::SchemaError, where + ": " + std::string(to_string(kind)) + " needs " +
                                                std::to_string(expected_points(kind)) + " points");
    }
    std::vector<Point2> pts;
    for (const auto& p : *pts_it) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw Error(ErrorCode::SchemaError, where + ": points must be [x, y] number pairs");
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }

    auto w_it = item.find("weight");
    if (kind != SegmentKind::RationalQuadratic) {
        if (w_it != item.end()) {
            throw Error(ErrorCode::SchemaError, where + ": 'weight' is only valid for rquad");
        }
    } else if (w_it == item.end() || !w_it->is_number()) {
        throw Error(ErrorCode::SchemaError, where + ": rquad needs a numeric 'weight'");
    }

    switch (kind) {
    case SegmentKind::Line: return PathSegment::line(pts[0], pts[1]);
    case SegmentKind::Quadratic: return PathSegment::quadratic(pts[0], pts[1], pts[2]);
    case SegmentKind::RationalQuadratic:
        return PathSegment::rational_quadratic(pts[0], pts[1], pts[2], w_it->get<double>());
    case SegmentKind::Cubic: return PathSegment::cubic(pts[0], pts[1], pts[2], pts[3]);
    }
    throw Error(ErrorCode::SchemaError, where + ": unreachable kind");
}

} // namespace

Path parse_json_path(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::SchemaError, "top level must be an array of segments");
    }
    if (doc.empty()) {
        throw Error(ErrorCode::EmptyPath, "segment list is empty");
    }
    std::vector<PathSegment> segments;
    segments.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        segments.push_back(segment_from_json(doc[i], i));
    }
    return Path(std::move(segments));
}

std::string to_json(const Path& path) {
    json doc = json::array();
    for (const auto& seg : path.segments()) {
        json item;
        item["kind"] = std::string(to_string(seg.kind()));
        json pts = json::array();
        for (Point2 p : seg.points()) {
            pts.push_back({p.x, p.y});
        }
        item["points"] = std::move(pts);
        if (seg.kind() == SegmentKind::RationalQuadratic) {
            item["weight"] = seg.weight();
        }
        doc.push_back(std::move(item));
    }
    return doc.dump();
}

} // namespace polarstroke

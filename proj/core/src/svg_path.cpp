#include <polarstroke/error.hpp>
#include <polarstroke/path.hpp>

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

namespace polarstroke {

namespace {

class Tokenizer {
public:
    explicit Tokenizer(std::string_view d) : d_(d) {}

    void skip_separators() {
        while (pos_ < d_.size() && (std::isspace(static_cast<unsigned char>(d_[pos_])) || d_[pos_] == ',')) {
            ++pos_;
        }
    }

    bool done() {
        skip_separators();
        return pos_ >= d_.size();
    }

    /// Next command letter, if the next token is a letter.
    std::optional<char> command() {
        skip_separators();
        if (pos_ < d_.size() && std::isalpha(static_cast<unsigned char>(d_[pos_]))) {
            return d_[pos_++];
        }
        return std::nullopt;
    }

    std::optional<double> number() {
        skip_separators();
        if (pos_ >= d_.size()) {
            return std::nullopt;
        }
        std::size_t start = pos_;
        if (d_[start] == '+') {
            ++start;
        }
        double value = 0.0;
        const char* begin = d_.data() + start;
        const char* end = d_.data() + d_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
        if (ec != std::errc() || ptr == begin) {
            return std::nullopt;
        }
        pos_ = static_cast<std::size_t>(ptr - d_.data());
        return value;
    }

    std::size_t position() const { return pos_; }

private:
    std::string_view d_;
    std::size_t pos_ = 0;
};

std::size_t arity(char upper) {
    switch (upper) {
    case 'M':
    case 'L': return 2;
    case 'Q': return 4;
    case 'C': return 6;
    case 'Z': return 0;
    default: return 0;
    }
}

} // namespace

Path parse_svg_path(std::string_view d) {
    Tokenizer tok(d);
    std::vector<PathSegment> segments;
    Point2 current;
    Point2 subpath_start;
    bool started = false;
    bool closed = false;

    while (!tok.done()) {
        const std::size_t at = tok.position();
        auto letter = tok.command();
        if (!letter) {
            throw Error(ErrorCode::UnknownCommand, "expected a command letter at offset " + std::to_string(at));
        }
        const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(*letter)));
        const bool relative = *letter != upper;
        if (upper != 'M' && upper != 'L' && upper != 'Q' && upper != 'C' && upper != 'Z') {
            throw Error(ErrorCode::UnknownCommand, std::string("unsupported command '") + *letter + "'");
        }
        if (closed) {
            throw Error(ErrorCode::MultipleSubpaths, "commands after closepath would start a second subpath");
        }
        if (!started && upper != 'M') {
            throw Error(ErrorCode::UnknownCommand, "path data must begin with a moveto");
        }
        if (started && upper == 'M') {
            throw Error(ErrorCode::MultipleSubpaths, "only one subpath is supported");
        }

        std::vector<double> coords;
        while (auto v = tok.number()) {
            coords.push_back(*v);
        }
        const std::size_t n = arity(upper);
        if (upper == 'Z') {
            if (!coords.empty()) {
                throw Error(ErrorCode::ArityError, "closepath takes no coordinates");
            }
            if (distance(current, subpath_start) > kContiguityTolerance) {
                segments.push_back(PathSegment::line(current, subpath_start));
            }
            current = subpath_start;
            closed = true;
            continue;
        }
        if (coords.empty() || coords.size() % n != 0) {
            throw Error(ErrorCode::ArityError, std::string("command '") + *letter + "' expects a multiple of " +
                                                   std::to_string(n) + " coordinates, got " +
                                                   std::to_string(coords.size()));
        }

        const Point2 origin_offset = relative ? current : Point2{};
        for (std::size_t g = 0; g < coords.size(); g += n) {
            const Point2 base = relative ? current : Point2{};
            auto pt = [&](std::size_t k) { return base + Point2{coords[g + 2 * k], coords[g + 2 * k + 1]}; };
            if (upper == 'M' && g == 0) {
                current = origin_offset + Point2{coords[0], coords[1]};
                subpath_start = current;
                started = true;
                continue;
            }
            switch (upper) {
            case 'M': // implicit lineto
            case 'L': {
                const Point2 p1 = pt(0);
                segments.push_back(PathSegment::line(current, p1));
                current = p1;
                break;
            }
            case 'Q': {
                const Point2 p1 = pt(0);
                const Point2 p2 = pt(1);
                segments.push_back(PathSegment::quadratic(current, p1, p2));
                current = p2;
                break;
            }
            case 'C': {
                const Point2 p1 = pt(0);
                const Point2 p2 = pt(1);
                const Point2 p3 = pt(2);
                segments.push_back(PathSegment::cubic(current, p1, p2, p3));
                current = p3;
                break;
            }
            default: break;
            }
        }
    }

    if (segments.empty()) {
        throw Error(ErrorCode::EmptyPath, "path data draws no segments");
    }
    return Path(std::move(segments));
}

} // namespace polarstroke

#include "upper_envelope/io/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uenv::io {

using Json = nlohmann::ordered_json;

namespace {

double real_field(const Json& j, const char* what) {
    if (!j.is_number()) throw DocumentError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DocumentError(std::string(what) + " must be finite");
    return v;
}

Point2 point_field(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw DocumentError(std::string(what) + " must be a [x, y] pair");
    }
    return {real_field(j[0], what), real_field(j[1], what)};
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw DocumentError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

BuiltDocument build_document(std::span<const Point2> world_points, double radius,
                             const Point2& direction) {
    const DirectionalFrame frame = make_frame(radius, direction);
    const std::vector<Point2> canonical = to_canonical(world_points, frame);
    PreparedCircles prepared = prepare_circles_indexed(canonical);

    BuiltDocument out;
    const Envelope envelope = build_envelope(prepared.circles, true, &out.stats);

    EnvelopeDocument& doc = out.document;
    doc.radius = radius;
    doc.direction = direction;
    doc.circles.reserve(prepared.source.size());
    for (std::size_t idx : prepared.source) doc.circles.push_back(world_points[idx]);
    doc.segments = envelope.segments();
    return out;
}

LoadedEnvelope load_envelope(const EnvelopeDocument& doc) {
    try {
        DirectionalFrame frame = make_frame(doc.radius, doc.direction);
        std::vector<UnitCircle> table;
        table.reserve(doc.circles.size());
        for (const Point2& p : to_canonical(doc.circles, frame)) table.push_back(UnitCircle{p});
        return LoadedEnvelope{frame, Envelope(std::move(table), doc.segments)};
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& e) {
        throw DocumentError(std::string("inconsistent envelope document: ") + e.what());
    }
}

std::string serialize(const EnvelopeDocument& doc) {
    Json j;
    j["format"] = kDocumentFormat;
    j["version"] = doc.version;
    j["frame"] = {{"radius", doc.radius}, {"direction", {doc.direction.x, doc.direction.y}}};
    Json circles = Json::array();
    for (const Point2& p : doc.circles) circles.push_back({p.x, p.y});
    j["circles"] = std::move(circles);
    Json segments = Json::array();
    for (const Segment& s : doc.segments) {
        segments.push_back({{"circles", s.circles}, {"transitions", s.transitions}});
    }
    j["segments"] = std::move(segments);
    return j.dump(1) + "\n";
}

EnvelopeDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("malformed document: ") + e.what());
    }

    const Json& format = member(j, "format");
    if (!format.is_string() || format.get<std::string>() != kDocumentFormat) {
        throw DocumentError("not an upper-envelope document");
    }
    const Json& version = member(j, "version");
    if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
        throw DocumentError("unsupported document version");
    }

    EnvelopeDocument doc;
    const Json& frame = member(j, "frame");
    doc.radius = real_field(member(frame, "radius"), "frame radius");
    doc.direction = point_field(member(frame, "direction"), "frame direction");

    const Json& circles = member(j, "circles");
    if (!circles.is_array()) throw DocumentError("circles must be an array");
    doc.circles.reserve(circles.size());
    for (const Json& c : circles) doc.circles.push_back(point_field(c, "circle center"));

    const Json& segments = member(j, "segments");
    if (!segments.is_array()) throw DocumentError("segments must be an array");
    for (const Json& s : segments) {
        Segment seg;
        const Json& idx = member(s, "circles");
        const Json& ts = member(s, "transitions");
        if (!idx.is_array() || !ts.is_array()) {
            throw DocumentError("segment fields must be arrays");
        }
        for (const Json& i : idx) {
            if (!i.is_number_unsigned()) throw DocumentError("circle index must be unsigned");
            seg.circles.push_back(i.get<std::size_t>());
        }
        for (const Json& t : ts) seg.transitions.push_back(real_field(t, "transition"));
        doc.segments.push_back(std::move(seg));
    }
    return doc;
}

EnvelopeDocument read_document_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

}  // namespace uenv::io

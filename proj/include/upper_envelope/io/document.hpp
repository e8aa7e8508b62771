#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "upper_envelope/builder.hpp"
#include "upper_envelope/errors.hpp"
#include "upper_envelope/frame.hpp"

namespace uenv::io {

inline constexpr const char* kDocumentFormat = "upper-envelope";
inline constexpr int kDocumentVersion = 1;

class DocumentError : public Error {
public:
    using Error::Error;
};

/// Persisted envelope. `circles` holds the world-frame centers of the
/// sorted, deduplicated table; segment indices and transitions refer to
/// that table in the canonical frame. `direction` is stored as given, the
/// frame normalizes it on load.
struct EnvelopeDocument {
    int version = kDocumentVersion;
    double radius = 1.0;
    Point2 direction{0.0, 1.0};
    std::vector<Point2> circles;
    std::vector<Segment> segments;

    friend bool operator==(const EnvelopeDocument&, const EnvelopeDocument&) = default;
};

struct BuiltDocument {
    EnvelopeDocument document;
    BuildStats stats;
};

/// Transforms, builds, and packages raw world points.
/// Throws InvalidFrame / NonFiniteInput.
BuiltDocument build_document(std::span<const Point2> world_points, double radius,
                             const Point2& direction);

struct LoadedEnvelope {
    DirectionalFrame frame;
    Envelope envelope;
};

/// Rebuilds the frame and the canonical envelope. Throws DocumentError.
LoadedEnvelope load_envelope(const EnvelopeDocument& doc);

std::string serialize(const EnvelopeDocument& doc);

/// Throws DocumentError on malformed JSON, a wrong format tag or version,
/// or fields of the wrong shape.
EnvelopeDocument parse_document(const std::string& text);

EnvelopeDocument read_document_file(const std::filesystem::path& path);

}  // namespace uenv::io

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "eafkit/attainment.hpp"
#include "eafkit/hypervolume.hpp"
#include "eafkit/pareto.hpp"

namespace eafkit {

inline constexpr int kSchemaVersion = 1;

enum class FileFormat { Json, Csv };

/// ".csv" (any case) selects CSV, everything else JSON.
FileFormat format_from_path(const std::filesystem::path& path);
/// "json" or "csv"; anything else is a ValidationError.
FileFormat parse_format(std::string_view name);

struct RunArchive {
    int schema_version = kSchemaVersion;
    RunTensor costs;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const RunArchive&, const RunArchive&) = default;
};

// Text-level codecs. Every reader validates fully: malformed structure is a
// FormatError, NaN or non-finite costs a DataError, an unknown schema version
// a VersionError.
//
// CSV files may start with one "# {...}" line carrying a JSON object with the
// schema version and whatever the plain columns cannot hold (run metadata,
// surface transforms).

std::string serialize_runs(const RunArchive& archive, FileFormat format);
RunArchive parse_runs(std::string_view text, FileFormat format);

std::string serialize_surfaces(const SurfaceStack& stack, FileFormat format);
SurfaceStack parse_surfaces(std::string_view text, FileFormat format);

std::string serialize_hv_traces(const HvTraceSet& traces, FileFormat format);
HvTraceSet parse_hv_traces(std::string_view text, FileFormat format);

/// A bare point list, e.g. a known Pareto front. JSON: {"points": [[...], ...]}
/// or a bare array; CSV: header f1,...,fM.
std::string serialize_points(const ObjectiveSet& points, FileFormat format);
ObjectiveSet parse_points(std::string_view text, FileFormat format);

// File wrappers. Unreadable or unwritable paths (including an empty path)
// throw IoError.

RunArchive read_runs(const std::filesystem::path& path, FileFormat format);
void write_runs(const RunArchive& archive, const std::filesystem::path& path, FileFormat format);

SurfaceStack read_surfaces(const std::filesystem::path& path, FileFormat format);
void write_surfaces(const SurfaceStack& stack, const std::filesystem::path& path, FileFormat format);

HvTraceSet read_hv_traces(const std::filesystem::path& path, FileFormat format);
void write_hv_traces(const HvTraceSet& traces, const std::filesystem::path& path, FileFormat format);

ObjectiveSet read_points(const std::filesystem::path& path, FileFormat format);
void write_points(const ObjectiveSet& points, const std::filesystem::path& path, FileFormat format);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace eafkit

#include "eafkit/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "eafkit/errors.hpp"
#include "eafkit/number_format.hpp"

namespace eafkit {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- JSON helpers

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

const json& member(const json& object, const char* key) {
    if (!object.is_object()) throw FormatError("expected a JSON object");
    const auto it = object.find(key);
    if (it == object.end()) throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

const json& array_member(const json& object, const char* key) {
    const json& value = member(object, key);
    if (!value.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
    return value;
}

void check_version(const json& object) {
    const json& version = member(object, "schema_version");
    if (!version.is_number_integer()) throw FormatError("schema_version must be an integer");
    if (version.get<long long>() != kSchemaVersion) {
        throw VersionError("unsupported schema_version " + version.dump() + " (supported: " +
                           std::to_string(kSchemaVersion) + ")");
    }
}

enum class Sentinels { Forbidden, Allowed };

double json_to_double(const json& value, Sentinels sentinels, const std::string& where) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto& text = value.get_ref<const std::string&>();
        if (text == "inf" || text == "-inf") {
            if (sentinels == Sentinels::Allowed) return parse_double(text);
            throw DataError("non-finite value at " + where);
        }
        if (text == "nan" || text == "NaN") throw DataError("NaN at " + where);
    }
    throw FormatError("expected a number at " + where + ", got " + value.dump());
}

json double_to_json(double value) {
    if (std::isnan(value)) throw DataError("cannot serialize NaN");
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

std::size_t json_to_size(const json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw FormatError("expected a nonnegative integer at " + where);
    }
    return value.get<std::size_t>();
}

json index_array(const std::set<std::size_t>& indices) {
    json out = json::array();
    for (std::size_t i : indices) out.push_back(i);
    return out;
}

std::set<std::size_t> read_index_array(const json& object, const char* key) {
    std::set<std::size_t> out;
    const auto it = object.find(key);
    if (it == object.end()) return out;
    if (!it->is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
    for (const auto& v : *it) out.insert(json_to_size(v, key));
    return out;
}

// ----------------------------------------------------------------- CSV helpers

struct CsvDocument {
    json preamble = json::object();  // from an optional leading "# {...}" line
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
};

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

CsvDocument parse_csv(std::string_view text) {
    CsvDocument doc;
    bool have_header = false;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_number;
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        if (trimmed.front() == '#') {
            if (have_header || !doc.rows.empty()) {
                throw FormatError("comment on line " + std::to_string(line_number) +
                                  " must precede the header");
            }
            const std::string body = trim(std::string_view(trimmed).substr(1));
            if (!body.empty()) {
                doc.preamble = parse_json(body);
                if (!doc.preamble.is_object()) throw FormatError("CSV preamble must be a JSON object");
            }
            continue;
        }
        auto fields = split_fields(trimmed);
        if (!have_header) {
            doc.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != doc.header.size()) {
            throw FormatError("line " + std::to_string(line_number) + " has " + std::to_string(fields.size()) +
                              " fields, header has " + std::to_string(doc.header.size()));
        }
        doc.rows.push_back(std::move(fields));
        doc.line_numbers.push_back(line_number);
    }
    if (!have_header) throw FormatError("CSV has no header line");
    if (doc.preamble.contains("schema_version")) check_version(doc.preamble);
    return doc;
}

void expect_header(const CsvDocument& doc, const std::vector<std::string>& expected) {
    if (doc.header != expected) {
        std::string want;
        for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
        throw FormatError("unexpected CSV header; expected '" + want + "'");
    }
}

long long parse_integer(const std::string& field, const std::string& where) {
    long long value = 0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc() || result.ptr != field.data() + field.size()) {
        throw FormatError("expected an integer at " + where + ", got '" + field + "'");
    }
    return value;
}

double parse_finite(const std::string& field, const std::string& where) {
    double value = 0.0;
    try {
        value = parse_double(field);
    } catch (const FormatError&) {
        throw FormatError("expected a number at " + where + ", got '" + field + "'");
    } catch (const DataError&) {
        throw DataError("NaN at " + where);
    }
    if (!std::isfinite(value)) throw DataError("non-finite value at " + where);
    return value;
}

double parse_any(const std::string& field, const std::string& where) {
    try {
        return parse_double(field);
    } catch (const FormatError&) {
        throw FormatError("expected a number at " + where + ", got '" + field + "'");
    } catch (const DataError&) {
        throw DataError("NaN at " + where);
    }
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

std::string preamble_line(const json& preamble) { return "# " + preamble.dump() + "\n"; }

std::string statistic_name(BandStatistic s) {
    return s == BandStatistic::StandardError ? "standard_error" : "standard_deviation";
}

BandStatistic statistic_from_name(const std::string& name) {
    if (name == "standard_error") return BandStatistic::StandardError;
    if (name == "standard_deviation") return BandStatistic::StandardDeviation;
    throw FormatError("unknown band statistic '" + name + "'");
}

}  // namespace

FileFormat format_from_path(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".csv" ? FileFormat::Csv : FileFormat::Json;
}

FileFormat parse_format(std::string_view name) {
    if (name == "json") return FileFormat::Json;
    if (name == "csv") return FileFormat::Csv;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

// ------------------------------------------------------------------ run archive

std::string serialize_runs(const RunArchive& archive, FileFormat format) {
    const RunTensor& costs = archive.costs;
    if (format == FileFormat::Json) {
        json j;
        j["schema_version"] = archive.schema_version;
        j["shape"] = {costs.runs(), costs.steps(), costs.objectives()};
        json runs = json::array();
        for (std::size_t s = 0; s < costs.runs(); ++s) {
            json rows = json::array();
            for (std::size_t n = 0; n < costs.steps(); ++n) {
                json row = json::array();
                for (std::size_t m = 0; m < costs.objectives(); ++m) row.push_back(double_to_json(costs.at(s, n, m)));
                rows.push_back(std::move(row));
            }
            runs.push_back(std::move(rows));
        }
        j["costs"] = std::move(runs);
        j["metadata"] = archive.metadata;
        return j.dump() + "\n";
    }

    std::string out;
    if (!archive.metadata.empty() || archive.schema_version != kSchemaVersion) {
        out = preamble_line({{"schema_version", archive.schema_version}, {"metadata", archive.metadata}});
    }
    out += "run,step";
    for (std::size_t m = 0; m < costs.objectives(); ++m) out += ",f" + std::to_string(m + 1);
    out += "\n";
    for (std::size_t s = 0; s < costs.runs(); ++s) {
        for (std::size_t n = 0; n < costs.steps(); ++n) {
            out += std::to_string(s) + "," + std::to_string(n + 1);
            for (std::size_t m = 0; m < costs.objectives(); ++m) out += "," + format_double(costs.at(s, n, m));
            out += "\n";
        }
    }
    return out;
}

RunArchive parse_runs(std::string_view text, FileFormat format) {
    RunArchive archive;
    if (format == FileFormat::Json) {
        const json j = parse_json(text);
        check_version(j);
        const json& shape = array_member(j, "shape");
        if (shape.size() != 3) throw FormatError("shape must be [S, N, M]");
        const std::size_t runs = json_to_size(shape[0], "shape[0]");
        const std::size_t steps = json_to_size(shape[1], "shape[1]");
        const std::size_t objectives = json_to_size(shape[2], "shape[2]");
        if (runs == 0 || steps == 0 || objectives == 0) throw FormatError("shape entries must be positive");

        const json& costs = array_member(j, "costs");
        if (costs.size() != runs) {
            throw FormatError("shape declares " + std::to_string(runs) + " runs, costs has " +
                              std::to_string(costs.size()));
        }
        std::vector<double> values;
        values.reserve(runs * steps * objectives);
        for (std::size_t s = 0; s < runs; ++s) {
            if (!costs[s].is_array() || costs[s].size() != steps) {
                throw FormatError("ragged runs: run " + std::to_string(s) + " does not have " +
                                  std::to_string(steps) + " steps");
            }
            for (std::size_t n = 0; n < steps; ++n) {
                const json& row = costs[s][n];
                if (!row.is_array() || row.size() != objectives) {
                    throw FormatError("run " + std::to_string(s) + ", row " + std::to_string(n) +
                                      " does not have " + std::to_string(objectives) + " objectives");
                }
                for (std::size_t m = 0; m < objectives; ++m) {
                    values.push_back(json_to_double(row[m], Sentinels::Forbidden,
                                                    "run " + std::to_string(s) + ", row " + std::to_string(n) +
                                                        ", objective " + std::to_string(m)));
                }
            }
        }
        archive.costs = RunTensor(runs, steps, objectives, std::move(values));
        if (const auto it = j.find("metadata"); it != j.end()) {
            if (!it->is_object()) throw FormatError("metadata must be an object");
            for (const auto& [key, value] : it->items()) {
                if (!value.is_string()) throw FormatError("metadata value for '" + key + "' must be a string");
                archive.metadata[key] = value.get<std::string>();
            }
        }
        return archive;
    }

    const CsvDocument doc = parse_csv(text);
    if (doc.header.size() < 3 || doc.header[0] != "run" || doc.header[1] != "step") {
        throw FormatError("unexpected CSV header; expected 'run,step,f1,...'");
    }
    const std::size_t objectives = doc.header.size() - 2;
    std::vector<std::string> expected{"run", "step"};
    for (std::size_t m = 0; m < objectives; ++m) expected.push_back("f" + std::to_string(m + 1));
    expect_header(doc, expected);
    if (doc.rows.empty()) throw FormatError("CSV has no data rows");

    std::vector<std::size_t> steps_per_run;
    std::vector<double> values;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        const std::string where = at_line(doc.line_numbers[r]);
        const long long run = parse_integer(row[0], where + ", column run");
        const long long step = parse_integer(row[1], where + ", column step");
        if (steps_per_run.empty() || run != static_cast<long long>(steps_per_run.size()) - 1) {
            if (run != static_cast<long long>(steps_per_run.size())) {
                throw FormatError("run " + std::to_string(run) + " at " + where +
                                  " is out of order; runs must be grouped and numbered 0, 1, ...");
            }
            steps_per_run.push_back(0);
        }
        const std::size_t expected_step = steps_per_run.back() + 1;
        if (step != static_cast<long long>(expected_step)) {
            throw FormatError("run " + std::to_string(run) + " at " + where + " has step " + std::to_string(step) +
                              ", expected " + std::to_string(expected_step));
        }
        ++steps_per_run.back();
        for (std::size_t m = 0; m < objectives; ++m) {
            values.push_back(parse_finite(row[m + 2], "run " + std::to_string(run) + ", row " +
                                                          std::to_string(step - 1) + ", objective " +
                                                          std::to_string(m) + " (" + where + ")"));
        }
    }
    for (std::size_t s = 1; s < steps_per_run.size(); ++s) {
        if (steps_per_run[s] != steps_per_run[0]) {
            throw FormatError("ragged runs: run " + std::to_string(s) + " has " + std::to_string(steps_per_run[s]) +
                              " steps, run 0 has " + std::to_string(steps_per_run[0]));
        }
    }
    archive.costs = RunTensor(steps_per_run.size(), steps_per_run[0], objectives, std::move(values));
    if (const auto it = doc.preamble.find("metadata"); it != doc.preamble.end()) {
        if (!it->is_object()) throw FormatError("metadata must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string()) throw FormatError("metadata value for '" + key + "' must be a string");
            archive.metadata[key] = value.get<std::string>();
        }
    }
    return archive;
}

// ------------------------------------------------------------- surface stacks

namespace {

void validate_stack(const SurfaceStack& stack) {
    if (stack.surfaces.size() != stack.levels.size()) {
        throw FormatError(std::to_string(stack.levels.size()) + " levels but " +
                          std::to_string(stack.surfaces.size()) + " surfaces");
    }
    for (std::size_t k = 0; k < stack.surfaces.size(); ++k) {
        const auto& surface = stack.surfaces[k];
        if (surface.size() != stack.grid.size()) {
            throw FormatError("surface " + std::to_string(k) + " has " + std::to_string(surface.size()) +
                              " points, grid has " + std::to_string(stack.grid.size()));
        }
        for (std::size_t i = 0; i < surface.size(); ++i) {
            if (!(surface[i].first == stack.grid[i])) {
                throw FormatError("surface " + std::to_string(k) + " point " + std::to_string(i) +
                                  " is off the shared grid");
            }
        }
    }
}

}  // namespace

std::string serialize_surfaces(const SurfaceStack& stack, FileFormat format) {
    validate_stack(stack);
    if (format == FileFormat::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["levels"] = stack.levels.values();
        json grid = json::array();
        for (double x : stack.grid) grid.push_back(double_to_json(x));
        j["grid"] = std::move(grid);
        json surfaces = json::array();
        for (const auto& surface : stack.surfaces) {
            json rows = json::array();
            for (const auto& p : surface) rows.push_back({double_to_json(p.first), double_to_json(p.second)});
            surfaces.push_back(std::move(rows));
        }
        j["surfaces"] = std::move(surfaces);
        j["maximize"] = index_array(stack.transform.maximize_indices);
        j["log"] = index_array(stack.transform.log_indices);
        return j.dump() + "\n";
    }

    std::string out;
    if (!stack.transform.maximize_indices.empty() || !stack.transform.log_indices.empty()) {
        out = preamble_line({{"schema_version", kSchemaVersion},
                             {"maximize", index_array(stack.transform.maximize_indices)},
                             {"log", index_array(stack.transform.log_indices)}});
    }
    out += "level,y1,y2\n";
    for (std::size_t k = 0; k < stack.surfaces.size(); ++k) {
        const std::string level = std::to_string(stack.levels[k]);
        for (const auto& p : stack.surfaces[k]) {
            out += level + "," + format_double(p.first) + "," + format_double(p.second) + "\n";
        }
    }
    return out;
}

SurfaceStack parse_surfaces(std::string_view text, FileFormat format) {
    SurfaceStack stack;
    std::vector<int> levels;
    if (format == FileFormat::Json) {
        const json j = parse_json(text);
        check_version(j);
        for (const auto& level : array_member(j, "levels")) {
            if (!level.is_number_integer()) throw FormatError("levels must be integers");
            levels.push_back(level.get<int>());
        }
        const json& grid = array_member(j, "grid");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            stack.grid.push_back(json_to_double(grid[i], Sentinels::Allowed, "grid[" + std::to_string(i) + "]"));
        }
        const json& surfaces = array_member(j, "surfaces");
        for (std::size_t k = 0; k < surfaces.size(); ++k) {
            if (!surfaces[k].is_array()) throw FormatError("surface " + std::to_string(k) + " must be an array");
            std::vector<SurfacePoint> surface;
            for (std::size_t i = 0; i < surfaces[k].size(); ++i) {
                const json& p = surfaces[k][i];
                const std::string where = "surfaces[" + std::to_string(k) + "][" + std::to_string(i) + "]";
                if (!p.is_array() || p.size() != 2) throw FormatError(where + " must be a pair");
                surface.push_back({json_to_double(p[0], Sentinels::Allowed, where),
                                   json_to_double(p[1], Sentinels::Allowed, where)});
            }
            stack.surfaces.push_back(std::move(surface));
        }
        stack.transform.maximize_indices = read_index_array(j, "maximize");
        stack.transform.log_indices = read_index_array(j, "log");
    } else {
        const CsvDocument doc = parse_csv(text);
        expect_header(doc, {"level", "y1", "y2"});
        for (std::size_t r = 0; r < doc.rows.size(); ++r) {
            const auto& row = doc.rows[r];
            const std::string where = at_line(doc.line_numbers[r]);
            const long long level = parse_integer(row[0], where + ", column level");
            if (levels.empty() || levels.back() != level) {
                if (std::find(levels.begin(), levels.end(), level) != levels.end()) {
                    throw FormatError("rows of level " + std::to_string(level) + " are not contiguous (" + where + ")");
                }
                levels.push_back(static_cast<int>(level));
                stack.surfaces.emplace_back();
            }
            stack.surfaces.back().push_back({parse_any(row[1], where), parse_any(row[2], where)});
        }
        if (!stack.surfaces.empty()) {
            for (const auto& p : stack.surfaces.front()) stack.grid.push_back(p.first);
        }
        stack.transform.maximize_indices = read_index_array(doc.preamble, "maximize");
        stack.transform.log_indices = read_index_array(doc.preamble, "log");
    }
    try {
        stack.levels = LevelSpec(levels);
    } catch (const ValidationError& e) {
        throw FormatError(std::string("invalid levels: ") + e.what());
    }
    try {
        stack.transform.validate(2);
    } catch (const ValidationError& e) {
        throw FormatError(std::string("invalid transform: ") + e.what());
    }
    validate_stack(stack);
    return stack;
}

// ------------------------------------------------------------------ HV traces

std::string serialize_hv_traces(const HvTraceSet& traces, FileFormat format) {
    const std::size_t runs = traces.runs();
    const std::size_t steps = traces.steps();
    if (traces.band_halfwidth.size() != steps) throw ContractViolation("band and center lengths differ");
    for (const auto& t : traces.traces) {
        if (t.size() != steps) throw ContractViolation("trace length differs from center length");
    }
    if (format == FileFormat::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["statistic"] = statistic_name(traces.statistic);
        j["shape"] = {runs, steps};
        json rows = json::array();
        for (const auto& t : traces.traces) {
            json row = json::array();
            for (double v : t) row.push_back(double_to_json(v));
            rows.push_back(std::move(row));
        }
        j["traces"] = std::move(rows);
        json center = json::array();
        json band = json::array();
        for (std::size_t n = 0; n < steps; ++n) {
            center.push_back(double_to_json(traces.center[n]));
            band.push_back(double_to_json(traces.band_halfwidth[n]));
        }
        j["center"] = std::move(center);
        j["band_halfwidth"] = std::move(band);
        return j.dump() + "\n";
    }

    std::string out = "step";
    for (std::size_t s = 0; s < runs; ++s) out += ",run_" + std::to_string(s);
    out += traces.statistic == BandStatistic::StandardError ? ",center,stderr\n" : ",center,stddev\n";
    for (std::size_t n = 0; n < steps; ++n) {
        out += std::to_string(n + 1);
        for (std::size_t s = 0; s < runs; ++s) out += "," + format_double(traces.traces[s][n]);
        out += "," + format_double(traces.center[n]) + "," + format_double(traces.band_halfwidth[n]) + "\n";
    }
    return out;
}

HvTraceSet parse_hv_traces(std::string_view text, FileFormat format) {
    HvTraceSet out;
    if (format == FileFormat::Json) {
        const json j = parse_json(text);
        check_version(j);
        const json& statistic = member(j, "statistic");
        if (!statistic.is_string()) throw FormatError("statistic must be a string");
        out.statistic = statistic_from_name(statistic.get<std::string>());
        const json& shape = array_member(j, "shape");
        if (shape.size() != 2) throw FormatError("shape must be [S, N]");
        const std::size_t runs = json_to_size(shape[0], "shape[0]");
        const std::size_t steps = json_to_size(shape[1], "shape[1]");
        const json& traces = array_member(j, "traces");
        if (traces.size() != runs) throw FormatError("traces does not match shape");
        for (std::size_t s = 0; s < runs; ++s) {
            if (!traces[s].is_array() || traces[s].size() != steps) {
                throw FormatError("trace of run " + std::to_string(s) + " does not have " + std::to_string(steps) +
                                  " steps");
            }
            std::vector<double> row;
            for (std::size_t n = 0; n < steps; ++n) {
                row.push_back(json_to_double(traces[s][n], Sentinels::Forbidden,
                                             "traces[" + std::to_string(s) + "][" + std::to_string(n) + "]"));
            }
            out.traces.push_back(std::move(row));
        }
        for (const char* key : {"center", "band_halfwidth"}) {
            const json& column = array_member(j, key);
            if (column.size() != steps) throw FormatError(std::string(key) + " does not match shape");
            auto& target = std::string(key) == "center" ? out.center : out.band_halfwidth;
            for (std::size_t n = 0; n < steps; ++n) {
                target.push_back(json_to_double(column[n], Sentinels::Forbidden,
                                                std::string(key) + "[" + std::to_string(n) + "]"));
            }
        }
        return out;
    }

    const CsvDocument doc = parse_csv(text);
    const auto& header = doc.header;
    if (header.size() < 3 || header.front() != "step" || header[header.size() - 2] != "center") {
        throw FormatError("unexpected CSV header; expected 'step,run_0,...,center,stderr'");
    }
    if (header.back() == "stderr") {
        out.statistic = BandStatistic::StandardError;
    } else if (header.back() == "stddev") {
        out.statistic = BandStatistic::StandardDeviation;
    } else {
        throw FormatError("last CSV column must be 'stderr' or 'stddev'");
    }
    const std::size_t runs = header.size() - 3;
    for (std::size_t s = 0; s < runs; ++s) {
        if (header[s + 1] != "run_" + std::to_string(s)) {
            throw FormatError("expected column 'run_" + std::to_string(s) + "', got '" + header[s + 1] + "'");
        }
    }
    out.traces.assign(runs, {});
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        const std::string where = at_line(doc.line_numbers[r]);
        if (parse_integer(row[0], where + ", column step") != static_cast<long long>(r + 1)) {
            throw FormatError("steps must be numbered 1, 2, ... (" + where + ")");
        }
        for (std::size_t s = 0; s < runs; ++s) out.traces[s].push_back(parse_finite(row[s + 1], where));
        out.center.push_back(parse_finite(row[runs + 1], where));
        out.band_halfwidth.push_back(parse_finite(row[runs + 2], where));
    }
    return out;
}

// --------------------------------------------------------------------- points

std::string serialize_points(const ObjectiveSet& points, FileFormat format) {
    if (format == FileFormat::Json) {
        json rows = json::array();
        for (const auto& p : points) {
            json row = json::array();
            for (double v : p.values()) row.push_back(double_to_json(v));
            rows.push_back(std::move(row));
        }
        return json{{"points", std::move(rows)}}.dump() + "\n";
    }
    std::string out;
    for (std::size_t m = 0; m < points.dimension(); ++m) out += (m ? ",f" : "f") + std::to_string(m + 1);
    out += "\n";
    for (const auto& p : points) {
        for (std::size_t m = 0; m < p.dimension(); ++m) out += (m ? "," : "") + format_double(p[m]);
        out += "\n";
    }
    return out;
}

ObjectiveSet parse_points(std::string_view text, FileFormat format) {
    std::vector<ObjectivePoint> points;
    if (format == FileFormat::Json) {
        const json j = parse_json(text);
        const json& rows = j.is_array() ? j : array_member(j, "points");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].is_array()) throw FormatError("point " + std::to_string(i) + " must be an array");
            std::vector<double> values;
            for (std::size_t m = 0; m < rows[i].size(); ++m) {
                values.push_back(json_to_double(rows[i][m], Sentinels::Forbidden,
                                                "point " + std::to_string(i) + ", objective " + std::to_string(m)));
            }
            points.emplace_back(std::move(values));
        }
    } else {
        const CsvDocument doc = parse_csv(text);
        for (std::size_t m = 0; m < doc.header.size(); ++m) {
            if (doc.header[m] != "f" + std::to_string(m + 1)) throw FormatError("point CSV header must be f1,...,fM");
        }
        for (std::size_t r = 0; r < doc.rows.size(); ++r) {
            std::vector<double> values;
            for (const auto& field : doc.rows[r]) values.push_back(parse_finite(field, at_line(doc.line_numbers[r])));
            points.emplace_back(std::move(values));
        }
    }
    try {
        return ObjectiveSet(std::move(points));
    } catch (const ContractViolation& e) {
        throw FormatError(e.what());
    }
}

// ---------------------------------------------------------------------- files

std::string read_text_file(const std::filesystem::path& path) {
    if (path.empty()) throw IoError("empty input path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    if (path.empty()) throw IoError("empty output path");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

RunArchive read_runs(const std::filesystem::path& path, FileFormat format) {
    return parse_runs(read_text_file(path), format);
}

void write_runs(const RunArchive& archive, const std::filesystem::path& path, FileFormat format) {
    write_text_file(path, serialize_runs(archive, format));
}

SurfaceStack read_surfaces(const std::filesystem::path& path, FileFormat format) {
    return parse_surfaces(read_text_file(path), format);
}

void write_surfaces(const SurfaceStack& stack, const std::filesystem::path& path, FileFormat format) {
    write_text_file(path, serialize_surfaces(stack, format));
}

HvTraceSet read_hv_traces(const std::filesystem::path& path, FileFormat format) {
    return parse_hv_traces(read_text_file(path), format);
}

void write_hv_traces(const HvTraceSet& traces, const std::filesystem::path& path, FileFormat format) {
    write_text_file(path, serialize_hv_traces(traces, format));
}

ObjectiveSet read_points(const std::filesystem::path& path, FileFormat format) {
    return parse_points(read_text_file(path), format);
}

void write_points(const ObjectiveSet& points, const std::filesystem::path& path, FileFormat format) {
    write_text_file(path, serialize_points(points, format));
}

}  // namespace eafkit

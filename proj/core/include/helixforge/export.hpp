#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "helixforge/helix.hpp"
#include "helixforge/identity.hpp"

namespace helixforge::io {

// Shortest decimal text for v that strtod reads back to exactly v, searched
// over 1 to 12 significant digits. Stable across runs, so repeated exports
// are byte-identical. Negative zero prints as "0".
std::string format_number(double v);

enum class Format { Csv, Json, Obj, Svg, Report };
enum class Projection { None, XY, XZ, YZ };

const char* format_name(Format f);
Format parse_format(const std::string& name);
const char* projection_name(Projection p);
Projection parse_projection(const std::string& name);

// Raw table of (t, x, y, z) rows as stored in CSV files; what import_csv
// recovers when no spec metadata is available.
struct CsvData {
    std::vector<double> grid;
    std::vector<Vec3> points;
};

// One export request: a source, a target format, and format-specific knobs.
// Projection applies to SVG only; colors override the per-map defaults,
// one entry per strand.
struct ExportJob {
    std::variant<CurveSamples, DoubleHelix, IdentityReport> source;
    Format format = Format::Csv;
    Projection projection = Projection::None;
    std::vector<std::string> colors;
};

// Validates the job and renders it. The stream overloads return the number
// of bytes written; the path overloads write atomically (temp file in the
// same directory, then rename), so a crash cannot leave a half-written file.
std::size_t run_export(const ExportJob& job, std::ostream& out);
std::size_t run_export(const ExportJob& job, const std::filesystem::path& destination);

std::size_t export_csv(const CurveSamples& samples, std::ostream& out);
std::size_t export_csv(const CurveSamples& samples, const std::filesystem::path& destination);
CsvData import_csv(std::istream& in);
CsvData import_csv(const std::filesystem::path& source);

std::size_t export_json(const CurveSamples& samples, std::ostream& out);
std::size_t export_json(const CurveSamples& samples, const std::filesystem::path& destination);
std::size_t export_json(const DoubleHelix& helix, std::ostream& out);
std::size_t export_json(const DoubleHelix& helix, const std::filesystem::path& destination);

// Wavefront OBJ: "v" lines for every sample, "l" polyline segments along
// each strand, plus one segment per rung.
std::size_t export_obj(const CurveSamples& samples, std::ostream& out);
std::size_t export_obj(const CurveSamples& samples, const std::filesystem::path& destination);
std::size_t export_obj(const DoubleHelix& helix, std::ostream& out);
std::size_t export_obj(const DoubleHelix& helix, const std::filesystem::path& destination);

std::size_t export_svg(const CurveSamples& samples, Projection projection,
                       const std::vector<std::string>& colors, std::ostream& out);
std::size_t export_svg(const CurveSamples& samples, Projection projection,
                       const std::vector<std::string>& colors,
                       const std::filesystem::path& destination);
std::size_t export_svg(const DoubleHelix& helix, Projection projection,
                       const std::vector<std::string>& colors, std::ostream& out);
std::size_t export_svg(const DoubleHelix& helix, Projection projection,
                       const std::vector<std::string>& colors,
                       const std::filesystem::path& destination);

std::size_t export_report(const IdentityReport& report, std::ostream& out);
std::size_t export_report(const IdentityReport& report,
                          const std::filesystem::path& destination);

// Stroke color a strand gets when the job does not override it.
std::string default_color(MapId id);

}  // namespace helixforge::io

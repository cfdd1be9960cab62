#include "helixforge/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace helixforge::io {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t write_stream(const std::string& payload, std::ostream& out, const char* who) {
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error(std::string(who) + ": stream write failed");
    return payload.size();
}

// Temp file beside the destination, then rename; readers never observe a
// partial file and a crash leaves the old content in place.
std::size_t write_atomic(const std::string& payload, const fs::path& destination,
                         const char* who) {
    fs::path tmp = destination;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error(std::string(who) + ": cannot open '" + tmp.string() +
                                     "' for writing");
        f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        f.flush();
        if (!f)
            throw std::runtime_error(std::string(who) + ": write to '" + tmp.string() +
                                     "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, destination, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error(std::string(who) + ": cannot move temp file onto '" +
                                 destination.string() + "': " + ec.message());
    }
    return payload.size();
}

void require_samples(const CurveSamples& samples, const char* who) {
    if (samples.grid.empty())
        throw std::domain_error(std::string(who) + ": nothing to export, empty sample set");
    if (samples.grid.size() != samples.points.size())
        throw std::invalid_argument(std::string(who) + ": grid and point counts differ");
}

// Round the double through its exported text so JSON numbers match what the
// CSV writer would emit.
double quantize(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

std::string render_csv(const std::vector<double>& grid, const std::vector<Vec3>& points) {
    std::string out = "t,x,y,z\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += format_number(grid[i]);
        out += ',';
        out += format_number(points[i].x);
        out += ',';
        out += format_number(points[i].y);
        out += ',';
        out += format_number(points[i].z);
        out += '\n';
    }
    return out;
}

json spec_to_json(const HelixSpec& spec) {
    return json{{"map", map_name(spec.map_id)},
                {"P", spec.params.P},
                {"D", spec.params.D},
                {"ratio", quantize(spec.ratio)},
                {"pitch", quantize(spec.pitch)},
                {"sign", spec.sign == RotationSign::Plus ? "+" : "-"}};
}

json strand_to_json(const CurveSamples& samples) {
    json grid = json::array();
    for (double t : samples.grid) grid.push_back(quantize(t));
    json points = json::array();
    for (const Vec3& p : samples.points)
        points.push_back({quantize(p.x), quantize(p.y), quantize(p.z)});
    return json{{"spec", spec_to_json(samples.spec)},
                {"grid", std::move(grid)},
                {"points", std::move(points)}};
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

void append_obj_vertices(const CurveSamples& samples, std::string& out) {
    for (const Vec3& p : samples.points) {
        out += "v ";
        out += format_number(p.x);
        out += ' ';
        out += format_number(p.y);
        out += ' ';
        out += format_number(p.z);
        out += '\n';
    }
}

// OBJ indices are 1-based; base is the index of the strand's first vertex.
void append_obj_strand(std::size_t base, std::size_t count, std::string& out) {
    for (std::size_t i = 0; i + 1 < count; ++i)
        out += "l " + std::to_string(base + i) + " " + std::to_string(base + i + 1) + "\n";
}

std::string render_obj(const CurveSamples& samples) {
    std::string out;
    append_obj_vertices(samples, out);
    append_obj_strand(1, samples.points.size(), out);
    return out;
}

std::string render_obj(const DoubleHelix& helix) {
    const std::size_t n = helix.strand_a.points.size();
    std::string out;
    append_obj_vertices(helix.strand_a, out);
    append_obj_vertices(helix.strand_b, out);
    append_obj_strand(1, n, out);
    append_obj_strand(1 + n, helix.strand_b.points.size(), out);
    for (const auto& [ia, ib] : helix.rungs)
        out += "l " + std::to_string(1 + ia) + " " + std::to_string(1 + n + ib) + "\n";
    return out;
}

struct Point2 {
    double a;
    double b;
};

// SVG's y axis grows downward, so the second coordinate is negated here and
// everything downstream works in final SVG coordinates.
Point2 project(const Vec3& p, Projection projection) {
    switch (projection) {
        case Projection::XY: return {p.x, -p.y};
        case Projection::XZ: return {p.x, -p.z};
        case Projection::YZ: return {p.y, -p.z};
        case Projection::None: break;
    }
    throw std::domain_error("export_svg: a projection plane is required");
}

struct Bounds {
    double min_a = 0.0, min_b = 0.0, max_a = 0.0, max_b = 0.0;
    bool any = false;

    void include(Point2 p) {
        if (!any) {
            min_a = max_a = p.a;
            min_b = max_b = p.b;
            any = true;
        } else {
            min_a = std::min(min_a, p.a);
            max_a = std::max(max_a, p.a);
            min_b = std::min(min_b, p.b);
            max_b = std::max(max_b, p.b);
        }
    }
};

std::string svg_path(const CurveSamples& samples, Projection projection,
                     const std::string& color, const std::string& stroke) {
    std::string d;
    for (std::size_t i = 0; i < samples.points.size(); ++i) {
        const Point2 q = project(samples.points[i], projection);
        d += (i == 0 ? "M " : " L ");
        d += format_number(q.a);
        d += ' ';
        d += format_number(q.b);
    }
    return "<path fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + stroke +
           "\" d=\"" + d + "\"/>\n";
}

// Integer points the strand passes through inside its own parameter window,
// drawn as filled dots.
std::string svg_lattice_dots(const CurveSamples& samples, Projection projection,
                             const std::string& color, const std::string& radius) {
    const long long j_min = static_cast<long long>(std::ceil(samples.grid.front()));
    const long long j_max = static_cast<long long>(std::floor(samples.grid.back()));
    if (j_min > j_max) return {};
    const LatticePointSet set = lattice_points(samples.spec, j_min, j_max);
    if (!set.ratio_is_integer) return {};
    std::string out;
    for (const LatticePoint& p : set.points) {
        const Point2 q = project({static_cast<double>(p.x), static_cast<double>(p.y),
                                  static_cast<double>(p.z)},
                                 projection);
        out += "<circle cx=\"" + format_number(q.a) + "\" cy=\"" + format_number(q.b) +
               "\" r=\"" + radius + "\" fill=\"" + color + "\"/>\n";
    }
    return out;
}

std::string strand_color(const CurveSamples& samples, const std::vector<std::string>& colors,
                         std::size_t index) {
    if (index < colors.size() && !colors[index].empty()) return colors[index];
    return default_color(samples.spec.map_id);
}

std::string render_svg(const std::vector<const CurveSamples*>& strands,
                       const std::vector<std::pair<std::size_t, std::size_t>>& rungs,
                       Projection projection, const std::vector<std::string>& colors) {
    if (projection == Projection::None)
        throw std::domain_error("export_svg: a projection plane is required");
    for (const CurveSamples* s : strands) require_samples(*s, "export_svg");

    Bounds bounds;
    for (const CurveSamples* s : strands)
        for (const Vec3& p : s->points) bounds.include(project(p, projection));

    const double extent = std::max(bounds.max_a - bounds.min_a, bounds.max_b - bounds.min_b);
    const double margin = extent > 0.0 ? 0.05 * extent : 1.0;
    const double min_a = bounds.min_a - margin;
    const double min_b = bounds.min_b - margin;
    const double width = (bounds.max_a - bounds.min_a) + 2.0 * margin;
    const double height = (bounds.max_b - bounds.min_b) + 2.0 * margin;
    const double stroke_w = std::max(width, height) / 250.0;
    const std::string stroke = format_number(stroke_w);
    const std::string dot_radius = format_number(2.0 * stroke_w);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
                      format_number(min_a) + " " + format_number(min_b) + " " +
                      format_number(width) + " " + format_number(height) +
                      "\" width=\"800\" height=\"" +
                      format_number(800.0 * height / width) + "\">\n";
    for (std::size_t i = 0; i < strands.size(); ++i)
        out += svg_path(*strands[i], projection, strand_color(*strands[i], colors, i), stroke);
    if (!rungs.empty()) {
        std::string d;
        for (const auto& [ia, ib] : rungs) {
            const Point2 qa = project(strands[0]->points[ia], projection);
            const Point2 qb = project(strands[1]->points[ib], projection);
            d += (d.empty() ? "M " : " M ");
            d += format_number(qa.a) + " " + format_number(qa.b) + " L " +
                 format_number(qb.a) + " " + format_number(qb.b);
        }
        out += "<path fill=\"none\" stroke=\"#888888\" stroke-width=\"" + stroke +
               "\" d=\"" + d + "\"/>\n";
    }
    for (std::size_t i = 0; i < strands.size(); ++i)
        out += svg_lattice_dots(*strands[i], projection,
                                strand_color(*strands[i], colors, i), dot_radius);
    out += "</svg>\n";
    return out;
}

void require_double(const DoubleHelix& helix, const char* who) {
    require_samples(helix.strand_a, who);
    require_samples(helix.strand_b, who);
    for (const auto& [ia, ib] : helix.rungs)
        if (ia >= helix.strand_a.points.size() || ib >= helix.strand_b.points.size())
            throw std::invalid_argument(std::string(who) + ": rung index out of range");
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) return "0";
    if (!std::isfinite(v))
        throw std::domain_error("format_number: cannot format a non-finite value");
    char buf[40];
    // Among all precisions that read back exactly, keep the shortest text;
    // "800" beats the equally faithful "8e+02" a lower precision yields.
    std::string best;
    for (int precision = 1; precision <= 12; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) != v) continue;
        if (best.empty() || std::char_traits<char>::length(buf) < best.size()) best = buf;
    }
    if (!best.empty()) return best;
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* format_name(Format f) {
    switch (f) {
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Obj: return "obj";
        case Format::Svg: return "svg";
        case Format::Report: return "report";
    }
    throw std::invalid_argument("format_name: unknown format");
}

Format parse_format(const std::string& name) {
    for (Format f : {Format::Csv, Format::Json, Format::Obj, Format::Svg, Format::Report})
        if (name == format_name(f)) return f;
    throw std::invalid_argument("parse_format: unknown format '" + name + "'");
}

const char* projection_name(Projection p) {
    switch (p) {
        case Projection::None: return "none";
        case Projection::XY: return "xy";
        case Projection::XZ: return "xz";
        case Projection::YZ: return "yz";
    }
    throw std::invalid_argument("projection_name: unknown projection");
}

Projection parse_projection(const std::string& name) {
    for (Projection p : {Projection::None, Projection::XY, Projection::XZ, Projection::YZ})
        if (name == projection_name(p)) return p;
    throw std::invalid_argument("parse_projection: unknown projection '" + name + "'");
}

std::size_t export_csv(const CurveSamples& samples, std::ostream& out) {
    require_samples(samples, "export_csv");
    return write_stream(render_csv(samples.grid, samples.points), out, "export_csv");
}

std::size_t export_csv(const CurveSamples& samples, const fs::path& destination) {
    require_samples(samples, "export_csv");
    return write_atomic(render_csv(samples.grid, samples.points), destination, "export_csv");
}

CsvData import_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("import_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,x,y,z")
        throw std::runtime_error("import_csv: unexpected header '" + line + "'");
    CsvData data;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double field[4];
        const char* cursor = line.c_str();
        for (int i = 0; i < 4; ++i) {
            char* end = nullptr;
            field[i] = std::strtod(cursor, &end);
            if (end == cursor)
                throw std::runtime_error("import_csv: bad number on line " +
                                         std::to_string(lineno));
            cursor = end;
            if (i < 3) {
                if (*cursor != ',')
                    throw std::runtime_error("import_csv: expected comma on line " +
                                             std::to_string(lineno));
                ++cursor;
            }
        }
        if (*cursor != '\0')
            throw std::runtime_error("import_csv: trailing junk on line " +
                                     std::to_string(lineno));
        data.grid.push_back(field[0]);
        data.points.push_back({field[1], field[2], field[3]});
    }
    if (data.grid.empty()) throw std::runtime_error("import_csv: no data rows");
    return data;
}

CsvData import_csv(const fs::path& source) {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw std::runtime_error("import_csv: cannot open '" + source.string() + "'");
    return import_csv(f);
}

std::size_t export_json(const CurveSamples& samples, std::ostream& out) {
    require_samples(samples, "export_json");
    return write_stream(render_json(strand_to_json(samples)), out, "export_json");
}

std::size_t export_json(const CurveSamples& samples, const fs::path& destination) {
    require_samples(samples, "export_json");
    return write_atomic(render_json(strand_to_json(samples)), destination, "export_json");
}

namespace {

json double_to_json(const DoubleHelix& helix) {
    json rungs = json::array();
    for (const auto& [ia, ib] : helix.rungs) rungs.push_back({ia, ib});
    return json{{"strands", {strand_to_json(helix.strand_a), strand_to_json(helix.strand_b)}},
                {"rungs", std::move(rungs)}};
}

}  // namespace

std::size_t export_json(const DoubleHelix& helix, std::ostream& out) {
    require_double(helix, "export_json");
    return write_stream(render_json(double_to_json(helix)), out, "export_json");
}

std::size_t export_json(const DoubleHelix& helix, const fs::path& destination) {
    require_double(helix, "export_json");
    return write_atomic(render_json(double_to_json(helix)), destination, "export_json");
}

std::size_t export_obj(const CurveSamples& samples, std::ostream& out) {
    require_samples(samples, "export_obj");
    return write_stream(render_obj(samples), out, "export_obj");
}

std::size_t export_obj(const CurveSamples& samples, const fs::path& destination) {
    require_samples(samples, "export_obj");
    return write_atomic(render_obj(samples), destination, "export_obj");
}

std::size_t export_obj(const DoubleHelix& helix, std::ostream& out) {
    require_double(helix, "export_obj");
    return write_stream(render_obj(helix), out, "export_obj");
}

std::size_t export_obj(const DoubleHelix& helix, const fs::path& destination) {
    require_double(helix, "export_obj");
    return write_atomic(render_obj(helix), destination, "export_obj");
}

std::size_t export_svg(const CurveSamples& samples, Projection projection,
                       const std::vector<std::string>& colors, std::ostream& out) {
    return write_stream(render_svg({&samples}, {}, projection, colors), out, "export_svg");
}

std::size_t export_svg(const CurveSamples& samples, Projection projection,
                       const std::vector<std::string>& colors, const fs::path& destination) {
    return write_atomic(render_svg({&samples}, {}, projection, colors), destination,
                        "export_svg");
}

std::size_t export_svg(const DoubleHelix& helix, Projection projection,
                       const std::vector<std::string>& colors, std::ostream& out) {
    require_double(helix, "export_svg");
    return write_stream(
        render_svg({&helix.strand_a, &helix.strand_b}, helix.rungs, projection, colors),
        out, "export_svg");
}

std::size_t export_svg(const DoubleHelix& helix, Projection projection,
                       const std::vector<std::string>& colors, const fs::path& destination) {
    require_double(helix, "export_svg");
    return write_atomic(
        render_svg({&helix.strand_a, &helix.strand_b}, helix.rungs, projection, colors),
        destination, "export_svg");
}

std::size_t export_report(const IdentityReport& report, std::ostream& out) {
    return write_stream(to_text(report), out, "export_report");
}

std::size_t export_report(const IdentityReport& report, const fs::path& destination) {
    return write_atomic(to_text(report), destination, "export_report");
}

std::string default_color(MapId id) {
    switch (id) {
        // Lucas-built strands in black, Fibonacci-built in blue, the
        // Pell-form family in red.
        case MapId::Psi1:
        case MapId::Psi7:
        case MapId::LMap: return "#000000";
        case MapId::Psi2:
        case MapId::Psi4: return "#0000ff";
        case MapId::Psi3:
        case MapId::Psi5:
        case MapId::Psi6: return "#ff0000";
    }
    throw std::invalid_argument("default_color: unknown map id");
}

namespace {

struct StreamExport {
    const ExportJob& job;
    std::ostream& out;

    std::size_t operator()(const CurveSamples& samples) const {
        switch (job.format) {
            case Format::Csv: return export_csv(samples, out);
            case Format::Json: return export_json(samples, out);
            case Format::Obj: return export_obj(samples, out);
            case Format::Svg: return export_svg(samples, job.projection, job.colors, out);
            case Format::Report: break;
        }
        throw std::domain_error("run_export: a curve cannot be rendered as a report");
    }
    std::size_t operator()(const DoubleHelix& helix) const {
        switch (job.format) {
            case Format::Csv:
                throw std::domain_error(
                    "run_export: CSV holds a single strand; export the strands "
                    "separately or pick json/obj/svg");
            case Format::Json: return export_json(helix, out);
            case Format::Obj: return export_obj(helix, out);
            case Format::Svg: return export_svg(helix, job.projection, job.colors, out);
            case Format::Report: break;
        }
        throw std::domain_error("run_export: a double helix cannot be rendered as a report");
    }
    std::size_t operator()(const IdentityReport& report) const {
        if (job.format != Format::Report)
            throw std::domain_error("run_export: an identity report only renders as report");
        return export_report(report, out);
    }
};

void validate_job(const ExportJob& job) {
    if (job.format == Format::Svg) {
        if (job.projection == Projection::None)
            throw std::domain_error("run_export: svg requires a projection plane");
    } else if (job.projection != Projection::None) {
        throw std::domain_error("run_export: projection only applies to svg");
    }
}

}  // namespace

std::size_t run_export(const ExportJob& job, std::ostream& out) {
    validate_job(job);
    return std::visit(StreamExport{job, out}, job.source);
}

std::size_t run_export(const ExportJob& job, const fs::path& destination) {
    validate_job(job);
    std::ostringstream buffer;
    const std::size_t bytes = run_export(job, buffer);
    const std::string payload = buffer.str();
    (void)bytes;
    return write_atomic(payload, destination, "run_export");
}

}  // namespace helixforge::io

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "helixforge/binet.hpp"

namespace helixforge {

// The family of quadratic curve maps built from g and h. Each one traces a
// circular helix of pitch 2; only the radius and the rotation sign differ.
enum class MapId { Psi1, Psi2, Psi3, Psi4, Psi5, Psi6, Psi7, LMap };

const char* map_name(MapId id);
MapId parse_map(const std::string& name);
const std::vector<MapId>& all_maps();

enum class RotationSign { Plus, Minus };

// Identity card of one map: closed form sign * ratio * e^{i pi t}, so the
// planar part winds once per two units of t (pitch 2, always).
struct HelixSpec {
    MapId map_id = MapId::Psi2;
    double ratio = 1.0;
    double pitch = 2.0;
    RotationSign sign = RotationSign::Plus;
    MetallicParams params;
};

HelixSpec make_spec(MapId id, const MetallicParams& params);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// One sampled strand: points[i] = (Re f(grid[i]), Im f(grid[i]), grid[i]).
struct CurveSamples {
    HelixSpec spec;
    std::vector<double> grid;
    std::vector<Vec3> points;
};

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    long long z = 0;
};

// All integer points on the strand with z in [j_min, j_max]. A strand whose
// ratio is not an integer passes through no integer points at all; that case
// is reported through the flag rather than silently as an empty list.
struct LatticePointSet {
    std::vector<LatticePoint> points;
    bool ratio_is_integer = false;
};

// Two strands over one shared grid plus rungs connecting equal-parameter
// samples, the scaffold for ladder-style figures.
struct DoubleHelix {
    CurveSamples strand_a;
    CurveSamples strand_b;
    std::vector<std::pair<std::size_t, std::size_t>> rungs;
};

struct SamplingOptions {
    std::size_t max_points = 10'000'000;  // refuse absurd grids instead of thrashing
    std::size_t verify_points = 100;      // spot-check budget, definition vs closed form
};

// f evaluated from its defining g/h combination; needs g and h within
// [t - 1, t + 1] (and 2t for the doubling map), so its usable range is
// slightly narrower than the closed form's.
Complex psi_def(MapId id, const MetallicParams& params, double t);

// f evaluated from the closed form sign * ratio * e^{i pi t}.
Complex psi_closed(MapId id, const MetallicParams& params, double t);
Complex psi_closed(const HelixSpec& spec, double t);

// Point on the reference helix of the given radius and pitch at turn angle
// theta: (ratio cos theta, ratio sin theta, pitch * theta / 2 pi).
Vec3 helix_point(double ratio, double pitch, double theta);

// Samples the closed form over the uniform grid t_min, t_min + dt, ...,
// appending t_max when the last step lands short. A subset of samples
// (opts.verify_points of them) is cross-checked against the defining
// combination; disagreement beyond tolerance is an internal fault and throws.
CurveSamples curve_sample(MapId id, const MetallicParams& params, double t_min,
                          double t_max, double dt, const SamplingOptions& opts = {});

LatticePointSet lattice_points(const HelixSpec& spec, long long j_min, long long j_max);

// Samples both strands over the identical grid and lays rungs every
// rung_stride samples (indices 0, stride, 2 stride, ...).
DoubleHelix compose_double_helix(const HelixSpec& a, const HelixSpec& b, double t_min,
                                 double t_max, double dt, std::size_t rung_stride,
                                 const SamplingOptions& opts = {});

// Pairs two pre-sampled strands; their grids must match element for element.
DoubleHelix compose_double_helix(CurveSamples a, CurveSamples b, std::size_t rung_stride);

}  // namespace helixforge

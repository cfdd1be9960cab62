#include "helixforge/helix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "binet_detail.hpp"
#include "helixforge/tolerances.hpp"

namespace helixforge {
namespace {

// The defining combinations reach one unit to each side of t, and the
// doubling map reaches 2t.
double definition_reach(double t) {
    return std::max({std::abs(t - 1.0), std::abs(t + 1.0), std::abs(2.0 * t)});
}

detail::CompLD psi_def_ld(MapId id, const MetallicParams& params, long double t) {
    const long double D = static_cast<long double>(params.D);
    switch (id) {
        case MapId::Psi1: {
            const detail::CompLD gt = detail::g_eval_ld(params, t);
            return gt * gt -
                   detail::g_eval_ld(params, t - 1.0L) * detail::g_eval_ld(params, t + 1.0L);
        }
        case MapId::Psi2: {
            const detail::CompLD ht = detail::h_eval_ld(params, t);
            return detail::h_eval_ld(params, t - 1.0L) * detail::h_eval_ld(params, t + 1.0L) -
                   ht * ht;
        }
        case MapId::Psi3: {
            const detail::CompLD gt = detail::g_eval_ld(params, t);
            const detail::CompLD ht = detail::h_eval_ld(params, t);
            return gt * gt - D * ht * ht;
        }
        case MapId::Psi4:
            return psi_def_ld(MapId::Psi1, params, t) -
                   (D - 1.0L) * psi_def_ld(MapId::Psi2, params, t);
        case MapId::Psi5:
            return psi_def_ld(MapId::Psi3, params, t) -
                   2.0L * psi_def_ld(MapId::Psi2, params, t);
        case MapId::Psi6:
            return psi_def_ld(MapId::Psi3, params, t) - psi_def_ld(MapId::Psi2, params, t);
        case MapId::Psi7:
            return 2.0L * D * psi_def_ld(MapId::Psi2, params, t) -
                   psi_def_ld(MapId::Psi1, params, t);
        case MapId::LMap: {
            const detail::CompLD gt = detail::g_eval_ld(params, t);
            return detail::g_eval_ld(params, 2.0L * t) - gt * gt;
        }
    }
    throw std::invalid_argument("psi_def: unknown map id");
}

// The defining combination cancels terms of size lambda1^(2|t|) down to an
// O(ratio) value. Past the point where that magnitude times the evaluation
// slack overtakes a quarter of the tolerance, no floating-point evaluation
// of the definition could meet the bound, so the cross-check stays inside
// the window where failure would be informative.
bool definition_check_meaningful(const MetallicParams& params, double t, double tol_abs) {
    const double log_lambda = std::log(params.lambda1);
    const double log_scale = 2.0 * std::abs(t) * log_lambda;
    const double slack = (2.0 * std::abs(t) * log_lambda + 4.0) * 1e-19;
    return log_scale + std::log(slack) < std::log(0.25 * tol_abs);
}

std::vector<double> uniform_grid(double t_min, double t_max, double dt,
                                 std::size_t max_points) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !std::isfinite(dt))
        throw std::domain_error("curve_sample: grid parameters must be finite");
    if (!(dt > 0.0)) throw std::domain_error("curve_sample: dt must be positive");
    if (!(t_min < t_max)) throw std::domain_error("curve_sample: requires t_min < t_max");

    const double estimate = std::floor((t_max - t_min) / dt);
    if (!(estimate < static_cast<double>(max_points)))
        throw std::length_error("curve_sample: grid would exceed the cap of " +
                                std::to_string(max_points) + " points");
    // Largest n with t_min + n dt <= t_max, settled by direct comparison so
    // rounding in the division cannot drop or duplicate the last node.
    long long n = static_cast<long long>(estimate);
    while (n > 0 && t_min + static_cast<double>(n) * dt > t_max) --n;
    while (t_min + static_cast<double>(n + 1) * dt <= t_max) ++n;

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 2);
    for (long long i = 0; i <= n; ++i)
        grid.push_back(t_min + static_cast<double>(i) * dt);
    if (grid.back() < t_max) grid.push_back(t_max);
    if (grid.size() > max_points)
        throw std::length_error("curve_sample: grid would exceed the cap of " +
                                std::to_string(max_points) + " points");
    return grid;
}

void verify_against_definition(const CurveSamples& samples, std::size_t budget) {
    if (samples.grid.empty() || budget == 0) return;
    const double tol = tolerances().closed_form_rel * samples.spec.ratio;
    const double horizon = evaluation_horizon(samples.spec.params);
    const std::size_t m = std::min(budget, samples.grid.size());
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = (m == 1) ? 0 : j * (samples.grid.size() - 1) / (m - 1);
        const double t = samples.grid[i];
        if (definition_reach(t) > horizon) continue;
        if (!definition_check_meaningful(samples.spec.params, t, tol)) continue;
        const Complex defined = psi_def(samples.spec.map_id, samples.spec.params, t);
        const Complex closed(samples.points[i].x, samples.points[i].y);
        if (std::abs(defined - closed) > tol)
            throw std::runtime_error("curve_sample: defining combination and closed form "
                                     "disagree at t = " + std::to_string(t));
    }
}

}  // namespace

const char* map_name(MapId id) {
    switch (id) {
        case MapId::Psi1: return "psi1";
        case MapId::Psi2: return "psi2";
        case MapId::Psi3: return "psi3";
        case MapId::Psi4: return "psi4";
        case MapId::Psi5: return "psi5";
        case MapId::Psi6: return "psi6";
        case MapId::Psi7: return "psi7";
        case MapId::LMap: return "lmap";
    }
    throw std::invalid_argument("map_name: unknown map id");
}

MapId parse_map(const std::string& name) {
    for (MapId id : all_maps())
        if (name == map_name(id)) return id;
    throw std::invalid_argument("parse_map: unknown map '" + name + "'");
}

const std::vector<MapId>& all_maps() {
    static const std::vector<MapId> ids = {MapId::Psi1, MapId::Psi2, MapId::Psi3,
                                           MapId::Psi4, MapId::Psi5, MapId::Psi6,
                                           MapId::Psi7, MapId::LMap};
    return ids;
}

HelixSpec make_spec(MapId id, const MetallicParams& params) {
    HelixSpec spec;
    spec.map_id = id;
    spec.pitch = 2.0;
    spec.sign = RotationSign::Plus;
    spec.params = params;
    switch (id) {
        case MapId::Psi1: spec.ratio = static_cast<double>(params.D); break;
        case MapId::Psi2: spec.ratio = 1.0; break;
        case MapId::Psi3: spec.ratio = 4.0; break;
        case MapId::Psi4: spec.ratio = 1.0; break;
        case MapId::Psi5: spec.ratio = 2.0; break;
        case MapId::Psi6: spec.ratio = 3.0; break;
        case MapId::Psi7: spec.ratio = static_cast<double>(params.D); break;
        case MapId::LMap:
            spec.ratio = 2.0;
            spec.sign = RotationSign::Minus;
            break;
    }
    return spec;
}

Complex psi_def(MapId id, const MetallicParams& params, double t) {
    if (definition_reach(t) > evaluation_horizon(params))
        throw std::overflow_error("psi_def: t = " + std::to_string(t) +
                                  " needs values outside the evaluation horizon");
    const detail::CompLD z = psi_def_ld(id, params, t);
    const Complex out(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw std::overflow_error("psi_def: evaluation produced a non-finite value");
    return out;
}

Complex psi_closed(const HelixSpec& spec, double t) {
    const double r = spec.sign == RotationSign::Plus ? spec.ratio : -spec.ratio;
    return Complex(r * cospi(t), r * sinpi(t));
}

Complex psi_closed(MapId id, const MetallicParams& params, double t) {
    return psi_closed(make_spec(id, params), t);
}

Vec3 helix_point(double ratio, double pitch, double theta) {
    if (!(ratio > 0.0)) throw std::domain_error("helix_point: ratio must be positive");
    if (!(pitch > 0.0)) throw std::domain_error("helix_point: pitch must be positive");
    return {ratio * std::cos(theta), ratio * std::sin(theta),
            pitch * theta / (2.0 * std::numbers::pi)};
}

CurveSamples curve_sample(MapId id, const MetallicParams& params, double t_min,
                          double t_max, double dt, const SamplingOptions& opts) {
    CurveSamples out;
    out.spec = make_spec(id, params);
    const double horizon = evaluation_horizon(params);
    if (std::max(std::abs(t_min), std::abs(t_max)) > horizon)
        throw std::overflow_error("curve_sample: grid endpoints lie outside the "
                                  "evaluation horizon");
    out.grid = uniform_grid(t_min, t_max, dt, opts.max_points);
    out.points.reserve(out.grid.size());
    for (double t : out.grid) {
        const Complex z = psi_closed(out.spec, t);
        out.points.push_back({z.real(), z.imag(), t});
    }
    verify_against_definition(out, opts.verify_points);
    return out;
}

LatticePointSet lattice_points(const HelixSpec& spec, long long j_min, long long j_max) {
    LatticePointSet out;
    const double r = spec.ratio;
    if (!(r > 0.0) || r != std::floor(r) ||
        r > static_cast<double>(std::numeric_limits<long long>::max() / 2))
        return out;  // no integer radius, hence no integer points anywhere
    out.ratio_is_integer = true;
    const long long radius = static_cast<long long>(r);
    const long long orient = spec.sign == RotationSign::Plus ? 1 : -1;
    for (long long j = j_min; j <= j_max; ++j) {
        const long long parity = (j % 2 == 0) ? 1 : -1;
        out.points.push_back({orient * parity * radius, 0, j});
    }
    return out;
}

DoubleHelix compose_double_helix(CurveSamples a, CurveSamples b, std::size_t rung_stride) {
    if (rung_stride == 0)
        throw std::domain_error("compose_double_helix: rung_stride must be positive");
    if (a.spec.pitch != b.spec.pitch)
        throw std::domain_error("compose_double_helix: strands must share one pitch");
    if (a.grid != b.grid)
        throw std::domain_error("compose_double_helix: strand grids differ");
    DoubleHelix out{std::move(a), std::move(b), {}};
    for (std::size_t i = 0; i < out.strand_a.grid.size(); i += rung_stride)
        out.rungs.emplace_back(i, i);
    return out;
}

DoubleHelix compose_double_helix(const HelixSpec& a, const HelixSpec& b, double t_min,
                                 double t_max, double dt, std::size_t rung_stride,
                                 const SamplingOptions& opts) {
    return compose_double_helix(
        curve_sample(a.map_id, a.params, t_min, t_max, dt, opts),
        curve_sample(b.map_id, b.params, t_min, t_max, dt, opts), rung_stride);
}

}  // namespace helixforge

#include "mcav/geometry.hpp"

#include <algorithm>
#include <limits>

namespace mcav {

void RoadConfig::validate() const {
    if (lane_count < 2) throw ConfigError("road.lane_count must be >= 2");
    if (lane_width <= 0) throw ConfigError("road.lane_width must be > 0");
    if (highway_length <= 0) throw ConfigError("road.highway_length must be > 0");
    if (!(0 < ramp_merge_start && ramp_merge_start < ramp_merge_end &&
          ramp_merge_end < highway_length))
        throw ConfigError("road merge zone must satisfy 0 < ramp_merge_start < ramp_merge_end < highway_length");
    if (ramp_approach_length <= 0) throw ConfigError("road.ramp_approach_length must be > 0");
    if (ramp_angle <= 0 || ramp_angle >= M_PI / 2)
        throw ConfigError("road.ramp_angle must lie in (0, pi/2)");
}

RoadNetwork::RoadNetwork(const RoadConfig& config) : cfg_(config) {
    cfg_.validate();
    accel_lane_len_ = cfg_.ramp_merge_end - cfg_.ramp_merge_start;
    ramp_join_ = {cfg_.ramp_merge_start, -cfg_.lane_width};
    ramp_origin_ = {cfg_.ramp_merge_start - cfg_.ramp_approach_length * std::cos(cfg_.ramp_angle),
                    -cfg_.lane_width - cfg_.ramp_approach_length * std::sin(cfg_.ramp_angle)};
}

RoadNetwork build_road(const RoadConfig& config) { return RoadNetwork(config); }

double RoadNetwork::lane_center_y(int lane) const {
    if (lane < 0 || lane >= cfg_.lane_count) throw std::domain_error("lane index out of range");
    return lane * cfg_.lane_width;
}

double RoadNetwork::lane_length(LaneRef lane) const {
    if (lane.is_ramp()) return cfg_.ramp_approach_length + accel_lane_len_;
    return cfg_.highway_length;
}

PosePoint RoadNetwork::sample(LaneRef lane, double s) const {
    if (lane.is_ramp()) {
        s = std::clamp(s, 0.0, lane_length(lane));
        if (s <= cfg_.ramp_approach_length) {
            const double c = std::cos(cfg_.ramp_angle), sn = std::sin(cfg_.ramp_angle);
            return {{ramp_origin_.x + s * c, ramp_origin_.y + s * sn}, cfg_.ramp_angle};
        }
        const double u = s - cfg_.ramp_approach_length;
        return {{cfg_.ramp_merge_start + u, -cfg_.lane_width}, 0.0};
    }
    s = std::clamp(s, 0.0, cfg_.highway_length);
    return {{s, lane_center_y(lane.index)}, 0.0};
}

namespace {

// Projection of p onto segment a->b; returns (arc length along segment,
// squared distance, signed offset with positive = left of segment direction).
struct SegProj {
    double s, dist2, offset;
};

SegProj project_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len = d.norm();
    const Vec2 dir{d.x / len, d.y / len};
    const Vec2 rel = p - a;
    const double t = std::clamp(rel.dot(dir), 0.0, len);
    const Vec2 closest = a + dir * t;
    const Vec2 delta = p - closest;
    // Left normal of dir is (-dir.y, dir.x).
    const double offset = delta.x * -dir.y + delta.y * dir.x;
    return {t, delta.dot(delta), offset};
}

}  // namespace

LaneProjection RoadNetwork::project_impl(Vec2 position) const {
    LaneProjection best;
    best.distance = std::numeric_limits<double>::infinity();

    // Highway lanes: straight lines y = lane * width over x in [0, length].
    for (int lane = 0; lane < cfg_.lane_count; ++lane) {
        auto sp = project_segment(position, {0.0, lane_center_y(lane)},
                                  {cfg_.highway_length, lane_center_y(lane)});
        const double dist = std::sqrt(sp.dist2);
        if (dist < best.distance) best = {LaneRef{lane}, sp.s, sp.offset, dist};
    }

    // Ramp: approach segment then acceleration lane. Ties go to the highway
    // (strict comparison above), and between the two ramp pieces to the
    // approach, which keeps the result deterministic.
    {
        auto sp = project_segment(position, ramp_origin_, ramp_join_);
        const double dist = std::sqrt(sp.dist2);
        if (dist < best.distance) best = {LaneRef::ramp(), sp.s, sp.offset, dist};
    }
    {
        auto sp = project_segment(position, ramp_join_, {cfg_.ramp_merge_end, -cfg_.lane_width});
        const double dist = std::sqrt(sp.dist2);
        if (dist < best.distance)
            best = {LaneRef::ramp(), cfg_.ramp_approach_length + sp.s, sp.offset, dist};
    }
    return best;
}

LaneProjection RoadNetwork::project_unchecked(Vec2 position) const { return project_impl(position); }

LaneProjection RoadNetwork::project(Vec2 position) const {
    const double margin = 2.0 * cfg_.lane_width;
    const double min_x = std::min(0.0, ramp_origin_.x) - margin;
    const double max_x = cfg_.highway_length + margin;
    const double min_y = ramp_origin_.y - margin;
    const double max_y = lane_center_y(cfg_.lane_count - 1) + margin;
    if (position.x < min_x || position.x > max_x || position.y < min_y || position.y > max_y)
        throw std::domain_error("position outside road bounding box");
    return project_impl(position);
}

bool RoadNetwork::on_drivable_surface(Vec2 position) const {
    const double half = cfg_.lane_width / 2.0;
    // Highway band, unbounded in x.
    if (position.y >= -half && position.y <= lane_center_y(cfg_.lane_count - 1) + half) return true;
    // Acceleration lane.
    if (position.x >= cfg_.ramp_merge_start && position.x <= cfg_.ramp_merge_end &&
        position.y >= -cfg_.lane_width - half && position.y < -half)
        return true;
    // Ramp approach corridor.
    auto sp = project_segment(position, ramp_origin_, ramp_join_);
    return std::sqrt(sp.dist2) <= half;
}

}  // namespace mcav

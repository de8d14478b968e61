#pragma once

#include <vector>

#include "mcav/common.hpp"

namespace mcav {

/// Layout of the straight highway plus its merge ramp. Lane 0 is the
/// rightmost highway lane (y = 0), indices increase leftward (+y). The ramp
/// approaches from the right and blends into an acceleration lane that runs
/// parallel to lane 0 at y = -lane_width over [ramp_merge_start, ramp_merge_end].
struct RoadConfig {
    int lane_count = 3;
    double lane_width = 4.0;
    double highway_length = 1000.0;
    double ramp_merge_start = 400.0;
    double ramp_merge_end = 600.0;
    double ramp_approach_length = 200.0;
    double ramp_angle = 0.17453292519943295;  // 10 degrees

    void validate() const;
};

/// Lane identifier; RAMP covers both the approach and the acceleration lane.
struct LaneRef {
    static constexpr int RAMP = -1;
    int index = 0;

    bool is_ramp() const { return index == RAMP; }
    static LaneRef ramp() { return LaneRef{RAMP}; }
    bool operator==(const LaneRef&) const = default;
};

struct LaneProjection {
    LaneRef lane;
    double s = 0.0;        // arc length along the lane centerline
    double offset = 0.0;   // signed lateral offset, positive to the left
    double distance = 0.0; // unsigned distance to the centerline
};

struct PosePoint {
    Vec2 position;
    double heading = 0.0;
};

/// Immutable road geometry; safe to share across environment instances.
class RoadNetwork {
public:
    explicit RoadNetwork(const RoadConfig& config);

    const RoadConfig& config() const { return cfg_; }
    int lane_count() const { return cfg_.lane_count; }
    double lane_width() const { return cfg_.lane_width; }

    /// y coordinate of a highway lane centerline.
    double lane_center_y(int lane) const;

    /// Centerline length of a lane (ramp: approach + acceleration lane).
    double lane_length(LaneRef lane) const;

    /// Arc length of the ramp approach segment (= ramp s where the
    /// acceleration lane begins).
    double ramp_accel_start_s() const { return cfg_.ramp_approach_length; }

    /// World position of the start of the ramp approach.
    Vec2 ramp_origin() const { return ramp_origin_; }

    /// Point and heading on a lane centerline at arc length s (clamped to the
    /// lane's range).
    PosePoint sample(LaneRef lane, double s) const;

    /// Nearest lane, arc length and signed lateral offset for a position.
    /// Throws std::domain_error when the position is outside the road's
    /// bounding box.
    LaneProjection project(Vec2 position) const;

    /// Same as project() without the bounding-box precondition; used by the
    /// simulator for vehicles that may have left the road.
    LaneProjection project_unchecked(Vec2 position) const;

    /// True if x lies inside [ramp_merge_start, ramp_merge_end].
    bool in_merge_zone(double x) const {
        return x >= cfg_.ramp_merge_start && x <= cfg_.ramp_merge_end;
    }

    /// True if the point lies on the drivable surface (highway band, ramp
    /// approach corridor or acceleration lane). The highway band extends
    /// longitudinally without bound so vehicles may run past the modeled
    /// stretch without counting as off-road.
    bool on_drivable_surface(Vec2 position) const;

private:
    LaneProjection project_impl(Vec2 position) const;

    RoadConfig cfg_;
    Vec2 ramp_origin_;        // start of the approach segment
    Vec2 ramp_join_;          // where the approach meets the acceleration lane
    double accel_lane_len_ = 0.0;
};

RoadNetwork build_road(const RoadConfig& config);

}  // namespace mcav

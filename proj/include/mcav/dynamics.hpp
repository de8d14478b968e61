#pragma once

#include <cstdint>

#include "mcav/geometry.hpp"

namespace mcav {

using VehicleId = int32_t;

enum class VehicleKind { AV, HV, MERGING_HV };

/// Discrete meta-actions, in the fixed order of the action space.
enum class MetaAction : int { LANE_LEFT = 0, IDLE = 1, LANE_RIGHT = 2, ACCELERATE = 3, DECELERATE = 4 };
inline constexpr int kNumActions = 5;

struct VehicleState {
    VehicleId id = 0;
    VehicleKind kind = VehicleKind::HV;
    Vec2 position;
    double heading = 0.0;
    double speed = 0.0;  // m/s, never negative
    double length = 5.0;
    double width = 2.0;
    LaneRef current_lane;
    LaneRef target_lane;
    double target_speed = 0.0;
};

struct BicycleParams {
    double l_f = 1.25;  // CoG to front axle
    double l_r = 1.25;  // CoG to rear axle
    double max_steer = 0.5;
    double max_accel = 3.0;
    double max_decel = 8.0;  // positive magnitude

    double wheelbase() const { return l_f + l_r; }
    void validate() const;
};

/// Clamped low-level command.
struct ControlInput {
    double accel = 0.0;
    double steer = 0.0;

    static ControlInput clamped(double accel, double steer, const BicycleParams& p) {
        return {std::clamp(accel, -p.max_decel, p.max_accel),
                std::clamp(steer, -p.max_steer, p.max_steer)};
    }
};

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
    double integrator_limit = 1.0;

    void validate(const char* name) const;
};

/// Mutable memory of one PID channel.
struct PidState {
    double integral = 0.0;
    double prev_error = 0.0;
    bool primed = false;  // derivative term is skipped on the first sample

    void reset() { *this = PidState{}; }
};

/// Per-vehicle controller memory (longitudinal speed loop + lateral offset loop).
struct ControllerState {
    PidState longitudinal;
    PidState lateral;
};

/// Everything pid_track needs besides the vehicle itself.
struct ControlParams {
    BicycleParams bicycle;
    PidGains longitudinal{0.9, 0.05, 0.0, 2.0};
    PidGains lateral{1.7, 0.0, 0.1, 1.0};     // lateral offset -> lateral speed command
    double heading_gain = 5.0;                // heading error -> heading rate command
    double max_heading_correction = 0.7;      // bound on the commanded heading offset (rad)
    double v_max = 30.0;
    double speed_step = 2.0;

    void validate() const;
};

double pid_step(const PidGains& gains, PidState& state, double error, double dt);

/// Kinematic bicycle update, explicit Euler. Speed is floored at zero.
VehicleState step_bicycle(const VehicleState& state, const BicycleParams& params,
                          const ControlInput& control, double dt);

/// Translate a meta-action into new (target_lane, target_speed). Illegal lane
/// shifts (beyond the road edge, or leaving the ramp outside the merge zone)
/// degrade to IDLE.
struct Targets {
    LaneRef lane;
    double speed;
};
Targets meta_action_to_targets(MetaAction action, const VehicleState& state,
                               const RoadNetwork& road, double speed_step, double v_max);

/// Cascaded tracking controller: a PID on speed error gives accel; a PID on
/// lateral offset commands a heading correction toward the target-lane
/// centerline, and a proportional heading loop turns it into steering.
ControlInput pid_track(const VehicleState& state, const RoadNetwork& road,
                       const ControlParams& params, double dt, ControllerState& ctrl);

/// Lateral half of pid_track; used for vehicles whose acceleration comes from
/// a driver model instead of the speed loop.
double pid_track_steer(const VehicleState& state, const RoadNetwork& road,
                       const ControlParams& params, double dt, ControllerState& ctrl);

}  // namespace mcav

#include "mcav/dynamics.hpp"

namespace mcav {

void BicycleParams::validate() const {
    if (l_f <= 0 || l_r <= 0) throw ConfigError("bicycle axle distances must be > 0");
    if (max_steer <= 0 || max_accel <= 0 || max_decel <= 0)
        throw ConfigError("bicycle control bounds must be > 0");
}

void PidGains::validate(const char* name) const {
    if (kp < 0) throw ConfigError(std::string(name) + ".kp must be >= 0");
    if (integrator_limit <= 0) throw ConfigError(std::string(name) + ".integrator_limit must be > 0");
}

void ControlParams::validate() const {
    bicycle.validate();
    longitudinal.validate("dynamics.longitudinal_pid");
    lateral.validate("dynamics.lateral_pid");
    if (heading_gain <= 0) throw ConfigError("dynamics.heading_gain must be > 0");
    if (max_heading_correction <= 0 || max_heading_correction > M_PI / 2)
        throw ConfigError("dynamics.max_heading_correction must lie in (0, pi/2]");
    if (v_max <= 0) throw ConfigError("dynamics.v_max must be > 0");
    if (speed_step <= 0) throw ConfigError("dynamics.speed_step must be > 0");
}

double pid_step(const PidGains& gains, PidState& state, double error, double dt) {
    state.integral = std::clamp(state.integral + error * dt,
                                -gains.integrator_limit, gains.integrator_limit);
    double derivative = 0.0;
    if (state.primed) derivative = (error - state.prev_error) / dt;
    state.prev_error = error;
    state.primed = true;
    return gains.kp * error + gains.ki * state.integral + gains.kd * derivative;
}

VehicleState step_bicycle(const VehicleState& state, const BicycleParams& params,
                          const ControlInput& control, double dt) {
    if (dt <= 0) throw std::invalid_argument("step_bicycle: dt must be > 0");
    require_finite(state.position.x, "step_bicycle position.x");
    require_finite(state.position.y, "step_bicycle position.y");
    require_finite(state.heading, "step_bicycle heading");
    require_finite(state.speed, "step_bicycle speed");
    require_finite(control.accel, "step_bicycle accel");
    require_finite(control.steer, "step_bicycle steer");

    const double beta = std::atan(params.l_r * std::tan(control.steer) / params.wheelbase());
    VehicleState next = state;
    next.position.x = state.position.x + state.speed * std::cos(state.heading + beta) * dt;
    next.position.y = state.position.y + state.speed * std::sin(state.heading + beta) * dt;
    next.heading = wrap_angle(state.heading + (state.speed / params.l_r) * std::sin(beta) * dt);
    next.speed = std::max(0.0, state.speed + control.accel * dt);
    return next;
}

Targets meta_action_to_targets(MetaAction action, const VehicleState& state,
                               const RoadNetwork& road, double speed_step, double v_max) {
    Targets t{state.target_lane, state.target_speed};
    switch (action) {
        case MetaAction::IDLE:
            break;
        case MetaAction::LANE_LEFT:
            if (t.lane.is_ramp()) {
                // Leaving the ramp is only possible inside the merge zone.
                if (road.in_merge_zone(state.position.x)) t.lane = LaneRef{0};
            } else if (t.lane.index + 1 < road.lane_count()) {
                t.lane = LaneRef{t.lane.index + 1};
            }
            break;
        case MetaAction::LANE_RIGHT:
            // Lane 0 is the road edge for highway vehicles; the ramp is not a
            // legal target, so the shift clamps there.
            if (!t.lane.is_ramp() && t.lane.index > 0) t.lane = LaneRef{t.lane.index - 1};
            break;
        case MetaAction::ACCELERATE:
            t.speed = std::clamp(t.speed + speed_step, 0.0, v_max);
            break;
        case MetaAction::DECELERATE:
            t.speed = std::clamp(t.speed - speed_step, 0.0, v_max);
            break;
    }
    return t;
}

double pid_track_steer(const VehicleState& state, const RoadNetwork& road,
                       const ControlParams& params, double dt, ControllerState& ctrl) {
    require_finite(state.position.x, "pid_track position.x");
    require_finite(state.position.y, "pid_track position.y");
    require_finite(state.heading, "pid_track heading");
    require_finite(state.speed, "pid_track speed");

    // Offset and heading of the target-lane centerline at the vehicle.
    double lane_heading;
    double offset;
    if (state.target_lane.is_ramp()) {
        const auto proj = road.project_unchecked(state.position);
        if (proj.lane.is_ramp()) {
            const auto pose = road.sample(LaneRef::ramp(), proj.s);
            lane_heading = pose.heading;
            offset = proj.offset;
        } else {
            lane_heading = 0.0;
            offset = state.position.y - (-road.lane_width());
        }
    } else {
        lane_heading = 0.0;
        offset = state.position.y - road.lane_center_y(state.target_lane.index);
    }

    // Outer loop: offset -> lateral speed command -> bounded heading correction.
    const double lat_speed_cmd = pid_step(params.lateral, ctrl.lateral, -offset, dt);
    const double v = std::max(state.speed, 1.0);
    const double heading_corr = std::clamp(std::asin(std::clamp(lat_speed_cmd / v, -1.0, 1.0)),
                                           -params.max_heading_correction,
                                           params.max_heading_correction);

    // Inner loop: heading error -> heading rate -> steering via the inverse
    // bicycle relation psi_dot = v/l_r * sin(beta).
    const double heading_err = wrap_angle(lane_heading + heading_corr - state.heading);
    const double heading_rate_cmd = params.heading_gain * heading_err;
    const double sin_beta = std::clamp(heading_rate_cmd * params.bicycle.l_r / v, -0.95, 0.95);
    const double beta = std::asin(sin_beta);
    const double steer = std::atan(params.bicycle.wheelbase() * std::tan(beta) / params.bicycle.l_r);
    return std::clamp(steer, -params.bicycle.max_steer, params.bicycle.max_steer);
}

ControlInput pid_track(const VehicleState& state, const RoadNetwork& road,
                       const ControlParams& params, double dt, ControllerState& ctrl) {
    if (dt <= 0) throw std::invalid_argument("pid_track: dt must be > 0");
    const double accel = pid_step(params.longitudinal, ctrl.longitudinal,
                                  state.target_speed - state.speed, dt);
    const double steer = pid_track_steer(state, road, params, dt, ctrl);
    return ControlInput::clamped(accel, steer, params.bicycle);
}

}  // namespace mcav

#pragma once

#include <cmath>

#include "pegsim/lumped.hpp"

namespace pegsim {

// Closed-form steady-state powers for harmonic drive, ideal diodes, no
// leakage. These double as oracles for the time-domain simulator and as the
// fast path for design sweeps.

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// One harmonic operating point: displacement amplitude (m) and angular frequency (rad/s).
struct HarmonicOperatingPoint {
    double u_m = 0.0;
    double omega = 0.0;
};

/// Which quantity an optimum is expressed in.
enum class OptimalArgumentKind { load_resistance, load_voltage };

struct OptimalPoint {
    double p_max = 0.0;    ///< W
    double argument = 0.0; ///< ohm or V, see kind
    OptimalArgumentKind kind = OptimalArgumentKind::load_resistance;
};

/// Average power into a resistive load behind a full bridge and a large
/// smoothing capacitor:  P = R * (alpha*omega*U)^2 / (R*C0*omega + pi/2)^2.
inline double standard_power_resistive(const PiezoParams& p, const HarmonicOperatingPoint& op,
                                       double r_load) {
    const double i0 = p.alpha * op.omega * op.u_m;
    const double den = r_load * p.c0 * op.omega + kPi / 2.0;
    return r_load * i0 * i0 / (den * den);
}

/// Matched-load optimum of the resistive-load bridge.
inline OptimalPoint standard_optimum_resistive(const PiezoParams& p, const HarmonicOperatingPoint& op) {
    OptimalPoint out;
    out.kind = OptimalArgumentKind::load_resistance;
    out.argument = kPi / (2.0 * p.c0 * op.omega);
    out.p_max = p.alpha * p.alpha * op.omega * op.u_m * op.u_m / (2.0 * kPi * p.c0);
    return out;
}

/// Average power into a constant-voltage load (battery) behind the bridge.
/// The parabola goes negative past the open-circuit amplitude alpha*U/C0,
/// where a passive bridge simply stops conducting; clamp to zero there.
inline double standard_power_voltage(const PiezoParams& p, const HarmonicOperatingPoint& op,
                                     double v_load) {
    const double v_oc = p.alpha * op.u_m / p.c0;
    if (v_load >= v_oc) {
        return 0.0;
    }
    return (2.0 * p.c0 * op.omega / kPi) * v_load * (v_oc - v_load);
}

/// Optimal battery voltage and the (identical) maximum power.
inline OptimalPoint standard_optimum_voltage(const PiezoParams& p, const HarmonicOperatingPoint& op) {
    OptimalPoint out;
    out.kind = OptimalArgumentKind::load_voltage;
    out.argument = p.alpha * op.u_m / (2.0 * p.c0);
    out.p_max = (2.0 * p.c0 * op.omega / kPi) * out.argument * out.argument;
    return out;
}

/// Average power extracted by synchronous charge extraction, independent of
/// the load:  P = 2*alpha^2*omega*U^2 / (pi*C0).  Exactly 4x the matched
/// resistive optimum.
inline double sece_power(const PiezoParams& p, const HarmonicOperatingPoint& op) {
    return 2.0 * p.alpha * p.alpha * op.omega * op.u_m * op.u_m / (kPi * p.c0);
}

} // namespace pegsim

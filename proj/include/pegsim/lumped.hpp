#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pegsim {

/// Plate geometry and material constants of a piezoelectric insert.
/// All SI: e_coeff C/m^2, eps_s F/m, c_e Pa, area m^2, t_p m, w_p m.
struct MaterialGeometry {
    double e_coeff = 0.0; ///< piezoelectric stress coefficient; zero = inert material
    double eps_s = 0.0;   ///< permittivity at constant strain
    double c_e = 0.0;     ///< elastic stiffness at constant field
    double area = 0.0;    ///< electrode surface
    double t_p = 0.0;     ///< inter-electrode distance
    double w_p = 0.0;     ///< insert width along the strained direction
};

/// Lumped electrical model of the insert: what the circuit side sees.
struct PiezoParams {
    double c0 = 0.0;     ///< clamped capacitance, F
    double alpha = 0.0;  ///< force factor, N/V (== C/m)
    double k_e = 0.0;    ///< short-circuit stiffness, N/m
    double r_leak = std::numeric_limits<double>::infinity(); ///< electrode leakage, ohm; inf = ideal

    /// 1/r_leak with the infinite case collapsing to exactly zero.
    double leak_conductance() const {
        return std::isinf(r_leak) ? 0.0 : 1.0 / r_leak;
    }
};

namespace detail {
inline void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("lumped: ") + name + " must be finite and > 0");
    }
}
} // namespace detail

inline void validate(const MaterialGeometry& g) {
    if (!(g.e_coeff >= 0.0) || !std::isfinite(g.e_coeff)) {
        throw std::invalid_argument("lumped: e_coeff must be finite and >= 0");
    }
    detail::require_positive(g.eps_s, "eps_s");
    detail::require_positive(g.c_e, "c_e");
    detail::require_positive(g.area, "area");
    detail::require_positive(g.t_p, "t_p");
    detail::require_positive(g.w_p, "w_p");
}

inline void validate(const PiezoParams& p) {
    detail::require_positive(p.c0, "c0");
    detail::require_positive(p.k_e, "k_e");
    if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) {
        throw std::invalid_argument("lumped: alpha must be finite and >= 0");
    }
    if (!(p.r_leak > 0.0)) { // +inf passes
        throw std::invalid_argument("lumped: r_leak must be > 0 (may be infinite)");
    }
}

/// Reduce plate geometry to the lumped circuit parameters.
/// Leakage is not a geometric property; it stays infinite until the caller overrides it.
inline PiezoParams derive_lumped(const MaterialGeometry& g) {
    validate(g);
    PiezoParams p;
    p.c0 = g.eps_s * g.area / g.t_p;
    p.alpha = g.e_coeff * g.area / g.t_p;
    p.k_e = g.c_e * g.area / g.w_p;
    p.r_leak = std::numeric_limits<double>::infinity();
    return p;
}

/// Short-circuit current sourced by the moving insert: alpha * u_dot.
inline double piezo_current(const PiezoParams& p, double u_dot) {
    return p.alpha * u_dot;
}

/// Outgoing electrode charge at displacement u and electrode voltage v.
inline double electrode_charge(const PiezoParams& p, double u, double v) {
    return p.alpha * u - p.c0 * v;
}

/// Force the insert exerts back on the structure. Diagnostic only: the motion
/// is prescribed, so this never feeds back into the displacement.
inline double reaction_force(const PiezoParams& p, double u, double v) {
    return p.k_e * u + p.alpha * v;
}

} // namespace pegsim

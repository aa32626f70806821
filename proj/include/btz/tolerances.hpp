#pragma once

// Central numeric tolerances. All verification targets are tolerance based;
// closed-form exponentials recover exactness where possible.
namespace btz::tol {

inline constexpr double group = 1e-9;    // g^T eta g = eta residual
inline constexpr double algebra = 1e-12; // X^T eta + eta X residual
inline constexpr double quadric = 1e-9;  // |Q(p,p)-1| for AdS points
inline constexpr double sing = 1e-9;     // |t^2-y^2| singularity band
inline constexpr double angle = 1e-9;    // cap tangency band on the sphere
inline constexpr double den = 1e-12;     // vanishing denominator in root solve
inline constexpr double inv = 1e-9;      // |u'-x'| floor for lateral inversion

} // namespace btz::tol

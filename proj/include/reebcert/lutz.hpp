#ifndef REEBCERT_LUTZ_HPP
#define REEBCERT_LUTZ_HPP

#include <array>
#include <vector>

namespace reebcert {

/// Knotted fibration phi = (phi1, phi2) : T^3 -> R^2 scaled by epsilon.
struct LutzMap {
    double epsilon = 0.25;

    std::array<double, 2> phi(const std::array<double, 3> &theta) const;
    std::array<double, 3> grad_phi1(const std::array<double, 3> &theta) const;
    std::array<double, 3> grad_phi2(const std::array<double, 3> &theta) const;
    std::array<std::array<double, 3>, 3> hess_phi1(const std::array<double, 3> &theta) const;
    std::array<std::array<double, 3>, 3> hess_phi2(const std::array<double, 3> &theta) const;
};

enum class MorseKind { Maximum, Saddle, Minimum };

struct CriticalPoint {
    std::array<double, 3> theta{}; // in [0, 2pi)^3
    double value = 0.0;            // phi1^2 there
    MorseKind kind = MorseKind::Saddle;
    double gradient_norm = 0.0;    // Lagrange residual |grad(phi1^2) - lambda grad(phi2)|
    std::array<double, 2> hessian_eigs{}; // projected Hessian on the page tangent
    double lambda = 0.0;
};

struct CriticalCensus {
    int maxima = 0, saddles = 0, minima = 0;
    std::vector<CriticalPoint> points; // sorted lexicographically by theta
    int skipped_seeds = 0;
};

// All constrained critical points of phi1^2 on the page {phi2 = 0,
// phi1 > 0}: Newton on the Lagrange system from grid seeds,
// deduplicated (radius 1e-4 in the torus metric), classified by the
// projected Hessian.
CriticalCensus critical_census(double epsilon, int grid, double tol);

// Reeb direction (up to positive scale) of the T^5 contact form at
// theta, components ordered (theta1..theta5). Throws std::domain_error
// where the page area form degenerates.
std::array<double, 5> reeb_t5_direction(const std::array<double, 5> &theta,
                                        double epsilon);

} // namespace reebcert

#endif

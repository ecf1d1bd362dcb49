#ifndef REEBCERT_FLOW_HPP
#define REEBCERT_FLOW_HPP

#include <cstdint>
#include <vector>

#include "reebcert/orbit_enum.hpp"

namespace reebcert {

/// Point on T^3 with coordinates reduced to [0, 2pi).
struct FlowState {
    double x = 0, y = 0, theta = 0;
    double time = 0;
};

// Classical fixed-step 4th-order integration of the Reeb field
// (cos n theta, sin n theta, 0). The theta component is constant along
// the flow and kept exact.
FlowState integrate(int n, const FlowState &start, double time, double step = 1e-3);

struct ShootingResult {
    bool converged = false;
    double theta_star = 0;
    double period = 0;
    FiberClass class_winding;
    double residual = 0; // covering-space distance of endpoint to start
    int iterations = 0;
};

// Secant refinement of the fiber angle until the time-T flow closes up
// with the requested winding.
ShootingResult shoot_closed_orbit(int n, const FiberClass &cls, double theta_seed,
                                  double tol = 1e-9);

// Deduplicated shooting solutions from uniform seeds, sorted.
std::vector<ShootingResult> shoot_all(int n, const FiberClass &cls, int seeds = 64,
                                      double tol = 1e-9);

} // namespace reebcert

#endif

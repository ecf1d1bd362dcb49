#include "reebcert/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reebcert {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap(double a)
{
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    return a;
}

// RK4 on the covering space R^2 x S^1. The Reeb field of
// cos(n theta)dx + sin(n theta)dy is (cos n theta, sin n theta, 0); its
// theta component vanishes, so theta is carried through unchanged.
std::array<double, 2> rk4_displacement(int n, double theta, double time, double step)
{
    auto field = [&](double th) {
        return std::array<double, 2>{std::cos(n * th), std::sin(n * th)};
    };
    double x = 0, y = 0, remaining = time;
    while (std::abs(remaining) > 1e-15) {
        const double dt = std::clamp(remaining, -step, step);
        const auto k1 = field(theta);
        const auto k2 = field(theta);
        const auto k3 = field(theta);
        const auto k4 = field(theta);
        x += dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
        y += dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
        remaining -= dt;
    }
    return {x, y};
}

} // namespace

FlowState integrate(int n, const FlowState &start, double time, double step)
{
    if (step <= 0) throw std::invalid_argument("step must be positive");
    const auto d = rk4_displacement(n, start.theta, time, step);
    FlowState s = start;
    s.x = wrap(start.x + d[0]);
    s.y = wrap(start.y + d[1]);
    s.theta = start.theta;
    s.time = start.time + time;
    return s;
}

ShootingResult shoot_closed_orbit(int n, const FiberClass &cls, double theta_seed,
                                  double tol)
{
    if (tol > 1e-6) throw std::invalid_argument("tol must be <= 1e-6");
    validate_fiber_class(cls);

    const double px = static_cast<double>(cls.p), py = static_cast<double>(cls.q);
    const double period = two_pi * std::hypot(px, py);
    const double step = 1e-3;

    // Signed return defect transverse to the class; x, y translation
    // invariance makes it a function of theta alone.
    auto cross_defect = [&](double theta) {
        const auto d = rk4_displacement(n, theta, period, step);
        return py * d[0] - px * d[1];
    };
    auto gap = [&](double theta) {
        const auto d = rk4_displacement(n, theta, period, step);
        return std::hypot(d[0] - two_pi * px, d[1] - two_pi * py);
    };

    ShootingResult r;
    r.class_winding = cls;
    r.period = period;
    r.theta_star = wrap(theta_seed);

    double t0 = theta_seed, t1 = theta_seed + 1e-3;
    double f0 = cross_defect(t0), f1 = cross_defect(t1);
    for (int it = 0; it < 50; ++it) {
        r.iterations = it;
        r.residual = gap(t1);
        if (r.residual < tol) {
            r.converged = true;
            r.theta_star = wrap(t1);
            return r;
        }
        if (std::abs(f1 - f0) < 1e-18) break;
        const double t2 = t1 - f1 * (t1 - t0) / (f1 - f0);
        t0 = t1;
        f0 = f1;
        t1 = t2;
        f1 = cross_defect(t1);
    }
    r.residual = gap(t1);
    return r;
}

std::vector<ShootingResult> shoot_all(int n, const FiberClass &cls, int seeds,
                                      double tol)
{
    std::vector<ShootingResult> out;
    for (int i = 0; i < seeds; ++i) {
        const double seed = two_pi * i / seeds;
        const ShootingResult r = shoot_closed_orbit(n, cls, seed, tol);
        if (!r.converged) continue;
        bool dup = false;
        for (const auto &q : out) {
            double d = std::abs(q.theta_star - r.theta_star);
            d = std::min(d, two_pi - d);
            if (d < 1e-6) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(r);
    }
    std::sort(out.begin(), out.end(),
              [](const ShootingResult &a, const ShootingResult &b) {
                  return a.theta_star < b.theta_star;
              });
    return out;
}

} // namespace reebcert

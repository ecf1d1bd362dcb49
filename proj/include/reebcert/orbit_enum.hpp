#ifndef REEBCERT_ORBIT_ENUM_HPP
#define REEBCERT_ORBIT_ENUM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "reebcert/monodromy.hpp"

namespace reebcert {

/// Primitive homotopy class of a loop in a T^2 fiber.
struct FiberClass {
    std::int64_t p = 1, q = 0;
    bool operator==(const FiberClass &o) const = default;
};

// Checks (p,q) != 0 and gcd = 1; throws otherwise.
void validate_fiber_class(const FiberClass &c);

// Direction angle of (p,q) in [0, 2pi).
double class_angle(const FiberClass &c);

/// Strictly increasing angle profile f on [0, 2pi], extended to R by the
/// quasi-period increment delta = f(theta + 2pi) - f(theta).
class AngularProfile {
public:
    static AngularProfile linear(double slope, double phase = 0.0);
    // (theta_i, f_i) with theta_0 = 0, theta_last = 2pi; both coordinates
    // strictly increasing.
    static AngularProfile piecewise(std::vector<std::pair<double, double>> breakpoints);

    bool is_linear() const { return linear_; }
    double slope() const { return slope_; }
    double phase() const { return phase_; }
    const std::vector<std::pair<double, double>> &breakpoints() const { return bp_; }

    double delta() const; // f(2pi) - f(0)
    double eval(double theta) const;

    // All theta in [0, 2pi) with f(theta) = target (mod 2pi), sorted.
    std::vector<double> solve_in_period(double target_angle) const;

private:
    AngularProfile() = default;
    void validate() const;

    bool linear_ = true;
    double slope_ = 1.0, phase_ = 0.0;
    std::vector<std::pair<double, double>> bp_;
};

/// A circle of closed Reeb orbits in the fiber over `theta`.
struct OrbitFamily {
    double theta = 0.0;
    // Present when theta is an exact rational multiple of 2pi: theta =
    // 2pi * turns_num / turns_den.
    std::optional<std::pair<std::int64_t, std::int64_t>> turns;
    FiberClass fiber_class;
    int index_label = 0;
};

/// Z-indexed generator rule for classes with an infinite <A>-orbit.
struct ShiftRule {
    Monodromy monodromy;
    FiberClass base;
    AngularProfile profile;
};

std::vector<double> shift_thetas_for_lift(const ShiftRule &rule, std::int64_t k);

struct OrbitEnumeration {
    enum class Kind { Finite, ShiftIndexed };
    Kind kind = Kind::Finite;
    std::vector<OrbitFamily> orbits; // sorted by theta when finite
    std::optional<ShiftRule> rule;
};

// The n circles of closed orbits of cos(n theta)dx + sin(n theta)dy in
// the given class, at exact rational multiples of 2pi when the class
// direction is a multiple of pi/4.
OrbitEnumeration enumerate_t3(int n, const FiberClass &cls);

// Fiber-angle enumeration on the torus bundle glued by `m`. The profile
// must match the gluing at the seam: dir(f(2pi)) parallel (positively)
// to A^{-T} dir(f(0)), within compat_tol.
OrbitEnumeration enumerate_bundle(const Monodromy &m, const AngularProfile &profile,
                                  const FiberClass &cls, double compat_tol = 1e-8);

// Residual of the seam condition above (0 for a compatible profile).
double bundle_seam_residual(const Monodromy &m, const AngularProfile &profile);

// Linear profile whose quasi-period lands in (2(n-1)pi, 2n pi] and whose
// seam residual with `m` vanishes.
AngularProfile compatible_linear_profile(const Monodromy &m, int n,
                                         double phase = 0.0);

} // namespace reebcert

#endif

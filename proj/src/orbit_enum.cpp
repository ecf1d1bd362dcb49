#include "reebcert/orbit_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace reebcert {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double a)
{
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    return a;
}
} // namespace

void validate_fiber_class(const FiberClass &c)
{
    if (c.p == 0 && c.q == 0) throw std::invalid_argument("fiber class must be nonzero");
    if (std::gcd(std::abs(c.p), std::abs(c.q)) != 1)
        throw std::invalid_argument("fiber class must be primitive (simple orbits only)");
}

double class_angle(const FiberClass &c)
{
    return wrap_angle(std::atan2(static_cast<double>(c.q), static_cast<double>(c.p)));
}

AngularProfile AngularProfile::linear(double slope, double phase)
{
    AngularProfile p;
    p.linear_ = true;
    p.slope_ = slope;
    p.phase_ = phase;
    p.validate();
    return p;
}

AngularProfile AngularProfile::piecewise(std::vector<std::pair<double, double>> breakpoints)
{
    AngularProfile p;
    p.linear_ = false;
    p.bp_ = std::move(breakpoints);
    p.validate();
    return p;
}

void AngularProfile::validate() const
{
    if (linear_) {
        if (slope_ <= 0) throw std::invalid_argument("profile must be strictly increasing");
        return;
    }
    if (bp_.size() < 2) throw std::invalid_argument("piecewise profile needs >= 2 breakpoints");
    if (std::abs(bp_.front().first) > 1e-12 ||
        std::abs(bp_.back().first - two_pi) > 1e-12)
        throw std::invalid_argument("piecewise profile must cover [0, 2pi]");
    for (std::size_t i = 1; i < bp_.size(); ++i)
        if (bp_[i].first <= bp_[i - 1].first || bp_[i].second <= bp_[i - 1].second)
            throw std::invalid_argument("profile must be strictly increasing");
}

double AngularProfile::delta() const
{
    if (linear_) return slope_ * two_pi;
    return bp_.back().second - bp_.front().second;
}

double AngularProfile::eval(double theta) const
{
    if (linear_) return slope_ * theta + phase_;
    const double cycles = std::floor(theta / two_pi);
    const double t = theta - cycles * two_pi;
    // Binary search for the segment containing t.
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t,
                               [](double x, const auto &b) { return x < b.first; });
    if (it == bp_.begin()) it = bp_.begin() + 1;
    if (it == bp_.end()) it = bp_.end() - 1;
    const auto &[t0, f0] = *(it - 1);
    const auto &[t1, f1] = *it;
    const double f = f0 + (f1 - f0) * (t - t0) / (t1 - t0);
    return f + cycles * delta();
}

std::vector<double> AngularProfile::solve_in_period(double target_angle) const
{
    const double f0 = eval(0.0);
    const double f1 = f0 + delta();
    std::vector<double> out;

    // Values y = target + 2pi m inside [f0, f1).
    const double m_lo = std::ceil((f0 - target_angle) / two_pi - 1e-12);
    for (double m = m_lo;; m += 1.0) {
        const double y = target_angle + two_pi * m;
        if (y < f0 - 1e-12) continue;
        if (y >= f1 - 1e-12) break;
        // Bisection on the monotone profile, then a secant polish.
        double lo = 0.0, hi = two_pi;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (eval(mid) < y)
                lo = mid;
            else
                hi = mid;
        }
        double theta = 0.5 * (lo + hi);
        const double h = 1e-7;
        const double dfdt = (eval(theta + h) - eval(theta - h)) / (2 * h);
        if (dfdt > 0) theta -= (eval(theta) - y) / dfdt;
        if (theta >= two_pi) theta -= two_pi;
        if (theta < 0) theta = 0;
        out.push_back(theta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrbitEnumeration enumerate_t3(int n, const FiberClass &cls)
{
    if (n < 1) throw std::invalid_argument("enumerate_t3 requires n >= 1");
    validate_fiber_class(cls);

    // Octant index when the class direction is a multiple of pi/4.
    std::optional<int> octant;
    if (std::abs(cls.p) <= 1 && std::abs(cls.q) <= 1) {
        static const std::pair<std::int64_t, std::int64_t> dirs[8] = {
            {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
        for (int i = 0; i < 8; ++i)
            if (dirs[i].first == cls.p && dirs[i].second == cls.q) octant = i;
    }

    OrbitEnumeration e;
    e.kind = OrbitEnumeration::Kind::Finite;
    const double phi0 = class_angle(cls);
    for (int k = 0; k < n; ++k) {
        OrbitFamily fam;
        fam.fiber_class = cls;
        fam.index_label = k;
        if (octant) {
            // theta = 2pi (oct + 8k) / (8n)
            std::int64_t num = *octant + 8LL * k;
            std::int64_t den = 8LL * n;
            const std::int64_t g = std::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            fam.turns = std::make_pair(num, den);
            fam.theta = two_pi * static_cast<double>(num) / static_cast<double>(den);
        } else {
            fam.theta = wrap_angle((phi0 + two_pi * k) / n);
        }
        e.orbits.push_back(fam);
    }
    std::sort(e.orbits.begin(), e.orbits.end(),
              [](const OrbitFamily &a, const OrbitFamily &b) { return a.theta < b.theta; });
    for (std::size_t i = 0; i < e.orbits.size(); ++i)
        e.orbits[i].index_label = static_cast<int>(i);
    return e;
}

double bundle_seam_residual(const Monodromy &m, const AngularProfile &profile)
{
    // Gluing invariance forces r(theta + 2pi) || A^{-T} r(theta), with
    // r = (cos f, sin f); checked at the seam theta = 0.
    const double f0 = profile.eval(0.0);
    const double f1 = f0 + profile.delta();
    const double r0x = std::cos(f0), r0y = std::sin(f0);
    // A^{-T} = [[d, -c], [-b, a]] for det 1.
    double wx = static_cast<double>(m.d) * r0x - static_cast<double>(m.c) * r0y;
    double wy = -static_cast<double>(m.b) * r0x + static_cast<double>(m.a) * r0y;
    const double norm = std::hypot(wx, wy);
    wx /= norm;
    wy /= norm;
    const double r1x = std::cos(f1), r1y = std::sin(f1);
    const double cross = wx * r1y - wy * r1x;
    const double dot = wx * r1x + wy * r1y;
    if (dot <= 0) return 2.0; // co-orientation reversed: maximal residual
    return std::abs(cross);
}

OrbitEnumeration enumerate_bundle(const Monodromy &m, const AngularProfile &profile,
                                  const FiberClass &cls, double compat_tol)
{
    validate_fiber_class(cls);
    const double residual = bundle_seam_residual(m, profile);
    if (residual > compat_tol)
        throw std::invalid_argument("profile incompatible with monodromy: seam residual " +
                                    std::to_string(residual));

    const ClassOrbit orbit = class_orbit(m, {cls.p, cls.q});
    OrbitEnumeration e;
    if (!orbit.finite) {
        e.kind = OrbitEnumeration::Kind::ShiftIndexed;
        e.rule = ShiftRule{m, cls, profile};
        return e;
    }
    e.kind = OrbitEnumeration::Kind::Finite;
    for (const auto &w : orbit.vectors) {
        const FiberClass wc{w[0], w[1]};
        for (double theta : profile.solve_in_period(class_angle(wc))) {
            OrbitFamily fam;
            fam.theta = theta;
            fam.fiber_class = wc;
            e.orbits.push_back(fam);
        }
    }
    std::sort(e.orbits.begin(), e.orbits.end(),
              [](const OrbitFamily &a, const OrbitFamily &b) { return a.theta < b.theta; });
    for (std::size_t i = 0; i < e.orbits.size(); ++i)
        e.orbits[i].index_label = static_cast<int>(i);
    return e;
}

std::vector<double> shift_thetas_for_lift(const ShiftRule &rule, std::int64_t k)
{
    Monodromy p{1, 0, 0, 1};
    const Monodromy step = k >= 0 ? rule.monodromy : rule.monodromy.inverse();
    for (std::int64_t i = 0; i < std::abs(k); ++i) p = step * p;
    const auto w = p.apply({rule.base.p, rule.base.q});
    return rule.profile.solve_in_period(class_angle(FiberClass{w[0], w[1]}));
}

AngularProfile compatible_linear_profile(const Monodromy &m, int n, double phase)
{
    if (n < 1) throw std::invalid_argument("profile family index must be >= 1");
    const double rx = std::cos(phase), ry = std::sin(phase);
    const double wx = static_cast<double>(m.d) * rx - static_cast<double>(m.c) * ry;
    const double wy = -static_cast<double>(m.b) * rx + static_cast<double>(m.a) * ry;
    const double target = std::atan2(wy, wx);
    double frac = wrap_angle(target - phase) / two_pi;
    if (frac < 1e-15) frac = 1.0; // land the quasi-period in (2(n-1)pi, 2n pi]
    const double slope = (n - 1) + frac;
    return AngularProfile::linear(slope, phase);
}

} // namespace reebcert

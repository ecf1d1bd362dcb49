#include "reebcert/lutz.hpp"

#include <algorithm>
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

double torus_dist(const std::array<double, 3> &a, const std::array<double, 3> &b)
{
    double s = 0;
    for (int i = 0; i < 3; ++i) {
        double d = std::abs(a[i] - b[i]);
        d = std::min(d, two_pi - d);
        s += d * d;
    }
    return std::sqrt(s);
}

// Solve a dense 4x4 system in place; returns false when singular.
bool solve4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> &b)
{
    for (int k = 0; k < 4; ++k) {
        int piv = k;
        for (int i = k + 1; i < 4; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) < 1e-14) return false;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int i = k + 1; i < 4; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    for (int k = 3; k >= 0; --k) {
        for (int j = k + 1; j < 4; ++j) b[k] -= a[k][j] * b[j];
        b[k] /= a[k][k];
    }
    return true;
}

// Orthonormal basis of the plane orthogonal to n.
void tangent_basis(const std::array<double, 3> &n, std::array<double, 3> &t1,
                   std::array<double, 3> &t2)
{
    const std::array<double, 3> ref =
        std::abs(n[0]) < 0.9 ? std::array<double, 3>{1, 0, 0}
                             : std::array<double, 3>{0, 1, 0};
    t1 = {n[1] * ref[2] - n[2] * ref[1], n[2] * ref[0] - n[0] * ref[2],
          n[0] * ref[1] - n[1] * ref[0]};
    double l = std::hypot(t1[0], t1[1], t1[2]);
    for (auto &x : t1) x /= l;
    t2 = {n[1] * t1[2] - n[2] * t1[1], n[2] * t1[0] - n[0] * t1[2],
          n[0] * t1[1] - n[1] * t1[0]};
    l = std::hypot(t2[0], t2[1], t2[2]);
    for (auto &x : t2) x /= l;
}

} // namespace

std::array<double, 2> LutzMap::phi(const std::array<double, 3> &t) const
{
    const double s1 = std::sin(t[0]), s2 = std::sin(t[1]);
    const double s3 = std::sin(t[2]), c3 = std::cos(t[2]);
    return {epsilon * (s1 * c3 - s2 * s3), epsilon * (s1 * s3 + s2 * c3)};
}

std::array<double, 3> LutzMap::grad_phi1(const std::array<double, 3> &t) const
{
    const double c1 = std::cos(t[0]), c2 = std::cos(t[1]);
    const double s3 = std::sin(t[2]), c3 = std::cos(t[2]);
    return {epsilon * c1 * c3, -epsilon * c2 * s3, -phi(t)[1]};
}

std::array<double, 3> LutzMap::grad_phi2(const std::array<double, 3> &t) const
{
    const double c1 = std::cos(t[0]), c2 = std::cos(t[1]);
    const double s3 = std::sin(t[2]), c3 = std::cos(t[2]);
    return {epsilon * c1 * s3, epsilon * c2 * c3, phi(t)[0]};
}

std::array<std::array<double, 3>, 3>
LutzMap::hess_phi1(const std::array<double, 3> &t) const
{
    const double s1 = std::sin(t[0]), c1 = std::cos(t[0]);
    const double s2 = std::sin(t[1]), c2 = std::cos(t[1]);
    const double s3 = std::sin(t[2]), c3 = std::cos(t[2]);
    std::array<std::array<double, 3>, 3> h{};
    h[0][0] = -epsilon * s1 * c3;
    h[1][1] = epsilon * s2 * s3;
    h[2][2] = -phi(t)[0];
    h[0][2] = h[2][0] = -epsilon * c1 * s3;
    h[1][2] = h[2][1] = -epsilon * c2 * c3;
    return h;
}

std::array<std::array<double, 3>, 3>
LutzMap::hess_phi2(const std::array<double, 3> &t) const
{
    const double s1 = std::sin(t[0]), c1 = std::cos(t[0]);
    const double s2 = std::sin(t[1]), c2 = std::cos(t[1]);
    const double s3 = std::sin(t[2]), c3 = std::cos(t[2]);
    std::array<std::array<double, 3>, 3> h{};
    h[0][0] = -epsilon * s1 * s3;
    h[1][1] = -epsilon * s2 * c3;
    h[2][2] = -phi(t)[1];
    h[0][2] = h[2][0] = epsilon * c1 * c3;
    h[1][2] = h[2][1] = -epsilon * c2 * s3;
    return h;
}

CriticalCensus critical_census(double epsilon, int grid, double tol)
{
    if (grid < 32) throw std::invalid_argument("grid must be >= 32");
    if (tol > 1e-8) throw std::invalid_argument("tol must be <= 1e-8");
    const LutzMap map{epsilon};

    auto lagrange = [&](const std::array<double, 3> &t, double lam,
                        std::array<double, 4> &g) {
        const auto p = map.phi(t);
        const auto g1 = map.grad_phi1(t);
        const auto g2 = map.grad_phi2(t);
        for (int i = 0; i < 3; ++i) g[i] = 2 * p[0] * g1[i] - lam * g2[i];
        g[3] = p[1];
    };

    CriticalCensus census;
    const double h = two_pi / grid;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int k = 0; k < grid; ++k) {
                std::array<double, 3> t{i * h, j * h, k * h};
                auto p = map.phi(t);
                if (p[0] <= 0 || std::abs(p[1]) >= 0.2 * epsilon) continue;

                double lam = 0;
                bool ok = false;
                for (int it = 0; it < 50; ++it) {
                    std::array<double, 4> g;
                    lagrange(t, lam, g);
                    const double res = std::hypot(std::hypot(g[0], g[1], g[2]), g[3]);
                    if (res < tol * 1e-2) {
                        ok = true;
                        break;
                    }
                    const auto p0 = map.phi(t);
                    const auto g1 = map.grad_phi1(t);
                    const auto g2 = map.grad_phi2(t);
                    const auto h1 = map.hess_phi1(t);
                    const auto h2 = map.hess_phi2(t);
                    std::array<std::array<double, 4>, 4> jac{};
                    for (int a = 0; a < 3; ++a) {
                        for (int b = 0; b < 3; ++b)
                            jac[a][b] = 2 * (g1[a] * g1[b] + p0[0] * h1[a][b]) -
                                        lam * h2[a][b];
                        jac[a][3] = -g2[a];
                        jac[3][a] = g2[a];
                    }
                    jac[3][3] = 0;
                    std::array<double, 4> step = {-g[0], -g[1], -g[2], -g[3]};
                    if (!solve4(jac, step)) break;
                    const double sn = std::hypot(std::hypot(step[0], step[1], step[2]),
                                                 step[3]);
                    if (sn > 2.0) break; // diverging seed
                    for (int a = 0; a < 3; ++a) t[a] += step[a];
                    lam += step[3];
                }
                if (!ok) {
                    ++census.skipped_seeds;
                    continue;
                }
                for (auto &x : t) x = wrap(x);
                p = map.phi(t);
                if (p[0] < 1e-6) continue; // converged toward the binding

                bool dup = false;
                for (const auto &q : census.points)
                    if (torus_dist(t, q.theta) < 1e-4) {
                        dup = true;
                        break;
                    }
                if (dup) continue;

                CriticalPoint cp;
                cp.theta = t;
                cp.lambda = lam;
                cp.value = p[0] * p[0];
                std::array<double, 4> g;
                lagrange(t, lam, g);
                cp.gradient_norm = std::hypot(g[0], g[1], g[2]);

                // Projected Hessian on ker(grad phi2).
                auto n = map.grad_phi2(t);
                const double nl = std::hypot(n[0], n[1], n[2]);
                for (auto &x : n) x /= nl;
                std::array<double, 3> t1, t2;
                tangent_basis(n, t1, t2);
                const auto g1 = map.grad_phi1(t);
                const auto h1 = map.hess_phi1(t);
                const auto h2 = map.hess_phi2(t);
                std::array<std::array<double, 3>, 3> hf{};
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        hf[a][b] = 2 * (g1[a] * g1[b] + p[0] * h1[a][b]) -
                                   lam * h2[a][b];
                auto quad = [&](const std::array<double, 3> &x,
                                const std::array<double, 3> &y) {
                    double s = 0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) s += x[a] * hf[a][b] * y[b];
                    return s;
                };
                const double b11 = quad(t1, t1), b12 = quad(t1, t2), b22 = quad(t2, t2);
                const double tr = b11 + b22;
                const double disc = std::sqrt(std::max(
                    0.0, (b11 - b22) * (b11 - b22) + 4 * b12 * b12));
                cp.hessian_eigs = {(tr - disc) / 2, (tr + disc) / 2};
                if (cp.hessian_eigs[1] < 0)
                    cp.kind = MorseKind::Maximum;
                else if (cp.hessian_eigs[0] > 0)
                    cp.kind = MorseKind::Minimum;
                else
                    cp.kind = MorseKind::Saddle;
                census.points.push_back(cp);
            }

    std::sort(census.points.begin(), census.points.end(),
              [](const CriticalPoint &a, const CriticalPoint &b) {
                  return a.theta < b.theta;
              });
    for (const auto &cp : census.points) {
        if (cp.kind == MorseKind::Maximum) ++census.maxima;
        else if (cp.kind == MorseKind::Saddle) ++census.saddles;
        else ++census.minima;
    }
    return census;
}

std::array<double, 5> reeb_t5_direction(const std::array<double, 5> &theta,
                                        double epsilon)
{
    const LutzMap map{epsilon};
    const std::array<double, 3> t{theta[0], theta[1], theta[2]};
    const auto p = map.phi(t);

    auto n = map.grad_phi2(t);
    const double nl = std::hypot(n[0], n[1], n[2]);
    if (nl < 1e-12)
        throw std::domain_error("page constraint degenerates at this point");
    for (auto &x : n) x /= nl;
    std::array<double, 3> t1, t2;
    tangent_basis(n, t1, t2);

    // Page area form: the flat-metric area form of the plane orthogonal to
    // grad phi2 (any constant-coefficient beta has dbeta = 0, so the area
    // form is taken directly). In the frame (t1, t2 = n x t1) it is 1.
    const double w12 = 1.0;

    // Hamiltonian field of (phi1^2 + phi2^2)/2 on the page.
    const auto g1 = map.grad_phi1(t);
    const auto g2 = map.grad_phi2(t);
    std::array<double, 3> gh;
    for (int a = 0; a < 3; ++a) gh[a] = p[0] * g1[a] + p[1] * g2[a];
    const double h1 = gh[0] * t1[0] + gh[1] * t1[1] + gh[2] * t1[2];
    const double h2 = gh[0] * t2[0] + gh[1] * t2[1] + gh[2] * t2[2];
    std::array<double, 3> x;
    for (int a = 0; a < 3; ++a) x[a] = (h2 * t1[a] - h1 * t2[a]) / w12;

    return {x[0], x[1], x[2], p[0], p[1]};
}

} // namespace reebcert

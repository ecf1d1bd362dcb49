#include "reebcert/monodromy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace reebcert {

std::string MonodromyClass::name() const
{
    switch (kind) {
    case MonodromyKind::Identity: return "identity";
    case MonodromyKind::MinusIdentity: return "minus-identity";
    case MonodromyKind::Elliptic: return "elliptic(" + std::to_string(order) + ")";
    case MonodromyKind::Parabolic: return "parabolic";
    case MonodromyKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

MonodromyClass classify_monodromy(const Monodromy &m)
{
    if (m.det() != 1) throw std::invalid_argument("monodromy must have determinant 1");
    if (m.b == 0 && m.c == 0 && m.a == 1 && m.d == 1)
        return {MonodromyKind::Identity, 1};
    if (m.b == 0 && m.c == 0 && m.a == -1 && m.d == -1)
        return {MonodromyKind::MinusIdentity, 2};
    const std::int64_t tr = m.trace();
    if (tr == 0) return {MonodromyKind::Elliptic, 4};
    if (tr == 1) return {MonodromyKind::Elliptic, 6};
    if (tr == -1) return {MonodromyKind::Elliptic, 3};
    if (tr == 2 || tr == -2) return {MonodromyKind::Parabolic, 0};
    return {MonodromyKind::Hyperbolic, 0};
}

ClassOrbit class_orbit(const Monodromy &m, const std::array<std::int64_t, 2> &v)
{
    if (v[0] == 0 && v[1] == 0)
        throw std::invalid_argument("fiber class must be nonzero");
    if (std::gcd(std::abs(v[0]), std::abs(v[1])) != 1)
        throw std::invalid_argument("fiber class must be primitive");

    const MonodromyClass cls = classify_monodromy(m);
    ClassOrbit orbit;
    switch (cls.kind) {
    case MonodromyKind::Identity:
    case MonodromyKind::MinusIdentity:
    case MonodromyKind::Elliptic: {
        auto w = v;
        for (int k = 0; k < cls.order; ++k) {
            if (std::find(orbit.vectors.begin(), orbit.vectors.end(), w) ==
                orbit.vectors.end())
                orbit.vectors.push_back(w);
            w = m.apply(w);
        }
        break;
    }
    case MonodromyKind::Parabolic: {
        const auto w = m.apply(v);
        if (w == v) {
            orbit.vectors.push_back(v);
        } else if (w[0] == -v[0] && w[1] == -v[1]) {
            orbit.vectors.push_back(v);
            orbit.vectors.push_back(w);
        } else {
            orbit.finite = false;
        }
        break;
    }
    case MonodromyKind::Hyperbolic:
        // |lambda| > 1 eigenvalues are irrational, so no integer vector is
        // fixed by any power.
        orbit.finite = false;
        break;
    }
    return orbit;
}

} // namespace reebcert

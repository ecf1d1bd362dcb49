#ifndef REEBCERT_MONODROMY_HPP
#define REEBCERT_MONODROMY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace reebcert {

/// Gluing matrix [[a,b],[c,d]] of a torus bundle, det = 1.
struct Monodromy {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t trace() const { return a + d; }
    std::int64_t det() const { return a * d - b * c; }
    std::array<std::int64_t, 2> apply(const std::array<std::int64_t, 2> &v) const
    {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }
    Monodromy operator*(const Monodromy &o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    Monodromy inverse() const { return {d, -b, -c, a}; } // det = 1
    bool operator==(const Monodromy &o) const = default;
};

enum class MonodromyKind { Identity, MinusIdentity, Elliptic, Parabolic, Hyperbolic };

struct MonodromyClass {
    MonodromyKind kind;
    int order = 0; // 1, 2, or 3/4/6 for elliptic; 0 when infinite
    std::string name() const;
};

// Trace trichotomy; exact elliptic order. Throws on det != 1.
MonodromyClass classify_monodromy(const Monodromy &m);

struct ClassOrbit {
    bool finite = true;
    std::vector<std::array<std::int64_t, 2>> vectors; // full orbit when finite
};

// The orbit {A^k v : k in Z} of a primitive fiber class. Finiteness is
// decided by the classification, not by iteration.
ClassOrbit class_orbit(const Monodromy &m, const std::array<std::int64_t, 2> &v);

} // namespace reebcert

#endif

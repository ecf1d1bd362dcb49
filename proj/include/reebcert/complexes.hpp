#ifndef REEBCERT_COMPLEXES_HPP
#define REEBCERT_COMPLEXES_HPP

#include <map>
#include <optional>
#include <vector>

#include "reebcert/group_ring.hpp"

namespace reebcert {

/// Graded free modules over the group ring with differentials
/// d_k : C_k -> C_{k-1}.
struct GradedComplex {
    int ring_rank = 1;
    std::map<int, int> rank_at_degree;
    std::map<int, RingMatrix> differentials; // keyed by source degree

    int rank_at(int degree) const
    {
        auto it = rank_at_degree.find(degree);
        return it == rank_at_degree.end() ? 0 : it->second;
    }
};

/// Presentation of a homology module: `generators` free generators
/// subject to the columns of `relations`. For the univariate ring the
/// invariant factors are listed in `normal_form` (one entry per
/// generator, 0 marking a free summand).
struct HomologyPresentation {
    int degree = 0;
    int generators = 0;
    RingMatrix relations{0, 0, 1};
    std::optional<std::vector<GroupRingElem>> normal_form;
};

struct OrbitGeneratorPair {
    int family_id = 0;
    int degree_top = 0;
    int degree_bottom = -1;
};

enum class MorseBottMode { Quotient, Full };

// Every consecutive composition exactly zero. Throws on inconsistent
// matrix shapes.
bool verify_complex(const GradedComplex &c);

// ker/im at the given degree. Requires verify_complex(c). Full normal
// form when ring_rank == 1; for ring_rank > 1 the outgoing differential
// must vanish and a bare presentation is returned.
HomologyPresentation homology(const GradedComplex &c, int degree);

// One circle of Reeb orbits -> two generators in adjacent degrees.
// Quotient mode: zero differential. Full mode: d(top) =
// (1 - e^{relation_class}) * bottom.
GradedComplex build_morse_bott(const std::vector<OrbitGeneratorPair> &families,
                               MorseBottMode mode, int ring_rank,
                               const Monomial &relation_class,
                               int degree_offset = 0);

// Ranks of H_k(T^m; Q), k = 0..m.
std::vector<long long> torus_betti(int m);

} // namespace reebcert

#endif

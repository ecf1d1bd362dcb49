#ifndef REEBCERT_LAURENT_SNF_HPP
#define REEBCERT_LAURENT_SNF_HPP

#include <utility>

#include "reebcert/group_ring.hpp"

namespace reebcert {

// Euclidean division in Q[t, t^-1]: a = q*b + r with span(r) < span(b)
// or r = 0. b must be nonzero.
std::pair<GroupRingElem, GroupRingElem> laurent_divmod(const GroupRingElem &a,
                                                       const GroupRingElem &b);

// a divisible by b in Q[t, t^-1]?
bool laurent_divides(const GroupRingElem &b, const GroupRingElem &a);

// Unit u with u*a normalized: lowest exponent 0 and leading coefficient 1.
GroupRingElem normalizing_unit(const GroupRingElem &a);

struct SmithResult {
    RingMatrix u, d, v;        // u * m * v = d
    RingMatrix u_inv, v_inv;   // exact inverses of u and v
};

// Smith normal form over Q[t, t^-1]. Diagonal entries of d are
// normalized (lowest exponent 0, monic) and satisfy d_i | d_{i+1}.
// Throws std::invalid_argument unless the matrix ring rank is 1.
SmithResult snf_univariate(const RingMatrix &m);

} // namespace reebcert

#endif

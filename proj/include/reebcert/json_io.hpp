#ifndef REEBCERT_JSON_IO_HPP
#define REEBCERT_JSON_IO_HPP

#include <json.hpp>

#include "reebcert/automorphism.hpp"
#include "reebcert/complexes.hpp"
#include "reebcert/flow.hpp"
#include "reebcert/group_ring.hpp"
#include "reebcert/lutz.hpp"
#include "reebcert/monodromy.hpp"
#include "reebcert/orbit_enum.hpp"

namespace reebcert {

using nlohmann::json;

// Ring elements: arrays of [monomial, "p/q"] pairs sorted
// lexicographically by exponent vector; matrices row-major.
json elem_to_json(const GroupRingElem &e);
GroupRingElem elem_from_json(const json &j, int rank);
json matrix_to_json(const RingMatrix &m);
RingMatrix matrix_from_json(const json &j, int rank);

json presentation_to_json(const HomologyPresentation &h);

json monodromy_to_json(const Monodromy &m);
Monodromy monodromy_from_json(const json &j);

json profile_to_json(const AngularProfile &p);
AngularProfile profile_from_json(const json &j);

json enumeration_to_json(const OrbitEnumeration &e);

json automorphism_to_json(const MonomialAutomorphism &a);
MonomialAutomorphism automorphism_from_json(const json &j);

json certificate_to_json(const OrderCertificate &c);

json census_to_json(const CriticalCensus &c, bool dump_points);
json shooting_to_json(const std::vector<ShootingResult> &rs);

} // namespace reebcert

#endif

#pragma once

#include "kst/adjunction.hpp"
#include "kst/catalog.hpp"
#include "kst/oracle.hpp"

#include "json.hpp"

namespace kst {

using Json = nlohmann::ordered_json;

// AlgNum encoding: rational as "p/q"; quad as {"d": D, "a": "p/q", "b": "p/q"}
// meaning a + b*sqrt(D); biquad as {"p": P, "q": Q, "c": ["p/q" x4]} over the
// basis {1, sqrt p, sqrt q, sqrt pq}.
Json algnum_to_json(const AlgNum& x);
AlgNum algnum_from_json(const Json& j);

Json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const Json& j);

Json lattice_to_json(const IntersectionLattice& lat);
IntersectionLattice lattice_from_json(const Json& j);

// Model files carry the lattice plus the blow-up data:
// {"field": .., "classes": [..], "gram": [[..]], "logDiscrepancy": ..,
//  "diffPoints": [{"point": .., "coeff": ..}],
//  "incidence": {"Ltilde": [{"point": .., "mult": ..}]}}
Json model_to_json(const SurfaceBlowupModel& m);
SurfaceBlowupModel model_from_json(const Json& j);

Json chambers_to_json(const IntersectionLattice& lat, const std::vector<ZariskiChamber>& chs);
Json poly_to_json(const Poly& p);
Json piecewise_to_json(const PiecewisePoly& f);
Json summary_to_json(const RefinementSummary& s);
Json adjunction_to_json(const AdjunctionReport& r);
Json eckardt_to_json(const EckardtReport& r);
Json index_two_to_json(const IndexTwoReport& r);

} // namespace kst

#pragma once

#include "kst/zariski.hpp"

#include <map>
#include <string>
#include <vector>

namespace kst {

// Everything the quantitative layer needs about one blow-up pi: Y -> X with
// exceptional curve E: the intersection lattice, the log discrepancy A_X(E),
// the different of E (orbifold points with coefficients in [0,1)), and where
// each candidate curve meets E. Incidence multiplicities are exact rationals:
// for weighted blow-ups a curve meets E in an orbifold point, contributing
// 1/b, so the binding invariant is sum(mults of C) = (C . E).
struct SurfaceBlowupModel {
    IntersectionLattice lattice;
    AlgNum log_discrepancy; // A_X(E)
    std::vector<std::pair<std::string, AlgNum>> diff_points;
    // curve class name -> [(point label, local multiplicity)]
    std::map<std::string, std::vector<std::pair<std::string, AlgNum>>> incidence;
    AlgNum polarization_volume; // (P0^2)

    SurfaceBlowupModel(IntersectionLattice lat, AlgNum a,
                       std::vector<std::pair<std::string, AlgNum>> diff,
                       std::map<std::string, std::vector<std::pair<std::string, AlgNum>>> inc);

    // New model with the polarization class replaced by k * P0.
    SurfaceBlowupModel scaled_polarization(long k) const;
};

struct RefinementSummary {
    AlgNum s_value;                    // S(L;E)
    AlgNum t_value;                    // pseudo-effective threshold
    PiecewisePoly volume;              // vol(pi*L - tE) on [0,T]
    PiecewisePoly restricted_volume;   // (P_sigma(t) . E) = -1/2 vol'
    std::map<std::string, AlgNum> fixed_part_mults;
    AlgNum c1_degree;                  // ((P0 - S E) . E)
    AlgNum beta;                       // A - S
};

PiecewisePoly volume_fn(const SurfaceBlowupModel& m);
AlgNum pseff_threshold(const SurfaceBlowupModel& m);
AlgNum s_invariant(const SurfaceBlowupModel& m);
PiecewisePoly restricted_volume_fn(const SurfaceBlowupModel& m);
std::map<std::string, AlgNum> fixed_part_mults(const SurfaceBlowupModel& m);
AlgNum c1_degree(const SurfaceBlowupModel& m);
AlgNum beta_invariant(const SurfaceBlowupModel& m);

// One pass computing all of the above from a single chamber walk.
RefinementSummary refinement_summary(const SurfaceBlowupModel& m);

} // namespace kst

#pragma once

#include "kst/fujita.hpp"

#include <functional>
#include <optional>

namespace kst {

// Boundary sum(a_i P_i) on the exceptional P^1, coefficients in [0,1) with
// total below 2 (log Fano).
struct PonePair {
    std::vector<std::pair<std::string, AlgNum>> points;

    void validate() const;
    AlgNum coefficient_sum() const;
};

// delta(P^1, sum a_i P_i) = (1 - max a_i) / (1 - (a_1+...+a_m)/2).
// The pair is K-semistable iff the value is >= 1.
AlgNum delta_pone(const PonePair& pair);

struct AdjunctionReport {
    AlgNum lambda;        // A_X(E) / S
    PonePair induced;     // Diff_E + lambda * F(W) merged by point label
    bool degenerate;      // some induced coefficient reached 1
    AlgNum r;             // delta of the induced pair (1 when degenerate)
    AlgNum lower_bound;   // min{lambda, r * lambda}
    bool tight;           // r >= 1, i.e. lower_bound == lambda
};

// The exceptional-curve side of the adjunction estimate: lambda = A/S, the
// induced boundary Diff_E + lambda F(W), and the resulting lower bound
// min{lambda, r lambda} for delta_x. A coefficient >= 1 is reported as
// degenerate instead of raising.
AdjunctionReport adjunction_bound(const SurfaceBlowupModel& model);

// Exact rational-function recovery: polynomials (P, Q) of degrees at most
// (num_deg, den_deg), Q monic, with value_i * Q(mu_i) = P(mu_i) at every
// sample. Requires num_deg + den_deg + 2 samples at distinct abscissae; the
// extras verify the fit ("degree bound wrong" when they fail).
std::pair<Poly, Poly> ratfun_fit(const std::vector<std::pair<AlgNum, AlgNum>>& samples,
                                 int num_deg, int den_deg);

// A one-parameter family of blow-up models indexed by coprime positive
// integer weights (a,b); A/S is a fixed-degree rational function of mu = a/b.
struct QMFamily {
    std::string name;
    std::function<SurfaceBlowupModel(long a, long b)> build;
    std::function<bool(long a, long b)> admissible;
    AlgNum mu_lower;      // open lower bound of the mu-domain
    std::optional<AlgNum> mu_upper; // open upper bound, if any
    int fit_num_deg = 2;
    int fit_den_deg = 2;
};

struct QMResult {
    AlgNum mu_star;
    AlgNum value;
    bool interior;        // false when the minimum sits at a domain endpoint
    Poly fit_num, fit_den;
};

// Fits A/S(mu) from exact samples and minimizes it over the family's domain
// by solving the derivative-numerator quadratic exactly.
QMResult qm_minimize(const QMFamily& family, const std::vector<std::pair<long, long>>& weights);

struct FgCheck {
    AlgNum breakpoint;    // a(2a+3b)/(2a+b)
    int rank;             // Q-rank of {a0, b0, breakpoint}
    bool independent;     // rank == 3
};

// The finite-generation certificate: for weights (a0, b0) with 0 < b0 < 2 a0,
// computes the middle chamber breakpoint and the Q-rank of {a0, b0,
// breakpoint} in the coordinate basis of their common field. Rank 3 certifies
// the non-finitely-generated instance.
FgCheck fg_check(const AlgNum& a0, const AlgNum& b0);

} // namespace kst

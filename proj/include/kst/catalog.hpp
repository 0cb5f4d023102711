#pragma once

#include "kst/adjunction.hpp"

namespace kst {

// The six tangent-hyperplane-section cases of a smooth cubic surface at a
// point x, keyed by the singularity of C = T_x(X) cap X.
struct CubicCase {
    enum Kind { eckardt, tacnode, cusp, node, three_lines, line_conic } kind;
    long a = 0, b = 0; // line_conic weights; coprime, 0 < b < 2a

    static CubicCase of(Kind k) { return {k, 0, 0}; }
    static CubicCase with_weights(long a, long b) { return {line_conic, a, b}; }
    std::string name() const;
    static CubicCase parse(const std::string& name);
};

// The lattice/blow-up model for a cubic case. The classical intersection
// numbers are hard-coded; the implied entries are frozen from these facts:
//  - weighted blow-up with wt(u)=a, wt(v)=b at a smooth point: (E^2) = -1/(ab),
//    a curve {u=0} meets E once with local multiplicity 1/b;
//  - pullback: pi*C = Ctilde + wt(C) E, so (Ctilde^2) = (C^2) - wt^2/(ab),
//    and (-pi*K . Ctilde) = deg C on the cubic surface.
// For line_conic the weights (a, b) parameterize the model family Y_{a,b}.
SurfaceBlowupModel cubic_model(const CubicCase& c);

// delta_x for the case: the Eckardt point routes through the closed-form
// hypersurface report, line_conic through the quasi-monomial minimizer, and
// the rest through the adjunction bound (asserted tight).
AlgNum cubic_delta(const CubicCase& c);

// The weighted-blow-up family over a point of a line + transversal conic,
// built for qm_minimize. Domain: mu = a/b > 1/2.
QMFamily line_conic_family();

// Closed forms at a generalized Eckardt point of a degree-d hypersurface in
// P^{n+1}. S_H is additionally recomputed as (1/d) * integral of the
// closed-form volume and must agree.
struct EckardtReport {
    long n = 0, d = 0;
    AlgNum s_h;            // (d+n-1)/(n+1)
    AlgNum f_coeff;        // (1/(n+1))(1 - 1/d)
    AlgNum delta_h;        // n(n+1)/(d+n-1)
    bool has_delta_x = false; // only when d <= n+1 (Fano)
    AlgNum delta_x;        // n(n+1)/((n-1+d)(n+2-d))
    std::optional<PiecewisePoly> volume; // d - t^n, then (d-t)^n/(d-1)^{n-1}
    std::vector<std::pair<std::string, std::string>> volume_pieces; // [interval, formula]
    AlgNum volume_integral_s; // the independent recomputation of s_h
    bool assumes_cone_base_ks = false; // unchecked hypothesis when d <= n-1
};

EckardtReport eckardt_report(long n, long d);

// delta_x(L) >= (n+1)/(L^n) for polarizations cut by a smooth-at-x complete
// intersection curve.
AlgNum small_deg_bound(long n, const AlgNum& vol_l);

// The numeric side of the index-two argument for n >= 4: the flag-tail
// S-value of (6/(n+1))H along the line, the induced degree on the line, the
// two-point bound on curves, and the point-case bound from the movable
// threshold estimate eta <= 2 sqrt(n).
struct IndexTwoReport {
    long n = 0;
    AlgNum s_tail;       // (6/(n+1)) (2/3 - 1/(3n))
    AlgNum c1_tail_deg;  // (4/(n+1)) (n-1+1/n)
    AlgNum curve_bound;  // 4 / c1_tail_deg = n(n+1)/(n^2-n+1)
    AlgNum eta_bound;    // 2 sqrt(n)
    AlgNum point_bound;  // max{(4n-2)/(n+1), 2 n^{3/2}/(n+1)}
    bool s_tail_ok;      // s_tail < n/(n+1)
    bool c1_tail_ok;     // c1_tail_deg < 4n/(n+1)
    bool curve_ok;       // curve_bound >= (n+1)/n
    bool point_ok;       // point_bound < n
};

IndexTwoReport index_two_report(long n);

} // namespace kst

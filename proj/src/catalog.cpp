#include "kst/catalog.hpp"

#include <numeric>

namespace kst {

namespace {

AlgNum q(long n, long d = 1) { return AlgNum::of(n, d); }

IntersectionLattice make_lattice(std::vector<std::string> names,
                                 std::vector<std::vector<AlgNum>> gram) {
    return IntersectionLattice(std::move(names), std::move(gram));
}

using Diff = std::vector<std::pair<std::string, AlgNum>>;
using Inc = std::map<std::string, std::vector<std::pair<std::string, AlgNum>>>;

} // namespace

std::string CubicCase::name() const {
    switch (kind) {
    case eckardt: return "eckardt";
    case tacnode: return "tacnode";
    case cusp: return "cusp";
    case node: return "node";
    case three_lines: return "three-lines";
    case line_conic: return "line-conic";
    }
    return "?";
}

CubicCase CubicCase::parse(const std::string& name) {
    if (name == "eckardt") return of(eckardt);
    if (name == "tacnode") return of(tacnode);
    if (name == "cusp") return of(cusp);
    if (name == "node") return of(node);
    if (name == "three-lines" || name == "three_lines") return of(three_lines);
    if (name == "line-conic" || name == "line_conic") return with_weights(2, 1);
    throw std::domain_error("unknown cubic case: " + name);
}

SurfaceBlowupModel cubic_model(const CubicCase& c) {
    switch (c.kind) {
    case CubicCase::tacnode: {
        // weighted blow-up wt(u)=2, wt(v)=1 of the tacnode of C = L cup Q;
        // both branches have weight 2, so (Ltilde.E) = (Qtilde.E) = 1
        auto lat = make_lattice(
            {"K", "E", "Ltilde", "Qtilde"},
            {{q(3), q(0), q(1), q(2)},
             {q(0), q(-1, 2), q(1), q(1)},
             {q(1), q(1), q(-3), q(0)},
             {q(2), q(1), q(0), q(-2)}});
        Diff diff = {{"P0", q(1, 2)}}; // the order-2 point of Y, off the curves
        Inc inc = {{"Ltilde", {{"P1", q(1)}}}, {"Qtilde", {{"P2", q(1)}}}};
        return SurfaceBlowupModel(lat, q(3), diff, inc);
    }
    case CubicCase::cusp: {
        // wt(u)=3, wt(v)=2 over the cusp u^2 = v^3; A = 5, (E^2) = -1/6
        auto lat = make_lattice(
            {"K", "E", "Ctilde"},
            {{q(3), q(0), q(3)},
             {q(0), q(-1, 6), q(1)},
             {q(3), q(1), q(-3)}});
        Diff diff = {{"P0", q(1, 2)}, {"P1", q(2, 3)}}; // the two singular points of Y
        Inc inc = {{"Ctilde", {{"P2", q(1)}}}};
        return SurfaceBlowupModel(lat, q(5), diff, inc);
    }
    case CubicCase::node: {
        // ordinary blow-up; the nodal cubic meets E at the two branch points
        auto lat = make_lattice(
            {"K", "E", "Ctilde"},
            {{q(3), q(0), q(3)},
             {q(0), q(-1), q(2)},
             {q(3), q(2), q(-1)}});
        Inc inc = {{"Ctilde", {{"P1", q(1)}, {"P2", q(1)}}}};
        return SurfaceBlowupModel(lat, q(2), {}, inc);
    }
    case CubicCase::three_lines: {
        // ordinary blow-up; only the two lines through x enter the lattice
        auto lat = make_lattice(
            {"K", "E", "L1tilde", "L2tilde"},
            {{q(3), q(0), q(1), q(1)},
             {q(0), q(-1), q(1), q(1)},
             {q(1), q(1), q(-2), q(0)},
             {q(1), q(1), q(0), q(-2)}});
        Inc inc = {{"L1tilde", {{"P1", q(1)}}}, {"L2tilde", {{"P2", q(1)}}}};
        return SurfaceBlowupModel(lat, q(2), {}, inc);
    }
    case CubicCase::eckardt: {
        // lattice cross-check preset: ordinary blow-up of an Eckardt point,
        // the three lines through x all in the lattice
        auto lat = make_lattice(
            {"K", "E", "L1tilde", "L2tilde", "L3tilde"},
            {{q(3), q(0), q(1), q(1), q(1)},
             {q(0), q(-1), q(1), q(1), q(1)},
             {q(1), q(1), q(-2), q(0), q(0)},
             {q(1), q(1), q(0), q(-2), q(0)},
             {q(1), q(1), q(0), q(0), q(-2)}});
        Inc inc = {{"L1tilde", {{"P1", q(1)}}},
                   {"L2tilde", {{"P2", q(1)}}},
                   {"L3tilde", {{"P3", q(1)}}}};
        return SurfaceBlowupModel(lat, q(2), {}, inc);
    }
    case CubicCase::line_conic: {
        long a = c.a, b = c.b;
        if (a <= 0 || b <= 0 || std::gcd(a, b) != 1 || !(b < 2 * a))
            throw std::domain_error("line-conic weights must be coprime with 0 < b < 2a");
        // wt(L)=a, wt(Q)=b at a transversal intersection point:
        // (Ltilde^2) = -1 - a/b, (Qtilde^2) = -b/a, (Ltilde.Qtilde) = 1
        auto lat = make_lattice(
            {"K", "E", "Ltilde", "Qtilde"},
            {{q(3), q(0), q(1), q(2)},
             {q(0), q(-1, a * b), q(1, b), q(1, a)},
             {q(1), q(1, b), q(-1) - q(a, b), q(1)},
             {q(2), q(1, a), q(1), q(-b, a)}});
        Diff diff;
        if (b > 1) diff.push_back({"P1", q(b - 1, b)});
        if (a > 1) diff.push_back({"P2", q(a - 1, a)});
        Inc inc = {{"Ltilde", {{"P1", q(1, b)}}}, {"Qtilde", {{"P2", q(1, a)}}}};
        return SurfaceBlowupModel(lat, q(a + b), diff, inc);
    }
    }
    throw std::logic_error("unreachable");
}

QMFamily line_conic_family() {
    QMFamily f;
    f.name = "line-conic";
    f.build = [](long a, long b) { return cubic_model(CubicCase::with_weights(a, b)); };
    f.admissible = [](long a, long b) {
        return a > 0 && b > 0 && std::gcd(a, b) == 1 && b < 2 * a;
    };
    f.mu_lower = AlgNum::of(1, 2);
    return f;
}

AlgNum cubic_delta(const CubicCase& c) {
    switch (c.kind) {
    case CubicCase::eckardt:
        return eckardt_report(2, 3).delta_x;
    case CubicCase::line_conic:
        cubic_model(c); // validate the declared weights
        return qm_minimize(line_conic_family(),
                           {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}})
            .value;
    default: {
        AdjunctionReport rep = adjunction_bound(cubic_model(c));
        if (rep.degenerate || !rep.tight)
            throw std::domain_error("adjunction bound unexpectedly loose for " + c.name());
        return rep.lower_bound;
    }
    }
}

EckardtReport eckardt_report(long n, long d) {
    if (n < 2 || d < 1) throw std::domain_error("eckardt_report requires n >= 2, d >= 1");
    EckardtReport rep;
    rep.n = n;
    rep.d = d;
    AlgNum nn = q(n), dd = q(d);
    rep.s_h = q(d + n - 1, n + 1);
    rep.f_coeff = q(1, n + 1) * (q(1) - q(1, d));
    rep.delta_h = q(n * (n + 1), d + n - 1);
    if (d <= n + 1) {
        rep.has_delta_x = true;
        rep.delta_x = q(n * (n + 1)) / q((n - 1 + d) * (n + 2 - d));
    }
    rep.assumes_cone_base_ks = (d >= 2 && d <= n - 1);

    // Independent recomputation of S_H: build the closed-form pieces as
    // polynomials (d - t^n on [0,1], (d-t)^n/(d-1)^{n-1} on [1,d]) and
    // integrate them exactly.
    std::vector<AlgNum> lead(static_cast<std::size_t>(n) + 1, q(0));
    lead[0] = dd;
    lead[static_cast<std::size_t>(n)] = q(-1);
    Poly first_piece(std::move(lead));
    rep.volume_pieces.push_back({"[0,1]", std::to_string(d) + " - t^" + std::to_string(n)});
    if (d > 1) {
        Poly dt = Poly::linear(dd, q(-1)); // d - t
        Poly power = Poly::constant(q(1));
        for (long i = 0; i < n; ++i) power = power * dt;
        AlgNum scale(1L);
        for (long i = 0; i < n - 1; ++i) scale = scale * (dd - q(1));
        Poly second_piece = power.scaled(scale.inverse());
        rep.volume = PiecewisePoly({q(0), q(1), dd}, {first_piece, second_piece});
        rep.volume_pieces.push_back(
            {"[1," + std::to_string(d) + "]",
             "(" + std::to_string(d) + " - t)^" + std::to_string(n) + " / " +
                 std::to_string(d - 1) + "^" + std::to_string(n - 1)});
    } else {
        rep.volume = PiecewisePoly({q(0), q(1)}, {first_piece});
    }
    rep.volume_integral_s = rep.volume->integrate(q(0), dd) / dd;
    if (!(rep.volume_integral_s == rep.s_h))
        throw std::domain_error("eckardt_report: volume integral disagrees with closed form");
    if (!(rep.delta_h * rep.s_h == nn))
        throw std::domain_error("eckardt_report: delta_H * S_H != n");
    return rep;
}

AlgNum small_deg_bound(long n, const AlgNum& vol_l) {
    if (n < 1) throw std::domain_error("small_deg_bound requires n >= 1");
    if (vol_l.sign() <= 0) throw std::domain_error("small_deg_bound requires (L^n) > 0");
    return q(n + 1) / vol_l;
}

IndexTwoReport index_two_report(long n) {
    if (n < 4) throw std::domain_error("index_two_report requires n >= 4");
    IndexTwoReport rep;
    rep.n = n;
    rep.s_tail = q(6, n + 1) * (q(2, 3) - q(1, 3 * n));
    rep.c1_tail_deg = q(4, n + 1) * (q(n - 1) + q(1, n));
    rep.curve_bound = q(4) / rep.c1_tail_deg;
    AlgNum sqrt_n = sqrt_rational(Rational(n));
    rep.eta_bound = q(2) * sqrt_n;
    AlgNum point_a = q(4 * n - 2, n + 1);
    AlgNum point_b = q(2 * n, n + 1) * sqrt_n;
    rep.point_bound = max(point_a, point_b);
    rep.s_tail_ok = rep.s_tail < q(n, n + 1);
    rep.c1_tail_ok = rep.c1_tail_deg < q(4 * n, n + 1);
    rep.curve_ok = rep.curve_bound >= q(n + 1, n);
    rep.point_ok = rep.point_bound < q(n);
    return rep;
}

} // namespace kst

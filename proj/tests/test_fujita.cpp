#include "doctest.h"

#include "kst/catalog.hpp"

using namespace kst;

namespace {

AlgNum q(long n, long d = 1) { return AlgNum::of(n, d); }

// a model whose walk never activates the candidate curve: F(W) vanishes
SurfaceBlowupModel ample_model() {
    IntersectionLattice lat(
        {"P", "E", "C"},
        {{q(1), q(0), q(2)}, {q(0), q(-1), q(1)}, {q(2), q(1), q(-2)}});
    return SurfaceBlowupModel(lat, q(2, 3), {},
                              {{"C", {{"P1", q(1)}}}});
}

} // namespace

TEST_CASE("volume_fn reproduces the six-case piecewise volumes") {
    auto tac = cubic_model(CubicCase::of(CubicCase::tacnode));
    PiecewisePoly vol = volume_fn(tac);
    REQUIRE(vol.pieces().size() == 3);
    Poly p1({q(3), q(0), q(-1, 2)});
    Poly p2 = p1 + Poly({q(1, 3), q(-2, 3), q(1, 3)});
    Poly p3 = p2 + Poly({q(2), q(-2), q(1, 2)});
    CHECK(vol.pieces()[0] == p1);
    CHECK(vol.pieces()[1] == p2);
    CHECK(vol.pieces()[2] == p3);
    CHECK(vol(q(0)) == tac.polarization_volume);

    auto cusp = cubic_model(CubicCase::of(CubicCase::cusp));
    PiecewisePoly cv = volume_fn(cusp);
    REQUIRE(cv.pieces().size() == 2);
    CHECK(cv.pieces()[0] == Poly({q(3), q(0), q(-1, 6)}));
    CHECK(cv.pieces()[1] == Poly({q(6), q(-2), q(1, 6)}));
}

TEST_CASE("pseudo-effective thresholds") {
    CHECK(pseff_threshold(cubic_model(CubicCase::of(CubicCase::tacnode))) == q(4));
    CHECK(pseff_threshold(cubic_model(CubicCase::of(CubicCase::cusp))) == q(6));
    CHECK(pseff_threshold(cubic_model(CubicCase::of(CubicCase::node))) == q(2));
}

TEST_CASE("S invariants") {
    CHECK(s_invariant(cubic_model(CubicCase::of(CubicCase::tacnode))) == q(17, 9));
    CHECK(s_invariant(cubic_model(CubicCase::of(CubicCase::three_lines))) == q(11, 9));
    CHECK(s_invariant(cubic_model(CubicCase::with_weights(2, 1))) == q(9, 5));
}

TEST_CASE("restricted volume") {
    auto lc = cubic_model(CubicCase::with_weights(2, 1));
    PiecewisePoly res = restricted_volume_fn(lc);
    // t/(ab) on [0,b]
    CHECK(res.pieces()[0] == Poly({q(0), q(1, 2)}));
    CHECK(res(q(0)) == q(0));

    auto tac = cubic_model(CubicCase::of(CubicCase::tacnode));
    CHECK(restricted_volume_fn(tac).pieces()[0] == Poly({q(0), q(1, 2)}));
}

TEST_CASE("restricted volume is -1/2 vol' and carries half the mass") {
    for (auto kind : {CubicCase::tacnode, CubicCase::cusp, CubicCase::node,
                      CubicCase::three_lines, CubicCase::eckardt}) {
        auto m = cubic_model(CubicCase::of(kind));
        RefinementSummary s = refinement_summary(m);
        PiecewisePoly expected = s.volume.derivative().scaled(q(-1, 2));
        for (std::size_t i = 0; i < s.restricted_volume.pieces().size(); ++i)
            CHECK(s.restricted_volume.pieces()[i] == expected.pieces()[i]);
        CHECK(s.restricted_volume.integrate(q(0), s.t_value) ==
              m.polarization_volume / q(2));
    }
}

TEST_CASE("fixed part multiplicities: reference values") {
    auto tac = fixed_part_mults(cubic_model(CubicCase::of(CubicCase::tacnode)));
    CHECK(tac.at("P1") == q(17, 54));
    CHECK(tac.at("P2") == q(4, 27));

    auto cusp = fixed_part_mults(cubic_model(CubicCase::of(CubicCase::cusp)));
    CHECK(cusp.at("P2") == q(1, 6));

    auto none = fixed_part_mults(ample_model());
    CHECK(none.at("P1") == q(0));
}

TEST_CASE("fixed part multiplicities are nonnegative, zero off the support") {
    for (auto kind : {CubicCase::tacnode, CubicCase::cusp, CubicCase::node,
                      CubicCase::three_lines, CubicCase::eckardt}) {
        auto m = cubic_model(CubicCase::of(kind));
        for (const auto& [label, v] : fixed_part_mults(m)) CHECK(v.sign() >= 0);
    }
}

TEST_CASE("c1 degree") {
    CHECK(c1_degree(cubic_model(CubicCase::of(CubicCase::tacnode))) == q(17, 18));
    // Eckardt lattice preset: S = 4/3, (E^2) = -1, so c1 = 4/3 = (d+n-1)/(n+1)
    CHECK(c1_degree(cubic_model(CubicCase::of(CubicCase::eckardt))) == q(4, 3));
}

TEST_CASE("beta") {
    CHECK(beta_invariant(cubic_model(CubicCase::of(CubicCase::tacnode))) == q(10, 9));
    CHECK(beta_invariant(cubic_model(CubicCase::of(CubicCase::node))) == q(5, 6));
    // a model with A = S has beta = 0
    CHECK(beta_invariant(ample_model()) == q(0));
}

TEST_CASE("Tian bound: S < (2/3) T on every cubic model") {
    std::vector<CubicCase> cases = {
        CubicCase::of(CubicCase::eckardt),    CubicCase::of(CubicCase::tacnode),
        CubicCase::of(CubicCase::cusp),       CubicCase::of(CubicCase::node),
        CubicCase::of(CubicCase::three_lines), CubicCase::with_weights(2, 1)};
    for (const auto& c : cases) {
        RefinementSummary s = refinement_summary(cubic_model(c));
        CHECK(s.s_value < q(2, 3) * s.t_value);
    }
}

TEST_CASE("scaling the polarization scales S, T and c1 linearly") {
    for (auto kind : {CubicCase::tacnode, CubicCase::node}) {
        auto m = cubic_model(CubicCase::of(kind));
        RefinementSummary base = refinement_summary(m);
        for (long k : {2L, 3L}) {
            RefinementSummary s = refinement_summary(m.scaled_polarization(k));
            CHECK(s.s_value == q(k) * base.s_value);
            CHECK(s.t_value == q(k) * base.t_value);
            CHECK(s.c1_degree == q(k) * base.c1_degree);
        }
    }
}

TEST_CASE("rational lattice with irrational threshold widens to quad") {
    // vol = 2 - t^2 vanishes at sqrt 2, outside Q
    IntersectionLattice lat({"P", "E"}, {{q(2), q(0)}, {q(0), q(-1)}});
    SurfaceBlowupModel m(lat, q(2), {}, {});
    RefinementSummary s = refinement_summary(m);
    CHECK(s.t_value == AlgNum::quad(2, Rational(0), Rational(1)));
    CHECK(s.s_value == AlgNum::quad(2, Rational(0), rational_of(2, 3)));
    CHECK(s.s_value.field() == FieldDesc::quad(2));
    CHECK(s.volume.integrate(q(0), s.t_value) ==
          AlgNum::quad(2, Rational(0), rational_of(4, 3)));
}

TEST_CASE("model invariants are validated") {
    auto tac = cubic_model(CubicCase::of(CubicCase::tacnode));
    // diff coefficient outside [0,1)
    CHECK_THROWS(SurfaceBlowupModel(tac.lattice, q(3), {{"P0", q(1)}}, tac.incidence));
    // incidence multiplicities must sum to (C.E)
    auto bad_inc = tac.incidence;
    bad_inc["Ltilde"] = {{"P1", q(2)}};
    CHECK_THROWS(SurfaceBlowupModel(tac.lattice, q(3), tac.diff_points, bad_inc));
}

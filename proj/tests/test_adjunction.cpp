#include "doctest.h"

#include "kst/catalog.hpp"

using namespace kst;

namespace {

AlgNum q(long n, long d = 1) { return AlgNum::of(n, d); }

} // namespace

TEST_CASE("delta of pairs on P1") {
    PonePair tacnode_pair{{{"P0", q(1, 2)}, {"P1", q(1, 2)}, {"P2", q(4, 17)}}};
    CHECK(delta_pone(tacnode_pair) == q(17, 13));

    CHECK(delta_pone(PonePair{}) == q(1));

    PonePair equality{{{"P1", q(2, 3)}, {"P2", q(2, 3)}}};
    CHECK(delta_pone(equality) == q(1));

    PonePair too_big{{{"P1", q(9, 10)}, {"P2", q(9, 10)}, {"P3", q(9, 10)}}};
    CHECK_THROWS(delta_pone(too_big));
}

TEST_CASE("delta_pone is invariant under relabeling and zero points") {
    PonePair base{{{"A", q(1, 2)}, {"B", q(1, 3)}}};
    PonePair relabeled{{{"X", q(1, 3)}, {"Y", q(1, 2)}}};
    PonePair padded{{{"A", q(1, 2)}, {"B", q(1, 3)}, {"C", q(0)}}};
    CHECK(delta_pone(base) == delta_pone(relabeled));
    CHECK(delta_pone(base) == delta_pone(padded));
}

TEST_CASE("adjunction_bound: the cubic cases") {
    auto tac = adjunction_bound(cubic_model(CubicCase::of(CubicCase::tacnode)));
    CHECK(tac.lambda == q(27, 17));
    REQUIRE(tac.induced.points.size() == 3);
    auto coeff = [](const AdjunctionReport& r, const std::string& label) {
        for (const auto& [l, c] : r.induced.points)
            if (l == label) return c;
        throw std::runtime_error("missing point " + label);
    };
    CHECK(coeff(tac, "P0") == q(1, 2));
    CHECK(coeff(tac, "P1") == q(1, 2));
    CHECK(coeff(tac, "P2") == q(4, 17));
    CHECK(tac.r == q(17, 13));
    CHECK(tac.lower_bound == q(27, 17));
    CHECK(tac.tight);

    auto cusp = adjunction_bound(cubic_model(CubicCase::of(CubicCase::cusp)));
    CHECK(cusp.lambda == q(5, 3));
    CHECK(coeff(cusp, "P0") == q(1, 2));
    CHECK(coeff(cusp, "P1") == q(2, 3));
    CHECK(coeff(cusp, "P2") == q(5, 18));
    CHECK(cusp.lower_bound == q(5, 3));

    auto node = adjunction_bound(cubic_model(CubicCase::of(CubicCase::node)));
    CHECK(node.lambda == q(12, 7));
    CHECK(coeff(node, "P1") == coeff(node, "P2")); // symmetric boundary
    CHECK(node.r == q(1));
    CHECK(node.lower_bound == q(12, 7));
    CHECK(node.tight);
}

TEST_CASE("adjunction_bound: trivial and degenerate shapes") {
    // no different, curve never active: induced boundary is empty, bound = lambda
    IntersectionLattice lat(
        {"P", "E", "C"},
        {{q(1), q(0), q(2)}, {q(0), q(-1), q(1)}, {q(2), q(1), q(-2)}});
    SurfaceBlowupModel plain(lat, q(2), {}, {{"C", {{"P1", q(1)}}}});
    auto rep = adjunction_bound(plain);
    CHECK(rep.induced.points.empty());
    CHECK(rep.r == q(1));
    CHECK(rep.lower_bound == rep.lambda);
    CHECK(rep.tight);

    // an oversized different pushes the induced coefficient to 1: degenerate
    auto tac = cubic_model(CubicCase::of(CubicCase::tacnode));
    SurfaceBlowupModel heavy(tac.lattice, tac.log_discrepancy,
                             {{"P0", q(1, 2)}, {"P1", q(9, 10)}}, tac.incidence);
    auto deg = adjunction_bound(heavy);
    CHECK(deg.degenerate);
}

TEST_CASE("ratfun_fit recovers the line+conic ratio") {
    // A/S(mu) = 9(mu+1)(2mu+1)/(10 mu^2+19 mu+3), sampled at mu = 1..6
    Poly num({q(9), q(27), q(18)});
    Poly den({q(3), q(19), q(10)});
    std::vector<std::pair<AlgNum, AlgNum>> samples;
    for (long mu = 1; mu <= 6; ++mu)
        samples.push_back({q(mu), num(q(mu)) / den(q(mu))});
    auto [p, fitted_q] = ratfun_fit(samples, 2, 2);
    // equal as a ratio: p * den == num * fitted_q
    CHECK(p * den == num * fitted_q);
    CHECK(fitted_q.leading() == q(1));

    // constant samples -> (c, 1)
    std::vector<std::pair<AlgNum, AlgNum>> konst = {{q(0), q(7)}, {q(1), q(7)}, {q(2), q(7)}};
    auto [cp, cq] = ratfun_fit(konst, 0, 0);
    CHECK(cp == Poly::constant(q(7)));
    CHECK(cq == Poly::constant(q(1)));

    // identity samples with degrees (1,0)
    std::vector<std::pair<AlgNum, AlgNum>> ident = {
        {q(1), q(1)}, {q(2), q(2)}, {q(3), q(3)}, {q(5), q(5)}};
    auto [ip, iq] = ratfun_fit(ident, 1, 0);
    CHECK(ip == Poly({q(0), q(1)}));
    CHECK(iq == Poly::constant(q(1)));

    // wrong degree bounds are reported
    std::vector<std::pair<AlgNum, AlgNum>> cubic;
    for (long mu = 0; mu <= 5; ++mu) cubic.push_back({q(mu), q(mu * mu * mu)});
    CHECK_THROWS_WITH_AS(ratfun_fit(cubic, 1, 1), doctest::Contains("degree bound wrong"),
                         std::domain_error);
}

TEST_CASE("qm_minimize finds the irrational minimizer") {
    auto res = qm_minimize(line_conic_family(), {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}});
    CHECK(res.interior);
    CHECK(res.mu_star == AlgNum::quad(6, rational_of(1, 2), rational_of(1, 2)));
    // value = 9/(25 - 8 sqrt6) = (225 + 72 sqrt6)/241
    AlgNum expected = AlgNum::quad(6, rational_of(225, 241), rational_of(72, 241));
    CHECK(res.value == expected);
    CHECK(res.value * AlgNum::quad(6, Rational(25), Rational(-8)) == q(9));

    // fitted ratio agrees with direct computation at held-out weights
    for (auto [a, b] : {std::pair<long, long>{7, 2}, {5, 4}, {9, 4}}) {
        auto m = cubic_model(CubicCase::with_weights(a, b));
        AlgNum mu = q(a) / q(b);
        AlgNum direct = m.log_discrepancy / s_invariant(m);
        CHECK(res.fit_num(mu) / res.fit_den(mu) == direct);
    }
}

TEST_CASE("qm_minimize: constant family reports the endpoint") {
    QMFamily constant;
    constant.name = "constant";
    constant.build = [](long, long) { return cubic_model(CubicCase::of(CubicCase::tacnode)); };
    constant.admissible = [](long a, long b) { return a > 0 && b > 0; };
    constant.mu_lower = q(1, 2);
    constant.fit_num_deg = 0;
    constant.fit_den_deg = 0;
    auto res = qm_minimize(constant, {{1, 1}, {2, 1}, {3, 1}});
    CHECK(!res.interior);
    CHECK(res.value == q(27, 17));
}

TEST_CASE("fg_check rank certificates") {
    auto rational_case = fg_check(q(2), q(1));
    CHECK(rational_case.breakpoint == q(14, 5));
    CHECK(rational_case.rank == 1);
    CHECK(!rational_case.independent);

    auto quad_case = fg_check(AlgNum::quad(2, Rational(0), Rational(1)), q(1));
    CHECK(quad_case.breakpoint ==
          AlgNum::quad(2, rational_of(8, 7), rational_of(5, 7)));
    CHECK(quad_case.rank == 2);
    CHECK(!quad_case.independent);

    auto biquad_case = fg_check(parse_algnum("1+s2"), parse_algnum("s3"));
    CHECK(biquad_case.rank == 3);
    CHECK(biquad_case.independent);

    CHECK_THROWS(fg_check(q(1), q(3)));  // b >= 2a
    CHECK_THROWS(fg_check(q(-1), q(1)));
}

TEST_CASE("fg_check is dependent on every rational input") {
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b < 2 * a && b <= 6; ++b) {
            auto r = fg_check(q(a), q(b));
            CHECK(!r.independent);
            CHECK(r.rank == 1);
        }
}

#include "kst/fujita.hpp"

namespace kst {

SurfaceBlowupModel::SurfaceBlowupModel(
    IntersectionLattice lat, AlgNum a, std::vector<std::pair<std::string, AlgNum>> diff,
    std::map<std::string, std::vector<std::pair<std::string, AlgNum>>> inc)
    : lattice(std::move(lat)), log_discrepancy(std::move(a)), diff_points(std::move(diff)),
      incidence(std::move(inc)), polarization_volume(lattice.pair(lattice.polarization(),
                                                                  lattice.polarization())) {
    for (const auto& [label, coeff] : diff_points) {
        if (coeff.sign() < 0 || coeff >= AlgNum(1L))
            throw std::domain_error("different coefficient outside [0,1) at " + label);
    }
    for (const auto& [curve, pts] : incidence) {
        std::size_t idx = lattice.index_of(curve);
        if (idx < 2) throw std::domain_error("incidence must name candidate curves: " + curve);
        AlgNum total(0L);
        for (const auto& [label, mult] : pts) {
            if (mult.sign() <= 0)
                throw std::domain_error("incidence multiplicity must be positive at " + label);
            total = total + mult;
        }
        AlgNum ce = lattice.pair(lattice.basis_class(idx), lattice.exceptional());
        if (!(total == ce))
            throw std::domain_error("incidence multiplicities of " + curve +
                                    " do not sum to (C.E)");
    }
    if (log_discrepancy.sign() <= 0)
        throw std::domain_error("log discrepancy must be positive");
}

SurfaceBlowupModel SurfaceBlowupModel::scaled_polarization(long k) const {
    if (k <= 0) throw std::domain_error("polarization scale must be positive");
    auto gram = lattice.gram();
    const std::size_t n = lattice.rank();
    AlgNum kk(k);
    // scale row 0 and column 0; the (0,0) entry picks up k twice
    for (std::size_t j = 0; j < n; ++j) gram[0][j] = gram[0][j] * kk;
    for (std::size_t j = 0; j < n; ++j) gram[j][0] = gram[j][0] * kk;
    return SurfaceBlowupModel(IntersectionLattice(lattice.classes(), std::move(gram)),
                              log_discrepancy, diff_points, incidence);
}

namespace {

// (P_sigma(t) . E) on one chamber: (D(t).E) - sum_j x_j(t) (C_j.E).
Poly restricted_piece(const IntersectionLattice& lat, const ZariskiChamber& ch) {
    const auto& g = lat.gram();
    Poly out = Poly::linear(g[0][1], -g[1][1]);
    for (std::size_t j = 0; j < ch.support.size(); ++j)
        out = out - ch.neg_coeffs[j].scaled(g[ch.support[j]][1]);
    return out;
}

} // namespace

RefinementSummary refinement_summary(const SurfaceBlowupModel& m) {
    auto chambers = nef_chambers(m.lattice);

    std::vector<AlgNum> bps;
    std::vector<Poly> vol_pieces, res_pieces;
    bps.push_back(chambers.front().t_lo);
    for (const auto& ch : chambers) {
        bps.push_back(ch.t_hi);
        vol_pieces.push_back(ch.vol_piece);
        res_pieces.push_back(restricted_piece(m.lattice, ch));
    }
    PiecewisePoly volume(bps, vol_pieces);
    PiecewisePoly restricted(bps, res_pieces);

    // restricted volume must be -1/2 d/dt of the volume, piece by piece
    PiecewisePoly check = volume.derivative().scaled(AlgNum::of(-1, 2));
    for (std::size_t i = 0; i < res_pieces.size(); ++i)
        if (!(check.pieces()[i] == res_pieces[i]))
            throw std::domain_error("restricted volume disagrees with -1/2 vol'");

    AlgNum t_value = bps.back();
    AlgNum vol_l = m.polarization_volume;
    if (!(volume(bps.front()) == vol_l))
        throw std::domain_error("volume at t=0 disagrees with (P0^2)");
    AlgNum s_value = volume.integrate(bps.front(), t_value) / vol_l;

    // mult_P F = (2/vol L) * integral of (P.E) * sum_C x_C(t) mult_P(C) dt
    std::map<std::string, AlgNum> fmults;
    for (const auto& [curve, pts] : m.incidence)
        for (const auto& [label, mult] : pts)
            fmults.emplace(label, AlgNum(0L));
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        const auto& ch = chambers[i];
        for (std::size_t j = 0; j < ch.support.size(); ++j) {
            const std::string& curve = m.lattice.classes()[ch.support[j]];
            auto it = m.incidence.find(curve);
            if (it == m.incidence.end()) continue;
            Poly integrand = res_pieces[i] * ch.neg_coeffs[j];
            Poly anti = integrand.antiderivative();
            AlgNum piece_mass = anti(ch.t_hi) - anti(ch.t_lo);
            for (const auto& [label, mult] : it->second)
                fmults[label] = fmults[label] + mult * piece_mass;
        }
    }
    AlgNum two_over_vol = AlgNum(2L) / vol_l;
    for (auto& [label, v] : fmults) v = v * two_over_vol;

    const auto& g = m.lattice.gram();
    AlgNum c1 = g[0][1] - s_value * g[1][1]; // ((P0 - S E) . E)
    if (c1.sign() <= 0) throw std::domain_error("induced degree c1 must be positive");

    AlgNum beta = m.log_discrepancy - s_value;

    if (!(s_value.sign() > 0 && s_value < t_value))
        throw std::domain_error("expected 0 < S < T");

    return RefinementSummary{s_value, t_value, std::move(volume), std::move(restricted),
                             std::move(fmults), std::move(c1), std::move(beta)};
}

PiecewisePoly volume_fn(const SurfaceBlowupModel& m) { return refinement_summary(m).volume; }

AlgNum pseff_threshold(const SurfaceBlowupModel& m) { return refinement_summary(m).t_value; }

AlgNum s_invariant(const SurfaceBlowupModel& m) { return refinement_summary(m).s_value; }

PiecewisePoly restricted_volume_fn(const SurfaceBlowupModel& m) {
    return refinement_summary(m).restricted_volume;
}

std::map<std::string, AlgNum> fixed_part_mults(const SurfaceBlowupModel& m) {
    return refinement_summary(m).fixed_part_mults;
}

AlgNum c1_degree(const SurfaceBlowupModel& m) { return refinement_summary(m).c1_degree; }

AlgNum beta_invariant(const SurfaceBlowupModel& m) { return refinement_summary(m).beta; }

} // namespace kst

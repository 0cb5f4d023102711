#include "kst/adjunction.hpp"

#include "kst/linalg.hpp"

#include <algorithm>

namespace kst {

void PonePair::validate() const {
    AlgNum total(0L);
    for (const auto& [label, a] : points) {
        if (a.sign() < 0 || a >= AlgNum(1L))
            throw std::domain_error("boundary coefficient outside [0,1) at " + label);
        total = total + a;
    }
    if (total >= AlgNum(2L))
        throw std::domain_error("boundary coefficients sum to >= 2 (not log Fano)");
}

AlgNum PonePair::coefficient_sum() const {
    AlgNum total(0L);
    for (const auto& [label, a] : points) total = total + a;
    return total;
}

AlgNum delta_pone(const PonePair& pair) {
    pair.validate();
    AlgNum max_coeff(0L);
    for (const auto& [label, a] : pair.points) max_coeff = max(max_coeff, a);
    AlgNum one(1L);
    return (one - max_coeff) / (one - pair.coefficient_sum() / AlgNum(2L));
}

AdjunctionReport adjunction_bound(const SurfaceBlowupModel& model) {
    RefinementSummary sum = refinement_summary(model);
    AlgNum lambda = model.log_discrepancy / sum.s_value;

    // induced coefficient at P: diff(P) + lambda * mult_P F(W), merged by label
    std::vector<std::pair<std::string, AlgNum>> merged;
    auto bump = [&merged](const std::string& label, const AlgNum& v) {
        for (auto& [l, c] : merged)
            if (l == label) {
                c = c + v;
                return;
            }
        merged.push_back({label, v});
    };
    for (const auto& [label, c] : model.diff_points) bump(label, c);
    for (const auto& [label, f] : sum.fixed_part_mults) bump(label, lambda * f);
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& p) { return p.second.is_zero(); }),
                 merged.end());

    AdjunctionReport rep;
    rep.lambda = lambda;
    rep.induced = PonePair{merged};
    rep.degenerate = false;
    for (const auto& [label, c] : merged)
        if (c >= AlgNum(1L)) rep.degenerate = true;
    if (rep.degenerate) {
        rep.r = AlgNum(0L);
        rep.lower_bound = AlgNum(0L);
        rep.tight = false;
        return rep;
    }
    rep.r = delta_pone(rep.induced);
    rep.lower_bound = min(lambda, rep.r * lambda);
    rep.tight = rep.r >= AlgNum(1L);
    return rep;
}

std::pair<Poly, Poly> ratfun_fit(const std::vector<std::pair<AlgNum, AlgNum>>& samples,
                                 int num_deg, int den_deg) {
    if (num_deg < 0 || den_deg < 0) throw std::domain_error("ratfun_fit: negative degree");
    const std::size_t unknowns = static_cast<std::size_t>(num_deg + 1 + den_deg);
    if (samples.size() < unknowns + 1)
        throw std::domain_error("ratfun_fit: not enough samples for the degree bounds");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::domain_error("ratfun_fit: repeated sample abscissa");

    // Unknowns p_0..p_n, q_0..q_{d-1}; q_d = 1. For each sample:
    //   sum p_i mu^i - f * sum_{j<d} q_j mu^j = f * mu^d
    lin::Matrix<AlgNum> a(unknowns, std::vector<AlgNum>(unknowns, AlgNum(0L)));
    std::vector<AlgNum> rhs(unknowns, AlgNum(0L));
    for (std::size_t row = 0; row < unknowns; ++row) {
        const auto& [mu, f] = samples[row];
        AlgNum pw(1L);
        for (int i = 0; i <= num_deg; ++i) {
            a[row][static_cast<std::size_t>(i)] = pw;
            pw = pw * mu;
        }
        pw = AlgNum(1L);
        for (int j = 0; j < den_deg; ++j) {
            a[row][static_cast<std::size_t>(num_deg + 1 + j)] = -f * pw;
            pw = pw * mu;
        }
        rhs[row] = f * pw; // pw == mu^den_deg
    }
    auto sol = lin::solve(a, rhs);
    if (!sol) throw std::domain_error("ratfun_fit: singular system (degenerate degree bounds)");
    std::vector<AlgNum> pc(sol->begin(), sol->begin() + num_deg + 1);
    std::vector<AlgNum> qc(sol->begin() + num_deg + 1, sol->end());
    qc.push_back(AlgNum(1L));
    Poly p(std::move(pc)), q(std::move(qc));

    // verify on every sample, including the ones beyond the minimum
    for (const auto& [mu, f] : samples) {
        AlgNum qv = q(mu);
        if (qv.is_zero()) throw std::domain_error("ratfun_fit: fitted denominator vanishes at a sample");
        if (!(p(mu) == f * qv)) throw std::domain_error("ratfun_fit: degree bound wrong");
    }
    return {p, q};
}

QMResult qm_minimize(const QMFamily& family, const std::vector<std::pair<long, long>>& weights) {
    std::vector<std::pair<AlgNum, AlgNum>> samples;
    for (const auto& [a, b] : weights) {
        if (!family.admissible(a, b))
            throw std::domain_error("qm_minimize: inadmissible weights (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
        SurfaceBlowupModel m = family.build(a, b);
        AlgNum mu = AlgNum::of(a) / AlgNum::of(b);
        AlgNum value = m.log_discrepancy / s_invariant(m);
        samples.push_back({mu, value});
    }
    auto [p, q] = ratfun_fit(samples, family.fit_num_deg, family.fit_den_deg);

    // d/dmu (P/Q) has numerator P'Q - PQ'; for a (2,2) fit the degree-3 terms
    // cancel exactly and quad_roots applies.
    Poly dnum = p.derivative() * q - p * q.derivative();
    auto in_domain = [&family](const AlgNum& mu) {
        if (!(mu > family.mu_lower)) return false;
        if (family.mu_upper && !(mu < *family.mu_upper)) return false;
        return true;
    };

    QMResult out;
    out.fit_num = p;
    out.fit_den = q;
    if (dnum.is_zero()) {
        // constant ratio: report the (lower) endpoint with that constant
        out.interior = false;
        out.mu_star = family.mu_lower;
        out.value = samples.front().second;
        return out;
    }
    if (dnum.degree() > 2)
        throw std::domain_error("qm_minimize: derivative numerator degree exceeds 2");
    std::vector<AlgNum> crit = quad_roots(dnum);
    bool found = false;
    AlgNum best_val(0L), best_mu(0L);
    for (const auto& mu : crit) {
        if (!in_domain(mu)) continue;
        AlgNum val = p(mu) / q(mu);
        if (!found || val < best_val) {
            best_val = val;
            best_mu = mu;
            found = true;
        }
    }
    if (!found) {
        // monotone on the domain: the infimum sits at an endpoint
        AlgNum probe = family.mu_upper ? (family.mu_lower + *family.mu_upper) / AlgNum(2L)
                                       : family.mu_lower + AlgNum(1L);
        int dir = dnum(probe).sign();
        if (dir >= 0) {
            out.interior = false;
            out.mu_star = family.mu_lower;
            out.value = p(out.mu_star) / q(out.mu_star);
            return out;
        }
        if (!family.mu_upper)
            throw std::domain_error("qm_minimize: no admissible critical point and no finite endpoint");
        out.interior = false;
        out.mu_star = *family.mu_upper;
        out.value = p(out.mu_star) / q(out.mu_star);
        return out;
    }
    // confirm the minimum by sampling the derivative sign on both sides
    {
        AlgNum eps = AlgNum::of(1, 64);
        if (crit.size() == 2 && !(crit[0] == crit[1])) {
            AlgNum gap = abs(crit[1] - crit[0]) / AlgNum(4L);
            eps = min(eps, gap);
        }
        AlgNum left = best_mu - eps, right = best_mu + eps;
        if (in_domain(left) && in_domain(right)) {
            if (!(dnum(left).sign() <= 0 && dnum(right).sign() >= 0))
                throw std::domain_error("qm_minimize: critical point is not a minimum");
        }
    }
    out.interior = true;
    out.mu_star = best_mu;
    out.value = best_val;
    return out;
}

FgCheck fg_check(const AlgNum& a0, const AlgNum& b0) {
    FieldDesc f = field_join(a0.field(), b0.field());
    AlgNum a = a0.promoted(f), b = b0.promoted(f);
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::domain_error("fg_check: weights must be positive");
    if (!(b < AlgNum(2L) * a)) throw std::domain_error("fg_check: requires b < 2a");

    AlgNum two_a = AlgNum(2L) * a;
    AlgNum breakpoint = a * (two_a + AlgNum(3L) * b) / (two_a + b);

    // Q-rank of {a, b, breakpoint} as coordinate vectors over the basis of f.
    AlgNum brk = breakpoint.promoted(f);
    lin::Matrix<Rational> m;
    for (const AlgNum* v : {&a, &b, &brk}) m.push_back(v->coords());
    int rank = static_cast<int>(lin::rank(m));
    return FgCheck{breakpoint, rank, rank == 3};
}

} // namespace kst

#include "kst/zariski.hpp"

#include "kst/linalg.hpp"

#include <algorithm>
#include <optional>

namespace kst {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (coeffs.size() != o.coeffs.size()) throw std::domain_error("divisor rank mismatch");
    std::vector<AlgNum> c(coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i] + o.coeffs[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    return *this + o.scaled(AlgNum(-1L));
}

DivisorClass DivisorClass::scaled(const AlgNum& k) const {
    std::vector<AlgNum> c(coeffs);
    for (auto& x : c) x = x * k;
    return DivisorClass(std::move(c));
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    if (coeffs.size() != o.coeffs.size()) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != o.coeffs[i]) return false;
    return true;
}

IntersectionLattice::IntersectionLattice(std::vector<std::string> classes,
                                         std::vector<std::vector<AlgNum>> gram)
    : classes_(std::move(classes)), gram_(std::move(gram)) {
    const std::size_t n = classes_.size();
    if (n < 2) throw std::domain_error("lattice needs at least polarization and E");
    if (gram_.size() != n) throw std::domain_error("Gram matrix size mismatch");
    for (const auto& row : gram_)
        if (row.size() != n) throw std::domain_error("Gram matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::domain_error("Gram matrix not symmetric");
    if (gram_[0][0].sign() <= 0)
        throw std::domain_error("polarization must be big: (P0^2) > 0");
    if (n - 2 > 8)
        throw std::domain_error("too many candidate curves (subset enumeration cap is 8)");
}

std::size_t IntersectionLattice::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == name) return i;
    throw std::domain_error("unknown lattice class: " + name);
}

AlgNum IntersectionLattice::pair(const DivisorClass& d1, const DivisorClass& d2) const {
    const std::size_t n = rank();
    if (d1.coeffs.size() != n || d2.coeffs.size() != n)
        throw std::domain_error("divisor rank mismatch with lattice");
    AlgNum total(0L);
    for (std::size_t i = 0; i < n; ++i) {
        if (d1.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (d2.coeffs[j].is_zero()) continue;
            total = total + d1.coeffs[i] * gram_[i][j] * d2.coeffs[j];
        }
    }
    return total;
}

DivisorClass IntersectionLattice::basis_class(std::size_t i) const {
    std::vector<AlgNum> c(rank(), AlgNum(0L));
    c.at(i) = AlgNum(1L);
    return DivisorClass(std::move(c));
}

namespace {

// Gram submatrix of the given lattice indices.
lin::Matrix<AlgNum> submatrix(const IntersectionLattice& lat, const std::vector<std::size_t>& idx) {
    lin::Matrix<AlgNum> m(idx.size(), std::vector<AlgNum>(idx.size(), AlgNum(0L)));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m[i][j] = lat.gram()[idx[i]][idx[j]];
    return m;
}

// Negative definiteness via alternating leading principal minors.
bool negative_definite(const IntersectionLattice& lat, const std::vector<std::size_t>& idx) {
    for (std::size_t k = 1; k <= idx.size(); ++k) {
        std::vector<std::size_t> head(idx.begin(), idx.begin() + k);
        AlgNum det = lin::determinant(submatrix(lat, head));
        int want = (k % 2 == 0) ? 1 : -1;
        if (det.sign() != want) return false;
    }
    return true;
}

struct SubsetData {
    std::vector<std::size_t> support;
    std::vector<Poly> coeffs;      // affine x_j(t)
    std::vector<Poly> p_of_t;      // P(t) over the lattice basis
    Poly vol;                      // (P(t) . D(t))
};

// Affine solution of the support linear system for D(t) = P0 - tE.
std::optional<SubsetData> solve_subset(const IntersectionLattice& lat,
                                       const std::vector<std::size_t>& support) {
    SubsetData out;
    out.support = support;
    const std::size_t n = lat.rank();
    DivisorClass p0 = lat.polarization(), exc = lat.exceptional();
    if (!support.empty()) {
        if (!negative_definite(lat, support)) return std::nullopt;
        lin::Matrix<AlgNum> g = submatrix(lat, support);
        std::vector<AlgNum> rhs0, rhs1;
        for (std::size_t j : support) {
            rhs0.push_back(lat.pair(p0, lat.basis_class(j)));
            rhs1.push_back(-lat.pair(exc, lat.basis_class(j)));
        }
        auto u = lin::solve(g, rhs0);
        auto v = lin::solve(g, rhs1);
        if (!u || !v) return std::nullopt;
        for (std::size_t j = 0; j < support.size(); ++j)
            out.coeffs.push_back(Poly::linear((*u)[j], (*v)[j]));
    }
    // P(t) = e0 - t e1 - sum_j x_j(t) e_{S_j}
    out.p_of_t.assign(n, Poly());
    out.p_of_t[0] = Poly::constant(AlgNum(1L));
    out.p_of_t[1] = Poly::linear(AlgNum(0L), AlgNum(-1L));
    for (std::size_t j = 0; j < support.size(); ++j)
        out.p_of_t[support[j]] = -out.coeffs[j];
    // vol = (P(t) . D(t)) where D(t) = e0 - t e1
    Poly d0 = Poly::constant(AlgNum(1L));
    Poly d1 = Poly::linear(AlgNum(0L), AlgNum(-1L));
    Poly vol;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.p_of_t[i].is_zero()) continue;
        vol = vol + out.p_of_t[i] * (d0.scaled(lat.gram()[i][0]) + d1.scaled(lat.gram()[i][1]));
    }
    out.vol = vol;
    return out;
}

// (P(t) . C) as a polynomial in t for a basis class index.
Poly pair_with_basis(const IntersectionLattice& lat, const std::vector<Poly>& vec, std::size_t c) {
    Poly out;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        if (vec[i].is_zero()) continue;
        out = out + vec[i].scaled(lat.gram()[i][c]);
    }
    return out;
}

struct IntervalBound {
    AlgNum lo = AlgNum(0L);
    std::optional<AlgNum> hi; // empty = +infinity
    bool empty = false;

    void clip_ge(const Poly& affine) { // affine(t) >= 0
        if (empty) return;
        AlgNum a = affine.coeff(0), b = affine.coeff(1);
        int sb = b.sign();
        if (sb == 0) {
            if (a.sign() < 0) empty = true;
            return;
        }
        AlgNum root = -a / b;
        if (sb > 0) {
            if (root > lo) lo = root;
        } else {
            if (!hi || root < *hi) hi = root;
        }
        if (hi && !(lo < *hi)) empty = true;
    }
};

struct ChamberCandidate {
    SubsetData data;
    AlgNum lo;
    std::optional<AlgNum> hi; // may be +infinity when vol never vanishes
};

std::optional<ChamberCandidate> validity_interval(const IntersectionLattice& lat,
                                                  const SubsetData& sd) {
    IntervalBound iv;
    // support coefficients stay nonnegative
    for (const auto& x : sd.coeffs) iv.clip_ge(x);
    // P(t) nonnegative against E and every candidate outside the support
    iv.clip_ge(pair_with_basis(lat, sd.p_of_t, 1));
    for (std::size_t c = 2; c < lat.rank(); ++c) {
        if (std::find(sd.support.begin(), sd.support.end(), c) != sd.support.end()) continue;
        iv.clip_ge(pair_with_basis(lat, sd.p_of_t, c));
    }
    if (iv.empty) return std::nullopt;
    // volume stays nonnegative: clip at the roots of the quadratic piece
    const Poly& vol = sd.vol;
    if (vol.degree() <= 1) {
        IntervalBound tmp = iv;
        tmp.clip_ge(vol);
        iv = tmp;
    } else {
        std::vector<AlgNum> roots;
        try {
            roots = quad_roots(vol);
        } catch (const std::domain_error&) {
            // endpoint not representable in a supported field; this subset
            // cannot bound a chamber, and the tiling check will surface the
            // failure if it was needed
            return std::nullopt;
        }
        int lead = vol.leading().sign();
        if (lead < 0) {
            if (roots.empty()) return std::nullopt;
            if (roots.front() > iv.lo) iv.lo = roots.front();
            if (!iv.hi || roots.back() < *iv.hi) iv.hi = roots.back();
        } else if (lead > 0 && !roots.empty()) {
            // feasible outside (r1, r2); a chamber is contiguous from lo
            if (iv.lo <= roots.front()) {
                if (!iv.hi || roots.front() < *iv.hi) iv.hi = roots.front();
            } else if (iv.lo < roots.back()) {
                iv.lo = roots.back();
            }
        }
        if (iv.hi && !(iv.lo < *iv.hi)) return std::nullopt;
    }
    if (iv.empty) return std::nullopt;
    return ChamberCandidate{sd, iv.lo, iv.hi};
}

std::vector<std::size_t> mask_to_support(unsigned mask, std::size_t base) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; mask; ++b, mask >>= 1)
        if (mask & 1) s.push_back(base + b);
    return s;
}

} // namespace

std::pair<DivisorClass, DivisorClass> zariski_decompose(const IntersectionLattice& lat,
                                                        const DivisorClass& d) {
    const std::size_t k = lat.candidate_count();
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << k); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(),
              [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (unsigned mask : masks) {
        auto support = mask_to_support(mask, 2);
        std::vector<AlgNum> x;
        if (!support.empty()) {
            if (!negative_definite(lat, support)) continue;
            lin::Matrix<AlgNum> g = submatrix(lat, support);
            std::vector<AlgNum> rhs;
            for (std::size_t j : support) rhs.push_back(lat.pair(d, lat.basis_class(j)));
            auto sol = lin::solve(g, rhs);
            if (!sol) continue;
            x = *sol;
            bool nonneg = true;
            for (const auto& xi : x)
                if (xi.sign() < 0) { nonneg = false; break; }
            if (!nonneg) continue;
        }
        DivisorClass n(std::vector<AlgNum>(lat.rank(), AlgNum(0L)));
        for (std::size_t j = 0; j < support.size(); ++j) n.coeffs[support[j]] = x[j];
        DivisorClass p = d - n;
        bool nef = lat.pair(p, lat.exceptional()).sign() >= 0;
        for (std::size_t c = 2; nef && c < lat.rank(); ++c)
            nef = lat.pair(p, lat.basis_class(c)).sign() >= 0;
        if (!nef) continue;
        return {p, n};
    }
    throw zariski_error("candidate set incomplete or divisor not pseudo-effective");
}

std::vector<ZariskiChamber> nef_chambers(const IntersectionLattice& lat) {
    const std::size_t k = lat.candidate_count();
    std::vector<ChamberCandidate> candidates;
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << k); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(),
              [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (unsigned mask : masks) {
        auto sd = solve_subset(lat, mask_to_support(mask, 2));
        if (!sd) continue;
        auto cand = validity_interval(lat, *sd);
        if (cand) candidates.push_back(std::move(*cand));
    }

    std::vector<ZariskiChamber> chambers;
    AlgNum cur(0L);
    std::vector<std::size_t> prev_support;
    bool done = false;
    while (!done) {
        const ChamberCandidate* pick = nullptr;
        for (const auto& c : candidates) {
            if (!(c.lo == cur)) continue;
            if (chambers.empty()) {
                if (!c.data.support.empty()) continue; // walk starts nef
            } else {
                // supports grow strictly along the walk
                if (c.data.support.size() <= prev_support.size()) continue;
                if (!std::includes(c.data.support.begin(), c.data.support.end(),
                                   prev_support.begin(), prev_support.end()))
                    continue;
            }
            if (!pick || c.data.support.size() < pick->data.support.size()) pick = &c;
        }
        if (!pick)
            throw zariski_error("incomplete candidate curve set: no chamber starts at t = " +
                                cur.str());
        if (!pick->hi)
            throw zariski_error(
                "incomplete candidate curve set: volume never reaches zero along the walk");
        ZariskiChamber ch;
        ch.t_lo = pick->lo;
        ch.t_hi = *pick->hi;
        ch.support = pick->data.support;
        ch.neg_coeffs = pick->data.coeffs;
        ch.vol_piece = pick->data.vol;
        chambers.push_back(ch);
        prev_support = pick->data.support;
        cur = *pick->hi;
        if (pick->data.vol(cur).is_zero()) done = true;
        if (chambers.size() > k + 2)
            throw zariski_error("chamber walk failed to terminate");
    }
    return chambers;
}

} // namespace kst

#pragma once

#include "kst/poly.hpp"

#include <string>
#include <vector>

namespace kst {

// Raised when the candidate curve set cannot explain the requested
// decomposition or chamber structure.
class zariski_error : public std::domain_error {
public:
    explicit zariski_error(const std::string& what) : std::domain_error(what) {}
};

struct DivisorClass {
    std::vector<AlgNum> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<AlgNum> c) : coeffs(std::move(c)) {}

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const AlgNum& k) const;
    bool operator==(const DivisorClass& o) const;
};

// Intersection lattice of the blown-up surface. Class 0 is the polarization
// pullback (pi* L or -pi* K), class 1 the exceptional curve E; the remaining
// classes are the candidate negative curves the chamber walk may use.
class IntersectionLattice {
public:
    IntersectionLattice(std::vector<std::string> classes,
                        std::vector<std::vector<AlgNum>> gram);

    std::size_t rank() const { return classes_.size(); }
    std::size_t candidate_count() const { return rank() - 2; }
    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::vector<AlgNum>>& gram() const { return gram_; }
    std::size_t index_of(const std::string& name) const;

    // The bilinear form D1^T . Gram . D2.
    AlgNum pair(const DivisorClass& d1, const DivisorClass& d2) const;

    DivisorClass basis_class(std::size_t i) const;
    DivisorClass polarization() const { return basis_class(0); }
    DivisorClass exceptional() const { return basis_class(1); }

private:
    std::vector<std::string> classes_;
    std::vector<std::vector<AlgNum>> gram_;
};

// One chamber of the decomposition of D(t) = P0 - tE: on [t_lo, t_hi] the
// negative part is N(t) = sum_j negCoeff_j(t) * C_j over the support, each
// coefficient affine in t, and (P_sigma(D(t))^2) equals vol_piece(t).
struct ZariskiChamber {
    AlgNum t_lo, t_hi;
    std::vector<std::size_t> support; // lattice indices (>= 2)
    std::vector<Poly> neg_coeffs;     // degree <= 1, aligned with support
    Poly vol_piece;                   // degree <= 2
};

// Zariski decomposition D = P + N against the lattice's candidate set:
// N = sum x_i C_i with x_i >= 0, Gram(Supp N) negative definite, and P
// orthogonal to N and nonnegative against every candidate and E. Support
// subsets are enumerated in increasing cardinality; first valid wins.
std::pair<DivisorClass, DivisorClass> zariski_decompose(const IntersectionLattice& lat,
                                                        const DivisorClass& d);

// The full chamber structure of D(t) = P0 - tE on [0, T], where T is the
// largest t with positive volume. Throws zariski_error when the candidate
// intervals do not tile [0, T] exactly.
std::vector<ZariskiChamber> nef_chambers(const IntersectionLattice& lat);

} // namespace kst

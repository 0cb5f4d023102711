#pragma once

#include "kst/rational.hpp"

#include <string>
#include <vector>

namespace kst {

// Desk-scale section spaces: degree-k forms on P^1 or P^2, filtered by a
// monomial valuation. Weights are affine (one per affine coordinate: length 1
// on the curve, 2 on the plane) or projective (length 2 resp. 3, at least one
// zero entry); projective vectors are reduced to the affine chart of a
// zero-weight coordinate.
struct MonomialModel {
    enum Ambient { proj_curve, proj_plane } ambient;
    long degree;                   // k >= 1
    std::vector<Rational> weights; // affine weights after normalization

    static MonomialModel p1(long k, std::vector<Rational> weights);
    static MonomialModel p2(long k, std::vector<Rational> weights);

    std::size_t affine_dim() const { return ambient == proj_curve ? 1 : 2; }
    // dimension of degree-(k*m) forms; capped at 2000 to stay desk scale
    std::size_t space_dim(long m) const;
    // the independently known limit S = k * (sum of weights) / (dim + 1)
    Rational closed_form_limit() const;
};

// A finite-dimensional Q-vector space with an explicit basis and a descending
// chain of subspaces given by spanning sets: chain[0] spans V, chain.back()
// is empty (the zero subspace).
struct FiltrationSpec {
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Rational>>> chain;

    void validate() const; // descending, starts at V, ends at 0
};

// A basis of the common space compatible with both filtrations: every chain
// subspace of F and of G is spanned by a subset of the returned vectors.
// Built from the bi-graded pieces (F^j cap G^i) modulo
// (F^{j+1} cap G^i + F^j cap G^{i+1}); verified by rank checks.
std::vector<std::vector<Rational>> compatible_basis(const FiltrationSpec& f,
                                                    const FiltrationSpec& g);

// Exact m-basis-type S-value of the model's valuation on sections of degree
// k*m: S_m = (1/(m N_m)) sum over filtration levels of level * dim Gr^level.
Rational s_m(const MonomialModel& model, long m);

struct BasisDivisorSplit {
    Rational coeff_e;                 // component along the divisor = S_m
    std::vector<long> residual_dims;  // dim Gr^j for j = 0..max level
};

// For a coordinate-divisor valuation (single weight 1), constructs an actual
// compatible basis of the section space, reads off the basis-type divisor's
// component along the divisor, and groups the residual by filtration level.
BasisDivisorSplit basis_divisor_split(const MonomialModel& model, long m);

struct ConvergenceRow {
    long m;
    Rational s_m;
    Rational gap; // |S_m - closed form|
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    Rational closed_form;
    Rational tolerance;
    bool pass; // final gap <= tolerance
};

ConvergenceReport s_convergence(const MonomialModel& model, const std::vector<long>& ms,
                                const Rational& tolerance);

} // namespace kst

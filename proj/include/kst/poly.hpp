#pragma once

#include "kst/algnum.hpp"

#include <vector>

namespace kst {

// Univariate polynomial over AlgNum, coefficients ascending. The zero
// polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<AlgNum> coeffs);
    static Poly constant(const AlgNum& c);
    static Poly linear(const AlgNum& c0, const AlgNum& c1); // c0 + c1 t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 if zero
    const std::vector<AlgNum>& coeffs() const { return c_; }
    AlgNum coeff(std::size_t i) const; // 0 beyond degree
    const AlgNum& leading() const;

    AlgNum operator()(const AlgNum& t) const; // Horner

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const AlgNum& k) const;
    bool operator==(const Poly& o) const;

    Poly derivative() const;
    Poly antiderivative() const; // constant term 0

    std::string str(const std::string& var = "t") const;

private:
    std::vector<AlgNum> c_;
    void trim();
};

// All real roots of a polynomial of degree <= 2, ascending, in the smallest
// field extension containing them (Q widens to quad(d) when the discriminant
// is not a perfect square). A double root is listed twice. Degree > 2 or the
// zero polynomial is an error.
std::vector<AlgNum> quad_roots(const Poly& p);

// Continuous piecewise polynomial on [t_0, t_k] with strictly increasing
// breakpoints; piece i lives on [t_i, t_{i+1}] and adjacent pieces agree at
// the shared breakpoint.
class PiecewisePoly {
public:
    PiecewisePoly(std::vector<AlgNum> breakpoints, std::vector<Poly> pieces);

    const std::vector<AlgNum>& breakpoints() const { return bp_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    const AlgNum& domain_lo() const { return bp_.front(); }
    const AlgNum& domain_hi() const { return bp_.back(); }

    AlgNum operator()(const AlgNum& t) const; // throws outside the domain

    // Exact definite integral over [a,b] within the domain.
    AlgNum integrate(const AlgNum& a, const AlgNum& b) const;

    // Piecewise derivative; requires the result to be continuous (true for
    // volume functions of chamber structures, whose restricted volume is
    // continuous).
    PiecewisePoly derivative() const;
    PiecewisePoly scaled(const AlgNum& k) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<AlgNum> bp_;
    std::vector<Poly> pieces_;
};

} // namespace kst

#include "kst/poly.hpp"

#include <sstream>

namespace kst {

Poly::Poly(std::vector<AlgNum> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const AlgNum& c) { return Poly(std::vector<AlgNum>{c}); }

Poly Poly::linear(const AlgNum& c0, const AlgNum& c1) { return Poly({c0, c1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgNum Poly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return AlgNum(0L);
}

const AlgNum& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

AlgNum Poly::operator()(const AlgNum& t) const {
    AlgNum acc(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<AlgNum> c(std::max(c_.size(), o.c_.size()), AlgNum(0L));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<AlgNum> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<AlgNum> c(c_.size() + o.c_.size() - 1, AlgNum(0L));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const AlgNum& k) const {
    std::vector<AlgNum> c(c_);
    for (auto& x : c) x = x * k;
    return Poly(std::move(c));
}

bool Poly::operator==(const Poly& o) const {
    std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<AlgNum> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * AlgNum(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::antiderivative() const {
    std::vector<AlgNum> c(c_.size() + 1, AlgNum(0L));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / AlgNum(static_cast<long>(i + 1));
    return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << var;
        if (i > 1) os << var << "^" << i;
        first = false;
    }
    return os.str();
}

std::vector<AlgNum> quad_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("quad_roots: zero polynomial");
    if (p.degree() > 2) throw std::domain_error("quad_roots: degree > 2");
    if (p.degree() == 0) return {};
    if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
    const AlgNum a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    AlgNum disc = b * b - AlgNum(4L) * a * c;
    int s = disc.sign();
    if (s < 0) return {};
    AlgNum two_a = AlgNum(2L) * a;
    if (s == 0) {
        AlgNum r = -b / two_a;
        return {r, r};
    }
    AlgNum root_disc(0L);
    if (disc.is_rational()) {
        root_disc = sqrt_rational(disc.rat());
    } else {
        // sqrt of a quad(d) element only when it is a perfect square there:
        // (x + y sd)^2 = disc. Solve x^2 + d y^2 = A, 2xy = B.
        const FieldDesc f = disc.field();
        const Rational A = disc.coords()[0], B = disc.coords()[1];
        // x^2 satisfies z^2 - A z + d B^2/4 = 0
        Rational dd(f.d);
        Rational inner = A * A - dd * B * B; // the norm of disc; a square if disc is
        bool found = false;
        if (sgn(inner) >= 0) {
            AlgNum root_inner = sqrt_rational(inner);
            for (int pm = -1; pm <= 1 && !found && root_inner.is_rational(); pm += 2) {
                Rational z = (A + Rational(pm) * root_inner.rat()) / 2;
                if (sgn(z) < 0) continue;
                AlgNum x = sqrt_rational(z);
                if (!x.is_rational() || x.rat() == 0) continue;
                Rational y = B / (2 * x.rat());
                AlgNum cand = AlgNum::quad(f.d, x.rat(), y);
                if (cand * cand == disc) {
                    root_disc = cand.sign() >= 0 ? cand : -cand;
                    found = true;
                }
            }
        }
        if (!found)
            throw std::domain_error(
                "quad_roots: discriminant has no square root in a supported field");
    }
    AlgNum r1 = (-b - root_disc) / two_a;
    AlgNum r2 = (-b + root_disc) / two_a;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

PiecewisePoly::PiecewisePoly(std::vector<AlgNum> breakpoints, std::vector<Poly> pieces)
    : bp_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (bp_.size() < 2 || pieces_.size() + 1 != bp_.size())
        throw std::domain_error("PiecewisePoly: breakpoint/piece count mismatch");
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            throw std::domain_error("PiecewisePoly: breakpoints not strictly increasing");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i](bp_[i + 1]) != pieces_[i + 1](bp_[i + 1]))
            throw std::domain_error("PiecewisePoly: pieces disagree at an interior breakpoint");
}

AlgNum PiecewisePoly::operator()(const AlgNum& t) const {
    if (t < bp_.front() || t > bp_.back())
        throw std::domain_error("PiecewisePoly: evaluation outside domain");
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (t <= bp_[i + 1]) return pieces_[i](t);
    return pieces_.back()(t);
}

AlgNum PiecewisePoly::integrate(const AlgNum& a, const AlgNum& b) const {
    if (a > b) return -integrate(b, a);
    if (a < bp_.front() || b > bp_.back())
        throw std::domain_error("PiecewisePoly: integration bounds outside domain");
    AlgNum total(0L);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        AlgNum lo = max(a, bp_[i]);
        AlgNum hi = min(b, bp_[i + 1]);
        if (lo >= hi) continue;
        Poly F = pieces_[i].antiderivative();
        total = total + F(hi) - F(lo);
    }
    return total;
}

PiecewisePoly PiecewisePoly::derivative() const {
    std::vector<Poly> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return PiecewisePoly(bp_, std::move(d));
}

PiecewisePoly PiecewisePoly::scaled(const AlgNum& k) const {
    std::vector<Poly> s;
    s.reserve(pieces_.size());
    for (const auto& p : pieces_) s.push_back(p.scaled(k));
    return PiecewisePoly(bp_, std::move(s));
}

std::string PiecewisePoly::str(const std::string& var) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << "; ";
        os << pieces_[i].str(var) << " on [" << bp_[i].str() << ", " << bp_[i + 1].str() << "]";
    }
    return os.str();
}

} // namespace kst

#pragma once

#include "kst/rational.hpp"

#include <string>
#include <vector>

namespace kst {

// Thrown when an operation mixes incompatible field extensions
// (e.g. quad(2) + quad(3)); such mixes fail loudly instead of embedding.
class field_error : public std::domain_error {
public:
    explicit field_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown by the AlgNum literal parser on malformed input.
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class FieldKind { Rational, Quad, Biquad };

// Describes the coefficient field of an AlgNum: Q, Q(sqrt d) or Q(sqrt p, sqrt q)
// with d, p, q squarefree positive integers, p != q. Biquad coordinates live
// over the basis {1, sqrt p, sqrt q, sqrt(pq)} (sqrt(pq) taken literally, not
// squarefree-reduced; the four values are Q-linearly independent regardless).
struct FieldDesc {
    FieldKind kind = FieldKind::Rational;
    long d = 0;       // quad radicand
    long p = 0;       // biquad radicands, p < q
    long q = 0;

    bool operator==(const FieldDesc&) const = default;

    static FieldDesc rationals() { return {}; }
    static FieldDesc quad(long d);
    static FieldDesc biquad(long p, long q);

    std::size_t dim() const;
    std::string str() const; // "Q", "Q(s6)", "Q(s2,s3)"
};

// True if every element of `sub` embeds canonically into `super`
// (Q into anything, quad(p) into biquad(p,q) / biquad(q,p), equal fields).
bool field_embeds(const FieldDesc& sub, const FieldDesc& super);

// The smaller of two compatible fields' join; throws field_error when neither
// embeds into the other. This is the arithmetic rule: no quad/quad coercion.
FieldDesc field_unify(const FieldDesc& a, const FieldDesc& b);

// Explicit join: additionally merges quad(p) and quad(q) into biquad(p,q).
// Reserved for operations whose contract spans two single extensions
// (fg_check); ordinary arithmetic never calls this.
FieldDesc field_join(const FieldDesc& a, const FieldDesc& b);

// An exact element of Q, Q(sqrt d) or Q(sqrt p, sqrt q). Immutable in spirit:
// all operations return fresh values, so AlgNum is freely shareable across
// threads.
class AlgNum {
public:
    AlgNum() : field_(), c_(1, Rational(0)) {}
    AlgNum(long n) : field_(), c_(1, rational_of(n)) {}
    AlgNum(const Rational& r) : field_(), c_(1, r) {}
    AlgNum(FieldDesc f, std::vector<Rational> coords);

    static AlgNum of(long n, long d = 1) { return AlgNum(rational_of(n, d)); }
    // a + b*sqrt(d)
    static AlgNum quad(long d, const Rational& a, const Rational& b);
    // c0 + c1*sqrt(p) + c2*sqrt(q) + c3*sqrt(pq)
    static AlgNum biquad(long p, long q, std::vector<Rational> c);

    const FieldDesc& field() const { return field_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // value lies in Q (higher coords vanish)
    // The rational value; throws if not rational.
    Rational rat() const;

    // Exact sign in {-1,0,+1}, decided by rational interval refinement around
    // the radicals with provably separating width.
    int sign() const;

    // Canonical embedding into a larger field; throws field_error otherwise.
    AlgNum promoted(const FieldDesc& target) const;

    AlgNum operator-() const;
    AlgNum operator+(const AlgNum& o) const;
    AlgNum operator-(const AlgNum& o) const;
    AlgNum operator*(const AlgNum& o) const;
    AlgNum operator/(const AlgNum& o) const;
    AlgNum inverse() const;

    bool operator==(const AlgNum& o) const;
    bool operator!=(const AlgNum& o) const { return !(*this == o); }
    // Order comparisons go through exact sign of the difference.
    bool operator<(const AlgNum& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const AlgNum& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const AlgNum& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const AlgNum& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;

    // Matches the CLI literal grammar: "17/9", "1/2+1/2s6", "s3", "25-8s6".
    std::string str() const;

private:
    FieldDesc field_;
    std::vector<Rational> c_;

    void normalize(); // drops to a subfield when higher coordinates vanish
};

inline int sign(const AlgNum& x) { return x.sign(); }
AlgNum min(const AlgNum& a, const AlgNum& b);
AlgNum max(const AlgNum& a, const AlgNum& b);
AlgNum abs(const AlgNum& a);

// sqrt of a nonnegative rational, normalized into Q or quad(d) with d
// squarefree: sqrt(n/m) = (s/m) * sqrt(d) where n*m = s^2 * d.
AlgNum sqrt_rational(const Rational& r);

// Literal grammar: signed sum of terms, each term `p/q`, `p/q sD` or `sD`.
// Examples: "17/9", "1+s2", "25-8s6", "1/2 + 1/2 s6". Result lands in the
// smallest field containing all radicands (throws parse_error if the
// radicands fit no rational/quad/biquad shape).
AlgNum parse_algnum(const std::string& text);

} // namespace kst

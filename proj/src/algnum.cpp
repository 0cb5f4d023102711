#include "kst/algnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace kst {

namespace {

// Squarefree check / decomposition by trial division. Radicands in this
// library are tiny (single digits up to a few hundred), but the sqrt
// normalizer may see larger products, so the bound is generous. If n has no
// prime factor <= B then any square factor exceeds B^2, hence n < B^2 is
// provably squarefree.
constexpr unsigned long kTrialBound = 1000000UL;

void split_square(const Integer& n, Integer& square_root, Integer& squarefree) {
    if (n == 0) {
        square_root = 0;
        squarefree = 1;
        return;
    }
    Integer rem = n;
    square_root = 1;
    Integer root, rr;
    mpz_sqrtrem(root.get_mpz_t(), rr.get_mpz_t(), rem.get_mpz_t());
    if (rr == 0) { // perfect square
        square_root = root;
        squarefree = 1;
        return;
    }
    Integer sf = 1;
    bool bound_hit = true;
    for (unsigned long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
        if (Integer(p) * p > rem) {
            bound_hit = false;
            break;
        }
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            rem /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2) sf *= p;
    }
    // Loop exits either with p^2 > rem (rem is 1 or prime) or at the trial
    // bound (rem has no factor <= bound: squarefree iff rem < bound^2).
    if (rem > 1) {
        mpz_sqrtrem(root.get_mpz_t(), rr.get_mpz_t(), rem.get_mpz_t());
        if (rr == 0) {
            square_root *= root;
        } else if (bound_hit && rem >= Integer(kTrialBound) * Integer(kTrialBound)) {
            throw std::domain_error("sqrt radicand too large to certify squarefree");
        } else {
            sf *= rem;
        }
    }
    squarefree = sf;
}

// Rational interval [lo,hi] enclosing sqrt(d), refined by bisection. The
// comparison mid^2 vs d is exact, so every enclosure is certified.
struct RootEnclosure {
    long d;
    Rational lo, hi;

    explicit RootEnclosure(long rad) : d(rad) {
        Integer root, rr;
        Integer n(static_cast<long>(rad));
        mpz_sqrtrem(root.get_mpz_t(), rr.get_mpz_t(), n.get_mpz_t());
        lo = Rational(root);
        hi = Rational(root + 1);
    }

    void refine() {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= Rational(d))
            lo = mid;
        else
            hi = mid;
    }
};

struct Interval {
    Rational lo, hi;
};

Interval scale(const Rational& c, const Interval& iv) {
    if (sgn(c) >= 0) return {c * iv.lo, c * iv.hi};
    return {c * iv.hi, c * iv.lo};
}

Interval mul_pos(const Interval& a, const Interval& b) {
    // both intervals nonnegative
    return {a.lo * b.lo, a.hi * b.hi};
}

} // namespace

FieldDesc FieldDesc::quad(long d) {
    if (d < 2) throw std::domain_error("quad radicand must be >= 2");
    Integer sq, sf;
    split_square(Integer(d), sq, sf);
    if (sq != 1 || sf != d) throw std::domain_error("quad radicand must be squarefree");
    FieldDesc f;
    f.kind = FieldKind::Quad;
    f.d = d;
    return f;
}

FieldDesc FieldDesc::biquad(long p, long q) {
    if (p == q) throw std::domain_error("biquad radicands must be distinct");
    if (p > q) std::swap(p, q);
    FieldDesc::quad(p); // squarefree checks
    FieldDesc::quad(q);
    FieldDesc f;
    f.kind = FieldKind::Biquad;
    f.p = p;
    f.q = q;
    return f;
}

std::size_t FieldDesc::dim() const {
    switch (kind) {
    case FieldKind::Rational: return 1;
    case FieldKind::Quad: return 2;
    case FieldKind::Biquad: return 4;
    }
    return 1;
}

std::string FieldDesc::str() const {
    switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Quad: return "Q(s" + std::to_string(d) + ")";
    case FieldKind::Biquad:
        return "Q(s" + std::to_string(p) + ",s" + std::to_string(q) + ")";
    }
    return "Q";
}

bool field_embeds(const FieldDesc& sub, const FieldDesc& super) {
    if (sub == super) return true;
    if (sub.kind == FieldKind::Rational) return true;
    if (sub.kind == FieldKind::Quad && super.kind == FieldKind::Biquad)
        return sub.d == super.p || sub.d == super.q;
    return false;
}

FieldDesc field_unify(const FieldDesc& a, const FieldDesc& b) {
    if (field_embeds(a, b)) return b;
    if (field_embeds(b, a)) return a;
    throw field_error("incompatible fields: " + a.str() + " vs " + b.str());
}

FieldDesc field_join(const FieldDesc& a, const FieldDesc& b) {
    if (field_embeds(a, b)) return b;
    if (field_embeds(b, a)) return a;
    if (a.kind == FieldKind::Quad && b.kind == FieldKind::Quad)
        return FieldDesc::biquad(a.d, b.d);
    throw field_error("no common field for " + a.str() + " and " + b.str());
}

AlgNum::AlgNum(FieldDesc f, std::vector<Rational> coords) : field_(f), c_(std::move(coords)) {
    if (c_.size() != field_.dim())
        throw std::domain_error("AlgNum: coordinate count does not match field");
    for (auto& r : c_) r.canonicalize();
    normalize();
}

AlgNum AlgNum::quad(long d, const Rational& a, const Rational& b) {
    return AlgNum(FieldDesc::quad(d), {a, b});
}

AlgNum AlgNum::biquad(long p, long q, std::vector<Rational> c) {
    FieldDesc f = FieldDesc::biquad(p, q);
    if (c.size() != 4) throw std::domain_error("biquad needs 4 coordinates");
    if (p > q) std::swap(c[1], c[2]); // caller order followed declared (p,q)
    return AlgNum(f, std::move(c));
}

void AlgNum::normalize() {
    // Keep the declared field even when higher coordinates vanish; values are
    // compared by content, so (0,0) in quad(6) equals rational 0. Dropping the
    // extension implicitly would make field tracking unpredictable.
}

bool AlgNum::is_zero() const {
    for (const auto& r : c_)
        if (sgn(r) != 0) return false;
    return true;
}

bool AlgNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational AlgNum::rat() const {
    if (!is_rational()) throw std::domain_error("AlgNum is not rational: " + str());
    return c_[0];
}

AlgNum AlgNum::promoted(const FieldDesc& target) const {
    if (field_ == target) return *this;
    if (!field_embeds(field_, target))
        throw field_error("cannot embed " + field_.str() + " into " + target.str());
    std::vector<Rational> c(target.dim(), Rational(0));
    switch (field_.kind) {
    case FieldKind::Rational:
        c[0] = c_[0];
        break;
    case FieldKind::Quad:
        c[0] = c_[0];
        if (target.kind == FieldKind::Quad) {
            c[1] = c_[1];
        } else { // biquad; sqrt(d) is slot 1 (d == p) or slot 2 (d == q)
            c[field_.d == target.p ? 1 : 2] = c_[1];
        }
        break;
    case FieldKind::Biquad:
        c = c_;
        break;
    }
    return AlgNum(target, std::move(c));
}

AlgNum AlgNum::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& r : c) r = -r;
    return AlgNum(field_, std::move(c));
}

AlgNum AlgNum::operator+(const AlgNum& o) const {
    FieldDesc f = field_unify(field_, o.field_);
    AlgNum a = promoted(f), b = o.promoted(f);
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return AlgNum(f, std::move(c));
}

AlgNum AlgNum::operator-(const AlgNum& o) const { return *this + (-o); }

AlgNum AlgNum::operator*(const AlgNum& o) const {
    FieldDesc f = field_unify(field_, o.field_);
    AlgNum a = promoted(f), b = o.promoted(f);
    std::vector<Rational> c(f.dim(), Rational(0));
    switch (f.kind) {
    case FieldKind::Rational:
        c[0] = a.c_[0] * b.c_[0];
        break;
    case FieldKind::Quad: {
        const Rational d(f.d);
        c[0] = a.c_[0] * b.c_[0] + d * a.c_[1] * b.c_[1];
        c[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
        break;
    }
    case FieldKind::Biquad: {
        // basis e0=1, e1=sqrt p, e2=sqrt q, e3=sqrt(pq)
        // e1*e2 = e3, e1*e3 = p*e2, e2*e3 = q*e1, e3*e3 = pq
        const Rational p(f.p), q(f.q), pq = Rational(f.p) * Rational(f.q);
        const auto& x = a.c_;
        const auto& y = b.c_;
        c[0] = x[0] * y[0] + p * x[1] * y[1] + q * x[2] * y[2] + pq * x[3] * y[3];
        c[1] = x[0] * y[1] + x[1] * y[0] + q * (x[2] * y[3] + x[3] * y[2]);
        c[2] = x[0] * y[2] + x[2] * y[0] + p * (x[1] * y[3] + x[3] * y[1]);
        c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
        break;
    }
    }
    return AlgNum(f, std::move(c));
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    switch (field_.kind) {
    case FieldKind::Rational:
        return AlgNum(Rational(1) / c_[0]);
    case FieldKind::Quad: {
        // (a + b sd)^-1 = (a - b sd) / (a^2 - b^2 d)
        Rational n = c_[0] * c_[0] - c_[1] * c_[1] * Rational(field_.d);
        if (sgn(n) == 0) throw std::domain_error("inverse: zero norm (radicand not squarefree?)");
        return AlgNum(field_, {c_[0] / n, -c_[1] / n});
    }
    case FieldKind::Biquad: {
        // x * s1(x) lies in Q(sqrt q); multiply by its conjugate to reach Q.
        AlgNum s1(field_, {c_[0], -c_[1], c_[2], -c_[3]}); // sqrt p -> -sqrt p
        AlgNum y = (*this) * s1;
        AlgNum s2y(field_, {y.c_[0], y.c_[1], -y.c_[2], -y.c_[3]}); // sqrt q -> -sqrt q
        AlgNum n = y * s2y;
        if (!n.is_rational() || sgn(n.c_[0]) == 0)
            throw std::domain_error("inverse: norm failure in biquad");
        AlgNum num = s1 * s2y;
        Rational nn = n.c_[0];
        std::vector<Rational> c(4);
        for (int i = 0; i < 4; ++i) c[i] = num.c_[i] / nn;
        return AlgNum(field_, std::move(c));
    }
    }
    throw std::logic_error("unreachable");
}

AlgNum AlgNum::operator/(const AlgNum& o) const { return *this * o.inverse(); }

bool AlgNum::operator==(const AlgNum& o) const {
    // Equality across embeddable fields compares values, not representations.
    FieldDesc f = field_unify(field_, o.field_);
    AlgNum a = promoted(f), b = o.promoted(f);
    for (std::size_t i = 0; i < f.dim(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

int AlgNum::sign() const {
    if (is_zero()) return 0;
    switch (field_.kind) {
    case FieldKind::Rational:
        return sgn(c_[0]);
    case FieldKind::Quad: {
        if (sgn(c_[1]) == 0) return sgn(c_[0]);
        RootEnclosure root(field_.d);
        for (int iter = 0; iter < 20000; ++iter) {
            Interval iv = scale(c_[1], {root.lo, root.hi});
            Rational lo = c_[0] + iv.lo, hi = c_[0] + iv.hi;
            if (sgn(lo) > 0) return 1;
            if (sgn(hi) < 0) return -1;
            root.refine();
        }
        throw std::logic_error("sign: interval refinement did not separate (quad)");
    }
    case FieldKind::Biquad: {
        RootEnclosure rp(field_.p), rq(field_.q);
        for (int iter = 0; iter < 20000; ++iter) {
            Interval ip{rp.lo, rp.hi}, iq{rq.lo, rq.hi};
            Interval ipq = mul_pos(ip, iq);
            Interval a = scale(c_[1], ip), b = scale(c_[2], iq), c3 = scale(c_[3], ipq);
            Rational lo = c_[0] + a.lo + b.lo + c3.lo;
            Rational hi = c_[0] + a.hi + b.hi + c3.hi;
            if (sgn(lo) > 0) return 1;
            if (sgn(hi) < 0) return -1;
            rp.refine();
            rq.refine();
        }
        throw std::logic_error("sign: interval refinement did not separate (biquad)");
    }
    }
    return 0;
}

double AlgNum::to_double() const {
    switch (field_.kind) {
    case FieldKind::Rational:
        return c_[0].get_d();
    case FieldKind::Quad:
        return c_[0].get_d() + c_[1].get_d() * std::sqrt(double(field_.d));
    case FieldKind::Biquad: {
        double sp = std::sqrt(double(field_.p)), sq = std::sqrt(double(field_.q));
        return c_[0].get_d() + c_[1].get_d() * sp + c_[2].get_d() * sq + c_[3].get_d() * sp * sq;
    }
    }
    return 0.0;
}

std::string AlgNum::str() const {
    struct Term {
        Rational coeff;
        long rad; // 0 for the rational part
    };
    std::vector<Term> terms;
    terms.push_back({c_[0], 0});
    if (field_.kind == FieldKind::Quad) {
        terms.push_back({c_[1], field_.d});
    } else if (field_.kind == FieldKind::Biquad) {
        terms.push_back({c_[1], field_.p});
        terms.push_back({c_[2], field_.q});
        terms.push_back({c_[3], field_.p * field_.q});
    }
    std::string out;
    for (const auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        std::string mag = rational_to_string(abs(t.coeff));
        std::string piece = t.rad == 0 ? mag : (mag == "1" ? "" : mag) + "s" + std::to_string(t.rad);
        if (out.empty())
            out = (sgn(t.coeff) < 0 ? "-" : "") + piece;
        else
            out += (sgn(t.coeff) < 0 ? "-" : "+") + piece;
    }
    return out.empty() ? "0" : out;
}

AlgNum min(const AlgNum& a, const AlgNum& b) { return a <= b ? a : b; }
AlgNum max(const AlgNum& a, const AlgNum& b) { return a >= b ? a : b; }
AlgNum abs(const AlgNum& a) { return a.sign() < 0 ? -a : a; }

AlgNum sqrt_rational(const Rational& r) {
    int s = sgn(r);
    if (s < 0) throw std::domain_error("sqrt of negative rational");
    if (s == 0) return AlgNum(0L);
    Integer n = r.get_num(), m = r.get_den();
    Integer sq, sf;
    split_square(n * m, sq, sf);
    Rational coeff = Rational(sq) / Rational(m);
    if (sf == 1) return AlgNum(coeff);
    if (!sf.fits_slong_p()) throw std::domain_error("sqrt radicand exceeds supported range");
    return AlgNum::quad(sf.get_si(), Rational(0), coeff);
}

namespace {

// literal = signed term { ('+'|'-') term }
// term    = rational | rational 's' digits | 's' digits
struct LitParser {
    const std::string& s;
    std::size_t i = 0;

    explicit LitParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    Rational parse_rational_part(bool required) {
        skip_ws();
        std::size_t start = i;
        std::string num;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
        if (num.empty()) {
            if (required) throw parse_error("expected number at '" + s.substr(start) + "'");
            return Rational(1);
        }
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            skip_ws();
            std::string den;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
            if (den.empty()) throw parse_error("expected denominator in literal: " + s);
            Rational r(num + "/" + den);
            if (r.get_den() == 0) throw parse_error("zero denominator in literal: " + s);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }
};

} // namespace

AlgNum parse_algnum(const std::string& text) {
    LitParser p(text);
    // terms as (coeff, radicand); radicand 0 = rational term
    std::vector<std::pair<Rational, long>> terms;
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        p.skip_ws();
        if (p.s[p.i] == '+' || p.s[p.i] == '-') {
            sign = p.s[p.i] == '-' ? -1 : 1;
            ++p.i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in literal: " + text);
        }
        p.skip_ws();
        if (p.eof()) throw parse_error("dangling sign in literal: " + text);
        bool has_radical = false;
        Rational coeff(1);
        if (p.s[p.i] == 's' || p.s[p.i] == 'S') {
            has_radical = true;
        } else {
            coeff = p.parse_rational_part(true);
            p.skip_ws();
            if (!p.eof() && (p.s[p.i] == 's' || p.s[p.i] == 'S')) has_radical = true;
        }
        long rad = 0;
        if (has_radical) {
            ++p.i; // consume 's'
            std::string digits;
            while (p.i < p.s.size() && isdigit(static_cast<unsigned char>(p.s[p.i]))) digits += p.s[p.i++];
            if (digits.empty()) throw parse_error("expected radicand after 's': " + text);
            rad = std::stol(digits);
            if (rad < 2) throw parse_error("radicand must be >= 2: " + text);
        }
        if (sign < 0) coeff = -coeff;
        terms.push_back({coeff, rad});
        first = false;
    }
    if (terms.empty()) throw parse_error("empty literal");

    // Normalize radicands to squarefree form (s8 = 2 s2) and collect them.
    std::vector<long> rads;
    AlgNum total(0L);
    std::vector<std::pair<AlgNum, long>> pieces;
    for (auto& [coeff, rad] : terms) {
        if (rad == 0) {
            pieces.push_back({AlgNum(coeff), 0});
            continue;
        }
        AlgNum root = sqrt_rational(Rational(rad));
        if (root.is_rational()) {
            pieces.push_back({AlgNum(coeff * root.rat()), 0});
        } else {
            long d = root.field().d;
            Rational scaled = coeff * root.coords()[1];
            pieces.push_back({AlgNum::quad(d, Rational(0), scaled), d});
            if (std::find(rads.begin(), rads.end(), d) == rads.end()) rads.push_back(d);
        }
    }
    FieldDesc target = FieldDesc::rationals();
    if (rads.size() == 1) {
        target = FieldDesc::quad(rads[0]);
    } else if (rads.size() >= 2) {
        std::sort(rads.begin(), rads.end());
        // Accept {p,q}, {p,q,pq-like} shapes: every radicand must sit in the
        // basis {sqrt p, sqrt q, sqrt pq} of biquad(p,q).
        long pp = rads[0], qq = rads[1];
        target = FieldDesc::biquad(pp, qq);
        for (long r : rads) {
            bool ok = r == pp || r == qq;
            if (!ok) {
                Integer sq, sf;
                split_square(Integer(pp) * Integer(qq), sq, sf);
                ok = sf.fits_slong_p() && r == sf.get_si();
            }
            if (!ok) throw parse_error("radicands do not fit a biquadratic field: " + text);
        }
    }
    for (auto& [val, rad] : pieces) {
        AlgNum v = val;
        if (rad != 0 && target.kind == FieldKind::Biquad && rad != target.p && rad != target.q) {
            // term lives in the sqrt(pq) slot; rescale: sqrt(r) = sqrt(pq)/g
            // where pq = g^2 r with g rational
            Integer sq, sf;
            split_square(Integer(target.p) * Integer(target.q), sq, sf);
            Rational g(sq);
            Rational c = val.coords()[1] / g;
            v = AlgNum(target, {Rational(0), Rational(0), Rational(0), c});
        }
        total = total + v.promoted(target);
    }
    return total;
}

} // namespace kst

#include "kst/oracle.hpp"

#include "kst/linalg.hpp"

#include <algorithm>
#include <map>

namespace kst {

namespace {

constexpr std::size_t kDimCap = 2000;

std::vector<Rational> normalize_weights(std::vector<Rational> w, std::size_t affine_dim,
                                        const char* where) {
    for (const auto& x : w)
        if (sgn(x) < 0) throw std::domain_error(std::string(where) + ": negative weight");
    if (w.size() == affine_dim) {
        bool all_zero = true;
        for (const auto& x : w)
            if (sgn(x) != 0) all_zero = false;
        if (all_zero) throw std::domain_error(std::string(where) + ": weights all zero");
        return w;
    }
    if (w.size() == affine_dim + 1) {
        // projective weights; dehomogenize at a zero-weight coordinate
        auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
        if (it == w.end())
            throw std::domain_error(std::string(where) +
                                    ": projective weights need a zero entry");
        w.erase(it);
        bool all_zero = true;
        for (const auto& x : w)
            if (sgn(x) != 0) all_zero = false;
        if (all_zero) throw std::domain_error(std::string(where) + ": weights all zero");
        return w;
    }
    throw std::domain_error(std::string(where) + ": weight vector has wrong length");
}

// Exponent vectors of the monomial basis of degree-D forms in the affine
// chart, with their valuation values.
struct MonomialSpace {
    std::vector<std::vector<long>> exponents;
    std::vector<Rational> values;
};

MonomialSpace enumerate(const MonomialModel& model, long m) {
    if (m < 1) throw std::domain_error("s_m requires m >= 1");
    const long d = model.degree * m;
    MonomialSpace sp;
    if (model.ambient == MonomialModel::proj_curve) {
        for (long i = 0; i <= d; ++i) {
            sp.exponents.push_back({i});
            sp.values.push_back(model.weights[0] * i);
        }
    } else {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; i + j <= d; ++j) {
                sp.exponents.push_back({i, j});
                sp.values.push_back(model.weights[0] * i + model.weights[1] * j);
            }
    }
    if (sp.exponents.size() > kDimCap)
        throw std::domain_error("section space dimension exceeds the desk-scale cap");
    return sp;
}

} // namespace

MonomialModel MonomialModel::p1(long k, std::vector<Rational> weights) {
    if (k < 1) throw std::domain_error("degree must be >= 1");
    return {proj_curve, k, normalize_weights(std::move(weights), 1, "p1 model")};
}

MonomialModel MonomialModel::p2(long k, std::vector<Rational> weights) {
    if (k < 1) throw std::domain_error("degree must be >= 1");
    return {proj_plane, k, normalize_weights(std::move(weights), 2, "p2 model")};
}

std::size_t MonomialModel::space_dim(long m) const {
    const long d = degree * m;
    return ambient == proj_curve ? static_cast<std::size_t>(d + 1)
                                 : static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

Rational MonomialModel::closed_form_limit() const {
    // centroid of the scaled standard simplex: E[alpha_i] = k/(dim+1)
    Rational total(0);
    for (const auto& w : weights) total += w;
    return total * Rational(degree) / Rational(static_cast<long>(affine_dim()) + 1);
}

void FiltrationSpec::validate() const {
    if (chain.empty()) throw std::domain_error("filtration chain is empty");
    for (const auto& level : chain)
        for (const auto& v : level)
            if (v.size() != dim) throw std::domain_error("filtration vector has wrong length");
    lin::Matrix<Rational> top = chain.front();
    if (lin::rank(top) != dim)
        throw std::domain_error("filtration chain must start at the full space");
    if (!chain.back().empty())
        throw std::domain_error("filtration chain must end at 0");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        // chain[i+1] must sit inside chain[i]
        lin::Matrix<Rational> combined = chain[i];
        for (const auto& v : chain[i + 1]) combined.push_back(v);
        if (lin::rank(combined) != lin::rank(chain[i]))
            throw std::domain_error("filtration chain is not descending");
    }
}

namespace {

using Mat = lin::Matrix<Rational>;

std::size_t rank_of(const Mat& m) { return m.empty() ? 0 : lin::rank(m); }

// Span membership: v in rowspan(basis)?
bool in_span(const Mat& basis, const std::vector<Rational>& v) {
    Mat m = basis;
    std::size_t r0 = rank_of(m);
    m.push_back(v);
    return lin::rank(m) == r0;
}

// Intersection of two row spans via kernel combinations.
Mat intersect_spans(const Mat& u, const Mat& w, std::size_t dim) {
    if (u.empty() || w.empty()) return {};
    // alpha . u - beta . w = 0  <=>  (alpha,beta) in ker of the stacked
    // transpose; each kernel vector yields alpha . u in the intersection.
    const std::size_t ru = u.size(), rw = w.size();
    Mat sys(dim, std::vector<Rational>(ru + rw, Rational(0)));
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t i = 0; i < ru; ++i) sys[c][i] = u[i][c];
        for (std::size_t j = 0; j < rw; ++j) sys[c][ru + j] = -w[j][c];
    }
    Mat reduced = sys;
    auto pivots = lin::rref(reduced);
    // free columns parameterize the kernel
    std::vector<bool> is_pivot(ru + rw, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat out;
    for (std::size_t freec = 0; freec < ru + rw; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rational> coeff(ru + rw, Rational(0));
        coeff[freec] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            coeff[pivots[pr]] = -reduced[pr][freec];
        std::vector<Rational> v(dim, Rational(0));
        for (std::size_t i = 0; i < ru; ++i)
            for (std::size_t c = 0; c < dim; ++c) v[c] += coeff[i] * u[i][c];
        bool nonzero = false;
        for (const auto& x : v)
            if (sgn(x) != 0) nonzero = true;
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<std::vector<Rational>> compatible_basis(const FiltrationSpec& f,
                                                    const FiltrationSpec& g) {
    if (f.dim != g.dim) throw std::domain_error("filtrations live on different spaces");
    f.validate();
    g.validate();
    const std::size_t dim = f.dim;

    std::vector<std::vector<Rational>> basis;
    // For each bi-graded piece (F^j cap G^i) / (F^{j+1} cap G^i + F^j cap
    // G^{i+1}), greedily extend a basis of the denominator to the numerator;
    // the union over all (j,i) is simultaneously compatible.
    for (std::size_t j = 0; j + 1 <= f.chain.size(); ++j) {
        const Mat& fj = f.chain[j];
        const Mat* fj1 = j + 1 < f.chain.size() ? &f.chain[j + 1] : nullptr;
        for (std::size_t i = 0; i + 1 <= g.chain.size(); ++i) {
            const Mat& gi = g.chain[i];
            const Mat* gi1 = i + 1 < g.chain.size() ? &g.chain[i + 1] : nullptr;
            Mat top = intersect_spans(fj, gi, dim);
            if (top.empty()) continue;
            Mat bottom;
            if (fj1) {
                for (auto& v : intersect_spans(*fj1, gi, dim)) bottom.push_back(std::move(v));
            }
            if (gi1) {
                for (auto& v : intersect_spans(fj, *gi1, dim)) bottom.push_back(std::move(v));
            }
            Mat span = bottom;
            std::size_t have = rank_of(span);
            for (const auto& v : top) {
                if (in_span(span, v)) continue;
                span.push_back(v);
                basis.push_back(v);
                ++have;
            }
        }
    }
    if (basis.size() != dim) throw std::domain_error("compatible_basis: inconsistent chains");

    // verification: every chain subspace is spanned by the vectors it contains
    for (const FiltrationSpec* spec : {&f, &g}) {
        for (const auto& level : spec->chain) {
            Mat contained;
            for (const auto& v : basis)
                if (in_span(level, v)) contained.push_back(v);
            if (rank_of(contained) != rank_of(level))
                throw std::domain_error("compatible_basis: verification failed");
        }
    }
    return basis;
}

Rational s_m(const MonomialModel& model, long m) {
    MonomialSpace sp = enumerate(model, m);
    Rational total(0);
    for (const auto& v : sp.values) total += v;
    Rational denom = Rational(m) * Rational(static_cast<long>(sp.values.size()));
    Rational s = total / denom;
    s.canonicalize();
    return s;
}

BasisDivisorSplit basis_divisor_split(const MonomialModel& model, long m) {
    // require a coordinate-divisor valuation: one affine weight equal to 1
    std::size_t nonzero = 0;
    bool unit = false;
    for (const auto& w : model.weights) {
        if (sgn(w) != 0) {
            ++nonzero;
            unit = (w == 1);
        }
    }
    if (nonzero != 1 || !unit)
        throw std::domain_error("basis_divisor_split needs a coordinate-divisor valuation");

    MonomialSpace sp = enumerate(model, m);
    const std::size_t n = sp.exponents.size();

    // integer level of each monomial
    std::vector<long> levels(n);
    long max_level = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = sp.values[i];
        levels[i] = static_cast<long>(v.get_num().get_si());
        max_level = std::max(max_level, levels[i]);
    }

    // the filtration F^j = span of monomials with level >= j, as explicit
    // spanning sets; the trivial filtration supplies the second chain
    FiltrationSpec f;
    f.dim = n;
    for (long j = 0; j <= max_level + 1; ++j) {
        std::vector<std::vector<Rational>> span;
        for (std::size_t i = 0; i < n; ++i) {
            if (levels[i] < j) continue;
            std::vector<Rational> e(n, Rational(0));
            e[i] = 1;
            span.push_back(std::move(e));
        }
        f.chain.push_back(std::move(span));
    }
    FiltrationSpec trivial;
    trivial.dim = n;
    trivial.chain.push_back(f.chain.front());
    trivial.chain.push_back({});

    auto basis = compatible_basis(f, trivial);

    // ord of a vector = min level over its support; tally per level
    BasisDivisorSplit out;
    out.residual_dims.assign(static_cast<std::size_t>(max_level) + 1, 0);
    Rational total(0);
    for (const auto& v : basis) {
        long ord = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(v[i]) == 0) continue;
            if (ord < 0 || levels[i] < ord) ord = levels[i];
        }
        if (ord < 0) throw std::logic_error("zero vector in basis");
        total += Rational(ord);
        out.residual_dims[static_cast<std::size_t>(ord)] += 1;
    }
    out.coeff_e = total / (Rational(m) * Rational(static_cast<long>(n)));
    out.coeff_e.canonicalize();
    return out;
}

ConvergenceReport s_convergence(const MonomialModel& model, const std::vector<long>& ms,
                                const Rational& tolerance) {
    if (ms.empty()) throw std::domain_error("s_convergence needs a nonempty m list");
    for (std::size_t i = 0; i + 1 < ms.size(); ++i)
        if (ms[i] >= ms[i + 1]) throw std::domain_error("m list must be ascending");
    ConvergenceReport rep;
    rep.closed_form = model.closed_form_limit();
    rep.tolerance = tolerance;
    for (long m : ms) {
        Rational s = s_m(model, m);
        Rational gap = s - rep.closed_form;
        if (sgn(gap) < 0) gap = -gap;
        rep.rows.push_back({m, s, gap});
    }
    rep.pass = rep.rows.back().gap <= tolerance;
    return rep;
}

} // namespace kst

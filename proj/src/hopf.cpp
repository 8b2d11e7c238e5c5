#include "cofrob/hopf.hpp"

#include "cofrob/error.hpp"
#include "cofrob/nakayama.hpp"

namespace cofrob {

namespace {

void check_shapes(const HopfAlgebra& h)
{
    const std::size_t n = h.coalgebra.dim();
    if (h.algebra.dim() != n || h.antipode.rows() != n || h.antipode.cols() != n)
        throw InvalidInput("hopf algebra: algebra, coalgebra and antipode dimensions differ");
}

// Product in H (x) H of flattened tensors, index j*n + k.
Vector tensor_product(const Algebra& a, const Vector& x, const Vector& y)
{
    const std::size_t n = a.dim();
    Vector out(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n * n; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar f = x[i] * y[j];
            std::size_t a1 = i / n, a2 = i % n, b1 = j / n, b2 = j % n;
            for (std::size_t p = 0; p < n; ++p) {
                const Scalar& u = a.mult(a1, b1, p);
                if (u.is_zero())
                    continue;
                for (std::size_t q = 0; q < n; ++q)
                    if (!a.mult(a2, b2, q).is_zero())
                        out[p * n + q].add_product(f * u, a.mult(a2, b2, q));
            }
        }
    }
    return out;
}

Vector coordinates(const Subspace& s, const Vector& v)
{
    Vector out(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        out[r] = v[s.pivots()[r]];
    return out;
}

Vector restrict_functional(const Subspace& k, const Vector& u)
{
    Vector v;
    for (const auto& b : k.vectors())
        v.push_back(dot(u, b));
    return v;
}

Subspace stacked_kernel(const std::vector<Matrix>& blocks, std::size_t n)
{
    std::vector<Vector> rows;
    for (const auto& b : blocks)
        for (std::size_t r = 0; r < b.rows(); ++r)
            rows.push_back(b.row(r));
    return kernel(Matrix::from_rows(n, rows));
}

}  // namespace

AxiomReport validate(const HopfAlgebra& h)
{
    check_shapes(h);
    AxiomReport report;
    for (auto& v : validate(h.coalgebra).violations)
        report.violations.push_back(std::move(v));
    for (auto& v : validate(h.algebra).violations)
        report.violations.push_back(std::move(v));

    const Coalgebra& c = h.coalgebra;
    const Algebra& a = h.algebra;
    const std::size_t n = c.dim();
    const Vector& one = a.unit();
    const Vector& eps = c.counit();

    Vector d1 = c.coproduct(one), one_one(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            one_one[j * n + k] = one[j] * one[k];
    if (d1 != one_one)
        report.violations.push_back({"bialgebra-delta-unit", 0, "Delta(1) != 1 (x) 1"});
    if (dot(eps, one) != Scalar(1))
        report.violations.push_back({"bialgebra-counit-unit", 0, "eps(1) != 1"});

    std::vector<Vector> deltas;
    for (std::size_t i = 0; i < n; ++i)
        deltas.push_back(c.coproduct_matrix().column(i));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector xy = a.multiply(unit_vector(n, x), unit_vector(n, y));
            if (c.coproduct(xy) != tensor_product(a, deltas[x], deltas[y]))
                report.violations.push_back(
                    {"bialgebra-delta-mult", x * n + y, "Delta(e_a e_b) != Delta(e_a) Delta(e_b)"});
            if (dot(eps, xy) != eps[x] * eps[y])
                report.violations.push_back({"bialgebra-counit-mult", x * n + y, "eps(e_a e_b) != eps(e_a) eps(e_b)"});
        }

    for (std::size_t i = 0; i < n; ++i) {
        Vector left(n), right(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& v = c.delta(i, j, k);
                if (v.is_zero())
                    continue;
                Vector sj = h.antipode.column(j), sk = h.antipode.column(k);
                left = left + v * a.multiply(sj, unit_vector(n, k));
                right = right + v * a.multiply(unit_vector(n, j), sk);
            }
        Vector target = eps[i] * one;
        if (left != target)
            report.violations.push_back({"antipode-left", i, "S(h_1) h_2 != eps(h) 1"});
        if (right != target)
            report.violations.push_back({"antipode-right", i, "h_1 S(h_2) != eps(h) 1"});
    }
    return report;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h, std::string name)
{
    check_shapes(h);
    Coalgebra dc = dual_coalgebra(h.algebra, name);
    DualAlgebra da = dual_algebra(h.coalgebra);
    Algebra alg(name, dc.basis_names(), da.mult_tensor(), da.unit());
    return {dc, alg, h.antipode.transpose()};
}

IntegralData integrals(const HopfAlgebra& h)
{
    check_shapes(h);
    const std::size_t n = h.dim();
    const Vector& one = h.algebra.unit();
    const Vector& eps = h.coalgebra.counit();
    DualAlgebra ds = dual_algebra(h.coalgebra);
    std::vector<Matrix> lo, ro, li, ri;
    for (std::size_t k = 0; k < n; ++k) {
        Vector dk = unit_vector(n, k), ek = unit_vector(n, k);
        Matrix shift = one[k] * Matrix::identity(n);
        lo.push_back(ds.left_mult_matrix(dk) - shift);
        ro.push_back(ds.right_mult_matrix(dk) - shift);
        Matrix eshift = eps[k] * Matrix::identity(n);
        li.push_back(h.algebra.left_mult_matrix(ek) - eshift);
        ri.push_back(h.algebra.right_mult_matrix(ek) - eshift);
    }
    IntegralData d;
    d.left_on = stacked_kernel(lo, n);
    d.right_on = stacked_kernel(ro, n);
    d.left_in = stacked_kernel(li, n);
    d.right_in = stacked_kernel(ri, n);
    d.unimodular_on = d.left_on.dim() > 0 && d.left_on == d.right_on;
    d.unimodular_in = d.left_in.dim() > 0 && d.left_in == d.right_in;
    return d;
}

Matrix integral_gram(const HopfAlgebra& h, const Vector& t)
{
    const std::size_t n = h.dim();
    Matrix g(n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Vector sb = h.antipode.column(b);
        for (std::size_t a = 0; a < n; ++a)
            g(a, b) = dot(t, h.algebra.multiply(unit_vector(n, a), sb));
    }
    return g;
}

FrobeniusCertificate form_from_integral(const HopfAlgebra& h, const Vector& t)
{
    if (is_zero(t))
        throw InvalidInput("form_from_integral: integral is zero");
    IntegralData d = integrals(h);
    if (!d.left_on.contains(t) || !d.right_on.contains(t))
        throw InvalidInput("form_from_integral: t is not a two-sided integral on H");
    if (t * h.antipode != t)
        throw TheoremViolation("form_from_integral: t o S != t for a two-sided integral");
    BilinearForm form{h.coalgebra, integral_gram(h, t)};
    if (!form.is_nondegenerate())
        throw TheoremViolation("form_from_integral: D is degenerate");
    if (!is_balanced(form))
        throw TheoremViolation("form_from_integral: D is not H*-balanced");
    FrobeniusCertificate cert = make_certificate(form);
    if (nakayama(cert).sigma != h.s2())
        throw TheoremViolation("form_from_integral: Nakayama automorphism of D is not S^2");
    return cert;
}

HopfSymmetry hopf_symmetric_coalgebra(const HopfAlgebra& h, const SearchOptions& opts)
{
    HopfSymmetry out;
    IntegralData d = integrals(h);
    out.unimodular_on = d.unimodular_on;
    out.inner = find_inner_dual(h.coalgebra, h.s2(), opts);
    if (!out.unimodular_on)
        out.verdict = SearchStatus::absent;
    else
        out.verdict = out.inner.status;

    if (out.verdict == SearchStatus::found) {
        Vector t = d.left_on.vectors().front();
        FrobeniusCertificate cert = form_from_integral(h, t);
        auto u_inv = dual_algebra(h.coalgebra).inverse(*out.inner.witness);
        if (!u_inv)
            throw TheoremViolation("hopf_symmetric_coalgebra: u is not invertible");
        // B(c_a, c_b) = D(u^-1 . c_a, c_b)
        Matrix b = h.coalgebra.left_hit_matrix(*u_inv).transpose() * cert.form.gram;
        BilinearForm form{h.coalgebra, b};
        out.form_symmetric = form.is_symmetric();
        out.form_nondegenerate = form.is_nondegenerate();
        out.form_balanced = is_balanced(form);
        out.form = std::move(b);
    }
    out.direct = is_symmetric(h.coalgebra, opts).status;
    return out;
}

Decision<Vector> s2_inner_in_H(const HopfAlgebra& h, const SearchOptions& opts)
{
    const std::size_t n = h.dim();
    const Algebra& a = h.algebra;
    Matrix s2 = h.s2();
    std::vector<Matrix> blocks;
    for (std::size_t x = 0; x < n; ++x)
        blocks.push_back(a.left_mult_matrix(unit_vector(n, x)) - a.right_mult_matrix(s2.column(x)));
    auto sols = stacked_kernel(blocks, n).vectors();

    Decision<Vector> d;
    if (sols.empty()) {
        d.status = SearchStatus::absent;
        return d;
    }
    std::vector<Matrix> pencil;
    for (const auto& g : sols)
        pencil.push_back(a.left_mult_matrix(g));
    PencilResult r = find_nonsingular(pencil, n, opts);
    d.status = r.status;
    d.phase = r.phase;
    if (r.status == SearchStatus::found) {
        Vector g(n);
        for (std::size_t i = 0; i < sols.size(); ++i)
            g = g + r.coefficients[i] * sols[i];
        auto gi = a.inverse(g);
        if (!gi)
            throw TheoremViolation("s2_inner_in_H: witness is not invertible");
        for (std::size_t x = 0; x < n; ++x)
            if (a.multiply(*gi, a.multiply(unit_vector(n, x), g)) != s2.column(x))
                throw TheoremViolation("s2_inner_in_H: g^-1 x g != S^2(x)");
        d.witness = std::move(g);
    }
    return d;
}

AlgebraSymmetry symmetric_as_algebra(const HopfAlgebra& h, const SearchOptions& opts)
{
    AlgebraSymmetry out;
    out.unimodular_in = integrals(h).unimodular_in;
    out.s2_inner = s2_inner_in_H(h, opts);
    if (!out.unimodular_in)
        out.criterion = SearchStatus::absent;
    else
        out.criterion = out.s2_inner.status;
    out.direct = is_symmetric(dual_coalgebra(h.algebra, h.name() + "-algebra*"), opts).status;
    return out;
}

Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y)
{
    const std::size_t n = c.dim();
    if (x.ambient_dim() != n || y.ambient_dim() != n)
        throw InvalidInput("wedge: subspace ambient dimension does not match coalgebra");
    Subspace target = x.tensor_right_full(n).sum(y.tensor_left_full(n));
    return target.preimage(c.coproduct_matrix());
}

AInfinity a_infinity(const Coalgebra& c, const Subspace& a)
{
    if (a.ambient_dim() != c.dim() || !is_subcoalgebra(c, a))
        throw InvalidInput("a_infinity: argument is not a subcoalgebra");
    AInfinity out{a, 0, {a.dim()}};
    for (std::size_t step = 1;; ++step) {
        Subspace next = wedge(c, out.space, a);
        out.trace.push_back(next.dim());
        if (next == out.space) {
            out.steps = step;
            break;
        }
        out.space = std::move(next);
    }
    if (!is_subcoalgebra(c, out.space))
        throw TheoremViolation("a_infinity: limit is not a subcoalgebra");
    if (!(wedge(c, out.space, a) == out.space))
        throw TheoremViolation("a_infinity: limit is not wedge-stable");
    return out;
}

Subspace unit_line(const HopfAlgebra& h)
{
    return Subspace::span(h.dim(), {h.algebra.unit()});
}

HopfSubspaceReport hopf_subalgebra_check(const HopfAlgebra& h, const Subspace& k)
{
    HopfSubspaceReport r;
    auto basis = k.vectors();
    r.unit = k.contains(h.algebra.unit());
    r.mult = true;
    for (const auto& x : basis)
        for (const auto& y : basis)
            r.mult = r.mult && k.contains(h.algebra.multiply(x, y));
    r.subcoalgebra = is_subcoalgebra(h.coalgebra, k);
    r.antipode = true;
    for (const auto& x : basis)
        r.antipode = r.antipode && k.contains(h.antipode * x);
    return r;
}

HInfinity h_infinity(const HopfAlgebra& h)
{
    HInfinity out{a_infinity(h.coalgebra, unit_line(h)), {}};
    out.closure = hopf_subalgebra_check(h, out.a.space);
    return out;
}

bool s2_preserves_subcoalgebra(const HopfAlgebra& h, const Subspace& a)
{
    if (a.ambient_dim() != h.dim() || !is_subcoalgebra(h.coalgebra, a))
        throw InvalidInput("s2_preserves_subcoalgebra: argument is not a subcoalgebra");
    return a.contains(a.image(h.s2()));
}

HopfAlgebra restrict_hopf(const HopfAlgebra& h, const Subspace& k, std::string name)
{
    if (!hopf_subalgebra_check(h, k).ok())
        throw InvalidInput("restrict_hopf: subspace is not a Hopf subalgebra");
    const std::size_t m = k.dim();
    auto basis = k.vectors();
    Coalgebra c = restrict_to_subcoalgebra(h.coalgebra, k, name);
    Tensor3 mult(m, m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector xy = coordinates(k, h.algebra.multiply(basis[a], basis[b]));
            for (std::size_t j = 0; j < m; ++j)
                mult(a, b, j) = xy[j];
        }
    Algebra alg(name, c.basis_names(), std::move(mult), coordinates(k, h.algebra.unit()));
    std::vector<Vector> cols;
    for (const auto& x : basis)
        cols.push_back(coordinates(k, h.antipode * x));
    return {c, alg, Matrix::from_columns(m, cols)};
}

RestrictionReport restrict_inner_unit(const HopfAlgebra& h, const Subspace& k, const Vector& u)
{
    HopfAlgebra kh = restrict_hopf(h, k, h.name() + "|K");
    RestrictionReport r;
    r.v = restrict_functional(k, u);
    auto u_inv = dual_algebra(h.coalgebra).inverse(u);
    if (!u_inv)
        throw InvalidInput("restrict_inner_unit: u is not a unit of H*");
    auto v_inv = dual_algebra(kh.coalgebra).inverse(r.v);
    r.v_invertible = v_inv.has_value();
    if (!v_inv)
        return r;
    r.inverse_restricts = *v_inv == restrict_functional(k, *u_inv);
    r.conjugates = inner_action(kh.coalgebra, r.v, *v_inv) == kh.s2();
    return r;
}

}  // namespace cofrob

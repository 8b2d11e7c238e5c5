#include "cofrob/coextension.hpp"

#include "cofrob/error.hpp"

namespace cofrob {

namespace {

void require_parent(const Coalgebra& c, const Bicomodule& m)
{
    if (!(m.parent == c))
        throw InvalidInput("bicomodule " + m.name + " is not over coalgebra " + c.name());
}

}  // namespace

AxiomReport validate(const Bicomodule& m)
{
    const Coalgebra& c = m.parent;
    const std::size_t n = c.dim(), d = m.dim();
    if (m.left.extent(0) != d || m.left.extent(1) != n || m.left.extent(2) != d ||
        m.right.extent(0) != d || m.right.extent(1) != d || m.right.extent(2) != n)
        throw InvalidInput("bicomodule: coaction tensors have the wrong shape");

    AxiomReport report;
    for (auto& v : validate(Comodule(m.name, c, m.basis, m.right)).violations) {
        v.axiom = "right-" + v.axiom;
        report.violations.push_back(std::move(v));
    }
    // A left C-comodule is a right comodule over the co-opposite coalgebra.
    Tensor3 flipped(d, d, n);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < d; ++b)
                flipped(a, b, k) = m.left(a, k, b);
    for (auto& v : validate(Comodule(m.name, opposite(c), m.basis, flipped)).violations) {
        v.axiom = "left-" + v.axiom;
        report.violations.push_back(std::move(v));
    }

    // (id x right) left  vs  (left x id) right, indexed [c_k][m_e][c_j].
    for (std::size_t a = 0; a < d; ++a) {
        std::vector<Scalar> lhs(n * d * n), rhs(n * d * n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& v = m.left(a, k, b);
                if (v.is_zero())
                    continue;
                for (std::size_t e = 0; e < d; ++e)
                    for (std::size_t j = 0; j < n; ++j)
                        lhs[(k * d + e) * n + j].add_product(v, m.right(b, e, j));
            }
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& v = m.right(a, b, j);
                if (v.is_zero())
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t e = 0; e < d; ++e)
                        rhs[(k * d + e) * n + j].add_product(v, m.left(b, k, e));
            }
        if (lhs != rhs)
            report.violations.push_back({"bicomodule-compatibility", a, "left and right coactions do not commute"});
    }
    return report;
}

Bicomodule rat_dual_bicomodule(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    Tensor3 left(n, n, n), right(n, n, n);
    // d_k d_a = sum_b delta(b, k, a) d_b and d_a d_k = sum_b delta(b, a, k) d_b.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                right(a, b, k) = c.delta(b, k, a);
                left(a, k, b) = c.delta(b, a, k);
            }
    std::vector<std::string> labels;
    for (const auto& s : c.basis_names())
        labels.push_back(s + "*");
    return {"Rat(" + c.name() + "*)", c, std::move(labels), std::move(left), std::move(right)};
}

Bicomodule zero_bicomodule(const Coalgebra& c)
{
    return {"0", c, {}, Tensor3(0, c.dim(), 0), Tensor3(0, 0, c.dim())};
}

Coalgebra trivial_coextension(const Coalgebra& c, const Bicomodule& m)
{
    require_parent(c, m);
    const std::size_t n = c.dim(), d = m.dim(), t = n + d;
    Tensor3 delta(t, t, t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                delta(i, j, k) = c.delta(i, j, k);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                delta(n + a, k, n + b) = m.left(a, k, b);
                delta(n + a, n + b, k) = m.right(a, b, k);
            }
    Vector counit(t);
    for (std::size_t i = 0; i < n; ++i)
        counit[i] = c.counit()[i];
    std::vector<std::string> labels = c.basis_names();
    labels.insert(labels.end(), m.basis.begin(), m.basis.end());
    return Coalgebra(c.name() + "+" + m.name, std::move(labels), std::move(delta), std::move(counit));
}

Algebra trivial_extension(const Coalgebra& c, const Bicomodule& m)
{
    require_parent(c, m);
    const std::size_t n = c.dim(), d = m.dim(), t = n + d;
    DualAlgebra cs = dual_algebra(c);
    Tensor3 mult(t, t, t);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                mult(a, b, k) = cs.mult(a, b, k);
    // (c^k n^b)(m_a) = sum c^k(m_{-1}) n^b(m_0) = left(a, k, b)
    // (n^b c^k)(m_a) = sum n^b(m_[0]) c^k(m_[1]) = right(a, b, k)
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a = 0; a < d; ++a) {
                mult(k, n + b, n + a) = m.left(a, k, b);
                mult(n + b, k, n + a) = m.right(a, b, k);
            }
    Vector unit(t);
    for (std::size_t i = 0; i < n; ++i)
        unit[i] = c.counit()[i];
    std::vector<std::string> labels;
    for (const auto& s : c.basis_names())
        labels.push_back(s + "*");
    for (const auto& s : m.basis)
        labels.push_back(s + "*");
    return Algebra(c.name() + "*+" + m.name + "*", std::move(labels), std::move(mult), std::move(unit));
}

DualExtensionReport dual_is_trivial_extension(const Coalgebra& c, const Bicomodule& m)
{
    const std::size_t n = c.dim(), t = n + m.dim();
    DualAlgebra ds = dual_algebra(trivial_coextension(c, m));
    Algebra te = trivial_extension(c, m);
    DualExtensionReport rep;
    rep.multiplicative = ds.mult_tensor() == te.mult_tensor();
    rep.unital = ds.unit() == te.unit();
    rep.square_zero = true;
    for (std::size_t a = n; a < t; ++a)
        for (std::size_t b = n; b < t; ++b)
            if (!is_zero(ds.multiply(unit_vector(t, a), unit_vector(t, b))))
                rep.square_zero = false;
    return rep;
}

EmbeddingReport embedding_theorem_check(const Coalgebra& c, bool run_search, const SearchOptions& opts)
{
    const std::size_t n = c.dim(), t = 2 * n;
    Bicomodule m = rat_dual_bicomodule(c);
    EmbeddingReport rep;
    rep.extension = trivial_coextension(c, m);
    rep.alpha = Matrix(t, t);
    const Coalgebra& d = rep.extension;

    {
        std::vector<Vector> cs;
        for (std::size_t i = 0; i < n; ++i)
            cs.push_back(unit_vector(t, i));
        Subspace inc = Subspace::span(t, cs);
        rep.subcoalgebra = is_subcoalgebra(d, inc) && restrict_to_subcoalgebra(d, inc, c.name()).delta_tensor() ==
                                                          c.delta_tensor();
    }

    // alpha(c_i) = (0, sigma(c_i)) with sigma(c_i)(m_a) = m_a(c_i); alpha(m_a) = (m_a, 0).
    for (std::size_t i = 0; i < n; ++i) {
        rep.alpha(n + i, i) = 1;
        rep.alpha(i, n + i) = 1;
    }
    rep.bijective = inverse(rep.alpha).has_value();

    // B(x, y) = alpha(y)(x), so the Gram matrix is alpha read as columns.
    BilinearForm form{d, rep.alpha};
    rep.form_symmetric = form.is_symmetric();
    if (rep.bijective && is_balanced(form)) {
        FrobeniusCertificate cert = make_certificate(form);
        rep.left_linear = alpha_is_left_linear(cert);
        rep.right_linear = alpha_is_right_linear(cert);
    }

    DualAlgebra ds = dual_algebra(d);
    auto sigma = [&](const Vector& x) {  // C -> M* inside D*
        Vector out(t);
        for (std::size_t i = 0; i < n; ++i)
            out[n + i] = x[i];
        return out;
    };
    bool ids = true;
    for (std::size_t k = 0; k < n && ids; ++k)
        for (std::size_t i = 0; i < n && ids; ++i) {
            Vector ci = unit_vector(n, i);
            Vector ck = unit_vector(t, k), si = sigma(ci);
            // c* sigma(c) = sigma(c* . c) and sigma(c) c* = sigma(c . c*)
            ids = ds.multiply(ck, si) == sigma(c.left_hit_matrix(k) * ci) &&
                  ds.multiply(si, ck) == sigma(c.right_hit_matrix(k) * ci);
        }
    for (std::size_t a = 0; a < n && ids; ++a)
        for (std::size_t b = 0; b < n && ids; ++b) {
            // m = d_a in C*, n* = (d_b)^* in M*.
            Vector mm = unit_vector(t, a), ns = unit_vector(t, n + b);
            Vector lhs_left(n), lhs_right(n);
            for (std::size_t k = 0; k < n; ++k) {
                lhs_left[k] = m.left(a, k, b);   // sum n*(m_0) sigma(m_{-1})
                lhs_right[k] = m.right(a, b, k); // sum n*(m_[0]) sigma(m_[1])
            }
            ids = ds.multiply(ns, mm) == sigma(lhs_left) && ds.multiply(mm, ns) == sigma(lhs_right);
        }
    rep.proof_identities = ids;

    if (run_search)
        rep.search = is_symmetric(d, opts);
    return rep;
}

}  // namespace cofrob

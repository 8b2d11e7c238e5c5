#include "cofrob/brauer.hpp"

#include "cofrob/error.hpp"

namespace cofrob {

std::string to_string(HomTarget t)
{
    switch (t) {
    case HomTarget::dual:
        return "k";
    case HomTarget::coalgebra:
        return "C";
    case HomTarget::dual_algebra:
        return "C*";
    }
    return "?";
}

namespace {

struct Actions {
    std::vector<Matrix> left;   // how c^k acts on the target from the left
    std::vector<Matrix> right;  // the right action used for the hom space
};

Actions target_actions(const Coalgebra& c, HomTarget t)
{
    Actions a;
    const std::size_t n = c.dim();
    if (t == HomTarget::coalgebra) {
        for (std::size_t k = 0; k < n; ++k) {
            a.left.push_back(c.left_hit_matrix(k));
            a.right.push_back(c.right_hit_matrix(k));
        }
    }
    else if (t == HomTarget::dual_algebra) {
        DualAlgebra d = dual_algebra(c);
        for (std::size_t k = 0; k < n; ++k) {
            a.left.push_back(d.left_mult_matrix(unit_vector(n, k)));
            a.right.push_back(d.right_mult_matrix(unit_vector(n, k)));
        }
    }
    return a;
}

// Maps X: M -> T (n x d) with X A_k = T_k X, unknowns X(r, a) at r*d + a.
HomSpace solve_hom(const Comodule& m, HomTarget t)
{
    const Coalgebra& c = m.parent();
    const std::size_t n = c.dim(), d = m.dim();
    Actions act = target_actions(c, t);
    RowReducer red(n * d);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix ak = m.action_matrix(k);
        const Matrix& tk = act.left[k];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t a = 0; a < d; ++a) {
                SparseRow row;
                for (std::size_t b = 0; b < d; ++b)
                    if (!ak(b, a).is_zero())
                        row.emplace_back(r * d + b, ak(b, a));
                for (std::size_t s = 0; s < n; ++s)
                    if (!tk(r, s).is_zero())
                        row.emplace_back(s * d + a, -tk(r, s));
                if (!row.empty())
                    red.add(std::move(row));
            }
    }
    HomSpace h{m, t, {}};
    for (const auto& v : red.nullspace().vectors())
        h.basis.emplace_back(n, d, v);
    return h;
}

}  // namespace

Matrix HomSpace::act(const Matrix& f, std::size_t k) const
{
    if (target == HomTarget::dual)
        return f * source.action_matrix(k);
    return target_actions(source.parent(), target).right.at(k) * f;
}

bool HomSpace::contains(const Matrix& f) const
{
    const Coalgebra& c = source.parent();
    const std::size_t d = source.dim();
    if (target == HomTarget::dual)
        return f.rows() == 1 && f.cols() == d;
    if (f.rows() != c.dim() || f.cols() != d)
        return false;
    Actions act = target_actions(c, target);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (f * source.action_matrix(k) != act.left[k] * f)
            return false;
    return true;
}

HomSpace compute_F(const Comodule& m)
{
    HomSpace h{m, HomTarget::dual, {}};
    for (std::size_t a = 0; a < m.dim(); ++a)
        h.basis.push_back(Matrix::from_rows(m.dim(), {unit_vector(m.dim(), a)}));
    return h;
}

HomSpace compute_G(const Comodule& m)
{
    return solve_hom(m, HomTarget::coalgebra);
}

HomSpace compute_H(const Comodule& m)
{
    return solve_hom(m, HomTarget::dual_algebra);
}

Matrix alpha_M(const Comodule& m, const Matrix& g)
{
    return Matrix::from_rows(g.cols(), {m.parent().counit() * g});
}

Matrix beta_M(const Comodule& m, const Matrix& f)
{
    const std::size_t n = m.parent().dim(), d = m.dim();
    const Tensor3& rho = m.coaction();
    Matrix out(n, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < n; ++k)
                if (!rho(a, b, k).is_zero())
                    out(k, a).add_product(rho(a, b, k), f(0, b));
    return out;
}

EquivalenceReport equivalence_FG(const Comodule& m, const Comodule* source, const Matrix* morphism)
{
    HomSpace f = compute_F(m), g = compute_G(m);
    const std::size_t n = m.parent().dim();
    EquivalenceReport rep;
    rep.dim_F = f.dim();
    rep.dim_G = g.dim();
    rep.beta_lands_in_G = rep.alpha_beta = rep.beta_linear = true;
    for (const auto& x : f.basis) {
        Matrix bx = beta_M(m, x);
        rep.beta_lands_in_G = rep.beta_lands_in_G && g.contains(bx);
        rep.alpha_beta = rep.alpha_beta && alpha_M(m, bx) == x;
        for (std::size_t k = 0; k < n; ++k)
            rep.beta_linear = rep.beta_linear && beta_M(m, f.act(x, k)) == g.act(bx, k);
    }
    rep.beta_alpha = rep.alpha_linear = true;
    for (const auto& y : g.basis) {
        Matrix ay = alpha_M(m, y);
        rep.beta_alpha = rep.beta_alpha && beta_M(m, ay) == y;
        for (std::size_t k = 0; k < n; ++k)
            rep.alpha_linear = rep.alpha_linear && alpha_M(m, g.act(y, k)) == f.act(ay, k);
    }
    if (source && morphism) {
        if (!is_comodule_morphism(*source, m, *morphism))
            throw InvalidInput("equivalence_FG: supplied map is not a comodule morphism");
        bool nat = true;
        for (const auto& x : f.basis)
            nat = nat && beta_M(*source, x * *morphism) == beta_M(m, x) * *morphism;
        for (const auto& y : g.basis)
            nat = nat && alpha_M(*source, y * *morphism) == alpha_M(m, y) * *morphism;
        rep.natural = nat;
    }
    return rep;
}

Vector automorphism_description(const Coalgebra& c, const Matrix& f)
{
    const std::size_t n = c.dim();
    if (f.rows() != n || f.cols() != n)
        throw InvalidInput("automorphism_description: map has the wrong shape");
    for (std::size_t k = 0; k < n; ++k)
        if (f * c.left_hit_matrix(k) != c.left_hit_matrix(k) * f)
            throw InvalidInput("automorphism_description: map is not left C*-linear");
    if (det(f).is_zero())
        throw InvalidInput("automorphism_description: map is not bijective");

    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k)
        cols.push_back(c.right_hit_matrix(k).entries());
    auto sol = solve(Matrix::from_columns(n * n, cols), Matrix(n * n, 1, f.entries()));
    if (!sol)
        throw TheoremViolation("automorphism_description: C*-linear map is not a right hit");
    Vector u = sol->column(0);
    if (!dual_algebra(c).is_invertible(u))
        throw TheoremViolation("automorphism_description: u is not a unit of C*");
    return u;
}

bool beta_C_anti_isomorphism(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    DualAlgebra d = dual_algebra(c);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector prod = d.multiply(unit_vector(n, a), unit_vector(n, b));
            if (c.right_hit_matrix(prod) != c.right_hit_matrix(b) * c.right_hit_matrix(a))
                return false;
        }
    return true;
}

GHReport symmetric_via_GH(const Coalgebra& c, const std::vector<Comodule>& samples, const SearchOptions& opts)
{
    GHReport rep;
    auto sym = is_symmetric(c, opts);
    rep.symmetric = sym.status;
    std::optional<FrobeniusCertificate> cert;
    if (sym.witness)
        cert = make_certificate(*sym.witness);

    for (const auto& m : samples) {
        if (!(m.parent() == c))
            throw InvalidInput("symmetric_via_GH: sample " + m.name() + " is over another coalgebra");
        HomSpace g = compute_G(m), h = compute_H(m);
        GHSample s{m.name(), g.dim(), h.dim(), false};
        if (s.dim_G != s.dim_H)
            rep.mismatch_found = true;
        if (cert) {
            // Post-composition with the bimodule isomorphism alpha: C -> C*.
            bool ok = s.dim_G == s.dim_H;
            std::vector<Vector> images;
            for (const auto& x : g.basis) {
                Matrix ax = cert->alpha * x;
                ok = ok && h.contains(ax);
                for (std::size_t k = 0; k < c.dim() && ok; ++k)
                    ok = cert->alpha * g.act(x, k) == h.act(ax, k);
                images.push_back(ax.entries());
            }
            ok = ok && Subspace::span(c.dim() * m.dim(), images).dim() == g.dim();
            s.iso_verified = ok;
        }
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

}  // namespace cofrob

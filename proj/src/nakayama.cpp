#include "cofrob/nakayama.hpp"

#include "cofrob/error.hpp"
#include "cofrob/ring.hpp"

namespace cofrob {

namespace {

// Column k is the flattened matrix mats[k].
Matrix stack_columns(const std::vector<Matrix>& mats, std::size_t n)
{
    std::vector<Vector> cols;
    for (const auto& m : mats)
        cols.push_back(m.entries());
    return Matrix::from_columns(n * n, cols);
}

Vector combine(const std::vector<Vector>& basis, const std::vector<Scalar>& coeffs, std::size_t n)
{
    Vector out(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[j].add_product(coeffs[i], basis[i][j]);
    return out;
}

}  // namespace

bool is_ring_automorphism(const FrobeniusCertificate& cert, const Matrix& map)
{
    const std::size_t n = cert.coalgebra().dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector x = unit_vector(n, a), y = unit_vector(n, b);
            if (map * circ(cert, x, y) != circ(cert, map * x, map * y))
                return false;
        }
    return true;
}

NakayamaAuto nakayama(const FrobeniusCertificate& cert)
{
    const Matrix& m = cert.form.gram;
    auto mt_inv = inverse(m.transpose());
    if (!mt_inv)
        throw TheoremViolation("nakayama: Gram matrix is singular");
    Matrix sigma = *mt_inv * m;
    if (cert.beta * sigma != cert.alpha)
        throw TheoremViolation("nakayama: alpha = beta o sigma fails");
    auto sigma_inv = inverse(sigma);
    if (!sigma_inv)
        throw TheoremViolation("nakayama: sigma is not bijective");
    if (!is_ring_automorphism(cert, sigma))
        throw TheoremViolation("nakayama: sigma is not a ring automorphism of (C, o)");
    return {cert, std::move(sigma), std::move(*sigma_inv)};
}

Matrix nakayama_tau(const FrobeniusCertificate& cert)
{
    return cert.alpha_inv * cert.beta;
}

Matrix inner_action(const Coalgebra& c, const Vector& u, const Vector& u_inv)
{
    return c.left_hit_matrix(u_inv) * c.right_hit_matrix(u);
}

FormComparison compare_forms(const FrobeniusCertificate& first, const FrobeniusCertificate& second)
{
    const Coalgebra& c = first.coalgebra();
    if (!(c == second.coalgebra()))
        throw InvalidInput("compare_forms: certificates live on different coalgebras");
    const std::size_t n = c.dim();

    Matrix phi = first.alpha_inv * second.alpha;
    std::vector<Matrix> rights;
    for (std::size_t k = 0; k < n; ++k)
        rights.push_back(c.right_hit_matrix(k));
    auto sol = solve(stack_columns(rights, n), Matrix(n * n, 1, phi.entries()));
    if (!sol)
        throw TheoremViolation("compare_forms: alpha^-1 alpha' is not a right hit");

    FormComparison out;
    out.u = sol->column(0);
    DualAlgebra a = dual_algebra(c);
    auto u_inv = a.inverse(out.u);
    if (!u_inv)
        throw TheoremViolation("compare_forms: u is not invertible in C*");
    out.u_inv = std::move(*u_inv);

    out.form_relation = second.form.gram == first.form.gram * c.right_hit_matrix(out.u);
    NakayamaAuto s1 = nakayama(first), s2 = nakayama(second);
    out.conjugation_law = s2.sigma == s1.sigma * inner_action(c, out.u, out.u_inv);
    return out;
}

std::vector<Vector> inner_dual_solutions(const Coalgebra& c, const Matrix& map)
{
    const std::size_t n = c.dim();
    std::vector<Matrix> terms;
    for (std::size_t k = 0; k < n; ++k)
        terms.push_back(c.left_hit_matrix(k) * map - c.right_hit_matrix(k));
    return kernel(stack_columns(terms, n)).vectors();
}

Decision<Vector> find_inner_dual(const Coalgebra& c, const Matrix& map, const SearchOptions& opts)
{
    const std::size_t n = c.dim();
    auto basis = inner_dual_solutions(c, map);
    DualAlgebra a = dual_algebra(c);
    std::vector<Matrix> pencil;
    for (const auto& v : basis)
        pencil.push_back(a.left_mult_matrix(v));

    Decision<Vector> d;
    if (pencil.empty()) {
        d.status = SearchStatus::absent;
        return d;
    }
    PencilResult r = find_nonsingular(pencil, n, opts);
    d.status = r.status;
    d.phase = r.phase;
    if (r.status == SearchStatus::found) {
        Vector u = combine(basis, r.coefficients, n);
        auto u_inv = a.inverse(u);
        if (!u_inv || inner_action(c, u, *u_inv) != map)
            throw TheoremViolation("find_inner_dual: witness does not conjugate to the given map");
        d.witness = std::move(u);
    }
    return d;
}

Decision<Vector> is_inner(const NakayamaAuto& na, const SearchOptions& opts)
{
    return find_inner_dual(na.cert.coalgebra(), na.sigma, opts);
}

}  // namespace cofrob

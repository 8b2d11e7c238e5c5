#include "cofrob/frobenius.hpp"

#include "cofrob/error.hpp"

namespace cofrob {

namespace {

std::vector<BilinearForm> forms_from_nullspace(const Coalgebra& c, const Subspace& ns)
{
    const std::size_t n = c.dim();
    std::vector<BilinearForm> out;
    for (const auto& v : ns.vectors())
        out.push_back({c, Matrix(n, n, v)});
    return out;
}

// Rows of R^T M - M L = 0 in the unknowns M(a, b) at index a*n + b.
void add_balance_equations(RowReducer& red, const Matrix& r, const Matrix& l)
{
    const std::size_t n = r.rows();
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rcol(n), lcol(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a) {
            if (!r(j, a).is_zero())
                rcol[a].emplace_back(j, r(j, a));
            if (!l(j, a).is_zero())
                lcol[a].emplace_back(j, l(j, a));
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            SparseRow row;
            for (const auto& [j, v] : rcol[a])
                row.emplace_back(j * n + b, v);
            for (const auto& [j, v] : lcol[b])
                row.emplace_back(a * n + j, -v);
            if (!row.empty())
                red.add(std::move(row));
        }
}

void add_symmetry_equations(RowReducer& red, std::size_t n)
{
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            red.add(SparseRow{{a * n + b, Scalar(1)}, {b * n + a, Scalar(-1)}});
}

RowReducer balance_system(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    RowReducer red(n * n);
    for (const auto& g : dual_algebra_generators(c))
        add_balance_equations(red, c.right_hit_matrix(g), c.left_hit_matrix(g));
    return red;
}

}  // namespace

bool is_balanced(const BilinearForm& b)
{
    const Coalgebra& c = b.coalgebra;
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (c.right_hit_matrix(k).transpose() * b.gram != b.gram * c.left_hit_matrix(k))
            return false;
    return true;
}

FrobeniusCertificate make_certificate(const BilinearForm& b)
{
    const std::size_t n = b.coalgebra.dim();
    if (b.gram.rows() != n || b.gram.cols() != n)
        throw InvalidInput("certificate: Gram matrix shape does not match coalgebra");
    if (!is_balanced(b))
        throw InvalidInput("certificate: form is not C*-balanced");
    auto inv = inverse(b.gram);
    if (!inv)
        throw InvalidInput("certificate: form is degenerate");
    FrobeniusCertificate cert{b, b.gram, b.gram.transpose(), *inv, {}};
    cert.identity = *inv * b.coalgebra.counit();
    return cert;
}

Vector circ(const FrobeniusCertificate& cert, const Vector& x, const Vector& y)
{
    return cert.coalgebra().hit_left(cert.alpha * x, y);
}

bool alpha_is_left_linear(const FrobeniusCertificate& cert)
{
    const Coalgebra& c = cert.coalgebra();
    DualAlgebra a = dual_algebra(c);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (cert.alpha * c.left_hit_matrix(k) != a.left_mult_matrix(unit_vector(c.dim(), k)) * cert.alpha)
            return false;
    return true;
}

bool alpha_is_right_linear(const FrobeniusCertificate& cert)
{
    const Coalgebra& c = cert.coalgebra();
    DualAlgebra a = dual_algebra(c);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (cert.alpha * c.right_hit_matrix(k) != a.right_mult_matrix(unit_vector(c.dim(), k)) * cert.alpha)
            return false;
    return true;
}

bool beta_is_right_linear(const FrobeniusCertificate& cert)
{
    const Coalgebra& c = cert.coalgebra();
    DualAlgebra a = dual_algebra(c);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (cert.beta * c.right_hit_matrix(k) != a.right_mult_matrix(unit_vector(c.dim(), k)) * cert.beta)
            return false;
    return true;
}

std::vector<Vector> dual_algebra_generators(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    DualAlgebra a = dual_algebra(c);
    std::vector<Vector> gens;

    auto closure_dim = [&]() {
        RowReducer red(n);
        std::vector<Vector> queue{a.unit()};
        red.add(a.unit());
        for (const auto& g : gens)
            if (red.add(g))
                queue.push_back(g);
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (const auto& g : gens) {
                Vector w = a.multiply(queue[q], g);
                if (red.add(w))
                    queue.push_back(std::move(w));
            }
        return red;
    };

    RowReducer span = closure_dim();
    for (std::size_t k = 0; k < n && span.rank() < n; ++k) {
        Vector ek = unit_vector(n, k);
        SparseRow probe{{k, Scalar(1)}};
        if (span.reduce(probe).empty())
            continue;
        gens.push_back(ek);
        span = closure_dim();
    }
    return gens;
}

std::vector<BilinearForm> balanced_form_space(const Coalgebra& c)
{
    return forms_from_nullspace(c, balance_system(c).nullspace());
}

std::vector<BilinearForm> symmetric_balanced_form_space(const Coalgebra& c)
{
    RowReducer red = balance_system(c);
    add_symmetry_equations(red, c.dim());
    return forms_from_nullspace(c, red.nullspace());
}

Decision<BilinearForm> find_nondegenerate(const std::vector<BilinearForm>& forms, bool symmetric_only,
                                          const SearchOptions& opts)
{
    Decision<BilinearForm> d;
    if (forms.empty()) {
        d.status = SearchStatus::absent;
        return d;
    }
    const Coalgebra& c = forms.front().coalgebra;
    const std::size_t n = c.dim();

    std::vector<Matrix> pencil;
    if (symmetric_only) {
        std::vector<Vector> flat;
        for (const auto& f : forms)
            flat.push_back(f.gram.entries());
        RowReducer antisym(n * n);
        add_symmetry_equations(antisym, n);
        Subspace sym = antisym.nullspace();
        Subspace both = Subspace::span(n * n, flat).intersection(sym);
        for (const auto& v : both.vectors())
            pencil.emplace_back(n, n, v);
    }
    else {
        for (const auto& f : forms)
            pencil.push_back(f.gram);
    }

    PencilResult r = find_nonsingular(pencil, n, opts);
    d.status = r.status;
    d.phase = r.phase;
    if (r.status == SearchStatus::found)
        d.witness = BilinearForm{c, std::move(r.value)};
    return d;
}

Decision<FrobeniusCertificate> is_cofrobenius(const Coalgebra& c, const SearchOptions& opts)
{
    auto d = find_nondegenerate(balanced_form_space(c), false, opts);
    Decision<FrobeniusCertificate> out{d.status, d.phase, std::nullopt};
    if (d.witness)
        out.witness = make_certificate(*d.witness);
    return out;
}

Decision<BilinearForm> is_symmetric(const Coalgebra& c, const SearchOptions& opts)
{
    return find_nondegenerate(symmetric_balanced_form_space(c), true, opts);
}

Decision<Vector> cocommutative_generator(const Coalgebra& c, const SearchOptions& opts)
{
    const std::size_t n = c.dim();
    auto basis = cocommutative_elements(c).vectors();
    std::vector<Matrix> pencil;
    for (const auto& e : basis) {
        std::vector<Vector> cols;
        for (std::size_t k = 0; k < n; ++k)
            cols.push_back(c.right_hit_matrix(k) * e);
        pencil.push_back(Matrix::from_columns(n, cols));
    }
    PencilResult r = find_nonsingular(pencil, n, opts);
    Decision<Vector> d{r.status, r.phase, std::nullopt};
    if (r.status == SearchStatus::found) {
        Vector e(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                e[j].add_product(r.coefficients[i], basis[i][j]);
        d.witness = std::move(e);
    }
    return d;
}

bool generates_as_right_module(const Coalgebra& c, const Vector& e)
{
    return left_coideal_generated(c, e).dim() == c.dim();
}

Vector trace_map(const FrobeniusCertificate& cert)
{
    if (!cert.form.is_symmetric())
        throw InvalidInput("trace_map: the certificate's form is not symmetric");
    return cert.form.gram * cert.identity;
}

Subspace largest_right_coideal_in_kernel(const Coalgebra& c, const Vector& f)
{
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < c.dim(); ++k)
        rows.push_back(f * c.left_hit_matrix(k));
    return kernel(Matrix::from_rows(c.dim(), rows));
}

Subspace largest_left_coideal_in_kernel(const Coalgebra& c, const Vector& f)
{
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < c.dim(); ++k)
        rows.push_back(f * c.right_hit_matrix(k));
    return kernel(Matrix::from_rows(c.dim(), rows));
}

TraceMapReport check_trace_map(const FrobeniusCertificate& cert, const Vector& f)
{
    const Coalgebra& c = cert.coalgebra();
    const std::size_t n = c.dim();
    TraceMapReport rep;

    rep.commutes_with_circ = true;
    for (std::size_t a = 0; a < n && rep.commutes_with_circ; ++a)
        for (std::size_t b = 0; b < n && rep.commutes_with_circ; ++b) {
            Vector ea = unit_vector(n, a), eb = unit_vector(n, b);
            rep.commutes_with_circ = dot(f, circ(cert, ea, eb)) == dot(f, circ(cert, eb, ea));
        }

    rep.hit_invariant = true;
    for (std::size_t k = 0; k < n && rep.hit_invariant; ++k)
        rep.hit_invariant = f * c.left_hit_matrix(k) == f * c.right_hit_matrix(k);

    rep.no_right_coideal_in_kernel = largest_right_coideal_in_kernel(c, f).dim() == 0;
    rep.no_left_coideal_in_kernel = largest_left_coideal_in_kernel(c, f).dim() == 0;
    return rep;
}

}  // namespace cofrob

#include "cofrob/coalgebra.hpp"

#include <sstream>

#include "cofrob/error.hpp"

namespace cofrob {

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

namespace {

struct Entry {
    std::size_t j, k;
    Scalar v;
};

// Nonzero (j, k, value) per leading index.
std::vector<std::vector<Entry>> nonzeros(const Tensor3& t)
{
    std::vector<std::vector<Entry>> nz(t.extent(0));
    for (std::size_t i = 0; i < t.extent(0); ++i)
        for (std::size_t j = 0; j < t.extent(1); ++j)
            for (std::size_t k = 0; k < t.extent(2); ++k)
                if (!t(i, j, k).is_zero())
                    nz[i].push_back({j, k, t(i, j, k)});
    return nz;
}

// Coordinates of a vector known to lie in s, read off at the pivots.
Vector coordinates_in(const Subspace& s, const Vector& v)
{
    Vector out(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        out[r] = v[s.pivots()[r]];
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Coalgebra

Coalgebra::Coalgebra(std::string name, std::vector<std::string> basis, Tensor3 delta, Vector counit)
{
    const std::size_t n = counit.size();
    if (n == 0)
        throw InvalidInput("coalgebra must have dimension at least 1");
    if (basis.size() != n)
        throw InvalidInput("coalgebra: basis label count does not match dimension");
    if (delta.extent(0) != n || delta.extent(1) != n || delta.extent(2) != n)
        throw InvalidInput("coalgebra: comultiplication tensor has wrong shape");

    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->basis = std::move(basis);
    d->delta = std::move(delta);
    d->counit = std::move(counit);

    d->coproduct = Matrix(n * n, n);
    d->left_hits.assign(n, Matrix(n, n));
    d->right_hits.assign(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& v = d->delta(i, j, k);
                if (v.is_zero())
                    continue;
                d->coproduct(j * n + k, i) = v;
                d->left_hits[k](j, i) = v;
                d->right_hits[j](k, i) = v;
            }
    d_ = std::move(d);
}

void Coalgebra::require_dim(const Vector& v, const char* what) const
{
    if (v.size() != dim())
        throw InvalidInput(std::string(what) + ": vector length does not match coalgebra dimension");
}

Vector Coalgebra::coproduct(const Vector& x) const
{
    require_dim(x, "coproduct");
    return d_->coproduct * x;
}

Matrix Coalgebra::left_hit_matrix(const Vector& dual) const
{
    require_dim(dual, "left_hit_matrix");
    return linear_combination(d_->left_hits, dual);
}

Matrix Coalgebra::right_hit_matrix(const Vector& dual) const
{
    require_dim(dual, "right_hit_matrix");
    return linear_combination(d_->right_hits, dual);
}

Vector Coalgebra::hit_left(const Vector& dual, const Vector& x) const
{
    require_dim(x, "hit_left");
    return left_hit_matrix(dual) * x;
}

Vector Coalgebra::hit_right(const Vector& x, const Vector& dual) const
{
    require_dim(x, "hit_right");
    return right_hit_matrix(dual) * x;
}

Coalgebra Coalgebra::renamed(std::string name) const
{
    return Coalgebra(std::move(name), d_->basis, d_->delta, d_->counit);
}

bool operator==(const Coalgebra& a, const Coalgebra& b)
{
    if (a.d_ == b.d_)
        return true;
    if (!a.d_ || !b.d_)
        return false;
    return a.d_->delta == b.d_->delta && a.d_->counit == b.d_->counit;
}

AxiomReport validate(const Coalgebra& c)
{
    AxiomReport report;
    const std::size_t n = c.dim();
    auto nz = nonzeros(c.delta_tensor());

    for (std::size_t i = 0; i < n; ++i) {
        // (delta (x) id) delta  vs  (id (x) delta) delta, as n^3 arrays.
        std::vector<Scalar> lhs(n * n * n), rhs(n * n * n);
        for (const auto& [j, k, v] : nz[i]) {
            for (const auto& [a, b, w] : nz[j])
                lhs[(a * n + b) * n + k].add_product(v, w);
            for (const auto& [b, e, w] : nz[k])
                rhs[(j * n + b) * n + e].add_product(v, w);
        }
        if (lhs != rhs)
            report.violations.push_back({"coassociativity", i, "(delta x id)delta != (id x delta)delta"});

        Vector left(n), right(n);
        for (const auto& [j, k, v] : nz[i]) {
            left[k].add_product(c.counit()[j], v);
            right[j].add_product(c.counit()[k], v);
        }
        Vector ei = unit_vector(n, i);
        if (left != ei)
            report.violations.push_back({"counit-left", i, "(eps x id)delta(c) = " + to_string(left)});
        if (right != ei)
            report.violations.push_back({"counit-right", i, "(id x eps)delta(c) = " + to_string(right)});
    }
    return report;
}

bool is_coideal(const Coalgebra& c, const Subspace& s, CoidealSide side)
{
    const std::size_t n = c.dim();
    if (s.ambient_dim() != n)
        throw InvalidInput("is_coideal: subspace ambient dimension does not match coalgebra");
    Subspace target;
    switch (side) {
    case CoidealSide::left:
        target = s.tensor_left_full(n);
        break;
    case CoidealSide::right:
        target = s.tensor_right_full(n);
        break;
    case CoidealSide::two_sided:
        target = s.tensor_left_full(n).intersection(s.tensor_right_full(n));
        break;
    }
    for (const auto& v : s.vectors())
        if (!target.contains(c.coproduct(v)))
            return false;
    return true;
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& s)
{
    return is_coideal(c, s, CoidealSide::left) && is_coideal(c, s, CoidealSide::right);
}

Subspace right_coideal_generated(const Coalgebra& c, const Vector& x)
{
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < c.dim(); ++k)
        vs.push_back(c.left_hit_matrix(k) * x);
    return Subspace::span(c.dim(), vs);
}

Subspace left_coideal_generated(const Coalgebra& c, const Vector& x)
{
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < c.dim(); ++k)
        vs.push_back(c.right_hit_matrix(k) * x);
    return Subspace::span(c.dim(), vs);
}

Subspace subcoalgebra_generated(const Coalgebra& c, const Vector& x)
{
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < c.dim(); ++k) {
        Vector y = c.right_hit_matrix(k) * x;
        for (std::size_t j = 0; j < c.dim(); ++j)
            vs.push_back(c.left_hit_matrix(j) * y);
    }
    return Subspace::span(c.dim(), vs);
}

Subspace cocommutative_elements(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    Matrix t(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t(j * n + k, i) = c.delta(i, j, k) - c.delta(i, k, j);
    return kernel(t);
}

std::vector<std::size_t> grouplike_basis_elements(const Coalgebra& c)
{
    std::vector<std::size_t> out;
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (!c.counit()[i].is_one())
            continue;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n && ok; ++k)
                ok = c.delta(i, j, k) == Scalar((j == i && k == i) ? 1 : 0);
        if (ok)
            out.push_back(i);
    }
    return out;
}

// -------------------------------------------------------------- constructors

Coalgebra grouplike_coalgebra(const std::vector<std::string>& labels)
{
    const std::size_t n = labels.size();
    Tensor3 delta(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        delta(i, i, i) = 1;
    std::string name = "k{";
    for (std::size_t i = 0; i < n; ++i)
        name += (i ? "," : "") + labels[i];
    return Coalgebra(name + "}", labels, std::move(delta), Vector(n, Scalar(1)));
}

Coalgebra matrix_coalgebra(std::size_t n)
{
    if (n == 0)
        throw InvalidInput("matrix_coalgebra: n must be at least 1");
    const std::size_t d = n * n;
    Tensor3 delta(d, d, d);
    Vector eps(d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back(n < 10 ? "e" + std::to_string(i + 1) + std::to_string(j + 1)
                                    : "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            if (i == j)
                eps[i * n + j] = 1;
            for (std::size_t k = 0; k < n; ++k)
                delta(i * n + j, i * n + k, k * n + j) = 1;
        }
    return Coalgebra("Mc(" + std::to_string(n) + ")", std::move(labels), std::move(delta), std::move(eps));
}

Coalgebra direct_sum(const Coalgebra& c, const Coalgebra& d)
{
    const std::size_t n = c.dim(), m = d.dim(), s = n + m;
    Tensor3 delta(s, s, s);
    Vector eps(s);
    for (std::size_t i = 0; i < n; ++i) {
        eps[i] = c.counit()[i];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                delta(i, j, k) = c.delta(i, j, k);
    }
    for (std::size_t i = 0; i < m; ++i) {
        eps[n + i] = d.counit()[i];
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                delta(n + i, n + j, n + k) = d.delta(i, j, k);
    }
    auto labels = c.basis_names();
    for (const auto& l : d.basis_names())
        labels.push_back(l + "'");
    return Coalgebra(c.name() + "+" + d.name(), std::move(labels), std::move(delta), std::move(eps));
}

Coalgebra tensor(const Coalgebra& c, const Coalgebra& d)
{
    const std::size_t n = c.dim(), m = d.dim(), s = n * m;
    auto cn = nonzeros(c.delta_tensor());
    auto dn = nonzeros(d.delta_tensor());
    Tensor3 delta(s, s, s);
    Vector eps(s);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            labels.push_back(c.basis_names()[i] + "|" + d.basis_names()[j]);
            eps[i * m + j] = c.counit()[i] * d.counit()[j];
            for (const auto& [a, b, v] : cn[i])
                for (const auto& [p, q, w] : dn[j])
                    delta(i * m + j, a * m + p, b * m + q) += v * w;
        }
    return Coalgebra(c.name() + "(x)" + d.name(), std::move(labels), std::move(delta), std::move(eps));
}

Coalgebra opposite(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    Tensor3 delta(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                delta(i, j, k) = c.delta(i, k, j);
    return Coalgebra(c.name() + "^cop", c.basis_names(), std::move(delta), c.counit());
}

Coalgebra restrict_to_subcoalgebra(const Coalgebra& c, const Subspace& s, std::string name)
{
    if (!is_subcoalgebra(c, s))
        throw InvalidInput("restrict_to_subcoalgebra: subspace is not a subcoalgebra");
    const std::size_t n = c.dim(), r = s.dim();
    auto vs = s.vectors();
    Tensor3 delta(r, r, r);
    Vector eps(r);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < r; ++a) {
        labels.push_back("v" + std::to_string(a));
        eps[a] = dot(c.counit(), vs[a]);
        Vector t = c.coproduct(vs[a]);
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q)
                delta(a, p, q) = t[s.pivots()[p] * n + s.pivots()[q]];
    }
    return Coalgebra(std::move(name), std::move(labels), std::move(delta), std::move(eps));
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(std::string name, std::vector<std::string> basis, Tensor3 mult, Vector unit)
    : name_(std::move(name)), basis_(std::move(basis)), mult_(std::move(mult)), unit_(std::move(unit))
{
    const std::size_t n = unit_.size();
    if (n == 0)
        throw InvalidInput("algebra must have dimension at least 1");
    if (basis_.size() != n)
        throw InvalidInput("algebra: basis label count does not match dimension");
    if (mult_.extent(0) != n || mult_.extent(1) != n || mult_.extent(2) != n)
        throw InvalidInput("algebra: multiplication tensor has wrong shape");
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const
{
    return left_mult_matrix(u) * v;
}

Matrix Algebra::left_mult_matrix(const Vector& u) const
{
    const std::size_t n = dim();
    if (u.size() != n)
        throw InvalidInput("algebra: element length does not match dimension");
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (u[a].is_zero())
            continue;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                m(k, b).add_product(u[a], mult_(a, b, k));
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const Vector& u) const
{
    const std::size_t n = dim();
    if (u.size() != n)
        throw InvalidInput("algebra: element length does not match dimension");
    Matrix m(n, n);
    for (std::size_t b = 0; b < n; ++b) {
        if (u[b].is_zero())
            continue;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k)
                m(k, a).add_product(u[b], mult_(a, b, k));
    }
    return m;
}

bool Algebra::is_invertible(const Vector& u) const
{
    return !det(left_mult_matrix(u)).is_zero();
}

std::optional<Vector> Algebra::inverse(const Vector& u) const
{
    auto x = solve(left_mult_matrix(u), Matrix::from_columns(dim(), {unit_}));
    if (!x)
        return std::nullopt;
    Vector v = x->column(0);
    if (multiply(v, u) != unit_)
        return std::nullopt;
    return v;
}

Algebra Algebra::opposite() const
{
    const std::size_t n = dim();
    Tensor3 m(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                m(a, b, k) = mult_(b, a, k);
    return Algebra(name_ + "^op", basis_, std::move(m), unit_);
}

AxiomReport validate(const Algebra& a)
{
    AxiomReport report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vector ei = unit_vector(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector ij = a.multiply(ei, unit_vector(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                Vector ek = unit_vector(n, k);
                if (a.multiply(ij, ek) != a.multiply(ei, a.multiply(unit_vector(n, j), ek))) {
                    std::ostringstream os;
                    os << "(e" << i << " e" << j << ") e" << k << " != e" << i << " (e" << j << " e" << k << ")";
                    report.violations.push_back({"associativity", i, os.str()});
                }
            }
        }
        if (a.multiply(a.unit(), ei) != ei)
            report.violations.push_back({"unit-left", i, "1 e != e"});
        if (a.multiply(ei, a.unit()) != ei)
            report.violations.push_back({"unit-right", i, "e 1 != e"});
    }
    return report;
}

DualAlgebra dual_algebra(const Coalgebra& c)
{
    const std::size_t n = c.dim();
    Tensor3 m(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                m(a, b, i) = c.delta(i, a, b);
    std::vector<std::string> labels;
    for (const auto& l : c.basis_names())
        labels.push_back(l + "*");
    return Algebra(c.name() + "*", std::move(labels), std::move(m), c.counit());
}

Coalgebra dual_coalgebra(const Algebra& a, std::string name)
{
    const std::size_t n = a.dim();
    Tensor3 delta(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                delta(k, i, j) = a.mult(i, j, k);
    std::vector<std::string> labels;
    for (const auto& l : a.basis_names())
        labels.push_back(l + "*");
    return Coalgebra(std::move(name), std::move(labels), std::move(delta), a.unit());
}

// ---------------------------------------------------------------- Comodule

Comodule::Comodule(std::string name, Coalgebra parent, std::vector<std::string> basis, Tensor3 coaction)
    : name_(std::move(name)), parent_(std::move(parent)), basis_(std::move(basis)), coaction_(std::move(coaction))
{
    const std::size_t m = basis_.size();
    if (!parent_.valid_handle())
        throw InvalidInput("comodule: missing parent coalgebra");
    if (coaction_.extent(0) != m || coaction_.extent(1) != m || coaction_.extent(2) != parent_.dim())
        throw InvalidInput("comodule: coaction tensor has wrong shape");
}

Matrix Comodule::action_matrix(std::size_t k) const
{
    const std::size_t m = dim();
    Matrix a(m, m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t b = 0; b < m; ++b)
            a(b, x) = coaction_(x, b, k);
    return a;
}

Matrix Comodule::action_matrix(const Vector& dual) const
{
    if (dual.size() != parent_.dim())
        throw InvalidInput("comodule action: dual vector length mismatch");
    Matrix a(dim(), dim());
    for (std::size_t k = 0; k < dual.size(); ++k)
        if (!dual[k].is_zero())
            a += dual[k] * action_matrix(k);
    return a;
}

AxiomReport validate(const Comodule& m)
{
    AxiomReport report;
    const Coalgebra& c = m.parent();
    const std::size_t n = c.dim(), d = m.dim();
    const Tensor3& rho = m.coaction();
    auto cn = nonzeros(c.delta_tensor());
    auto rn = nonzeros(rho);
    for (std::size_t a = 0; a < d; ++a) {
        // (rho x id) rho  vs  (id x delta) rho, indexed [m_c][c_j][c_l].
        std::vector<Scalar> lhs(d * n * n), rhs(d * n * n);
        for (const auto& [b, k, v] : rn[a]) {
            for (const auto& [e, j, w] : rn[b])
                lhs[(e * n + j) * n + k].add_product(v, w);
            for (const auto& [j, l, w] : cn[k])
                rhs[(b * n + j) * n + l].add_product(v, w);
        }
        if (lhs != rhs)
            report.violations.push_back({"comodule-coassociativity", a, "(rho x id)rho != (id x delta)rho"});
        Vector counit(d);
        for (const auto& [b, k, v] : rn[a])
            counit[b].add_product(v, c.counit()[k]);
        if (counit != unit_vector(d, a))
            report.violations.push_back({"comodule-counit", a, "(id x eps)rho(m) = " + to_string(counit)});
    }
    return report;
}

Comodule regular_comodule(const Coalgebra& c)
{
    return Comodule(c.name(), c, c.basis_names(), c.delta_tensor());
}

Comodule zero_comodule(const Coalgebra& c)
{
    return Comodule("0", c, {}, Tensor3(0, 0, c.dim()));
}

Subcomodule subcomodule(const Comodule& m, const Subspace& s, std::string name)
{
    if (s.ambient_dim() != m.dim())
        throw InvalidInput("subcomodule: subspace ambient dimension does not match comodule");
    const std::size_t n = m.parent().dim(), r = s.dim();
    auto vs = s.vectors();
    Tensor3 rho(r, r, n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix ak = m.action_matrix(k);
        for (std::size_t a = 0; a < r; ++a) {
            Vector w = ak * vs[a];
            if (!s.contains(w))
                throw InvalidInput("subcomodule: subspace is not closed under the coaction");
            Vector coords = coordinates_in(s, w);
            for (std::size_t p = 0; p < r; ++p)
                rho(a, p, k) = coords[p];
        }
    }
    Matrix incl = vs.empty() ? Matrix(m.dim(), 0) : Matrix::from_columns(m.dim(), vs);
    return {Comodule(std::move(name), m.parent(), default_labels("v", r), std::move(rho)), std::move(incl)};
}

bool is_comodule_morphism(const Comodule& m, const Comodule& n, const Matrix& phi)
{
    if (!(m.parent() == n.parent()))
        throw InvalidInput("comodule morphism: comodules over different coalgebras");
    if (phi.rows() != n.dim() || phi.cols() != m.dim())
        throw InvalidInput("comodule morphism: matrix shape does not match comodules");
    for (std::size_t k = 0; k < m.parent().dim(); ++k)
        if (phi * m.action_matrix(k) != n.action_matrix(k) * phi)
            return false;
    return true;
}

}  // namespace cofrob

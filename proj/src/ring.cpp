#include "cofrob/ring.hpp"

#include "cofrob/error.hpp"

namespace cofrob {

Vector TransferredRing::multiply(const Vector& x, const Vector& y) const
{
    const std::size_t n = identity.size();
    if (x.size() != n || y.size() != n)
        throw InvalidInput("ring multiply: length mismatch");
    Vector out(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero())
            continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (y[b].is_zero())
                continue;
            Scalar f = x[a] * y[b];
            for (std::size_t k = 0; k < n; ++k)
                out[k].add_product(f, mult(a, b, k));
        }
    }
    return out;
}

Tensor3 circ_table(const FrobeniusCertificate& cert)
{
    const Coalgebra& c = cert.coalgebra();
    const std::size_t n = c.dim();
    Tensor3 t(n, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix hit = c.left_hit_matrix(cert.alpha.column(a));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                t(a, b, k) = hit(k, b);
    }
    return t;
}

Tensor3 odot_table(const FrobeniusCertificate& cert)
{
    const Coalgebra& c = cert.coalgebra();
    const Matrix& g = cert.form.gram;
    const std::size_t n = c.dim();
    Tensor3 t(n, n, n);
    // c_a (.) c_b = sum_{j,k} delta(a,j,k) B(c_b, c_j) c_k
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& v = c.delta(a, j, k);
                if (v.is_zero())
                    continue;
                for (std::size_t b = 0; b < n; ++b)
                    t(a, b, k).add_product(v, g(b, j));
            }
    return t;
}

TransferredRing build_ring(const FrobeniusCertificate& cert)
{
    TransferredRing r{cert, circ_table(cert), cert.identity};
    if (!(r.mult == odot_table(cert)))
        throw TheoremViolation("transferred ring: the alpha and beta multiplications differ");
    const std::size_t n = r.identity.size();
    for (std::size_t a = 0; a < n; ++a) {
        Vector ea = unit_vector(n, a);
        if (r.multiply(r.identity, ea) != ea || r.multiply(ea, r.identity) != ea)
            throw TheoremViolation("transferred ring: alpha^-1(eps) is not a two-sided identity");
    }
    if (!is_associative(r))
        throw TheoremViolation("transferred ring: product is not associative");
    return r;
}

bool is_associative(const TransferredRing& r)
{
    const std::size_t n = r.identity.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector ab = r.multiply(unit_vector(n, a), unit_vector(n, b));
            for (std::size_t k = 0; k < n; ++k) {
                Vector bk = r.multiply(unit_vector(n, b), unit_vector(n, k));
                if (r.multiply(ab, unit_vector(n, k)) != r.multiply(unit_vector(n, a), bk))
                    return false;
            }
        }
    return true;
}

std::vector<LawViolation> bimodule_law_check(const TransferredRing& r, bool symmetric_law)
{
    const Coalgebra& c = r.coalgebra();
    const std::size_t n = c.dim();
    std::vector<LawViolation> out;
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix& lk = c.left_hit_matrix(k);
        const Matrix& rk = c.right_hit_matrix(k);
        for (std::size_t a = 0; a < n; ++a) {
            Vector x = unit_vector(n, a);
            for (std::size_t b = 0; b < n; ++b) {
                Vector y = unit_vector(n, b);
                Vector xy = r.multiply(x, y);
                if (r.multiply(lk * x, y) != lk * xy)
                    out.push_back({"(c*.x)oy = c*.(xoy)", a, b, k});
                if (r.multiply(x, rk * y) != rk * xy)
                    out.push_back({"xo(y.c*) = (xoy).c*", a, b, k});
                if (symmetric_law && r.multiply(rk * x, y) != r.multiply(x, lk * y))
                    out.push_back({"(x.c*)oy = xo(c*.y)", a, b, k});
            }
        }
    }
    return out;
}

bool alpha_is_ring_isomorphism(const TransferredRing& r)
{
    const std::size_t n = r.identity.size();
    DualAlgebra a = dual_algebra(r.coalgebra());
    const Matrix& al = r.cert.alpha;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector x = unit_vector(n, i), y = unit_vector(n, j);
            if (al * r.multiply(x, y) != a.multiply(al * x, al * y))
                return false;
        }
    return true;
}

IdealCoidealReport ideal_coideal_check(const TransferredRing& r, const Subspace& s)
{
    const Coalgebra& c = r.coalgebra();
    const std::size_t n = c.dim();
    if (s.ambient_dim() != n)
        throw InvalidInput("ideal_coideal_check: subspace ambient dimension does not match coalgebra");
    IdealCoidealReport rep;
    rep.left_ideal = rep.right_ideal = true;
    for (const auto& v : s.vectors())
        for (std::size_t a = 0; a < n; ++a) {
            Vector ea = unit_vector(n, a);
            if (rep.left_ideal && !s.contains(r.multiply(ea, v)))
                rep.left_ideal = false;
            if (rep.right_ideal && !s.contains(r.multiply(v, ea)))
                rep.right_ideal = false;
        }
    rep.left_coideal = is_coideal(c, s, CoidealSide::left);
    rep.right_coideal = is_coideal(c, s, CoidealSide::right);
    return rep;
}

}  // namespace cofrob

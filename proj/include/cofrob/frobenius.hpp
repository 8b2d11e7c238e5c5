#pragma once

#include <vector>

#include "cofrob/coalgebra.hpp"
#include "cofrob/search.hpp"

namespace cofrob {

/// Bilinear form on a coalgebra, gram(i, j) = B(c_i, c_j).
struct BilinearForm {
    Coalgebra coalgebra;
    Matrix gram;

    Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, gram * y); }
    bool is_symmetric() const { return gram.is_symmetric(); }
    bool is_nondegenerate() const { return !det(gram).is_zero(); }
};

/// B(x . c*, y) = B(x, c* . y) for all basis x, y and dual basis c*.
bool is_balanced(const BilinearForm& b);

/// A nondegenerate balanced form together with the module maps it induces.
/// Matrices act on coordinate columns; a dual vector is written in the dual
/// basis.
struct FrobeniusCertificate {
    BilinearForm form;
    Matrix alpha;      // alpha(y)(x) = B(x, y); left C*-linear. Equals gram.
    Matrix beta;       // beta(x)(y) = B(x, y); right C*-linear. Equals gram^T.
    Matrix alpha_inv;
    Vector identity;   // alpha^-1(eps), the unit of the transferred ring

    const Coalgebra& coalgebra() const { return form.coalgebra; }
};

/// Throws InvalidInput if the form is degenerate or not balanced.
FrobeniusCertificate make_certificate(const BilinearForm& b);

/// x o y = alpha(x) . y  (left hit by the functional alpha(x)).
Vector circ(const FrobeniusCertificate& cert, const Vector& x, const Vector& y);

/// alpha(c* . y) = c* alpha(y) for all basis c*, y.
bool alpha_is_left_linear(const FrobeniusCertificate& cert);
bool alpha_is_right_linear(const FrobeniusCertificate& cert);
/// beta(x . c*) = beta(x) c*.
bool beta_is_right_linear(const FrobeniusCertificate& cert);

/// Basis of the space of balanced forms. Only algebra generators of C* are
/// imposed, which cuts the system from n^3 to (#generators) n^2 equations.
std::vector<BilinearForm> balanced_form_space(const Coalgebra& c);
/// Balanced forms with symmetric Gram matrix.
std::vector<BilinearForm> symmetric_balanced_form_space(const Coalgebra& c);
/// A small set of dual vectors generating C* as an algebra (with eps).
std::vector<Vector> dual_algebra_generators(const Coalgebra& c);

/// A nondegenerate member of span(forms), restricted to symmetric forms if
/// asked.
Decision<BilinearForm> find_nondegenerate(const std::vector<BilinearForm>& forms, bool symmetric_only,
                                          const SearchOptions& opts = {});

Decision<FrobeniusCertificate> is_cofrobenius(const Coalgebra& c, const SearchOptions& opts = {});
Decision<BilinearForm> is_symmetric(const Coalgebra& c, const SearchOptions& opts = {});

/// A cocommutative e with e . C* = C, found by the same pencil search.
Decision<Vector> cocommutative_generator(const Coalgebra& c, const SearchOptions& opts = {});
/// span{e . c^k} = C.
bool generates_as_right_module(const Coalgebra& c, const Vector& e);

/// f(x) = B(x, e) with e the identity of (C, o). Requires a symmetric form.
Vector trace_map(const FrobeniusCertificate& cert);

struct TraceMapReport {
    bool commutes_with_circ = false;   // f(x o y) = f(y o x)
    bool hit_invariant = false;        // f(c* . x) = f(x . c*)
    bool no_right_coideal_in_kernel = false;
    bool no_left_coideal_in_kernel = false;
    bool ok() const
    {
        return commutes_with_circ && hit_invariant && no_right_coideal_in_kernel && no_left_coideal_in_kernel;
    }
};
TraceMapReport check_trace_map(const FrobeniusCertificate& cert, const Vector& f);

/// Largest right (left) coideal contained in ker f.
Subspace largest_right_coideal_in_kernel(const Coalgebra& c, const Vector& f);
Subspace largest_left_coideal_in_kernel(const Coalgebra& c, const Vector& f);

}  // namespace cofrob

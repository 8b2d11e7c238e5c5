#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofrob/frobenius.hpp"

namespace cofrob {

/// Finite-dimensional Hopf algebra on one basis: coalgebra and algebra
/// structure constants plus the antipode (column i holds S(c_i)).
struct HopfAlgebra {
    Coalgebra coalgebra;
    Algebra algebra;
    Matrix antipode;

    const std::string& name() const { return coalgebra.name(); }
    std::size_t dim() const { return coalgebra.dim(); }
    Matrix s2() const { return antipode * antipode; }
};

/// Coalgebra and algebra axioms, Delta and eps multiplicative and unital,
/// and S(h_1) h_2 = eps(h) 1 = h_1 S(h_2).
AxiomReport validate(const HopfAlgebra& h);

/// H* on the dual basis: convolution product, coproduct dual to the product
/// of H, antipode S^T.
HopfAlgebra dual_hopf(const HopfAlgebra& h, std::string name);

/// Integrals on H (functionals, in H*) and in H (elements). Each line is a
/// Subspace, so its stored basis vector has leading coordinate 1.
struct IntegralData {
    Subspace left_on, right_on;
    Subspace left_in, right_in;
    bool unimodular_on = false;
    bool unimodular_in = false;
};
IntegralData integrals(const HopfAlgebra& h);

/// Gram matrix of D(x, y) = t(x S(y)).
Matrix integral_gram(const HopfAlgebra& h, const Vector& t);
/// Certificate for D with t a nonzero two-sided integral on H. Asserts that
/// t o S = t and that the Nakayama automorphism of D is S^2.
FrobeniusCertificate form_from_integral(const HopfAlgebra& h, const Vector& t);

struct HopfSymmetry {
    bool unimodular_on = false;
    Decision<Vector> inner;                 // u in U(H*) with S^2(h) = u^-1 . h . u
    SearchStatus verdict = SearchStatus::inconclusive;
    std::optional<Matrix> form;             // t((u^-1 . x) S(y)) when symmetric
    bool form_symmetric = false;
    bool form_nondegenerate = false;
    bool form_balanced = false;
    SearchStatus direct = SearchStatus::inconclusive;  // is_symmetric on the coalgebra
    bool agrees() const { return verdict == direct; }
};
HopfSymmetry hopf_symmetric_coalgebra(const HopfAlgebra& h, const SearchOptions& opts = {});

/// Invertible g in H with x g = g S^2(x), i.e. S^2 = conjugation by g^-1.
Decision<Vector> s2_inner_in_H(const HopfAlgebra& h, const SearchOptions& opts = {});

struct AlgebraSymmetry {
    bool unimodular_in = false;
    Decision<Vector> s2_inner;
    SearchStatus criterion = SearchStatus::inconclusive;  // unimodular_in and S^2 inner
    SearchStatus direct = SearchStatus::inconclusive;     // symmetric form on the algebra
    bool agrees() const { return criterion == direct; }
};
/// The direct verdict runs the coalgebra decision on the dual coalgebra of
/// the algebra of H.
AlgebraSymmetry symmetric_as_algebra(const HopfAlgebra& h, const SearchOptions& opts = {});

/// X ^ Y = Delta^-1(X (x) C + C (x) Y).
Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y);

struct AInfinity {
    Subspace space;
    std::size_t steps = 0;           // first n with ^n A = ^(n+1) A
    std::vector<std::size_t> trace;  // dim ^1 A, dim ^2 A, ...
};
/// Throws InvalidInput when `a` is not a subcoalgebra.
AInfinity a_infinity(const Coalgebra& c, const Subspace& a);

/// k.1 as a subspace of H.
Subspace unit_line(const HopfAlgebra& h);

struct HopfSubspaceReport {
    bool unit = false;
    bool mult = false;
    bool subcoalgebra = false;  // closed under Delta (eps is automatic)
    bool antipode = false;
    bool ok() const { return unit && mult && subcoalgebra && antipode; }
};
HopfSubspaceReport hopf_subalgebra_check(const HopfAlgebra& h, const Subspace& k);

/// H_infinity = (k.1)_infinity with its Hopf-subalgebra checks.
struct HInfinity {
    AInfinity a;
    HopfSubspaceReport closure;
};
HInfinity h_infinity(const HopfAlgebra& h);

/// Throws InvalidInput when `a` is not a subcoalgebra.
bool s2_preserves_subcoalgebra(const HopfAlgebra& h, const Subspace& a);

/// K as a Hopf algebra on the reduced basis of the subspace. Throws
/// InvalidInput when the subspace is not a Hopf subalgebra.
HopfAlgebra restrict_hopf(const HopfAlgebra& h, const Subspace& k, std::string name);

/// For u in U(H*) with S^2 = u^-1 . - . u, checks that v = i*(u) is a unit
/// of K* conjugating S_K^2 the same way, and that v^-1 = i*(u^-1).
struct RestrictionReport {
    Vector v;
    bool v_invertible = false;
    bool inverse_restricts = false;
    bool conjugates = false;
    bool ok() const { return v_invertible && inverse_restricts && conjugates; }
};
RestrictionReport restrict_inner_unit(const HopfAlgebra& h, const Subspace& k, const Vector& u);

}  // namespace cofrob

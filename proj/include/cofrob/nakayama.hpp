#pragma once

#include "cofrob/frobenius.hpp"

namespace cofrob {

/// sigma with alpha(x) = beta(sigma(x)) for all x, i.e.
/// B(y, x) = B(sigma(x), y). For a Gram matrix M this is sigma = (M^T)^-1 M.
struct NakayamaAuto {
    FrobeniusCertificate cert;
    Matrix sigma;
    Matrix sigma_inv;
};

/// Solves for sigma and asserts the defining relation, bijectivity and that
/// sigma is an automorphism of (C, o). Throws TheoremViolation on failure.
NakayamaAuto nakayama(const FrobeniusCertificate& cert);

/// beta(x) = alpha(tau(x)); tau is the inverse of sigma.
Matrix nakayama_tau(const FrobeniusCertificate& cert);

bool is_ring_automorphism(const FrobeniusCertificate& cert, const Matrix& map);

/// For two nondegenerate balanced forms B, B' on the same coalgebra: the
/// unit u of C* with alpha^-1 alpha'(x) = x . u, and the checks that
/// B'(x, y) = B(x, y . u) and sigma'(y) = sigma(u^-1 . y . u).
struct FormComparison {
    Vector u;
    Vector u_inv;
    bool form_relation = false;
    bool conjugation_law = false;
};
FormComparison compare_forms(const FrobeniusCertificate& first, const FrobeniusCertificate& second);

/// Matrix of y -> u^-1 . y . u.
Matrix inner_action(const Coalgebra& c, const Vector& u, const Vector& u_inv);

/// The u in C* solving u . map(x) = x . u for all x (a linear condition).
std::vector<Vector> inner_dual_solutions(const Coalgebra& c, const Matrix& map);
/// An invertible u in C* with map(x) = u^-1 . x . u, searched like a
/// nondegenerate form with invertibility read off the regular
/// representation of C*.
Decision<Vector> find_inner_dual(const Coalgebra& c, const Matrix& map, const SearchOptions& opts = {});

/// Whether sigma is inner; present exactly when C is symmetric.
Decision<Vector> is_inner(const NakayamaAuto& na, const SearchOptions& opts = {});

}  // namespace cofrob

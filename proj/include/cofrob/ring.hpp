#pragma once

#include <string>
#include <vector>

#include "cofrob/frobenius.hpp"

namespace cofrob {

/// (C, o) with x o y = sum alpha(x)(y_2) y_1. In finite dimension the local
/// units of this ring collapse to a single identity e = alpha^-1(eps).
struct TransferredRing {
    FrobeniusCertificate cert;
    Tensor3 mult;      // c_a o c_b = sum_k mult(a, b, k) c_k
    Vector identity;

    const Coalgebra& coalgebra() const { return cert.coalgebra(); }
    Vector multiply(const Vector& x, const Vector& y) const;
};

/// The alpha-side table, x o y = alpha(x) . y.
Tensor3 circ_table(const FrobeniusCertificate& cert);
/// The beta-side table, x (.) y = sum alpha(x_1)(y) x_2, computed without
/// going through alpha^-1.
Tensor3 odot_table(const FrobeniusCertificate& cert);

/// Builds the ring and asserts that both tables agree, that the product is
/// associative and that e is a two-sided identity. Throws TheoremViolation
/// otherwise.
TransferredRing build_ring(const FrobeniusCertificate& cert);

struct LawViolation {
    std::string law;
    std::size_t a, b, k;
};

/// (c* . x) o y = c* . (x o y) and x o (y . c*) = (x o y) . c* over all
/// basis triples; with `symmetric_law` also (x . c*) o y = x o (c* . y).
std::vector<LawViolation> bimodule_law_check(const TransferredRing& r, bool symmetric_law = false);

/// alpha(x o y) = alpha(x) alpha(y) in C*.
bool alpha_is_ring_isomorphism(const TransferredRing& r);
bool is_associative(const TransferredRing& r);

struct IdealCoidealReport {
    bool left_ideal = false;    // C o I in I
    bool right_ideal = false;   // I o C in I
    bool left_coideal = false;  // delta(I) in C (x) I
    bool right_coideal = false; // delta(I) in I (x) C
    /// Left ideals are exactly the right coideals, and right ideals the left
    /// coideals.
    bool consistent() const { return left_ideal == right_coideal && right_ideal == left_coideal; }
};
IdealCoidealReport ideal_coideal_check(const TransferredRing& r, const Subspace& s);

}  // namespace cofrob

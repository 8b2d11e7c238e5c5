#pragma once

#include <string>
#include <vector>

#include "cofrob/hopf.hpp"

namespace cofrob::corpus {

/// g, x with Delta g = g (x) g, Delta x = g (x) x + x (x) g (dual of k[x]/(x^2)).
Coalgebra dual_numbers();
/// Dual coalgebra of A_q = k<x, y>/(x^2, y^2, yx - q^-1 xy), basis 1, x, y, xy.
Algebra lam_algebra(const Scalar& q);
Coalgebra lam_dual(const Scalar& q);
/// Dual of k[x, y]/(x, y)^2; not co-Frobenius.
Coalgebra square_zero_dual();
/// Path coalgebra of a -> b; not co-Frobenius.
Coalgebra path_a2();

/// Group algebra from a multiplication table over indices 0..n-1, with
/// the identity at index 0.
HopfAlgebra group_algebra(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<std::size_t>>& table);
HopfAlgebra cyclic_group_algebra(std::size_t n);
HopfAlgebra klein_group_algebra();
/// Elements of S_3 in the order e, (12), (13), (23), (123), (132).
HopfAlgebra s3_group_algebra();
/// Function algebra k^G as the dual Hopf algebra of kG.
HopfAlgebra function_algebra(const HopfAlgebra& group, std::string name);
/// Sweedler's 4-dimensional Hopf algebra on 1, g, x, gx.
HopfAlgebra sweedler();

/// Functions on S_3 constant on cosets of A_3, as a subspace of k^{S_3}.
Subspace s3_sign_quotient_functions(const HopfAlgebra& k_s3);

struct Entry {
    Coalgebra coalgebra;
    bool expect_cofrobenius;
    bool expect_symmetric;
};
/// Coalgebra instances (Hopf ones included through their coalgebras).
std::vector<Entry> coalgebras();
std::vector<HopfAlgebra> hopf_algebras();

/// Lookup by name over both lists; throws InvalidInput when unknown.
Coalgebra coalgebra_by_name(const std::string& name);
HopfAlgebra hopf_by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace cofrob::corpus

#pragma once

#include <string>
#include <string_view>

#include "cofrob/coextension.hpp"
#include "cofrob/hopf.hpp"

namespace cofrob::exchange {

/// JSON documents. Every scalar is a string "p/q" (or "p"); structure
/// constants are index quadruples with a scalar last:
///   coalgebra  delta [i, j, k, s] (c_j (x) c_k in Delta c_i), counit [s...]
///   hopf       coalgebra fields + mult [a, b, k, s], unit [s...],
///              antipode: row i holds S(c_i)
///   algebra    mult, unit
///   comodule   parent, coaction [a, b, k, s] (m_b (x) c_k in rho m_a)
///   bicomodule parent, left_coaction [a, k, b, s], right_coaction [a, b, k, s]
///   subspace   parent, ambient_dim, basis (rows)
/// Parsing checks the axioms unless told otherwise and throws InvalidInput
/// listing the violations; malformed text throws ParseError with a
/// line:column or field-path location.

std::string kind_of(std::string_view text);

Coalgebra parse_coalgebra(std::string_view text, bool check_axioms = true);
HopfAlgebra parse_hopf(std::string_view text, bool check_axioms = true);
Algebra parse_algebra(std::string_view text, bool check_axioms = true);
Comodule parse_comodule(std::string_view text, const Coalgebra& parent, bool check_axioms = true);
Bicomodule parse_bicomodule(std::string_view text, const Coalgebra& parent, bool check_axioms = true);
Subspace parse_subspace(std::string_view text, const Coalgebra& parent);

std::string emit(const Coalgebra& c);
std::string emit(const HopfAlgebra& h);
std::string emit(const Algebra& a);
std::string emit(const Comodule& m);
std::string emit(const Bicomodule& m);
std::string emit(const Subspace& s, const Coalgebra& parent);

}  // namespace cofrob::exchange

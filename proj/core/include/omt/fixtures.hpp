#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "omt/lattice.hpp"
#include "omt/proposition.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt::fixtures {

/// {0 < 1}
LatticeSpec chain2_spec();
/// Four-element Boolean algebra {0, a, a', 1}.
LatticeSpec boolean2_spec();
/// Eight-element Boolean algebra with atoms a, b, c.
LatticeSpec boolean3_spec();
/// MO2: four pairwise incomparable atoms a, a', b, b'.
LatticeSpec mo2_spec();
/// Ten-element orthomodular lattice with atoms a, b, c, d, d'.
LatticeSpec fig1_spec();
/// Hexagon 0 < x < y < 1, 0 < y' < x' < 1: an ortholattice that is not
/// orthomodular.
LatticeSpec o6_spec();

std::vector<std::string> lattice_names();
/// Throws Error(InvalidSpec) for an unknown name.
LatticeSpec lattice_spec(std::string_view name);
Oml lattice(std::string_view name);

/// ({1..n}, <=)
inline TimeFrame le(std::size_t n) { return chain_frame(n, "le"); }

/// p = (c', b', c', a', b') and q = (a, b', d, a, a') on the ten-element
/// lattice over five points.
Proposition example_p(const Oml& fig1);
Proposition example_q(const Oml& fig1);

/// P(q)(t) = q(t) if t = 2 else 1, F(q)(t) = q(t) if t = 1 else 1,
/// H(q)(t) = q(t) if t = 1 else 0, G(q)(t) = q(t) if t = 2 else 0,
/// over n >= 2 points. Not induced by any frame.
OperatorQuadruple rule_quadruple(const Oml& L, std::size_t n);

}  // namespace omt::fixtures

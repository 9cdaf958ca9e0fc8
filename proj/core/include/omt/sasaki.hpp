#pragma once

#include "omt/element.hpp"
#include "omt/proposition.hpp"

namespace omt {

class Oml;

// Connectives derived from the Sasaki projection. All of them need the
// orthocomplementation and throw Error(NoOrtho) without it.

/// x (.) y = (x v y') ^ y
Element sasaki_and(const Oml& L, Element x, Element y);
/// x -> y = (y ^ x) v x'
Element sasaki_imp(const Oml& L, Element x, Element y);
/// p_y(x) = (x v y') ^ y, the projection onto [0, y].
Element sasaki_projection(const Oml& L, Element y, Element x);

// Lifted to propositions one time point at a time.
Proposition prop_sasaki_and(const Oml& L, const Proposition& x, const Proposition& y);
Proposition prop_sasaki_imp(const Oml& L, const Proposition& x, const Proposition& y);

}  // namespace omt

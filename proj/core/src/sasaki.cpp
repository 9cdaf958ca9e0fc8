#include "omt/sasaki.hpp"

#include "omt/error.hpp"
#include "omt/lattice.hpp"

namespace omt {

Element sasaki_and(const Oml& L, Element x, Element y) { return L.meet(L.join(x, L.complement(y)), y); }

Element sasaki_imp(const Oml& L, Element x, Element y) { return L.join(L.meet(y, x), L.complement(x)); }

Element sasaki_projection(const Oml& L, Element y, Element x) { return sasaki_and(L, x, y); }

namespace {

template <class Op>
Proposition pointwise(const Oml& L, const Proposition& x, const Proposition& y, Op op) {
  if (x.size() != y.size()) throw Error(ErrorKind::Incompatible, "propositions over different time sets");
  Proposition out = x;
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = op(L, x[t], y[t]);
  return out;
}

}  // namespace

Proposition prop_sasaki_and(const Oml& L, const Proposition& x, const Proposition& y) {
  return pointwise(L, x, y, sasaki_and);
}

Proposition prop_sasaki_imp(const Oml& L, const Proposition& x, const Proposition& y) {
  return pointwise(L, x, y, sasaki_imp);
}

}  // namespace omt

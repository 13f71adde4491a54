#include "inrl/properties.hpp"

#include <algorithm>

#include "inrl/report.hpp"

namespace inrl {

namespace {

PropertyVerdict verdict(Witness w) {
  PropertyVerdict v;
  v.holds = !w.has_value();
  v.witness = std::move(w);
  return v;
}

}  // namespace

PropertyVerdict check_distributive_semilattice(std::size_t n, std::span<const Elem> meet) {
  const auto m = [&](Elem x, Elem y) { return meet[x * n + y]; };
  std::vector<std::vector<Elem>> up(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (m(x, y) == x) up[x].push_back(y);

  std::vector<bool> reach(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::fill(reach.begin(), reach.end(), false);
      for (Elem xp : up[x])
        for (Elem yp : up[y]) reach[m(xp, yp)] = true;
      for (Elem z = 0; z < n; ++z)
        if (m(m(x, y), z) == m(x, y) && !reach[z]) return verdict(std::vector<Elem>{x, y, z});
    }
  return verdict(std::nullopt);
}

PropertyVerdict is_distributive_semilattice(const FiniteInRL& alg) {
  return check_distributive_semilattice(alg.size(), alg.fusion_table());
}

PropertyVerdict is_lattice_distributive(const FiniteInRL& alg) {
  return verdict(first_failing_triple(alg.size(), [&](Elem x, Elem y, Elem z) {
    return alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z));
  }));
}

PropertyVerdict is_semilinear(const FiniteInRL& alg) {
  const Elem one = alg.one();
  return verdict(first_failing_pair(alg.size(), [&](Elem x, Elem y) {
    return alg.join(alg.meet(alg.residual(x, y), one), alg.meet(alg.residual(y, x), one)) == one;
  }));
}

}  // namespace inrl

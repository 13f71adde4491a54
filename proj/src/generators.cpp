#include "inrl/generators.hpp"

#include <string>

#include "inrl/errors.hpp"

namespace inrl {

namespace {

std::string sub(const char* stem, std::size_t i) { return stem + std::to_string(i); }

}  // namespace

FiniteInRL boolean_algebra(std::size_t k, std::size_t cap) {
  if (k >= 63 || (std::size_t{1} << k) > cap)
    throw CapExceeded("Boolean algebra with " + std::to_string(k) + " atoms exceeds the size cap of " +
                      std::to_string(cap));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names(n);
  if (k == 0) {
    names[0] = "1";
  } else if (k == 1) {
    names = {"0", "1"};
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t bit = k; bit-- > 0;) names[i] += ((i >> bit) & 1U) ? '1' : '0';
  }
  std::vector<Elem> join(n * n), fusion(n * n), neg(n);
  for (std::size_t x = 0; x < n; ++x) {
    neg[x] = static_cast<Elem>(~x & (n - 1));
    for (std::size_t y = 0; y < n; ++y) {
      join[x * n + y] = static_cast<Elem>(x | y);
      fusion[x * n + y] = static_cast<Elem>(x & y);
    }
  }
  return FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg),
                    static_cast<Elem>(n - 1));
}

FiniteInRL block_algebra(std::size_t i) {
  return boolean_algebra(2).renamed({sub("0_", i), sub("x_", i), sub("-x_", i), sub("1_", i)});
}

FamilySchedule an_schedule(std::size_t n) {
  FamilySchedule s{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + 1;
    if (i % 2 == 0)
      s.steps.push_back({sub("x_", i), sub("-x_", j), {{sub("1_", i), sub("-x_", j)}, {sub("x_", i), sub("0_", j)}}});
    else
      s.steps.push_back({sub("-x_", i), sub("x_", j), {{sub("1_", i), sub("x_", j)}, {sub("-x_", i), sub("0_", j)}}});
  }
  s.steps.push_back({sub("1_", n), "0", {{sub("1_", n), "0"}}});
  return s;
}

FiniteInRL build_an(std::size_t n, std::size_t cap) {
  if (n > (cap - 6) / 4 || cap < 6)
    throw CapExceeded("A_" + std::to_string(n) + " exceeds the size cap of " + std::to_string(cap));
  const FamilySchedule s = an_schedule(n);
  FiniteInRL acc = block_algebra(0);
  for (std::size_t i = 0; i <= n; ++i) {
    FiniteInRL upper = i < n ? block_algebra(i + 1) : boolean_algebra(1);
    try {
      acc = glue(resolve(std::move(acc), std::move(upper), s.steps[i])).result;
    } catch (const GluingError& e) {
      throw InternalError("A_" + std::to_string(n) + " step " + std::to_string(i) + ": " + e.what());
    }
  }
  return acc;
}

Report verify_an_identities(const FiniteInRL& an, std::size_t n) {
  const Elem one = an.one();
  Report r;
  Witness top, bottom, x, negx;
  for (std::size_t j = 1; j <= n; ++j) {
    // Odd steps of the schedule glue on the other side, so for even j the
    // x and -x of both levels trade places.
    const bool flip = j % 2 == 0;
    const Elem xp = an.at(sub(flip ? "-x_" : "x_", j - 1));
    const Elem nxp = an.at(sub(flip ? "x_" : "-x_", j - 1));
    const Elem xj = an.at(sub(flip ? "-x_" : "x_", j));
    const Elem nxj = an.at(sub(flip ? "x_" : "-x_", j));
    const Elem oj = an.at(sub("1_", j));
    const Elem zj = an.at(sub("0_", j));
    const std::vector<Elem> w{static_cast<Elem>(j)};
    if (!top && oj != an.join(nxp, one)) top = w;
    if (!bottom && zj != an.meet(xp, one)) bottom = w;
    if (!x && xj != an.meet(xp, oj)) x = w;
    if (!negx && nxj != an.join(nxp, zj)) negx = w;
  }
  r.add("top-from-previous", top, {"j"});
  r.add("bottom-from-previous", bottom, {"j"});
  r.add("x-from-previous", x, {"j"});
  r.add("neg-x-from-previous", negx, {"j"});
  return r;
}

}  // namespace inrl

#include "fixtures.hpp"

#include "inrl/io.hpp"

namespace fixtures {

std::filesystem::path dir() { return INRL_FIXTURE_DIR; }

std::filesystem::path path(const std::string& name) { return dir() / name; }

inrl::FiniteInRL load(const std::string& name) { return inrl::parse_algebra(inrl::read_text(path(name))); }

inrl::FiniteInRL a1() { return load("a1.rlat"); }

inrl::GluingSpec five_block_spec() {
  inrl::NamedGluing g{"a", "b", {{"1_u", "b"}, {"u", "0_b"}, {"1_a", "v"}, {"a", "0_v"}}};
  return inrl::resolve(load("five_block_lower.rlat"), load("five_block_upper.rlat"), g);
}

const inrl::Corpus& corpus6() {
  static const inrl::Corpus c = inrl::enumerate_up_to_iso(6);
  return c;
}

}  // namespace fixtures

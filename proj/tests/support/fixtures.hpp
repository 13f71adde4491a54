#pragma once

#include <filesystem>
#include <string>

#include "inrl/algebra.hpp"
#include "inrl/enumeration.hpp"
#include "inrl/gluing.hpp"

namespace fixtures {

std::filesystem::path dir();
std::filesystem::path path(const std::string& name);
inrl::FiniteInRL load(const std::string& name);

/// The ten-element algebra A_1.
inrl::FiniteInRL a1();

/// The two twelve-element factors of the gluing example and their spec.
inrl::GluingSpec five_block_spec();

/// Every member of size at most 6, computed once per process.
const inrl::Corpus& corpus6();

}  // namespace fixtures

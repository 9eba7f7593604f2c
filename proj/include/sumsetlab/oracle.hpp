#pragma once

#include <cstdint>

#include "sumsetlab/basis.hpp"

namespace sumsetlab {

/// Whether n is a sum of exactly h elements of `spec`, by direct descending
/// search over the elements <= n. Does not touch the bitmap engine; tests use
/// it as the reference for `hfold`.
bool oracle_hfold_membership(std::uint64_t n, const BasisSpec& spec, std::uint32_t h);

}  // namespace sumsetlab

#pragma once

#include <cstddef>
#include <cstdint>

#include "eafkit/dataio.hpp"

namespace eafkit {

/// Demo data: S runs of N uniform samples in [-5, 5]^dim, scored with
///   f1(x) = sum_d x_d^2,   f2(x) = sum_d (x_d - 2)^2.
///
/// Uniforms come from std::mt19937_64 (fully specified by the standard) as
/// (draw >> 11) * 2^-53, consumed in run, sample, dimension order, so output
/// is identical on every platform. Throws ValidationError for zero sizes.
RunArchive synthesize_runs(std::uint64_t seed, std::size_t runs, std::size_t samples, std::size_t dim);

}  // namespace eafkit

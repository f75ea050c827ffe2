#pragma once

// Batched pumping kernels.  Each kernel has a scalar reference and, on x86-64,
// an AVX2 variant; the variant is picked once at runtime from the CPU features
// (override with MEPNET_SIMD=scalar|avx2).  All variants produce bit-identical
// output, which keeps experiment CSVs independent of the host.

#include "mepnet/entanglement.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mepnet::kernels
{

enum class Isa
{
    kScalar,
    kAvx2,
};

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();

/// Force a variant. Throws std::invalid_argument if the CPU lacks it.
void set_active_isa(Isa isa);

struct FoldOptions
{
    PumpModel model{PumpModel::kBellDiagonal};
    bool adaptive_skip{false};  // drop pump steps that would lower the concurrence
};

/// out[i] = pump_step(q[i], q_prime[i]) on raw noise values.
void pump_step_batch(std::span<const double> q,
                     std::span<const double> q_prime,
                     std::span<double> out);

/// out[i] = pump_concurrence(c1[i], c2[i]).
void pump_concurrence_batch(std::span<const double> c1,
                            std::span<const double> c2,
                            std::span<double> out);

/*
 * Sequential pumping for many S-D pairs at once.
 *
 * `paths` is slot-major: paths[slot * n + i] is the concurrence of the path
 * pumped at step `slot` for pair i, with n = out.size().  Pair i uses the
 * first counts[i] slots (1 <= counts[i] <= slots); remaining slots are ignored.
 * */
void pump_fold_batch(std::span<const double> paths,
                     std::size_t slots,
                     std::span<const std::int32_t> counts,
                     std::span<double> out,
                     FoldOptions options = {});

}  // namespace mepnet::kernels

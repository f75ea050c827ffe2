#pragma once

#include "mepnet/kernels.hpp"

namespace mepnet::kernels
{

namespace scalar
{

void pump_step(const double* q, const double* qp, double* out, std::size_t n);
void pump_concurrence(const double* c1, const double* c2, double* out, std::size_t n);
void pump_fold(const double* paths, std::size_t slots, const std::int32_t* counts,
               double* out, std::size_t n, FoldOptions options);

}  // namespace scalar

#if defined(MEPNET_HAVE_AVX2)
namespace avx2
{

void pump_step(const double* q, const double* qp, double* out, std::size_t n);
void pump_concurrence(const double* c1, const double* c2, double* out, std::size_t n);
void pump_fold(const double* paths, std::size_t slots, const std::int32_t* counts,
               double* out, std::size_t n, FoldOptions options);

}  // namespace avx2
#endif

}  // namespace mepnet::kernels

// Built with -mavx2 (no FMA): every lane performs the same IEEE operations,
// in the same order, as the scalar reference.

#include "kernels_impl.hpp"

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace mepnet::kernels::avx2
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

struct Bell4
{
    __m256d a;
    __m256d b;
    __m256d c;
    __m256d d;
};

inline __m256d
clamp_unit(__m256d x)
{
    // Argument order mirrors std::min(std::max(x, 0), 1).
    const __m256d lo = _mm256_max_pd(_mm256_setzero_pd(), x);
    return _mm256_min_pd(_mm256_set1_pd(1.0), lo);
}

inline __m256d
pump_rational(__m256d q, __m256d qp)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d both = _mm256_mul_pd(_mm256_sub_pd(one, q), _mm256_sub_pd(one, qp));
    const __m256d sum = _mm256_add_pd(q, qp);
    const __m256d num = _mm256_add_pd(_mm256_sub_pd(sum, one), _mm256_mul_pd(_mm256_set1_pd(10.0), both));
    const __m256d den = _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(two, sum)),
                                      _mm256_mul_pd(_mm256_set1_pd(8.0), both));
    return _mm256_div_pd(num, den);
}

inline __m256d
pump_isotropic(__m256d c1, __m256d c2)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d w1 = _mm256_mul_pd(half, _mm256_sub_pd(one, c1));
    const __m256d w2 = _mm256_mul_pd(half, _mm256_sub_pd(one, c2));
    const __m256d fidelity = clamp_unit(pump_rational(w1, w2));
    return clamp_unit(_mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), fidelity), one));
}

inline Bell4
isotropic_state(__m256d c)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d other = _mm256_div_pd(_mm256_sub_pd(one, c), _mm256_set1_pd(6.0));
    return {_mm256_mul_pd(_mm256_add_pd(one, c), _mm256_set1_pd(0.5)), other, other, other};
}

inline Bell4
deutsch_step(const Bell4& x, const Bell4& y)
{
    const __m256d norm = _mm256_add_pd(
        _mm256_mul_pd(_mm256_add_pd(x.a, x.b), _mm256_add_pd(y.a, y.b)),
        _mm256_mul_pd(_mm256_add_pd(x.c, x.d), _mm256_add_pd(y.c, y.d)));
    return {
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(x.a, y.a), _mm256_mul_pd(x.b, y.b)), norm),
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(x.c, y.d), _mm256_mul_pd(x.d, y.c)), norm),
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(x.c, y.c), _mm256_mul_pd(x.d, y.d)), norm),
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(x.a, y.b), _mm256_mul_pd(x.b, y.a)), norm),
    };
}

inline __m256d
bell_concurrence(const Bell4& s)
{
    // std::max(p, q) == (p < q) ? q : p  ==  _mm256_max_pd(q, p)
    const __m256d ab = _mm256_max_pd(s.b, s.a);
    const __m256d cd = _mm256_max_pd(s.d, s.c);
    const __m256d top = _mm256_max_pd(cd, ab);
    return clamp_unit(_mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), top), _mm256_set1_pd(1.0)));
}

inline Bell4
select(__m256d mask, const Bell4& yes, const Bell4& no)
{
    return {
        _mm256_blendv_pd(no.a, yes.a, mask),
        _mm256_blendv_pd(no.b, yes.b, mask),
        _mm256_blendv_pd(no.c, yes.c, mask),
        _mm256_blendv_pd(no.d, yes.d, mask),
    };
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

void
pump_step(const double* q, const double* qp, double* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = pump_rational(_mm256_loadu_pd(q + i), _mm256_loadu_pd(qp + i));
        _mm256_storeu_pd(out + i, clamp_unit(r));
    }
    scalar::pump_step(q + i, qp + i, out + i, n - i);
}

void
pump_concurrence(const double* c1, const double* c2, double* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, pump_isotropic(_mm256_loadu_pd(c1 + i), _mm256_loadu_pd(c2 + i)));
    scalar::pump_concurrence(c1 + i, c2 + i, out + i, n - i);
}

void
pump_fold(const double* paths, std::size_t slots, const std::int32_t* counts,
          double* out, std::size_t n, FoldOptions options)
{
    const bool bell = options.model == PumpModel::kBellDiagonal;
    const __m256d all = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i cnt32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts + i));
        const __m256i cnt = _mm256_cvtepi32_epi64(cnt32);
        const int widest = std::max(std::max(counts[i], counts[i + 1]),
                                    std::max(counts[i + 2], counts[i + 3]));
        const std::size_t used = std::min(slots, static_cast<std::size_t>(std::max(widest, 1)));

        __m256d running = _mm256_loadu_pd(paths + i);
        Bell4 state = isotropic_state(running);
        for (std::size_t s = 1; s < used; s++) {
            const __m256d active = _mm256_castsi256_pd(
                _mm256_cmpgt_epi64(cnt, _mm256_set1_epi64x(static_cast<long long>(s))));
            const __m256d fresh = _mm256_loadu_pd(paths + s * n + i);
            if (bell) {
                const Bell4 next = deutsch_step(state, isotropic_state(fresh));
                const __m256d cand = bell_concurrence(next);
                const __m256d keep = options.adaptive_skip
                    ? _mm256_cmp_pd(cand, running, _CMP_GE_OQ) : all;
                const __m256d take = _mm256_and_pd(active, keep);
                state = select(take, next, state);
                running = _mm256_blendv_pd(running, cand, take);
            } else {
                const __m256d cand = pump_isotropic(running, fresh);
                const __m256d keep = options.adaptive_skip
                    ? _mm256_cmp_pd(cand, running, _CMP_GE_OQ) : all;
                running = _mm256_blendv_pd(running, cand, _mm256_and_pd(active, keep));
            }
        }
        _mm256_storeu_pd(out + i, running);
    }

    // Tail lanes: the scalar kernel indexes slot s at paths[s * n + i], so
    // run it per pair on a gathered column.
    std::vector<double> column(slots);
    for (; i < n; i++) {
        for (std::size_t s = 0; s < slots; s++)
            column[s] = paths[s * n + i];
        scalar::pump_fold(column.data(), slots, counts + i, out + i, 1, options);
    }
}

}  // namespace mepnet::kernels::avx2

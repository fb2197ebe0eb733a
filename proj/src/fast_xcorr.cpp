#include "ccseq/analysis.hpp"
#include "ccseq/error.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <vector>

namespace ccseq {

namespace detail {

long long round_checked(double value) {
    const double nearest = std::nearbyint(value);
    if (std::abs(value - nearest) >= 0.25) {
        throw NumericalResidueTooLarge(
            "transform correlation residue " +
            std::to_string(std::abs(value - nearest)) +
            " breaches the 0.25 rounding bound");
    }
    return static_cast<long long>(nearest);
}

} // namespace detail

namespace {

// FFTW's planner is not thread-safe; executing distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwRealBuffer {
    double* data = nullptr;
    explicit FftwRealBuffer(std::size_t n)
        : data(static_cast<double*>(fftw_malloc(sizeof(double) * n))) {}
    ~FftwRealBuffer() { fftw_free(data); }
    FftwRealBuffer(const FftwRealBuffer&) = delete;
    FftwRealBuffer& operator=(const FftwRealBuffer&) = delete;
};

struct FftwComplexBuffer {
    fftw_complex* data = nullptr;
    explicit FftwComplexBuffer(std::size_t n)
        : data(static_cast<fftw_complex*>(
              fftw_malloc(sizeof(fftw_complex) * n))) {}
    ~FftwComplexBuffer() { fftw_free(data); }
    FftwComplexBuffer(const FftwComplexBuffer&) = delete;
    FftwComplexBuffer& operator=(const FftwComplexBuffer&) = delete;
};

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

} // namespace

CorrelationProfile fast_xcorr(const BinarySequence& a,
                              const BinarySequence& b) {
    const std::size_t la = a.size();
    const std::size_t lb = b.size();
    const std::size_t out_len = la + lb - 1;
    const std::size_t n = next_pow2(std::max<std::size_t>(out_len, 2));
    const std::size_t bins = n / 2 + 1;

    // Correlation as convolution of a with b reversed: the linear convolution
    // index k + lb - 1 lands exactly on profile slot k.
    FftwRealBuffer ta(n);
    FftwRealBuffer tb(n);
    FftwComplexBuffer fa(bins);
    FftwComplexBuffer fb(bins);
    for (std::size_t i = 0; i < n; ++i) {
        ta.data[i] = i < la ? static_cast<double>(a[i]) : 0.0;
        tb.data[i] = i < lb ? static_cast<double>(b[lb - 1 - i]) : 0.0;
    }

    fftw_plan forward_a = nullptr;
    fftw_plan forward_b = nullptr;
    fftw_plan backward = nullptr;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        forward_a = fftw_plan_dft_r2c_1d(static_cast<int>(n), ta.data, fa.data,
                                         FFTW_ESTIMATE);
        forward_b = fftw_plan_dft_r2c_1d(static_cast<int>(n), tb.data, fb.data,
                                         FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_1d(static_cast<int>(n), fa.data, ta.data,
                                        FFTW_ESTIMATE);
    }
    fftw_execute(forward_a);
    fftw_execute(forward_b);
    for (std::size_t i = 0; i < bins; ++i) {
        const std::complex<double> va(fa.data[i][0], fa.data[i][1]);
        const std::complex<double> vb(fb.data[i][0], fb.data[i][1]);
        const std::complex<double> prod = va * vb;
        fa.data[i][0] = prod.real();
        fa.data[i][1] = prod.imag();
    }
    fftw_execute(backward);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(forward_a);
        fftw_destroy_plan(forward_b);
        fftw_destroy_plan(backward);
    }

    const double scale = 1.0 / static_cast<double>(n);
    std::vector<long long> values(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        values[i] = detail::round_checked(ta.data[i] * scale);
    }
    return CorrelationProfile(-static_cast<long long>(lb - 1),
                              std::move(values), ProfileKind::SinglePair);
}

} // namespace ccseq

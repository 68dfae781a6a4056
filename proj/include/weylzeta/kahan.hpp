#pragma once

#include <complex>

namespace weylzeta {

// Compensated accumulator; fixed-order summation keeps results reproducible.
struct Kahan {
    double sum = 0.0, c = 0.0;
    inline void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

struct KahanC {
    Kahan re, im;
    inline void add(const std::complex<double>& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.sum, im.sum}; }
};

} // namespace weylzeta

#include "weylzeta/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "weylzeta/errors.hpp"

namespace weylzeta {

namespace {

std::vector<MultiPoly>& cache() {
    static std::vector<MultiPoly> polys = {MultiPoly(1, Rational(1))};
    return polys;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

MultiPoly bernoulli_polynomial(int k) {
    if (k < 0)
        throw input_error("Bernoulli polynomial order must be nonnegative");
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& polys = cache();
    while (static_cast<int>(polys.size()) <= k) {
        const int n = static_cast<int>(polys.size());
        MultiPoly p = polys.back().scaled(Rational(n)).antiderivative();
        p += MultiPoly(1, -p.integral01());
        polys.push_back(std::move(p));
    }
    return polys[k];
}

Rational bernoulli_number(int k) {
    return bernoulli_polynomial(k).coeff(0);
}

Rational bernoulli_at(int k, const Rational& x) {
    return bernoulli_polynomial(k).eval({x});
}

std::pair<Rational, Rational> twisted_bernoulli_sum(long l, int tau) {
    if (tau < 0)
        throw input_error("tau must be nonnegative");
    // rho^k in the basis {1, sqrt(3) i}: 1, (-1 + sqrt(3) i)/2, (-1 - sqrt(3) i)/2
    static const Rational re[3] = {Rational(1), Rational(-1, 2), Rational(-1, 2)};
    static const Rational im[3] = {Rational(0), Rational(1, 2), Rational(-1, 2)};
    Rational r(0), s(0);
    for (long a = 0; a < 3; ++a) {
        const Rational b = bernoulli_at(tau, Rational(a, 3));
        const long k = ((l * a) % 3 + 3) % 3;
        r += re[k] * b;
        s += im[k] * b;
    }
    return {r, s};
}

} // namespace weylzeta

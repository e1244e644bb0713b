#pragma once

#include <cstdint>
#include <vector>

#include "gowers/table.hpp"

namespace gowers::harmonic {

// Compensated (Kahan) accumulator; reduction results are then independent of
// how a sum is partitioned, which the 1e-10 tolerances rely on.
class KahanSum {
  public:
    void add(cplx v) {
        add_part(re_, re_c_, v.real());
        add_part(im_, im_c_, v.imag());
    }
    cplx total() const { return {re_ + re_c_, im_ + im_c_}; }

  private:
    static void add_part(double& s, double& c, double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
};

// f_hat(gamma) = E_x f(x) * conj(chi_gamma(x)); direct O(N^2) summation.
SpectrumTable fourier(const FunctionTable& f);

// f(x) = sum_gamma F(gamma) chi_gamma(x).
FunctionTable inverse_fourier(const SpectrumTable& F);

// (f * g)(x) = E_y f(y) g(x - y).
FunctionTable convolve(const FunctionTable& f, const FunctionTable& g);

// Corr_f(a) = E_x f(x) conj(f(x + a)).
cplx autocorrelation(const FunctionTable& f, const GroupVector& a);

// E_{x,h_1..h_d} prod_{w in {0,1}^d} C^{|w|} f(x + w.h)  — the 2^d-fold
// multiplicative finite-difference average. Must be real up to 1e-10 and
// >= -1e-10; anything else signals an implementation bug.
double gowers_expectation(const FunctionTable& f, std::uint32_t d);

// gowers_expectation(f, d)^(1/2^d).
double gowers_norm_bruteforce(const FunctionTable& f, std::uint32_t d);

// (sum_gamma |f_hat(gamma)|^4)^(1/4).
double gowers_u2_via_fourier(const FunctionTable& f);

// The constrained eight-fold spectrum sum for U^3, reduced to four free
// indices; returns the norm (eighth root).
double gowers_u3_via_fourier(const FunctionTable& f);

// E_{x,h} prod_w C^|w| f_w(x + w.h) with one table per vertex of {0,1}^d.
// A null slot stands for the constant-1 function.
cplx gowers_inner_product(const std::vector<const FunctionTable*>& fs, std::uint32_t d);

// E_{x,y} f(x) g(x+y) h(x+2y). Requires p >= 3. With verify set, recomputes
// through the spectrum identity sum_gamma f_hat(gamma) g_hat(-2 gamma)
// h_hat(gamma) and throws if the two routes disagree beyond 1e-10.
cplx t3(const FunctionTable& f, const FunctionTable& g, const FunctionTable& h,
        bool verify = false);

struct ApCount {
    std::uint64_t count;          // ordered (x, d) pairs, d = 0 included
    std::uint64_t nondegenerate;  // count minus the |S| pairs with d = 0
    double t_f;                   // count / N^2
};

// Exact 3-term progression count for an indicator table (values exactly 0/1).
ApCount count_3aps_exact(const FunctionTable& indicator);

} // namespace gowers::harmonic

#pragma once

// Closed-form Maass-Selberg inner product of two truncated Eisenstein series
// induced from a cusp form on a non-self-associate maximal parabolic, and the
// kernel Xi(mu, conj(mu')) of the pseudo-Eisenstein version.
//
//   <E(nu), E(nu')> = sign * {phi, psi} * exp((s + conj(s'))(H0)) / (s + conj(s'))(c)
//
// with s = nu + rho. The pairing {phi, psi} is an opaque input.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "cartan.hpp"
#include "criterion.hpp"
#include "error.hpp"
#include "roots.hpp"

namespace loopeis {

using Complex = std::complex<double>;
using ComplexFunctional = LinearFunctional<Complex>;

/// Leading sign of the inner product. negative makes the norm of a truncated
/// series positive when Re sigma(c) < 0.
enum class MSSign { negative, positive };

/// Denominator of Xi: the central value (matching the inner product formula)
/// or the literal evaluation at H0.
enum class XiDenominator { central, h0 };

struct MSOptions {
    MSSign sign = MSSign::negative;
    XiDenominator xi_denominator = XiDenominator::central;
    double pole_tolerance = 1e-12;
};

struct MSInput {
    Complex cusp_pairing{1.0, 0.0};
    ComplexFunctional sigma;
    ComplexFunctional sigma_prime;
    std::vector<double> h0;  ///< coefficients of H0 over h_1 ... h_{l+1}
};

struct MSValue {
    std::optional<Complex> value;  ///< empty at a pole
    bool pole = false;
    Complex denominator{};
};

namespace detail {

// (s + conj(s'))(h_k) for every k.
inline std::vector<Complex> conjugate_sum(const ComplexFunctional& s, const ComplexFunctional& sp) {
    if (s.size() != sp.size()) throw DimensionError("functionals of different dimension");
    std::vector<Complex> v(s.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = s.values[k] + std::conj(sp.values[k]);
    return v;
}

inline Complex evaluate_at(const std::vector<Complex>& f, const std::vector<double>& h) {
    if (f.size() != h.size()) throw DimensionError("H0 has the wrong dimension");
    Complex s{};
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k] * h[k];
    return s;
}

inline MSValue quotient(Complex numerator_factor, Complex exponent, Complex denominator, double tolerance) {
    MSValue r;
    r.denominator = denominator;
    if (std::abs(denominator) < tolerance) {
        r.pole = true;
        return r;
    }
    r.value = numerator_factor * std::exp(exponent) / denominator;
    return r;
}

} // namespace detail

inline MSValue ms_inner_product(const CartanMatrix& affine, const MSInput& in, const MSOptions& opt = {}) {
    detail::require_dimension(affine, in.sigma);
    detail::require_dimension(affine, in.sigma_prime);
    const auto f = detail::conjugate_sum(in.sigma, in.sigma_prime);
    const Complex exponent = detail::evaluate_at(f, in.h0);
    const Complex denominator = central_value(affine, ComplexFunctional(f));
    const double sign = opt.sign == MSSign::negative ? -1.0 : 1.0;
    return detail::quotient(sign * in.cusp_pairing, exponent, denominator, opt.pole_tolerance);
}

/// Xi(mu, conj(mu')) = {phi, psi} exp((mu + conj(mu'))(H0)) / (mu + conj(mu'))(c or H0).
inline MSValue xi_kernel(const CartanMatrix& affine, Complex cusp_pairing, const ComplexFunctional& mu,
                         const ComplexFunctional& mu_prime, const std::vector<double>& h0, const MSOptions& opt = {}) {
    detail::require_dimension(affine, mu);
    detail::require_dimension(affine, mu_prime);
    const auto f = detail::conjugate_sum(mu, mu_prime);
    const Complex exponent = detail::evaluate_at(f, h0);
    const Complex denominator =
        opt.xi_denominator == XiDenominator::central ? central_value(affine, ComplexFunctional(f)) : exponent;
    return detail::quotient(cusp_pairing, exponent, denominator, opt.pole_tolerance);
}

struct ScanPoint {
    std::size_t nu_index = 0;
    std::size_t nu_prime_index = 0;
    ComplexFunctional nu;
    ComplexFunctional nu_prime;
    Complex sigma_c{};
    Complex sigma_prime_c{};
    bool convergent = false;   ///< Re nu(c) < -2g and Re nu'(c) < -2g
    bool continued = false;    ///< Re sigma(c) < 0 and Re sigma'(c) < 0
    bool holomorphic_side = false;  ///< Re sigma(c) + Re sigma'(c) < 0
    MSValue value;
};

struct ScanReport {
    std::vector<ScanPoint> points;  ///< row-major in (nu index, nu' index)
    std::size_t pole_count = 0;
    std::size_t poles_on_holomorphic_side = 0;
};

/// Evaluates the inner product on every pair (nu, nu') of the two grids.
inline ScanReport region_scan(const CartanMatrix& affine, const std::vector<ComplexFunctional>& nus,
                              const std::vector<ComplexFunctional>& nu_primes, const std::vector<double>& h0,
                              Complex cusp_pairing = {1.0, 0.0}, const MSOptions& opt = {}) {
    ScanReport report;
    const auto g = static_cast<double>(dual_coxeter(affine.finite_part()));
    for (std::size_t a = 0; a < nus.size(); ++a) {
        for (std::size_t b = 0; b < nu_primes.size(); ++b) {
            ScanPoint p;
            p.nu_index = a;
            p.nu_prime_index = b;
            p.nu = nus[a];
            p.nu_prime = nu_primes[b];
            const MSInput in{cusp_pairing, sigma(nus[a], affine), sigma(nu_primes[b], affine), h0};
            p.sigma_c = central_value(affine, in.sigma);
            p.sigma_prime_c = central_value(affine, in.sigma_prime);
            p.convergent = (p.sigma_c.real() - g) < -2 * g && (p.sigma_prime_c.real() - g) < -2 * g;
            p.continued = p.sigma_c.real() < 0 && p.sigma_prime_c.real() < 0;
            p.holomorphic_side = p.sigma_c.real() + p.sigma_prime_c.real() < 0;
            p.value = ms_inner_product(affine, in, opt);
            if (p.value.pole) {
                ++report.pole_count;
                if (p.holomorphic_side) ++report.poles_on_holomorphic_side;
            }
            report.points.push_back(std::move(p));
        }
    }
    return report;
}

} // namespace loopeis

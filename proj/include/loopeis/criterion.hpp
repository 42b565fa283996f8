#pragma once

// Linear functionals on the real coroot space and the convergence and
// continuation criteria expressed through their value on the central element.
//
// A functional is stored by its values on h_1 ... h_{l+1}. The scalar type may
// be double, std::complex<double>, or Rational (exact).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "roots.hpp"

namespace loopeis {

inline double real_part(double x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }
inline Rational real_part(const Rational& x) { return x; }

inline bool is_finite_value(double x) { return std::isfinite(x); }
inline bool is_finite_value(const std::complex<double>& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
inline bool is_finite_value(const Rational&) { return true; }

template <class T>
inline constexpr bool is_exact_scalar = std::is_same_v<T, Rational>;

template <class T>
struct LinearFunctional {
    std::vector<T> values;   ///< nu(h_1), ..., nu(h_{l+1})
    std::optional<T> d_value;  ///< nu(D); carried, never used by the criteria

    LinearFunctional() = default;
    explicit LinearFunctional(std::vector<T> v, std::optional<T> d = std::nullopt)
        : values(std::move(v)), d_value(std::move(d)) {
        for (const auto& x : values)
            if (!is_finite_value(x)) throw DomainError("functional values must be finite");
        if (d_value && !is_finite_value(*d_value)) throw DomainError("functional values must be finite");
    }

    static LinearFunctional constant(std::size_t n, T value) { return LinearFunctional(std::vector<T>(n, value)); }

    std::size_t size() const { return values.size(); }
    /// nu(h_i), 1-based.
    const T& operator[](int i) const { return values.at(static_cast<std::size_t>(i - 1)); }

    friend LinearFunctional operator+(const LinearFunctional& a, const LinearFunctional& b) {
        if (a.size() != b.size()) throw DimensionError("functionals of different dimension");
        LinearFunctional r = a;
        for (std::size_t k = 0; k < r.size(); ++k) r.values[k] += b.values[k];
        if (a.d_value || b.d_value) r.d_value = a.d_value.value_or(T{}) + b.d_value.value_or(T{});
        return r;
    }
    friend LinearFunctional operator*(const T& s, LinearFunctional a) {
        for (auto& x : a.values) x *= s;
        if (a.d_value) *a.d_value *= s;
        return a;
    }
    friend LinearFunctional operator-(const LinearFunctional& a) { return T(-1) * a; }
    friend LinearFunctional operator-(const LinearFunctional& a, const LinearFunctional& b) { return a + (-b); }

    bool operator==(const LinearFunctional&) const = default;
};

/// lambda_{l+1}: value 1 on h_{l+1}, 0 elsewhere and on D.
template <class T>
LinearFunctional<T> lambda_affine(const CartanMatrix& affine) {
    detail::require_affine(affine);
    std::vector<T> v(static_cast<std::size_t>(affine.size()), T(0));
    v.back() = T(1);
    return LinearFunctional<T>(std::move(v), T(0));
}

/// iota: zero on every h_i, value 1 on D.
template <class T>
LinearFunctional<T> iota(const CartanMatrix& affine) {
    detail::require_affine(affine);
    return LinearFunctional<T>(std::vector<T>(static_cast<std::size_t>(affine.size()), T(0)), T(1));
}

namespace detail {

template <class T>
void require_dimension(const CartanMatrix& affine, const LinearFunctional<T>& nu) {
    require_affine(affine);
    if (nu.size() != static_cast<std::size_t>(affine.size()))
        throw DimensionError("functional has " + std::to_string(nu.size()) + " values, expected " +
                             std::to_string(affine.size()));
}

} // namespace detail

/// nu(c) = sum_i n_i nu(h_i) + nu(h_{l+1}).
template <class T>
T central_value(const CartanMatrix& affine, const LinearFunctional<T>& nu) {
    detail::require_dimension(affine, nu);
    const auto c = central_coroot(affine);
    T s(0);
    for (std::size_t k = 0; k < c.size(); ++k) s += T(static_cast<double>(c[k])) * nu.values[k];
    return s;
}

template <>
inline Rational central_value(const CartanMatrix& affine, const LinearFunctional<Rational>& nu) {
    detail::require_dimension(affine, nu);
    const auto c = central_coroot(affine);
    Rational s(0);
    for (std::size_t k = 0; k < c.size(); ++k) s += Rational(c[k]) * nu.values[k];
    return s;
}

/// Re nu(h_i) < -2 for every i.
template <class T>
bool godement_minimal(const LinearFunctional<T>& nu) {
    return std::all_of(nu.values.begin(), nu.values.end(), [](const T& x) { return real_part(x) < decltype(real_part(x))(-2); });
}

enum class Region { convergent, continued, boundary, outside };

inline std::string to_string(Region r) {
    switch (r) {
    case Region::convergent: return "convergent";
    case Region::continued: return "continued";
    case Region::boundary: return "boundary";
    case Region::outside: return "outside";
    }
    return "?";
}

/// Tolerance for the boundary label when the scalar type is floating point.
inline constexpr double kBoundaryTolerance = 1e-12;

/// convergent: Re < -2g; continued: -2g <= Re < -g; boundary: Re = -g; outside: Re > -g.
inline Region classify_region(const Rational& re, std::int64_t g) {
    if (re < Rational(-2 * g)) return Region::convergent;
    if (re < Rational(-g)) return Region::continued;
    if (re == Rational(-g)) return Region::boundary;
    return Region::outside;
}

inline Region classify_region(double re, std::int64_t g, double tolerance = kBoundaryTolerance) {
    const double gd = static_cast<double>(g);
    if (std::abs(re + gd) <= tolerance * std::max(1.0, gd)) return Region::boundary;
    if (re < -2.0 * gd) return Region::convergent;
    if (re < -gd) return Region::continued;
    return Region::outside;
}

template <class T>
struct RegionReport {
    T central_value{};
    std::int64_t g = 0;
    Region region = Region::outside;
};

template <class T>
RegionReport<T> godement_cuspidal(const CartanMatrix& affine, const LinearFunctional<T>& nu) {
    RegionReport<T> r;
    r.central_value = central_value(affine, nu);
    r.g = dual_coxeter(affine.finite_part());
    r.region = classify_region(real_part(r.central_value), r.g);
    return r;
}

/// rho(h_i) = 1 for i = 1..l+1, so rho(c) = g.
template <class T>
LinearFunctional<T> rho(const CartanMatrix& affine) {
    detail::require_affine(affine);
    return LinearFunctional<T>::constant(static_cast<std::size_t>(affine.size()), T(1));
}

template <class T>
LinearFunctional<T> sigma(const LinearFunctional<T>& nu, const CartanMatrix& affine) {
    detail::require_dimension(affine, nu);
    return nu + rho<T>(affine);
}

/// Checks that Re nu(h_i) < -2 for all i forces nu(c) < -2g. Always true;
/// exposed so the implication can be exercised as a property.
template <class T>
bool implication_check(const CartanMatrix& affine, const LinearFunctional<T>& nu) {
    if (!godement_minimal(nu)) return true;
    const auto g = dual_coxeter(affine.finite_part());
    const auto value = real_part(central_value(affine, nu));
    return value < decltype(value)(-2 * g);
}

/// The uniform extension nu(h_i) = target / g, which satisfies the minimal
/// criterion whenever Re target < -2g.
template <class T>
LinearFunctional<T> extend_from_central(const CartanMatrix& affine, const T& target) {
    detail::require_affine(affine);
    const auto g = dual_coxeter(affine.finite_part());
    const auto re = real_part(target);
    if (!(re < decltype(re)(-2 * g)))
        throw RegionError("extend_from_central needs Re(target) < -2g = " + std::to_string(-2 * g));
    T gt;
    if constexpr (is_exact_scalar<T>)
        gt = Rational(g);
    else
        gt = T(static_cast<double>(g));
    return LinearFunctional<T>::constant(static_cast<std::size_t>(affine.size()), target / gt);
}

/// lambda(h_i) >= 0 for all i and > 0 for at least one i.
inline bool dominant_integral(const std::vector<std::int64_t>& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](auto x) { return x >= 0; }) &&
           std::any_of(lambda.begin(), lambda.end(), [](auto x) { return x > 0; });
}

} // namespace loopeis

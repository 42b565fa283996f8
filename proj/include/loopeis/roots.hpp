#pragma once

// Finite root systems by closure, highest roots, marks and comarks, the
// central coroot c and bounded sets of affine roots. All arithmetic is exact.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cartan.hpp"
#include "detail/closure.hpp"
#include "error.hpp"

namespace loopeis {

/// Integer coordinates over the simple roots alpha_1 ... alpha_n.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    RootVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    static RootVector simple(int n, int i) {
        if (i < 1 || i > n) throw DomainError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
        c.at(static_cast<std::size_t>(i - 1)) = 1;
        return RootVector(std::move(c));
    }

    const std::vector<std::int64_t>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    /// Coefficient of alpha_i, 1-based.
    std::int64_t operator[](int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }

    std::int64_t height() const { return detail::height(coords_); }
    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
    }
    bool is_positive() const {
        return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x >= 0; });
    }
    bool is_negative() const {
        return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x <= 0; });
    }
    /// True when every nonzero coordinate lies in `support` (1-based labels).
    bool supported_on(std::span<const int> support) const {
        for (std::size_t k = 0; k < coords_.size(); ++k)
            if (coords_[k] != 0 && std::find(support.begin(), support.end(), static_cast<int>(k) + 1) == support.end())
                return false;
        return true;
    }

    friend RootVector operator+(RootVector a, const RootVector& b) {
        check_same(a, b);
        for (std::size_t k = 0; k < a.coords_.size(); ++k) a.coords_[k] += b.coords_[k];
        return a;
    }
    friend RootVector operator-(RootVector a, const RootVector& b) {
        check_same(a, b);
        for (std::size_t k = 0; k < a.coords_.size(); ++k) a.coords_[k] -= b.coords_[k];
        return a;
    }
    friend RootVector operator-(RootVector a) {
        for (auto& x : a.coords_) x = -x;
        return a;
    }
    friend RootVector operator*(std::int64_t s, RootVector a) {
        for (auto& x : a.coords_) x *= s;
        return a;
    }

    auto operator<=>(const RootVector&) const = default;

private:
    static void check_same(const RootVector& a, const RootVector& b) {
        if (a.size() != b.size()) throw DimensionError("root vectors of different dimension");
    }
    std::vector<std::int64_t> coords_;
};

namespace detail {

inline void require_finite(const CartanMatrix& a) {
    if (!a.is_finite()) throw DomainError("expected a finite-type Cartan matrix");
}

inline void require_finite_irreducible(const CartanMatrix& a) {
    require_finite(a);
    if (!a.is_irreducible()) throw DomainError("expected an irreducible finite-type Cartan matrix");
}

inline void require_affine(const CartanMatrix& a) {
    if (!a.is_affine()) throw DomainError("expected an affine Cartan matrix");
}

} // namespace detail

/// Positive roots in order of height, then lexicographically descending
/// (so the simple roots come out as alpha_1, ..., alpha_n).
inline std::vector<RootVector> positive_roots(const CartanMatrix& a) {
    detail::require_finite(a);
    std::vector<RootVector> out;
    for (auto& c : detail::positive_root_closure(a.entries())) out.emplace_back(std::move(c));
    return out;
}

inline RootVector highest_root(const CartanMatrix& a) {
    detail::require_finite_irreducible(a);
    auto roots = positive_roots(a);
    return roots.back();
}

inline std::vector<std::int64_t> marks(const CartanMatrix& a) { return highest_root(a).coords(); }

/// Coefficients of the highest coroot over the simple coroots:
/// n_i = a_i |alpha_i|^2 / |alpha_0|^2.
inline std::vector<std::int64_t> comarks(const CartanMatrix& a) {
    const auto m = marks(a);
    const auto& len = a.root_lengths();
    const auto long_len = *std::max_element(len.begin(), len.end());
    std::vector<std::int64_t> n(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) n[i] = m[i] * len[i] / long_len;
    return n;
}

inline std::int64_t dual_coxeter(const CartanMatrix& a) {
    const auto n = comarks(a);
    return 1 + std::accumulate(n.begin(), n.end(), std::int64_t{0});
}

inline std::int64_t coxeter_number(const CartanMatrix& a) { return 1 + highest_root(a).height(); }

/// Coefficients (n_1, ..., n_l, 1) of c = h_{alpha_0} + h_{l+1} over h_1 ... h_{l+1}.
inline std::vector<std::int64_t> central_coroot(const CartanMatrix& affine) {
    detail::require_affine(affine);
    auto c = comarks(affine.finite_part());
    c.push_back(1);
    return c;
}

/// The null root delta = sum a_i alpha_i + alpha_{l+1}.
inline RootVector delta(const CartanMatrix& affine) {
    detail::require_affine(affine);
    auto d = marks(affine.finite_part());
    d.push_back(1);
    return RootVector(std::move(d));
}

struct RootSystemData {
    CartanMatrix cartan;
    std::vector<RootVector> positive_roots;
    RootVector highest_root;
    std::vector<std::int64_t> marks;
    std::vector<std::int64_t> comarks;
    std::int64_t dual_coxeter = 0;
};

inline RootSystemData root_system_data(const CartanMatrix& a) {
    detail::require_finite_irreducible(a);
    RootSystemData d;
    d.cartan = a;
    d.positive_roots = positive_roots(a);
    d.highest_root = d.positive_roots.back();
    d.marks = d.highest_root.coords();
    d.comarks = comarks(a);
    d.dual_coxeter = dual_coxeter(a);
    return d;
}

struct AffineRoot {
    RootVector coords;
    int delta_multiple = 0;  ///< k in beta + k delta (or k delta for imaginary roots)
    bool imaginary = false;

    bool positive() const { return coords.is_positive(); }
    bool operator==(const AffineRoot&) const = default;
};

/// Real roots beta + k delta (beta a finite root, |k| <= depth) and imaginary
/// roots k delta (0 < |k| <= depth), ordered by k, then imaginary last within
/// a level, then by the finite part in graded order with negatives first.
inline std::vector<AffineRoot> affine_roots(const CartanMatrix& affine, int depth) {
    detail::require_affine(affine);
    if (depth < 0) throw DomainError("depth must be non-negative");
    const auto n = static_cast<std::size_t>(affine.size());
    const auto d = delta(affine);
    std::vector<RootVector> finite;
    const auto pos = positive_roots(affine.finite_part());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) finite.push_back(-*it);
    finite.insert(finite.end(), pos.begin(), pos.end());
    std::vector<AffineRoot> out;
    for (int k = -depth; k <= depth; ++k) {
        for (const auto& beta : finite) {
            auto c = beta.coords();
            c.resize(n, 0);
            out.push_back(AffineRoot{RootVector(std::move(c)) + k * d, k, false});
        }
        if (k != 0) out.push_back(AffineRoot{k * d, k, true});
    }
    return out;
}

/// Roots of the affine system supported on theta (a proper subset of the
/// nodes). No multiple of delta is supported on a proper subset, so the result
/// stabilizes once depth reaches the largest mark.
inline std::vector<RootVector> roots_in_span(const CartanMatrix& affine, const std::vector<int>& theta, int depth) {
    detail::require_affine(affine);
    std::vector<int> t = theta;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int v : t) affine.check_node(v);
    if (static_cast<int>(t.size()) >= affine.size()) throw DomainError("theta must be a proper subset of the simple roots");
    std::vector<RootVector> out;
    for (const auto& r : affine_roots(affine, depth))
        if (r.coords.supported_on(t)) out.push_back(r.coords);
    return out;
}

} // namespace loopeis

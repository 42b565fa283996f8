#pragma once

// Weyl groups (finite or affine) acting on simple-root coordinates.
//
// An element is stored by its action matrix, whose k-th column is w(alpha_k).
// On the (l+1)-dimensional root lattice the affine Weyl group acts faithfully,
// so the matrix is a canonical form. Enumeration walks the tree in which the
// parent of w is w s_j for the smallest right descent j of w; every element is
// reached exactly once and no hash table is needed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cartan.hpp"
#include "error.hpp"
#include "roots.hpp"

namespace loopeis {

class WeylElement {
public:
    WeylElement() = default;

    const std::vector<int>& word() const { return word_; }
    const IntMatrix& action() const { return action_; }
    int length() const { return static_cast<int>(word_.size()); }
    const CartanMatrix& ambient() const { return *ambient_; }
    const std::shared_ptr<const CartanMatrix>& ambient_ptr() const { return ambient_; }
    bool is_identity() const { return word_.empty(); }

    RootVector apply(const RootVector& v) const {
        if (static_cast<int>(v.size()) != ambient_->size()) throw DimensionError("vector dimension does not match ambient");
        return RootVector(action_ * std::span<const std::int64_t>(v.coords()));
    }

    /// w(alpha_k), 1-based.
    RootVector image_of_simple(int k) const {
        ambient_->check_node(k);
        return RootVector(action_.column(static_cast<std::size_t>(k - 1)));
    }

    bool operator==(const WeylElement& o) const { return *ambient_ == *o.ambient_ && action_ == o.action_; }

private:
    friend WeylElement element_from_action(std::shared_ptr<const CartanMatrix>, IntMatrix);
    friend WeylElement element_from_reduced(std::shared_ptr<const CartanMatrix>, IntMatrix, std::vector<int>);

    std::shared_ptr<const CartanMatrix> ambient_;
    IntMatrix action_;
    std::vector<int> word_;
};

/// Matrix of s_i: column k is s_i(alpha_k) = alpha_k - alpha_k(h_i) alpha_i.
inline IntMatrix reflection_matrix(const CartanMatrix& a, int i) {
    a.check_node(i);
    const auto n = static_cast<std::size_t>(a.size());
    auto s = IntMatrix::identity(n);
    const auto r = static_cast<std::size_t>(i - 1);
    for (std::size_t k = 0; k < n; ++k) s(r, k) -= a.entries()(k, r);
    return s;
}

inline RootVector reflect(const CartanMatrix& a, int i, const RootVector& v) {
    a.check_node(i);
    if (static_cast<int>(v.size()) != a.size()) throw DimensionError("vector dimension does not match the Cartan matrix");
    const auto pairing = detail::coroot_pairing(a.entries(), v.coords(), static_cast<std::size_t>(i - 1));
    auto c = v.coords();
    c[static_cast<std::size_t>(i - 1)] -= pairing;
    return RootVector(std::move(c));
}

namespace detail {

inline int root_sign(std::span<const std::int64_t> v) {
    for (auto x : v)
        if (x != 0) return x > 0 ? 1 : -1;
    return 0;
}

// Mutable element used by the search routines: columns stored contiguously.
class Walker {
public:
    explicit Walker(const CartanMatrix& a) : n_(static_cast<std::size_t>(a.size())), cartan_(a.entries()) {
        cols_.assign(n_ * n_, 0);
        for (std::size_t k = 0; k < n_; ++k) cols_[k * n_ + k] = 1;
        neighbours_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (k != j && cartan_(k, j) != 0) neighbours_[j].push_back(k);
    }

    std::size_t dim() const { return n_; }
    std::span<const std::int64_t> column(std::size_t k) const { return {cols_.data() + k * n_, n_}; }
    int sign(std::size_t k) const { return root_sign(column(k)); }
    const std::vector<int>& word() const { return word_; }

    // w <- w s_j (zero-based j); an involution, so calling twice undoes it.
    void flip(std::size_t j) {
        const std::int64_t* cj = cols_.data() + j * n_;
        for (auto k : neighbours_[j]) {
            std::int64_t* ck = cols_.data() + k * n_;
            const auto f = cartan_(k, j);
            for (std::size_t r = 0; r < n_; ++r) ck[r] -= f * cj[r];
        }
        std::int64_t* c = cols_.data() + j * n_;
        for (std::size_t r = 0; r < n_; ++r) c[r] = -c[r];
    }

    void push(std::size_t j) {
        flip(j);
        word_.push_back(static_cast<int>(j) + 1);
    }
    void pop() {
        flip(static_cast<std::size_t>(word_.back() - 1));
        word_.pop_back();
    }

    IntMatrix matrix() const {
        IntMatrix m(n_, n_);
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t r = 0; r < n_; ++r) m(r, k) = cols_[k * n_ + r];
        return m;
    }

private:
    std::size_t n_;
    const IntMatrix& cartan_;
    std::vector<std::int64_t> cols_;
    std::vector<std::vector<std::size_t>> neighbours_;
    std::vector<int> word_;
};

inline std::vector<std::size_t> generator_positions(const CartanMatrix& a, const std::vector<int>& generators) {
    std::vector<std::size_t> g;
    for (int i : generators) {
        a.check_node(i);
        g.push_back(static_cast<std::size_t>(i - 1));
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

} // namespace detail

/// Builds an element from its action matrix, recovering a reduced word by
/// repeatedly stripping the smallest right descent.
inline WeylElement element_from_action(std::shared_ptr<const CartanMatrix> ambient, IntMatrix action) {
    const auto n = static_cast<std::size_t>(ambient->size());
    if (action.rows() != n || action.cols() != n) throw DimensionError("action matrix does not match ambient");
    std::vector<int> stripped;
    IntMatrix m = action;
    const auto& a = ambient->entries();
    while (true) {
        std::size_t j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (detail::root_sign(m.column(k)) < 0) {
                j = k;
                break;
            }
        }
        if (j == n) break;
        if (stripped.size() > 100000) throw DomainError("action matrix is not a Weyl group element");
        // m <- m s_j
        const auto cj = m.column(j);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j || a(k, j) == 0) continue;
            for (std::size_t r = 0; r < n; ++r) m(r, k) -= a(k, j) * cj[r];
        }
        for (std::size_t r = 0; r < n; ++r) m(r, j) = -m(r, j);
        stripped.push_back(static_cast<int>(j) + 1);
    }
    if (m != IntMatrix::identity(n)) throw DomainError("action matrix is not a Weyl group element");
    WeylElement w;
    w.ambient_ = std::move(ambient);
    w.action_ = std::move(action);
    w.word_.assign(stripped.rbegin(), stripped.rend());
    return w;
}

/// Trusted constructor for words already known to be reduced.
inline WeylElement element_from_reduced(std::shared_ptr<const CartanMatrix> ambient, IntMatrix action, std::vector<int> word) {
    WeylElement w;
    w.ambient_ = std::move(ambient);
    w.action_ = std::move(action);
    w.word_ = std::move(word);
    return w;
}

inline WeylElement identity_element(const CartanMatrix& a) {
    auto amb = std::make_shared<const CartanMatrix>(a);
    return element_from_reduced(amb, IntMatrix::identity(static_cast<std::size_t>(a.size())), {});
}

/// Product of the simple reflections of `word` (left to right), reduced.
inline WeylElement reduce(const CartanMatrix& a, const std::vector<int>& word) {
    auto amb = std::make_shared<const CartanMatrix>(a);
    detail::Walker walker(a);
    for (int i : word) {
        a.check_node(i);
        walker.flip(static_cast<std::size_t>(i - 1));
    }
    return element_from_action(std::move(amb), walker.matrix());
}

inline WeylElement compose(const WeylElement& x, const WeylElement& y) {
    if (!(x.ambient() == y.ambient())) throw DomainError("cannot compose Weyl elements of different ambient types");
    return element_from_action(x.ambient_ptr(), x.action() * y.action());
}

inline WeylElement inverse(const WeylElement& w) {
    const auto& a = w.ambient();
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(a.size()));
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) m = m * reflection_matrix(a, *it);
    std::vector<int> word(w.word().rbegin(), w.word().rend());
    return element_from_reduced(w.ambient_ptr(), std::move(m), std::move(word));
}

/// Number of positive real roots sent to negative roots. For affine ambients
/// only roots with delta-multiple <= depth are examined; depth >= length(w)
/// is always enough.
inline int inversion_count(const WeylElement& w, int depth) {
    const auto& a = w.ambient();
    int count = 0;
    if (a.is_finite()) {
        for (const auto& b : positive_roots(a))
            if (w.apply(b).is_negative()) ++count;
        return count;
    }
    for (const auto& r : affine_roots(a, depth))
        if (!r.imaginary && r.positive() && w.apply(r.coords).is_negative()) ++count;
    return count;
}

inline std::vector<int> right_descents(const WeylElement& w) {
    std::vector<int> d;
    for (int k = 1; k <= w.ambient().size(); ++k)
        if (w.image_of_simple(k).is_negative()) d.push_back(k);
    return d;
}

/// Longest element of W_theta by greedy ascent. theta must span a finite-type
/// subdiagram.
inline WeylElement longest_element(const CartanMatrix& a, const std::vector<int>& theta) {
    const auto gens = detail::generator_positions(a, theta);
    if (!gens.empty()) {
        bool finite = false;
        try {
            finite = CartanMatrix::from_entries(a.entries().principal(gens)).is_finite();
        } catch (const DomainError&) {
            finite = false;
        }
        if (!finite) throw DomainError("theta does not span a finite-type subdiagram");
    }
    detail::Walker walker(a);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto j : gens) {
            if (walker.sign(j) > 0) {
                walker.push(j);
                grew = true;
                break;
            }
        }
    }
    return element_from_reduced(std::make_shared<const CartanMatrix>(a), walker.matrix(), walker.word());
}

/// Xi - {alpha_i}.
inline std::vector<int> complement_of(const CartanMatrix& a, int i) {
    a.check_node(i);
    std::vector<int> theta;
    for (int k = 1; k <= a.size(); ++k)
        if (k != i) theta.push_back(k);
    return theta;
}

/// w_0^theta(alpha_i) for theta = Xi - {alpha_i}.
inline RootVector expand_w0theta(const CartanMatrix& a, int i) {
    const auto w0 = longest_element(a, complement_of(a, i));
    return w0.image_of_simple(i);
}

/// Read-only view of an element during enumeration.
class ElementView {
public:
    explicit ElementView(const detail::Walker& w) : walker_(&w) {}
    int length() const { return static_cast<int>(walker_->word().size()); }
    const std::vector<int>& word() const { return walker_->word(); }
    /// w(alpha_k), 1-based.
    std::span<const std::int64_t> image_of_simple(int k) const { return walker_->column(static_cast<std::size_t>(k - 1)); }
    IntMatrix action() const { return walker_->matrix(); }

private:
    const detail::Walker* walker_;
};

/// Visits every element of the subgroup generated by `generators` with length
/// <= max_length exactly once, depth-first. The visitor returns false to stop.
/// Returns false iff the visitor stopped the walk.
inline bool for_each_element(const CartanMatrix& a, const std::vector<int>& generators, int max_length,
                             const std::function<bool(const ElementView&)>& visit) {
    if (max_length < 0) throw DomainError("max_length must be non-negative");
    const auto gens = detail::generator_positions(a, generators);
    detail::Walker walker(a);
    const ElementView view(walker);
    auto descend = [&](auto&& self) -> bool {
        if (!visit(view)) return false;
        if (static_cast<int>(walker.word().size()) == max_length) return true;
        for (std::size_t p = 0; p < gens.size(); ++p) {
            const auto j = gens[p];
            if (walker.sign(j) < 0) continue;
            walker.push(j);
            bool canonical = true;
            for (std::size_t q = 0; q < p; ++q)
                if (walker.sign(gens[q]) < 0) {
                    canonical = false;
                    break;
                }
            const bool keep_going = !canonical || self(self);
            walker.pop();
            if (!keep_going) return false;
        }
        return true;
    };
    return descend(descend);
}

/// Length-ordered stream over the subgroup generated by `generators`, up to
/// max_length. Uses iterative deepening, so memory stays O(max_length * n^2).
/// Ends early once a length level is empty (finite subgroup exhausted).
class WeylEnumerator {
public:
    WeylEnumerator(const CartanMatrix& a, const std::vector<int>& generators, int max_length)
        : ambient_(std::make_shared<const CartanMatrix>(a)),
          gens_(detail::generator_positions(a, generators)),
          max_length_(max_length),
          walker_(*ambient_) {
        if (max_length < 0) throw DomainError("max_length must be non-negative");
    }

    WeylEnumerator(const WeylEnumerator&) = delete;
    WeylEnumerator& operator=(const WeylEnumerator&) = delete;

    std::optional<WeylElement> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            found_ = true;
            return current();
        }
        while (true) {
            if (stack_.empty()) {
                // finished the pass for target_
                if (!found_ || target_ >= max_length_) {
                    done_ = true;
                    return std::nullopt;
                }
                ++target_;
                found_ = false;
                stack_.push_back(0);
            }
            const auto depth = stack_.size() - 1;
            if (depth == static_cast<std::size_t>(target_) && yielded_) {
                yielded_ = false;
                pop_frame();
                continue;
            }
            auto& pos = stack_.back();
            if (pos >= gens_.size()) {
                pop_frame();
                continue;
            }
            const auto p = pos++;
            const auto j = gens_[p];
            if (walker_.sign(j) < 0) continue;
            walker_.push(j);
            bool canonical = true;
            for (std::size_t q = 0; q < p; ++q)
                if (walker_.sign(gens_[q]) < 0) {
                    canonical = false;
                    break;
                }
            if (!canonical) {
                walker_.pop();
                continue;
            }
            stack_.push_back(0);
            if (depth + 1 == static_cast<std::size_t>(target_)) {
                yielded_ = true;
                found_ = true;
                return current();
            }
        }
    }

private:
    void pop_frame() {
        stack_.pop_back();
        if (!stack_.empty()) walker_.pop();
    }

    WeylElement current() const { return element_from_reduced(ambient_, walker_.matrix(), walker_.word()); }

    std::shared_ptr<const CartanMatrix> ambient_;
    std::vector<std::size_t> gens_;
    int max_length_;
    detail::Walker walker_;
    std::vector<std::size_t> stack_;  // next generator position per frame
    int target_ = 0;
    bool started_ = false;
    bool found_ = false;
    bool yielded_ = false;
    bool done_ = false;
};

inline std::vector<WeylElement> enumerate(const CartanMatrix& a, const std::vector<int>& generators, int max_length) {
    WeylEnumerator e(a, generators, max_length);
    std::vector<WeylElement> out;
    while (auto w = e.next()) out.push_back(std::move(*w));
    return out;
}

} // namespace loopeis

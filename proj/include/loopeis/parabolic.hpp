#pragma once

// Standard parabolic subsets of an affine diagram, Levi types, and the
// self-associativity question for maximal parabolics.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cartan.hpp"
#include "error.hpp"
#include "roots.hpp"
#include "weyl.hpp"

namespace loopeis {

/// A proper subset theta of the simple roots of an affine Cartan matrix.
class ParabolicSubset {
public:
    ParabolicSubset() = default;

    ParabolicSubset(CartanMatrix ambient, std::vector<int> indices) : ambient_(std::move(ambient)) {
        if (!ambient_.is_affine()) throw DomainError("parabolic subsets are taken in an affine ambient");
        for (int v : indices) ambient_.check_node(v);
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        if (static_cast<int>(indices.size()) >= ambient_.size())
            throw DomainError("theta must be a proper subset of the simple roots");
        indices_ = std::move(indices);
    }

    /// theta_i = Xi - {alpha_i}.
    static ParabolicSubset maximal(const CartanMatrix& ambient, int removed) {
        return ParabolicSubset(ambient, complement_of(ambient, removed));
    }

    const CartanMatrix& ambient() const { return ambient_; }
    const std::vector<int>& indices() const { return indices_; }
    bool is_maximal() const { return static_cast<int>(indices_.size()) == ambient_.size() - 1; }
    bool contains(int v) const { return std::binary_search(indices_.begin(), indices_.end(), v); }

    /// The omitted node of a maximal subset.
    int removed_node() const {
        if (!is_maximal()) throw UnsupportedError("theta is not maximal");
        for (int k = 1; k <= ambient_.size(); ++k)
            if (!contains(k)) return k;
        return 0;
    }

    bool operator==(const ParabolicSubset&) const = default;

private:
    CartanMatrix ambient_;
    std::vector<int> indices_;
};

inline std::vector<ParabolicSubset> maximal_parabolics(const CartanMatrix& affine) {
    detail::require_affine(affine);
    std::vector<ParabolicSubset> out;
    for (int i = 1; i <= affine.size(); ++i) out.push_back(ParabolicSubset::maximal(affine, i));
    return out;
}

inline std::vector<RootVector> roots_in_span(const ParabolicSubset& theta, int depth) {
    return roots_in_span(theta.ambient(), theta.indices(), depth);
}

struct LeviComponent {
    TypeLabel type;
    std::vector<int> nodes;

    bool operator==(const LeviComponent&) const = default;
};

struct LeviType {
    std::vector<LeviComponent> components;  ///< sorted by type, then by nodes
    int center_rank = 0;                    ///< (l+1) - |theta|
    ParabolicSubset theta;

    std::vector<TypeLabel> component_types() const {
        std::vector<TypeLabel> t;
        for (const auto& c : components) t.push_back(c.type);
        return t;
    }

    /// e.g. "A2+A2+A2"; empty string when theta is empty.
    std::string str() const {
        std::string s;
        for (const auto& c : components) {
            if (!s.empty()) s += "+";
            s += c.type.str();
        }
        return s;
    }
};

inline LeviType levi_type(const ParabolicSubset& theta) {
    LeviType lt;
    lt.theta = theta;
    lt.center_rank = theta.ambient().size() - static_cast<int>(theta.indices().size());
    for (auto& comp : subdiagram(theta.ambient(), theta.indices()))
        lt.components.push_back(LeviComponent{classify(comp.cartan), std::move(comp.nodes)});
    std::sort(lt.components.begin(), lt.components.end(), [](const LeviComponent& x, const LeviComponent& y) {
        return std::tie(x.type, x.nodes) < std::tie(y.type, y.nodes);
    });
    return lt;
}

/// True iff w maps theta onto itself as a set of simple roots and sends
/// alpha_i to a negative root. Checked on coordinates only.
inline bool is_associating_witness(const WeylElement& w, const std::vector<int>& theta, int removed) {
    std::vector<RootVector> image, target;
    for (int j : theta) {
        image.push_back(w.image_of_simple(j));
        target.push_back(RootVector::simple(w.ambient().size(), j));
    }
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    return image == target && w.image_of_simple(removed).is_negative();
}

/// Machine-checkable steps of the argument that theta_i is never self-associate
/// in an affine Weyl group.
struct ObstructionTrace {
    WeylElement w0_theta;
    /// w0_theta(alpha_j) = -alpha_{theta_image[k]} for the k-th node j of theta.
    std::vector<int> theta_image;
    bool theta_to_minus_theta = false;
    /// w0_theta(alpha_i) = alpha_i + sum_{j != i} k_j alpha_j.
    RootVector removed_image;
    std::int64_t removed_coefficient = 0;
    bool removed_image_nonnegative = false;
    RootVector delta;
    bool delta_positive = false;
    bool delta_fixed_by_simple_reflections = false;

    /// All steps hold: any w with w(theta) = theta and w(alpha_i) < 0 would make
    /// w w0_theta send every simple root, hence delta, to a negative vector,
    /// while every Weyl group element fixes delta.
    bool valid() const {
        return theta_to_minus_theta && removed_coefficient == 1 && removed_image_nonnegative && delta_positive &&
               delta_fixed_by_simple_reflections;
    }
};

struct AssociateCertificate {
    int removed_node = 0;
    std::vector<int> theta;
    bool self_associate = false;
    std::optional<WeylElement> witness;
    std::optional<ObstructionTrace> obstruction;
    int search_bound = 0;
    std::uint64_t elements_searched = 0;
    bool delta_fixed_by_all_searched = true;  ///< affine searches only
};

inline ObstructionTrace obstruction_trace(const CartanMatrix& affine, int removed) {
    detail::require_affine(affine);
    const auto theta = complement_of(affine, removed);
    ObstructionTrace t;
    t.w0_theta = longest_element(affine, theta);
    const int n = affine.size();

    t.theta_to_minus_theta = true;
    for (int j : theta) {
        const auto img = -t.w0_theta.image_of_simple(j);
        int hit = 0;
        for (int k : theta)
            if (img == RootVector::simple(n, k)) hit = k;
        t.theta_image.push_back(hit);
        if (hit == 0) t.theta_to_minus_theta = false;
    }

    t.removed_image = t.w0_theta.image_of_simple(removed);
    t.removed_coefficient = t.removed_image[removed];
    t.removed_image_nonnegative = t.removed_image.is_positive();

    t.delta = delta(affine);
    t.delta_positive = std::all_of(t.delta.coords().begin(), t.delta.coords().end(), [](auto x) { return x > 0; });
    t.delta_fixed_by_simple_reflections = true;
    for (int i = 1; i <= n; ++i)
        if (reflect(affine, i, t.delta) != t.delta) t.delta_fixed_by_simple_reflections = false;
    return t;
}

/// Exhaustive search over a finite Weyl group (rank <= 6) for w with
/// w(theta) = theta and w(alpha_i) < 0, theta = Xi - {alpha_i}. Returns a
/// shortest witness when one exists.
inline AssociateCertificate finite_self_associate(const CartanMatrix& a, int removed) {
    detail::require_finite(a);
    if (!a.is_irreducible()) throw DomainError("finite_self_associate expects an irreducible Cartan matrix");
    if (a.rank() > 6) throw DomainError("finite_self_associate refuses rank > 6 (exhaustive search cost)");
    AssociateCertificate cert;
    cert.removed_node = removed;
    cert.theta = complement_of(a, removed);
    cert.search_bound = static_cast<int>(positive_roots(a).size());
    std::vector<int> all(static_cast<std::size_t>(a.size()));
    std::iota(all.begin(), all.end(), 1);
    WeylEnumerator e(a, all, cert.search_bound);
    while (auto w = e.next()) {
        ++cert.elements_searched;
        if (is_associating_witness(*w, cert.theta, removed)) {
            cert.self_associate = true;
            cert.witness = std::move(*w);
            break;
        }
    }
    return cert;
}

namespace detail {

// Scans every element of length <= bound; records witnesses and checks that
// each element fixes delta.
inline void bounded_witness_search(const CartanMatrix& affine, int removed, AssociateCertificate& cert) {
    const int n = affine.size();
    const auto d = delta(affine).coords();
    std::vector<int> theta = cert.theta;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    std::vector<std::int64_t> moved(static_cast<std::size_t>(n));
    for_each_element(affine, all, cert.search_bound, [&](const ElementView& w) {
        ++cert.elements_searched;
        std::fill(moved.begin(), moved.end(), 0);
        for (int k = 1; k <= n; ++k) {
            const auto col = w.image_of_simple(k);
            for (std::size_t r = 0; r < moved.size(); ++r) moved[r] += d[static_cast<std::size_t>(k - 1)] * col[r];
        }
        if (moved != d) cert.delta_fixed_by_all_searched = false;
        if (root_sign(w.image_of_simple(removed)) > 0) return true;
        for (int j : theta) {
            const auto col = w.image_of_simple(j);
            int ones = 0, where = 0;
            for (std::size_t r = 0; r < col.size(); ++r) {
                if (col[r] == 0) continue;
                if (col[r] != 1) return true;
                ++ones;
                where = static_cast<int>(r) + 1;
            }
            if (ones != 1 || where == removed) return true;
        }
        // columns of theta are distinct simple roots in theta (w is invertible)
        cert.self_associate = true;
        cert.witness = element_from_reduced(std::make_shared<const CartanMatrix>(affine), w.action(), w.word());
        return false;
    });
}

} // namespace detail

/// Self-associativity of a maximal theta in an affine ambient. Produces the
/// obstruction trace and corroborates it by searching all elements of length
/// <= search_bound for a witness.
inline AssociateCertificate is_self_associate(const ParabolicSubset& theta, int search_bound) {
    if (!theta.is_maximal()) throw UnsupportedError("self-associativity is only decided for maximal theta");
    if (search_bound < 0) throw DomainError("search bound must be non-negative");
    const auto& affine = theta.ambient();
    const int removed = theta.removed_node();
    AssociateCertificate cert;
    cert.removed_node = removed;
    cert.theta = theta.indices();
    cert.search_bound = search_bound;
    cert.obstruction = obstruction_trace(affine, removed);
    detail::bounded_witness_search(affine, removed, cert);
    return cert;
}

/// Dispatches on the ambient: affine ambients get the obstruction certificate,
/// finite ones the exhaustive search.
inline AssociateCertificate is_self_associate(const CartanMatrix& a, int removed, int search_bound) {
    if (a.is_finite()) return finite_self_associate(a, removed);
    return is_self_associate(ParabolicSubset::maximal(a, removed), search_bound);
}

/// Necessary condition for theta and theta' to be associate: isomorphic Levi
/// semisimple parts. false proves non-association; true is inconclusive.
inline bool associate_necessary(const ParabolicSubset& x, const ParabolicSubset& y) {
    if (!(x.ambient() == y.ambient())) throw DomainError("parabolic subsets live in different ambients");
    return levi_type(x).component_types() == levi_type(y).component_types();
}

struct LeviComparison {
    int other_removed = 0;
    std::string other_levi;
    bool levi_isomorphic = false;
};

struct ConstantTermVerdict {
    bool trivial = false;
    bool self_associate = false;
    std::string levi;
    std::vector<LeviComparison> comparisons;
    AssociateCertificate certificate;

    std::string explanation() const {
        std::string s = "theta Levi " + levi + (self_associate ? "; self-associate" : "; not self-associate");
        for (const auto& c : comparisons)
            s += "; vs theta_" + std::to_string(c.other_removed) + " (" + c.other_levi + "): " +
                 (c.levi_isomorphic ? "isomorphic Levi, inconclusive" : "non-isomorphic Levi");
        s += trivial ? "; constant term reduces to a single term" : "; triviality not established";
        return s;
    }
};

/// The constant term along theta (maximal) is the single elementary term when
/// theta is not self-associate and its Levi is not isomorphic to that of any
/// other maximal theta'.
inline ConstantTermVerdict constant_term_is_trivial(const ParabolicSubset& theta, int search_bound = 16) {
    ConstantTermVerdict v;
    v.certificate = is_self_associate(theta, search_bound);
    v.self_associate = v.certificate.self_associate;
    const auto mine = levi_type(theta);
    v.levi = mine.str();
    bool isolated = true;
    for (const auto& other : maximal_parabolics(theta.ambient())) {
        if (other == theta) continue;
        const auto lt = levi_type(other);
        LeviComparison c;
        c.other_removed = other.removed_node();
        c.other_levi = lt.str();
        c.levi_isomorphic = lt.component_types() == mine.component_types();
        if (c.levi_isomorphic) isolated = false;
        v.comparisons.push_back(std::move(c));
    }
    v.trivial = !v.self_associate && isolated;
    return v;
}

} // namespace loopeis

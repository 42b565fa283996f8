#pragma once

// Finite and untwisted affine Cartan matrices, Dynkin diagrams and
// classification of finite-type diagrams.
//
// Conventions used throughout the library:
//   * entries(i, j) = alpha_i(h_j), i.e. row = simple root, column = simple coroot;
//   * node labels in the public API are 1-based and follow Bourbaki;
//   * the affine node of an untwisted affine matrix is always the last one (l+1).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detail/closure.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace loopeis {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
    Series series = Series::A;
    int rank = 1;
    bool affine = false;

    std::string str() const {
        return std::string(1, static_cast<char>(series)) + std::to_string(rank) + (affine ? "affine" : "");
    }

    /// Parses "E6", "A2", "E6affine".
    static TypeLabel parse(std::string_view text) {
        TypeLabel t;
        constexpr std::string_view suffix = "affine";
        if (text.size() > suffix.size() && text.ends_with(suffix)) {
            t.affine = true;
            text.remove_suffix(suffix.size());
        }
        if (text.size() < 2 || std::string_view("ABCDEFG").find(text[0]) == std::string_view::npos)
            throw DomainError("unrecognized type label '" + std::string(text) + "'");
        t.series = static_cast<Series>(text[0]);
        int r = 0;
        for (char ch : text.substr(1)) {
            if (ch < '0' || ch > '9') throw DomainError("unrecognized type label '" + std::string(text) + "'");
            r = r * 10 + (ch - '0');
            if (r > 1000) throw DomainError("rank too large in '" + std::string(text) + "'");
        }
        t.rank = r;
        return t;
    }

    auto operator<=>(const TypeLabel&) const = default;
};

/// Valid Bourbaki finite types. C2 is accepted as the B2 diagram with the
/// long and short nodes swapped; classification reports it as B2.
inline bool valid_finite_type(Series s, int rank) {
    switch (s) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
    }
    return false;
}

class CartanMatrix;
CartanMatrix finite_cartan(Series series, int rank);
CartanMatrix affinize(const CartanMatrix& a);
TypeLabel classify(const CartanMatrix& a);

namespace detail {

inline std::vector<std::vector<std::size_t>> components(const IntMatrix& a, const std::vector<std::size_t>& nodes) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(a.rows(), 0), member(a.rows(), 0);
    for (auto v : nodes) member[v] = 1;
    for (auto start : nodes) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp{start}, stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < a.rows(); ++w) {
                if (member[w] && !seen[w] && a(v, w) != 0) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<std::size_t> iota_nodes(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Positive rationals e with a(i,j) e_j = a(j,i) e_i, scaled to coprime integers.
// These are proportional to the squared root lengths.
inline std::optional<std::vector<std::int64_t>> column_symmetrizer(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> e(n, Rational(0));
    for (const auto& comp : components(a, iota_nodes(n))) {
        e[comp.front()] = Rational(1);
        std::vector<std::size_t> stack{comp.front()};
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (auto j : comp) {
                if (i == j || a(i, j) == 0 || e[j] != Rational(0)) continue;
                e[j] = Rational(a(j, i)) * e[i] / Rational(a(i, j));
                stack.push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (Rational(a(i, j)) * e[j] != Rational(a(j, i)) * e[i]) return std::nullopt;
    std::int64_t l = 1;
    for (const auto& x : e) l = std::lcm(l, x.denominator());
    std::vector<std::int64_t> out(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (e[i] * l).numerator();
        g = std::gcd(g, out[i]);
    }
    for (auto& x : out) x /= g;
    return out;
}

inline bool positive_definite_symmetrized(const IntMatrix& a, const std::vector<std::int64_t>& e,
                                          const std::vector<std::size_t>& nodes) {
    // a * diag(e) is symmetric; Sylvester's criterion on it.
    for (std::size_t k = 1; k <= nodes.size(); ++k) {
        Matrix<Rational> m(k, k);
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y) m(x, y) = Rational(a(nodes[x], nodes[y]) * e[nodes[y]]);
        if (determinant(m) <= Rational(0)) return false;
    }
    return true;
}

} // namespace detail

struct DynkinEdge {
    int a = 0;
    int b = 0;
    int bond = 1;      ///< entries(a,b) * entries(b,a)
    int arrow_to = 0;  ///< node the arrow points to (the shorter root); 0 when the bond is symmetric

    bool operator==(const DynkinEdge&) const = default;
};

struct DynkinDiagram {
    int nodes = 0;
    std::vector<DynkinEdge> edges;

    bool operator==(const DynkinDiagram&) const = default;
};

class CartanMatrix {
public:
    CartanMatrix() = default;

    /// Validates a raw matrix and determines its kind. Finite matrices may be
    /// reducible; affine matrices must be untwisted with the affine node last.
    static CartanMatrix from_entries(IntMatrix entries) {
        validate_generalized(entries);
        const auto e = detail::column_symmetrizer(entries);
        if (!e) throw DomainError("Cartan matrix is not symmetrizable");
        CartanMatrix c;
        c.entries_ = std::move(entries);
        c.lengths_ = *e;
        const std::size_t n = c.entries_.rows();
        const auto comps = detail::components(c.entries_, detail::iota_nodes(n));
        c.irreducible_ = comps.size() == 1;
        if (detail::positive_definite_symmetrized(c.entries_, c.lengths_, detail::iota_nodes(n))) {
            c.affine_ = false;
            c.rank_ = static_cast<int>(n);
            if (c.irreducible_ && n <= 9) c.label_ = classify(c);
            return c;
        }
        if (!c.irreducible_ || determinant(c.entries_) != 0 || matrix_rank(c.entries_) != n - 1)
            throw DomainError("matrix is neither of finite nor of affine type");
        for (std::size_t drop = 0; drop < n; ++drop) {
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < n; ++k)
                if (k != drop) rest.push_back(k);
            if (!detail::positive_definite_symmetrized(c.entries_, c.lengths_, rest))
                throw DomainError("matrix is neither of finite nor of affine type");
        }
        std::vector<std::size_t> head(n - 1);
        std::iota(head.begin(), head.end(), 0);
        const auto finite = from_entries(c.entries_.principal(head));
        if (!finite.irreducible_ || affinize(finite).entries_ != c.entries_)
            throw UnsupportedError("affine matrix is twisted or its affine node is not last; only untwisted affinizations are supported");
        c.affine_ = true;
        c.rank_ = static_cast<int>(n) - 1;
        if (finite.label_) c.label_ = TypeLabel{finite.label_->series, finite.label_->rank, true};
        return c;
    }

    const IntMatrix& entries() const { return entries_; }
    /// Number of nodes (l for finite, l+1 for affine).
    int size() const { return static_cast<int>(entries_.rows()); }
    /// l: rank of the finite part.
    int rank() const { return rank_; }
    bool is_affine() const { return affine_; }
    bool is_finite() const { return !affine_; }
    bool is_irreducible() const { return irreducible_; }
    const std::optional<TypeLabel>& label() const { return label_; }
    std::string name() const { return label_ ? label_->str() : (affine_ ? "affine" : "finite"); }

    /// alpha_i(h_j), 1-based.
    std::int64_t pairing(int i, int j) const {
        check_node(i);
        check_node(j);
        return entries_(i - 1, j - 1);
    }

    void check_node(int i) const {
        if (i < 1 || i > size())
            throw DomainError("node index " + std::to_string(i) + " out of range 1.." + std::to_string(size()));
    }

    /// Coprime integers proportional to the squared lengths of the simple roots.
    const std::vector<std::int64_t>& root_lengths() const { return lengths_; }

    /// Positive integers d_i with d_i a_ij = d_j a_ji.
    std::vector<std::int64_t> symmetrizer() const {
        std::int64_t l = 1;
        for (auto x : lengths_) l = std::lcm(l, x);
        std::vector<std::int64_t> d;
        std::int64_t g = 0;
        for (auto x : lengths_) {
            d.push_back(l / x);
            g = std::gcd(g, l / x);
        }
        for (auto& x : d) x /= g;
        return d;
    }

    /// The finite block on nodes 1..l of an affine matrix.
    CartanMatrix finite_part() const {
        if (!affine_) return *this;
        std::vector<std::size_t> head(static_cast<std::size_t>(rank_));
        std::iota(head.begin(), head.end(), 0);
        return from_entries(entries_.principal(head));
    }

    bool operator==(const CartanMatrix& o) const { return entries_ == o.entries_; }

private:
    friend CartanMatrix finite_cartan(Series, int);
    friend CartanMatrix affinize(const CartanMatrix&);

    static void validate_generalized(const IntMatrix& m) {
        if (!m.square() || m.rows() == 0) throw DomainError("Cartan matrix must be square and non-empty");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (i == j && m(i, j) != 2) throw DomainError("Cartan matrix diagonal entries must equal 2");
                if (i != j && m(i, j) > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
                if (i != j && (m(i, j) == 0) != (m(j, i) == 0))
                    throw DomainError("Cartan matrix zero pattern must be symmetric");
            }
    }

    IntMatrix entries_;
    std::vector<std::int64_t> lengths_;
    int rank_ = 0;
    bool affine_ = false;
    bool irreducible_ = true;
    std::optional<TypeLabel> label_;
};

namespace detail {

// Bourbaki diagram as (edges, squared lengths). Edges are zero-based.
inline std::pair<std::vector<std::pair<int, int>>, std::vector<std::int64_t>> bourbaki(Series s, int l) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> len(static_cast<std::size_t>(l), 2);
    auto chain = [&](int from, int to) {
        for (int k = from; k < to; ++k) edges.emplace_back(k, k + 1);
    };
    switch (s) {
    case Series::A: chain(0, l - 1); break;
    case Series::B:
        chain(0, l - 1);
        len[l - 1] = 1;
        break;
    case Series::C:
        chain(0, l - 1);
        std::fill(len.begin(), len.end() - 1, 1);
        break;
    case Series::D:
        chain(0, l - 2);
        edges.emplace_back(l - 3, l - 1);
        break;
    case Series::E:
        edges.emplace_back(0, 2);
        edges.emplace_back(1, 3);
        chain(2, l - 1);
        break;
    case Series::F:
        chain(0, 3);
        len = {2, 2, 1, 1};
        break;
    case Series::G:
        edges.emplace_back(0, 1);
        len = {1, 3};
        break;
    }
    return {edges, len};
}

} // namespace detail

/// Finite-type Cartan matrix in Bourbaki numbering.
inline CartanMatrix finite_cartan(Series series, int rank) {
    if (!valid_finite_type(series, rank))
        throw DomainError("invalid finite type " + TypeLabel{series, rank, false}.str());
    const auto [edges, len] = detail::bourbaki(series, rank);
    const auto n = static_cast<std::size_t>(rank);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
    // alpha_i(h_j) = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), with
    // 2 (alpha_i, alpha_j) = -max(len_i, len_j) on a bond.
    for (auto [i, j] : edges) {
        const auto b = std::max(len[i], len[j]);
        m(i, j) = -b / len[j];
        m(j, i) = -b / len[i];
    }
    CartanMatrix c;
    c.entries_ = std::move(m);
    c.lengths_ = *detail::column_symmetrizer(c.entries_);
    c.rank_ = rank;
    c.affine_ = false;
    c.irreducible_ = true;
    c.label_ = TypeLabel{series == Series::C && rank == 2 ? Series::B : series, rank, false};
    return c;
}

inline CartanMatrix finite_cartan(const TypeLabel& t) {
    return t.affine ? affinize(finite_cartan(t.series, t.rank)) : finite_cartan(t.series, t.rank);
}

/// Appends the affine node l+1 = -alpha_0 (alpha_0 the highest root):
/// alpha_{l+1}(h_j) = -alpha_0(h_j) and alpha_j(h_{l+1}) = -alpha_j(h_{alpha_0}).
inline CartanMatrix affinize(const CartanMatrix& a) {
    if (a.is_affine()) throw DomainError("affinize expects a finite-type matrix");
    if (!a.is_irreducible()) throw DomainError("affinize expects an irreducible matrix");
    const auto& m = a.entries();
    const auto l = static_cast<std::size_t>(a.rank());
    const auto roots = detail::positive_root_closure(m);
    const auto& marks = roots.back();
    const auto& len = a.root_lengths();
    const auto long_len = *std::max_element(len.begin(), len.end());
    IntMatrix t(l + 1, l + 1);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) t(i, j) = m(i, j);
    t(l, l) = 2;
    for (std::size_t j = 0; j < l; ++j) {
        std::int64_t root_on_coroot = 0, root_on_highest_coroot = 0;
        for (std::size_t i = 0; i < l; ++i) {
            root_on_coroot += marks[i] * m(i, j);
            // h_{alpha_0} = sum_i n_i h_i with n_i = a_i |alpha_i|^2 / |alpha_0|^2
            root_on_highest_coroot += (marks[i] * len[i] / long_len) * m(j, i);
        }
        t(l, j) = -root_on_coroot;
        t(j, l) = -root_on_highest_coroot;
    }
    CartanMatrix out;
    out.entries_ = std::move(t);
    out.lengths_ = *detail::column_symmetrizer(out.entries_);
    out.rank_ = a.rank();
    out.affine_ = true;
    out.irreducible_ = true;
    if (a.label()) out.label_ = TypeLabel{a.label()->series, a.label()->rank, true};
    return out;
}

inline DynkinDiagram dynkin_diagram(const CartanMatrix& a) {
    DynkinDiagram d;
    d.nodes = a.size();
    const auto& m = a.entries();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j) {
            if (m(i, j) == 0) continue;
            DynkinEdge e;
            e.a = static_cast<int>(i) + 1;
            e.b = static_cast<int>(j) + 1;
            e.bond = static_cast<int>(m(i, j) * m(j, i));
            if (m(i, j) != m(j, i)) e.arrow_to = std::abs(m(i, j)) > std::abs(m(j, i)) ? e.b : e.a;
            d.edges.push_back(e);
        }
    return d;
}

inline CartanMatrix cartan_from_diagram(const DynkinDiagram& d) {
    const auto n = static_cast<std::size_t>(d.nodes);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
    for (const auto& e : d.edges) {
        if (e.a < 1 || e.b < 1 || e.a > d.nodes || e.b > d.nodes || e.a == e.b)
            throw DomainError("diagram edge references invalid nodes");
        const auto i = static_cast<std::size_t>(e.a - 1), j = static_cast<std::size_t>(e.b - 1);
        if (e.arrow_to == 0) {
            if (e.bond != 1 && e.bond != 4) throw DomainError("symmetric bond must have order 1 or 4");
            m(i, j) = m(j, i) = e.bond == 1 ? -1 : -2;
        } else {
            if (e.arrow_to != e.a && e.arrow_to != e.b) throw DomainError("arrow must point at an endpoint");
            const auto shorter = static_cast<std::size_t>(e.arrow_to - 1);
            const auto longer = shorter == i ? j : i;
            m(longer, shorter) = -e.bond;
            m(shorter, longer) = -1;
        }
    }
    return CartanMatrix::from_entries(std::move(m));
}

namespace detail {

// Finds a bijection p with target(p[x], p[y]) == source(x, y) for all x, y.
inline bool isomorphic(const IntMatrix& source, const IntMatrix& target) {
    const std::size_t n = source.rows();
    if (target.rows() != n) return false;
    auto signature = [](const IntMatrix& m) {
        std::vector<std::vector<std::int64_t>> sig;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<std::int64_t> r(m.row(i).begin(), m.row(i).end());
            std::sort(r.begin(), r.end());
            sig.push_back(std::move(r));
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (signature(source) != signature(target)) return false;

    // Visit source nodes so that each one after the first touches an earlier one.
    std::vector<std::size_t> order;
    std::vector<char> placed(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (placed[s]) continue;
        std::vector<std::size_t> queue{s};
        placed[s] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            order.push_back(queue[k]);
            for (std::size_t w = 0; w < n; ++w)
                if (!placed[w] && source(queue[k], w) != 0) {
                    placed[w] = 1;
                    queue.push_back(w);
                }
        }
    }

    std::vector<std::size_t> image(n, n);
    std::vector<char> used(n, 0);
    auto consistent = [&](std::size_t depth, std::size_t candidate) {
        const auto x = order[depth];
        for (std::size_t k = 0; k < depth; ++k) {
            const auto y = order[k];
            if (source(x, y) != target(candidate, image[y]) || source(y, x) != target(image[y], candidate)) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || !consistent(depth, c)) continue;
            used[c] = 1;
            image[order[depth]] = c;
            if (self(self, depth + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    return search(search, 0);
}

inline const std::vector<std::pair<TypeLabel, IntMatrix>>& finite_catalog() {
    static const auto catalog = [] {
        std::vector<std::pair<TypeLabel, IntMatrix>> c;
        constexpr int max_rank = 9;
        for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G})
            for (int r = 1; r <= max_rank; ++r) {
                if (!valid_finite_type(s, r) || (s == Series::C && r == 2)) continue;
                c.emplace_back(TypeLabel{s, r, false}, finite_cartan(s, r).entries());
            }
        return c;
    }();
    return catalog;
}

} // namespace detail

/// Identifies an irreducible finite-type matrix (in any node order) by exact
/// isomorphism search against the Bourbaki catalog of rank <= 9.
inline TypeLabel classify(const CartanMatrix& a) {
    if (a.is_affine()) throw ClassificationError("classify expects a finite-type matrix");
    if (!a.is_irreducible()) throw ClassificationError("classify expects an irreducible matrix");
    for (const auto& [label, m] : detail::finite_catalog())
        if (detail::isomorphic(a.entries(), m)) return label;
    throw ClassificationError("no catalog type of rank <= 9 matches this matrix");
}

struct DiagramComponent {
    std::vector<int> nodes;  ///< 1-based labels in the ambient matrix, ascending
    CartanMatrix cartan;     ///< principal submatrix on nodes, in that order
};

/// Connected components of the subdiagram induced on `subset` (1-based labels).
inline std::vector<DiagramComponent> subdiagram(const CartanMatrix& a, const std::vector<int>& subset) {
    std::vector<std::size_t> nodes;
    for (int v : subset) {
        a.check_node(v);
        nodes.push_back(static_cast<std::size_t>(v - 1));
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<DiagramComponent> out;
    for (const auto& comp : detail::components(a.entries(), nodes)) {
        DiagramComponent dc;
        for (auto v : comp) dc.nodes.push_back(static_cast<int>(v) + 1);
        dc.cartan = CartanMatrix::from_entries(a.entries().principal(comp));
        out.push_back(std::move(dc));
    }
    return out;
}

/// Irreducible affine types whose finite part has rank <= max_rank, in
/// catalog order (series, then rank).
inline std::vector<TypeLabel> affine_catalog(int max_rank) {
    std::vector<TypeLabel> out;
    for (const auto& [label, m] : detail::finite_catalog())
        if (label.rank <= max_rank) out.push_back(TypeLabel{label.series, label.rank, true});
    return out;
}

inline std::vector<TypeLabel> finite_types(int max_rank) {
    std::vector<TypeLabel> out;
    for (const auto& [label, m] : detail::finite_catalog())
        if (label.rank <= max_rank) out.push_back(label);
    return out;
}

} // namespace loopeis

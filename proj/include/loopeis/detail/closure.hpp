#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "../error.hpp"
#include "../matrix.hpp"

namespace loopeis::detail {

using Coords = std::vector<std::int64_t>;

inline std::int64_t height(const Coords& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// beta(h_i) for beta given in simple-root coordinates, with alpha_j(h_i) = a(j, i).
inline std::int64_t coroot_pairing(const IntMatrix& a, const Coords& beta, std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * a(j, i);
    return s;
}

// Height first, then lexicographically descending so that alpha_1 precedes alpha_2.
inline bool graded_less(const Coords& x, const Coords& y) {
    const auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
}

// Positive roots of a finite-type Cartan matrix by root-string closure. The
// alpha_i-string through beta is beta - p alpha_i, ..., beta + q alpha_i with
// p - q = beta(h_i), so beta + alpha_i is a root iff p - beta(h_i) > 0.
inline std::vector<Coords> positive_root_closure(const IntMatrix& a, std::size_t limit = 4096) {
    const std::size_t n = a.rows();
    std::set<Coords> all;
    std::vector<Coords> layer;
    for (std::size_t i = 0; i < n; ++i) {
        Coords e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        all.insert(e);
    }
    while (!layer.empty()) {
        std::set<Coords> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t p = 0;
                Coords down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!all.contains(down)) break;
                    ++p;
                }
                if (p - coroot_pairing(a, beta, i) > 0) {
                    Coords up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        all.insert(next.begin(), next.end());
        if (all.size() > limit) throw DomainError("root closure does not terminate: matrix is not of finite type");
    }
    std::vector<Coords> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

} // namespace loopeis::detail

#pragma once

// One row per (irreducible affine type, maximal parabolic): Levi type,
// thresholds on nu(c), self-associativity and constant-term triviality.

#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"
#include "criterion.hpp"
#include "parabolic.hpp"
#include "roots.hpp"

namespace loopeis {

struct AtlasRow {
    TypeLabel type;
    int removed_node = 0;
    std::string levi;
    int center_rank = 0;
    std::int64_t g = 0;
    std::int64_t godement_threshold = 0;      ///< -2g
    std::int64_t continuation_threshold = 0;  ///< -g
    bool self_associate = false;
    bool constant_term_trivial = false;
    std::uint64_t elements_searched = 0;
};

class AtlasInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Rows for one affine type, validated as they are built.
inline std::vector<AtlasRow> atlas_rows(const TypeLabel& type, int search_bound) {
    const auto affine = finite_cartan(TypeLabel{type.series, type.rank, true});
    const auto g = dual_coxeter(affine.finite_part());
    if (central_value(affine, rho<Rational>(affine)) != Rational(g))
        throw AtlasInvariantError(type.str() + ": rho(c) != g");
    std::vector<AtlasRow> rows;
    for (const auto& theta : maximal_parabolics(affine)) {
        const auto lt = levi_type(theta);
        int ranks = 0;
        for (const auto& c : lt.components) ranks += c.type.rank;
        if (ranks != affine.rank()) throw AtlasInvariantError(type.str() + ": Levi ranks do not sum to l");
        const auto verdict = constant_term_is_trivial(theta, search_bound);
        const auto& cert = verdict.certificate;
        if (!cert.obstruction || !cert.obstruction->valid() || !cert.delta_fixed_by_all_searched)
            throw AtlasInvariantError(type.str() + ": obstruction certificate failed to verify");
        if (cert.witness && !is_associating_witness(*cert.witness, cert.theta, cert.removed_node))
            throw AtlasInvariantError(type.str() + ": witness failed to verify");
        AtlasRow r;
        r.type = affine.label().value();
        r.removed_node = theta.removed_node();
        r.levi = lt.str();
        r.center_rank = lt.center_rank;
        r.g = g;
        r.godement_threshold = -2 * g;
        r.continuation_threshold = -g;
        r.self_associate = verdict.self_associate;
        r.constant_term_trivial = verdict.trivial;
        r.elements_searched = cert.elements_searched;
        rows.push_back(std::move(r));
    }
    return rows;
}

/// All rows for affine types of finite rank <= max_rank, ordered by type then
/// node. Types are processed concurrently; the order does not depend on timing.
inline std::vector<AtlasRow> build_atlas(int max_rank, int search_bound) {
    if (max_rank < 1 || max_rank > 8) throw DomainError("max_rank must lie in 1..8");
    const auto types = affine_catalog(max_rank);
    std::vector<std::future<std::vector<AtlasRow>>> jobs;
    for (const auto& t : types)
        jobs.push_back(std::async(std::launch::async, [t, search_bound] { return atlas_rows(t, search_bound); }));
    std::vector<AtlasRow> out;
    for (auto& j : jobs) {
        auto rows = j.get();
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

inline nlohmann::json atlas_to_json(const std::vector<AtlasRow>& rows) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rows)
        a.push_back({{"type", r.type.str()},
                     {"removed_node", r.removed_node},
                     {"levi", r.levi},
                     {"center_rank", r.center_rank},
                     {"g", r.g},
                     {"godement_threshold", r.godement_threshold},
                     {"continuation_threshold", r.continuation_threshold},
                     {"self_associate", r.self_associate},
                     {"constant_term_trivial", r.constant_term_trivial},
                     {"elements_searched", r.elements_searched}});
    return a;
}

inline std::string atlas_to_tsv(const std::vector<AtlasRow>& rows) {
    std::ostringstream os;
    os << "type\tremoved_node\tlevi\tcenter_rank\tg\tgodement_threshold\tcontinuation_threshold\tself_associate\t"
          "constant_term_trivial\telements_searched\n";
    for (const auto& r : rows)
        os << r.type.str() << '\t' << r.removed_node << '\t' << r.levi << '\t' << r.center_rank << '\t' << r.g << '\t'
           << r.godement_threshold << '\t' << r.continuation_threshold << '\t' << (r.self_associate ? "true" : "false")
           << '\t' << (r.constant_term_trivial ? "true" : "false") << '\t' << r.elements_searched << '\n';
    return os.str();
}

} // namespace loopeis

#pragma once

// JSON encodings of the library's values. Integers stay exact, reals are
// written as doubles and complex numbers as [re, im] pairs.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"
#include "criterion.hpp"
#include "error.hpp"
#include "maass_selberg.hpp"
#include "parabolic.hpp"
#include "roots.hpp"
#include "weyl.hpp"

namespace loopeis::io {

using nlohmann::json;

inline json matrix_to_json(const IntMatrix& m) { return m.to_rows(); }

inline json cartan_to_json(const CartanMatrix& a) {
    json j;
    if (a.label()) {
        j["series"] = std::string(1, static_cast<char>(a.label()->series));
        j["rank"] = a.label()->rank;
        j["label"] = a.label()->str();
    }
    j["affine"] = a.is_affine();
    j["matrix"] = matrix_to_json(a.entries());
    return j;
}

/// Accepts {"series": "E", "rank": 6, "affine": true} or {"matrix": [[...]]}.
inline CartanMatrix cartan_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("Cartan matrix JSON must be an object");
    if (j.contains("matrix")) {
        const auto rows = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
        return CartanMatrix::from_entries(IntMatrix::from_rows(rows));
    }
    const auto series = j.at("series").get<std::string>();
    if (series.size() != 1) throw DomainError("series must be a single letter A-G");
    TypeLabel t = TypeLabel::parse(series + std::to_string(j.at("rank").get<int>()));
    t.affine = j.value("affine", false);
    return finite_cartan(t);
}

inline json diagram_to_json(const DynkinDiagram& d) {
    json nodes = json::array();
    for (int v = 1; v <= d.nodes; ++v) nodes.push_back(v);
    json edges = json::array();
    for (const auto& e : d.edges) {
        json je{{"from", e.a}, {"to", e.b}, {"bond", e.bond}};
        je["arrow_to"] = e.arrow_to == 0 ? json(nullptr) : json(e.arrow_to);
        edges.push_back(je);
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

inline DynkinDiagram diagram_from_json(const json& j) {
    DynkinDiagram d;
    d.nodes = static_cast<int>(j.at("nodes").size());
    for (const auto& je : j.at("edges")) {
        DynkinEdge e;
        e.a = je.at("from").get<int>();
        e.b = je.at("to").get<int>();
        e.bond = je.at("bond").get<int>();
        e.arrow_to = je.contains("arrow_to") && !je.at("arrow_to").is_null() ? je.at("arrow_to").get<int>() : 0;
        d.edges.push_back(e);
    }
    return d;
}

inline json roots_to_json(const std::vector<RootVector>& roots) {
    json a = json::array();
    for (const auto& r : roots) a.push_back(r.coords());
    return a;
}

inline json root_system_to_json(const RootSystemData& d) {
    return {{"cartan", cartan_to_json(d.cartan)},
            {"positive_roots", roots_to_json(d.positive_roots)},
            {"highest_root", d.highest_root.coords()},
            {"marks", d.marks},
            {"comarks", d.comarks},
            {"dual_coxeter", d.dual_coxeter}};
}

inline json affine_roots_to_json(const std::vector<AffineRoot>& roots) {
    json a = json::array();
    for (const auto& r : roots)
        a.push_back({{"coords", r.coords.coords()},
                     {"delta_multiple", r.delta_multiple},
                     {"imaginary", r.imaginary},
                     {"positive", r.positive()}});
    return a;
}

inline json weyl_to_json(const WeylElement& w) {
    return {{"word", w.word()}, {"length", w.length()}, {"matrix", matrix_to_json(w.action())}};
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw DomainError("expected a number or an [re, im] pair");
}

inline json functional_to_json(const ComplexFunctional& f) {
    json a = json::array();
    for (const auto& v : f.values) a.push_back(complex_to_json(v));
    return a;
}

/// An array whose entries are numbers or [re, im] pairs.
inline ComplexFunctional functional_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("functional must be a JSON array");
    std::vector<Complex> v;
    for (const auto& x : j) v.push_back(complex_from_json(x));
    return ComplexFunctional(std::move(v));
}

inline json levi_to_json(const LeviType& lt) {
    json comps = json::array();
    for (const auto& c : lt.components) comps.push_back({{"type", c.type.str()}, {"nodes", c.nodes}});
    return {{"theta", lt.theta.indices()}, {"levi", lt.str()}, {"components", comps}, {"center_rank", lt.center_rank}};
}

inline json obstruction_to_json(const ObstructionTrace& t) {
    return {{"w0_theta", weyl_to_json(t.w0_theta)},
            {"theta_image", t.theta_image},
            {"theta_to_minus_theta", t.theta_to_minus_theta},
            {"removed_image", t.removed_image.coords()},
            {"removed_coefficient", t.removed_coefficient},
            {"removed_image_nonnegative", t.removed_image_nonnegative},
            {"delta", t.delta.coords()},
            {"delta_positive", t.delta_positive},
            {"delta_fixed_by_simple_reflections", t.delta_fixed_by_simple_reflections},
            {"valid", t.valid()}};
}

inline json certificate_to_json(const AssociateCertificate& c) {
    json j{{"removed_node", c.removed_node},
           {"theta", c.theta},
           {"self_associate", c.self_associate},
           {"search_bound", c.search_bound},
           {"elements_searched", c.elements_searched}};
    j["witness"] = c.witness ? weyl_to_json(*c.witness) : json(nullptr);
    if (c.obstruction) {
        j["obstruction"] = obstruction_to_json(*c.obstruction);
        j["delta_fixed_by_all_searched"] = c.delta_fixed_by_all_searched;
    }
    return j;
}

inline json verdict_to_json(const ConstantTermVerdict& v) {
    json comps = json::array();
    for (const auto& c : v.comparisons)
        comps.push_back({{"other_removed", c.other_removed}, {"other_levi", c.other_levi}, {"levi_isomorphic", c.levi_isomorphic}});
    return {{"trivial_constant_term", v.trivial},
            {"self_associate", v.self_associate},
            {"levi", v.levi},
            {"comparisons", comps},
            {"explanation", v.explanation()}};
}

inline json ms_value_to_json(const MSValue& v) {
    return {{"value", v.value ? complex_to_json(*v.value) : json(nullptr)},
            {"pole", v.pole},
            {"denominator", complex_to_json(v.denominator)}};
}

inline json scan_to_json(const ScanReport& r) {
    json pts = json::array();
    for (const auto& p : r.points) {
        pts.push_back({{"nu_index", p.nu_index},
                       {"nu_prime_index", p.nu_prime_index},
                       {"nu", functional_to_json(p.nu)},
                       {"nu_prime", functional_to_json(p.nu_prime)},
                       {"sigma_c", complex_to_json(p.sigma_c)},
                       {"sigma_prime_c", complex_to_json(p.sigma_prime_c)},
                       {"convergent", p.convergent},
                       {"continued", p.continued},
                       {"value", p.value.value ? complex_to_json(*p.value.value) : json(nullptr)},
                       {"pole", p.value.pole}});
    }
    return {{"points", pts}, {"pole_count", r.pole_count}, {"poles_on_holomorphic_side", r.poles_on_holomorphic_side}};
}

template <class T>
json scalar_to_json(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (x.denominator() == 1) return x.numerator();
        return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
    } else if constexpr (std::is_same_v<T, Complex>) {
        return complex_to_json(x);
    } else {
        return x;
    }
}

template <class T>
json region_to_json(const RegionReport<T>& r) {
    return {{"region", to_string(r.region)}, {"nu_c", scalar_to_json(r.central_value)}, {"g", r.g}};
}

} // namespace loopeis::io

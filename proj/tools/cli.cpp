#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopeis/atlas.hpp"
#include "loopeis/io.hpp"
#include "loopeis/loopeis.hpp"

namespace loopeis::cli {

namespace {

using nlohmann::json;

// Malformed user input (bad JSON, unreadable file); reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("could not parse " + what + " as JSON: " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() != '[') t = "[" + t + "]";
    const auto j = parse_json(t, "node list");
    if (!j.is_array()) throw UsageError("expected a list of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw UsageError("expected a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
    const auto j = parse_json(text, what);
    if (!j.is_array()) throw UsageError(what + " must be a JSON array of numbers");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) throw UsageError(what + " must be a JSON array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

struct AmbientOptions {
    std::string type;
    std::string matrix_file;

    void attach(CLI::App* sub) {
        sub->add_option("--type", type, "type label, e.g. A2, E6affine");
        sub->add_option("--matrix-file", matrix_file, "JSON file with {\"matrix\": ...} or {\"series\", \"rank\", \"affine\"}");
    }

    CartanMatrix resolve() const {
        if (!matrix_file.empty()) return io::cartan_from_json(read_json_file(matrix_file));
        if (type.empty()) throw UsageError("one of --type or --matrix-file is required");
        return finite_cartan(TypeLabel::parse(type));
    }
};

template <class T>
json godement_report(const CartanMatrix& a, const LinearFunctional<T>& nu) {
    const auto report = godement_cuspidal(a, nu);
    auto j = io::region_to_json(report);
    j["minimal"] = godement_minimal(nu);
    j["godement_threshold"] = -2 * report.g;
    j["continuation_threshold"] = -report.g;
    j["implication_holds"] = implication_check(a, nu);
    return j;
}

json godement_command(const CartanMatrix& a, const json& nu) {
    if (!nu.is_array()) throw UsageError("--nu must be a JSON array");
    bool all_int = true, all_real = true;
    for (const auto& x : nu) {
        all_int = all_int && x.is_number_integer();
        all_real = all_real && x.is_number();
    }
    if (all_int) {
        std::vector<Rational> v;
        for (const auto& x : nu) v.emplace_back(x.get<std::int64_t>());
        return godement_report(a, LinearFunctional<Rational>(v));
    }
    if (all_real) {
        std::vector<double> v;
        for (const auto& x : nu) v.push_back(x.get<double>());
        return godement_report(a, LinearFunctional<double>(v));
    }
    return godement_report(a, io::functional_from_json(nu));
}

MSOptions ms_options(const std::string& sign, const std::string& denom, double tolerance) {
    MSOptions o;
    if (sign == "negative")
        o.sign = MSSign::negative;
    else if (sign == "positive")
        o.sign = MSSign::positive;
    else
        throw UsageError("--sign must be negative or positive");
    if (denom == "central")
        o.xi_denominator = XiDenominator::central;
    else if (denom == "h0")
        o.xi_denominator = XiDenominator::h0;
    else
        throw UsageError("--denominator must be central or h0");
    if (!(tolerance >= 0)) throw UsageError("--tolerance must be non-negative");
    o.pole_tolerance = tolerance;
    return o;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine root systems, Weyl groups, parabolic data and Eisenstein-series criteria", "loopeis"};
    app.require_subcommand(1);

    // cartan
    AmbientOptions cartan_amb;
    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix, Dynkin diagram and classification");
    cartan_amb.attach(cartan_cmd);

    // roots
    AmbientOptions roots_amb;
    int depth = 3;
    auto* roots_cmd = app.add_subcommand("roots", "root system data; affine types add roots up to a delta depth");
    roots_amb.attach(roots_cmd);
    roots_cmd->add_option("--depth", depth, "delta depth for affine roots")->check(CLI::NonNegativeNumber);

    // weyl
    AmbientOptions weyl_amb;
    std::string word_text = "[]", vector_text;
    auto* weyl_cmd = app.add_subcommand("weyl", "reduce a word and apply it to a root vector");
    weyl_amb.attach(weyl_cmd);
    weyl_cmd->add_option("--word", word_text, "generator indices, e.g. [1,2,1]");
    weyl_cmd->add_option("--vector", vector_text, "simple-root coordinates, e.g. [1,0]");

    // levi
    AmbientOptions levi_amb;
    std::string theta_text;
    int levi_remove = 0;
    auto* levi_cmd = app.add_subcommand("levi", "Levi type of a parabolic subset");
    levi_amb.attach(levi_cmd);
    auto* theta_opt = levi_cmd->add_option("--theta", theta_text, "nodes of theta, e.g. 1,2,3");
    levi_cmd->add_option("--remove", levi_remove, "use theta = all nodes but this one")->excludes(theta_opt);

    // associate
    AmbientOptions assoc_amb;
    int assoc_node = 0, assoc_other = 0, max_length = 16;
    auto* assoc_cmd = app.add_subcommand("associate", "self-associativity and constant-term triviality for theta_i");
    assoc_amb.attach(assoc_cmd);
    assoc_cmd->add_option("--node", assoc_node, "removed node i")->required();
    assoc_cmd->add_option("--other", assoc_other, "compare Levi types with theta_j");
    assoc_cmd->add_option("--max-length", max_length, "witness search bound")->check(CLI::NonNegativeNumber);

    // godement
    AmbientOptions god_amb;
    std::string nu_text;
    auto* god_cmd = app.add_subcommand("godement", "region of nu(c) relative to -2g and -g");
    god_amb.attach(god_cmd);
    god_cmd->add_option("--nu", nu_text, "values on h_1..h_{l+1}: integers (exact), reals or [re,im]")->required();

    // extend
    AmbientOptions ext_amb;
    std::string target_text;
    auto* ext_cmd = app.add_subcommand("extend", "extend a central value to a functional on all coroots");
    ext_amb.attach(ext_cmd);
    ext_cmd->add_option("--target", target_text, "central value: integer (exact), real or [re,im]")->required();

    // ms / xi
    AmbientOptions ms_amb;
    std::string ms_nu, ms_nu_prime, ms_h0, ms_pairing = "1", ms_sign = "negative", ms_denom = "central";
    double tolerance = 1e-12;
    auto* ms_cmd = app.add_subcommand("ms", "Maass-Selberg inner product of truncated Eisenstein series");
    ms_amb.attach(ms_cmd);
    ms_cmd->add_option("--nu", ms_nu, "nu as a JSON array")->required();
    ms_cmd->add_option("--nu-prime", ms_nu_prime, "nu' as a JSON array")->required();
    ms_cmd->add_option("--h0", ms_h0, "H0 coefficients over h_1..h_{l+1}")->required();
    ms_cmd->add_option("--pairing", ms_pairing, "cusp-form pairing: number or [re,im]");
    ms_cmd->add_option("--sign", ms_sign, "leading sign: negative (default) or positive");
    ms_cmd->add_option("--tolerance", tolerance, "pole threshold on |denominator|");

    AmbientOptions xi_amb;
    std::string xi_mu, xi_mu_prime, xi_h0, xi_pairing = "1", xi_denom = "central";
    double xi_tolerance = 1e-12;
    auto* xi_cmd = app.add_subcommand("xi", "kernel Xi(mu, conj(mu'))");
    xi_amb.attach(xi_cmd);
    xi_cmd->add_option("--mu", xi_mu, "mu as a JSON array")->required();
    xi_cmd->add_option("--mu-prime", xi_mu_prime, "mu' as a JSON array")->required();
    xi_cmd->add_option("--h0", xi_h0, "H0 coefficients")->required();
    xi_cmd->add_option("--pairing", xi_pairing, "cusp-form pairing");
    xi_cmd->add_option("--denominator", xi_denom, "central (default) or h0");
    xi_cmd->add_option("--tolerance", xi_tolerance, "pole threshold");

    AmbientOptions scan_amb;
    std::string grid_file, scan_sign = "negative";
    double scan_tolerance = 1e-12;
    auto* scan_cmd = app.add_subcommand("scan", "evaluate the inner product over a grid of (nu, nu')");
    scan_amb.attach(scan_cmd);
    scan_cmd->add_option("--grid-file", grid_file, "JSON {nu: [...], nu_prime: [...], h0: [...], pairing}")->required();
    scan_cmd->add_option("--sign", scan_sign, "leading sign");
    scan_cmd->add_option("--tolerance", scan_tolerance, "pole threshold");

    // atlas
    int max_rank = 8, atlas_length = 16;
    std::vector<std::string> formats;
    std::string out_prefix;
    auto* atlas_cmd = app.add_subcommand("atlas", "table of all maximal parabolics of affine types");
    atlas_cmd->add_option("--max-rank", max_rank, "largest finite rank (1..8)");
    atlas_cmd->add_option("--format", formats, "json and/or tsv")->check(CLI::IsMember({"json", "tsv"}));
    atlas_cmd->add_option("--out", out_prefix, "write PREFIX.json / PREFIX.tsv instead of standard output");
    atlas_cmd->add_option("--max-length", atlas_length, "witness search bound")->check(CLI::NonNegativeNumber);

    std::vector<std::string> argv_store{"loopeis"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        json result;
        if (*cartan_cmd) {
            const auto a = cartan_amb.resolve();
            result = io::cartan_to_json(a);
            result["diagram"] = io::diagram_to_json(dynkin_diagram(a));
            result["determinant"] = determinant(a.entries());
            result["symmetrizer"] = a.symmetrizer();
            if (a.is_affine()) {
                result["null_root"] = delta(a).coords();
                result["central_coroot"] = central_coroot(a);
            }
        } else if (*roots_cmd) {
            const auto a = roots_amb.resolve();
            if (a.is_affine()) {
                result = io::root_system_to_json(root_system_data(a.finite_part()));
                result["cartan"] = io::cartan_to_json(a);
                result["delta"] = delta(a).coords();
                result["central_coroot"] = central_coroot(a);
                result["depth"] = depth;
                result["affine_roots"] = io::affine_roots_to_json(affine_roots(a, depth));
            } else if (a.is_irreducible()) {
                result = io::root_system_to_json(root_system_data(a));
            } else {
                result = {{"cartan", io::cartan_to_json(a)}, {"positive_roots", io::roots_to_json(positive_roots(a))}};
            }
        } else if (*weyl_cmd) {
            const auto a = weyl_amb.resolve();
            const auto w = reduce(a, parse_int_list(word_text));
            result["element"] = io::weyl_to_json(w);
            if (!vector_text.empty()) {
                std::vector<std::int64_t> v;
                for (int x : parse_int_list(vector_text)) v.push_back(x);
                result["image"] = w.apply(RootVector(v)).coords();
            }
        } else if (*levi_cmd) {
            const auto a = levi_amb.resolve();
            std::vector<int> theta;
            if (levi_remove != 0)
                theta = complement_of(a, levi_remove);
            else if (!theta_text.empty())
                theta = parse_int_list(theta_text);
            else
                throw UsageError("one of --theta or --remove is required");
            result = io::levi_to_json(levi_type(ParabolicSubset(a, theta)));
        } else if (*assoc_cmd) {
            const auto a = assoc_amb.resolve();
            if (a.is_finite()) {
                const auto cert = finite_self_associate(a, assoc_node);
                result = {{"self_associate", cert.self_associate}, {"certificate", io::certificate_to_json(cert)}};
            } else {
                const auto theta = ParabolicSubset::maximal(a, assoc_node);
                const auto v = constant_term_is_trivial(theta, max_length);
                result = io::verdict_to_json(v);
                result["certificate"] = io::certificate_to_json(v.certificate);
                if (assoc_other != 0)
                    result["associate_necessary"] = associate_necessary(theta, ParabolicSubset::maximal(a, assoc_other));
            }
        } else if (*god_cmd) {
            result = godement_command(god_amb.resolve(), parse_json(nu_text, "--nu"));
        } else if (*ext_cmd) {
            const auto a = ext_amb.resolve();
            const auto t = parse_json(target_text, "--target");
            if (t.is_number_integer()) {
                const auto nu = extend_from_central(a, Rational(t.get<std::int64_t>()));
                json vals = json::array();
                for (const auto& x : nu.values) vals.push_back(io::scalar_to_json(x));
                result = {{"nu", vals}, {"nu_c", io::scalar_to_json(central_value(a, nu))}, {"minimal", godement_minimal(nu)}};
            } else {
                const auto nu = extend_from_central(a, io::complex_from_json(t));
                result = {{"nu", io::functional_to_json(nu)},
                          {"nu_c", io::complex_to_json(central_value(a, nu))},
                          {"minimal", godement_minimal(nu)}};
            }
        } else if (*ms_cmd) {
            const auto a = ms_amb.resolve();
            const auto opt = ms_options(ms_sign, "central", tolerance);
            MSInput in;
            in.cusp_pairing = io::complex_from_json(parse_json(ms_pairing, "--pairing"));
            in.sigma = sigma(io::functional_from_json(parse_json(ms_nu, "--nu")), a);
            in.sigma_prime = sigma(io::functional_from_json(parse_json(ms_nu_prime, "--nu-prime")), a);
            in.h0 = parse_real_list(ms_h0, "--h0");
            result = io::ms_value_to_json(ms_inner_product(a, in, opt));
            result["sigma_c"] = io::complex_to_json(central_value(a, in.sigma));
            result["sigma_prime_c"] = io::complex_to_json(central_value(a, in.sigma_prime));
            result["sign"] = ms_sign;
        } else if (*xi_cmd) {
            const auto a = xi_amb.resolve();
            const auto opt = ms_options("negative", xi_denom, xi_tolerance);
            const auto v = xi_kernel(a, io::complex_from_json(parse_json(xi_pairing, "--pairing")),
                                     io::functional_from_json(parse_json(xi_mu, "--mu")),
                                     io::functional_from_json(parse_json(xi_mu_prime, "--mu-prime")),
                                     parse_real_list(xi_h0, "--h0"), opt);
            result = io::ms_value_to_json(v);
            result["denominator_mode"] = xi_denom;
        } else if (*scan_cmd) {
            const auto a = scan_amb.resolve();
            const auto grid = read_json_file(grid_file);
            std::vector<ComplexFunctional> nus, nups;
            for (const auto& x : grid.at("nu")) nus.push_back(io::functional_from_json(x));
            for (const auto& x : grid.at("nu_prime")) nups.push_back(io::functional_from_json(x));
            const auto h0 = grid.at("h0").get<std::vector<double>>();
            const Complex pairing = grid.contains("pairing") ? io::complex_from_json(grid.at("pairing")) : Complex{1.0, 0.0};
            result = io::scan_to_json(region_scan(a, nus, nups, h0, pairing, ms_options(scan_sign, "central", scan_tolerance)));
        } else if (*atlas_cmd) {
            if (formats.empty()) formats.push_back("json");
            if (out_prefix.empty() && formats.size() > 1)
                throw UsageError("several formats need --out");
            const auto rows = build_atlas(max_rank, atlas_length);
            for (const auto& f : formats) {
                const std::string text = f == "json" ? atlas_to_json(rows).dump(2) + "\n" : atlas_to_tsv(rows);
                if (out_prefix.empty())
                    out << text;
                else
                    write_file(out_prefix + "." + f, text);
            }
            return 0;
        }
        out << result.dump(2) << "\n";
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "usage error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace loopeis::cli

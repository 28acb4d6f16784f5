#include "glci_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "glci/atilde.hpp"
#include "glci/classify.hpp"
#include "glci/coxeter.hpp"
#include "glci/error.hpp"
#include "glci/matfac.hpp"
#include "json.hpp"

namespace glci::cli {

using nlohmann::json;

std::vector<int> parse_weights(const std::string& text) {
    if (text == "-") return {};
    if (text.empty()) throw InvalidInput("--weights needs a comma-separated list, or '-' for none");
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            throw InvalidInput("malformed weight '" + item + "'");
        }
        if (used != item.size()) throw InvalidInput("malformed weight '" + item + "'");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw InvalidInput("trailing comma in weight list");
    return out;
}

void parse_lambda_flag(const std::string& text, RunConfig& cfg) {
    if (text == "symbolic") {
        cfg.lambda_source = LambdaSource::Symbolic;
    } else if (text == "generic") {
        cfg.lambda_source = LambdaSource::Generic;
    } else if (text.rfind("generic:", 0) == 0) {
        cfg.lambda_source = LambdaSource::Generic;
        try {
            cfg.lambda_seed = std::stoi(text.substr(8));
        } catch (const std::logic_error&) {
            throw InvalidInput("malformed lambda seed in '" + text + "'");
        }
        if (*cfg.lambda_seed < 0) throw InvalidInput("lambda seed must be nonnegative");
    } else {
        cfg.lambda_source = LambdaSource::File;
        cfg.lambda_file = text;
    }
}

namespace {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "dot") return Format::Dot;
    throw InvalidInput("unknown format '" + s + "'");
}

WeightSystem require_weight_system(const RunConfig& cfg) {
    if (!cfg.dim) throw InvalidInput("--dim is required");
    if (!cfg.weights) throw InvalidInput("--weights is required ('-' for none)");
    return make_weight_system(*cfg.dim, *cfg.weights);
}

// Attaches numeric coefficients when the command needs them or the user
// asked for them.
WeightSystem with_lambda(const RunConfig& cfg, const WeightSystem& w, bool need_numeric) {
    switch (cfg.lambda_source) {
        case LambdaSource::Symbolic:
            return need_numeric ? with_generic_lambda(w) : w;
        case LambdaSource::Generic: {
            if (!cfg.lambda_seed) return with_generic_lambda(w);
            auto g = make_weight_system(w.d, w.weights, vandermonde_lambda(w, *cfg.lambda_seed));
            if (!general_position(g)) throw InvalidInput("lambda seed gives coefficients that are not in general position");
            return g;
        }
        case LambdaSource::File: {
            std::ifstream in(cfg.lambda_file);
            if (!in) throw InvalidInput("cannot read lambda file '" + cfg.lambda_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            auto g = make_weight_system(w.d, w.weights, lambda_from_json(buf.str()));
            if (!general_position(g)) throw InvalidInput("lambda file: hyperplanes are not in general position");
            return g;
        }
    }
    return w;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string frac_cy_text(const std::optional<FracCY>& f) {
    if (!f) return "none";
    if (f->zero_category) return "zero category";
    return to_string(f->m) + "/" + to_string(f->l) + " (reduced " + to_string(f->m_reduced) + "/" +
           to_string(f->l_reduced) + ")";
}

json frac_cy_json(const std::optional<FracCY>& f) {
    if (!f) return nullptr;
    if (f->zero_category) return json{{"zero_category", true}};
    return json{{"zero_category", false},
                {"m", to_string(f->m)},
                {"l", to_string(f->l)},
                {"m_reduced", to_string(f->m_reduced)},
                {"l_reduced", to_string(f->l_reduced)}};
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

json report_json(const ClassificationReport& r, bool full) {
    json j{{"weight_system", to_string(r.w)},
           {"d", r.w.d},
           {"weights", r.w.weights},
           {"trichotomy", to_string(r.trichotomy)},
           {"delta_omega", to_string(r.delta_omega)},
           {"cm_finite", r.cm_finite},
           {"d_cm_finite", to_string(r.d_cm_finite)},
           {"vb_finite", r.vb_finite},
           {"gldim_canonical", r.gldim_canonical},
           {"frac_cy", frac_cy_json(r.frac_cy)}};
    if (full) {
        std::vector<std::string> inv;
        for (const auto& f : r.cosets.invariant_factors) inv.push_back(to_string(f));
        j["is_regular"] = r.is_regular;
        j["is_hypersurface"] = r.is_hypersurface;
        j["omega"] = to_string(omega(r.w));
        j["cosets"] = {{"infinite", r.cosets.infinite}, {"count", to_string(r.cosets.count)}, {"invariant_factors", inv}};
        j["k0_rank"] = r.k0_rank;
        j["cm_rank"] = r.cm_rank;
        j["orlov_delta"] = r.orlov_delta;
    }
    return j;
}

void report_text(const ClassificationReport& r, bool full, std::ostream& out) {
    out << "weight system: " << to_string(r.w) << "\n"
        << "trichotomy: " << to_string(r.trichotomy) << "\n"
        << "delta(omega): " << to_string(r.delta_omega) << "\n";
    if (full) {
        out << "omega: " << to_string(omega(r.w)) << "\n"
            << "regular: " << yes_no(r.is_regular) << "\n"
            << "hypersurface: " << yes_no(r.is_hypersurface) << "\n";
    }
    out << "cm_finite: " << yes_no(r.cm_finite) << "\n"
        << "d_cm_finite: " << to_string(r.d_cm_finite) << "\n"
        << "vb_finite: " << yes_no(r.vb_finite) << "\n"
        << "gldim_canonical: " << r.gldim_canonical << "\n"
        << "frac_cy: " << frac_cy_text(r.frac_cy) << "\n";
    if (full) {
        out << "cosets_mod_omega: ";
        if (r.cosets.infinite) {
            out << "infinite";
        } else {
            out << to_string(r.cosets.count);
        }
        out << " (invariant factors ";
        for (std::size_t i = 0; i < r.cosets.invariant_factors.size(); ++i)
            out << (i ? "," : "") << to_string(r.cosets.invariant_factors[i]);
        out << ")\n"
            << "k0_rank: " << r.k0_rank << "\n"
            << "cm_rank: " << r.cm_rank << "\n"
            << "orlov_delta: " << r.orlov_delta << "\n";
    }
}

int cmd_info(const RunConfig& cfg, std::ostream& out, bool full) {
    const auto w = require_weight_system(cfg);
    const auto r = classify(w);
    int status = kExitOk;
    json extra;
    std::ostringstream text;
    if (cfg.slice) {
        const auto sl = tilting_slice(w);
        extra["slice"] = {{"size", sl.verification.size},
                          {"coset_count", to_string(sl.verification.coset_count)},
                          {"l_max", sl.verification.l_max},
                          {"ok", sl.verification.ok()}};
        text << "slice: |S| = " << sl.verification.size << ", cosets = " << to_string(sl.verification.coset_count)
             << ", L_max = " << sl.verification.l_max << ", " << (sl.verification.ok() ? "verified" : "FAILED");
        if (!sl.verification.ok()) {
            text << " (" << sl.verification.detail << ")";
            status = kExitFailure;
        }
        text << "\n";
    }
    if (cfg.knoerrer) {
        const auto partner = knoerrer_partner(w);  // throws when the quivers differ
        extra["knoerrer_partner"] = to_string(partner);
        text << "knoerrer partner: " << to_string(partner) << ", CM quivers isomorphic\n";
    }
    if (cfg.format == Format::Json) {
        json j = report_json(r, full);
        for (auto& [k, v] : extra.items()) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        report_text(r, full, out);
        out << text.str();
    }
    return status;
}

int cmd_quiver(const RunConfig& cfg, std::ostream& out) {
    const auto base = require_weight_system(cfg);
    const auto w = with_lambda(cfg, base, cfg.gldim);
    std::vector<GroupElement> I;
    if (cfg.interval == "canonical") {
        I = canonical_interval(w);
    } else if (cfg.interval == "cm") {
        I = cm_interval(w);
    } else if (cfg.interval == "range") {
        if (cfg.from.empty() || cfg.to.empty()) throw InvalidInput("--interval range needs --from and --to");
        I = interval(w, parse_group_element(w, cfg.from), parse_group_element(w, cfg.to));
    } else {
        throw InvalidInput("unknown interval '" + cfg.interval + "'");
    }
    const Quiver q = i_canonical_quiver(w, I);
    if (!cfg.gldim) {
        out << export_quiver(q, cfg.format);
        return kExitOk;
    }
    if (cfg.format == Format::Dot) throw InvalidInput("--gldim cannot be combined with --format dot");
    const auto A = structure_constants(w, I);
    const int gd = global_dimension(A);
    if (cfg.format == Format::Json) {
        auto j = json::parse(export_quiver(q, Format::Json));
        j["algebra_dim"] = A.dim();
        j["global_dimension"] = gd;
        out << j.dump(2) << "\n";
    } else {
        out << export_quiver(q, Format::Text) << "algebra dimension: " << A.dim() << "\n"
            << "global dimension: " << gd << "\n";
    }
    return kExitOk;
}

int cmd_coxeter(const RunConfig& cfg, std::ostream& out) {
    const auto w = require_weight_system(cfg);
    const auto factors = coxeter_factors(w);
    const auto chi = coxeter_polynomial(w);
    std::optional<bool> agrees;
    std::size_t matrix_size = 0;
    if (cfg.check_matrix) {
        const auto act = omega_action_matrix(w);
        matrix_size = act.matrix.rows();
        const auto cp = char_poly(act.matrix);
        agrees = cp == chi || cp == -chi;
    }
    if (cfg.format == Format::Json) {
        json j{{"weight_system", to_string(w)}, {"factored", factored_form(factors)}, {"degree", chi.degree()}};
        j["coefficients"] = json::array();
        for (const auto& c : chi.coeffs()) j["coefficients"].push_back(to_string(c));
        j["factors"] = json::array();
        for (const auto& f : factors) {
            json coeffs = json::array();
            for (const auto& c : f.poly.coeffs()) coeffs.push_back(to_string(c));
            j["factors"].push_back({{"args", f.args}, {"poly", coeffs}, {"exponent", f.exponent}});
        }
        if (agrees) j["matrix_check"] = {{"size", matrix_size}, {"agrees", *agrees}};
        out << j.dump(2) << "\n";
    } else {
        out << factored_form(factors) << "\n"
            << "expanded: " << chi.to_string() << "\n"
            << "degree: " << chi.degree() << "\n";
        if (agrees)
            out << "matrix route: " << (*agrees ? "agrees" : "DISAGREES") << " (" << matrix_size << "x" << matrix_size
                << ")\n";
    }
    return agrees.value_or(true) ? kExitOk : kExitFailure;
}

json poly_json(const MultiPoly& p, std::size_t n) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> x(n, 0), lam(n, 0);
        for (std::size_t i = 0; i < n && i < e.size(); ++i) x[i] = e[i];
        for (std::size_t i = 0; i < n && n + i < e.size(); ++i) lam[i] = e[n + i];
        terms.push_back({{"coeff", to_string(c)}, {"x", x}, {"lambda", lam}});
    }
    return terms;
}

json matrix_json(const PolyMatrix& m, std::size_t n) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_json(m(i, j), n));
        rows.push_back(row);
    }
    return rows;
}

void matrix_text(const std::string& name, const PolyMatrix& m, const std::vector<Subset>& rows,
                 const std::vector<Subset>& cols, std::size_t n, std::ostream& out) {
    out << name << " columns:";
    for (auto c : cols) out << " " << subset_to_string(c, n);
    out << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  " << subset_to_string(rows[i], n) << ": [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).to_string();
        out << "]\n";
    }
}

int cmd_mf(const RunConfig& cfg, std::ostream& out) {
    const auto w = normalize_weights(require_weight_system(cfg));
    const std::size_t n = w.n();
    if (cfg.ell) {
        const auto pair = mf_build(w, *cfg.ell);
        const auto rep = mf_verify(pair);
        std::optional<MinorReport> minor;
        if (cfg.minors) minor = mf_minor_nonsingular(pair);
        if (cfg.format == Format::Json) {
            json j{{"weight_system", to_string(w)}, {"ell", pair.ell}};
            std::vector<std::string> odd, even;
            for (auto s : pair.odd) odd.push_back(subset_to_string(s, n));
            for (auto s : pair.even) even.push_back(subset_to_string(s, n));
            j["odd"] = odd;
            j["even"] = even;
            j["M"] = matrix_json(pair.M, n);
            j["N"] = matrix_json(pair.N, n);
            j["verified"] = rep.ok();
            if (minor) j["minor"] = {{"nonsingular", minor->nonsingular}, {"method", minor->method}, {"attempts", minor->attempts}};
            out << j.dump(2) << "\n";
        } else {
            out << "weight system: " << to_string(w) << ", ell = (" << join(pair.ell) << ")\n";
            matrix_text("M", pair.M, pair.odd, pair.even, n, out);
            matrix_text("N", pair.N, pair.even, pair.odd, n, out);
            out << "identities: " << (rep.ok() ? "verified" : "FAILED: " + rep.detail) << "\n";
            if (minor)
                out << "minor: " << (minor->nonsingular ? "nonsingular" : "singular") << " (" << minor->method << ")\n";
        }
        return rep.ok() && (!minor || minor->nonsingular) ? kExitOk : kExitFailure;
    }

    const auto ells = mf_enumerate(w);
    if (!cfg.verify) {
        if (cfg.format == Format::Json) {
            out << json{{"weight_system", to_string(w)}, {"indices", ells}}.dump(2) << "\n";
        } else {
            out << ells.size() << " indices\n";
            for (const auto& l : ells) out << "  (" << join(l) << ")\n";
        }
        return kExitOk;
    }
    std::size_t verified = 0, nonsingular = 0;
    std::vector<std::string> failures;
    for (const auto& l : ells) {
        const auto pair = mf_build(w, l);
        const auto rep = mf_verify(pair);
        if (rep.ok())
            ++verified;
        else
            failures.push_back("(" + join(l) + "): " + rep.detail);
        if (cfg.minors) {
            if (mf_minor_nonsingular(pair).nonsingular)
                ++nonsingular;
            else
                failures.push_back("(" + join(l) + "): singular minor");
        }
    }
    if (cfg.format == Format::Json) {
        json j{{"weight_system", to_string(w)}, {"count", ells.size()}, {"verified", verified}, {"failures", failures}};
        if (cfg.minors) j["nonsingular_minors"] = nonsingular;
        out << j.dump(2) << "\n";
    } else {
        if (failures.empty())
            out << ells.size() << " factorizations, all identities verified\n";
        else
            out << ells.size() << " factorizations, " << verified << " verified\n";
        if (cfg.minors) out << nonsingular << " of " << ells.size() << " minors nonsingular\n";
        for (const auto& f : failures) out << "  FAILED " << f << "\n";
    }
    return failures.empty() ? kExitOk : kExitFailure;
}

int cmd_atilde(const RunConfig& cfg, std::ostream& out) {
    const auto w = require_weight_system(cfg);
    const auto oq = atilde_presentation(w);
    const auto rep = verify_cut(oq);
    std::size_t cuts = 0;
    for (const auto& a : oq.quiver.arrows) cuts += a.cut ? 1 : 0;
    if (cfg.format == Format::Dot) {
        out << export_quiver(oq.quiver, Format::Dot);
    } else if (cfg.format == Format::Json) {
        auto j = json::parse(export_quiver(oq.quiver, Format::Json));
        j["presentation"] = to_string(oq.presentation);
        j["report"] = {{"acyclic", rep.acyclic},
                       {"matches_canonical", rep.matches_canonical},
                       {"walks_checked", rep.walks_checked},
                       {"walks_failed", rep.walks_failed},
                       {"passing_walks_per_vertex", rep.passing_walks_per_vertex},
                       {"ok", rep.ok()}};
        out << j.dump(2) << "\n";
    } else {
        out << "presentation: " << to_string(oq.presentation) << "\n"
            << "vertices: " << oq.quiver.vertices.size() << ", arrows: " << oq.quiver.arrows.size()
            << ", cut arrows: " << cuts << "\n"
            << "non-cut part acyclic: " << yes_no(rep.acyclic) << "\n"
            << "non-cut part equals the canonical quiver: " << yes_no(rep.matches_canonical) << "\n"
            << "walks: " << rep.walks_checked << " checked, " << rep.walks_failed << " failed\n";
        if (!rep.ok()) out << "FAILED: " << rep.detail << "\n";
    }
    return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.dim) throw InvalidInput("--dim is required");
    Trichotomy cls;
    if (cfg.cls == "fano")
        cls = Trichotomy::Fano;
    else if (cfg.cls == "cy")
        cls = Trichotomy::CalabiYau;
    else
        throw InvalidInput("--class must be fano or cy");
    const auto e = enumerate_weight_systems(*cfg.dim, cfg.n, cls);
    if (cfg.format == Format::Json) {
        out << json{{"d", *cfg.dim},
                    {"n", cfg.n},
                    {"class", to_string(cls)},
                    {"infinite_families", e.infinite_families},
                    {"sporadic", e.sporadic}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "infinite families (" << e.infinite_families.size() << "):\n";
    for (const auto& f : e.infinite_families) out << "  (" << join(f) << ",...)\n";
    out << "sporadic (" << e.sporadic.size() << "):\n";
    for (const auto& s : e.sporadic) out << "  (" << join(s) << ")\n";
    return kExitOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Weighted complete intersection invariants: gradings, quivers, Coxeter data, factorizations", "glci"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string weights_text, lambda_text = "symbolic", format_text = "text", ell_text, only_text;

    auto add_system = [&](CLI::App* sub, bool with_lambda) {
        sub->add_option("-d,--dim", cfg.dim, "Dimension d >= 1");
        sub->add_option("-w,--weights", weights_text, "Comma-separated weights, or '-' for none");
        sub->add_option("--format", format_text, "Output format: text, json or dot");
        if (with_lambda)
            sub->add_option("--lambda", lambda_text,
                            "Hyperplane coefficients: symbolic, generic, generic:SEED or a JSON file");
    };

    auto* info = app.add_subcommand("info", "Full classification report");
    add_system(info, false);
    auto* quiver = app.add_subcommand("quiver", "Quiver with relations of an interval algebra");
    add_system(quiver, true);
    quiver->add_option("--interval", cfg.interval, "canonical, cm or range");
    quiver->add_option("--from", cfg.from, "Lower bound for --interval range, as 'a1,..,an;a'");
    quiver->add_option("--to", cfg.to, "Upper bound for --interval range");
    quiver->add_flag("--gldim", cfg.gldim, "Also compute the global dimension (numeric coefficients)");
    auto* coxeter = app.add_subcommand("coxeter", "Coxeter polynomial");
    add_system(coxeter, false);
    coxeter->add_flag("--check-matrix", cfg.check_matrix, "Cross-check against the omega-action matrix");
    auto* mf = app.add_subcommand("mf", "Matrix factorizations of the hypersurface case");
    add_system(mf, false);
    mf->add_option("--ell", ell_text, "Build and print one factorization, e.g. 1,2,1");
    mf->add_flag("--verify", cfg.verify, "Verify every factorization");
    mf->add_flag("--minors", cfg.minors, "Also check nonsingularity of the distinguished minor");
    auto* atilde = app.add_subcommand("atilde", "Type A~ presentation and cut verification");
    add_system(atilde, false);
    auto* classify_cmd = app.add_subcommand("classify", "Classification summary");
    add_system(classify_cmd, false);
    classify_cmd->add_flag("--slice", cfg.slice, "Build and verify the slice (n = d+2, two weights 2)");
    classify_cmd->add_flag("--knoerrer", cfg.knoerrer, "Check the Knoerrer partner (n = d+2)");
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate Fano or Calabi-Yau weight systems");
    enumerate->add_option("-d,--dim", cfg.dim, "Dimension d >= 1");
    enumerate->add_option("-n,--n", cfg.n, "Number of weights")->required();
    enumerate->add_option("--class", cfg.cls, "fano or cy");
    enumerate->add_option("--format", format_text, "Output format: text or json");
    auto* suite = app.add_subcommand("suite", "Run the invariant battery over a grid of weight systems");
    add_system(suite, false);
    suite->add_option("--only", only_text, "Comma-separated batteries: grading,algebra,coxeter,mf,atilde,classify");
    suite->add_option("--max-d", cfg.grid.max_d, "Largest dimension in the grid");
    suite->add_option("--max-product", cfg.grid.max_product, "Bound on the product of the weights");
    suite->add_option("--max-weight", cfg.grid.max_weight, "Largest single weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(e.what());
    }

    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    if (!weights_text.empty()) cfg.weights = parse_weights(weights_text);
    parse_lambda_flag(lambda_text, cfg);
    cfg.format = parse_format(format_text);
    if (!ell_text.empty()) cfg.ell = parse_weights(ell_text);
    if (!only_text.empty()) {
        std::stringstream ss(only_text);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.only.push_back(item);
    }
    if (cfg.format == Format::Dot && cfg.subcommand != "quiver" && cfg.subcommand != "atilde")
        throw InvalidInput("--format dot is only available for quiver and atilde");
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.subcommand == "info") return cmd_info(cfg, out, true);
    if (cfg.subcommand == "classify") return cmd_info(cfg, out, false);
    if (cfg.subcommand == "quiver") return cmd_quiver(cfg, out);
    if (cfg.subcommand == "coxeter") return cmd_coxeter(cfg, out);
    if (cfg.subcommand == "mf") return cmd_mf(cfg, out);
    if (cfg.subcommand == "atilde") return cmd_atilde(cfg, out);
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "suite") return run_suite(cfg, out);
    throw InvalidInput("unknown subcommand '" + cfg.subcommand + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const auto cfg = parse_args(argc, argv, out);
        if (!cfg) return kExitOk;
        return run(*cfg, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::overflow_error& e) {
        err << "error: input too large: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace glci::cli

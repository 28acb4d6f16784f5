#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "glci/atilde.hpp"
#include "glci/classify.hpp"
#include "glci/coxeter.hpp"
#include "glci/error.hpp"
#include "glci/matfac.hpp"
#include "glci_cli/cli.hpp"
#include "json.hpp"

namespace glci::cli {

namespace {

enum class State { Pass, Fail, Skip };

struct Outcome {
    State state = State::Skip;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {State::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {State::Fail, std::move(detail)}; }
Outcome skip(std::string detail = {}) { return {State::Skip, std::move(detail)}; }

// Systems larger than this are skipped by the batteries that build
// per-vertex data structures.
constexpr std::int64_t kRankCap = 600;

Outcome grading_battery(const WeightSystem& w) {
    const auto I = interval(w, zero(w), c_multiple(w, w.d));
    if (static_cast<std::int64_t>(I.size()) != k0_rank(w)) return fail("|[0,dc]| differs from the Grothendieck rank");
    for (const auto& x : I) {
        if (add(w, x, negate(w, x)) != zero(w)) return fail("x + (-x) is not zero at " + to_string(x));
        if (subtract(w, add(w, x, omega(w)), omega(w)) != x) return fail("adding and removing omega moves " + to_string(x));
    }
    const auto cd = coset_data_mod_omega(w);
    const bool cy = trichotomy(w) == Trichotomy::CalabiYau;
    if (cd.infinite != cy) return fail("coset finiteness disagrees with the trichotomy");
    if (!cy) {
        std::int64_t prod = 1;
        for (int p : w.weights) prod *= p;
        Rational expect = delta_omega(w) * Rational(static_cast<long>(prod));
        if (expect < 0) expect = -expect;
        if (Rational(cd.count) != expect) return fail("coset count differs from |prod(p) delta(omega)|");
    }
    return pass(std::to_string(I.size()) + " elements in [0,dc]");
}

Outcome algebra_battery(const WeightSystem& w) {
    if (k0_rank(w) > kRankCap) return skip("rank above cap");
    const auto q = i_canonical_quiver(w, canonical_interval(w));
    if (!q.is_acyclic()) return fail("canonical quiver has a cycle");
    const auto nw = normalize_weights(w);
    if (nw.n() == static_cast<std::size_t>(nw.d) + 2) {
        std::size_t expect = 1;
        for (int p : nw.weights) expect *= static_cast<std::size_t>(p - 1);
        if (cm_interval(nw).size() != expect) return fail("|cm interval| differs from prod(p_i - 1)");
        if (!cm_tensor_check(nw)) return fail("CM quiver is not the expected grid");
    } else if (nw.n() <= static_cast<std::size_t>(nw.d) + 1 && !cm_interval(nw).empty()) {
        return fail("cm interval should be empty");
    }
    if (k0_rank(w) <= 40) {
        const auto g = with_generic_lambda(w);
        if (!spot_check_associativity(structure_constants(g, canonical_interval(g)), 1, 50))
            return fail("structure constants are not associative");
    }
    return pass(std::to_string(q.arrows.size()) + " arrows, " + std::to_string(q.relations.size()) + " relations");
}

Outcome coxeter_battery(const WeightSystem& w) {
    if (k0_rank(w) > kRankCap) return skip("rank above cap");
    const auto chi = coxeter_polynomial(w);
    if (chi.degree() != k0_rank(w)) return fail("degree of chi differs from the Grothendieck rank");
    const auto act = omega_action_matrix(w);
    const auto cp = char_poly(act.matrix);
    if (cp != chi && cp != -chi) return fail("matrix route disagrees with the product formula");
    for (const auto& b : act.blocks) {
        std::vector<std::size_t> idx(b.size);
        std::iota(idx.begin(), idx.end(), b.offset);
        const auto f = char_poly(act.matrix.submatrix(idx, idx));
        const auto ph = phi(b.weights);
        if (f != ph && f != -ph) return fail("block characteristic polynomial differs from phi");
    }
    return pass(factored_form(coxeter_factors(w)));
}

Outcome mf_battery(const WeightSystem& w) {
    const auto nw = normalize_weights(w);
    if (nw.n() != static_cast<std::size_t>(nw.d) + 2) return skip();
    if (nw.d > 4) return skip("matrix size above cap");
    const auto ells = mf_enumerate(nw);
    for (const auto& l : ells) {
        const auto pair = mf_build(nw, l);
        const auto rep = mf_verify(pair);
        if (!rep.ok()) return fail(rep.detail);
        if (!mf_minor_nonsingular(pair).nonsingular) return fail("singular minor");
    }
    return pass(std::to_string(ells.size()) + " factorizations verified");
}

Outcome atilde_battery(const WeightSystem& w) {
    const auto nw = normalize_weights(w);
    if (nw.n() > static_cast<std::size_t>(nw.d) + 1) return skip();
    if (k0_rank(w) > kRankCap) return skip("rank above cap");
    const auto rep = verify_cut(atilde_presentation(w));
    if (!rep.ok()) return fail(rep.detail);
    return pass(std::to_string(rep.walks_checked) + " walks");
}

Outcome classify_battery(const WeightSystem& w) {
    const auto r = classify(w);  // runs the Orlov identity check
    const auto nw = r.w;
    if (r.is_hypersurface) {
        if (!knoerrer_check(nw)) return fail("Knoerrer partner quiver differs");
        auto sorted = nw.weights;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] == 2 && sorted[1] == 2 && k0_rank(nw) <= kRankCap) {
            const auto sl = tilting_slice(nw);
            if (!sl.verification.ok()) return fail("slice: " + sl.verification.detail);
        }
    }
    if (r.cm_finite && r.is_hypersurface && r.d_cm_finite != DCMFinite::Sufficient)
        return fail("CM-finite hypersurface outside the sufficient list");
    return pass(to_string(r.trichotomy));
}

struct Battery {
    const char* name;
    std::function<Outcome(const WeightSystem&)> fn;
};

const std::vector<Battery>& batteries() {
    static const std::vector<Battery> all{{"grading", grading_battery}, {"algebra", algebra_battery},
                                          {"coxeter", coxeter_battery}, {"mf", mf_battery},
                                          {"atilde", atilde_battery},   {"classify", classify_battery}};
    return all;
}

const char* cell(State s) {
    switch (s) {
        case State::Pass: return "ok";
        case State::Fail: return "FAIL";
        case State::Skip: return "-";
    }
    return "?";
}

}  // namespace

int run_suite(const RunConfig& cfg, std::ostream& out) {
    std::vector<Battery> selected;
    std::set<std::string> known;
    for (const auto& b : batteries()) known.insert(b.name);
    for (const auto& name : cfg.only)
        if (!known.count(name)) throw InvalidInput("unknown battery '" + name + "'");
    for (const auto& b : batteries())
        if (cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), b.name) != cfg.only.end())
            selected.push_back(b);

    std::vector<WeightSystem> systems;
    if (cfg.dim || cfg.weights) {
        if (!cfg.dim || !cfg.weights) throw InvalidInput("--dim and --weights must be given together");
        systems.push_back(make_weight_system(*cfg.dim, *cfg.weights));
    } else {
        systems = default_grid(cfg.grid);
    }

    std::size_t passed = 0, failed = 0, skipped = 0;
    nlohmann::json rows = nlohmann::json::array();
    const bool text = cfg.format != Format::Json;
    auto emit = [&](const std::ostringstream& line) {
        std::string s = line.str();
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << "\n";
    };
    if (text && systems.size() > 1) {
        std::ostringstream head;
        head << std::left << std::setw(28) << "weight system";
        for (const auto& b : selected) head << " " << std::setw(9) << b.name;
        emit(head);
    }
    std::vector<std::string> failures;
    for (const auto& w : systems) {
        nlohmann::json row{{"weight_system", to_string(w)}};
        std::ostringstream line;
        line << std::left << std::setw(systems.size() > 1 ? 28 : 0) << to_string(w);
        for (const auto& b : selected) {
            Outcome o;
            try {
                o = b.fn(w);
            } catch (const VerificationFailure& e) {
                o = fail(e.what());
            }
            switch (o.state) {
                case State::Pass: ++passed; break;
                case State::Fail:
                    ++failed;
                    failures.push_back(to_string(w) + " " + b.name + ": " + o.detail);
                    break;
                case State::Skip: ++skipped; break;
            }
            row[b.name] = {{"state", cell(o.state)}, {"detail", o.detail}};
            if (systems.size() == 1)
                line << "\n  " << b.name << ": " << cell(o.state) << (o.detail.empty() ? "" : " (" + o.detail + ")");
            else
                line << " " << std::setw(9) << cell(o.state);
        }
        if (text) emit(line);
        rows.push_back(row);
    }
    if (text) {
        for (const auto& f : failures) out << "FAILED " << f << "\n";
        out << "suite: " << systems.size() << " systems, " << passed << " passed, " << failed << " failed, " << skipped
            << " skipped\n";
    } else {
        out << nlohmann::json{{"systems", rows}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}.dump(2)
            << "\n";
    }
    return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace glci::cli

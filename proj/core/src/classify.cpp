#include "glci/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "glci/algebra.hpp"
#include "glci/coxeter.hpp"
#include "glci/error.hpp"

namespace glci {

namespace {

std::vector<int> sorted_weights(const WeightSystem& w) {
    std::vector<int> p = normalize_weights(w).weights;
    std::sort(p.begin(), p.end());
    return p;
}

bool all_twos(const std::vector<int>& p, std::size_t upto) {
    return std::all_of(p.begin(), p.begin() + static_cast<long>(upto), [](int v) { return v == 2; });
}

}  // namespace

bool cm_finite(const WeightSystem& w) {
    const auto p = sorted_weights(w);
    const std::size_t n = p.size(), d = static_cast<std::size_t>(w.d);
    if (n <= d + 1) return true;
    if (n != d + 2) return false;
    if (all_twos(p, n - 1)) return true;
    if (!all_twos(p, n - 2)) return false;
    const int a = p[n - 2], b = p[n - 1];
    return a == 3 && (b == 3 || b == 4 || b == 5);
}

std::string to_string(DCMFinite v) {
    return v == DCMFinite::Sufficient ? "Sufficient" : "Unknown";
}

DCMFinite d_cm_finite_sufficient(const WeightSystem& w) {
    const auto p = sorted_weights(w);
    if (p.size() != static_cast<std::size_t>(w.d) + 2) return DCMFinite::Unknown;
    if (p.size() >= 3) {
        const int a = p[0], b = p[1], c = p[2];
        if (a == 2 && b == 2) return DCMFinite::Sufficient;
        if (a == 2 && b == 3 && (c == 3 || c == 4 || c == 5)) return DCMFinite::Sufficient;
    }
    if (p.size() >= 4 && p[0] == 3 && p[1] == 3 && p[2] == 3 && p[3] == 3) return DCMFinite::Sufficient;
    return DCMFinite::Unknown;
}

bool vb_finite(const WeightSystem& w) { return w.d == 1 && trichotomy(w) == Trichotomy::Fano; }

int gldim_canonical(const WeightSystem& w) {
    return normalize_weights(w).n() <= static_cast<std::size_t>(w.d) + 1 ? w.d : 2 * w.d;
}

std::optional<FracCY> frac_cy(const WeightSystem& w_in) {
    const WeightSystem w = normalize_weights(w_in);
    const std::size_t n = w.n(), d = static_cast<std::size_t>(w.d);
    FracCY out;
    if (n <= d + 1) {
        out.zero_category = true;
        return out;
    }
    const BigInt p(static_cast<long>(lcm_of(w.weights)));
    if (n == d + 2) {
        Rational m = Rational(p) * (Rational(w.d) + 2 * delta_omega(w));
        if (m.get_den() != 1) throw VerificationFailure("fractional Calabi-Yau numerator is not integral");
        out.m = m.get_num();
        out.l = p;
    } else if (trichotomy(w) == Trichotomy::CalabiYau) {
        out.m = p * w.d;
        out.l = p;
    } else {
        return std::nullopt;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), out.m.get_mpz_t(), out.l.get_mpz_t());
    out.m_reduced = out.m / g;
    out.l_reduced = out.l / g;
    return out;
}

WeightEnumeration enumerate_weight_systems(int d, int n, Trichotomy cls) {
    if (cls == Trichotomy::AntiFano) throw InvalidInput("anti-Fano weight systems are not enumerable");
    if (d < 1 || n < 0 || n > 8) throw InvalidInput("enumeration needs d >= 1 and 0 <= n <= 8");
    const Rational r(n - d - 1);
    const bool fano = cls == Trichotomy::Fano;
    WeightEnumeration out;
    std::vector<int> prefix;
    std::function<void(const Rational&)> rec = [&](const Rational& s) {
        const int k = static_cast<int>(prefix.size());
        if (k == n) {
            if (fano ? s > r : s == r) out.sporadic.push_back(prefix);
            return;
        }
        if (s >= r) {
            // Every completion has sum > r: a whole family (never Calabi-Yau).
            if (fano) out.infinite_families.push_back(prefix);
            return;
        }
        // The remaining n - k weights contribute at most (n - k) / p.
        const Rational cap = Rational(n - k) / (r - s);
        const int lo = prefix.empty() ? 2 : prefix.back();
        for (int p = lo;; ++p) {
            if (fano ? !(Rational(p) < cap) : !(Rational(p) <= cap)) break;
            prefix.push_back(p);
            rec(s + make_rational(1, p));
            prefix.pop_back();
        }
    };
    rec(Rational(0));
    return out;
}

std::int64_t orlov_rank_delta(const WeightSystem& w_in) {
    const WeightSystem w = normalize_weights(w_in);
    const auto lhs = static_cast<std::int64_t>(canonical_interval(w).size());
    const auto rhs = static_cast<std::int64_t>(cm_interval(w).size());
    const std::int64_t delta = lhs - rhs;
    const CosetData cd = coset_data_mod_omega(w);
    BigInt expected = 0;
    switch (trichotomy(w)) {
        case Trichotomy::Fano: expected = cd.count; break;
        case Trichotomy::CalabiYau: expected = 0; break;
        case Trichotomy::AntiFano: expected = -cd.count; break;
    }
    if (BigInt(static_cast<long>(delta)) != expected)
        throw VerificationFailure("rank difference " + std::to_string(delta) + " differs from " + expected.get_str() +
                                  " for " + to_string(w));
    return delta;
}

TiltingSlice tilting_slice(const WeightSystem& w_in) {
    TiltingSlice out;
    WeightSystem w = normalize_weights(w_in);
    w.lambda.reset();
    std::sort(w.weights.begin(), w.weights.end());
    if (w.n() != static_cast<std::size_t>(w.d) + 2 || w.weights[0] != 2 || w.weights[1] != 2)
        throw InvalidInput("the slice construction needs n = d + 2 and two weights equal to 2");
    out.w = w;
    const int d = w.d;
    const GroupElement x1 = generator(w, 1), x2 = generator(w, 2);
    const GroupElement x12 = add(w, x1, x2);
    std::set<GroupElement> S;
    auto take = [&](const GroupElement& lo, const GroupElement& hi) {
        for (auto& z : interval(w, lo, hi)) S.insert(z);
    };
    for (const GroupElement& xi : {x1, x2}) {
        if (d % 2 == 1) {
            const GroupElement top = add(w, c_multiple(w, (d - 1) / 2), xi);
            take(c_multiple(w, -(d - 1) / 2), top);
            take(subtract(w, c_multiple(w, -(d - 3) / 2), x12), top);
        } else {
            const GroupElement bottom = add(w, c_multiple(w, -d / 2), xi);
            take(bottom, c_multiple(w, d / 2));
            take(bottom, add(w, c_multiple(w, (d - 2) / 2), x12));
        }
    }
    out.S.assign(S.begin(), S.end());

    SliceReport& rep = out.verification;
    rep.size = out.S.size();
    const CosetData cd = coset_data_mod_omega(w);
    rep.coset_count = cd.count;
    rep.size_matches = !cd.infinite && BigInt(static_cast<unsigned long>(rep.size)) == cd.count;

    const GroupElement om = omega(w);
    const Rational dw = delta(w, om);
    rep.cosets_distinct = true;
    Rational max_gap = 0;
    for (std::size_t a = 0; a < out.S.size(); ++a)
        for (std::size_t b = 0; b < out.S.size(); ++b) {
            const GroupElement diff = subtract(w, out.S[b], out.S[a]);
            const Rational dd = delta(w, diff);
            if (dd > max_gap) max_gap = dd;
            if (a >= b || !rep.cosets_distinct) continue;
            const Rational k = dd / dw;
            if (k.get_den() == 1 && diff == scale(w, om, k.get_num().get_si())) {
                rep.cosets_distinct = false;
                rep.detail = to_string(out.S[a]) + " and " + to_string(out.S[b]) + " share a coset";
            }
        }
    rep.l_max = std::max<std::int64_t>(1, ceil_of(max_gap / (-dw)));
    rep.hom_vanishing = true;
    for (std::int64_t l = 1; l <= rep.l_max && rep.hom_vanishing; ++l) {
        const GroupElement lw = scale(w, om, l);
        for (const auto& x : out.S) {
            for (const auto& y : out.S)
                if (piece_dim(w, subtract(w, add(w, y, lw), x)) != 0) {
                    rep.hom_vanishing = false;
                    if (rep.detail.empty())
                        rep.detail = "Hom(O" + to_string(x) + ", O" + to_string(y) + "(" + std::to_string(l) +
                                     " omega)) is nonzero";
                    break;
                }
            if (!rep.hom_vanishing) break;
        }
    }
    return out;
}

namespace {

// Arrow and relation data keyed by vertex coordinates, for comparing
// quivers whose vertices live in different presentations.
using ArrowKey = std::tuple<GroupElement, GroupElement, int>;
using RelationKey = std::vector<std::pair<std::vector<ArrowKey>, std::string>>;

std::pair<std::multiset<ArrowKey>, std::multiset<RelationKey>> quiver_key(
    const Quiver& q, const std::function<GroupElement(const GroupElement&)>& vmap, int label_shift) {
    auto arrow_key = [&](std::size_t a) {
        const Arrow& ar = q.arrows[a];
        return ArrowKey{vmap(q.vertices[ar.source]), vmap(q.vertices[ar.target]), ar.label + label_shift};
    };
    std::multiset<ArrowKey> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) arrows.insert(arrow_key(a));
    std::multiset<RelationKey> rels;
    for (const auto& r : q.relations) {
        RelationKey k;
        for (std::size_t t = 0; t < r.paths.size(); ++t) {
            std::vector<ArrowKey> path;
            for (auto a : r.paths[t]) path.push_back(arrow_key(a));
            k.emplace_back(std::move(path), r.coeffs[t].to_string());
        }
        std::sort(k.begin(), k.end());
        rels.insert(std::move(k));
    }
    return {arrows, rels};
}

}  // namespace

bool knoerrer_check(const WeightSystem& w_in) {
    WeightSystem w = normalize_weights(w_in);
    w.lambda.reset();
    if (w.n() != static_cast<std::size_t>(w.d) + 2) throw InvalidInput("Knoerrer partner needs n = d + 2");
    WeightSystem partner{w.d + 1, {2}, std::nullopt};
    partner.weights.insert(partner.weights.end(), w.weights.begin(), w.weights.end());
    const auto I = cm_interval(w);
    const auto J = cm_interval(partner);
    if (I.size() != J.size()) return false;
    const Quiver q = i_canonical_quiver(w, I);
    const Quiver qp = i_canonical_quiver(partner, J);
    for (const auto& v : qp.vertices)
        if (v.torsion[0] != 0) return false;
    auto ident = [](const GroupElement& x) { return x; };
    auto drop_first = [](const GroupElement& x) {
        return GroupElement{std::vector<std::int64_t>(x.torsion.begin() + 1, x.torsion.end()), x.free};
    };
    return quiver_key(q, ident, 0) == quiver_key(qp, drop_first, -1);
}

WeightSystem knoerrer_partner(const WeightSystem& w_in) {
    if (!knoerrer_check(w_in)) throw VerificationFailure("CM-canonical quivers of the Knoerrer pair differ");
    WeightSystem w = normalize_weights(w_in);
    WeightSystem partner{w.d + 1, {2}, std::nullopt};
    partner.weights.insert(partner.weights.end(), w.weights.begin(), w.weights.end());
    return partner;
}

ClassificationReport classify(const WeightSystem& w_in) {
    validate(w_in);
    ClassificationReport r;
    r.w = normalize_weights(w_in);
    r.w.lambda.reset();
    const std::size_t n = r.w.n(), d = static_cast<std::size_t>(r.w.d);
    r.trichotomy = trichotomy(r.w);
    r.delta_omega = delta_omega(r.w);
    r.is_regular = n <= d + 1;
    r.is_hypersurface = n == d + 2;
    r.cm_finite = cm_finite(r.w);
    r.d_cm_finite = d_cm_finite_sufficient(r.w);
    r.vb_finite = vb_finite(r.w);
    r.gldim_canonical = gldim_canonical(r.w);
    r.frac_cy = frac_cy(r.w);
    r.cosets = coset_data_mod_omega(r.w);
    r.k0_rank = k0_rank(r.w);
    r.cm_rank = static_cast<std::int64_t>(cm_interval(r.w).size());
    r.orlov_delta = orlov_rank_delta(r.w);
    return r;
}

}  // namespace glci

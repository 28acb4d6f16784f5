#include "glci/grading.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "glci/error.hpp"

namespace glci {

WeightSystem make_weight_system(int d, std::vector<int> weights, std::optional<RationalMatrix> lambda) {
    WeightSystem w{d, std::move(weights), std::move(lambda)};
    validate(w);
    return w;
}

void validate(const WeightSystem& w) {
    if (w.d < 1) throw InvalidInput("dimension d must be at least 1");
    for (int p : w.weights)
        if (p < 1) throw InvalidInput("weights must be positive integers");
    if (w.lambda) {
        if (w.lambda->rows() != w.n() || w.lambda->cols() != static_cast<std::size_t>(w.d + 1))
            throw InvalidInput("lambda must be an n x (d+1) matrix");
    }
}

std::string to_string(const WeightSystem& w) {
    std::ostringstream os;
    os << "(d=" << w.d << ",(";
    for (std::size_t i = 0; i < w.n(); ++i) os << (i ? "," : "") << w.weights[i];
    os << "))";
    return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(x.free);
    for (auto a : x.torsion) h = h * 1000003u ^ std::hash<std::int64_t>{}(a);
    return h;
}

std::string to_string(const GroupElement& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.torsion.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.torsion[i]);
    }
    s += ";" + std::to_string(x.free) + ")";
    return s;
}

GroupElement parse_group_element(const WeightSystem& w, const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') t += ch;
    auto semi = t.find(';');
    if (semi == std::string::npos) throw InvalidInput("group element must look like 'a1,..,an;a'");
    std::vector<std::int64_t> tors;
    std::string head = t.substr(0, semi);
    try {
        std::stringstream ss(head);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) tors.push_back(std::stoll(item));
        return normal_form(w, tors, std::stoll(t.substr(semi + 1)));
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const InvalidInput*>(&e)) throw;
        throw InvalidInput("malformed group element '" + text + "'");
    }
}

std::string to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::Fano: return "Fano";
        case Trichotomy::CalabiYau: return "CalabiYau";
        case Trichotomy::AntiFano: return "AntiFano";
    }
    return "?";
}

GroupElement normal_form(const WeightSystem& w, const std::vector<std::int64_t>& raw_torsion,
                         std::int64_t raw_free) {
    if (raw_torsion.size() != w.n())
        throw InvalidInput("torsion length " + std::to_string(raw_torsion.size()) +
                           " does not match n = " + std::to_string(w.n()));
    GroupElement x;
    x.torsion.resize(w.n());
    x.free = raw_free;
    for (std::size_t i = 0; i < w.n(); ++i) {
        const std::int64_t p = w.weights[i];
        x.torsion[i] = mod_floor(raw_torsion[i], p);
        x.free = checked_add(x.free, floor_div(raw_torsion[i], p));
    }
    return x;
}

GroupElement zero(const WeightSystem& w) { return GroupElement{std::vector<std::int64_t>(w.n(), 0), 0}; }

GroupElement generator(const WeightSystem& w, std::size_t i) {
    if (i < 1 || i > w.n()) throw InvalidInput("generator index out of range");
    std::vector<std::int64_t> t(w.n(), 0);
    t[i - 1] = 1;
    return normal_form(w, t, 0);
}

GroupElement c_multiple(const WeightSystem& w, std::int64_t k) {
    return GroupElement{std::vector<std::int64_t>(w.n(), 0), k};
}

GroupElement add(const WeightSystem& w, const GroupElement& x, const GroupElement& y) {
    std::vector<std::int64_t> t(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) t[i] = x.torsion[i] + y.torsion[i];
    return normal_form(w, t, checked_add(x.free, y.free));
}

GroupElement negate(const WeightSystem& w, const GroupElement& x) {
    std::vector<std::int64_t> t(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) t[i] = -x.torsion[i];
    return normal_form(w, t, -x.free);
}

GroupElement subtract(const WeightSystem& w, const GroupElement& x, const GroupElement& y) {
    return add(w, x, negate(w, y));
}

GroupElement scale(const WeightSystem& w, const GroupElement& x, std::int64_t k) {
    std::vector<std::int64_t> t(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) t[i] = checked_mul(x.torsion[i], k);
    return normal_form(w, t, checked_mul(x.free, k));
}

bool is_nonneg(const WeightSystem&, const GroupElement& x) { return x.free >= 0; }

bool leq(const WeightSystem& w, const GroupElement& x, const GroupElement& y) {
    if (x.torsion.size() != w.n() || y.torsion.size() != w.n()) return is_nonneg(w, subtract(w, y, x));
    // Free part of y - x for normal forms: each torsion borrow costs one c.
    std::int64_t f = checked_add(y.free, -x.free);
    for (std::size_t i = 0; i < w.n(); ++i)
        if (y.torsion[i] < x.torsion[i]) --f;
    return f >= 0;
}

Rational delta(const WeightSystem& w, const GroupElement& x) {
    Rational s(static_cast<long>(x.free));
    for (std::size_t i = 0; i < w.n(); ++i)
        if (x.torsion[i]) s += make_rational(x.torsion[i], w.weights[i]);
    return s;
}

GroupElement omega(const WeightSystem& w) {
    const std::int64_t n = static_cast<std::int64_t>(w.n());
    return normal_form(w, std::vector<std::int64_t>(w.n(), -1), n - w.d - 1);
}

Rational delta_omega(const WeightSystem& w) { return delta(w, omega(w)); }

Trichotomy trichotomy(const WeightSystem& w) {
    int s = sign_of(delta_omega(w));
    return s < 0 ? Trichotomy::Fano : (s == 0 ? Trichotomy::CalabiYau : Trichotomy::AntiFano);
}

std::vector<GroupElement> interval(const WeightSystem& w, const GroupElement& x, const GroupElement& y) {
    std::vector<GroupElement> out;
    GroupElement diff = subtract(w, y, x);
    if (diff.free < 0) return out;
    const std::int64_t top = floor_of(delta(w, diff));
    // Iterate offsets z - x = (t; a) with a in [0, top].
    std::vector<std::int64_t> t(w.n(), 0);
    for (;;) {
        for (std::int64_t a = 0; a <= top; ++a) {
            GroupElement z = add(w, x, normal_form(w, t, a));
            if (leq(w, z, y)) out.push_back(std::move(z));
        }
        std::size_t i = 0;
        while (i < w.n()) {
            if (++t[i] < w.weights[i]) break;
            t[i] = 0;
            ++i;
        }
        if (i == w.n()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigIntMatrix omega_quotient_presentation(const WeightSystem& w) {
    const std::size_t n = w.n();
    if (n == 0) {
        BigIntMatrix m(1, 1);
        m(0, 0) = w.d + 1;
        return m;
    }
    BigIntMatrix m(n, n, BigInt(0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m(i, i) = w.weights[i];
        m(i, i + 1) = -w.weights[i + 1];
    }
    for (std::size_t j = 0; j + 1 < n; ++j) m(n - 1, j) = -1;
    const long nn = static_cast<long>(n);
    m(n - 1, n - 1) = BigInt((nn - w.d - 1) * static_cast<long>(w.weights[n - 1]) - 1);
    return m;
}

CosetData coset_data_mod_omega(const WeightSystem& w) {
    CosetData out;
    out.invariant_factors = smith_invariant_factors(omega_quotient_presentation(w));
    Rational dw = delta_omega(w);
    if (dw == 0) {
        out.infinite = true;
        return out;
    }
    BigInt prod = 1;
    for (int p : w.weights) prod *= p;
    Rational c = abs(Rational(prod) * dw);
    if (c.get_den() != 1) throw VerificationFailure("coset count is not an integer");
    out.count = c.get_num();
    return out;
}

std::int64_t piece_dim(const WeightSystem& w, const GroupElement& x) {
    if (x.free < 0) return 0;
    return binomial(x.free + w.d, w.d);
}

std::int64_t hom_ext_dim(const WeightSystem& w, const GroupElement& x, const GroupElement& y, int i) {
    if (i < 0) throw InvalidInput("Ext degree must be non-negative");
    if (i == 0) return piece_dim(w, subtract(w, y, x));
    if (i == w.d) return piece_dim(w, add(w, subtract(w, x, y), omega(w)));
    return 0;
}

WeightSystem normalize_weights(const WeightSystem& w) {
    WeightSystem out;
    out.d = w.d;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < w.n(); ++i)
        if (w.weights[i] != 1) {
            keep.push_back(i);
            out.weights.push_back(w.weights[i]);
        }
    if (w.lambda) {
        std::vector<std::size_t> cols(w.d + 1);
        for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
        out.lambda = w.lambda->submatrix(keep, cols);
    }
    return out;
}

WeightSystem minimal_presentation(const WeightSystem& w) {
    WeightSystem out = normalize_weights(w);
    const std::size_t target = static_cast<std::size_t>(w.d) + 1;
    const std::size_t n0 = out.n();
    while (out.n() < target) out.weights.push_back(1);
    if (out.lambda && n0 < target) {
        // Complete the coefficient rows with coordinate hyperplanes not yet used.
        RationalMatrix full(target, target, Rational(0));
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < target; ++j) full(i, j) = (*out.lambda)(i, j);
        std::size_t r = n0;
        for (std::size_t e = 0; e < target && r < target; ++e) {
            RationalMatrix trial = full;
            trial(r, e) = 1;
            std::vector<std::size_t> rows(r + 1), cols(target);
            for (std::size_t i = 0; i <= r; ++i) rows[i] = i;
            for (std::size_t j = 0; j < target; ++j) cols[j] = j;
            if (rank(trial.submatrix(rows, cols)) == r + 1) {
                full = trial;
                ++r;
            }
        }
        out.lambda = full;
    }
    return out;
}

}  // namespace glci

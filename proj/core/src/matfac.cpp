#include "glci/matfac.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "glci/error.hpp"

namespace glci {

std::vector<Subset> parity_subsets(std::size_t n, bool odd) {
    if (n > 24) throw InvalidInput("too many hyperplanes for subset enumeration");
    std::vector<Subset> out;
    for (Subset s = 0; s < (1u << n); ++s)
        if ((std::popcount(s) % 2 == 1) == odd) out.push_back(s);
    // Size first, then lexicographic on the increasing element list.
    auto elements = [n](Subset s) {
        std::vector<int> e;
        for (std::size_t i = 0; i < n; ++i)
            if (s & (1u << i)) e.push_back(static_cast<int>(i) + 1);
        return e;
    };
    std::sort(out.begin(), out.end(), [&](Subset a, Subset b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return elements(a) < elements(b);
    });
    return out;
}

std::string subset_to_string(Subset s, std::size_t n) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        if (s & (1u << i)) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

GroupElement mf_shift(const WeightSystem& w, const std::vector<int>& ell, Subset I, int a) {
    const int size = std::popcount(I);
    if ((size + a) % 2 != 0) throw InvalidInput("parity of subset and homological degree disagree");
    std::vector<std::int64_t> t(w.n(), 0);
    for (std::size_t i = 0; i < w.n(); ++i)
        if (I & (1u << i)) t[i] = -ell[i];
    return normal_form(w, t, (size + a) / 2);
}

namespace {

// Position of i (1-based element) in I: |{j in I : j <= i}|.
int position(std::size_t i, Subset I) { return std::popcount(I & ((2u << (i - 1)) - 1)); }

WeightSystem hypersurface_weights(const WeightSystem& w_in) {
    WeightSystem w = normalize_weights(w_in);
    w.lambda.reset();
    if (w.n() != static_cast<std::size_t>(w.d) + 2) throw InvalidInput("matrix factorizations need n = d + 2");
    return w;
}

// Entry rule shared by M and N: row subset I, column subset J.
MultiPoly entry(const WeightSystem& w, const std::vector<int>& ell, Subset I, Subset J) {
    const std::size_t n = w.n();
    if ((I & J) == J && std::popcount(I ^ J) == 1) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(I ^ J)) + 1;
        long sign = position(i, I) % 2 ? -1 : 1;
        return MultiPoly::x_power(n, i, ell[i - 1], sign);
    }
    if ((I & J) == I && std::popcount(I ^ J) == 1) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(I ^ J)) + 1;
        long sign = position(j, J) % 2 ? -1 : 1;
        return MultiPoly::lambda_x_power(n, j, w.weights[j - 1] - ell[j - 1], sign);
    }
    return MultiPoly();
}

// Lambda-grading of a monomial: sum_i e_i x_i (lambda has degree 0).
GroupElement monomial_degree(const WeightSystem& w, const MultiPoly::Exponents& e) {
    std::vector<std::int64_t> t(w.n(), 0);
    for (std::size_t i = 0; i < w.n(); ++i) t[i] = e.empty() ? 0 : e[i];
    return normal_form(w, t, 0);
}

bool homogeneous(const WeightSystem& w, const PolyMatrix& m, const std::vector<GroupElement>& source,
                 const std::vector<GroupElement>& target, std::string& detail, const char* name) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const GroupElement want = subtract(w, target[c], source[r]);
            for (const auto& [e, coeff] : m(r, c).terms())
                if (monomial_degree(w, e) != want) {
                    detail = std::string(name) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") has degree " + to_string(monomial_degree(w, e)) + ", expected " + to_string(want);
                    return false;
                }
        }
    return true;
}

}  // namespace

GradedMatrixPair mf_build(const WeightSystem& w_in, const std::vector<int>& ell) {
    GradedMatrixPair g;
    g.w = hypersurface_weights(w_in);
    const std::size_t n = g.w.n();
    if (ell.size() != n) throw InvalidInput("index l must have n entries");
    for (std::size_t i = 0; i < n; ++i)
        if (ell[i] < 1 || ell[i] > g.w.weights[i] - 1) throw InvalidInput("index l out of range");
    g.ell = ell;
    g.odd = parity_subsets(n, true);
    g.even = parity_subsets(n, false);
    const std::size_t h = g.odd.size();
    g.M = PolyMatrix(h, h);
    g.N = PolyMatrix(h, h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < h; ++c) {
            g.M(r, c) = entry(g.w, ell, g.odd[r], g.even[c]);
            g.N(r, c) = entry(g.w, ell, g.even[r], g.odd[c]);
        }
    for (auto s : g.odd) g.shift_odd_minus1.push_back(mf_shift(g.w, ell, s, -1));
    for (auto s : g.even) g.shift_even_0.push_back(mf_shift(g.w, ell, s, 0));
    for (auto s : g.odd) g.shift_odd_1.push_back(mf_shift(g.w, ell, s, 1));
    return g;
}

MultiPoly hypersurface_polynomial(const WeightSystem& w) {
    MultiPoly f;
    for (std::size_t i = 1; i <= w.n(); ++i) f += MultiPoly::lambda_x_power(w.n(), i, w.weights[i - 1]);
    return f;
}

MFReport mf_verify(const GradedMatrixPair& g) {
    MFReport rep;
    rep.size = g.M.rows();
    const MultiPoly f = hypersurface_polynomial(g.w);
    auto is_scalar_identity = [&](const PolyMatrix& p, const char* name) {
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c) {
                const bool ok = (r == c) ? (p(r, c) == f) : p(r, c).is_zero();
                if (!ok) {
                    if (rep.detail.empty())
                        rep.detail = std::string(name) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") is " + p(r, c).to_string();
                    return false;
                }
            }
        return true;
    };
    rep.mn_identity = is_scalar_identity(g.M * g.N, "MN");
    rep.nm_identity = is_scalar_identity(g.N * g.M, "NM");
    std::string hd;
    rep.homogeneous = homogeneous(g.w, g.M, g.shift_odd_minus1, g.shift_even_0, hd, "M") &&
                      homogeneous(g.w, g.N, g.shift_even_0, g.shift_odd_1, hd, "N");
    if (rep.detail.empty()) rep.detail = hd;
    return rep;
}

MFReport mf_verify_or_throw(const GradedMatrixPair& g) {
    MFReport rep = mf_verify(g);
    if (!rep.ok()) throw VerificationFailure("matrix factorization check failed: " + rep.detail);
    return rep;
}

std::vector<std::vector<int>> mf_enumerate(const WeightSystem& w_in) {
    const WeightSystem w = hypersurface_weights(w_in);
    std::vector<std::vector<int>> out;
    std::vector<int> ell(w.n(), 1);
    for (;;) {
        out.push_back(ell);
        std::size_t i = w.n();
        while (i > 0) {
            if (++ell[i - 1] < w.weights[i - 1]) break;
            ell[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

MultiPoly symbolic_determinant(const PolyMatrix& m) {
    const std::size_t k = m.rows();
    if (k != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (k > 16) throw InvalidInput("symbolic determinant limited to size 16");
    // dp[mask]: signed sum over injections of the first popcount(mask) rows into mask.
    std::vector<MultiPoly> dp(std::size_t(1) << k);
    dp[0] = MultiPoly(1);
    for (Subset mask = 0; mask < (1u << k); ++mask) {
        if (dp[mask].is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        if (row == k) continue;
        for (std::size_t c = 0; c < k; ++c) {
            if (mask & (1u << c) || m(row, c).is_zero()) continue;
            // Sign of placing column c after the columns already used.
            const int above = std::popcount(mask >> c);
            MultiPoly term = dp[mask] * m(row, c);
            if (above % 2) term = -term;
            dp[mask | (1u << c)] += term;
        }
    }
    return dp[(1u << k) - 1];
}

MinorReport mf_minor_nonsingular(const GradedMatrixPair& g, std::uint64_t seed) {
    const std::size_t n = g.w.n();
    const Subset last = 1u << (n - 1);
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < g.even.size(); ++r)
        if (!(g.even[r] & last)) rows.push_back(r);
    for (std::size_t c = 0; c < g.odd.size(); ++c)
        if (!(g.odd[c] & last)) cols.push_back(c);
    PolyMatrix sub = g.N.submatrix(rows, cols);
    MinorReport rep;
    if (sub.rows() <= 8) {
        rep.method = "symbolic";
        rep.determinant = symbolic_determinant(sub);
        rep.nonsingular = !rep.determinant.is_zero();
        return rep;
    }
    rep.method = "evaluation";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(2, 1000003);
    for (rep.attempts = 1; rep.attempts <= 8; ++rep.attempts) {
        std::vector<BigInt> point(2 * n);
        for (auto& v : point) v = dist(rng);
        BigIntMatrix num(sub.rows(), sub.cols());
        for (std::size_t r = 0; r < sub.rows(); ++r)
            for (std::size_t c = 0; c < sub.cols(); ++c) num(r, c) = sub(r, c).evaluate(point);
        if (bareiss_determinant(num) != 0) {
            rep.nonsingular = true;
            return rep;
        }
    }
    rep.attempts = 8;
    return rep;
}

}  // namespace glci

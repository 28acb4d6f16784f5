#pragma once

// Brute-force reference computations used to cross-check the library.
// Everything here works from definitions only and avoids the library's
// own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "glci/arith.hpp"
#include "glci/grading.hpp"
#include "glci/linalg.hpp"
#include "glci/polynomial.hpp"

namespace oracle {

using glci::BigInt;
using glci::GroupElement;
using glci::Rational;
using glci::WeightSystem;

// All normal forms with free coordinate in [lo, hi].
inline std::vector<GroupElement> box(const WeightSystem& w, std::int64_t lo, std::int64_t hi) {
    std::vector<GroupElement> out;
    std::vector<std::int64_t> t(w.n(), 0);
    for (;;) {
        for (std::int64_t a = lo; a <= hi; ++a) out.push_back(GroupElement{t, a});
        std::size_t i = 0;
        while (i < w.n() && ++t[i] == w.weights[i]) t[i++] = 0;
        if (i == w.n()) break;
    }
    return out;
}

// z with x <= z <= y, by scanning a box wide enough to contain the answer.
inline std::vector<GroupElement> interval(const WeightSystem& w, const GroupElement& x, const GroupElement& y) {
    std::vector<GroupElement> out;
    for (const auto& z : box(w, x.free - 1, y.free + 1))
        if (glci::leq(w, x, z) && glci::leq(w, z, y)) out.push_back(z);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of monomials X^a T^b (0 <= a_i < p_i, b in N^{d+1}) whose degree
// sum a_i x_i + |b| c equals x.
inline std::int64_t monomial_count(const WeightSystem& w, const GroupElement& x) {
    if (x.free < 0) return 0;
    std::int64_t count = 0;
    std::vector<std::int64_t> a(w.n(), 0);
    for (;;) {
        // Degree of X^a is the normal form of (a; 0) = (a; 0) itself.
        if (a == x.torsion) {
            const std::int64_t deg = x.free;
            // Enumerate b in N^{d+1} with |b| = deg explicitly.
            std::vector<std::int64_t> b(w.d + 1, 0);
            std::function<void(int, std::int64_t)> rec = [&](int var, std::int64_t left) {
                if (var == w.d) {
                    ++count;
                    return;
                }
                for (std::int64_t e = 0; e <= left; ++e) rec(var + 1, left - e);
            };
            rec(0, deg);
        }
        std::size_t i = 0;
        while (i < w.n() && ++a[i] == w.weights[i]) a[i++] = 0;
        if (i == w.n()) break;
    }
    return count;
}

// det(t Id - M) by Faddeev-LeVerrier over Q.
inline glci::IntPolynomial faddeev_leverrier(const glci::IntMatrix& m) {
    const std::size_t n = m.rows();
    glci::RationalMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(static_cast<long>(m(i, j)));
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    glci::RationalMatrix Mk(n, n, Rational(0));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        glci::RationalMatrix next = A * Mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        Mk = next;
        glci::RationalMatrix AM = A * Mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    std::vector<BigInt> coeffs;
    for (auto& v : c) {
        if (v.get_den() != 1) throw std::runtime_error("non-integral characteristic coefficient");
        coeffs.push_back(v.get_num());
    }
    return glci::IntPolynomial(coeffs);
}

// CM-finite list, restated: after removing weights equal to 2 at most one
// weight remains, or the remainder is (3,3), (3,4) or (3,5).
inline bool cm_finite_by_stripping(int d, std::vector<int> p) {
    p.erase(std::remove(p.begin(), p.end(), 1), p.end());
    const std::size_t n = p.size();
    if (n <= static_cast<std::size_t>(d) + 1) return true;
    if (n != static_cast<std::size_t>(d) + 2) return false;
    std::vector<int> rest;
    for (int v : p)
        if (v != 2) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    if (rest.size() <= 1) return true;
    return rest == std::vector<int>{3, 3} || rest == std::vector<int>{3, 4} || rest == std::vector<int>{3, 5};
}

// Sum of (d+1-|I|) prod(p_i - 1) over all subsets via bitmasks.
inline std::int64_t k0_rank_by_masks(const WeightSystem& w) {
    std::int64_t total = 0;
    const std::size_t n = w.n();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > w.d) continue;
        std::int64_t term = w.d + 1 - size;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) term *= w.weights[i] - 1;
        total += term;
    }
    return total;
}

}  // namespace oracle

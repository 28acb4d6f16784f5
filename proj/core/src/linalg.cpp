#include "glci/linalg.hpp"

#include <algorithm>
#include <utility>

namespace glci {

RowEchelon rref(RationalMatrix m) {
    RowEchelon out;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && m(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RowEchelon e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(C, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidInput("inverse of a non-square matrix");
    RationalMatrix aug(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvalidInput("matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

BigInt bareiss_determinant(BigIntMatrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    BigInt det = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

std::vector<BigInt> smith_invariant_factors(BigIntMatrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::size_t K = std::min(R, C);
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(a, j), m(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t i = 0; i < R; ++i) std::swap(m(i, a), m(i, b));
    };
    for (std::size_t t = 0; t < K; ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        for (;;) {
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m(i, j) != 0 && (pr == R || abs(m(i, j)) < abs(m(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) {
                std::vector<BigInt> diag;
                for (std::size_t i = 0; i < K; ++i) diag.push_back(i < t ? BigInt(abs(m(i, i))) : BigInt(0));
                return diag;
            }
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m(i, t) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < C; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m(t, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < R; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility into the rest of the block.
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (std::size_t jj = t; jj < C; ++jj) m(t, jj) += m(i, jj);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<BigInt> diag;
    for (std::size_t i = 0; i < K; ++i) diag.push_back(abs(m(i, i)));
    return diag;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool all_minors_nonzero(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t k = 1; k <= std::min(R, C); ++k) {
        std::vector<std::size_t> rs(k);
        for (std::size_t i = 0; i < k; ++i) rs[i] = i;
        do {
            std::vector<std::size_t> cs(k);
            for (std::size_t i = 0; i < k; ++i) cs[i] = i;
            do {
                if (determinant(m.submatrix(rs, cs)) == 0) return false;
            } while (next_combination(cs, C));
        } while (next_combination(rs, R));
    }
    return true;
}

}  // namespace glci

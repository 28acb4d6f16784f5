#include "glci/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "glci/error.hpp"

namespace glci {

namespace {

std::mutex phi_mutex;
std::map<std::vector<int>, IntPolynomial>& phi_cache() {
    static std::map<std::vector<int>, IntPolynomial> cache;
    return cache;
}

std::vector<int> effective_weights(const WeightSystem& w) {
    std::vector<int> out;
    for (int p : w.weights)
        if (p != 1) out.push_back(p);
    return out;
}

// Calls f(subset as index list) for subsets of {0..n-1} with |I| <= maxsize,
// ordered by size and then lexicographically.
template <class F>
void for_small_subsets(std::size_t n, std::size_t maxsize, F&& f) {
    for (std::size_t k = 0; k <= std::min(n, maxsize); ++k) {
        std::vector<std::size_t> c(k);
        std::iota(c.begin(), c.end(), 0);
        for (;;) {
            f(c);
            std::size_t i = k;
            while (i > 0 && c[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

}  // namespace

IntPolynomial phi(std::vector<int> a) {
    for (int v : a)
        if (v < 1) throw InvalidInput("phi arguments must be positive");
    std::sort(a.begin(), a.end());
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache().find(a);
        if (it != phi_cache().end()) return it->second;
    }
    IntPolynomial result;
    if (a.empty()) {
        result = IntPolynomial{1, -1};
    } else {
        const std::size_t s = a.size();
        if (s > 20) throw InvalidInput("too many phi arguments");
        std::int64_t l = 1, prod = 1;
        for (int v : a) {
            l = lcm64(l, v);
            prod = checked_mul(prod, v);
        }
        IntPolynomial num = IntPolynomial::one_minus_t_pow(static_cast<std::size_t>(l))
                                .pow(static_cast<unsigned>(prod / l));
        IntPolynomial den = IntPolynomial::constant(1);
        for (unsigned mask = 0; mask + 1 < (1u << s); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < s; ++i)
                if (mask & (1u << i)) sub.push_back(a[i]);
            den = den * phi(sub);
        }
        result = num.exact_div(den);
    }
    std::lock_guard<std::mutex> lock(phi_mutex);
    phi_cache().emplace(a, result);
    return result;
}

std::int64_t k0_rank(const WeightSystem& w) {
    const auto p = effective_weights(w);
    std::int64_t total = 0;
    for_small_subsets(p.size(), static_cast<std::size_t>(w.d), [&](const std::vector<std::size_t>& I) {
        std::int64_t term = w.d + 1 - static_cast<std::int64_t>(I.size());
        for (auto i : I) term = checked_mul(term, p[i] - 1);
        total = checked_add(total, term);
    });
    return total;
}

std::vector<CoxeterFactor> coxeter_factors(const WeightSystem& w) {
    const auto p = effective_weights(w);
    std::vector<CoxeterFactor> out;
    for_small_subsets(p.size(), static_cast<std::size_t>(w.d), [&](const std::vector<std::size_t>& I) {
        std::vector<int> args;
        for (auto i : I) args.push_back(p[i]);
        IntPolynomial f = phi(args);
        const unsigned e = static_cast<unsigned>(w.d + 1 - static_cast<int>(I.size()));
        for (auto& cf : out)
            if (cf.poly == f) {
                cf.exponent += e;
                return;
            }
        out.push_back(CoxeterFactor{args, f, e});
    });
    return out;
}

IntPolynomial coxeter_polynomial(const WeightSystem& w) {
    IntPolynomial chi = IntPolynomial::constant(1);
    for (const auto& f : coxeter_factors(w)) chi = chi * f.poly.pow(f.exponent);
    return chi;
}

std::string factored_form(const std::vector<CoxeterFactor>& factors) {
    std::string s;
    for (const auto& f : factors) {
        if (f.poly == IntPolynomial::constant(1)) continue;
        if (!s.empty()) s += " ";
        s += "(" + f.poly.to_string() + ")";
        if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
    }
    return s.empty() ? "1" : s;
}

IntMatrix xi_block(const std::vector<int>& a) {
    const std::size_t s = a.size();
    std::size_t size = 1;
    for (int v : a) size *= static_cast<std::size_t>(std::max(v - 1, 0));
    IntMatrix m(size, size, 0);
    if (size == 0) return m;
    // Mixed radix with digits 1..a_i-1, last coordinate fastest.
    auto encode = [&](const std::vector<int>& t) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < s; ++i) idx = idx * static_cast<std::size_t>(a[i] - 1) + (t[i] - 1);
        return idx;
    };
    std::vector<int> t(s, 1);
    for (std::size_t col = 0; col < size; ++col) {
        std::vector<int> img(s);
        std::vector<std::size_t> wraps;
        for (std::size_t i = 0; i < s; ++i) {
            img[i] = t[i] + 1;
            if (img[i] == a[i]) wraps.push_back(i);
        }
        const std::int64_t sign = (wraps.size() % 2) ? -1 : 1;
        // Expand each wrapped coordinate over the values 1..a_i-1.
        for (auto i : wraps) img[i] = 1;
        for (;;) {
            m(encode(img), col) += sign;
            std::size_t k = 0;
            while (k < wraps.size()) {
                auto i = wraps[k];
                if (++img[i] < a[i]) break;
                img[i] = 1;
                ++k;
            }
            if (k == wraps.size()) break;
        }
        for (std::size_t i = s; i-- > 0;) {
            if (++t[i] < a[i]) break;
            t[i] = 1;
        }
    }
    return m;
}

OmegaAction omega_action_matrix(const WeightSystem& w) {
    std::vector<int> orig_index;
    std::vector<int> p;
    for (std::size_t i = 0; i < w.n(); ++i)
        if (w.weights[i] != 1) {
            p.push_back(w.weights[i]);
            orig_index.push_back(static_cast<int>(i) + 1);
        }
    OmegaAction act;
    std::vector<IntMatrix> pieces;
    std::size_t total = 0;
    for_small_subsets(p.size(), static_cast<std::size_t>(w.d), [&](const std::vector<std::size_t>& I) {
        std::vector<int> subset, weights;
        for (auto i : I) {
            subset.push_back(orig_index[i]);
            weights.push_back(p[i]);
        }
        IntMatrix blk = xi_block(weights);
        for (int e = 0; e <= w.d - static_cast<int>(I.size()); ++e) {
            act.blocks.push_back(OmegaBlock{subset, weights, e, total, blk.rows()});
            std::vector<int> t(weights.size(), 1);
            for (std::size_t k = 0; k < blk.rows(); ++k) {
                act.index.push_back(BlockBasisIndex{subset, e, t});
                for (std::size_t i = t.size(); i-- > 0;) {
                    if (++t[i] < weights[i]) break;
                    t[i] = 1;
                }
            }
            total += blk.rows();
            pieces.push_back(blk);
        }
    });
    act.matrix = IntMatrix(total, total, 0);
    for (std::size_t b = 0; b < pieces.size(); ++b) {
        const std::size_t off = act.blocks[b].offset;
        for (std::size_t i = 0; i < pieces[b].rows(); ++i)
            for (std::size_t j = 0; j < pieces[b].cols(); ++j) act.matrix(off + i, off + j) = pieces[b](i, j);
    }
    return act;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

const std::vector<u64>& prime_pool(std::size_t count) {
    static std::mutex mu;
    static std::vector<u64> pool;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = pool.empty() ? (1ull << 31) - 1 : pool.back() - 2;
    while (pool.size() < count) {
        if (is_prime(candidate)) pool.push_back(candidate);
        candidate -= 2;
    }
    return pool;
}

u64 mod_pow(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

// Characteristic polynomial modulo p, lowest degree first, monic.
std::vector<u64> char_poly_mod(const IntMatrix& m, u64 p) {
    const std::size_t n = m.rows();
    std::vector<u64> H(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
            H[i * n + j] = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }
    auto h = [&](std::size_t i, std::size_t j) -> u64& { return H[i * n + j]; };
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
        }
        const u64 inv = mod_inv(h(j + 1, j), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h(i, j) == 0) continue;
            const u64 u = h(i, j) * inv % p;
            for (std::size_t k = 0; k < n; ++k)
                if (h(j + 1, k)) h(i, k) = (h(i, k) + (p - u) * h(j + 1, k)) % p;
            for (std::size_t k = 0; k < n; ++k)
                if (h(k, i)) h(k, j + 1) = (h(k, j + 1) + u * h(k, i)) % p;
        }
    }
    // polys[k] = char poly of leading k x k block.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t kk = k - 1;  // 0-based index of new row/col
        std::vector<u64> pk(k + 1, 0);
        const auto& prev = polys[k - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pk[d + 1] = (pk[d + 1] + prev[d]) % p;
            pk[d] = (pk[d] + (p - h(kk, kk)) * prev[d]) % p;
        }
        u64 sub = 1;  // product of subdiagonal entries h(m, m-1) for m = i+1..kk
        for (std::size_t i = kk; i-- > 0;) {
            sub = sub * h(i + 1, i) % p;
            if (sub == 0) break;
            const u64 coef = h(i, kk) * sub % p;
            if (coef == 0) continue;
            const auto& q = polys[i];
            for (std::size_t d = 0; d < q.size(); ++d) pk[d] = (pk[d] + (p - coef) * q[d]) % p;
        }
        polys[k] = std::move(pk);
    }
    return polys[n];
}

BigInt isqrt_ceil(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v) r += 1;
    return r;
}

IntPolynomial char_poly_connected(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return IntPolynomial::constant(1);
    // Hadamard-type bound on every coefficient.
    std::vector<BigInt> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t i = 0; i < n; ++i) s += BigInt(static_cast<long>(m(i, j))) * static_cast<long>(m(i, j));
        norms[j] = std::max(isqrt_ceil(s), BigInt(1));
    }
    std::sort(norms.begin(), norms.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
    BigInt bound = 1, prod = 1, binom = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        prod *= norms[k - 1];
        binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
        bound = std::max(bound, BigInt(binom * prod));
    }
    const BigInt need = 2 * bound + 1;
    std::vector<BigInt> residue(n + 1, BigInt(0));
    BigInt modulus = 1;
    std::size_t used = 0;
    while (modulus <= need) {
        const u64 p = prime_pool(used + 1)[used];
        ++used;
        auto cp = char_poly_mod(m, p);
        const BigInt P(static_cast<unsigned long>(p));
        BigInt inv;
        BigInt mm = modulus % P;
        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), P.get_mpz_t());
        for (std::size_t k = 0; k <= n; ++k) {
            BigInt diff = BigInt(static_cast<unsigned long>(cp[k])) - residue[k] % P;
            BigInt t = diff * inv % P;
            if (t < 0) t += P;
            residue[k] += modulus * t;
        }
        modulus *= P;
    }
    const BigInt half = modulus / 2;
    for (auto& r : residue)
        if (r > half) r -= modulus;
    return IntPolynomial(std::move(residue));
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("char_poly needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != 0) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& [root, idx] : comps) result = result * char_poly_connected(m.submatrix(idx, idx));
    return result;
}

}  // namespace glci

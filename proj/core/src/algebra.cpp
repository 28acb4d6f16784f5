#include "glci/algebra.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "glci/error.hpp"

namespace glci {

// ---------------------------------------------------------------------------
// Coefficients

std::string Coefficient::to_string() const {
    if (!lambda) return glci::to_string(scalar);
    std::string sym = "lambda[" + std::to_string(lambda->first) + "," + std::to_string(lambda->second) + "]";
    if (scalar == 1) return sym;
    if (scalar == -1) return "-" + sym;
    return glci::to_string(scalar) + "*" + sym;
}

Coefficient Coefficient::parse(const std::string& text) {
    Coefficient c;
    auto pos = text.find("lambda[");
    if (pos == std::string::npos) {
        c.scalar = parse_rational(text);
        return c;
    }
    std::string head = text.substr(0, pos);
    if (head.empty())
        c.scalar = 1;
    else if (head == "-")
        c.scalar = -1;
    else if (head.back() == '*')
        c.scalar = parse_rational(head.substr(0, head.size() - 1));
    else
        throw InvalidInput("malformed coefficient '" + text + "'");
    auto close = text.find(']', pos);
    auto comma = text.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos || comma > close || close + 1 != text.size())
        throw InvalidInput("malformed coefficient '" + text + "'");
    try {
        int i = std::stoi(text.substr(pos + 7, comma - pos - 7));
        int j = std::stoi(text.substr(comma + 1, close - comma - 1));
        c.lambda = std::make_pair(i, j);
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed coefficient '" + text + "'");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Quiver

std::optional<std::size_t> Quiver::vertex_index(const GroupElement& x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it != vertices.end() && *it == x) return static_cast<std::size_t>(it - vertices.begin());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == x) return i;
    return std::nullopt;
}

bool Quiver::is_acyclic() const {
    const std::size_t V = vertices.size();
    std::vector<int> indeg(V, 0);
    std::vector<std::vector<std::size_t>> out(V);
    for (const auto& a : arrows) {
        out[a.source].push_back(a.target);
        ++indeg[a.target];
    }
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < V; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto t : out[v])
            if (--indeg[t] == 0) stack.push_back(t);
    }
    return seen == V;
}

bool is_convex(const WeightSystem& w, const std::vector<GroupElement>& I) {
    if (I.empty()) return true;
    std::unordered_set<GroupElement, GroupElementHash> members(I.begin(), I.end());
    // Any chain x < y <= z climbs by generator steps, so a gap always shows up
    // as a single step x + x_i that leaves I but still lies below a member.
    std::vector<GroupElement> gens;
    for (std::size_t i = 1; i <= w.n(); ++i) gens.push_back(generator(w, i));
    gens.push_back(c_multiple(w, 1));
    for (const auto& x : I)
        for (const auto& g : gens) {
            const GroupElement y = add(w, x, g);
            if (members.count(y)) continue;
            for (const auto& z : I)
                if (leq(w, y, z)) return false;
        }
    return true;
}

GroupElement to_presentation(const WeightSystem& w, const WeightSystem& presentation, const GroupElement& x) {
    if (x.torsion.size() == presentation.n()) return normal_form(presentation, x.torsion, x.free);
    if (x.torsion.size() != w.n()) throw InvalidInput("group element has the wrong number of coordinates");
    std::vector<std::int64_t> t;
    std::int64_t f = x.free;
    for (std::size_t i = 0; i < w.n(); ++i) {
        if (w.weights[i] == 1)
            f += x.torsion[i];
        else
            t.push_back(x.torsion[i]);
    }
    while (t.size() < presentation.n()) t.push_back(0);
    return normal_form(presentation, t, f);
}

// ---------------------------------------------------------------------------
// Hyperplane coefficients

RationalMatrix normalized_lambda_block(const WeightSystem& p) {
    if (!p.lambda) throw InvalidInput("numeric lambda required");
    const std::size_t D = static_cast<std::size_t>(p.d) + 1;
    if (p.n() < D) return RationalMatrix(0, D);
    std::vector<std::size_t> head(D), tail, cols(D);
    for (std::size_t i = 0; i < D; ++i) head[i] = cols[i] = i;
    for (std::size_t i = D; i < p.n(); ++i) tail.push_back(i);
    RationalMatrix G = p.lambda->submatrix(head, cols);
    if (determinant(G) == 0) throw InvalidInput("the first d+1 hyperplanes are not in general position");
    return p.lambda->submatrix(tail, cols) * inverse(G);
}

bool general_position(const WeightSystem& w) {
    if (!w.lambda) return false;
    WeightSystem p = normalize_weights(w);
    const std::size_t D = static_cast<std::size_t>(p.d) + 1;
    if (p.n() <= D) {
        std::vector<std::size_t> rows(p.n()), cols(D);
        for (std::size_t i = 0; i < p.n(); ++i) rows[i] = i;
        for (std::size_t j = 0; j < D; ++j) cols[j] = j;
        return rank(p.lambda->submatrix(rows, cols)) == p.n();
    }
    try {
        return all_minors_nonzero(normalized_lambda_block(p));
    } catch (const InvalidInput&) {
        return false;
    }
}

RationalMatrix vandermonde_lambda(const WeightSystem& w, int offset) {
    const std::size_t D = static_cast<std::size_t>(w.d) + 1;
    RationalMatrix L(w.n(), D, Rational(0));
    long node = 2 + offset;
    auto fill_vandermonde = [&](std::size_t r) {
        Rational pw = 1;
        for (std::size_t j = 0; j < D; ++j) {
            L(r, j) = pw;
            pw *= node;
        }
        ++node;
    };
    std::size_t k = 0;
    for (std::size_t r = 0; r < w.n(); ++r) {
        if (w.weights[r] == 1) continue;
        if (k < D)
            L(r, k) = 1;
        else
            fill_vandermonde(r);
        ++k;
    }
    for (std::size_t r = 0; r < w.n(); ++r)
        if (w.weights[r] == 1) fill_vandermonde(r);
    return L;
}

WeightSystem with_generic_lambda(const WeightSystem& w) {
    WeightSystem out = w;
    for (int offset = 0; offset < 64; ++offset) {
        out.lambda = vandermonde_lambda(w, offset);
        if (general_position(out)) return out;
    }
    throw VerificationFailure("could not generate coefficients in general position");
}

// ---------------------------------------------------------------------------
// Quiver presentation

std::vector<GroupElement> canonical_interval(const WeightSystem& w) {
    return interval(w, zero(w), c_multiple(w, w.d));
}

GroupElement dominant_element(const WeightSystem& w) {
    return add(w, c_multiple(w, w.d), scale(w, omega(w), 2));
}

std::vector<GroupElement> cm_interval(const WeightSystem& w) { return interval(w, zero(w), dominant_element(w)); }

Quiver i_canonical_quiver(const WeightSystem& w, const std::vector<GroupElement>& I_in) {
    validate(w);
    const WeightSystem P = minimal_presentation(w);
    Quiver q;
    q.d = P.d;
    q.weights = P.weights;
    for (const auto& x : I_in) q.vertices.push_back(to_presentation(w, P, x));
    std::sort(q.vertices.begin(), q.vertices.end());
    if (std::adjacent_find(q.vertices.begin(), q.vertices.end()) != q.vertices.end())
        throw InvalidInput("interval contains repeated elements");
    if (!is_convex(P, q.vertices)) throw InvalidInput("vertex set is not convex");

    std::optional<RationalMatrix> block;
    if (P.lambda) block = normalized_lambda_block(P);

    std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) index.emplace(q.vertices[v], v);

    const std::size_t n = P.n();
    // arrow_at[v * n + (i-1)] = arrow index or npos
    const std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> arrow_at(q.vertices.size() * n, npos);
    std::vector<GroupElement> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(generator(P, i));
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        for (std::size_t i = 1; i <= n; ++i) {
            auto it = index.find(add(P, q.vertices[v], gens[i - 1]));
            if (it == index.end()) continue;
            arrow_at[v * n + i - 1] = q.arrows.size();
            q.arrows.push_back(Arrow{v, it->second, static_cast<int>(i), false});
        }

    // Path of repeated labels starting at v; empty when it leaves I.
    auto walk = [&](std::size_t v, const std::vector<int>& labels) {
        std::vector<std::size_t> path;
        for (int lab : labels) {
            std::size_t a = arrow_at[v * n + lab - 1];
            if (a == npos) return std::vector<std::size_t>{};
            path.push_back(a);
            v = q.arrows[a].target;
        }
        return path;
    };

    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        for (int i = 1; i <= static_cast<int>(n); ++i)
            for (int j = i + 1; j <= static_cast<int>(n); ++j) {
                auto pij = walk(v, {i, j});
                auto pji = walk(v, {j, i});
                if (pij.empty() || pji.empty()) continue;
                Relation r;
                r.paths = {pij, pji};
                r.coeffs = {Coefficient{1, std::nullopt}, Coefficient{-1, std::nullopt}};
                q.relations.push_back(std::move(r));
            }

    const int D = P.d + 1;
    const GroupElement c = c_multiple(P, 1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (!index.count(add(P, q.vertices[v], c))) continue;
        for (int i = D + 1; i <= static_cast<int>(n); ++i) {
            Relation r;
            r.paths.push_back(walk(v, std::vector<int>(P.weights[i - 1], i)));
            r.coeffs.push_back(Coefficient{1, std::nullopt});
            for (int j = 1; j <= D; ++j) {
                Coefficient co;
                if (block) {
                    Rational val = (*block)(i - D - 1, j - 1);
                    if (val == 0) continue;
                    co.scalar = -val;
                } else {
                    co.scalar = -1;
                    co.lambda = std::make_pair(i, j - 1);
                }
                r.paths.push_back(walk(v, std::vector<int>(P.weights[j - 1], j)));
                r.coeffs.push_back(co);
            }
            q.relations.push_back(std::move(r));
        }
    }
    return q;
}

IntMatrix cartan_matrix(const WeightSystem& w, const std::vector<GroupElement>& I) {
    IntMatrix m(I.size(), I.size(), 0);
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b) m(a, b) = piece_dim(w, subtract(w, I[a], I[b]));
    return m;
}

// ---------------------------------------------------------------------------
// Graded ring

GradedRing::GradedRing(const WeightSystem& presentation, std::int64_t max_degree)
    : w_(presentation), max_degree_(std::max<std::int64_t>(max_degree, 0)) {
    if (!w_.lambda) throw InvalidInput("numeric lambda required for the monomial model");
    const int D = w_.d + 1;
    // Monomials in D variables by total degree, lexicographically descending.
    monomials_.resize(max_degree_ + 1);
    for (std::int64_t deg = 0; deg <= max_degree_; ++deg) {
        std::vector<int> b(D, 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == D - 1) {
                b[var] = left;
                monomials_[deg].push_back(b);
                return;
            }
            for (int e = left; e >= 0; --e) {
                b[var] = e;
                rec(var + 1, left - e);
            }
        };
        rec(0, static_cast<int>(deg));
        for (std::size_t k = 0; k < monomials_[deg].size(); ++k) index_.emplace(monomials_[deg][k], k);
    }

    // Linear forms l_i(T) in normalized coordinates.
    const std::size_t n = w_.n();
    std::vector<std::vector<Rational>> forms(n, std::vector<Rational>(D, Rational(0)));
    RationalMatrix block = normalized_lambda_block(w_);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < static_cast<std::size_t>(D))
            forms[i][i] = 1;
        else
            for (int j = 0; j < D; ++j) forms[i][j] = block(i - D, j);
    }
    if (n > 16) throw InvalidInput("too many hyperplanes for the monomial model");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Poly p;
        p[std::vector<int>(D, 0)] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            Poly next;
            for (const auto& [e, v] : p)
                for (int j = 0; j < D; ++j) {
                    if (forms[i][j] == 0) continue;
                    auto e2 = e;
                    ++e2[j];
                    next[e2] += v * forms[i][j];
                }
            for (auto it = next.begin(); it != next.end();)
                it = (it->second == 0) ? next.erase(it) : std::next(it);
            p = std::move(next);
        }
        wrap_polys_.emplace(mask, std::move(p));
    }
}

std::size_t GradedRing::dim(const GroupElement& z) const {
    if (z.free < 0) return 0;
    return static_cast<std::size_t>(piece_dim(w_, z));
}

const std::vector<std::vector<int>>& GradedRing::monomials(std::int64_t degree) const {
    if (degree < 0 || degree > max_degree_) throw InvalidInput("degree outside the precomputed range");
    return monomials_[degree];
}

std::size_t GradedRing::monomial_index(const std::vector<int>& b) const { return index_.at(b); }

void GradedRing::multiply_accumulate(const GroupElement& z1, std::size_t m1, const GroupElement& z2,
                                     const std::vector<Rational>& v, const Rational& scale,
                                     std::vector<Rational>& out) const {
    unsigned mask = 0;
    for (std::size_t i = 0; i < w_.n(); ++i)
        if (z1.torsion[i] + z2.torsion[i] >= w_.weights[i]) mask |= 1u << i;
    const auto& wrap = wrap_product(mask);
    const auto& b1 = monomials(z1.free)[m1];
    const auto& basis2 = monomials(z2.free);
    const std::size_t D = b1.size();
    std::vector<int> e(D);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Rational s = scale * v[k];
        const auto& b2 = basis2[k];
        for (const auto& [we, wv] : wrap) {
            for (std::size_t j = 0; j < D; ++j) e[j] = b1[j] + b2[j] + we[j];
            out[index_.at(e)] += s * wv;
        }
    }
}

std::vector<std::pair<std::size_t, Rational>> GradedRing::multiply_basis(const GroupElement& z1, std::size_t m1,
                                                                         const GroupElement& z2,
                                                                         std::size_t m2) const {
    GroupElement z = add(w_, z1, z2);
    std::vector<Rational> v(monomials(z2.free).size(), Rational(0));
    v[m2] = 1;
    std::vector<Rational> out(monomials(z.free).size(), Rational(0));
    multiply_accumulate(z1, m1, z2, v, Rational(1), out);
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (out[k] != 0) sparse.emplace_back(k, out[k]);
    return sparse;
}

// ---------------------------------------------------------------------------
// Structure algebra

namespace {

WeightSystem numeric_presentation(const WeightSystem& w) {
    if (!w.lambda) throw InvalidInput("structure constants need numeric lambda");
    if (!general_position(w)) throw InvalidInput("lambda is not in general position");
    return minimal_presentation(w);
}

std::int64_t max_free_difference(const WeightSystem& p, const std::vector<GroupElement>& I) {
    std::int64_t m = 0;
    for (const auto& x : I)
        for (const auto& y : I) m = std::max(m, subtract(p, x, y).free);
    return m;
}

std::vector<GroupElement> presentation_vertices(const WeightSystem& w, const WeightSystem& p,
                                                const std::vector<GroupElement>& I) {
    std::vector<GroupElement> v;
    for (const auto& x : I) v.push_back(to_presentation(w, p, x));
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InvalidInput("interval contains repeated elements");
    if (!is_convex(p, v)) throw InvalidInput("vertex set is not convex");
    return v;
}

}  // namespace

StructureAlgebra::StructureAlgebra(const WeightSystem& w, const std::vector<GroupElement>& I)
    : vertices_(presentation_vertices(w, numeric_presentation(w), I)),
      ring_(numeric_presentation(w), max_free_difference(numeric_presentation(w), vertices_)) {
    const std::size_t V = vertices_.size();
    const WeightSystem& p = ring_.weights();
    degrees_.reserve(V * V);
    block_start_.assign(V * V, 0);
    block_dim_.assign(V * V, 0);
    for (std::size_t x = 0; x < V; ++x)
        for (std::size_t y = 0; y < V; ++y) {
            GroupElement z = subtract(p, vertices_[x], vertices_[y]);
            const std::size_t k = x * V + y;
            block_start_[k] = basis_.size();
            block_dim_[k] = ring_.dim(z);
            for (std::size_t m = 0; m < block_dim_[k]; ++m) basis_.push_back(BasisElement{x, y, m});
            degrees_.push_back(std::move(z));
        }
}

const GroupElement& StructureAlgebra::degree(std::size_t row, std::size_t col) const {
    return degrees_[row * vertices_.size() + col];
}

std::size_t StructureAlgebra::block_start(std::size_t row, std::size_t col) const {
    return block_start_[row * vertices_.size() + col];
}

std::size_t StructureAlgebra::block_dim(std::size_t row, std::size_t col) const {
    return block_dim_[row * vertices_.size() + col];
}

std::size_t StructureAlgebra::idempotent(std::size_t vertex) const { return block_start(vertex, vertex); }

std::vector<std::pair<std::size_t, Rational>> StructureAlgebra::multiply(std::size_t a, std::size_t b) const {
    const auto& A = basis_[a];
    const auto& B = basis_[b];
    if (A.col != B.row) return {};
    auto prod = ring_.multiply_basis(degree(A.row, A.col), A.monomial, degree(B.row, B.col), B.monomial);
    const std::size_t start = block_start(A.row, B.col);
    for (auto& [k, v] : prod) k += start;
    return prod;
}

StructureAlgebra structure_constants(const WeightSystem& w, const std::vector<GroupElement>& I) {
    return StructureAlgebra(w, I);
}

StructureAlgebra structure_constants(const WeightSystem& w, const std::vector<GroupElement>& I,
                                     const RationalMatrix& lambda) {
    WeightSystem wl = w;
    wl.lambda = lambda;
    validate(wl);
    return StructureAlgebra(wl, I);
}

bool spot_check_associativity(const StructureAlgebra& A, std::uint64_t seed, int trials) {
    if (A.dim() == 0) return true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, A.dim() - 1);
    using Sparse = std::map<std::size_t, Rational>;
    auto times = [&](const Sparse& u, std::size_t b, bool left) {
        Sparse out;
        for (const auto& [k, v] : u)
            for (const auto& [k2, v2] : left ? A.multiply(b, k) : A.multiply(k, b)) out[k2] += v * v2;
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    };
    for (int t = 0; t < trials; ++t) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        // Bias towards composable triples.
        const auto& basis = A.basis();
        std::vector<std::size_t> after_a, after_b;
        for (std::size_t k = 0; k < A.dim(); ++k)
            if (basis[k].row == basis[a].col) after_a.push_back(k);
        if (!after_a.empty()) b = after_a[pick(rng) % after_a.size()];
        for (std::size_t k = 0; k < A.dim(); ++k)
            if (basis[k].row == basis[b].col) after_b.push_back(k);
        if (!after_b.empty()) c = after_b[pick(rng) % after_b.size()];
        Sparse ab;
        for (const auto& [k, v] : A.multiply(a, b)) ab[k] += v;
        Sparse bc;
        for (const auto& [k, v] : A.multiply(b, c)) bc[k] += v;
        if (times(ab, c, false) != times(bc, a, true)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Minimal projective resolutions

namespace {

// Free module F = sum_k P_{v_k} with P_v = A e_v; e_x P_v = R_{x - v}.
struct FreeModule {
    std::vector<std::size_t> gens;  // vertex of each generator
};

struct FiberLayout {
    std::vector<std::size_t> offset;  // per generator
    std::size_t dim = 0;
};

FiberLayout fiber(const StructureAlgebra& A, const FreeModule& F, std::size_t x) {
    FiberLayout L;
    for (auto v : F.gens) {
        L.offset.push_back(L.dim);
        L.dim += A.block_dim(x, v);
    }
    return L;
}

// a * u where a is the monomial m of R_{y - x} and u lies in e_x F.
std::vector<Rational> act(const StructureAlgebra& A, const FreeModule& F, std::size_t y, std::size_t x,
                          std::size_t m, const std::vector<Rational>& u, const FiberLayout& Lx,
                          const FiberLayout& Ly) {
    std::vector<Rational> out(Ly.dim, Rational(0));
    for (std::size_t g = 0; g < F.gens.size(); ++g) {
        const std::size_t v = F.gens[g];
        const std::size_t dx = A.block_dim(x, v);
        if (dx == 0) continue;
        std::vector<Rational> comp(u.begin() + Lx.offset[g], u.begin() + Lx.offset[g] + dx);
        if (std::all_of(comp.begin(), comp.end(), [](const Rational& r) { return r == 0; })) continue;
        std::vector<Rational> res(A.block_dim(y, v), Rational(0));
        A.ring().multiply_accumulate(A.degree(y, x), m, A.degree(x, v), comp, Rational(1), res);
        for (std::size_t k = 0; k < res.size(); ++k) out[Ly.offset[g] + k] += res[k];
    }
    return out;
}

RationalMatrix rows_to_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

// Echelon basis of the span of the given rows.
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    if (rows.empty() || cols == 0) return {};
    RowEchelon e = rref(rows_to_matrix(rows, cols));
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
    return out;
}

}  // namespace

int projective_dimension_of_simple(const StructureAlgebra& A, std::size_t vertex) {
    const std::size_t V = A.vertices().size();
    if (vertex >= V) throw InvalidInput("vertex index out of range");
    // Vertices ordered so that a nonzero R_{y-x} with x != y forces x < y
    // in a linear extension; the library order (free first) is one.
    FreeModule F{{vertex}};
    // K[x] = basis (rows) of the submodule at vertex x.
    std::vector<std::vector<std::vector<Rational>>> K(V);
    for (std::size_t x = 0; x < V; ++x) {
        if (x == vertex) continue;
        FiberLayout L = fiber(A, F, x);
        for (std::size_t k = 0; k < L.dim; ++k) {
            std::vector<Rational> e(L.dim, Rational(0));
            e[k] = 1;
            K[x].push_back(std::move(e));
        }
    }
    int length = 0;
    for (int guard = 0; guard <= static_cast<int>(V) + 1; ++guard) {
        bool empty = std::all_of(K.begin(), K.end(), [](const auto& b) { return b.empty(); });
        if (empty) return length;
        ++length;
        std::vector<FiberLayout> layout(V);
        for (std::size_t x = 0; x < V; ++x) layout[x] = fiber(A, F, x);
        // Top of K: complement of rad K at each vertex.
        FreeModule F2;
        std::vector<std::vector<Rational>> images;  // generator images in e_{gen} F
        for (std::size_t y = 0; y < V; ++y) {
            if (K[y].empty()) continue;
            std::vector<std::vector<Rational>> rad;
            for (std::size_t x = 0; x < V; ++x) {
                if (x == y || K[x].empty()) continue;
                const std::size_t dm = A.block_dim(y, x);
                for (std::size_t m = 0; m < dm; ++m)
                    for (const auto& u : K[x]) rad.push_back(act(A, F, y, x, m, u, layout[x], layout[y]));
            }
            auto basis = span_basis(rad, layout[y].dim);
            std::size_t r = basis.size();
            for (const auto& k : K[y]) {
                auto trial = basis;
                trial.push_back(k);
                if (rank(rows_to_matrix(trial, layout[y].dim)) > r) {
                    basis = std::move(trial);
                    ++r;
                    F2.gens.push_back(y);
                    images.push_back(k);
                }
            }
        }
        // Kernel of F2 -> F at each vertex z.
        std::vector<std::vector<std::vector<Rational>>> K2(V);
        for (std::size_t z = 0; z < V; ++z) {
            FiberLayout L2 = fiber(A, F2, z);
            if (L2.dim == 0) continue;
            RationalMatrix M(layout[z].dim, L2.dim, Rational(0));
            for (std::size_t g = 0; g < F2.gens.size(); ++g) {
                const std::size_t y = F2.gens[g];
                const std::size_t dm = A.block_dim(z, y);
                for (std::size_t m = 0; m < dm; ++m) {
                    auto col = act(A, F, z, y, m, images[g], layout[y], layout[z]);
                    for (std::size_t r = 0; r < col.size(); ++r) M(r, L2.offset[g] + m) = col[r];
                }
            }
            K2[z] = nullspace(M);
        }
        F = std::move(F2);
        K = std::move(K2);
    }
    throw VerificationFailure("projective resolution did not terminate");
}

int global_dimension(const StructureAlgebra& A) {
    int g = 0;
    for (std::size_t v = 0; v < A.vertices().size(); ++v) g = std::max(g, projective_dimension_of_simple(A, v));
    return g;
}

// ---------------------------------------------------------------------------
// CM-canonical tensor structure

bool cm_tensor_check(const WeightSystem& w_in) {
    const WeightSystem w = normalize_weights(w_in);
    if (w.n() != static_cast<std::size_t>(w.d) + 2) throw InvalidInput("cm_tensor_check needs n = d + 2");
    Quiver q = i_canonical_quiver(w, cm_interval(w));
    const std::size_t n = w.n();
    // Box of coordinates 0 <= a_i <= p_i - 2.
    std::size_t box = 1;
    for (int p : w.weights) box *= static_cast<std::size_t>(p - 1);
    if (q.vertices.size() != box) return false;
    std::set<std::vector<std::int64_t>> coords;
    for (const auto& v : q.vertices) {
        if (v.free != 0) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (v.torsion[i] > w.weights[i] - 2) return false;
        coords.insert(v.torsion);
    }
    if (coords.size() != box) return false;
    std::size_t expected_arrows = 0;
    std::size_t expected_squares = 0;
    for (const auto& a : coords) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] < w.weights[i] - 2) ++expected_arrows;
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[i] < w.weights[i] - 2 && a[j] < w.weights[j] - 2) ++expected_squares;
        }
    }
    if (q.arrows.size() != expected_arrows) return false;
    for (const auto& a : q.arrows) {
        auto s = q.vertices[a.source].torsion;
        s[a.label - 1] += 1;
        if (s != q.vertices[a.target].torsion || q.vertices[a.target].free != 0) return false;
    }
    if (q.relations.size() != expected_squares) return false;
    for (const auto& r : q.relations) {
        if (r.paths.size() != 2 || r.paths[0].size() != 2 || r.paths[1].size() != 2) return false;
        if (r.coeffs[0] != Coefficient{1, std::nullopt} || r.coeffs[1] != Coefficient{-1, std::nullopt}) return false;
        const auto& p0 = r.paths[0];
        const auto& p1 = r.paths[1];
        if (q.arrows[p0[0]].label != q.arrows[p1[1]].label || q.arrows[p0[1]].label != q.arrows[p1[0]].label)
            return false;
        if (q.arrows[p0[0]].label == q.arrows[p0[1]].label) return false;
    }
    return true;
}

}  // namespace glci

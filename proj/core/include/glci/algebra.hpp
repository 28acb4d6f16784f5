#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glci/arith.hpp"
#include "glci/grading.hpp"
#include "glci/linalg.hpp"

namespace glci {

// Relation coefficient: scalar, or scalar * lambda[i,j] with i the
// hyperplane index (1-based) and j the coordinate index (0-based).
struct Coefficient {
    Rational scalar{1};
    std::optional<std::pair<int, int>> lambda;

    std::string to_string() const;
    static Coefficient parse(const std::string& text);

    friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

struct Arrow {
    std::size_t source = 0;  // vertex index
    std::size_t target = 0;  // vertex index
    int label = 0;           // generator index 1..n
    bool cut = false;        // only set by the type-A~ construction

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Relation {
    std::vector<std::vector<std::size_t>> paths;  // arrow indices, in walking order
    std::vector<Coefficient> coeffs;

    friend bool operator==(const Relation&, const Relation&) = default;
};

struct Quiver {
    int d = 1;
    std::vector<int> weights;  // weights of the presentation the vertices live in
    std::vector<GroupElement> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    std::optional<std::size_t> vertex_index(const GroupElement& x) const;
    bool is_acyclic() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

bool is_convex(const WeightSystem& w, const std::vector<GroupElement>& I);

// Re-expresses an element of w (or of its minimal presentation) in the
// coordinates of minimal_presentation(w).
GroupElement to_presentation(const WeightSystem& w, const WeightSystem& presentation, const GroupElement& x);

// The (n-d-1) x (d+1) coefficient block after moving the first d+1
// hyperplanes to coordinate hyperplanes. Requires numeric lambda on a
// normalized presentation with n >= d+1; throws InvalidInput when the
// first d+1 rows are dependent.
RationalMatrix normalized_lambda_block(const WeightSystem& presentation);

// True iff lambda is numeric and every minor of the normalized block is nonzero.
bool general_position(const WeightSystem& w);

// Vandermonde-style coefficients in general position: the non-unit weights
// receive coordinate rows first, then rows (1, t, t^2, ...) with distinct
// nodes t >= 2 + offset. Weight-1 rows receive further unused nodes.
RationalMatrix vandermonde_lambda(const WeightSystem& w, int offset = 0);
// vandermonde_lambda with the minor check enforced; retries larger offsets.
WeightSystem with_generic_lambda(const WeightSystem& w);

Quiver i_canonical_quiver(const WeightSystem& w, const std::vector<GroupElement>& I);

std::vector<GroupElement> canonical_interval(const WeightSystem& w);  // [0, dc]
GroupElement dominant_element(const WeightSystem& w);                 // dc + 2 omega
std::vector<GroupElement> cm_interval(const WeightSystem& w);         // [0, dc + 2 omega]

IntMatrix cartan_matrix(const WeightSystem& w, const std::vector<GroupElement>& I);

// Monomial model of R = k[T_0..T_d, X_1..X_n] / (X_i^{p_i} - l_i(T)) for a
// minimal presentation with numeric coefficients. A homogeneous piece R_z
// has basis X^{torsion(z)} T^b with |b| = free(z).
class GradedRing {
public:
    GradedRing(const WeightSystem& presentation, std::int64_t max_degree);

    const WeightSystem& weights() const { return w_; }
    std::int64_t max_degree() const { return max_degree_; }

    std::size_t dim(const GroupElement& z) const;
    const std::vector<std::vector<int>>& monomials(std::int64_t degree) const;
    std::size_t monomial_index(const std::vector<int>& b) const;

    // out += scale * (X^{t1} T^{b1}) * v, where v is a vector in R_{z2}
    // and out is a vector in R_{z1 + z2}.
    void multiply_accumulate(const GroupElement& z1, std::size_t m1, const GroupElement& z2,
                             const std::vector<Rational>& v, const Rational& scale,
                             std::vector<Rational>& out) const;

    std::vector<std::pair<std::size_t, Rational>> multiply_basis(const GroupElement& z1, std::size_t m1,
                                                                 const GroupElement& z2, std::size_t m2) const;

private:
    using Poly = std::map<std::vector<int>, Rational>;
    const Poly& wrap_product(unsigned mask) const { return wrap_polys_.at(mask); }

    WeightSystem w_;
    std::int64_t max_degree_;
    std::vector<std::vector<std::vector<int>>> monomials_;  // by degree
    std::map<std::vector<int>, std::size_t> index_;
    std::map<unsigned, Poly> wrap_polys_;
};

// A^I = (R_{x-y})_{x,y in I} with its monomial basis.
class StructureAlgebra {
public:
    struct BasisElement {
        std::size_t row = 0;  // vertex index x
        std::size_t col = 0;  // vertex index y
        std::size_t monomial = 0;  // index into ring().monomials(free(x - y))
    };

    StructureAlgebra(const WeightSystem& w, const std::vector<GroupElement>& I);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<GroupElement>& vertices() const { return vertices_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const GradedRing& ring() const { return ring_; }
    const WeightSystem& presentation() const { return ring_.weights(); }

    // Degree of entry (x, y), i.e. x - y.
    const GroupElement& degree(std::size_t row, std::size_t col) const;
    std::size_t block_start(std::size_t row, std::size_t col) const;
    std::size_t block_dim(std::size_t row, std::size_t col) const;
    std::size_t idempotent(std::size_t vertex) const;
    bool in_radical(std::size_t b) const { return basis_[b].row != basis_[b].col; }

    std::vector<std::pair<std::size_t, Rational>> multiply(std::size_t a, std::size_t b) const;

private:
    std::vector<GroupElement> vertices_;
    std::vector<GroupElement> degrees_;      // row-major |I| x |I|
    std::vector<std::size_t> block_start_;   // row-major |I| x |I|
    std::vector<std::size_t> block_dim_;
    std::vector<BasisElement> basis_;
    GradedRing ring_;
};

StructureAlgebra structure_constants(const WeightSystem& w, const std::vector<GroupElement>& I);
StructureAlgebra structure_constants(const WeightSystem& w, const std::vector<GroupElement>& I,
                                     const RationalMatrix& lambda);

// Checks (ab)c = a(bc) on random basis triples.
bool spot_check_associativity(const StructureAlgebra& a, std::uint64_t seed, int trials);

// Projective dimension of the simple module at a vertex, via its minimal
// projective resolution.
int projective_dimension_of_simple(const StructureAlgebra& a, std::size_t vertex);
int global_dimension(const StructureAlgebra& a);

bool cm_tensor_check(const WeightSystem& w);

}  // namespace glci

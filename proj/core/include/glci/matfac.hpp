#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glci/grading.hpp"
#include "glci/linalg.hpp"
#include "glci/multipoly.hpp"

namespace glci {

using PolyMatrix = Matrix<MultiPoly>;

// Subsets of {1..n} as bitmasks (bit i-1 for element i).
using Subset = unsigned;

// Subsets of the given parity ordered by size, then lexicographically.
std::vector<Subset> parity_subsets(std::size_t n, bool odd);
std::string subset_to_string(Subset s, std::size_t n);

// Shift of the summand of P^{l,a} indexed by I: ((|I|+a)/2) c - sum_{i in I} l_i x_i.
GroupElement mf_shift(const WeightSystem& w, const std::vector<int>& ell, Subset I, int a);

struct GradedMatrixPair {
    WeightSystem w;            // normalized, n = d + 2
    std::vector<int> ell;
    std::vector<Subset> odd;   // row order of M, column order of N
    std::vector<Subset> even;  // column order of M, row order of N
    PolyMatrix M;              // P^{l,-1} (odd) -> P^{l,0} (even)
    PolyMatrix N;              // P^{l,0} (even) -> P^{l,1} (odd)
    std::vector<GroupElement> shift_odd_minus1;
    std::vector<GroupElement> shift_even_0;
    std::vector<GroupElement> shift_odd_1;
};

GradedMatrixPair mf_build(const WeightSystem& w, const std::vector<int>& ell);

// sum_i lambda_i X_i^{p_i}
MultiPoly hypersurface_polynomial(const WeightSystem& w);

struct MFReport {
    std::size_t size = 0;
    bool mn_identity = false;
    bool nm_identity = false;
    bool homogeneous = false;
    std::string detail;  // first failure, empty when all checks pass
    bool ok() const { return mn_identity && nm_identity && homogeneous; }
};

// Checks M N = N M = f Id symbolically and that every entry of M and N has
// degree shift(target) - shift(source).
MFReport mf_verify(const GradedMatrixPair& pair);
// Same, throwing VerificationFailure on failure.
MFReport mf_verify_or_throw(const GradedMatrixPair& pair);

// All l with 1 <= l_i <= p_i - 1, lexicographic.
std::vector<std::vector<int>> mf_enumerate(const WeightSystem& w);

struct MinorReport {
    bool nonsingular = false;
    std::string method;   // "symbolic" or "evaluation"
    int attempts = 0;     // evaluation points tried
    MultiPoly determinant;  // filled by the symbolic route
};

// Determinant of the submatrix of N on subsets avoiding n. Symbolic for
// size <= 8; otherwise evaluation at pseudo-random integer points drawn
// from a fixed seed, up to 8 attempts (nonzero value is a certificate).
MinorReport mf_minor_nonsingular(const GradedMatrixPair& pair, std::uint64_t seed = 0x5eed);

// Symbolic determinant by expansion over column subsets.
MultiPoly symbolic_determinant(const PolyMatrix& m);

}  // namespace glci

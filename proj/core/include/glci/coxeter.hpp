#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glci/grading.hpp"
#include "glci/linalg.hpp"
#include "glci/polynomial.hpp"

namespace glci {

// phi_{a_1..a_s}; phi_() = 1 - t. Memoized on the sorted argument list.
IntPolynomial phi(std::vector<int> a);

// Sum over subsets I with |I| <= d of (d+1-|I|) prod_{i in I}(p_i - 1).
std::int64_t k0_rank(const WeightSystem& w);

// prod over |I| <= d of phi_{(p_i)_{i in I}}^{d+1-|I|}, after dropping weight 1.
IntPolynomial coxeter_polynomial(const WeightSystem& w);

struct CoxeterFactor {
    std::vector<int> args;  // first argument list producing this polynomial
    IntPolynomial poly;
    unsigned exponent = 0;
};

// Factors of the product formula, identical polynomials merged in order of
// first appearance (subsets by size, then lexicographically).
std::vector<CoxeterFactor> coxeter_factors(const WeightSystem& w);
// "(1-t)^3 (1+t)^2 ..."
std::string factored_form(const std::vector<CoxeterFactor>& factors);

struct BlockBasisIndex {
    std::vector<int> subset;  // 1-based hyperplane indices, increasing
    int level = 0;            // e in 0..d-|I|
    std::vector<int> tuple;   // 1 <= a_i <= p_i - 1
};

struct OmegaBlock {
    std::vector<int> subset;
    std::vector<int> weights;  // (p_i)_{i in subset}
    int level = 0;
    std::size_t offset = 0;
    std::size_t size = 0;
};

struct OmegaAction {
    IntMatrix matrix;  // acts on column vectors
    std::vector<BlockBasisIndex> index;
    std::vector<OmegaBlock> blocks;
};

// Matrix of the cyclic shift on Z(prod Z/a_i) modulo the relations
// Delta_i, in the basis of tuples with entries 1..a_i-1 (lexicographic,
// last coordinate fastest).
IntMatrix xi_block(const std::vector<int>& a);

OmegaAction omega_action_matrix(const WeightSystem& w);

// det(t Id - M): split into connected blocks, Hessenberg reduction modulo
// word-size primes, Chinese remaindering under an integral Hadamard bound.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace glci

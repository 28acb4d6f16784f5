#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "glci/arith.hpp"

namespace glci {

// Sparse polynomial over Z in the variables X_1..X_n, lambda_1..lambda_n.
// Exponent vectors have length 2n: X exponents first, then lambda.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, BigInt>;

    MultiPoly() = default;
    // Constant polynomial; the variable count is fixed on first non-constant use.
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)

    static MultiPoly monomial(std::size_t n, const BigInt& coeff, const Exponents& exps);
    // coeff * X_i^e and coeff * lambda_i X_i^e, with i 1-based.
    static MultiPoly x_power(std::size_t n, std::size_t i, int e, long coeff = 1);
    static MultiPoly lambda_x_power(std::size_t n, std::size_t i, int e, long coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    BigInt evaluate(const std::vector<BigInt>& point) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    // e.g. "-lambda2*X2^3+X1"
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const BigInt& c);
    void set_width(std::size_t w);

    // Constants created from an integer have an empty exponent vector until
    // the polynomial meets one with known variables.
    std::size_t width_ = 0;
    Terms terms_;
};

}  // namespace glci

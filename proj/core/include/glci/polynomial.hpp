#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glci/arith.hpp"

namespace glci {

// Dense univariate polynomial over Z, lowest degree first.
// The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t degree);

    // 1 - t^k
    static IntPolynomial one_minus_t_pow(std::size_t k);

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    BigInt evaluate(const BigInt& t) const;

    IntPolynomial pow(unsigned e) const;

    // Exact division; throws VerificationFailure when the remainder is nonzero.
    IntPolynomial exact_div(const IntPolynomial& divisor) const;
    // Quotient and remainder; the divisor's leading coefficient must divide
    // every leading coefficient met during long division.
    bool divides_into(const IntPolynomial& divisor, IntPolynomial& quotient) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Ascending powers with explicit signs, e.g. "1-t+t^2".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace glci

#include "glci/polynomial.hpp"

#include <algorithm>

#include "glci/error.hpp"

namespace glci {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_pow(std::size_t k) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[0] += 1;
    v[k] -= 1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool IntPolynomial::divides_into(const IntPolynomial& divisor, IntPolynomial& quotient) const {
    if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    const BigInt& lead = divisor.c_.back();
    if (rem.size() < divisor.c_.size()) {
        quotient = IntPolynomial();
        return rem.empty();
    }
    std::vector<BigInt> q(rem.size() - dd, BigInt(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == 0) continue;
        if (rem[k] % lead != 0) return false;
        BigInt f = rem[k] / lead;
        q[k - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.c_[j];
    }
    quotient = IntPolynomial(std::move(q));
    return std::all_of(rem.begin(), rem.end(), [](const BigInt& v) { return v == 0; });
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
    IntPolynomial q;
    if (!divides_into(divisor, q))
        throw VerificationFailure("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
    return q;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const BigInt& v = c_[k];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (v < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace glci

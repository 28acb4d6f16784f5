#include "glci/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "glci/error.hpp"

namespace glci {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational literal '" + text + "'");
    }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_of(const std::vector<int>& values) {
    std::int64_t l = 1;
    for (int v : values) l = lcm64(l, v);
    return l;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
    return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= static_cast<long>(n - k + i);
        r /= static_cast<long>(i);
    }
    if (!r.fits_slong_p()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return r.get_si();
}

std::int64_t floor_of(const Rational& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("floor exceeds 64 bits");
    return f.get_si();
}

std::int64_t ceil_of(const Rational& q) {
    BigInt f;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("ceiling exceeds 64 bits");
    return f.get_si();
}

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace glci

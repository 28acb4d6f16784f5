#include "glci/multipoly.hpp"

#include "glci/error.hpp"

namespace glci {

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_.emplace(Exponents{}, BigInt(c));
}

MultiPoly MultiPoly::monomial(std::size_t n, const BigInt& coeff, const Exponents& exps) {
    if (exps.size() != 2 * n) throw InvalidInput("exponent vector has the wrong length");
    MultiPoly p;
    p.width_ = exps.size();
    if (coeff != 0) p.terms_.emplace(exps, coeff);
    return p;
}

MultiPoly MultiPoly::x_power(std::size_t n, std::size_t i, int e, long coeff) {
    if (i == 0 || i > n) throw InvalidInput("variable index out of range");
    Exponents ex(2 * n, 0);
    ex[i - 1] = e;
    return monomial(n, BigInt(coeff), ex);
}

MultiPoly MultiPoly::lambda_x_power(std::size_t n, std::size_t i, int e, long coeff) {
    if (i == 0 || i > n) throw InvalidInput("variable index out of range");
    Exponents ex(2 * n, 0);
    ex[i - 1] = e;
    ex[n + i - 1] = 1;
    return monomial(n, BigInt(coeff), ex);
}

void MultiPoly::set_width(std::size_t w) {
    if (w == width_ || w == 0) return;
    if (width_ != 0) throw InvalidInput("polynomials over different variable sets");
    width_ = w;
    auto it = terms_.find(Exponents{});
    if (it != terms_.end()) {
        BigInt c = it->second;
        terms_.erase(it);
        terms_.emplace(Exponents(w, 0), c);
    }
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    set_width(e.size());
    const Exponents key = (e.empty() && width_ != 0) ? Exponents(width_, 0) : e;
    auto& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.width_ && b.width_ && a.width_ != b.width_)
        throw InvalidInput("polynomials over different variable sets");
    const std::size_t w = std::max(a.width_, b.width_);
    r.set_width(w);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(w, 0);
            for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
            for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly diff = a;
    diff -= b;
    return diff.is_zero();  // widths are irrelevant once the difference vanishes
}

BigInt MultiPoly::evaluate(const std::vector<BigInt>& point) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), point.at(k).get_mpz_t(), static_cast<unsigned long>(e[k]));
            term *= pw;
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const std::size_t n = e.size() / 2;
        std::string mono;
        for (std::size_t i = 0; i < n; ++i)
            if (e[n + i]) {
                if (!mono.empty()) mono += "*";
                mono += "lambda" + std::to_string(i + 1);
                if (e[n + i] > 1) mono += "^" + std::to_string(e[n + i]);
            }
        for (std::size_t i = 0; i < n; ++i)
            if (e[i]) {
                if (!mono.empty()) mono += "*";
                mono += "X" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
        BigInt mag = abs(c);
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (mono.empty())
            s += mag.get_str();
        else if (mag != 1)
            s += mag.get_str() + "*" + mono;
        else
            s += mono;
    }
    return s;
}

}  // namespace glci

#include "hlkit/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hlkit {

TPoly TPoly::monomial(BigInt c, std::size_t e) {
    if (c == 0) return TPoly{};
    std::vector<BigInt> cs(e + 1);
    cs[e] = std::move(c);
    return TPoly(std::move(cs));
}

TPoly TPoly::t_quantum(std::size_t m) {
    return TPoly(std::vector<BigInt>(m, BigInt(1)));
}

TPoly TPoly::t_quantum_factorial(std::size_t m) {
    TPoly r = one();
    for (std::size_t k = 2; k <= m; ++k) r *= t_quantum(k);
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly{};
    std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(cs));
}

TPoly TPoly::pow(std::size_t e) const {
    TPoly r = one();
    for (std::size_t i = 0; i < e; ++i) r *= *this;
    return r;
}

TPoly TPoly::exact_div(const TPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("TPoly: division by zero");
    if (is_zero()) return TPoly{};
    if (degree() < divisor.degree())
        throw std::domain_error("TPoly: inexact division (degree)");
    std::vector<BigInt> rem = coeffs_;
    const BigInt& lead = divisor.coeffs_.back();
    std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt top = rem[i + divisor.coeffs_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw std::domain_error("TPoly: inexact division (coefficient)");
        BigInt q = top / lead;
        quot[i] = q;
        for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
            rem[i + k] -= q * divisor.coeffs_[k];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("TPoly: inexact division (remainder)");
    return TPoly(std::move(quot));
}

BigInt TPoly::eval(const BigInt& t) const {
    BigInt r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * t + coeffs_[i];
    return r;
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace hlkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hlkit {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in t with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector.
class TPoly {
public:
    TPoly() = default;
    TPoly(std::initializer_list<BigInt> cs) : coeffs_(cs) { normalize(); }
    explicit TPoly(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { normalize(); }
    explicit TPoly(long c) { if (c != 0) coeffs_.push_back(c); }

    static TPoly zero() { return TPoly{}; }
    static TPoly one() { return TPoly(1); }
    /// c * t^e
    static TPoly monomial(BigInt c, std::size_t e);
    /// 1 - t
    static TPoly one_minus_t() { return TPoly{1, -1}; }
    /// [m]_t = 1 + t + ... + t^{m-1}
    static TPoly t_quantum(std::size_t m);
    /// [m]_t! = [m]_t [m-1]_t ... [1]_t, with [0]_t! = 1
    static TPoly t_quantum_factorial(std::size_t m);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
    }

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }
    friend TPoly operator-(TPoly a, const TPoly& b) { a -= b; return a; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }
    TPoly pow(std::size_t e) const;

    /// Exact division; throws std::domain_error if the division leaves a
    /// remainder (only ever a sign of an internal inconsistency).
    TPoly exact_div(const TPoly& divisor) const;

    BigInt eval(const BigInt& t) const;

    bool operator==(const TPoly&) const = default;

    /// "c0 + c1*t + c2*t^2" rendering; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

}  // namespace hlkit

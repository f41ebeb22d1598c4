#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace localh {

/// Exact integer used for every coefficient and count in the library.
using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients. Coefficient i is
/// the coefficient of x^i. The stored sequence is always trimmed, so the zero
/// polynomial has no coefficients and no degree.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs);
    explicit Polynomial(std::vector<Integer> coeffs);

    static Polynomial monomial(std::size_t power, Integer coeff = 1);
    static Polynomial constant(Integer value) { return monomial(0, std::move(value)); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    /// Coefficient of x^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    /// Coefficients 0..length-1, zero padded. Throws if the degree does not fit.
    std::vector<Integer> padded(std::size_t length) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Integer& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Integer& lhs, Polynomial rhs) { return rhs *= lhs; }
    Polynomial operator-() const;

    /// Multiply by x^k.
    Polynomial shifted(std::size_t k) const;
    Polynomial pow(unsigned exponent) const;
    Integer evaluate(const Integer& at) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

enum class ArithOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// x^lo + x^(lo+1) + ... + x^hi, or zero when hi < lo.
Polynomial geometric_block(long long lo, long long hi);

/// (1+x)^n
Polynomial one_plus_x_pow(unsigned n);

/// Exact binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long long n, long long k);

/// coeff_i(p) == coeff_{d-i}(p) for all 0 <= i <= d. Throws DegreeTooLarge if
/// deg p > d.
bool is_symmetric(const Polynomial& p, std::size_t d);

/// Weakly increasing then weakly decreasing.
bool is_unimodal(std::span<const Integer> values);
bool is_unimodal(const std::vector<long long>& values);

bool is_nonnegative(const Polynomial& p);

/// Coordinates of a symmetric polynomial with centre d/2 in the basis
/// x^k (1+x)^(d-2k), 0 <= k <= floor(d/2).
struct GammaVector {
    std::vector<Integer> gammas;
    std::size_t degree_bound = 0;

    bool is_nonnegative() const;
    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const GammaVector& g);

/// Throws NotSymmetric when p is not symmetric with centre d/2.
GammaVector gamma_extract(const Polynomial& p, std::size_t d);
Polynomial gamma_compose(const GammaVector& g);

}  // namespace localh

#include "localh/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "localh/error.hpp"

namespace localh {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t power, Integer coeff) {
    if (coeff == 0) return {};
    std::vector<Integer> c(power + 1);
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Integer Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

std::vector<Integer> Polynomial::padded(std::size_t length) const {
    if (coeffs_.size() > length)
        fail(ErrorKind::DegreeTooLarge,
             "polynomial " + to_string() + " does not fit in " + std::to_string(length) +
                 " coefficients");
    std::vector<Integer> out(coeffs_);
    out.resize(length);
    return out;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

Integer Polynomial::evaluate(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return p + q;
        case ArithOp::Sub: return p - q;
        case ArithOp::Mul: return p * q;
    }
    return {};
}

Polynomial geometric_block(long long lo, long long hi) {
    if (lo < 0) fail(ErrorKind::InvalidArgument, "geometric_block: lower exponent must be >= 0");
    if (hi < lo) return {};
    std::vector<Integer> c(static_cast<std::size_t>(hi) + 1);
    for (long long i = lo; i <= hi; ++i) c[static_cast<std::size_t>(i)] = 1;
    return Polynomial(std::move(c));
}

Polynomial one_plus_x_pow(unsigned n) {
    std::vector<Integer> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = binomial(n, k);
    return Polynomial(std::move(c));
}

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool is_symmetric(const Polynomial& p, std::size_t d) {
    if (auto deg = p.degree(); deg && *deg > d)
        fail(ErrorKind::DegreeTooLarge,
             "is_symmetric: degree of " + p.to_string() + " exceeds " + std::to_string(d));
    for (std::size_t i = 0; i <= d / 2; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

bool is_unimodal(std::span<const Integer> values) {
    std::size_t i = 1;
    while (i < values.size() && values[i - 1] <= values[i]) ++i;
    while (i < values.size() && values[i - 1] >= values[i]) ++i;
    return i >= values.size();
}

bool is_unimodal(const std::vector<long long>& values) {
    std::vector<Integer> v(values.begin(), values.end());
    return is_unimodal(std::span<const Integer>(v));
}

bool is_nonnegative(const Polynomial& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

bool GammaVector::is_nonnegative() const {
    return std::all_of(gammas.begin(), gammas.end(), [](const Integer& g) { return g >= 0; });
}

std::ostream& operator<<(std::ostream& os, const GammaVector& g) {
    os << '(';
    for (std::size_t i = 0; i < g.gammas.size(); ++i) os << (i ? "," : "") << g.gammas[i];
    return os << ')';
}

GammaVector gamma_extract(const Polynomial& p, std::size_t d) {
    if (!is_symmetric(p, d))
        fail(ErrorKind::NotSymmetric,
             "gamma_extract: " + p.to_string() + " is not symmetric with centre " +
                 std::to_string(d) + "/2");
    GammaVector g;
    g.degree_bound = d;
    Polynomial rest = p;
    for (std::size_t k = 0; k <= d / 2; ++k) {
        // every remaining basis element has lowest term x^k with coefficient 1
        Integer gk = rest.coeff(k);
        if (gk != 0) rest -= one_plus_x_pow(static_cast<unsigned>(d - 2 * k)).shifted(k) * gk;
        g.gammas.push_back(std::move(gk));
    }
    if (!rest.is_zero())
        fail(ErrorKind::InternalMismatch, "gamma_extract: nonzero remainder " + rest.to_string());
    return g;
}

Polynomial gamma_compose(const GammaVector& g) {
    Polynomial out;
    for (std::size_t k = 0; k < g.gammas.size(); ++k) {
        if (g.gammas[k] == 0) continue;
        if (2 * k > g.degree_bound)
            fail(ErrorKind::InvalidArgument, "gamma_compose: too many gamma entries for degree bound");
        out += one_plus_x_pow(static_cast<unsigned>(g.degree_bound - 2 * k)).shifted(k) * g.gammas[k];
    }
    return out;
}

}  // namespace localh

#include "pel/euler.hpp"

#include <deque>
#include <mutex>

namespace pel {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[i];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        v[i] += rhs.coeffs_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty())
        return RationalPolynomial();
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v)
        x *= c;
    return RationalPolynomial(std::move(v));
}

Rational eval_poly(const RationalPolynomial& P, const Rational& x) {
    return P(x);
}

namespace {

Rational binom(long n, long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(b);
}

std::mutex cache_mutex;
std::vector<Rational> number_cache;           // E_n = E_n(0)
std::deque<RationalPolynomial> poly_cache;    // E_n(x); deque keeps refs stable

// The x = 0 shadow of the defining recurrence:
// E_m = -(1/2) sum_{k<m} binom(m,k) E_k for m >= 1, E_0 = 1.
void grow_numbers(int n) {
    if (number_cache.empty())
        number_cache.emplace_back(1);
    for (int m = static_cast<int>(number_cache.size()); m <= n; ++m) {
        Rational acc(0);
        for (int k = 0; k < m; ++k)
            acc += binom(m, k) * number_cache[k];
        acc *= Rational(-1, 2);
        number_cache.push_back(std::move(acc));
    }
}

} // namespace

const RationalPolynomial& euler_polynomial(int n) {
    if (n < 0)
        throw domain_error("euler_polynomial: n must be >= 0");
    std::lock_guard<std::mutex> lock(cache_mutex);
    grow_numbers(n);
    for (int m = static_cast<int>(poly_cache.size()); m <= n; ++m) {
        // assemble E_m(x) = sum_k binom(m,k) E_k x^{m-k} from the numbers
        std::vector<Rational> v(m + 1, Rational(0));
        for (int k = 0; k <= m; ++k)
            v[m - k] = binom(m, k) * number_cache[k];
        poly_cache.emplace_back(std::move(v));
    }
    return poly_cache[n];
}

Rational euler_number(int n) {
    if (n < 0)
        throw domain_error("euler_number: n must be >= 0");
    std::lock_guard<std::mutex> lock(cache_mutex);
    grow_numbers(n);
    return number_cache[n];
}

} // namespace pel

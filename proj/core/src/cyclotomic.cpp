#include "pel/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace pel {

namespace {

std::mutex phi_cache_mutex;
std::map<long, std::vector<Integer>> phi_cache;

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(const std::vector<Integer>& num,
                                  const std::vector<Integer>& div) {
    std::vector<Integer> rem = num;
    std::vector<Integer> quot(num.size() >= div.size() ? num.size() - div.size() + 1 : 0,
                              Integer(0));
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(div.size()) - 1; --i) {
        Integer c = rem[i];
        if (c == 0)
            continue;
        long shift = i - (static_cast<long>(div.size()) - 1);
        quot[shift] = c;
        for (size_t j = 0; j < div.size(); ++j)
            rem[shift + j] -= c * div[j];
    }
    return quot;
}

std::vector<Integer> compute_phi(long d);

const std::vector<Integer>& phi_locked(long d) {
    auto it = phi_cache.find(d);
    if (it == phi_cache.end())
        it = phi_cache.emplace(d, compute_phi(d)).first;
    return it->second;
}

// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
std::vector<Integer> compute_phi(long d) {
    std::vector<Integer> num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e) {
        if (d % e == 0)
            num = divide_monic(num, phi_locked(e));
    }
    return num;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long d) {
    if (d < 1)
        throw domain_error("cyclotomic_polynomial: d must be >= 1");
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    return phi_locked(d);
}

CyclotomicElement::CyclotomicElement(long d)
    : order_(d), coeffs_(euler_phi(d), Rational(0)) {
    if (d < 1)
        throw domain_error("CyclotomicElement: order must be >= 1");
}

CyclotomicElement::CyclotomicElement(long d, std::vector<Rational> coeffs)
    : order_(d), coeffs_(std::move(coeffs)) {
    if (d < 1)
        throw domain_error("CyclotomicElement: order must be >= 1");
    if (coeffs_.size() != static_cast<size_t>(euler_phi(d)))
        throw domain_error("CyclotomicElement: coefficient count must be phi(d)");
}

CyclotomicElement CyclotomicElement::from_rational(long d, const Rational& c) {
    CyclotomicElement x(d);
    x.coeffs_[0] = c;
    return x;
}

CyclotomicElement CyclotomicElement::root_of_unity(long d, long e) {
    e %= d;
    if (e < 0)
        e += d;
    long deg = euler_phi(d);
    if (e < deg) {
        CyclotomicElement x(d);
        x.coeffs_[e] = 1;
        return x;
    }
    // reduce x^e mod Phi_d by repeated leading-term elimination
    const std::vector<Integer>& phi = cyclotomic_polynomial(d);
    std::vector<Rational> work(e + 1, Rational(0));
    work[e] = 1;
    for (long i = e; i >= deg; --i) {
        Rational c = work[i];
        if (c == 0)
            continue;
        work[i] = 0;
        for (long j = 0; j < deg; ++j)
            work[i - deg + j] -= c * Rational(phi[j]);
    }
    work.resize(deg);
    return CyclotomicElement(d, std::move(work));
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CyclotomicElement::to_rational() const {
    if (!is_rational())
        throw domain_error("to_rational: element is not rational");
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& rhs) const {
    if (order_ != rhs.order_)
        throw domain_error("CyclotomicElement: order mismatch");
    std::vector<Rational> v = coeffs_;
    for (size_t i = 0; i < v.size(); ++i)
        v[i] += rhs.coeffs_[i];
    return CyclotomicElement(order_, std::move(v));
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& rhs) const {
    return *this + (-rhs);
}

CyclotomicElement CyclotomicElement::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v)
        c = -c;
    return CyclotomicElement(order_, std::move(v));
}

CyclotomicElement CyclotomicElement::scaled(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v)
        x *= c;
    return CyclotomicElement(order_, std::move(v));
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& rhs) const {
    if (order_ != rhs.order_)
        throw domain_error("CyclotomicElement: order mismatch");
    long deg = static_cast<long>(coeffs_.size());
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (long i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (long j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    const std::vector<Integer>& phi = cyclotomic_polynomial(order_);
    for (long i = static_cast<long>(prod.size()) - 1; i >= deg; --i) {
        Rational c = prod[i];
        if (c == 0)
            continue;
        prod[i] = 0;
        for (long j = 0; j < deg; ++j)
            prod[i - deg + j] -= c * Rational(phi[j]);
    }
    prod.resize(deg);
    return CyclotomicElement(order_, std::move(prod));
}

CyclotomicElement CyclotomicElement::pow(long e) const {
    if (e < 0)
        throw domain_error("CyclotomicElement::pow: negative exponent");
    CyclotomicElement acc = from_rational(order_, Rational(1));
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CyclotomicElement::operator==(const CyclotomicElement& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

std::string to_string(const CyclotomicElement& v) {
    std::string out;
    const auto& c = v.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        Rational a = c[i];
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        if (i == 0) {
            out += to_string(a);
        } else {
            if (a != 1)
                out += to_string(a) + "*";
            out += "z";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

CyclotomicElement CyclotomicElement::raised_to_order(long D) const {
    if (D % order_ != 0)
        throw domain_error("raised_to_order: order must divide the target");
    if (D == order_)
        return *this;
    long step = D / order_;
    CyclotomicElement acc(D);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        acc = acc + root_of_unity(D, step * static_cast<long>(i)).scaled(coeffs_[i]);
    }
    return acc;
}

} // namespace pel

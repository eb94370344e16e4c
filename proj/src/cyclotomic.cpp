#include "orbitwist/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace orbitwist {

namespace {

// Exact division of polynomials over Z (num must be divisible by den).
std::vector<long long> poly_divide(std::vector<long long> num,
                                   const std::vector<long long>& den) {
    if (den.empty() || den.back() == 0) throw std::logic_error("poly_divide: bad divisor");
    std::vector<long long> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        long long lead = num[i];
        if (lead == 0) continue;
        if (lead % den.back() != 0) throw std::logic_error("poly_divide: not divisible");
        long long f = lead / den.back();
        int shift = i - static_cast<int>(den.size()) + 1;
        q[shift] = f;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
    }
    for (long long v : num)
        if (v != 0) throw std::logic_error("poly_divide: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long long>> cache;
    static std::recursive_mutex mu;  // the computation below recurses on divisors
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1 required");
    std::vector<long long> num(n + 1, 0);  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divide(std::move(num), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(num)).first->second;
}

CycInt CycInt::root_of_unity(int n, long long exponent) {
    CycInt r(n);
    long long e = exponent % n;
    if (e < 0) e += n;
    r.c_.assign(static_cast<size_t>(e) + 1, 0);
    r.c_[e] = 1;
    r.reduce();
    return r;
}

void CycInt::reduce() {
    const auto& phi = cyclotomic_polynomial(n_);
    const int d = static_cast<int>(phi.size()) - 1;  // deg Phi_n, monic
    for (int i = static_cast<int>(c_.size()) - 1; i >= d; --i) {
        long long f = c_[i];
        if (f == 0) continue;
        c_[i] = 0;
        for (int j = 0; j < d; ++j) c_[i - d + j] -= f * phi[j];
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool CycInt::is_zero() const {
    for (long long v : c_)
        if (v) return false;
    return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (n_ != o.n_) {
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (!o.is_zero()) throw std::invalid_argument("CycInt: mixed levels");
        return *this;
    }
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    CycInt neg = o;
    for (auto& v : neg.c_) v = -v;
    return *this += neg;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (n_ != o.n_) {
        if (is_zero() || o.is_zero()) return CycInt::zero(std::max(n_, o.n_));
        throw std::invalid_argument("CycInt: mixed levels");
    }
    CycInt r(n_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.reduce();
    return r;
}

bool CycInt::operator==(const CycInt& o) const {
    if (n_ != o.n_) return is_zero() && o.is_zero();
    return c_ == o.c_;
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
        acc += static_cast<double>(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

}  // namespace orbitwist

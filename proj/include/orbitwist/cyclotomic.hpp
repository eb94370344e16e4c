#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace orbitwist {

/// Cyclotomic polynomial Phi_n, coefficients in ascending degree order.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Exact element of Z[zeta_N], stored as a polynomial in zeta reduced
/// modulo Phi_N. Equality is therefore decidable, which is what the
/// exact algebra checks on formal sums rely on.
class CycInt {
public:
    CycInt() : n_(1), c_{} {}
    explicit CycInt(int n) : n_(n) {}

    static CycInt zero(int n) { return CycInt(n); }
    static CycInt one(int n) { return root_of_unity(n, 0); }
    static CycInt root_of_unity(int n, long long exponent);

    int level() const { return n_; }
    bool is_zero() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator*(const CycInt& o) const;
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

private:
    void reduce();
    int n_;
    std::vector<long long> c_;  // degree < deg(Phi_n) after reduce()
};

}  // namespace orbitwist

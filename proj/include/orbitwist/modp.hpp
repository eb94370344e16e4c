#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbitwist {

/// Monomial in F_p[x_1..x_n] (x) Lambda[y_1..y_n, z]: polynomial exponents
/// plus a bitmask over the odd generators (bits 0..n-1 are y_1..y_n, bit n
/// is z). Odd generators square to zero.
struct Monomial {
    std::vector<int> xexp;
    std::uint32_t odd = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of the graded algebra with |x_i| = 2 and |y_i| = |z| = 1, signs
/// following the Koszul rule uv = (-1)^{|u||v|} vu.
class GradedPoly {
public:
    GradedPoly(int p, int n) : p_(p), n_(n) {}
    static GradedPoly x(int p, int n, int i);  // i is 1-based
    static GradedPoly y(int p, int n, int i);
    static GradedPoly z_gen(int p, int n);

    int prime() const { return p_; }
    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, int>& terms() const { return terms_; }

    void add_term(Monomial m, long long coeff);
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly scale(long long c) const;
    bool operator==(const GradedPoly& o) const = default;

    int degree() const;  // max degree of a term, -1 when zero
    bool homogeneous() const;
    bool has_z() const;
    std::string str() const;

private:
    int p_;
    int n_;
    std::map<Monomial, int> terms_;
};

int monomial_degree(const Monomial& m);

/// Bockstein derivation: beta(y_i) = x_i, beta(x_i) = beta(z) = 0,
/// beta(uv) = beta(u)v + (-1)^{deg u} u beta(v).
GradedPoly bockstein(const GradedPoly& q);

/// Inverse transgression at g = (a_1..a_n): substitute y_i -> y_i + a_i z
/// (and drop the w-terms, so x_i -> x_i), then take the z-coefficient.
GradedPoly poly_transgress(const GradedPoly& q, const std::vector<int>& g);
GradedPoly double_transgress(const GradedPoly& q, const std::vector<int>& g,
                             const std::vector<int>& h);

/// Monomials of the given degree in the x/y part (no z), ordered.
std::vector<Monomial> monomial_basis(int p, int n, int degree);

/// F_p-basis of ker(beta) in the given degree.
std::vector<GradedPoly> kernel_beta_basis(int p, int n, int degree);

/// Whether some g in (Z_p)^n has a nonzero transgression of q.
bool transgression_nontrivial(const GradedPoly& q);

/// Parse expressions like "x1 y2 y3 - x2 y1 y3 + x3 y1 y2" (also accepts
/// coefficients and x1^2-style powers).
GradedPoly parse_poly(int p, int n, const std::string& text);

struct ConsistencyReport {
    bool pass = true;
    long long checked = 0;
    std::string first_mismatch;
};

/// Exhaustive comparison of the double transgression of the type III(1,2,3)
/// cocycle on (Z_p)^3 against the cross-product character k -> zeta_p^{(gxh).k}.
ConsistencyReport cocycle_consistency_check(int p);

}  // namespace orbitwist

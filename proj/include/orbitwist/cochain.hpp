#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitwist/group.hpp"

namespace orbitwist {

/// An N-th root of unity, stored as its exponent: e^{2 pi i exponent / modulus}.
struct CircleValue {
    int exponent = 0;
    int modulus = 1;
    std::complex<double> to_complex() const;
};

/// U(1)-valued n-cochain on a finite group, values restricted to the N-th
/// roots of unity and stored as exact exponents mod N. The group is held by
/// pointer; cochains never outlive the group they are defined on.
struct Cochain1 {
    const FiniteGroup* group = nullptr;
    int modulus = 1;
    std::vector<int> exps;  // size |G|

    static Cochain1 trivial(const FiniteGroup& g, int n);
    int at(int x) const { return exps[x]; }
    CircleValue value(int x) const { return {exps[x], modulus}; }
};

struct Cochain2 {
    const FiniteGroup* group = nullptr;
    int modulus = 1;
    std::vector<int> exps;  // size |G|^2, row-major

    static Cochain2 trivial(const FiniteGroup& g, int n);
    int at(int x, int y) const { return exps[static_cast<size_t>(x) * group->order + y]; }
    int& at(int x, int y) { return exps[static_cast<size_t>(x) * group->order + y]; }
    CircleValue value(int x, int y) const { return {at(x, y), modulus}; }
    bool is_trivial() const;
    std::uint64_t fingerprint() const;
};

struct Cochain3 {
    const FiniteGroup* group = nullptr;
    int modulus = 1;
    std::vector<int> exps;  // size |G|^3

    static Cochain3 trivial(const FiniteGroup& g, int n);
    int at(int a, int b, int c) const {
        const int m = group->order;
        return exps[(static_cast<size_t>(a) * m + b) * m + c];
    }
    int& at(int a, int b, int c) {
        const int m = group->order;
        return exps[(static_cast<size_t>(a) * m + b) * m + c];
    }
    CircleValue value(int a, int b, int c) const { return {at(a, b, c), modulus}; }
    bool is_trivial() const;
    std::uint64_t fingerprint() const;
};

struct Cochain4 {
    const FiniteGroup* group = nullptr;
    int modulus = 1;
    std::vector<int> exps;  // size |G|^4
    bool is_trivial() const;
};

// Simplicial coboundaries, exponent arithmetic mod N.
Cochain2 coboundary(const Cochain1& c);
Cochain3 coboundary(const Cochain2& c);
Cochain4 coboundary(const Cochain3& c);

/// First failing tuple of the 2-cocycle identity, if any.
std::optional<std::array<int, 3>> cocycle2_failure(const Cochain2& c);
/// First failing tuple of the pentagon identity
/// w(a,b,c) + w(a,bc,d) + w(b,c,d) = w(ab,c,d) + w(a,b,cd), if any.
std::optional<std::array<int, 4>> cocycle3_failure(const Cochain3& c);
bool is_cocycle2(const Cochain2& c);
bool is_cocycle3(const Cochain3& c);

/// Shift a cocycle by a canonical coboundary so every slot containing the
/// identity evaluates to 1. Input must be a cocycle.
Cochain2 normalize_cocycle(const Cochain2& c);
Cochain3 normalize_cocycle(const Cochain3& c);
bool is_normalized(const Cochain3& c);

// Pointwise combinations; moduli are lifted to their lcm.
Cochain2 lift_modulus(const Cochain2& c, int n);
Cochain2 multiply(const Cochain2& a, const Cochain2& b);
Cochain2 inverse(const Cochain2& a);
Cochain1 lift_modulus(const Cochain1& c, int n);
Cochain1 multiply(const Cochain1& a, const Cochain1& b);
Cochain1 inverse(const Cochain1& a);
Cochain3 lift_modulus(const Cochain3& c, int n);

/// Restriction along a subgroup inclusion (i^*), result lives on k.local.
Cochain2 restrict_cochain(const Cochain2& c, const SubgroupView& k);
Cochain1 restrict_cochain(const Cochain1& c, const SubgroupView& k);

/// Restriction for a cochain living on src.local to the smaller subgroup k,
/// where src and k are views of the same parent and k is contained in src.
/// The result lives on k.local.
Cochain2 restrict_through(const Cochain2& c, const SubgroupView& src, const SubgroupView& k);

/// DPR twisting functions attached to a 3-cocycle, as exponents mod N.
/// theta is defined for all x,y and restricts on the centralizer to the
/// inverse transgression; gamma is the coproduct twist.
int dpr_theta_exp(const Cochain3& w, int g, int x, int y);
int dpr_gamma_exp(const Cochain3& w, int x, int h, int l);

/// Inverse transgression of a 3-cocycle at g: the 2-cocycle
/// w_g(x,y) = w(g,x,y) w(x,y,g) / w(x,g,y) on the centralizer of g.
Cochain2 transgress3to2(const Cochain3& w, const SubgroupView& cent_g, int g);

/// Inverse transgression of a 2-cocycle at h: the character
/// b_h(x) = b(h,x) / b(x,h) on the centralizer of h inside b's group.
/// Throws if the result fails the homomorphism test (non-cocycle input).
Cochain1 transgress2to1(const Cochain2& b, const SubgroupView& cent_h, int h);

/// Transport of a 2-cocycle on C(g) to C(k g k^-1): b'(a,b) = b(k^-1 a k, k^-1 b k).
/// `src` is the centralizer view of g and `dst` of k g k^-1, both in the same parent.
Cochain2 conjugate_cocycle(const Cochain2& b, const SubgroupView& src,
                           const SubgroupView& dst, int k);

/// Exact solver for delta(lambda) = c over the cochain's modulus.
/// nullopt means the class of c is cohomologically nontrivial.
std::optional<Cochain1> solve_coboundary(const Cochain2& c);

/// Degree-3 analogue: find beta with delta(beta) = w, or certify that none
/// exists. Used to certify nontriviality of 3-cocycles.
std::optional<Cochain2> solve_coboundary3(const Cochain3& w);

/// Standard 3-cocycles on (Z_p)^n realizing the degree-4 classes:
///   type I(i):      zeta_p^{a_i * carry_p(b_i, c_i)}
///   type II(i,j):   zeta_p^{a_i * carry_p(b_j, c_j)}   (i != j)
///   type III(i,j,k): zeta_p^{a_i b_j c_k}              (distinct)
/// where carry_p(u,v) = (u + v - ((u+v) mod p)) / p.
enum class CocycleType { I, II, III };
Cochain3 standard_cocycle(const FiniteGroup& g, int p, int n, CocycleType type,
                          std::vector<int> indices_1based);

/// Pullback along a group homomorphism phi (given as element map): the
/// inflated cochain w~(a,b,c) = w(phi a, phi b, phi c).
Cochain3 inflate(const Cochain3& w, const FiniteGroup& source,
                 const std::vector<int>& phi);

/// Inverse-transgression data for one 3-cocycle: centralizers and their
/// transgressed 2-cocycles for every g, plus a cache of double
/// transgressions for commuting pairs.
class TransgressedFamily {
public:
    TransgressedFamily(const FiniteGroup& g, Cochain3 omega);

    const FiniteGroup& group() const { return *group_; }
    const Cochain3& omega() const { return omega_; }
    const SubgroupView& cent(int g) const { return cents_[g]; }
    const Cochain2& omega_g(int g) const { return omega_gs_[g]; }

    /// Character x -> w_g(h,x)/w_g(x,h) of C(g) cap C(h); requires gh = hg.
    const Cochain1& double_transgress(int g, int h) const;

private:
    const FiniteGroup* group_;
    Cochain3 omega_;
    std::vector<SubgroupView> cents_;
    std::vector<Cochain2> omega_gs_;
    mutable std::map<std::pair<int, int>, Cochain1> double_cache_;
    mutable std::map<std::pair<int, int>, SubgroupView> pair_cents_;
};

}  // namespace orbitwist

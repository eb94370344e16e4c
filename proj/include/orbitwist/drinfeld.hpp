#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "orbitwist/cochain.hpp"
#include "orbitwist/cyclotomic.hpp"
#include "orbitwist/projrep.hpp"

namespace orbitwist {

/// Basis element delta_g x-bar of the twisted double.
struct DoubleBasis {
    int g = 0;
    int x = 0;
    friend bool operator==(const DoubleBasis&, const DoubleBasis&) = default;
    friend auto operator<=>(const DoubleBasis&, const DoubleBasis&) = default;
};

/// The twisted Drinfeld double of (G, omega): structure constants are exact
/// roots of unity derived from the DPR twisting functions of omega. The
/// cocycle is validated and normalized on construction.
class DoubleAlgebra {
public:
    DoubleAlgebra(const FiniteGroup& g, Cochain3 omega);

    const FiniteGroup& group() const { return *group_; }
    const Cochain3& omega() const { return family_.omega(); }
    const TransgressedFamily& family() const { return family_; }
    int modulus() const { return family_.omega().modulus; }
    int basis_count() const { return group_->order * group_->order; }
    int index(DoubleBasis b) const { return b.g * group_->order + b.x; }
    DoubleBasis basis(int idx) const { return {idx / group_->order, idx % group_->order}; }

    int theta_exp(int g, int x, int y) const { return dpr_theta_exp(family_.omega(), g, x, y); }
    int gamma_exp(int x, int h, int l) const { return dpr_gamma_exp(family_.omega(), x, h, l); }

    /// (delta_g x)(delta_h y): zero unless g = x h x^-1, else theta_g(x,y) on
    /// (g, xy). The exponent is mod modulus().
    std::optional<std::pair<DoubleBasis, int>> product(DoubleBasis a, DoubleBasis b) const;

    /// Delta(delta_g x) = sum_h gamma_x(h, h^-1 g) (delta_h x) (x) (delta_{h^-1 g} x).
    std::vector<std::tuple<DoubleBasis, DoubleBasis, int>> coproduct(DoubleBasis a) const;

private:
    const FiniteGroup* group_;
    TransgressedFamily family_;
};

/// Formal sum of elementary tensors of basis elements with exact cyclotomic
/// coefficients; the arithmetic for the R-matrix checks.
class PairSum {
public:
    explicit PairSum(const DoubleAlgebra& alg) : alg_(&alg) {}
    void add(DoubleBasis a, DoubleBasis b, const CycInt& coeff);
    void add_root(DoubleBasis a, DoubleBasis b, int exponent);
    bool operator==(const PairSum& o) const;
    size_t term_count() const { return terms_.size(); }
    const std::map<std::pair<int, int>, CycInt>& terms() const { return terms_; }
    const DoubleAlgebra& algebra() const { return *alg_; }

private:
    const DoubleAlgebra* alg_;
    std::map<std::pair<int, int>, CycInt> terms_;
};

PairSum pair_product(const PairSum& p, const PairSum& q);
PairSum sigma_swap(const PairSum& p);
PairSum unit_pair(const DoubleAlgebra& alg);
PairSum coproduct_sum(const DoubleAlgebra& alg, DoubleBasis a, int extra_exponent = 0);
/// Quasitriangular structure A, A^{-1}.
PairSum r_matrix(const DoubleAlgebra& alg);
PairSum r_matrix_inverse(const DoubleAlgebra& alg);

/// Module over the double: one action matrix per basis element (g, x),
/// indexed by g * |G| + x.
struct DoubleModule {
    const DoubleAlgebra* algebra = nullptr;
    int dim = 0;
    std::vector<Matrix> action;
    int base_class = -1;  // provenance when built by DPR induction
    int base_irr = -1;
};

std::vector<Complex> module_character(const DoubleModule& v);

/// Max deviation of pi(a)pi(b) from pi(ab) (and of the grading identity
/// sum_g pi(delta_g, e) = 1). Exhaustive when sample_pairs <= 0.
double module_axiom_defect(const DoubleModule& v, long long sample_pairs = 0,
                           std::uint64_t seed = kDefaultSeed);

/// The field as a trivial module: pi(delta_g x) = [g = identity].
DoubleModule trivial_module(const DoubleAlgebra& alg);
/// Left regular module, dimension |G|^2.
DoubleModule regular_module(const DoubleAlgebra& alg);

/// DPR induction of an omega_g-projective representation of the centralizer
/// of the class representative g to a module over the double.
DoubleModule dpr_induce(const DoubleAlgebra& alg, int g, const ProjectiveRep& e);

/// Canonical simple modules: one per (conjugacy class, irreducible of the
/// transgressed centralizer cocycle), ordered by (class, irreducible index).
struct DoubleSimples {
    std::vector<DoubleModule> modules;
    std::vector<std::vector<Complex>> chars;
    std::vector<int> dims;
    std::vector<std::pair<int, int>> provenance;  // (class index, irr index)
    std::vector<int> commuting_pairs;             // basis indices with gx = xg
    Matrix char_matrix;                           // commuting pairs x simples
    Eigen::ColPivHouseholderQR<Matrix> solver;
};

DoubleSimples compute_simples(const DoubleAlgebra& alg, const ConjugacyData& cd,
                              RepCache& cache);

DoubleModule tensor_modules(const DoubleModule& u, const DoubleModule& v);
/// Character of the tensor product from the characters of the factors:
/// chi(g,x) = sum_h gamma_x(h, h^-1 g) chi_u(h,x) chi_v(h^-1 g, x).
std::vector<Complex> tensor_character(const DoubleAlgebra& alg,
                                      const std::vector<Complex>& chi_u,
                                      const std::vector<Complex>& chi_v);

/// Multiplicities of a module character over the simples, solved on the
/// commuting-pair spanning set and rounded; throws if not close to
/// nonnegative integers.
std::vector<long long> decompose_module(const DoubleSimples& s,
                                        const std::vector<Complex>& chi, int dim);

}  // namespace orbitwist

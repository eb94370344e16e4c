#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "orbitwist/cochain.hpp"
#include "orbitwist/group.hpp"

namespace orbitwist {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kProjectiveTol = 1e-9;
inline constexpr double kCharacterTol = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// alpha-projective representation: rho(x) rho(y) = alpha(x,y) rho(xy).
/// All representations produced here are unitary; alpha is normalized, so
/// rho(identity) is the identity matrix.
struct ProjectiveRep {
    const FiniteGroup* group = nullptr;
    Cochain2 alpha;
    int dim = 0;
    std::vector<Matrix> rho;
};

/// Max entry deviation of rho(x)rho(y) from alpha(x,y)rho(xy) over all pairs.
double projective_defect(const ProjectiveRep& e);
bool is_projective(const ProjectiveRep& e, double tol = kProjectiveTol);

std::vector<Complex> rep_character(const ProjectiveRep& e);
/// (1/|H|) sum_h a(h) conj(b(h))
Complex char_inner(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// The alpha-twisted regular representation: rho(h) e_k = alpha(h,k) e_{hk}.
ProjectiveRep twisted_regular_rep(const FiniteGroup& h, const Cochain2& alpha);

/// Complete list of irreducible alpha-projective representations, computed by
/// recursive eigenspace splitting of group-averaged random Hermitians on the
/// twisted regular representation. Deterministic given the seed; ordered by
/// (dimension, quantized character).
std::vector<ProjectiveRep> irreducibles(const FiniteGroup& h, const Cochain2& alpha,
                                        std::uint64_t seed = kDefaultSeed);

/// h is alpha-regular iff alpha(h,x) = alpha(x,h) for all x in C(h).
std::vector<bool> alpha_regular_elements(const FiniteGroup& h, const Cochain2& alpha);
/// Indices (into conjugacy(h).classes) of the alpha-regular classes.
std::vector<int> alpha_regular_classes(const FiniteGroup& h, const ConjugacyData& cd,
                                       const Cochain2& alpha);

ProjectiveRep restrict_rep(const ProjectiveRep& e, const SubgroupView& k);

/// Restriction for a rep living on src.local to the smaller subgroup k, where
/// src and k are views of the same parent; the result lives on k.local.
ProjectiveRep restrict_rep_through(const ProjectiveRep& e, const SubgroupView& src,
                                   const SubgroupView& k);

/// Induction along k <= H. `e` lives on k.local with cocycle alpha_h
/// restricted to k; the result is an alpha_h-projective rep of H of dimension
/// [H:k] * dim(e), realized blockwise over k.transversal.
ProjectiveRep induce_rep(const ProjectiveRep& e, const SubgroupView& k,
                         const Cochain2& alpha_h);

ProjectiveRep tensor_rep(const ProjectiveRep& a, const ProjectiveRep& b);

/// rho'(x) = lam(x) rho(x); the cocycle picks up delta(lam).
ProjectiveRep twist_rep(const ProjectiveRep& e, const Cochain1& lam);

/// Integer vector over a fixed irreducible list.
struct RepRingElement {
    std::vector<long long> mult;
    long long total_dim(const std::vector<int>& dims) const;
};

/// Multiplicities of v over the irreducible characters; throws if they fail
/// to be nonnegative integers within kCharacterTol (cocycle mismatch).
RepRingElement decompose_rep(const std::vector<Complex>& chi_v, int dim_v,
                             const std::vector<std::vector<Complex>>& irr_chars,
                             const std::vector<int>& irr_dims);
RepRingElement decompose_rep(const ProjectiveRep& v,
                             const std::vector<ProjectiveRep>& irr);

/// Cached irreducible data per (group, cocycle).
struct IrrBasis {
    const FiniteGroup* group = nullptr;
    Cochain2 alpha;
    std::vector<ProjectiveRep> reps;
    std::vector<std::vector<Complex>> chars;
    std::vector<int> dims;
};

class RepCache {
public:
    explicit RepCache(std::uint64_t seed = kDefaultSeed) : seed_(seed) {}
    const IrrBasis& get(const FiniteGroup& h, const Cochain2& alpha);
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<IrrBasis>> cache_;
};

}  // namespace orbitwist

#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbitwist/drinfeld.hpp"

namespace orbitwist {

/// Element of the sector-g summand of the twisted orbifold K-theory module:
/// integer multiplicities over the irreducibles of (C(g), omega_g).
struct SectorElement {
    int sector = 0;
    std::vector<long long> mult;
};

/// Sector-indexed class with finitely many nonzero sectors. Sectors run over
/// all of G (inertia-groupoid model); conjugate sectors carry canonically
/// transported fibers, and the class-representative picture is recovered by
/// canonicalize.
struct OrbifoldKClass {
    std::map<int, std::vector<long long>> sectors;
};

/// All data needed to multiply sector elements: transgressed cocycles, their
/// irreducible bases, intersection views with coboundary witnesses, canonical
/// transports between conjugate sectors, plus the double and its simples for
/// the comparison map phi.
class TwistData {
public:
    TwistData(const FiniteGroup& g, Cochain3 omega, std::uint64_t seed = kDefaultSeed);

    const FiniteGroup& group() const { return alg_.group(); }
    const DoubleAlgebra& algebra() const { return alg_; }
    const TransgressedFamily& family() const { return alg_.family(); }
    const ConjugacyData& classes() const { return cd_; }
    RepCache& cache() { return cache_; }
    std::uint64_t seed() const { return cache_.seed(); }

    const IrrBasis& sector_basis(int g);
    int sector_rank(int g) { return static_cast<int>(sector_basis(g).reps.size()); }
    const DoubleSimples& simples();

    const SubgroupView& intersection(int g, int h);
    /// Witness on intersection(g,h).local with
    /// delta(lambda) = i_g*(w_g) i_h*(w_h) / i_gh*(w_gh); built from the
    /// coproduct twist, lambda(x) = gamma_x(g,h)^{-1}, and verified exactly.
    const Cochain1& witness(int g, int h);

    /// Index of the simple module isomorphic to the DPR induction of sector
    /// basis element (g, i).
    int phi_basis(int g, int i);

    /// Conjugation transport of basis element (src, i) to the conjugate
    /// sector dst: the image is again a basis element, whose index is
    /// returned. Implemented by the adjoint action of the double, so DPR
    /// induction (hence phi) is unchanged.
    int transport_basis(int src, int dst, int i);
    int canonical_basis(int g, int i);  // transport to the class representative

    /// Product of sector basis elements. The result is the full equivariant
    /// product: one induced contribution per C(ab)-orbit of pairs
    /// (a, b) in class(g) x class(h), landing in sector ab. For abelian G this
    /// is the single term Ind(Res x Res x witness) in sector g*h.
    const OrbifoldKClass& star_basis(int g, int i, int h, int j);

    /// The single-orbit contribution based at the pair (g, h) itself.
    SectorElement star_term(int g, int i, int h, int j);

private:
    DoubleAlgebra alg_;
    ConjugacyData cd_;
    RepCache cache_;
    std::optional<DoubleSimples> simples_;
    std::map<std::pair<int, int>, SubgroupView> inters_;
    std::map<std::pair<int, int>, Cochain1> witnesses_;
    std::map<std::pair<int, int>, int> phi_;
    std::map<std::tuple<int, int, int, int>, OrbifoldKClass> star_;
    std::map<std::tuple<int, int, int>, int> transport_;
};

OrbifoldKClass star(TwistData& t, const OrbifoldKClass& e, const OrbifoldKClass& f);

/// Additive comparison map into the Grothendieck ring of the double:
/// multiplicities over the canonical simples.
std::vector<long long> phi_dpr(TwistData& t, const OrbifoldKClass& c);

/// Rewrite a class so it is supported on class representatives only.
OrbifoldKClass canonicalize(TwistData& t, const OrbifoldKClass& c);

/// The two-sided star unit: the trivial representation in the identity sector.
OrbifoldKClass unit_class(TwistData& t);

struct StringyIsoReport {
    long long pairs_total = 0;
    long long pairs_checked = 0;
    bool exhaustive = false;
    long long failures = 0;
    double max_char_dev = 0.0;
    std::string first_failure;
    bool pass() const { return failures == 0; }
};

/// char(phi(E) (x) phi(F)) = char(phi(E * F)) over sector-irreducible pairs.
/// Exhaustive when the pair count is at most max_pairs, else a seeded sample
/// of max_pairs pairs.
StringyIsoReport verify_ring_iso(TwistData& t, long long max_pairs, std::uint64_t seed);

struct StringyAssocReport {
    long long triples_total = 0;
    long long triples_checked = 0;
    bool exhaustive = false;
    long long failures = 0;
    std::string first_failure;
    bool pass() const { return failures == 0; }
};

/// (E*F)*H = E*(F*H) on sector-irreducible triples, exact as integer vectors.
StringyAssocReport verify_associativity(TwistData& t, long long max_triples,
                                        std::uint64_t seed);

}  // namespace orbitwist

#include "orbitwist/stringy.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbitwist {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int modn(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void accumulate(OrbifoldKClass& into, int sector, const std::vector<long long>& v,
                long long scale = 1) {
    auto& acc = into.sectors[sector];
    if (acc.empty()) acc.assign(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k) acc[k] += scale * v[k];
}

}  // namespace

TwistData::TwistData(const FiniteGroup& g, Cochain3 omega, std::uint64_t seed)
    : alg_(g, std::move(omega)), cd_(conjugacy(g)), cache_(seed) {}

const IrrBasis& TwistData::sector_basis(int g) {
    return cache_.get(family().cent(g).local, family().omega_g(g));
}

const DoubleSimples& TwistData::simples() {
    if (!simples_) simples_ = compute_simples(alg_, cd_, cache_);
    return *simples_;
}

const SubgroupView& TwistData::intersection(int g, int h) {
    auto key = std::make_pair(g, h);
    auto it = inters_.find(key);
    if (it == inters_.end())
        it = inters_.emplace(key, intersect(family().cent(g), family().cent(h))).first;
    return it->second;
}

const Cochain1& TwistData::witness(int g, int h) {
    auto key = std::make_pair(g, h);
    auto it = witnesses_.find(key);
    if (it != witnesses_.end()) return it->second;

    const SubgroupView& k = intersection(g, h);
    const Cochain3& w = family().omega();
    const int n = w.modulus;
    Cochain1 lam = Cochain1::trivial(k.local, n);
    for (int x = 0; x < k.order(); ++x)
        lam.exps[x] = modn(-dpr_gamma_exp(w, k.to_parent(x), g, h), n);

    // delta(lambda) must equal i_g*(w_g) i_h*(w_h) / i_gh*(w_gh) exactly
    const FiniteGroup& gr = group();
    const int gh = gr.mul(g, h);
    for (int x = 0; x < k.order(); ++x)
        for (int y = 0; y < k.order(); ++y) {
            int xy = k.local.mul(x, y);
            int lhs = modn(static_cast<long long>(lam.exps[x]) + lam.exps[y] - lam.exps[xy], n);
            int xp = k.to_parent(x), yp = k.to_parent(y);
            int rhs = modn(static_cast<long long>(dpr_theta_exp(w, g, xp, yp)) +
                               dpr_theta_exp(w, h, xp, yp) - dpr_theta_exp(w, gh, xp, yp),
                           n);
            if (lhs != rhs)
                throw std::logic_error("witness: coboundary equation failed exact check");
        }
    return witnesses_.emplace(key, std::move(lam)).first->second;
}

int TwistData::phi_basis(int g, int i) {
    auto key = std::make_pair(g, i);
    auto it = phi_.find(key);
    if (it != phi_.end()) return it->second;
    const DoubleSimples& s = simples();
    DoubleModule m = dpr_induce(alg_, g, sector_basis(g).reps[i]);
    std::vector<Complex> chi = module_character(m);
    int match = -1;
    for (size_t j = 0; j < s.chars.size(); ++j) {
        double dev = 0;
        for (size_t p = 0; p < chi.size(); ++p)
            dev = std::max(dev, std::abs(chi[p] - s.chars[j][p]));
        if (dev < kCharacterTol) {
            if (match >= 0) throw std::logic_error("phi_basis: ambiguous simple match");
            match = static_cast<int>(j);
        }
    }
    if (match < 0) throw std::logic_error("phi_basis: induced module matches no simple");
    phi_.emplace(key, match);
    return match;
}

int TwistData::transport_basis(int src, int dst, int i) {
    if (src == dst) return i;
    auto key = std::make_tuple(src, dst, i);
    auto it = transport_.find(key);
    if (it != transport_.end()) return it->second;

    const FiniteGroup& gr = group();
    if (cd_.class_of[src] != cd_.class_of[dst])
        throw std::invalid_argument("transport_basis: sectors are not conjugate");
    int w = -1;  // minimal w with w dst w^-1 = src
    for (int c = 0; c < gr.order && w < 0; ++c)
        if (gr.conj(c, dst) == src) w = c;

    const SubgroupView& cs = family().cent(src);
    const SubgroupView& cdst = family().cent(dst);
    const Cochain3& omega = family().omega();
    const int n = omega.modulus;
    const ProjectiveRep& e = sector_basis(src).reps[i];

    // adjoint action of the double: E'(x) = zeta^{mu(x)} E(w x w^-1) with
    // mu(x) = theta_src(w, x) - theta_src(w x w^-1, w), for x in C(dst)
    ProjectiveRep moved;
    moved.group = &cdst.local;
    moved.alpha = family().omega_g(dst);
    moved.dim = e.dim;
    moved.rho.reserve(cdst.order());
    for (int x = 0; x < cdst.order(); ++x) {
        int xp = cdst.to_parent(x);
        int cxp = gr.conj(w, xp);
        int mu = modn(static_cast<long long>(dpr_theta_exp(omega, src, w, xp)) -
                          dpr_theta_exp(omega, src, cxp, w),
                      n);
        moved.rho.push_back(CircleValue{mu, n}.to_complex() * e.rho[cs.to_local(cxp)]);
    }
    if (!is_projective(moved))
        throw std::logic_error("transport_basis: transported rep fails the cocycle check");

    const IrrBasis& basis = sector_basis(dst);
    RepRingElement dec =
        decompose_rep(rep_character(moved), moved.dim, basis.chars, basis.dims);
    int target = -1;
    for (size_t t = 0; t < dec.mult.size(); ++t) {
        if (dec.mult[t] == 0) continue;
        if (dec.mult[t] != 1 || target >= 0)
            throw std::logic_error("transport_basis: transport is not a basis bijection");
        target = static_cast<int>(t);
    }
    transport_.emplace(key, target);
    return target;
}

int TwistData::canonical_basis(int g, int i) {
    return transport_basis(g, cd_.representative[cd_.class_of[g]], i);
}

SectorElement TwistData::star_term(int g, int i, int h, int j) {
    const FiniteGroup& gr = group();
    const int gh = gr.mul(g, h);
    const SubgroupView& k = intersection(g, h);
    const Cochain1& lam = witness(g, h);

    ProjectiveRep re = restrict_rep_through(sector_basis(g).reps[i], family().cent(g), k);
    ProjectiveRep rf = restrict_rep_through(sector_basis(h).reps[j], family().cent(h), k);
    ProjectiveRep tens = tensor_rep(re, rf);
    ProjectiveRep tw = twist_rep(tens, inverse(lam));
    {
        Cochain2 target = restrict_through(family().omega_g(gh), family().cent(gh), k);
        int n = std::lcm(tw.alpha.modulus, target.modulus);
        if (lift_modulus(tw.alpha, n).exps != lift_modulus(target, n).exps)
            throw std::logic_error("star: twisted cocycle is not the target restriction");
    }
    SubgroupView emb = embed(k, family().cent(gh));
    ProjectiveRep ind = induce_rep(tw, emb, family().omega_g(gh));

    const IrrBasis& target_basis = sector_basis(gh);
    RepRingElement dec =
        decompose_rep(rep_character(ind), ind.dim, target_basis.chars, target_basis.dims);
    return SectorElement{gh, std::move(dec.mult)};
}

const OrbifoldKClass& TwistData::star_basis(int g, int i, int h, int j) {
    auto key = std::make_tuple(g, i, h, j);
    auto it = star_.find(key);
    if (it != star_.end()) return it->second;

    const FiniteGroup& gr = group();
    OrbifoldKClass out;
    // The inputs stand for the equivariant families spread over their
    // classes. The product family is computed fiberwise at the class
    // representatives: one induced contribution per C(k)-orbit of pairs
    // (a, b) in class(g) x class(h) with ab = k, with the conjugate fibers
    // supplied by the canonical transports. For abelian G this is the single
    // term Ind(Res x Res x witness) in sector g*h.
    const auto& class_g = cd_.classes[cd_.class_of[g]];
    const auto& class_h = cd_.classes[cd_.class_of[h]];
    std::set<std::pair<int, int>> seen;
    for (int a : class_g)
        for (int b : class_h) {
            const int ab = gr.mul(a, b);
            if (cd_.representative[cd_.class_of[ab]] != ab) continue;  // fiber at reps only
            if (seen.count({a, b})) continue;
            for (int c : family().cent(ab).elements) seen.insert({gr.conj(c, a), gr.conj(c, b)});
            SectorElement term =
                star_term(a, transport_basis(g, a, i), b, transport_basis(h, b, j));
            accumulate(out, term.sector, term.mult);
        }
    return star_.emplace(key, std::move(out)).first->second;
}

OrbifoldKClass star(TwistData& t, const OrbifoldKClass& e, const OrbifoldKClass& f) {
    OrbifoldKClass out;
    for (const auto& [g, ve] : e.sectors)
        for (const auto& [h, vf] : f.sectors)
            for (size_t i = 0; i < ve.size(); ++i) {
                if (ve[i] == 0) continue;
                for (size_t j = 0; j < vf.size(); ++j) {
                    if (vf[j] == 0) continue;
                    const OrbifoldKClass& b =
                        t.star_basis(g, static_cast<int>(i), h, static_cast<int>(j));
                    for (const auto& [sec, v] : b.sectors) accumulate(out, sec, v, ve[i] * vf[j]);
                }
            }
    return out;
}

std::vector<long long> phi_dpr(TwistData& t, const OrbifoldKClass& c) {
    std::vector<long long> out(t.simples().modules.size(), 0);
    for (const auto& [g, v] : c.sectors)
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) out[t.phi_basis(g, static_cast<int>(i))] += v[i];
    return out;
}

OrbifoldKClass canonicalize(TwistData& t, const OrbifoldKClass& c) {
    OrbifoldKClass out;
    for (const auto& [g, v] : c.sectors) {
        int r = t.classes().representative[t.classes().class_of[g]];
        auto& acc = out.sectors[r];
        if (acc.empty()) acc.assign(t.sector_rank(r), 0);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) acc[t.canonical_basis(g, static_cast<int>(i))] += v[i];
    }
    return out;
}

OrbifoldKClass unit_class(TwistData& t) {
    const int e = t.group().identity;
    const IrrBasis& basis = t.sector_basis(e);
    int idx = -1;
    for (size_t i = 0; i < basis.reps.size(); ++i) {
        if (basis.dims[i] != 1) continue;
        bool all_one = true;
        for (const Complex& v : basis.chars[i])
            all_one &= std::abs(v - Complex(1, 0)) < kCharacterTol;
        if (all_one) {
            idx = static_cast<int>(i);
            break;
        }
    }
    if (idx < 0) throw std::logic_error("unit_class: trivial representation not found");
    OrbifoldKClass c;
    c.sectors[e] = std::vector<long long>(basis.reps.size(), 0);
    c.sectors[e][idx] = 1;
    return c;
}

namespace {

std::vector<std::pair<int, int>> sector_irreducibles(TwistData& t) {
    std::vector<std::pair<int, int>> out;
    for (int g = 0; g < t.group().order; ++g)
        for (int i = 0; i < t.sector_rank(g); ++i) out.emplace_back(g, i);
    return out;
}

OrbifoldKClass basis_class(TwistData& t, int g, int i) {
    OrbifoldKClass c;
    c.sectors[g] = std::vector<long long>(t.sector_rank(g), 0);
    c.sectors[g][i] = 1;
    return c;
}

void drop_zero_sectors(OrbifoldKClass& c) {
    for (auto it = c.sectors.begin(); it != c.sectors.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(),
                                [](long long v) { return v == 0; });
        it = zero ? c.sectors.erase(it) : std::next(it);
    }
}

}  // namespace

StringyIsoReport verify_ring_iso(TwistData& t, long long max_pairs, std::uint64_t seed) {
    const DoubleSimples& s = t.simples();
    auto basis = sector_irreducibles(t);
    const long long nb = static_cast<long long>(basis.size());

    StringyIsoReport rep;
    rep.pairs_total = nb * nb;
    rep.exhaustive = max_pairs <= 0 || rep.pairs_total <= max_pairs;

    auto check_pair = [&](int a, int b) {
        auto [g, i] = basis[a];
        auto [h, j] = basis[b];
        int u = t.phi_basis(g, i);
        int v = t.phi_basis(h, j);
        std::vector<Complex> lhs_chi = tensor_character(t.algebra(), s.chars[u], s.chars[v]);
        std::vector<long long> lhs = decompose_module(s, lhs_chi, s.dims[u] * s.dims[v]);
        std::vector<long long> rhs = phi_dpr(t, t.star_basis(g, i, h, j));
        ++rep.pairs_checked;
        if (lhs == rhs) return;
        ++rep.failures;
        double dev = 0;
        for (size_t p = 0; p < s.chars[0].size(); ++p) {
            Complex d(0, 0);
            for (size_t k = 0; k < lhs.size(); ++k)
                d += static_cast<double>(lhs[k] - rhs[k]) * s.chars[k][p];
            dev = std::max(dev, std::abs(d));
        }
        rep.max_char_dev = std::max(rep.max_char_dev, dev);
        if (rep.first_failure.empty()) {
            std::ostringstream os;
            os << "sectors (" << g << "," << i << ") x (" << h << "," << j << ")";
            rep.first_failure = os.str();
        }
    };

    if (rep.exhaustive) {
        for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) check_pair(a, b);
    } else {
        std::uint64_t state = seed ^ 0x57a6ull;
        for (long long n = 0; n < max_pairs; ++n)
            check_pair(static_cast<int>(splitmix64(state) % nb),
                       static_cast<int>(splitmix64(state) % nb));
    }
    return rep;
}

StringyAssocReport verify_associativity(TwistData& t, long long max_triples,
                                        std::uint64_t seed) {
    auto basis = sector_irreducibles(t);
    const long long nb = static_cast<long long>(basis.size());

    StringyAssocReport rep;
    rep.triples_total = nb * nb * nb;
    rep.exhaustive = max_triples <= 0 || rep.triples_total <= max_triples;

    auto check_triple = [&](int a, int b, int c) {
        auto [g, i] = basis[a];
        auto [h, j] = basis[b];
        auto [l, k] = basis[c];
        OrbifoldKClass lhs = star(t, t.star_basis(g, i, h, j), basis_class(t, l, k));
        OrbifoldKClass rhs = star(t, basis_class(t, g, i), t.star_basis(h, j, l, k));
        ++rep.triples_checked;
        drop_zero_sectors(lhs);
        drop_zero_sectors(rhs);
        if (lhs.sectors == rhs.sectors) return;
        ++rep.failures;
        if (rep.first_failure.empty()) {
            std::ostringstream os;
            os << "sectors (" << g << "," << i << "), (" << h << "," << j << "), (" << l << ","
               << k << ")";
            rep.first_failure = os.str();
        }
    };

    if (rep.exhaustive) {
        for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b)
                for (int c = 0; c < nb; ++c) check_triple(a, b, c);
    } else {
        std::uint64_t state = seed ^ 0xa550cull;
        for (long long n = 0; n < max_triples; ++n)
            check_triple(static_cast<int>(splitmix64(state) % nb),
                         static_cast<int>(splitmix64(state) % nb),
                         static_cast<int>(splitmix64(state) % nb));
    }
    return rep;
}

}  // namespace orbitwist

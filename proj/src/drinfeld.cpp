#include "orbitwist/drinfeld.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitwist {

DoubleAlgebra::DoubleAlgebra(const FiniteGroup& g, Cochain3 omega)
    : group_(&g), family_(g, std::move(omega)) {}

std::optional<std::pair<DoubleBasis, int>> DoubleAlgebra::product(DoubleBasis a,
                                                                  DoubleBasis b) const {
    const FiniteGroup& g = *group_;
    if (a.g != g.conj(a.x, b.g)) return std::nullopt;
    return std::make_pair(DoubleBasis{a.g, g.mul(a.x, b.x)}, theta_exp(a.g, a.x, b.x));
}

std::vector<std::tuple<DoubleBasis, DoubleBasis, int>> DoubleAlgebra::coproduct(
    DoubleBasis a) const {
    const FiniteGroup& g = *group_;
    std::vector<std::tuple<DoubleBasis, DoubleBasis, int>> out;
    out.reserve(g.order);
    for (int h = 0; h < g.order; ++h) {
        int l = g.mul(g.inv(h), a.g);
        out.emplace_back(DoubleBasis{h, a.x}, DoubleBasis{l, a.x}, gamma_exp(a.x, h, l));
    }
    return out;
}

void PairSum::add(DoubleBasis a, DoubleBasis b, const CycInt& coeff) {
    auto key = std::make_pair(alg_->index(a), alg_->index(b));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void PairSum::add_root(DoubleBasis a, DoubleBasis b, int exponent) {
    add(a, b, CycInt::root_of_unity(alg_->modulus(), exponent));
}

bool PairSum::operator==(const PairSum& o) const { return terms_ == o.terms_; }

PairSum pair_product(const PairSum& p, const PairSum& q) {
    const DoubleAlgebra& alg = p.algebra();
    PairSum out(alg);
    for (const auto& [ka, ca] : p.terms())
        for (const auto& [kb, cb] : q.terms()) {
            auto left = alg.product(alg.basis(ka.first), alg.basis(kb.first));
            if (!left) continue;
            auto right = alg.product(alg.basis(ka.second), alg.basis(kb.second));
            if (!right) continue;
            CycInt coeff =
                ca * cb * CycInt::root_of_unity(alg.modulus(), left->second + right->second);
            out.add(left->first, right->first, coeff);
        }
    return out;
}

PairSum sigma_swap(const PairSum& p) {
    PairSum out(p.algebra());
    for (const auto& [k, c] : p.terms())
        out.add(p.algebra().basis(k.second), p.algebra().basis(k.first), c);
    return out;
}

PairSum unit_pair(const DoubleAlgebra& alg) {
    PairSum out(alg);
    const int e = alg.group().identity;
    for (int g = 0; g < alg.group().order; ++g)
        for (int h = 0; h < alg.group().order; ++h) out.add_root({g, e}, {h, e}, 0);
    return out;
}

PairSum coproduct_sum(const DoubleAlgebra& alg, DoubleBasis a, int extra_exponent) {
    PairSum out(alg);
    for (const auto& [u, v, e] : alg.coproduct(a)) out.add_root(u, v, e + extra_exponent);
    return out;
}

PairSum r_matrix(const DoubleAlgebra& alg) {
    PairSum out(alg);
    const int e = alg.group().identity;
    for (int g = 0; g < alg.group().order; ++g)
        for (int h = 0; h < alg.group().order; ++h) out.add_root({g, e}, {h, g}, 0);
    return out;
}

PairSum r_matrix_inverse(const DoubleAlgebra& alg) {
    PairSum out(alg);
    const FiniteGroup& gr = alg.group();
    const int e = gr.identity;
    for (int g = 0; g < gr.order; ++g) {
        int gi = gr.inv(g);
        for (int h = 0; h < gr.order; ++h) {
            int k = gr.conj(g, h);  // g h g^-1
            out.add_root({g, e}, {h, gi}, -alg.theta_exp(k, g, gi));
        }
    }
    return out;
}

std::vector<Complex> module_character(const DoubleModule& v) {
    std::vector<Complex> chi(v.algebra->basis_count());
    for (int i = 0; i < v.algebra->basis_count(); ++i) chi[i] = v.action[i].trace();
    return chi;
}

double module_axiom_defect(const DoubleModule& v, long long sample_pairs, std::uint64_t seed) {
    const DoubleAlgebra& alg = *v.algebra;
    const int nb = alg.basis_count();
    double worst = 0.0;
    auto check_pair = [&](int ia, int ib) {
        Matrix lhs = v.action[ia] * v.action[ib];
        auto prod = alg.product(alg.basis(ia), alg.basis(ib));
        Matrix rhs = Matrix::Zero(v.dim, v.dim);
        if (prod)
            rhs = CircleValue{prod->second, alg.modulus()}.to_complex() *
                  v.action[alg.index(prod->first)];
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    };
    if (sample_pairs <= 0) {
        for (int ia = 0; ia < nb; ++ia)
            for (int ib = 0; ib < nb; ++ib) check_pair(ia, ib);
    } else {
        std::uint64_t state = seed ^ 0xd1f7d1f7ull;
        auto next = [&state] {
            state += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        for (long long t = 0; t < sample_pairs; ++t)
            check_pair(static_cast<int>(next() % nb), static_cast<int>(next() % nb));
    }
    // grading: the idempotents delta_g sum to the identity
    Matrix grading = Matrix::Zero(v.dim, v.dim);
    const int e = alg.group().identity;
    for (int g = 0; g < alg.group().order; ++g) grading += v.action[alg.index({g, e})];
    worst = std::max(worst, (grading - Matrix::Identity(v.dim, v.dim)).cwiseAbs().maxCoeff());
    return worst;
}

DoubleModule trivial_module(const DoubleAlgebra& alg) {
    DoubleModule v;
    v.algebra = &alg;
    v.dim = 1;
    v.action.resize(alg.basis_count());
    for (int i = 0; i < alg.basis_count(); ++i) {
        DoubleBasis b = alg.basis(i);
        v.action[i] = Matrix::Constant(1, 1, b.g == alg.group().identity ? 1.0 : 0.0);
    }
    return v;
}

DoubleModule regular_module(const DoubleAlgebra& alg) {
    DoubleModule v;
    v.algebra = &alg;
    v.dim = alg.basis_count();
    v.action.resize(alg.basis_count());
    for (int i = 0; i < alg.basis_count(); ++i) {
        Matrix m = Matrix::Zero(v.dim, v.dim);
        for (int j = 0; j < alg.basis_count(); ++j) {
            auto prod = alg.product(alg.basis(i), alg.basis(j));
            if (prod)
                m(alg.index(prod->first), j) =
                    CircleValue{prod->second, alg.modulus()}.to_complex();
        }
        v.action[i] = std::move(m);
    }
    return v;
}

DoubleModule dpr_induce(const DoubleAlgebra& alg, int g, const ProjectiveRep& e) {
    const FiniteGroup& gr = alg.group();
    const SubgroupView& cent = alg.family().cent(g);
    if (!same_table(*e.group, cent.local))
        throw std::invalid_argument("dpr_induce: representation is not on C(g)");
    {
        // e must realize the transgressed cocycle at g
        const Cochain2& wg = alg.family().omega_g(g);
        int n = std::lcm(wg.modulus, e.alpha.modulus);
        if (lift_modulus(wg, n).exps != lift_modulus(e.alpha, n).exps)
            throw std::invalid_argument("dpr_induce: cocycle is not omega_g");
    }
    const int nt = static_cast<int>(cent.transversal.size());
    const int d = e.dim;

    std::vector<int> coset_of(gr.order, -1), rem_of(gr.order, -1);
    for (int s = 0; s < nt; ++s)
        for (int i = 0; i < cent.order(); ++i) {
            int y = gr.mul(cent.transversal[s], cent.to_parent(i));
            coset_of[y] = s;
            rem_of[y] = i;
        }
    std::vector<int> conj_of_slot(nt);
    for (int s = 0; s < nt; ++s) conj_of_slot[s] = gr.conj(cent.transversal[s], g);

    DoubleModule v;
    v.algebra = &alg;
    v.dim = nt * d;
    v.action.resize(alg.basis_count());
    const int n = alg.modulus();
    for (int k = 0; k < gr.order; ++k)
        for (int x = 0; x < gr.order; ++x) {
            Matrix m = Matrix::Zero(v.dim, v.dim);
            for (int j = 0; j < nt; ++j) {
                int y = gr.mul(x, cent.transversal[j]);
                int s = coset_of[y];
                if (conj_of_slot[s] != k) continue;
                int rloc = rem_of[y];
                int ex = alg.theta_exp(k, x, cent.transversal[j]) -
                         alg.theta_exp(k, cent.transversal[s], cent.to_parent(rloc));
                Complex f = CircleValue{((ex % n) + n) % n, n}.to_complex();
                m.block(s * d, j * d, d, d) = f * e.rho[rloc];
            }
            v.action[k * gr.order + x] = std::move(m);
        }
    return v;
}

DoubleSimples compute_simples(const DoubleAlgebra& alg, const ConjugacyData& cd,
                              RepCache& cache) {
    const FiniteGroup& gr = alg.group();
    DoubleSimples s;
    for (size_t c = 0; c < cd.classes.size(); ++c) {
        int g = cd.representative[c];
        const IrrBasis& basis = cache.get(alg.family().cent(g).local, alg.family().omega_g(g));
        for (size_t i = 0; i < basis.reps.size(); ++i) {
            DoubleModule v = dpr_induce(alg, g, basis.reps[i]);
            v.base_class = static_cast<int>(c);
            v.base_irr = static_cast<int>(i);
            s.chars.push_back(module_character(v));
            s.dims.push_back(v.dim);
            s.provenance.emplace_back(static_cast<int>(c), static_cast<int>(i));
            s.modules.push_back(std::move(v));
        }
    }
    long long dimsq = 0;
    for (int d : s.dims) dimsq += static_cast<long long>(d) * d;
    if (dimsq != static_cast<long long>(gr.order) * gr.order)
        throw std::logic_error("simples: sum of squared dimensions != |G|^2");

    for (int g = 0; g < gr.order; ++g)
        for (int x = 0; x < gr.order; ++x)
            if (gr.commutes(g, x)) s.commuting_pairs.push_back(g * gr.order + x);
    const int np = static_cast<int>(s.commuting_pairs.size());
    const int ns = static_cast<int>(s.modules.size());
    s.char_matrix = Matrix(np, ns);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < ns; ++j) s.char_matrix(i, j) = s.chars[j][s.commuting_pairs[i]];
    for (int a = 0; a < ns; ++a)
        for (int b = a + 1; b < ns; ++b) {
            double dev = 0;
            for (int i = 0; i < np; ++i)
                dev = std::max(dev, std::abs(s.char_matrix(i, a) - s.char_matrix(i, b)));
            if (dev < kCharacterTol) {
                std::ostringstream os;
                os << "simples: duplicate characters at " << a << " and " << b;
                throw std::logic_error(os.str());
            }
        }
    s.solver = Eigen::ColPivHouseholderQR<Matrix>(s.char_matrix);
    return s;
}

DoubleModule tensor_modules(const DoubleModule& u, const DoubleModule& v) {
    if (u.algebra != v.algebra) throw std::invalid_argument("tensor_modules: algebra mismatch");
    const DoubleAlgebra& alg = *u.algebra;
    DoubleModule t;
    t.algebra = &alg;
    t.dim = u.dim * v.dim;
    t.action.resize(alg.basis_count());
    for (int i = 0; i < alg.basis_count(); ++i) {
        Matrix m = Matrix::Zero(t.dim, t.dim);
        for (const auto& [a, b, e] : alg.coproduct(alg.basis(i))) {
            const Matrix& ma = u.action[alg.index(a)];
            const Matrix& mb = v.action[alg.index(b)];
            Complex f = CircleValue{e, alg.modulus()}.to_complex();
            for (int r = 0; r < u.dim; ++r)
                for (int c = 0; c < u.dim; ++c) {
                    if (ma(r, c) == Complex(0, 0)) continue;
                    m.block(r * v.dim, c * v.dim, v.dim, v.dim) += f * ma(r, c) * mb;
                }
        }
        t.action[i] = std::move(m);
    }
    return t;
}

std::vector<Complex> tensor_character(const DoubleAlgebra& alg,
                                      const std::vector<Complex>& chi_u,
                                      const std::vector<Complex>& chi_v) {
    const FiniteGroup& gr = alg.group();
    std::vector<Complex> chi(alg.basis_count(), Complex(0, 0));
    for (int g = 0; g < gr.order; ++g)
        for (int x = 0; x < gr.order; ++x) {
            Complex acc(0, 0);
            for (int h = 0; h < gr.order; ++h) {
                Complex cu = chi_u[h * gr.order + x];
                if (cu == Complex(0, 0)) continue;
                int l = gr.mul(gr.inv(h), g);
                Complex cv = chi_v[l * gr.order + x];
                if (cv == Complex(0, 0)) continue;
                acc += CircleValue{alg.gamma_exp(x, h, l), alg.modulus()}.to_complex() * cu * cv;
            }
            chi[g * gr.order + x] = acc;
        }
    return chi;
}

std::vector<long long> decompose_module(const DoubleSimples& s,
                                        const std::vector<Complex>& chi, int dim) {
    const int np = static_cast<int>(s.commuting_pairs.size());
    Eigen::VectorXcd b(np);
    for (int i = 0; i < np; ++i) b(i) = chi[s.commuting_pairs[i]];
    Eigen::VectorXcd x = s.solver.solve(b);
    double residual = (s.char_matrix * x - b).cwiseAbs().maxCoeff();
    if (residual > 1e-6)
        throw std::invalid_argument("decompose_module: character not in the simple span");
    std::vector<long long> out(x.size());
    long long total = 0;
    for (int i = 0; i < x.size(); ++i) {
        long long mi = std::llround(x(i).real());
        if (std::abs(x(i).real() - static_cast<double>(mi)) > 1e-6 ||
            std::abs(x(i).imag()) > 1e-6 || mi < 0)
            throw std::invalid_argument("decompose_module: non-integer multiplicity");
        out[i] = mi;
        total += mi * s.dims[i];
    }
    if (total != dim) throw std::invalid_argument("decompose_module: dimension mismatch");
    return out;
}

}  // namespace orbitwist

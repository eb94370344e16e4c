#include "orbitwist/projrep.hpp"

#include <algorithm>
#include <cmath>
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

// uniform in [-1, 1); platform-independent
double unit_double(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

Matrix random_hermitian(int d, std::uint64_t& state) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = Complex(unit_double(state), 0.0);
        for (int j = i + 1; j < d; ++j) {
            Complex v(unit_double(state), unit_double(state));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

std::vector<std::pair<long long, long long>> quantized(const std::vector<Complex>& chi) {
    std::vector<std::pair<long long, long long>> q(chi.size());
    for (size_t i = 0; i < chi.size(); ++i)
        q[i] = {std::llround(chi[i].real() * 1e6), std::llround(chi[i].imag() * 1e6)};
    return q;
}

}  // namespace

double projective_defect(const ProjectiveRep& e) {
    const FiniteGroup& g = *e.group;
    double worst = 0.0;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            Matrix lhs = e.rho[x] * e.rho[y];
            Matrix rhs = e.alpha.value(x, y).to_complex() * e.rho[g.mul(x, y)];
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    return worst;
}

bool is_projective(const ProjectiveRep& e, double tol) { return projective_defect(e) <= tol; }

std::vector<Complex> rep_character(const ProjectiveRep& e) {
    std::vector<Complex> chi(e.group->order);
    for (int x = 0; x < e.group->order; ++x) chi[x] = e.rho[x].trace();
    return chi;
}

Complex char_inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex acc(0, 0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    return acc / static_cast<double>(a.size());
}

ProjectiveRep twisted_regular_rep(const FiniteGroup& h, const Cochain2& alpha) {
    if (alpha.group != &h) throw std::invalid_argument("twisted_regular_rep: group mismatch");
    ProjectiveRep e;
    e.group = &h;
    e.alpha = alpha;
    e.dim = h.order;
    e.rho.resize(h.order, Matrix::Zero(h.order, h.order));
    for (int x = 0; x < h.order; ++x)
        for (int k = 0; k < h.order; ++k)
            e.rho[x](h.mul(x, k), k) = alpha.value(x, k).to_complex();
    return e;
}

std::vector<bool> alpha_regular_elements(const FiniteGroup& h, const Cochain2& alpha) {
    std::vector<bool> reg(h.order, true);
    for (int x = 0; x < h.order; ++x)
        for (int y = 0; y < h.order && reg[x]; ++y)
            if (h.commutes(x, y) && alpha.at(x, y) != alpha.at(y, x)) reg[x] = false;
    return reg;
}

std::vector<int> alpha_regular_classes(const FiniteGroup& h, const ConjugacyData& cd,
                                       const Cochain2& alpha) {
    std::vector<bool> reg = alpha_regular_elements(h, alpha);
    std::vector<int> out;
    for (size_t c = 0; c < cd.classes.size(); ++c) {
        bool r = reg[cd.representative[c]];
        // regularity is a class property; verify rather than assume
        for (int x : cd.classes[c])
            if (reg[x] != r)
                throw std::logic_error("alpha_regular_classes: class with mixed regularity");
        if (r) out.push_back(static_cast<int>(c));
    }
    return out;
}

namespace {

struct Splitter {
    const FiniteGroup& h;
    const ProjectiveRep& reg;
    std::uint64_t state;
    std::vector<ProjectiveRep> found;

    // q: orthonormal basis of an invariant subspace (columns)
    void split(const Matrix& q, int depth) {
        const int d = static_cast<int>(q.cols());
        if (depth > 64) throw std::logic_error("irreducibles: splitting recursion too deep");
        ProjectiveRep sub;
        sub.group = &h;
        sub.alpha = reg.alpha;
        sub.dim = d;
        sub.rho.reserve(h.order);
        for (int x = 0; x < h.order; ++x) sub.rho.push_back(q.adjoint() * reg.rho[x] * q);
        std::vector<Complex> chi = rep_character(sub);
        double norm = std::abs(char_inner(chi, chi));
        if (std::abs(norm - 1.0) < 1e-4) {
            found.push_back(std::move(sub));
            return;
        }
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 8)
                throw std::runtime_error("irreducibles: persistent splitting failure");
            Matrix m = random_hermitian(d, state);
            Matrix avg = Matrix::Zero(d, d);
            for (int x = 0; x < h.order; ++x)
                avg += sub.rho[x] * m * sub.rho[x].adjoint();
            avg /= static_cast<double>(h.order);
            avg = Complex(0.5, 0) * (avg + Matrix(avg.adjoint()));
            Eigen::SelfAdjointEigenSolver<Matrix> es(avg);
            const auto& ev = es.eigenvalues();
            double scale = std::max(1.0, std::abs(ev(d - 1) - ev(0)));
            std::vector<int> cut = {0};
            for (int i = 1; i < d; ++i)
                if (ev(i) - ev(i - 1) > 1e-7 * scale) cut.push_back(i);
            cut.push_back(d);
            if (cut.size() <= 2) continue;  // no spectral gap, draw a new sample
            for (size_t c = 0; c + 1 < cut.size(); ++c) {
                int lo = cut[c], hi = cut[c + 1];
                Matrix sel = es.eigenvectors().middleCols(lo, hi - lo);
                split(q * sel, depth + 1);
            }
            return;
        }
    }
};

}  // namespace

std::vector<ProjectiveRep> irreducibles(const FiniteGroup& h, const Cochain2& alpha,
                                        std::uint64_t seed) {
    if (alpha.group != &h) throw std::invalid_argument("irreducibles: group mismatch");
    if (cocycle2_failure(alpha))
        throw std::invalid_argument("irreducibles: alpha is not a 2-cocycle");
    Cochain2 a = normalize_cocycle(alpha);
    ProjectiveRep reg = twisted_regular_rep(h, a);
    std::uint64_t state = seed ^ (h.fingerprint() * 31 + a.fingerprint());
    Splitter sp{h, reg, state, {}};
    sp.split(Matrix::Identity(h.order, h.order), 0);

    // deduplicate by character (isomorphism test in the semisimple setting)
    std::vector<ProjectiveRep> irr;
    std::vector<std::vector<Complex>> chars;
    for (auto& e : sp.found) {
        std::vector<Complex> chi = rep_character(e);
        bool dup = false;
        for (const auto& c : chars) {
            double dev = 0;
            for (size_t i = 0; i < c.size(); ++i) dev = std::max(dev, std::abs(c[i] - chi[i]));
            if (dev < kCharacterTol) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            chars.push_back(std::move(chi));
            irr.push_back(std::move(e));
        }
    }
    long long dimsq = 0;
    for (const auto& e : irr) dimsq += static_cast<long long>(e.dim) * e.dim;
    if (dimsq != h.order)
        throw std::logic_error("irreducibles: sum of squared dimensions != |H|");
    ConjugacyData cd = conjugacy(h);
    if (irr.size() != alpha_regular_classes(h, cd, a).size())
        throw std::logic_error("irreducibles: count differs from alpha-regular class count");

    std::vector<int> order(irr.size());
    for (size_t i = 0; i < irr.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<std::vector<std::pair<long long, long long>>> keys(irr.size());
    for (size_t i = 0; i < irr.size(); ++i) keys[i] = quantized(rep_character(irr[i]));
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (irr[x].dim != irr[y].dim) return irr[x].dim < irr[y].dim;
        return keys[x] < keys[y];
    });
    std::vector<ProjectiveRep> out;
    out.reserve(irr.size());
    for (int i : order) out.push_back(std::move(irr[i]));
    return out;
}

ProjectiveRep restrict_rep(const ProjectiveRep& e, const SubgroupView& k) {
    if (e.group != k.parent) throw std::invalid_argument("restrict_rep: parent mismatch");
    ProjectiveRep r;
    r.group = &k.local;
    r.alpha = restrict_cochain(e.alpha, k);
    r.dim = e.dim;
    r.rho.reserve(k.order());
    for (int x = 0; x < k.order(); ++x) r.rho.push_back(e.rho[k.to_parent(x)]);
    return r;
}

ProjectiveRep restrict_rep_through(const ProjectiveRep& e, const SubgroupView& src,
                                   const SubgroupView& k) {
    if (!same_table(*e.group, src.local))
        throw std::invalid_argument("restrict_rep_through: rep not on src.local");
    if (src.parent != k.parent)
        throw std::invalid_argument("restrict_rep_through: views have different parents");
    ProjectiveRep r;
    r.group = &k.local;
    r.alpha = Cochain2::trivial(k.local, e.alpha.modulus);
    r.dim = e.dim;
    r.rho.reserve(k.order());
    for (int x = 0; x < k.order(); ++x) {
        int xs = src.to_local(k.to_parent(x));
        if (xs < 0) throw std::invalid_argument("restrict_rep_through: k not inside src");
        r.rho.push_back(e.rho[xs]);
        for (int y = 0; y < k.order(); ++y)
            r.alpha.at(x, y) = e.alpha.at(xs, src.to_local(k.to_parent(y)));
    }
    return r;
}

ProjectiveRep induce_rep(const ProjectiveRep& e, const SubgroupView& k,
                         const Cochain2& alpha_h) {
    const FiniteGroup& h = *k.parent;
    if (alpha_h.group != &h) throw std::invalid_argument("induce_rep: cocycle group mismatch");
    if (!same_table(*e.group, k.local))
        throw std::invalid_argument("induce_rep: rep not on k.local");
    const int nt = static_cast<int>(k.transversal.size());
    const int d = e.dim;

    // coset decomposition y = x_s r with r in K, precomputed per element
    std::vector<int> coset_of(h.order, -1), rem_of(h.order, -1);
    for (int s = 0; s < nt; ++s)
        for (int i = 0; i < k.order(); ++i) {
            int y = h.mul(k.transversal[s], k.to_parent(i));
            coset_of[y] = s;
            rem_of[y] = i;
        }

    ProjectiveRep r;
    r.group = &h;
    r.alpha = alpha_h;
    r.dim = nt * d;
    r.rho.resize(h.order);
    const int n = alpha_h.modulus;
    for (int x = 0; x < h.order; ++x) {
        Matrix m = Matrix::Zero(r.dim, r.dim);
        for (int j = 0; j < nt; ++j) {
            int y = h.mul(x, k.transversal[j]);
            int s = coset_of[y];
            int rloc = rem_of[y];
            int rpar = k.to_parent(rloc);
            int ex = alpha_h.at(x, k.transversal[j]) - alpha_h.at(k.transversal[s], rpar);
            Complex f = CircleValue{((ex % n) + n) % n, n}.to_complex();
            m.block(s * d, j * d, d, d) = f * e.rho[rloc];
        }
        r.rho[x] = std::move(m);
    }
    return r;
}

ProjectiveRep tensor_rep(const ProjectiveRep& a, const ProjectiveRep& b) {
    if (a.group != b.group) throw std::invalid_argument("tensor_rep: group mismatch");
    ProjectiveRep r;
    r.group = a.group;
    r.alpha = multiply(a.alpha, b.alpha);
    r.dim = a.dim * b.dim;
    r.rho.reserve(a.group->order);
    for (int x = 0; x < a.group->order; ++x) {
        Matrix m(r.dim, r.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                m.block(i * b.dim, j * b.dim, b.dim, b.dim) = a.rho[x](i, j) * b.rho[x];
        r.rho.push_back(std::move(m));
    }
    return r;
}

ProjectiveRep twist_rep(const ProjectiveRep& e, const Cochain1& lam) {
    if (e.group != lam.group) throw std::invalid_argument("twist_rep: group mismatch");
    ProjectiveRep r;
    r.group = e.group;
    r.alpha = multiply(e.alpha, coboundary(lam));
    r.dim = e.dim;
    r.rho.reserve(e.rho.size());
    for (int x = 0; x < e.group->order; ++x)
        r.rho.push_back(lam.value(x).to_complex() * e.rho[x]);
    return r;
}

long long RepRingElement::total_dim(const std::vector<int>& dims) const {
    long long t = 0;
    for (size_t i = 0; i < mult.size(); ++i) t += mult[i] * dims[i];
    return t;
}

RepRingElement decompose_rep(const std::vector<Complex>& chi_v, int dim_v,
                             const std::vector<std::vector<Complex>>& irr_chars,
                             const std::vector<int>& irr_dims) {
    RepRingElement out;
    out.mult.resize(irr_chars.size());
    long long total = 0;
    for (size_t i = 0; i < irr_chars.size(); ++i) {
        Complex m = char_inner(chi_v, irr_chars[i]);
        long long mi = std::llround(m.real());
        if (std::abs(m.real() - static_cast<double>(mi)) > kCharacterTol ||
            std::abs(m.imag()) > kCharacterTol || mi < 0) {
            std::ostringstream os;
            os << "decompose_rep: multiplicity " << m.real() << "+" << m.imag()
               << "i is not a nonnegative integer (cocycle mismatch?)";
            throw std::invalid_argument(os.str());
        }
        out.mult[i] = mi;
        total += mi * irr_dims[i];
    }
    if (total != dim_v)
        throw std::invalid_argument("decompose_rep: dimensions do not add up");
    return out;
}

RepRingElement decompose_rep(const ProjectiveRep& v, const std::vector<ProjectiveRep>& irr) {
    std::vector<std::vector<Complex>> chars;
    std::vector<int> dims;
    chars.reserve(irr.size());
    for (const auto& e : irr) {
        chars.push_back(rep_character(e));
        dims.push_back(e.dim);
    }
    return decompose_rep(rep_character(v), v.dim, chars, dims);
}

const IrrBasis& RepCache::get(const FiniteGroup& h, const Cochain2& alpha) {
    auto key = std::make_pair(h.fingerprint(), alpha.fingerprint());
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto basis = std::make_unique<IrrBasis>();
    basis->group = &h;
    basis->alpha = normalize_cocycle(alpha);
    basis->reps = irreducibles(h, alpha, seed_);
    for (const auto& e : basis->reps) {
        basis->chars.push_back(rep_character(e));
        basis->dims.push_back(e.dim);
    }
    return *cache_.emplace(key, std::move(basis)).first->second;
}

}  // namespace orbitwist

#include "orbitwist/cochain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "orbitwist/zmod.hpp"

namespace orbitwist {

namespace {

int modp(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

std::complex<double> CircleValue::to_complex() const {
    double ang = 2.0 * std::numbers::pi * exponent / modulus;
    return {std::cos(ang), std::sin(ang)};
}

Cochain1 Cochain1::trivial(const FiniteGroup& g, int n) {
    return {&g, n, std::vector<int>(g.order, 0)};
}
Cochain2 Cochain2::trivial(const FiniteGroup& g, int n) {
    return {&g, n, std::vector<int>(static_cast<size_t>(g.order) * g.order, 0)};
}
Cochain3 Cochain3::trivial(const FiniteGroup& g, int n) {
    return {&g, n,
            std::vector<int>(static_cast<size_t>(g.order) * g.order * g.order, 0)};
}

bool Cochain2::is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}
bool Cochain3::is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}
bool Cochain4::is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

std::uint64_t Cochain2::fingerprint() const {
    std::uint64_t h = 1099511628211ull ^ group->fingerprint();
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(modulus));
    for (int e : exps) mix(static_cast<std::uint64_t>(e) + 0x9e37ull);
    return h;
}

std::uint64_t Cochain3::fingerprint() const {
    std::uint64_t h = 14695981039346656037ull ^ group->fingerprint();
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(modulus));
    for (int e : exps) mix(static_cast<std::uint64_t>(e) + 0x9e37ull);
    return h;
}

Cochain2 coboundary(const Cochain1& c) {
    const FiniteGroup& g = *c.group;
    Cochain2 r = Cochain2::trivial(g, c.modulus);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            r.at(x, y) = modp(static_cast<long long>(c.at(x)) + c.at(y) - c.at(g.mul(x, y)),
                              c.modulus);
    return r;
}

Cochain3 coboundary(const Cochain2& c) {
    const FiniteGroup& g = *c.group;
    Cochain3 r = Cochain3::trivial(g, c.modulus);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int x = 0; x < g.order; ++x)
                r.at(a, b, x) =
                    modp(static_cast<long long>(c.at(b, x)) - c.at(g.mul(a, b), x) +
                             c.at(a, g.mul(b, x)) - c.at(a, b),
                         c.modulus);
    return r;
}

Cochain4 coboundary(const Cochain3& c) {
    const FiniteGroup& g = *c.group;
    const int m = g.order;
    Cochain4 r{&g, c.modulus,
               std::vector<int>(static_cast<size_t>(m) * m * m * m, 0)};
    size_t idx = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int x = 0; x < m; ++x)
                for (int d = 0; d < m; ++d)
                    r.exps[idx++] =
                        modp(static_cast<long long>(c.at(b, x, d)) - c.at(g.mul(a, b), x, d) +
                                 c.at(a, g.mul(b, x), d) - c.at(a, b, g.mul(x, d)) +
                                 c.at(a, b, x),
                             c.modulus);
    return r;
}

std::optional<std::array<int, 3>> cocycle2_failure(const Cochain2& c) {
    const FiniteGroup& g = *c.group;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int x = 0; x < g.order; ++x) {
                long long v = static_cast<long long>(c.at(b, x)) - c.at(g.mul(a, b), x) +
                              c.at(a, g.mul(b, x)) - c.at(a, b);
                if (modp(v, c.modulus) != 0) return std::array<int, 3>{a, b, x};
            }
    return std::nullopt;
}

std::optional<std::array<int, 4>> cocycle3_failure(const Cochain3& c) {
    const FiniteGroup& g = *c.group;
    const int m = g.order;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int ab = g.mul(a, b);
            for (int x = 0; x < m; ++x) {
                const int bx = g.mul(b, x);
                for (int d = 0; d < m; ++d) {
                    long long v = static_cast<long long>(c.at(a, b, x)) + c.at(a, bx, d) +
                                  c.at(b, x, d) - c.at(ab, x, d) - c.at(a, b, g.mul(x, d));
                    if (modp(v, c.modulus) != 0) return std::array<int, 4>{a, b, x, d};
                }
            }
        }
    return std::nullopt;
}

bool is_cocycle2(const Cochain2& c) { return !cocycle2_failure(c).has_value(); }
bool is_cocycle3(const Cochain3& c) { return !cocycle3_failure(c).has_value(); }

bool is_normalized(const Cochain3& c) {
    const FiniteGroup& g = *c.group;
    const int e = g.identity;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (c.at(e, a, b) != 0 || c.at(a, e, b) != 0 || c.at(a, b, e) != 0) return false;
    return true;
}

Cochain2 normalize_cocycle(const Cochain2& c) {
    if (auto bad = cocycle2_failure(c)) {
        std::ostringstream os;
        os << "normalize: not a 2-cocycle, fails at (" << (*bad)[0] << "," << (*bad)[1] << ","
           << (*bad)[2] << ")";
        throw std::invalid_argument(os.str());
    }
    const int t = c.at(c.group->identity, c.group->identity);
    Cochain2 r = c;
    for (int& e : r.exps) e = modp(e - t, c.modulus);
    return r;
}

Cochain3 normalize_cocycle(const Cochain3& c) {
    if (auto bad = cocycle3_failure(c)) {
        std::ostringstream os;
        os << "normalize: not a 3-cocycle, fails at (" << (*bad)[0] << "," << (*bad)[1] << ","
           << (*bad)[2] << "," << (*bad)[3] << ")";
        throw std::invalid_argument(os.str());
    }
    const FiniteGroup& g = *c.group;
    const int e = g.identity;
    // b(x,y) = -w(x,e,y) + 2 w(x,e,e) trivializes all identity slots.
    Cochain2 b = Cochain2::trivial(g, c.modulus);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            b.at(x, y) = modp(-static_cast<long long>(c.at(x, e, y)) + 2LL * c.at(x, e, e),
                              c.modulus);
    Cochain3 db = coboundary(b);
    Cochain3 r = c;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = modp(r.exps[i] + db.exps[i], c.modulus);
    if (!is_normalized(r)) throw std::logic_error("normalize_cocycle: canonical shift failed");
    return r;
}

Cochain1 lift_modulus(const Cochain1& c, int n) {
    if (n % c.modulus != 0) throw std::invalid_argument("lift_modulus: not a multiple");
    const int f = n / c.modulus;
    Cochain1 r{c.group, n, c.exps};
    for (int& e : r.exps) e = modp(static_cast<long long>(e) * f, n);
    return r;
}

Cochain2 lift_modulus(const Cochain2& c, int n) {
    if (n % c.modulus != 0) throw std::invalid_argument("lift_modulus: not a multiple");
    const int f = n / c.modulus;
    Cochain2 r{c.group, n, c.exps};
    for (int& e : r.exps) e = modp(static_cast<long long>(e) * f, n);
    return r;
}

Cochain3 lift_modulus(const Cochain3& c, int n) {
    if (n % c.modulus != 0) throw std::invalid_argument("lift_modulus: not a multiple");
    const int f = n / c.modulus;
    Cochain3 r{c.group, n, c.exps};
    for (int& e : r.exps) e = modp(static_cast<long long>(e) * f, n);
    return r;
}

Cochain2 multiply(const Cochain2& a, const Cochain2& b) {
    if (a.group != b.group) throw std::invalid_argument("multiply: different groups");
    const int n = std::lcm(a.modulus, b.modulus);
    Cochain2 la = lift_modulus(a, n), lb = lift_modulus(b, n);
    for (size_t i = 0; i < la.exps.size(); ++i) la.exps[i] = modp(la.exps[i] + lb.exps[i], n);
    return la;
}

Cochain2 inverse(const Cochain2& a) {
    Cochain2 r = a;
    for (int& e : r.exps) e = modp(-e, a.modulus);
    return r;
}

Cochain1 multiply(const Cochain1& a, const Cochain1& b) {
    if (a.group != b.group) throw std::invalid_argument("multiply: different groups");
    const int n = std::lcm(a.modulus, b.modulus);
    Cochain1 la = lift_modulus(a, n), lb = lift_modulus(b, n);
    for (size_t i = 0; i < la.exps.size(); ++i) la.exps[i] = modp(la.exps[i] + lb.exps[i], n);
    return la;
}

Cochain1 inverse(const Cochain1& a) {
    Cochain1 r = a;
    for (int& e : r.exps) e = modp(-e, a.modulus);
    return r;
}

Cochain2 restrict_cochain(const Cochain2& c, const SubgroupView& k) {
    if (c.group != k.parent) throw std::invalid_argument("restrict: view parent mismatch");
    Cochain2 r = Cochain2::trivial(k.local, c.modulus);
    for (int x = 0; x < k.order(); ++x)
        for (int y = 0; y < k.order(); ++y) r.at(x, y) = c.at(k.to_parent(x), k.to_parent(y));
    return r;
}

Cochain1 restrict_cochain(const Cochain1& c, const SubgroupView& k) {
    if (c.group != k.parent) throw std::invalid_argument("restrict: view parent mismatch");
    Cochain1 r = Cochain1::trivial(k.local, c.modulus);
    for (int x = 0; x < k.order(); ++x) r.exps[x] = c.at(k.to_parent(x));
    return r;
}

Cochain2 restrict_through(const Cochain2& c, const SubgroupView& src, const SubgroupView& k) {
    if (c.group != &src.local)
        throw std::invalid_argument("restrict_through: cochain not on src.local");
    if (src.parent != k.parent)
        throw std::invalid_argument("restrict_through: views have different parents");
    Cochain2 r = Cochain2::trivial(k.local, c.modulus);
    for (int x = 0; x < k.order(); ++x)
        for (int y = 0; y < k.order(); ++y) {
            int xs = src.to_local(k.to_parent(x));
            int ys = src.to_local(k.to_parent(y));
            if (xs < 0 || ys < 0)
                throw std::invalid_argument("restrict_through: k not contained in src");
            r.at(x, y) = c.at(xs, ys);
        }
    return r;
}

int dpr_theta_exp(const Cochain3& w, int g, int x, int y) {
    const FiniteGroup& gr = *w.group;
    const int xy = gr.mul(x, y);
    const int a = gr.mul(gr.inv(xy), gr.mul(g, xy));  // (xy)^-1 g (xy)
    const int b = gr.mul(gr.inv(x), gr.mul(g, x));    // x^-1 g x
    return modp(static_cast<long long>(w.at(g, x, y)) + w.at(x, y, a) - w.at(x, b, y),
                w.modulus);
}

int dpr_gamma_exp(const Cochain3& w, int x, int h, int l) {
    const FiniteGroup& gr = *w.group;
    const int a = gr.mul(gr.inv(x), gr.mul(h, x));
    const int b = gr.mul(gr.inv(x), gr.mul(l, x));
    return modp(static_cast<long long>(w.at(h, l, x)) + w.at(x, a, b) - w.at(h, x, b),
                w.modulus);
}

namespace {

Cochain2 transgress3to2_unchecked(const Cochain3& w, const SubgroupView& cent_g, int g) {
    Cochain2 r = Cochain2::trivial(cent_g.local, w.modulus);
    for (int x = 0; x < cent_g.order(); ++x)
        for (int y = 0; y < cent_g.order(); ++y)
            r.at(x, y) = dpr_theta_exp(w, g, cent_g.to_parent(x), cent_g.to_parent(y));
    return r;
}

}  // namespace

Cochain2 transgress3to2(const Cochain3& w, const SubgroupView& cent_g, int g) {
    if (w.group != cent_g.parent)
        throw std::invalid_argument("transgress3to2: view parent mismatch");
    if (!cent_g.contains(g)) throw std::invalid_argument("transgress3to2: g not central in view");
    if (auto bad = cocycle3_failure(w)) {
        std::ostringstream os;
        os << "transgress3to2: input is not a 3-cocycle (fails at " << (*bad)[0] << ","
           << (*bad)[1] << "," << (*bad)[2] << "," << (*bad)[3] << ")";
        throw std::invalid_argument(os.str());
    }
    Cochain2 r = transgress3to2_unchecked(w, cent_g, g);
    if (!is_cocycle2(r)) throw std::logic_error("transgress3to2: result not a 2-cocycle");
    return r;
}

Cochain1 transgress2to1(const Cochain2& b, const SubgroupView& cent_h, int h) {
    if (b.group != cent_h.parent)
        throw std::invalid_argument("transgress2to1: view parent mismatch");
    Cochain1 r = Cochain1::trivial(cent_h.local, b.modulus);
    for (int x = 0; x < cent_h.order(); ++x) {
        int xp = cent_h.to_parent(x);
        r.exps[x] = modp(static_cast<long long>(b.at(h, xp)) - b.at(xp, h), b.modulus);
    }
    // must be a character of the centralizer
    for (int x = 0; x < cent_h.order(); ++x)
        for (int y = 0; y < cent_h.order(); ++y) {
            int xy = cent_h.local.mul(x, y);
            if (modp(static_cast<long long>(r.exps[x]) + r.exps[y] - r.exps[xy], b.modulus) != 0)
                throw std::logic_error(
                    "transgress2to1: result is not multiplicative (non-cocycle input?)");
        }
    return r;
}

Cochain2 conjugate_cocycle(const Cochain2& b, const SubgroupView& src,
                           const SubgroupView& dst, int k) {
    if (b.group != &src.local) throw std::invalid_argument("conjugate_cocycle: group mismatch");
    if (src.parent != dst.parent)
        throw std::invalid_argument("conjugate_cocycle: parents differ");
    const FiniteGroup& g = *src.parent;
    const int ki = g.inv(k);
    Cochain2 r = Cochain2::trivial(dst.local, b.modulus);
    for (int x = 0; x < dst.order(); ++x)
        for (int y = 0; y < dst.order(); ++y) {
            int xs = src.to_local(g.conj(ki, dst.to_parent(x)));
            int ys = src.to_local(g.conj(ki, dst.to_parent(y)));
            if (xs < 0 || ys < 0)
                throw std::invalid_argument("conjugate_cocycle: conjugation leaves source");
            r.at(x, y) = b.at(xs, ys);
        }
    return r;
}

std::optional<Cochain1> solve_coboundary(const Cochain2& c) {
    const FiniteGroup& g = *c.group;
    const int m = g.order;
    // Values are allowed in mu_M for M = N * exp(G): a cocycle with values in
    // mu_N is a U(1)-coboundary iff it is a mu_M-coboundary (the N-th power of
    // any trivializing 1-cochain is a character, so its values are forced into
    // mu_M).
    const int mod_m = c.modulus * g.exponent();
    const int lift = mod_m / c.modulus;
    auto clift = [&](int x, int y) {
        return modp(static_cast<long long>(c.at(x, y)) * lift, mod_m);
    };
    if (m == 1) {
        Cochain1 lam{&g, mod_m, {clift(0, 0)}};
        return lam;
    }
    std::vector<int> gens = generating_set(g);
    const int k = static_cast<int>(gens.size());

    std::vector<long long> cons(m, 0);
    std::vector<std::vector<long long>> coef(m, std::vector<long long>(k, 0));
    std::vector<char> assigned(m, 0);
    std::vector<int> queue;
    cons[g.identity] = clift(g.identity, g.identity);
    assigned[g.identity] = 1;
    queue.push_back(g.identity);
    for (int i = 0; i < k; ++i) {
        coef[gens[i]][i] = 1;
        assigned[gens[i]] = 1;
        queue.push_back(gens[i]);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int i = 0; i < k; ++i) {
            int y = g.mul(x, gens[i]);
            if (assigned[y]) continue;
            assigned[y] = 1;
            cons[y] = mod_reduce(cons[x] + cons[gens[i]] - clift(x, gens[i]), mod_m);
            for (int j = 0; j < k; ++j) coef[y][j] = mod_reduce(coef[x][j] + coef[gens[i]][j], mod_m);
            queue.push_back(y);
        }
    }

    ZModSolver solver(k, mod_m);
    std::vector<long long> row(k);
    for (int x = 0; x < m && solver.consistent(); ++x)
        for (int y = 0; y < m; ++y) {
            int xy = g.mul(x, y);
            for (int j = 0; j < k; ++j) row[j] = coef[x][j] + coef[y][j] - coef[xy][j];
            long long rhs = clift(x, y) - cons[x] - cons[y] + cons[xy];
            if (!solver.add_equation(row, rhs)) break;
        }
    if (!solver.consistent()) return std::nullopt;
    auto u = solver.solve();
    if (!u) return std::nullopt;

    Cochain1 lam = Cochain1::trivial(g, mod_m);
    for (int x = 0; x < m; ++x) {
        long long v = cons[x];
        for (int j = 0; j < k; ++j) v += coef[x][j] * (*u)[j];
        lam.exps[x] = modp(v, mod_m);
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            long long v = static_cast<long long>(lam.at(x)) + lam.at(y) - lam.at(g.mul(x, y));
            if (modp(v, mod_m) != clift(x, y))
                throw std::logic_error("solve_coboundary: verification failed");
        }
    return lam;
}

std::optional<Cochain2> solve_coboundary3(const Cochain3& w) {
    const FiniteGroup& g = *w.group;
    const int m = g.order;
    // mu_{N |G|} suffices here: a U(1)-trivial 3-cocycle with mu_N values has
    // a trivializing 2-cochain with values in mu_{N |G|} (Schur-bound the
    // 2-cocycle part of any real trivialization).
    const long long mod_m = static_cast<long long>(w.modulus) * m;
    const long long lift = mod_m / w.modulus;
    auto wlift = [&](int a, int b, int c) {
        return mod_reduce(static_cast<long long>(w.at(a, b, c)) * lift, mod_m);
    };
    if (m == 1) {
        Cochain2 beta{&g, static_cast<int>(mod_m), {static_cast<int>(wlift(0, 0, 0))}};
        return beta;
    }
    std::vector<int> gens = generating_set(g);
    const int k = static_cast<int>(gens.size());
    const int nv = k * m;  // unknowns: beta(gen_i, c) for all i, c
    auto var = [m](int i, int c) { return i * m + c; };

    // affine form of each row beta(a, .) in the unknowns
    std::vector<std::vector<long long>> cons(m, std::vector<long long>(m, 0));
    std::vector<std::vector<std::vector<int>>> coef(
        m, std::vector<std::vector<int>>(m, std::vector<int>(nv, 0)));
    std::vector<char> assigned(m, 0);
    std::vector<int> queue;
    for (int i = 0; i < k; ++i) {
        if (assigned[gens[i]]) continue;
        assigned[gens[i]] = 1;
        for (int c = 0; c < m; ++c) coef[gens[i]][c][var(i, c)] = 1;
        queue.push_back(gens[i]);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        for (int i = 0; i < k; ++i) {
            int b = g.mul(gens[i], a);
            if (assigned[b]) continue;
            assigned[b] = 1;
            for (int c = 0; c < m; ++c) {
                cons[b][c] = mod_reduce(cons[a][c] - wlift(gens[i], a, c), mod_m);
                coef[b][c] = coef[a][c];
                int ac = g.mul(a, c);
                coef[b][c][var(i, ac)] =
                    static_cast<int>(mod_reduce(coef[b][c][var(i, ac)] + 1, mod_m));
                coef[b][c][var(i, a)] =
                    static_cast<int>(mod_reduce(coef[b][c][var(i, a)] - 1, mod_m));
            }
            queue.push_back(b);
        }
    }
    for (int a = 0; a < m; ++a)
        if (!assigned[a]) throw std::logic_error("solve_coboundary3: propagation incomplete");

    ZModSolver solver(nv, mod_m);
    std::vector<long long> row(nv);
    for (int a = 0; a < m && solver.consistent(); ++a)
        for (int b = 0; b < m && solver.consistent(); ++b) {
            const int ab = g.mul(a, b);
            for (int c = 0; c < m; ++c) {
                const int bc = g.mul(b, c);
                const auto& r1 = coef[b][c];
                const auto& r2 = coef[ab][c];
                const auto& r3 = coef[a][bc];
                const auto& r4 = coef[a][b];
                for (int j = 0; j < nv; ++j)
                    row[j] = static_cast<long long>(r1[j]) - r2[j] + r3[j] - r4[j];
                long long rhs =
                    wlift(a, b, c) - cons[b][c] + cons[ab][c] - cons[a][bc] + cons[a][b];
                if (!solver.add_equation(row, rhs)) break;
            }
        }
    if (!solver.consistent()) return std::nullopt;
    auto u = solver.solve();
    if (!u) return std::nullopt;

    Cochain2 beta = Cochain2::trivial(g, static_cast<int>(mod_m));
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c) {
            long long v = cons[a][c];
            for (int j = 0; j < nv; ++j)
                if (coef[a][c][j]) v += static_cast<long long>(coef[a][c][j]) * (*u)[j];
            beta.at(a, c) = static_cast<int>(mod_reduce(v, mod_m));
        }
    Cochain3 db = coboundary(beta);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (db.at(a, b, c) != wlift(a, b, c))
                    throw std::logic_error("solve_coboundary3: verification failed");
    return beta;
}

Cochain3 standard_cocycle(const FiniteGroup& g, int p, int n, CocycleType type,
                          std::vector<int> idx) {
    long long expect = 1;
    for (int i = 0; i < n; ++i) expect *= p;
    if (g.order != expect)
        throw std::invalid_argument("standard_cocycle: group order is not p^n");
    auto need = [&](size_t cnt) {
        if (idx.size() != cnt) throw std::invalid_argument("standard_cocycle: bad index count");
        for (int v : idx)
            if (v < 1 || v > n) throw std::invalid_argument("standard_cocycle: index out of range");
    };
    switch (type) {
        case CocycleType::I:
            need(1);
            break;
        case CocycleType::II:
            need(2);
            if (idx[0] == idx[1])
                throw std::invalid_argument("standard_cocycle: type II needs i != j");
            break;
        case CocycleType::III:
            need(3);
            if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
                throw std::invalid_argument("standard_cocycle: type III needs distinct indices");
            break;
    }
    auto digit = [p](int x, int pos) {  // pos is 1-based coordinate
        for (int i = 1; i < pos; ++i) x /= p;
        return x % p;
    };
    Cochain3 w = Cochain3::trivial(g, p);
    const int m = g.order;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                int e = 0;
                switch (type) {
                    case CocycleType::I: {
                        int carry = (digit(b, idx[0]) + digit(c, idx[0])) >= p ? 1 : 0;
                        e = digit(a, idx[0]) * carry;
                        break;
                    }
                    case CocycleType::II: {
                        int carry = (digit(b, idx[1]) + digit(c, idx[1])) >= p ? 1 : 0;
                        e = digit(a, idx[0]) * carry;
                        break;
                    }
                    case CocycleType::III:
                        e = digit(a, idx[0]) * digit(b, idx[1]) * digit(c, idx[2]);
                        break;
                }
                w.at(a, b, c) = modp(e, p);
            }
    if (auto bad = cocycle3_failure(w))
        throw std::logic_error("standard_cocycle: constructed cochain fails the pentagon");
    return w;
}

Cochain3 inflate(const Cochain3& w, const FiniteGroup& source, const std::vector<int>& phi) {
    const FiniteGroup& q = *w.group;
    if (static_cast<int>(phi.size()) != source.order)
        throw std::invalid_argument("inflate: map size mismatch");
    for (int a = 0; a < source.order; ++a)
        for (int b = 0; b < source.order; ++b)
            if (phi[source.mul(a, b)] != q.mul(phi[a], phi[b]))
                throw std::invalid_argument("inflate: map is not a homomorphism");
    Cochain3 r = Cochain3::trivial(source, w.modulus);
    for (int a = 0; a < source.order; ++a)
        for (int b = 0; b < source.order; ++b)
            for (int c = 0; c < source.order; ++c) r.at(a, b, c) = w.at(phi[a], phi[b], phi[c]);
    return r;
}

TransgressedFamily::TransgressedFamily(const FiniteGroup& g, Cochain3 omega)
    : group_(&g), omega_(std::move(omega)) {
    if (omega_.group != group_) throw std::invalid_argument("TransgressedFamily: group mismatch");
    if (auto bad = cocycle3_failure(omega_)) {
        std::ostringstream os;
        os << "TransgressedFamily: omega fails the pentagon at (" << (*bad)[0] << ","
           << (*bad)[1] << "," << (*bad)[2] << "," << (*bad)[3] << ")";
        throw std::invalid_argument(os.str());
    }
    if (!is_normalized(omega_)) omega_ = normalize_cocycle(omega_);
    cents_.reserve(g.order);
    omega_gs_.reserve(g.order);
    for (int x = 0; x < g.order; ++x) {
        cents_.push_back(centralizer(g, x));
        omega_gs_.push_back(transgress3to2_unchecked(omega_, cents_.back(), x));
        if (!is_cocycle2(omega_gs_.back()))
            throw std::logic_error("TransgressedFamily: transgression is not a 2-cocycle");
    }
}

const Cochain1& TransgressedFamily::double_transgress(int g, int h) const {
    if (!group_->commutes(g, h))
        throw std::invalid_argument("double_transgress: elements must commute");
    auto key = std::make_pair(g, h);
    auto it = double_cache_.find(key);
    if (it != double_cache_.end()) return it->second;
    const SubgroupView& cg = cents_[g];
    auto [cit, inserted] = pair_cents_.try_emplace(
        key, centralizer(cg.local, cg.to_local(h)));
    Cochain1 chi = transgress2to1(omega_gs_[g], cit->second, cg.to_local(h));
    return double_cache_.emplace(key, std::move(chi)).first->second;
}

}  // namespace orbitwist

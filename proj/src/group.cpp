#include "orbitwist/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbitwist {

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

int FiniteGroup::exponent() const {
    int e = 1;
    for (int a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
    return e;
}

std::uint64_t FiniteGroup::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(order));
    for (int v : table) mix(static_cast<std::uint64_t>(v) + 0x9e3779b9ull);
    return h;
}

std::optional<std::string> check_group_laws(const FiniteGroup& g) {
    const int n = g.order;
    if (n <= 0) return "order must be positive";
    if (static_cast<int>(g.table.size()) != n * n) return "table size mismatch";
    for (int v : g.table)
        if (v < 0 || v >= n) return "table entry out of range";
    for (int a = 0; a < n; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) {
            std::ostringstream os;
            os << "identity law fails at element " << a;
            return os.str();
        }
    }
    for (int a = 0; a < n; ++a) {
        if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity) {
            std::ostringstream os;
            os << "inverse law fails at element " << a;
            return os.str();
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    std::ostringstream os;
                    os << "associativity fails at (" << a << "," << b << "," << c << ")";
                    return os.str();
                }
    return std::nullopt;
}

namespace {

void finalize(FiniteGroup& g) {
    const int n = g.order;
    // locate identity if not set consistently
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) id = e;
    }
    if (id < 0) throw std::invalid_argument("table has no identity element");
    g.identity = id;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == id) g.inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[a] < 0) throw std::invalid_argument("element without inverse");
    if (g.labels.empty()) {
        g.labels.resize(n);
        for (int a = 0; a < n; ++a) g.labels[a] = "g" + std::to_string(a);
    }
}

}  // namespace

ConjugacyData conjugacy(const FiniteGroup& g) {
    const int n = g.order;
    ConjugacyData cd;
    cd.class_of.assign(n, -1);
    cd.conjugator.assign(n, -1);
    for (int rep = 0; rep < n; ++rep) {
        if (cd.class_of[rep] >= 0) continue;
        int ci = static_cast<int>(cd.classes.size());
        std::vector<int> cls;
        for (int k = 0; k < n; ++k) {
            int x = g.conj(k, rep);
            if (cd.class_of[x] < 0) {
                cd.class_of[x] = ci;
                cd.conjugator[x] = k;
                cls.push_back(x);
            }
        }
        std::sort(cls.begin(), cls.end());
        cd.classes.push_back(std::move(cls));
        cd.representative.push_back(rep);
    }
    return cd;
}

SubgroupView subgroup_view(const FiniteGroup& g, std::vector<int> elements,
                           const std::string& name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SubgroupView v;
    v.parent = &g;
    v.elements = std::move(elements);
    const int m = static_cast<int>(v.elements.size());
    v.parent_to_local.assign(g.order, -1);
    for (int i = 0; i < m; ++i) v.parent_to_local[v.elements[i]] = i;

    v.local.name = name.empty() ? g.name + "-sub" + std::to_string(m) : name;
    v.local.order = m;
    v.local.table.resize(static_cast<size_t>(m) * m);
    v.local.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        v.local.labels[i] = g.labels[v.elements[i]];
        for (int j = 0; j < m; ++j) {
            int prod = g.mul(v.elements[i], v.elements[j]);
            int loc = v.parent_to_local[prod];
            if (loc < 0) throw std::invalid_argument("subset not closed under product");
            v.local.table[static_cast<size_t>(i) * m + j] = loc;
        }
    }
    finalize(v.local);

    // left transversal: minimal representative per coset
    std::vector<char> seen(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        v.transversal.push_back(x);
        for (int k : v.elements) seen[g.mul(x, k)] = 1;
    }
    return v;
}

SubgroupView centralizer(const FiniteGroup& g, int elem) {
    std::vector<int> elems;
    for (int x = 0; x < g.order; ++x)
        if (g.mul(x, elem) == g.mul(elem, x)) elems.push_back(x);
    return subgroup_view(g, std::move(elems), "C(" + g.labels[elem] + ")");
}

SubgroupView center(const FiniteGroup& g) {
    std::vector<int> elems;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y) central = g.commutes(x, y);
        if (central) elems.push_back(x);
    }
    return subgroup_view(g, std::move(elems), "Z(" + g.name + ")");
}

SubgroupView intersect(const SubgroupView& a, const SubgroupView& b) {
    if (a.parent != b.parent) throw std::invalid_argument("intersect: different parents");
    std::vector<int> elems;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(elems));
    return subgroup_view(*a.parent, std::move(elems));
}

SubgroupView embed(const SubgroupView& k, const SubgroupView& h) {
    if (k.parent != h.parent) throw std::invalid_argument("embed: different parents");
    std::vector<int> elems;
    elems.reserve(k.elements.size());
    for (int e : k.elements) {
        int loc = h.parent_to_local[e];
        if (loc < 0) throw std::invalid_argument("embed: subgroup not contained");
        elems.push_back(loc);
    }
    return subgroup_view(h.local, std::move(elems));
}

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> frontier = {g.identity};
    in[g.identity] = 1;
    for (int x : gens)
        if (!in[x]) {
            in[x] = 1;
            frontier.push_back(x);
        }
    for (size_t i = 0; i < frontier.size(); ++i)
        for (int s : gens) {
            int y = g.mul(frontier[i], s);
            if (!in[y]) {
                in[y] = 1;
                frontier.push_back(y);
            }
        }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> span = closure(g, gens);
    while (static_cast<int>(span.size()) < g.order) {
        for (int x = 0; x < g.order; ++x) {
            if (!std::binary_search(span.begin(), span.end(), x)) {
                gens.push_back(x);
                break;
            }
        }
        span = closure(g, gens);
    }
    return gens;
}

QuotientData quotient(const FiniteGroup& g, const std::vector<int>& normal_elements) {
    std::vector<int> nset = normal_elements;
    std::sort(nset.begin(), nset.end());
    // normality check
    for (int k = 0; k < g.order; ++k)
        for (int x : nset)
            if (!std::binary_search(nset.begin(), nset.end(), g.conj(k, x)))
                throw std::invalid_argument("quotient: subgroup not normal");

    QuotientData q;
    q.projection.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (q.projection[x] >= 0) continue;
        int ci = static_cast<int>(q.coset_rep.size());
        q.coset_rep.push_back(x);
        for (int k : nset) q.projection[g.mul(x, k)] = ci;
    }
    const int m = static_cast<int>(q.coset_rep.size());
    q.group.name = g.name + "/N" + std::to_string(nset.size());
    q.group.order = m;
    q.group.table.resize(static_cast<size_t>(m) * m);
    q.group.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        q.group.labels[i] = g.labels[q.coset_rep[i]] + "N";
        for (int j = 0; j < m; ++j)
            q.group.table[static_cast<size_t>(i) * m + j] =
                q.projection[g.mul(q.coset_rep[i], q.coset_rep[j])];
    }
    finalize(q.group);
    return q;
}

DualGroup dual_group(const FiniteGroup& k) {
    if (!k.is_abelian()) throw std::invalid_argument("dual_group: group must be abelian");
    DualGroup d;
    d.modulus = k.exponent();
    const int m = k.order;
    const int n = d.modulus;
    if (m == 1) {
        d.group = trivial_group();
        d.group.name = k.name + "^";
        d.char_exponents = {{0}};
        return d;
    }
    std::vector<int> gens = generating_set(k);
    const int ng = static_cast<int>(gens.size());
    long long cand = 1;
    for (int i = 0; i < ng; ++i) cand *= n;

    // A character is a solution of chi(xy) = chi(x) + chi(y); propagate each
    // candidate assignment on the generators and keep the consistent ones.
    std::vector<std::vector<int>> chars;
    std::vector<int> u(ng);
    for (long long c = 0; c < cand; ++c) {
        long long t = c;
        for (int i = 0; i < ng; ++i) {
            u[i] = static_cast<int>(t % n);
            t /= n;
        }
        std::vector<int> chi(m, -1);
        chi[k.identity] = 0;
        std::vector<int> queue = {k.identity};
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int i = 0; i < ng; ++i) {
                int y = k.mul(queue[qi], gens[i]);
                if (chi[y] < 0) {
                    chi[y] = (chi[queue[qi]] + u[i]) % n;
                    queue.push_back(y);
                }
            }
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            for (int y = 0; y < m && ok; ++y)
                ok = (chi[x] + chi[y]) % n == chi[k.mul(x, y)];
        if (ok) chars.push_back(chi);
    }
    if (static_cast<int>(chars.size()) != m)
        throw std::logic_error("dual_group: character count mismatch");
    std::sort(chars.begin(), chars.end());

    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < m; ++i) rank[chars[i]] = i;
    d.group.name = k.name + "^";
    d.group.order = m;
    d.group.table.resize(static_cast<size_t>(m) * m);
    d.group.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        d.group.labels[i] = "chi" + std::to_string(i);
        for (int j = 0; j < m; ++j) {
            std::vector<int> prod(m);
            for (int x = 0; x < m; ++x) prod[x] = (chars[i][x] + chars[j][x]) % n;
            d.group.table[static_cast<size_t>(i) * m + j] = rank.at(prod);
        }
    }
    finalize(d.group);
    d.char_exponents = std::move(chars);
    return d;
}

FiniteGroup trivial_group() {
    FiniteGroup g;
    g.name = "1";
    g.order = 1;
    g.table = {0};
    g.labels = {"e"};
    finalize(g);
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    g.order = n;
    g.table.resize(static_cast<size_t>(n) * n);
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        g.labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    finalize(g);
    return g;
}

FiniteGroup elementary_abelian(int p, int n) {
    if (p < 2 || n < 0) throw std::invalid_argument("elementary: need p >= 2, n >= 0");
    int order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    FiniteGroup g;
    g.name = "(Z" + std::to_string(p) + ")^" + std::to_string(n);
    g.order = order;
    g.table.resize(static_cast<size_t>(order) * order);
    g.labels.resize(order);
    auto digits = [&](int x) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    };
    for (int a = 0; a < order; ++a) {
        auto da = digits(a);
        std::string lab = "(";
        for (int i = 0; i < n; ++i) lab += std::to_string(da[i]) + (i + 1 < n ? "," : "");
        g.labels[a] = lab + ")";
        for (int b = 0; b < order; ++b) {
            auto db = digits(b);
            int c = 0, mul = 1;
            for (int i = 0; i < n; ++i) {
                c += ((da[i] + db[i]) % p) * mul;
                mul *= p;
            }
            g.table[static_cast<size_t>(a) * order + b] = c;
        }
    }
    finalize(g);
    return g;
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
    const int order = 2 * n;
    // element i + n*j  <->  r^i s^j
    FiniteGroup g;
    g.name = "D" + std::to_string(n);
    g.order = order;
    g.table.resize(static_cast<size_t>(order) * order);
    g.labels.resize(order);
    auto idx = [n](int i, int j) { return i + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string lab = (i || j) ? "" : "e";
            if (i) lab += "r" + (i > 1 ? std::to_string(i) : "");
            if (j) lab += "s";
            g.labels[idx(i, j)] = lab;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (r^i s^j)(r^k s^l) = r^{i + (j ? -k : k)} s^{j+l}
                    int ii = ((i + (j ? n - k : k)) % n + n) % n;
                    int jj = (j + l) % 2;
                    g.table[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] = idx(ii, jj);
                }
        }
    finalize(g);
    return g;
}

FiniteGroup quaternion_group() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto pack = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
    auto sign_of = [](int x) { return (x & 1) ? -1 : 1; };
    auto axis_of = [](int x) { return x / 2; };
    // axis table for i,j,k products: axis 1,2,3; axis 0 = scalar
    auto mulq = [&](int a, int b) {
        int sa = sign_of(a), sb = sign_of(b);
        int aa = axis_of(a), ab = axis_of(b);
        int s = sa * sb, ax;
        if (aa == 0) {
            ax = ab;
        } else if (ab == 0) {
            ax = aa;
        } else if (aa == ab) {
            ax = 0;
            s = -s;
        } else {
            // i*j=k, j*k=i, k*i=j with cyclic sign
            int table[4][4] = {};
            table[1][2] = 3;
            table[2][3] = 1;
            table[3][1] = 2;
            if (table[aa][ab]) {
                ax = table[aa][ab];
            } else {
                ax = table[ab][aa];
                s = -s;
            }
        }
        return pack(s, ax);
    };
    FiniteGroup g;
    g.name = "Q8";
    g.order = 8;
    g.table.resize(64);
    g.labels.assign(names, names + 8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) g.table[static_cast<size_t>(a) * 8 + b] = mulq(a, b);
    finalize(g);
    return g;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric: supported range 1 <= n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // identity is the first permutation in lex order
    const int order = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < order; ++i) rank[perms[i]] = i;
    FiniteGroup g;
    g.name = "S" + std::to_string(n);
    g.order = order;
    g.table.resize(static_cast<size_t>(order) * order);
    g.labels.resize(order);
    auto cycle_label = [&](const std::vector<int>& q) {
        std::vector<char> seen(n, 0);
        std::string lab;
        for (int s = 0; s < n; ++s) {
            if (seen[s] || q[s] == s) continue;
            lab += "(";
            int x = s;
            while (!seen[x]) {
                seen[x] = 1;
                lab += std::to_string(x + 1);
                x = q[x];
            }
            lab += ")";
        }
        return lab.empty() ? std::string("e") : lab;
    };
    for (int a = 0; a < order; ++a) {
        g.labels[a] = cycle_label(perms[a]);
        for (int b = 0; b < order; ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];  // (a*b)(x) = a(b(x))
            g.table[static_cast<size_t>(a) * order + b] = rank[c];
        }
    }
    finalize(g);
    return g;
}

FiniteGroup extraspecial_p3(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("extraspecial: p must be an odd prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("extraspecial: p must be an odd prime");
    // Heisenberg group mod p: triples (a,b,c), (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
    const int order = p * p * p;
    FiniteGroup g;
    g.name = "ES(" + std::to_string(p) + ",3)";
    g.order = order;
    g.table.resize(static_cast<size_t>(order) * order);
    g.labels.resize(order);
    auto enc = [p](int a, int b, int c) { return a + p * (b + p * c); };
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                int x = enc(a, b, c);
                g.labels[x] = "[" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + "]";
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2) {
                            int y = enc(a2, b2, c2);
                            int z = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                            g.table[static_cast<size_t>(x) * order + y] = z;
                        }
            }
    finalize(g);
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    g.labels.resize(g.order);
    auto enc = [&](int x, int y) { return x * b.order + y; };
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y) {
            g.labels[enc(x, y)] = "(" + a.labels[x] + "," + b.labels[y] + ")";
            for (int u = 0; u < a.order; ++u)
                for (int v = 0; v < b.order; ++v)
                    g.table[static_cast<size_t>(enc(x, y)) * g.order + enc(u, v)] =
                        enc(a.mul(x, u), b.mul(y, v));
        }
    finalize(g);
    return g;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

FiniteGroup build_group(const std::string& descriptor) {
    std::string d = strip(descriptor);
    size_t lp = d.find('(');
    std::string head = lp == std::string::npos ? d : strip(d.substr(0, lp));
    std::string args_str;
    if (lp != std::string::npos) {
        size_t rp = d.rfind(')');
        if (rp == std::string::npos || rp < lp)
            throw std::invalid_argument("build_group: unbalanced parentheses in '" + d + "'");
        args_str = d.substr(lp + 1, rp - lp - 1);
    }
    auto args = split_args(args_str);
    auto num = [&](size_t i) { return std::stoi(strip(args.at(i))); };

    if (head == "trivial") return trivial_group();
    if (head == "cyclic") return cyclic_group(num(0));
    if (head == "elementary") return elementary_abelian(num(0), num(1));
    if (head == "dihedral") return dihedral_group(num(0));
    if (head == "quaternion" || head == "q8") return quaternion_group();
    if (head == "symmetric") return symmetric_group(num(0));
    if (head == "extraspecial") return extraspecial_p3(num(0));
    if (head == "product") {
        if (args.size() != 2) throw std::invalid_argument("product takes two descriptors");
        return direct_product(build_group(strip(args[0])), build_group(strip(args[1])));
    }
    throw std::invalid_argument("build_group: unknown descriptor '" + d + "'");
}

}  // namespace orbitwist

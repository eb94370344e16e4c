#include "orbitwist/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbitwist {

long long mod_reduce(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long mod_inverse(long long a, long long n) {
    long long x, y;
    long long g = ext_gcd(mod_reduce(a, n), n, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: not a unit");
    return mod_reduce(x, n);
}

namespace {

// Unit u (mod n) with u*v = gcd(v,n) (mod n), for 0 < v < n.
long long unit_scaling(long long v, long long n) {
    long long g = std::gcd(v, n);
    long long vp = v / g, np = n / g;
    long long u0 = mod_inverse(vp % np, np);
    for (long long k = 0;; ++k) {
        long long u = u0 + k * np;
        if (std::gcd(u % n, n) == 1) return mod_reduce(u, n);
    }
}

}  // namespace

ZModSolver::ZModSolver(int num_vars, long long modulus)
    : n_(num_vars), modulus_(modulus), pivot_of_col_(num_vars, -1) {
    if (modulus < 2) throw std::invalid_argument("ZModSolver: modulus must be >= 2");
}

bool ZModSolver::add_equation(const std::vector<long long>& coeffs, long long rhs) {
    if (static_cast<int>(coeffs.size()) != n_)
        throw std::invalid_argument("ZModSolver: coefficient size mismatch");
    Row r;
    r.a.resize(n_);
    for (int i = 0; i < n_; ++i) r.a[i] = mod_reduce(coeffs[i], modulus_);
    r.rhs = mod_reduce(rhs, modulus_);
    insert(std::move(r));
    return consistent_;
}

void ZModSolver::insert(Row first) {
    std::vector<Row> work;
    work.push_back(std::move(first));
    while (!work.empty()) {
        Row row = std::move(work.back());
        work.pop_back();
        int c = 0;
        while (c < n_) {
            long long v = row.a[c];
            if (v == 0) {
                ++c;
                continue;
            }
            int pi = pivot_of_col_[c];
            if (pi < 0) {
                long long u = unit_scaling(v, modulus_);
                for (int j = c; j < n_; ++j) row.a[j] = mod_reduce(row.a[j] * u, modulus_);
                row.rhs = mod_reduce(row.rhs * u, modulus_);
                long long g = row.a[c];  // = gcd(v, N), divides N
                pivot_of_col_[c] = static_cast<int>(rows_.size());
                pivot_cols_.insert(
                    std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), c), c);
                rows_.push_back(row);
                if (g != 1) {
                    Row ann;
                    ann.a.resize(n_);
                    long long s = modulus_ / g;
                    for (int j = c; j < n_; ++j)
                        ann.a[j] = mod_reduce(row.a[j] * s, modulus_);
                    ann.rhs = mod_reduce(row.rhs * s, modulus_);
                    work.push_back(std::move(ann));
                }
                c = n_;  // row consumed
                break;
            }
            long long d = rows_[pi].a[c];
            if (v % d == 0) {
                long long q = v / d;
                const Row& p = rows_[pi];
                for (int j = c; j < n_; ++j)
                    row.a[j] = mod_reduce(row.a[j] - q * p.a[j], modulus_);
                row.rhs = mod_reduce(row.rhs - q * p.rhs, modulus_);
                continue;  // entry at c is now zero
            }
            // Combine row and pivot to realize gcd(v, d) and swap it in.
            long long s, t;
            long long g = ext_gcd(v, d, s, t);
            Row np;
            np.a.resize(n_);
            const Row p = rows_[pi];  // copy: we overwrite rows_[pi]
            for (int j = c; j < n_; ++j)
                np.a[j] = mod_reduce(s * row.a[j] + t * p.a[j], modulus_);
            np.rhs = mod_reduce(s * row.rhs + t * p.rhs, modulus_);
            rows_[pi] = np;
            // old pivot and current row both reduce cleanly against the new pivot
            Row rem = p;
            long long qd = d / g;
            for (int j = c; j < n_; ++j)
                rem.a[j] = mod_reduce(rem.a[j] - qd * np.a[j], modulus_);
            rem.rhs = mod_reduce(rem.rhs - qd * np.rhs, modulus_);
            work.push_back(std::move(rem));
            if (g != 1) {
                Row ann;
                ann.a.resize(n_);
                long long sc = modulus_ / g;
                for (int j = c; j < n_; ++j) ann.a[j] = mod_reduce(np.a[j] * sc, modulus_);
                ann.rhs = mod_reduce(np.rhs * sc, modulus_);
                work.push_back(std::move(ann));
            }
            long long qv = v / g;
            for (int j = c; j < n_; ++j)
                row.a[j] = mod_reduce(row.a[j] - qv * np.a[j], modulus_);
            row.rhs = mod_reduce(row.rhs - qv * np.rhs, modulus_);
            // entry at c is zero now; continue with same c (will skip)
        }
        if (c >= n_ && !row.a.empty()) {
            bool zero = true;
            for (long long x : row.a) zero = zero && x == 0;
            if (zero && row.rhs != 0) consistent_ = false;
        }
    }
}

std::optional<std::vector<long long>> ZModSolver::solve() const {
    if (!consistent_) return std::nullopt;
    std::vector<long long> x(n_, 0);
    for (auto it = pivot_cols_.rbegin(); it != pivot_cols_.rend(); ++it) {
        int c = *it;
        const Row& r = rows_[pivot_of_col_[c]];
        long long acc = r.rhs;
        for (int j = c + 1; j < n_; ++j)
            if (r.a[j]) acc = mod_reduce(acc - r.a[j] * x[j], modulus_);
        long long g = r.a[c];
        if (acc % g != 0)
            throw std::logic_error("ZModSolver: back-substitution divisibility failure");
        x[c] = acc / g;
    }
    for (const Row& r : rows_) {
        long long acc = 0;
        for (int j = 0; j < n_; ++j)
            if (r.a[j]) acc = mod_reduce(acc + r.a[j] * x[j], modulus_);
        if (acc != r.rhs) throw std::logic_error("ZModSolver: solution verification failed");
    }
    return x;
}

}  // namespace orbitwist

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace orbitwist {

long long mod_reduce(long long v, long long n);
long long mod_inverse(long long a, long long n);  // requires gcd(a,n)=1
/// Extended gcd: returns g >= 0 with a*x + b*y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y);

/// Incremental solver for linear systems A x = b over Z/N (N arbitrary).
///
/// Rows are reduced into a Howell-style echelon form: every pivot value
/// divides N, and whenever a pivot d > 1 is created the annihilator multiple
/// (N/d) * row is fed back in, so the stored rows are closed under Z/N
/// scaling. That closure is what makes the inconsistency test and the
/// free-variables-to-zero back-substitution exact for composite N.
class ZModSolver {
public:
    ZModSolver(int num_vars, long long modulus);

    /// Add the equation sum coeffs[i]*x_i = rhs. Returns false when the
    /// system has become inconsistent.
    bool add_equation(const std::vector<long long>& coeffs, long long rhs);

    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(pivot_cols_.size()); }

    /// A particular solution with free variables set to zero, or nullopt if
    /// the system is inconsistent. Throws on internal failure (the returned
    /// vector is always re-verified against every stored row).
    std::optional<std::vector<long long>> solve() const;

    long long modulus() const { return modulus_; }

private:
    struct Row {
        std::vector<long long> a;
        long long rhs = 0;
    };
    void insert(Row row);

    int n_;
    long long modulus_;
    bool consistent_ = true;
    std::vector<int> pivot_of_col_;  // column -> index into rows_, or -1
    std::vector<int> pivot_cols_;    // sorted list of pivot columns
    std::vector<Row> rows_;
};

}  // namespace orbitwist

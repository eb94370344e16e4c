#pragma once

#include <optional>
#include <string>
#include <vector>

namespace orbitwist {

/// A finite group given by its complete multiplication table.
///
/// Elements are the indices 0..order-1; `table[a*order+b]` is the index of
/// a*b. All structure (inverses, classes, centralizers) is derived from the
/// table by exhaustion, which keeps every check exact for the orders we care
/// about (<= 64).
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> table;   // row-major order x order
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int k, int a) const { return mul(mul(k, a), inv(k)); }  // k a k^-1
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;
    int element_order(int a) const;
    int exponent() const;

    /// Canonical content fingerprint (table + order), used for cache keys.
    std::uint64_t fingerprint() const;
};

/// Conjugacy classes with explicit conjugation witnesses.
struct ConjugacyData {
    std::vector<std::vector<int>> classes;  // each sorted, classes sorted by min element
    std::vector<int> class_of;              // element -> class index
    std::vector<int> representative;        // class -> min element
    std::vector<int> conjugator;            // element g -> minimal k with k rep k^-1 = g
};

/// A subgroup materialized as its own FiniteGroup, together with the index
/// translation to the parent and a left transversal.
///
/// Local elements are numbered in increasing parent-index order, so two
/// views of the same subset (possibly through different parents realizing
/// the same ambient elements) have identical local tables.
struct SubgroupView {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;        // sorted parent indices
    FiniteGroup local;                // the subgroup as a standalone group
    std::vector<int> parent_to_local; // parent index -> local index or -1
    std::vector<int> transversal;     // parent indices, minimal rep per left coset

    int order() const { return local.order; }
    int to_local(int parent_idx) const { return parent_to_local[parent_idx]; }
    int to_parent(int local_idx) const { return elements[local_idx]; }
    bool contains(int parent_idx) const { return parent_to_local[parent_idx] >= 0; }
};

std::optional<std::string> check_group_laws(const FiniteGroup& g);
ConjugacyData conjugacy(const FiniteGroup& g);

/// Same underlying table (element-for-element); cached data built on one can
/// be used on the other.
inline bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
    return &a == &b || (a.order == b.order && a.table == b.table);
}

SubgroupView subgroup_view(const FiniteGroup& g, std::vector<int> elements,
                           const std::string& name = "");
SubgroupView centralizer(const FiniteGroup& g, int elem);
SubgroupView center(const FiniteGroup& g);
SubgroupView intersect(const SubgroupView& a, const SubgroupView& b);
/// Re-express `k` (a subgroup of h.parent contained in h) as a subgroup of
/// h.local. Element order is preserved, so reps carry over index-for-index.
SubgroupView embed(const SubgroupView& k, const SubgroupView& h);

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens);
/// Small deterministic generating set (greedy by element index).
std::vector<int> generating_set(const FiniteGroup& g);

/// Quotient G/N by a normal subgroup, cosets labeled by their minimal
/// element. Returns the quotient group and the projection map.
struct QuotientData {
    FiniteGroup group;
    std::vector<int> projection;      // parent element -> coset index
    std::vector<int> coset_rep;       // coset index -> minimal parent element
};
QuotientData quotient(const FiniteGroup& g, const std::vector<int>& normal_elements);

/// Character group of a finite abelian group. Characters take values in the
/// N-th roots of unity for N = exponent(K) and are stored as exponent
/// vectors: chi_i(g) = zeta_N^{char_exponents[i][g]}.
struct DualGroup {
    FiniteGroup group;            // the dual, with pointwise product
    int modulus = 1;              // N = exponent of K
    std::vector<std::vector<int>> char_exponents;
};
DualGroup dual_group(const FiniteGroup& k);

// Builders. Identity is always index 0.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup elementary_abelian(int p, int n);
FiniteGroup dihedral_group(int n);       // order 2n
FiniteGroup quaternion_group();          // Q8
FiniteGroup symmetric_group(int n);      // n <= 4
FiniteGroup extraspecial_p3(int p);      // exponent-p group of order p^3, p odd
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parse descriptors like "cyclic(6)", "elementary(3,2)", "symmetric(3)",
/// "dihedral(4)", "quaternion", "extraspecial(3)", "product(a,b)".
FiniteGroup build_group(const std::string& descriptor);

}  // namespace orbitwist

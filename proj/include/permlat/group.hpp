#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "permlat/ring.hpp"

namespace permlat {

/// Permutation on {0, .., n-1}, stored as the image vector.
using Perm = std::vector<int>;

struct Subgroup {
    std::vector<int> elems;  // sorted element indices, always containing 0
    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int g) const;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite p-group given by its full multiplication table, with the subgroup
/// lattice, conjugacy classes of subgroups and normalizers computed at
/// construction. Immutable afterwards.
class Group {
public:
    static GroupPtr from_generators(long p, const std::vector<Perm>& gens,
                                    std::vector<std::string> names = {},
                                    int order_cap = 256);
    static GroupPtr from_table(long p, std::vector<std::vector<int>> table,
                               std::vector<std::string> names = {});

    long p() const { return p_; }
    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int by) const { return mul(mul(inv(by), g), by); }
    int pow(int g, int k) const;

    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<int>& generators() const { return generators_; }

    // --- subgroup lattice -------------------------------------------------
    int subgroup_count() const { return static_cast<int>(subgroups_.size()); }
    const Subgroup& subgroup(int idx) const { return subgroups_[idx]; }
    int subgroup_index(const std::vector<int>& sorted_elems) const;
    int trivial_subgroup() const { return 0; }
    int whole_subgroup() const { return subgroup_count() - 1; }

    const std::vector<std::vector<int>>& subgroup_classes() const { return classes_; }
    const std::vector<int>& class_reps() const { return class_reps_; }
    int class_rep_of(int sub) const { return class_rep_of_[sub]; }
    int normalizer_of(int sub) const { return normalizer_[sub]; }
    bool is_normal(int sub) const { return normalizer_[sub] == whole_subgroup(); }
    bool subgroup_leq(int small, int big) const;
    int conjugate_subgroup(int sub, int by) const;

    std::string subgroup_label(int sub) const;  // "<a,b^2>", deterministic

    std::vector<int> minimal_generators(int sub) const;
    std::vector<int> closure(std::vector<int> elems) const;

    /// Canonical representatives of the right cosets (sub)g, least first.
    std::vector<int> right_transversal(int sub) const;
    /// Right transversal of `small` inside `big` (small <= big required).
    std::vector<int> right_transversal_in(int small, int big) const;
    /// One representative per double coset (l)g(h), canonically least.
    std::vector<int> double_coset_reps(int l, int h) const;

    std::vector<int> center_elements() const { return center_; }
    std::vector<int> central_order_p_subgroups() const;

    /// Index-p subgroups of `sub` (the maximal proper ones).
    std::vector<int> maximal_subgroups_of(int sub) const;
    /// Overgroups of `sub` of index p (the minimal strict ones).
    std::vector<int> minimal_overgroups_of(int sub) const;

    struct QuotientResult {
        GroupPtr quotient;
        std::vector<int> projection;  // element of this -> element of quotient
        std::vector<int> section;     // quotient element -> canonical rep here
    };
    QuotientResult quotient_by(int normal_sub) const;

    struct SubgroupGroupResult {
        GroupPtr group;
        std::vector<int> embed;        // new element index -> element here
        std::vector<int> into_sub;     // element here -> new index (-1 outside)
    };
    SubgroupGroupResult subgroup_as_group(int sub) const;

private:
    Group() = default;
    void finalize();  // inverses, labels sanity, subgroup lattice, classes

    long p_ = 2;
    int order_ = 1;
    std::vector<int> table_;  // row-major order_ x order_
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<int> generators_;
    std::vector<int> center_;

    std::vector<Subgroup> subgroups_;
    std::map<std::vector<int>, int> subgroup_lookup_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_reps_;
    std::vector<int> class_rep_of_;
    std::vector<int> normalizer_;
};

/// Composition a then b, as permutations of {0..n-1}.
Perm perm_compose(const Perm& a, const Perm& b);

}  // namespace permlat

#pragma once

#include "partcomb/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace partcomb {

// Integer partition: a non-increasing sequence of positive parts. Values are
// immutable after construction; trailing zeros are never stored, so equality
// and hashing are canonical. The default-constructed value is the empty
// partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates shape

    // Caller guarantees the sequence is already a valid partition.
    static Partition from_unchecked(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return weight_; }
    int part(int i) const { return parts_[size_t(i)]; }  // 0-based

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string str() const;  // "5,5,2,2"; empty string for the empty partition
    static Partition parse(const std::string& s);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition conjugate(const Partition& p);

// Size of the largest d x d square of boxes in the diagram.
int durfee(const Partition& p);

// Durfee size after removing the first c parts.
int shifted_durfee(const Partition& p, int c);

// Frobenius coordinates: arm/leg counts read along the main diagonal,
// both strictly decreasing; d = 0 encodes the empty partition.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;
    int size() const { return int(arms.size()); }
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& f);  // validates the rows

// Multiset of hook lengths, stored as value -> multiplicity.
class HookMultiset {
public:
    void add(int value, long long mult = 1);
    long long count(int value) const;
    long long total() const;
    bool empty() const { return counts_.empty(); }
    const std::map<int, long long>& counts() const { return counts_; }
    std::vector<int> sorted_values() const;  // ascending, with multiplicity
    bool operator==(const HookMultiset&) const = default;

private:
    std::map<int, long long> counts_;
};

// Hook lengths of p divisible by t (t = 1 gives the full multiset).
HookMultiset hooks(const Partition& p, int t = 1);

// Multiplicity of the exact value t in the full hook multiset.
long long count_hooks_equal(const Partition& p, int t);

// (h_{(1,1)}, ..., h_{(d,d)}); the entries sum to the weight.
std::vector<int> diagonal_hooks(const Partition& p);

// Part-by-part sum, the shorter operand padded with zeros.
Partition componentwise_add(const Partition& p, const Partition& q);

// p + (1^m): add one box to each of the first m rows.
Partition add_unit_column(const Partition& p, int m);

// Column lengths of the diagram described by `parts` written into `out`.
void conjugate_into(const std::vector<int>& parts, std::vector<int>& out);

// Calls fn(h) for the hook length of every box; `conj` must be the conjugate
// of `parts` (use conjugate_into). Kept separate so bulk scans can reuse
// buffers.
template <class F>
void visit_hooks(const std::vector<int>& parts, const std::vector<int>& conj, F&& fn) {
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) fn(parts[i] - j + conj[size_t(j)] - int(i) - 1);
}

namespace detail {
template <class F>
void partitions_rec(int remaining, int max_part, std::vector<int>& buf, F& fn) {
    if (remaining == 0) {
        fn(static_cast<const std::vector<int>&>(buf));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        buf.push_back(k);
        partitions_rec(remaining - k, k, buf, fn);
        buf.pop_back();
    }
}
}  // namespace detail

// Every partition of n exactly once, in reverse-lexicographic order
// ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]). The buffer passed to fn is reused.
template <class F>
void for_each_partition(int n, F&& fn) {
    if (n < 0) throw std::invalid_argument("negative weight");
    std::vector<int> buf;
    detail::partitions_rec(n, n == 0 ? 1 : n, buf, fn);
}

// Same order, materialized. The returned reference stays valid (table rows
// are cached once per weight).
const std::vector<Partition>& partitions_of(int n);

// |P(n)| via Euler's pentagonal recurrence; memoized and cross-checkable
// against enumeration. Arbitrary-size result.
Int partition_count(int n);

}  // namespace partcomb

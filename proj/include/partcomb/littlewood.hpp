#pragma once

#include "partcomb/boundary_word.hpp"

#include <vector>

namespace partcomb {

// A t-core together with the ordered t-quotient. Weight law:
// |lambda| = |core| + t * sum |quotient[k]|.
struct Decomposition {
    Partition core;
    std::vector<Partition> quotient;
    int modulus = 1;
    bool operator==(const Decomposition&) const = default;
};

// Zero-sum integer vector indexing a t-core: entry k is the index of the
// first 1 in the k-th subword of the core's boundary word.
struct CoreVector {
    std::vector<long long> entries;
    int modulus() const { return int(entries.size()); }
    bool operator==(const CoreVector&) const = default;
};

bool is_t_core(const Partition& p, int t);

// lambda -> (core, quotient): the k-th quotient component is decoded from the
// subword of letters at positions congruent to k mod t, re-centred at its own
// balance point; the core is decoded from the sorted subwords.
Decomposition decompose(const Partition& p, int t);

// Inverse of decompose; rejects a core that has a hook divisible by t.
Partition recompose(const Decomposition& d);

// Bijection between t-cores and zero-sum integer vectors.
CoreVector kappa(const Partition& core, int t);
Partition kappa_inverse(const CoreVector& v);

// Weight of the t-core indexed by v: (t * sum n_k^2 + 2 * sum k n_k) / 2.
long long core_weight(const CoreVector& v);

// Independent diagram-level route to the t-core: repeatedly remove the
// length-t rim hook whose hand sits in the earliest row.
Partition strip_rim_hooks(const Partition& p, int t);

// All t-cores of weight <= n_max, ordered by weight then descending lex.
std::vector<Partition> t_cores_up_to(int t, int n_max);

}  // namespace partcomb

#pragma once

#include "partcomb/littlewood.hpp"

#include <string>
#include <vector>

namespace partcomb {

// A restriction on the set of partitions, parseable from CLI strings:
// "all", "sc", "pz:1", "bgt:5", "bgzt:1,5".
struct ClassSpec {
    enum class Kind { All, SelfConjugate, ZAsymmetric, BGt, BGzt };
    Kind kind = Kind::All;
    int z = 0;
    int t = 0;

    static ClassSpec all();
    static ClassSpec sc();
    static ClassSpec pz(int z);
    static ClassSpec bgt(int t);        // t >= 2
    static ClassSpec bgzt(int z, int t);  // t >= 2, 0 <= z <= t-1
    static ClassSpec parse(const std::string& s);
    std::string str() const;
    bool operator==(const ClassSpec&) const = default;
};

bool is_self_conjugate(const Partition& p);

// Frobenius rows differ by z throughout: arms[k] == legs[k] + z.
bool is_z_asymmetric(const Partition& p, int z);

// Self-conjugate with no diagonal hook divisible by t.
bool in_bg_t(const Partition& p, int t);

// z-asymmetric partitions whose legs a_j avoid a_j + k ≡ 0 (mod t) for
// 1 <= k <= z and whose diagonal hooks are not odd multiples of t.
bool in_bg_zt(const Partition& p, int z, int t);

// Same membership decided on the other side of the Littlewood decomposition:
// core vector in C_{z;t}, first z quotient components empty, and the middle
// component empty when t+z-1 is even. Requires p z-asymmetric.
bool in_bg_zt_via_quotient(const Partition& p, int z, int t);

// Zero-sum vector symmetry: n_r + n_{z-r-1} = 0 for 0 <= r <= z-1 and
// n_r + n_{t+z-r-1} = 0 for z <= r <= t-1.
bool in_C_zt(const CoreVector& v, int z);

// Structure of the t-quotient of a z-asymmetric partition: core vector in
// C_{z;t}; conjugate pairing nu^{(r)} = (nu^{(t+z-r-1)})' for r >= z; and for
// r < z with n_r >= 0, a witness mu with
//   nu^{(r)} = mu + (1^{n_r + d_{n_r}(mu)}),  nu^{(z-r-1)} = mu' + (1^{d_{n_r}(mu)}).
// Branches with n_r < 0 are not covered by the statement and are skipped;
// skipped_branches (if given) receives their count. Requires p z-asymmetric.
bool pz_quotient_structure_check(const Partition& p, int z, int t,
                                 int* skipped_branches = nullptr);

bool in_class(const Partition& p, const ClassSpec& spec);

// All weight-n members, each once, in descending lexicographic order (the
// order of for_each_partition).
std::vector<Partition> enumerate_class(const ClassSpec& spec, int n);

// Direct Frobenius-side enumeration of the z-asymmetric partitions of n.
std::vector<Partition> pz_partitions(int z, int n);

// Direct generation of the bgzt class of weight n: a z-asymmetric t-core plus
// floor((t-z)/2) free quotient components, mirrored by conjugation.
std::vector<Partition> bgzt_partitions(int z, int t, int n);

// z-asymmetric t-cores of weight <= n_max.
std::vector<Partition> pz_t_cores_up_to(int z, int t, int n_max);

}  // namespace partcomb

#include "partcomb/classes.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace partcomb {

ClassSpec ClassSpec::all() { return {Kind::All, 0, 0}; }
ClassSpec ClassSpec::sc() { return {Kind::SelfConjugate, 0, 0}; }
ClassSpec ClassSpec::pz(int z) { return {Kind::ZAsymmetric, z, 0}; }

ClassSpec ClassSpec::bgt(int t) {
    if (t < 2) throw std::invalid_argument("bgt requires t >= 2");
    return {Kind::BGt, 0, t};
}

ClassSpec ClassSpec::bgzt(int z, int t) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("bgzt requires t >= 2 and 0 <= z <= t-1");
    return {Kind::BGzt, z, t};
}

ClassSpec ClassSpec::parse(const std::string& s) {
    auto colon = s.find(':');
    const std::string head = s.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto parse_int = [](const std::string& x) {
        size_t pos = 0;
        int v = std::stoi(x, &pos);
        if (pos != x.size()) throw std::invalid_argument("bad integer in class spec: " + x);
        return v;
    };
    if (head == "all" && tail.empty()) return all();
    if (head == "sc" && tail.empty()) return sc();
    if (head == "pz" && !tail.empty()) return pz(parse_int(tail));
    if (head == "bgt" && !tail.empty()) return bgt(parse_int(tail));
    if (head == "bgzt") {
        auto comma = tail.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bgzt spec needs \"bgzt:z,t\"");
        return bgzt(parse_int(tail.substr(0, comma)), parse_int(tail.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown class spec: " + s +
                                " (expected all, sc, pz:z, bgt:t, bgzt:z,t)");
}

std::string ClassSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::All: os << "all"; break;
        case Kind::SelfConjugate: os << "sc"; break;
        case Kind::ZAsymmetric: os << "pz:" << z; break;
        case Kind::BGt: os << "bgt:" << t; break;
        case Kind::BGzt: os << "bgzt:" << z << "," << t; break;
    }
    return os.str();
}

bool is_self_conjugate(const Partition& p) {
    FrobeniusCoords f = frobenius(p);
    return f.arms == f.legs;
}

bool is_z_asymmetric(const Partition& p, int z) {
    FrobeniusCoords f = frobenius(p);
    for (int k = 0; k < f.size(); ++k)
        if (f.arms[size_t(k)] - f.legs[size_t(k)] != z) return false;
    return true;
}

bool in_bg_t(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("bgt requires t >= 2");
    if (!is_self_conjugate(p)) return false;
    for (int h : diagonal_hooks(p))
        if (h % t == 0) return false;
    return true;
}

bool in_bg_zt(const Partition& p, int z, int t) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("bgzt requires t >= 2 and 0 <= z <= t-1");
    FrobeniusCoords f = frobenius(p);
    for (int j = 0; j < f.size(); ++j)
        if (f.arms[size_t(j)] - f.legs[size_t(j)] != z) return false;
    for (int j = 0; j < f.size(); ++j) {
        const long long a = f.legs[size_t(j)];  // the smaller Frobenius row
        for (int k = 1; k <= z; ++k)
            if ((a + k) % t == 0) return false;
        const long long diag = 2 * a + z + 1;  // the diagonal hook h_{(j,j)}
        if (diag % t == 0 && (diag / t) % 2 == 1) return false;
    }
    return true;
}

bool in_C_zt(const CoreVector& v, int z) {
    const int t = v.modulus();
    if (z < 0 || z > t - 1) throw std::invalid_argument("need 0 <= z <= t-1");
    for (int r = 0; r < z; ++r)
        if (v.entries[size_t(r)] + v.entries[size_t(z - r - 1)] != 0) return false;
    for (int r = z; r < t; ++r)
        if (v.entries[size_t(r)] + v.entries[size_t(t + z - r - 1)] != 0) return false;
    return true;
}

bool in_bg_zt_via_quotient(const Partition& p, int z, int t) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("bgzt requires t >= 2 and 0 <= z <= t-1");
    if (!is_z_asymmetric(p, z))
        throw std::domain_error("partition is not z-asymmetric");
    Decomposition d = decompose(p, t);
    if (!in_C_zt(kappa(d.core, t), z)) return false;
    for (int r = 0; r < z; ++r)
        if (!d.quotient[size_t(r)].empty()) return false;
    if ((t + z - 1) % 2 == 0 && !d.quotient[size_t((t + z - 1) / 2)].empty()) return false;
    return true;
}

namespace {

// Subtract one box from each of the first m rows; returns false when the
// result is not a partition.
bool subtract_unit_column(const Partition& p, int m, Partition* out) {
    if (m > p.length()) return false;
    std::vector<int> parts = p.parts();
    for (int i = 0; i < m; ++i) --parts[size_t(i)];
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return false;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int x : parts)
        if (x < 1) return false;
    *out = Partition::from_unchecked(std::move(parts));
    return true;
}

// Decide whether some mu satisfies
//   nu_r = mu + (1^{n + d_n(mu)})  and  nu_other = mu' + (1^{d_n(mu)}),
// trying every consistent unit-column height peeled off nu_other.
bool unit_column_witness_exists(const Partition& nu_r, const Partition& nu_other,
                                long long n) {
    for (int e = 0; e <= nu_other.length(); ++e) {
        Partition mu_conj;
        if (!subtract_unit_column(nu_other, e, &mu_conj)) continue;
        Partition mu = conjugate(mu_conj);
        if (shifted_durfee(mu, int(n)) != e) continue;
        if (componentwise_add(mu, Partition::from_unchecked(
                                      std::vector<int>(size_t(n + e), 1))) == nu_r)
            return true;
    }
    return false;
}

}  // namespace

bool pz_quotient_structure_check(const Partition& p, int z, int t, int* skipped_branches) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("need t >= 2 and 0 <= z <= t-1");
    if (!is_z_asymmetric(p, z))
        throw std::domain_error("partition is not z-asymmetric");
    if (skipped_branches) *skipped_branches = 0;
    Decomposition d = decompose(p, t);
    CoreVector v = kappa(d.core, t);
    if (!in_C_zt(v, z)) return false;
    for (int r = z; r < t; ++r)
        if (d.quotient[size_t(r)] != conjugate(d.quotient[size_t(t + z - r - 1)])) return false;
    for (int r = 0; r < z; ++r) {
        const long long n = v.entries[size_t(r)];
        if (n < 0) {
            if (skipped_branches) ++*skipped_branches;
            continue;
        }
        if (!unit_column_witness_exists(d.quotient[size_t(r)], d.quotient[size_t(z - r - 1)], n))
            return false;
    }
    return true;
}

bool in_class(const Partition& p, const ClassSpec& spec) {
    switch (spec.kind) {
        case ClassSpec::Kind::All: return true;
        case ClassSpec::Kind::SelfConjugate: return is_self_conjugate(p);
        case ClassSpec::Kind::ZAsymmetric: return is_z_asymmetric(p, spec.z);
        case ClassSpec::Kind::BGt: return in_bg_t(p, spec.t);
        case ClassSpec::Kind::BGzt: return in_bg_zt(p, spec.z, spec.t);
    }
    return false;
}

namespace {

void desc_lex_sort(std::vector<Partition>& v) {
    std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) { return a > b; });
}

// Partitions of s with at most max_len parts, appended to out.
void partitions_max_len(int s, int max_len, std::vector<std::vector<int>>& out) {
    std::vector<int> buf;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(buf);
            return;
        }
        if (int(buf.size()) >= max_len) return;
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            buf.push_back(k);
            self(self, remaining - k, k);
            buf.pop_back();
        }
    };
    rec(rec, s, s == 0 ? 1 : s);
}

}  // namespace

std::vector<Partition> pz_partitions(int z, int n) {
    if (n < 0) return {};
    if (z < 0) {
        std::vector<Partition> out;
        for (const Partition& p : pz_partitions(-z, n)) out.push_back(conjugate(p));
        desc_lex_sort(out);
        return out;
    }
    // Weight law: n = d(z+1) + 2 * sum(legs), legs strictly decreasing >= 0.
    std::vector<Partition> out;
    if (n == 0) out.push_back(Partition());
    for (int d = 1; (long long)d * (z + 1) + (long long)d * (d - 1) <= n; ++d) {
        long long rest = (long long)n - (long long)d * (z + 1);
        if (rest % 2 != 0) continue;
        long long s = rest / 2 - (long long)d * (d - 1) / 2;
        if (s < 0) continue;
        std::vector<std::vector<int>> mus;
        partitions_max_len(int(s), d, mus);
        for (const auto& mu : mus) {
            FrobeniusCoords f;
            for (int k = 0; k < d; ++k) {
                int leg = (k < int(mu.size()) ? mu[size_t(k)] : 0) + (d - 1 - k);
                f.legs.push_back(leg);
                f.arms.push_back(leg + z);
            }
            out.push_back(from_frobenius(f));
        }
    }
    desc_lex_sort(out);
    return out;
}

std::vector<Partition> pz_t_cores_up_to(int z, int t, int n_max) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("need t >= 2 and 0 <= z <= t-1");
    if (n_max < 0) return {};
    // Entries r < z vanish, entry t+z-r-1 mirrors -entry r, the middle entry
    // (t+z odd) vanishes; free coordinates are r = z .. z + f - 1 with
    // independent weight contribution t x^2 + (2r - t - z + 1) x, which is
    // >= 0 for integer x.
    const int f = (t - z) / 2;
    std::vector<int> free_idx;
    for (int r = z; r <= (t + z - 2) / 2; ++r) free_idx.push_back(r);
    assert(int(free_idx.size()) == f);

    std::vector<Partition> out;
    CoreVector v;
    v.entries.assign(size_t(t), 0);
    auto rec = [&](auto&& self, int pos, long long budget) -> void {
        if (pos == f) {
            Partition core = kappa_inverse(v);
            assert(core.weight() <= n_max);
            out.push_back(std::move(core));
            return;
        }
        const int r = free_idx[size_t(pos)];
        const long long c = 2LL * r - t - z + 1;
        for (long long x = 0;; ++x) {
            long long w = t * x * x + c * x;
            if (x > 0 && w > budget && t * x * x - c * x > budget) break;
            for (int sign : {+1, -1}) {
                if (x == 0 && sign < 0) continue;
                const long long sx = sign * x;
                long long ws = t * sx * sx + c * sx;
                if (ws > budget) continue;
                v.entries[size_t(r)] = sx;
                v.entries[size_t(t + z - r - 1)] = -sx;
                self(self, pos + 1, budget - ws);
            }
        }
        v.entries[size_t(r)] = 0;
        v.entries[size_t(t + z - r - 1)] = 0;
    };
    rec(rec, 0, n_max);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    return out;
}

std::vector<Partition> bgzt_partitions(int z, int t, int n) {
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("need t >= 2 and 0 <= z <= t-1");
    if (n < 0) return {};
    const int f = (t - z) / 2;
    std::vector<Partition> out;
    for (const Partition& core : pz_t_cores_up_to(z, t, n)) {
        long long rem = n - core.weight();
        if (rem < 0 || rem % (2LL * t) != 0) continue;
        const int m = int(rem / (2 * t));
        if (f == 0) {
            if (m == 0) out.push_back(core);
            continue;
        }
        std::vector<Partition> quot(static_cast<size_t>(t));
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == f) {
                out.push_back(recompose({core, quot, t}));
                return;
            }
            const int r = z + pos;
            const int w_lo = (pos == f - 1) ? remaining : 0;
            for (int w = w_lo; w <= remaining; ++w) {
                for (const Partition& nu : partitions_of(w)) {
                    quot[size_t(r)] = nu;
                    quot[size_t(t + z - r - 1)] = conjugate(nu);
                    self(self, pos + 1, remaining - w);
                }
            }
            quot[size_t(r)] = Partition();
            quot[size_t(t + z - r - 1)] = Partition();
        };
        rec(rec, 0, m);
    }
    desc_lex_sort(out);
    return out;
}

std::vector<Partition> enumerate_class(const ClassSpec& spec, int n) {
    switch (spec.kind) {
        case ClassSpec::Kind::All:
            return partitions_of(n);
        case ClassSpec::Kind::SelfConjugate:
            return pz_partitions(0, n);
        case ClassSpec::Kind::ZAsymmetric:
            return pz_partitions(spec.z, n);
        case ClassSpec::Kind::BGt: {
            std::vector<Partition> out;
            for (const Partition& p : pz_partitions(0, n))
                if (in_bg_t(p, spec.t)) out.push_back(p);
            return out;
        }
        case ClassSpec::Kind::BGzt:
            return bgzt_partitions(spec.z, spec.t, n);
    }
    return {};
}

}  // namespace partcomb

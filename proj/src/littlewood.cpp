#include "partcomb/littlewood.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace partcomb {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long mod_floor(long long a, long long b) { return a - b * floor_div(a, b); }

struct Subword {
    std::vector<std::uint8_t> letters;
    long long base = 0;  // subword index of letters[0]
    long long cut = 0;   // balance point: #1s below cut == #0s at/above cut
    bool sorted = true;  // no 1 before a 0 (subword of a t-core)
};

// Extract the letters of w at positions congruent to k mod t, wide enough to
// cover the whole window. The balance point falls at base + (number of 0s
// collected), because moving the cut right one step always gains exactly one:
// either a 1 enters the left side or a 0 leaves the right side.
Subword extract_subword(const BoundaryWord& w, int t, int k) {
    Subword s;
    const long long b = w.window_begin(), e = w.window_end();
    s.base = floor_div(b - k, t) - 1;
    const long long top = floor_div(e - 1 - k, t) + 1;
    long long zeros = 0;
    bool seen_one = false;
    for (long long i = s.base; i <= top; ++i) {
        std::uint8_t c = w.letter(t * i + k);
        s.letters.push_back(c);
        if (c == 0) {
            ++zeros;
            if (seen_one) s.sorted = false;
        } else {
            seen_one = true;
        }
    }
    s.cut = s.base + zeros;
    return s;
}

}  // namespace

bool is_t_core(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<int> conj;
    conjugate_into(p.parts(), conj);
    bool core = true;
    visit_hooks(p.parts(), conj, [&](int h) {
        if (h % t == 0) core = false;
    });
    return core;
}

Decomposition decompose(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    const BoundaryWord w = BoundaryWord::encode(p);
    Decomposition d;
    d.modulus = t;
    d.quotient.resize(size_t(t));
    std::vector<long long> cuts(static_cast<size_t>(t));
    for (int k = 0; k < t; ++k) {
        Subword s = extract_subword(w, t, k);
        cuts[size_t(k)] = s.cut;
        d.quotient[size_t(k)] =
            BoundaryWord::from_letters(s.base - s.cut, std::move(s.letters)).decode();
    }
    // Core word: subword k sorted in place, i.e. first 1 at index cuts[k].
    const long long lo = w.window_begin() - t, hi = w.window_end() + t;
    std::vector<std::uint8_t> cl;
    for (long long pos = lo; pos < hi; ++pos) {
        long long k = mod_floor(pos, t);
        long long i = (pos - k) / t;
        cl.push_back(i >= cuts[size_t(k)] ? 1 : 0);
    }
    d.core = BoundaryWord::from_letters(lo, std::move(cl)).decode();
    return d;
}

CoreVector kappa(const Partition& core, int t) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    const BoundaryWord w = BoundaryWord::encode(core);
    CoreVector v;
    long long sum = 0;
    for (int k = 0; k < t; ++k) {
        Subword s = extract_subword(w, t, k);
        if (!s.sorted) throw std::domain_error("kappa: partition is not a t-core");
        v.entries.push_back(s.cut);
        sum += s.cut;
    }
    assert(sum == 0);
    return v;
}

Partition kappa_inverse(const CoreVector& v) {
    const int t = v.modulus();
    if (t < 1) throw std::invalid_argument("core vector must be non-empty");
    long long sum = 0, nmin = 0, nmax = 0;
    for (long long n : v.entries) {
        sum += n;
        nmin = std::min(nmin, n);
        nmax = std::max(nmax, n);
    }
    if (sum != 0) throw std::invalid_argument("core vector entries must sum to 0");
    const long long lo = t * (nmin - 1), hi = t * (nmax + 1) + t;
    std::vector<std::uint8_t> letters;
    for (long long pos = lo; pos < hi; ++pos) {
        long long k = mod_floor(pos, t);
        long long i = (pos - k) / t;
        letters.push_back(i >= v.entries[size_t(k)] ? 1 : 0);
    }
    return BoundaryWord::from_letters(lo, std::move(letters)).decode();
}

long long core_weight(const CoreVector& v) {
    const long long t = v.modulus();
    long long doubled = 0;
    for (size_t k = 0; k < v.entries.size(); ++k) {
        long long n = v.entries[k];
        doubled += t * n * n + 2 * (long long)k * n;
    }
    assert(doubled % 2 == 0);
    return doubled / 2;
}

Partition recompose(const Decomposition& d) {
    const int t = d.modulus;
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    if (int(d.quotient.size()) != t)
        throw std::invalid_argument("quotient must have exactly t components");
    const CoreVector v = kappa(d.core, t);  // rejects a core with a hook divisible by t

    std::vector<BoundaryWord> qw;
    qw.reserve(size_t(t));
    for (const Partition& nu : d.quotient) qw.push_back(BoundaryWord::encode(nu));

    // Subword k of the result is the word of quotient[k] shifted by v[k].
    long long lo = 0, hi = 0;
    for (int k = 0; k < t; ++k) {
        lo = std::min(lo, t * (qw[size_t(k)].window_begin() + v.entries[size_t(k)]) + k);
        hi = std::max(hi, t * (qw[size_t(k)].window_end() + v.entries[size_t(k)]) + k);
    }
    lo -= t;
    hi += t;
    std::vector<std::uint8_t> letters;
    for (long long pos = lo; pos < hi; ++pos) {
        long long k = mod_floor(pos, t);
        long long i = (pos - k) / t;
        letters.push_back(qw[size_t(k)].letter(i - v.entries[size_t(k)]));
    }
    return BoundaryWord::from_letters(lo, std::move(letters)).decode();
}

Partition strip_rim_hooks(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<int> parts = p.parts();
    std::vector<int> conj;
    for (;;) {
        conjugate_into(parts, conj);
        // Earliest row holding a box of hook length exactly t (at most one per row).
        int row = -1, col = -1;
        for (int i = 0; i < int(parts.size()) && row < 0; ++i) {
            for (int j = 0; j < parts[size_t(i)]; ++j) {
                int h = parts[size_t(i)] - j + conj[size_t(j)] - i - 1;
                if (h == t) {
                    row = i;
                    col = j;
                    break;
                }
                if (h < t) break;  // hooks decrease along a row
            }
        }
        if (row < 0) break;
        // Remove the rim hook between the hand of `row` and the foot of `col`:
        // rows row..foot-1 take the next row's length minus one, the foot row
        // is cut at the column.
        const int foot = conj[size_t(col)] - 1;  // 0-based last row of the column
        for (int r = row; r < foot; ++r) parts[size_t(r)] = parts[size_t(r + 1)] - 1;
        parts[size_t(foot)] = col;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    return Partition(std::move(parts));
}

std::vector<Partition> t_cores_up_to(int t, int n_max) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    if (n_max < 0) return {};
    if (t == 1) return {Partition()};

    // Doubled weight of a vector is sum_k (t n_k^2 + 2 k n_k); enumerate with
    // per-coordinate bounds and suffix-minimum pruning, last entry forced.
    long long bound = 1;
    const long long doubled_max = 2LL * n_max;
    long long slack = 0;
    for (int k = 0; k < t; ++k) slack += (long long)k * k / t + 1;
    while (t * bound * bound - 2 * (t - 1) * bound - slack <= doubled_max) ++bound;

    std::vector<long long> suffix_min(size_t(t) + 1, 0);
    for (int k = t - 1; k >= 0; --k) {
        long long best = 0;
        for (long long x = -bound; x <= bound; ++x)
            best = std::min(best, t * x * x + 2LL * k * x);
        suffix_min[size_t(k)] = suffix_min[size_t(k) + 1] + best;
    }

    std::vector<Partition> out;
    CoreVector v;
    v.entries.assign(size_t(t), 0);
    long long partial_sum = 0, partial_doubled = 0;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == t - 1) {
            long long last = -partial_sum;
            if (last < -bound || last > bound) return;
            v.entries[size_t(k)] = last;
            long long doubled = partial_doubled + t * last * last + 2LL * k * last;
            if (doubled <= doubled_max) {
                assert(doubled % 2 == 0);
                out.push_back(kappa_inverse(v));
            }
            return;
        }
        for (long long x = -bound; x <= bound; ++x) {
            long long contrib = t * x * x + 2LL * k * x;
            if (partial_doubled + contrib + suffix_min[size_t(k) + 1] > doubled_max) continue;
            v.entries[size_t(k)] = x;
            partial_sum += x;
            partial_doubled += contrib;
            self(self, k + 1);
            partial_sum -= x;
            partial_doubled -= contrib;
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    return out;
}

}  // namespace partcomb

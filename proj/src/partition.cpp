#include "partcomb/partition.hpp"

#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace partcomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    long long w = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        w += parts_[i];
    }
    if (w > INT32_MAX) throw std::invalid_argument("partition weight too large");
    weight_ = int(w);
}

Partition Partition::from_unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    long long w = 0;
    for (int x : p.parts_) w += x;
    p.weight_ = int(w);
    return p;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in partition string");
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed part: " + tok);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

void conjugate_into(const std::vector<int>& parts, std::vector<int>& out) {
    out.assign(parts.empty() ? 0 : size_t(parts[0]), 0);
    for (int row : parts)
        for (int j = 0; j < row; ++j) ++out[size_t(j)];
}

Partition conjugate(const Partition& p) {
    std::vector<int> c;
    conjugate_into(p.parts(), c);
    return Partition::from_unchecked(std::move(c));
}

int durfee(const Partition& p) {
    int d = 0;
    while (d < p.length() && p.part(d) >= d + 1) ++d;
    return d;
}

int shifted_durfee(const Partition& p, int c) {
    if (c < 0) throw std::invalid_argument("shift must be >= 0");
    int d = 0;
    while (c + d < p.length() && p.part(c + d) >= d + 1) ++d;
    return d;
}

FrobeniusCoords frobenius(const Partition& p) {
    FrobeniusCoords f;
    const int d = durfee(p);
    std::vector<int> conj;
    conjugate_into(p.parts(), conj);
    for (int i = 0; i < d; ++i) {
        f.arms.push_back(p.part(i) - i - 1);
        f.legs.push_back(conj[size_t(i)] - i - 1);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
    if (f.arms.size() != f.legs.size())
        throw std::invalid_argument("Frobenius rows must have equal length");
    const int d = f.size();
    for (int i = 0; i < d; ++i) {
        if (f.arms[size_t(i)] < 0 || f.legs[size_t(i)] < 0)
            throw std::invalid_argument("Frobenius entries must be >= 0");
        if (i + 1 < d && (f.arms[size_t(i)] <= f.arms[size_t(i + 1)] ||
                          f.legs[size_t(i)] <= f.legs[size_t(i + 1)]))
            throw std::invalid_argument("Frobenius rows must be strictly decreasing");
    }
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) parts.push_back(f.arms[size_t(i)] + i + 1);
    // Rows below the Durfee square are read off the column lengths.
    if (d > 0) {
        int max_col = f.legs[0] + 1;
        for (int r = d + 1; r <= max_col; ++r) {
            int len = 0;
            for (int k = 0; k < d; ++k)
                if (f.legs[size_t(k)] + k + 1 >= r) ++len;
            if (len > 0) parts.push_back(len);
        }
    }
    return Partition(std::move(parts));
}

void HookMultiset::add(int value, long long mult) {
    auto it = counts_.find(value);
    if (it == counts_.end())
        counts_.emplace(value, mult);
    else if ((it->second += mult) == 0)
        counts_.erase(it);
}

long long HookMultiset::count(int value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

long long HookMultiset::total() const {
    long long t = 0;
    for (auto& [v, m] : counts_) t += m;
    return t;
}

std::vector<int> HookMultiset::sorted_values() const {
    std::vector<int> out;
    for (auto& [v, m] : counts_)
        for (long long i = 0; i < m; ++i) out.push_back(v);
    return out;
}

HookMultiset hooks(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("hook modulus must be >= 1");
    HookMultiset hs;
    std::vector<int> conj;
    conjugate_into(p.parts(), conj);
    visit_hooks(p.parts(), conj, [&](int h) {
        if (h % t == 0) hs.add(h);
    });
    return hs;
}

long long count_hooks_equal(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("hook value must be >= 1");
    long long n = 0;
    std::vector<int> conj;
    conjugate_into(p.parts(), conj);
    visit_hooks(p.parts(), conj, [&](int h) {
        if (h == t) ++n;
    });
    return n;
}

std::vector<int> diagonal_hooks(const Partition& p) {
    FrobeniusCoords f = frobenius(p);
    std::vector<int> out;
    for (int i = 0; i < f.size(); ++i)
        out.push_back(f.arms[size_t(i)] + f.legs[size_t(i)] + 1);
    return out;
}

Partition componentwise_add(const Partition& p, const Partition& q) {
    std::vector<int> out;
    const int n = std::max(p.length(), q.length());
    for (int i = 0; i < n; ++i) {
        int v = (i < p.length() ? p.part(i) : 0) + (i < q.length() ? q.part(i) : 0);
        if (v > 0) out.push_back(v);
    }
    return Partition::from_unchecked(std::move(out));
}

Partition add_unit_column(const Partition& p, int m) {
    if (m < 0) throw std::invalid_argument("column height must be >= 0");
    return componentwise_add(p, Partition::from_unchecked(std::vector<int>(size_t(m), 1)));
}

namespace {

// Rows are appended once per weight and never moved afterwards, so returned
// references stay valid under concurrent growth of the table.
std::deque<std::vector<Partition>> g_partition_rows;
std::mutex g_partition_rows_mutex;

std::vector<Int> g_pcount;
std::mutex g_pcount_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative weight");
    std::lock_guard<std::mutex> lock(g_partition_rows_mutex);
    while (int(g_partition_rows.size()) <= n) {
        int m = int(g_partition_rows.size());
        std::vector<Partition> row;
        for_each_partition(m, [&](const std::vector<int>& parts) {
            row.push_back(Partition::from_unchecked(parts));
        });
        g_partition_rows.push_back(std::move(row));
    }
    return g_partition_rows[size_t(n)];
}

Int partition_count(int n) {
    if (n < 0) return Int(0);
    std::lock_guard<std::mutex> lock(g_pcount_mutex);
    if (g_pcount.empty()) g_pcount.push_back(Int(1));
    while (int(g_pcount.size()) <= n) {
        int m = int(g_pcount.size());
        Int acc(0);
        // p(m) = sum_{k>=1} (-1)^{k-1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
        for (int k = 1;; ++k) {
            long long g1 = (long long)k * (3 * k - 1) / 2;
            long long g2 = (long long)k * (3 * k + 1) / 2;
            if (g1 > m) break;
            Int term(0);
            term += g_pcount[size_t(m - g1)];
            if (g2 <= m) term += g_pcount[size_t(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        g_pcount.push_back(std::move(acc));
    }
    return g_pcount[size_t(n)];
}

}  // namespace partcomb

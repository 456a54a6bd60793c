#include "partcomb/boundary_word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partcomb {

std::uint8_t BoundaryWord::letter(long long i) const {
    if (i < offset_) return 0;
    if (i >= window_end()) return 1;
    return letters_[size_t(i - offset_)];
}

BoundaryWord BoundaryWord::from_letters(long long offset, std::vector<std::uint8_t> letters) {
    for (std::uint8_t b : letters)
        if (b > 1) throw std::invalid_argument("boundary letters must be 0 or 1");
    // Minimal window: drop leading 0s (the left default) and trailing 1s.
    size_t lo = 0;
    while (lo < letters.size() && letters[lo] == 0) ++lo;
    size_t hi = letters.size();
    while (hi > lo && letters[hi - 1] == 1) --hi;
    BoundaryWord w;
    w.offset_ = offset + (long long)lo;
    w.letters_.assign(letters.begin() + lo, letters.begin() + hi);
    if (w.letters_.empty()) w.offset_ = 0;

    long long ones_neg = 0, zeros_nonneg = 0;
    for (size_t k = 0; k < w.letters_.size(); ++k) {
        long long pos = w.offset_ + (long long)k;
        if (pos < 0 && w.letters_[k] == 1) ++ones_neg;
        if (pos >= 0 && w.letters_[k] == 0) ++zeros_nonneg;
    }
    if (ones_neg != zeros_nonneg)
        throw std::invalid_argument("unbalanced boundary word: median is misplaced");
    return w;
}

BoundaryWord BoundaryWord::encode(const Partition& p) {
    if (p.empty()) return {};
    const int ell = p.length();
    const int width = p.part(0);
    // Window spans [-ell, width-1]; 0s sit at the positions lambda_j - j.
    std::vector<std::uint8_t> letters(size_t(ell + width), 1);
    for (int j = 1; j <= ell; ++j) letters[size_t(p.part(j - 1) - j + ell)] = 0;
    return from_letters(-ell, std::move(letters));
}

Partition BoundaryWord::decode() const {
    // The 0-positions z_1 > z_2 > ... give parts via lambda_j = z_j + j.
    std::vector<int> parts;
    int j = 0;
    for (long long pos = window_end() - 1; pos >= offset_; --pos) {
        if (letters_[size_t(pos - offset_)] == 0) {
            ++j;
            parts.push_back(int(pos + j));
        }
    }
    return Partition(std::move(parts));
}

BoundaryWord BoundaryWord::conjugated() const {
    std::vector<std::uint8_t> rev(letters_.rbegin(), letters_.rend());
    for (auto& b : rev) b = std::uint8_t(1 - b);
    return from_letters(-window_end(), std::move(rev));
}

long long BoundaryWord::ones_negative() const {
    long long n = 0;
    for (size_t k = 0; k < letters_.size(); ++k)
        if (offset_ + (long long)k < 0 && letters_[k] == 1) ++n;
    return n;
}

std::string BoundaryWord::render() const {
    const long long lo = std::min(offset_ - 1, (long long)-3);
    const long long hi = std::max(window_end(), (long long)2);
    std::ostringstream os;
    os << "…";
    for (long long i = lo; i <= hi; ++i) {
        if (i == 0) os << "|";
        os << int(letter(i));
    }
    os << "…";
    return os.str();
}

std::set<std::pair<long long, long long>> hook_index_pairs(const Partition& p) {
    BoundaryWord w = BoundaryWord::encode(p);
    std::vector<long long> ones, zeros;
    for (long long i = w.window_begin(); i < w.window_end(); ++i)
        (w.letter(i) == 1 ? ones : zeros).push_back(i);
    std::set<std::pair<long long, long long>> out;
    for (long long i : ones)
        for (long long j : zeros)
            if (i < j) out.emplace(i, j);
    return out;
}

FrobeniusCoords frobenius_from_word(const BoundaryWord& w) {
    FrobeniusCoords f;
    for (long long i = w.window_end() - 1; i >= std::max<long long>(0, w.window_begin()); --i)
        if (w.letter(i) == 0) f.arms.push_back(int(i));
    for (long long i = w.window_begin(); i < 0; ++i)
        if (w.letter(i) == 1) f.legs.push_back(int(-i - 1));
    return f;
}

bool word_is_z_asymmetric(const BoundaryWord& w, int z) {
    if (z >= 0) {
        for (int i = 0; i < z; ++i)
            if (w.letter(i) != 1) return false;
    } else {
        for (int i = z; i < 0; ++i)
            if (w.letter(i) != 0) return false;
    }
    // Mirror rule, checked where at least one side is inside the window;
    // beyond that both sides are defaults and the rule holds automatically.
    const long long start = std::max<long long>(z, 0);
    const long long stop =
        std::max(w.window_end(), (long long)z - 1 - w.window_begin());
    for (long long i = start; i <= stop; ++i)
        if (w.letter(i) != 1 - w.letter(z - 1 - i)) return false;
    return true;
}

}  // namespace partcomb

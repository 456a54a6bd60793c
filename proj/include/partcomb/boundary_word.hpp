#pragma once

#include "partcomb/partition.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace partcomb {

// Two-sided 0/1 encoding of a partition border: reading the border from
// south-west to north-east, 0 is a vertical step and 1 a horizontal one.
// Letters left of the stored window are implicitly 0, letters right of it
// implicitly 1, and the index origin (the median, drawn between indices -1
// and 0) is fixed by the balance rule
//     #{i <= -1 : c_i = 1} = #{i >= 0 : c_i = 0}.
// The stored window is minimal (leftmost 1 through rightmost 0), so equal
// partitions give bitwise-equal objects; equality means equality of the
// infinite sequences.
class BoundaryWord {
public:
    BoundaryWord() = default;  // word of the empty partition

    // Canonicalizes the window and validates the balance rule.
    static BoundaryWord from_letters(long long offset, std::vector<std::uint8_t> letters);

    static BoundaryWord encode(const Partition& p);
    Partition decode() const;

    // Word of the conjugate partition: c'_i = 1 - c_{-i-1}.
    BoundaryWord conjugated() const;

    std::uint8_t letter(long long i) const;
    long long window_begin() const { return offset_; }
    long long window_end() const { return offset_ + (long long)letters_.size(); }
    const std::vector<std::uint8_t>& window() const { return letters_; }
    bool empty_window() const { return letters_.empty(); }

    // Number of 1-letters at negative indices; equals the Durfee size of the
    // decoded partition.
    long long ones_negative() const;

    bool operator==(const BoundaryWord&) const = default;

    // "…01100|111001…" with the '|' at the median.
    std::string render() const;

private:
    long long offset_ = 0;
    std::vector<std::uint8_t> letters_;
};

// One index pair (i, j) per box of p, with i < j, c_i = 1, c_j = 0; the
// multiset of differences j - i is the hook multiset of p.
std::set<std::pair<long long, long long>> hook_index_pairs(const Partition& p);

// Arms are the non-negative 0-positions, legs come from the negative
// 1-positions i as -i-1.
FrobeniusCoords frobenius_from_word(const BoundaryWord& w);

// Word-side membership test for the z-asymmetric classes: a flat run of
// letters next to the median plus the mirror rule c_i = 1 - c_{z-1-i}.
bool word_is_z_asymmetric(const BoundaryWord& w, int z);

}  // namespace partcomb

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ytg/errors.hpp"
#include "ytg/graph.hpp"
#include "ytg/rational.hpp"

namespace ytg {

// Integer partition; trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    // Throws InvalidInput unless weakly decreasing and nonnegative.
    explicit Partition(std::vector<int> parts);
    static Partition from_exponents(std::span<const std::int64_t> v);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-based; 0 beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    // Zero-padded to n entries; throws if the partition has more than n parts.
    std::vector<std::int64_t> padded(int n) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// All partitions of `size`, in lexicographically decreasing order ((size) first).
std::vector<Partition> partitions_of(int size, int max_parts);

// Classical dominance: prefix sums of `a` bound those of `b` from above.
bool dominates(const Partition& a, const Partition& b);

// A word over {1, 2, ...} in which every prefix holds no more i's than (i-1)'s.
class YamanouchiWord {
public:
    YamanouchiWord() = default;
    // Throws InvalidInput when the lattice condition fails or a letter is < 1.
    explicit YamanouchiWord(std::vector<Vertex> letters);
    static bool is_yamanouchi(std::span<const Vertex> letters);

    const std::vector<Vertex>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    Partition type() const;
    // Digit string when every letter is a single digit, otherwise comma-separated.
    std::string to_string() const;

    friend bool operator==(const YamanouchiWord&, const YamanouchiWord&) = default;
    friend auto operator<=>(const YamanouchiWord&, const YamanouchiWord&) = default;

private:
    std::vector<Vertex> letters_;
};

class StandardYoungTableau {
public:
    StandardYoungTableau() = default;
    // Throws InvalidInput unless rows and columns strictly increase, the shape is
    // a partition and the entries are exactly 1..m.
    explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;

    friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Row i holds the positions j with letter i.
StandardYoungTableau word_to_syt(const YamanouchiWord& w);
YamanouchiWord syt_to_word(const StandardYoungTableau& t);

// All Yamanouchi words of content `shape`, lexicographically increasing.
std::vector<YamanouchiWord> yamanouchi_words(const Partition& shape, std::size_t cap);

// All SYT of the shape, ordered lexicographically by their Yamanouchi word.
// Throws BudgetExceeded past `cap` results.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape, std::size_t cap = Budget{}.max_objects);

// Number of SYT of the shape, by counting lattice paths (no materialization).
BigInt count_syt(const Partition& shape);

// Hook-length formula. A classical fact used only as a cross-check of count_syt.
BigInt hook_length_count(const Partition& shape);

// Minimal-length Yamanouchi toppling sequences from alpha to beta: the words of
// type lambda, where lambda solves toppling dominance. Empty when beta is not
// dominated by alpha.
std::vector<YamanouchiWord> minimal_yamanouchi_sequences(const Graph& g, const Configuration& alpha,
                                                         const Configuration& beta,
                                                         std::size_t cap = Budget{}.max_objects);

}  // namespace ytg

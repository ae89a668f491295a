#include "ytg/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ytg/toppling_group.hpp"

namespace ytg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) {
            throw InvalidInput("partition parts must be nonnegative");
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw InvalidInput("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

Partition Partition::from_exponents(std::span<const std::int64_t> v) {
    std::vector<int> parts(v.begin(), v.end());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<std::int64_t> Partition::padded(int n) const {
    if (length() > n) {
        throw InvalidInput("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        os << (k ? "," : "") << parts_[k];
    }
    os << ")";
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    for (int col = 1; col <= p[1]; ++col) {
        int height = 0;
        while (height < p.length() && p.parts()[static_cast<std::size_t>(height)] >= col) {
            ++height;
        }
        out.push_back(height);
    }
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int size, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) {
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(size, size);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) {
        return false;
    }
    int sa = 0;
    int sb = 0;
    for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) {
            return false;
        }
    }
    return true;
}

bool YamanouchiWord::is_yamanouchi(std::span<const Vertex> letters) {
    std::vector<int> counts;
    for (Vertex v : letters) {
        if (v < 1) {
            return false;
        }
        if (static_cast<std::size_t>(v) > counts.size()) {
            counts.resize(static_cast<std::size_t>(v), 0);
        }
        int& c = counts[static_cast<std::size_t>(v - 1)];
        ++c;
        if (v > 1 && c > counts[static_cast<std::size_t>(v - 2)]) {
            return false;
        }
    }
    return true;
}

YamanouchiWord::YamanouchiWord(std::vector<Vertex> letters) : letters_(std::move(letters)) {
    if (!is_yamanouchi(letters_)) {
        throw InvalidInput("word is not Yamanouchi");
    }
}

Partition YamanouchiWord::type() const {
    std::vector<int> counts;
    for (Vertex v : letters_) {
        if (static_cast<std::size_t>(v) > counts.size()) {
            counts.resize(static_cast<std::size_t>(v), 0);
        }
        ++counts[static_cast<std::size_t>(v - 1)];
    }
    return Partition(std::move(counts));
}

std::string YamanouchiWord::to_string() const {
    bool digits = std::all_of(letters_.begin(), letters_.end(), [](Vertex v) { return v <= 9; });
    std::ostringstream os;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (!digits && k > 0) {
            os << ",";
        }
        os << letters_[k];
    }
    return os.str();
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int m = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) {
            throw InvalidInput("tableau rows must be nonempty");
        }
        if (r > 0 && row.size() > rows_[r - 1].size()) {
            throw InvalidInput("tableau shape must be weakly decreasing");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0 && row[c] <= row[c - 1]) {
                throw InvalidInput("tableau rows must strictly increase");
            }
            if (r > 0 && row[c] <= rows_[r - 1][c]) {
                throw InvalidInput("tableau columns must strictly increase");
            }
        }
        m += static_cast<int>(row.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (const auto& row : rows_) {
        for (int v : row) {
            if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
                throw InvalidInput("tableau entries must be exactly 1.." + std::to_string(m));
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

Partition StandardYoungTableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) {
        parts.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(parts));
}

int StandardYoungTableau::size() const { return shape().size(); }

StandardYoungTableau word_to_syt(const YamanouchiWord& w) {
    std::vector<std::vector<int>> rows;
    const auto& letters = w.letters();
    for (std::size_t j = 0; j < letters.size(); ++j) {
        auto row = static_cast<std::size_t>(letters[j] - 1);
        if (row >= rows.size()) {
            rows.resize(row + 1);
        }
        rows[row].push_back(static_cast<int>(j + 1));
    }
    return StandardYoungTableau(std::move(rows));
}

YamanouchiWord syt_to_word(const StandardYoungTableau& t) {
    std::vector<Vertex> letters(static_cast<std::size_t>(t.size()));
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        for (int v : t.rows()[r]) {
            letters[static_cast<std::size_t>(v - 1)] = static_cast<Vertex>(r + 1);
        }
    }
    return YamanouchiWord(std::move(letters));
}

std::vector<YamanouchiWord> yamanouchi_words(const Partition& shape, std::size_t cap) {
    const auto rows = static_cast<std::size_t>(shape.length());
    std::vector<int> used(rows, 0);
    std::vector<Vertex> word;
    std::vector<YamanouchiWord> out;
    const auto total = static_cast<std::size_t>(shape.size());
    std::function<void()> rec = [&]() {
        if (word.size() == total) {
            if (out.size() >= cap) {
                throw BudgetExceeded("more than " + std::to_string(cap) + " tableaux of shape " + shape.to_string());
            }
            out.emplace_back(word);
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] >= shape.parts()[r] || (r > 0 && used[r] >= used[r - 1])) {
                continue;
            }
            ++used[r];
            word.push_back(static_cast<Vertex>(r + 1));
            rec();
            word.pop_back();
            --used[r];
        }
    };
    rec();
    return out;
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape, std::size_t cap) {
    std::vector<StandardYoungTableau> out;
    for (const auto& w : yamanouchi_words(shape, cap)) {
        out.push_back(word_to_syt(w));
    }
    return out;
}

BigInt count_syt(const Partition& shape) {
    // Paths in Young's lattice from the empty shape, memoized on the filled profile.
    std::map<std::vector<int>, BigInt> memo;
    std::function<BigInt(std::vector<int>&)> rec = [&](std::vector<int>& used) -> BigInt {
        bool full = true;
        for (std::size_t r = 0; r < used.size(); ++r) {
            full = full && used[r] == shape.parts()[r];
        }
        if (full) {
            return 1;
        }
        if (auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        BigInt total = 0;
        for (std::size_t r = 0; r < used.size(); ++r) {
            if (used[r] < shape.parts()[r] && (r == 0 || used[r] < used[r - 1])) {
                ++used[r];
                total += rec(used);
                --used[r];
            }
        }
        memo.emplace(used, total);
        return total;
    };
    std::vector<int> used(static_cast<std::size_t>(shape.length()), 0);
    return rec(used);
}

BigInt hook_length_count(const Partition& shape) {
    BigInt numerator = 1;
    for (int k = 2; k <= shape.size(); ++k) {
        numerator *= k;
    }
    Partition conj = conjugate(shape);
    BigInt hooks = 1;
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape[r]; ++c) {
            hooks *= (shape[r] - c) + (conj[c] - r) + 1;
        }
    }
    return numerator / hooks;
}

std::vector<YamanouchiWord> minimal_yamanouchi_sequences(const Graph& g, const Configuration& alpha,
                                                         const Configuration& beta, std::size_t cap) {
    DominanceResult r = solve_dominance(g, alpha, beta);
    if (!r) {
        return {};
    }
    return yamanouchi_words(Partition::from_exponents(r.lambda->parts()), cap);
}

}  // namespace ytg

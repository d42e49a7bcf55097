#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/exact.hpp"

namespace loopkit {

/// Weakly or strictly increasing sequence a with 1 <= a_i <= 2i-1.
class ASequence {
public:
    static ASequence weak(std::vector<int> entries);
    static ASequence strict(std::vector<int> entries);
    /// Comma-separated entries, e.g. "1,3,5".
    static ASequence parse(std::string_view csv, bool strict = true);

    int size() const { return static_cast<int>(entries_.size()); }
    /// 1-based accessor matching the usual indexing a_1..a_n.
    int at(int i) const { return entries_[i - 1]; }
    const std::vector<int>& entries() const { return entries_; }
    bool is_strict() const { return strict_; }

    /// Number of occurrences of value v.
    int multiplicity(int v) const;

    std::string str() const;
    bool operator==(const ASequence& o) const { return entries_ == o.entries_; }
    auto operator<=>(const ASequence& o) const { return entries_ <=> o.entries_; }

private:
    ASequence(std::vector<int> entries, bool strict);
    std::vector<int> entries_;
    bool strict_ = true;
};

/// Partition with weakly decreasing non-negative rows; trailing zero rows are
/// trimmed so equality ignores them.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    /// Bracketed row list, e.g. "[2,2,1]"; "[]" is the empty diagram.
    static YoungDiagram parse(std::string_view text);

    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const;  // 0 beyond the last row
    int row_count() const { return static_cast<int>(rows_.size()); }
    int box_count() const;
    bool empty() const { return rows_.empty(); }

    bool contains(const YoungDiagram& inner) const;

    /// Number of standard fillings, by the hook length formula.
    BigInt standard_tableaux() const;

    std::string str() const;
    bool operator==(const YoungDiagram& o) const = default;

private:
    std::vector<int> rows_;
};

/// Diagram with rows a_i - i read from the bottom. Strict input always yields
/// a partition inside the staircase (n-1, n-2, ..., 1); weak input that does
/// not form a partition is rejected.
YoungDiagram young_of(const ASequence& a);

/// Planar pairing of 2n points on a line, encoded as a balanced parenthesis
/// word. Point positions are 1-based.
class Matching {
public:
    Matching() = default;  // the empty matching of 0 points

    static Matching parse(std::string_view word);
    static Matching from_openings(const ASequence& openings);
    static Matching fully_nested(int n);  // ((...))
    static Matching unit_chain(int n);    // ()()...()

    int half_size() const { return n_; }
    int size() const { return 2 * n_; }
    const std::string& word() const { return word_; }
    int partner(int position) const;

    ASequence openings() const;
    YoungDiagram young() const;
    int even_openings() const;

    /// Wraps p extra arches around the whole pattern: (...p times...(w)...).
    Matching nested(int p) const;
    /// Shifts every point one step around the cycle 1 -> 2 -> ... -> 2n -> 1.
    Matching rotated() const;

    bool operator==(const Matching& o) const { return word_ == o.word_; }
    auto operator<=>(const Matching& o) const { return word_ <=> o.word_; }

private:
    Matching(std::string word, std::vector<int> partner, int n);
    std::string word_;
    std::vector<int> partner_;  // 1-based, partner_[0] unused
    int n_ = 0;
};

BigInt catalan(int n);

/// All matchings of 2n points in canonical order (lexicographic by opening
/// sequence, which coincides with lexicographic order on the words).
std::vector<Matching> enumerate_matchings(int n);

/// All strictly increasing sequences with a_i <= 2i-1, lexicographically.
std::vector<ASequence> enumerate_strict_sequences(int n);

inline std::ostream& operator<<(std::ostream& out, const ASequence& a) { return out << a.str(); }
inline std::ostream& operator<<(std::ostream& out, const YoungDiagram& y) {
    return out << y.str();
}
inline std::ostream& operator<<(std::ostream& out, const Matching& m) { return out << m.word(); }

}  // namespace loopkit

#include "loopkit/combinatorics.hpp"

#include <algorithm>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

constexpr int kEnumerationCap = 12;

std::vector<int> parse_int_csv(std::string_view csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::string item;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("not an integer list entry: '" + item + "'");
        }
    }
    return out;
}

}  // namespace

ASequence::ASequence(std::vector<int> entries, bool strict)
    : entries_(std::move(entries)), strict_(strict) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int v = entries_[i];
        int bound = 2 * static_cast<int>(i + 1) - 1;
        if (v < 1 || v > bound)
            throw ValidationError("sequence entry a_" + std::to_string(i + 1) + "=" +
                                  std::to_string(v) + " outside [1," + std::to_string(bound) + "]");
        if (i > 0) {
            if (strict_ && v <= entries_[i - 1])
                throw ValidationError("sequence not strictly increasing at position " +
                                      std::to_string(i + 1));
            if (!strict_ && v < entries_[i - 1])
                throw ValidationError("sequence not weakly increasing at position " +
                                      std::to_string(i + 1));
        }
    }
}

ASequence ASequence::weak(std::vector<int> entries) { return ASequence(std::move(entries), false); }

ASequence ASequence::strict(std::vector<int> entries) { return ASequence(std::move(entries), true); }

ASequence ASequence::parse(std::string_view csv, bool strict) {
    return ASequence(parse_int_csv(csv), strict);
}

int ASequence::multiplicity(int v) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), v));
}

std::string ASequence::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ",";
        out << entries_[i];
    }
    return out.str();
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0)
            throw ValidationError("negative row length " + std::to_string(rows_[i]));
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw ValidationError("row lengths increase at row " + std::to_string(i + 1));
    }
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ValidationError("diagram must look like [2,2,1]: '" + std::string(text) + "'");
    return YoungDiagram(parse_int_csv(text.substr(1, text.size() - 2)));
}

int YoungDiagram::row(int i) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return 0;
    return rows_[i];
}

int YoungDiagram::box_count() const {
    int total = 0;
    for (int r : rows_) total += r;
    return total;
}

bool YoungDiagram::contains(const YoungDiagram& inner) const {
    for (int i = 0; i < inner.row_count(); ++i)
        if (inner.rows_[i] > row(i)) return false;
    return true;
}

BigInt YoungDiagram::standard_tableaux() const {
    if (rows_.empty()) return 1;
    std::vector<int> col_height(rows_[0], 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++col_height[j];
    BigInt hooks = 1;
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < rows_[i]; ++j)
            hooks *= (rows_[i] - j) + (col_height[j] - i) - 1;
    BigInt num = factorial(box_count());
    if (num % hooks != 0) throw VerificationError("hook product does not divide |Y|!");
    return num / hooks;
}

std::string YoungDiagram::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ",";
        out << rows_[i];
    }
    out << "]";
    return out.str();
}

YoungDiagram young_of(const ASequence& a) {
    int n = a.size();
    std::vector<int> rows(n);
    for (int i = 1; i <= n; ++i) rows[n - i] = a.at(i) - i;
    try {
        return YoungDiagram(std::move(rows));
    } catch (const ValidationError&) {
        throw ValidationError("sequence (" + a.str() + ") does not define a partition");
    }
}

Matching::Matching(std::string word, std::vector<int> partner, int n)
    : word_(std::move(word)), partner_(std::move(partner)), n_(n) {}

Matching Matching::parse(std::string_view word) {
    std::vector<int> open_stack;
    std::vector<int> partner(word.size() + 1, 0);
    for (std::size_t k = 0; k < word.size(); ++k) {
        int pos = static_cast<int>(k) + 1;
        char c = word[k];
        if (c == '(') {
            open_stack.push_back(pos);
        } else if (c == ')') {
            if (open_stack.empty())
                throw ValidationError("unmatched ')' at position " + std::to_string(pos));
            partner[pos] = open_stack.back();
            partner[open_stack.back()] = pos;
            open_stack.pop_back();
        } else {
            throw ValidationError("invalid character '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
        }
    }
    if (!open_stack.empty())
        throw ValidationError("unmatched '(' at position " + std::to_string(open_stack.front()));
    return Matching(std::string(word), std::move(partner), static_cast<int>(word.size() / 2));
}

Matching Matching::from_openings(const ASequence& openings) {
    if (!openings.is_strict())
        throw ValidationError("opening positions must form a strict sequence");
    int n = openings.size();
    std::string word(2 * n, ')');
    for (int v : openings.entries()) word[v - 1] = '(';
    return parse(word);
}

Matching Matching::fully_nested(int n) {
    return parse(std::string(n, '(') + std::string(n, ')'));
}

Matching Matching::unit_chain(int n) {
    std::string w;
    w.reserve(2 * n);
    for (int i = 0; i < n; ++i) w += "()";
    return parse(w);
}

int Matching::partner(int position) const {
    if (position < 1 || position > 2 * n_)
        throw ValidationError("position " + std::to_string(position) + " outside 1.." +
                              std::to_string(2 * n_));
    return partner_[position];
}

ASequence Matching::openings() const {
    std::vector<int> open;
    open.reserve(n_);
    for (int i = 1; i <= 2 * n_; ++i)
        if (word_[i - 1] == '(') open.push_back(i);
    return ASequence::strict(std::move(open));
}

YoungDiagram Matching::young() const { return young_of(openings()); }

int Matching::even_openings() const {
    int count = 0;
    for (int i = 2; i <= 2 * n_; i += 2)
        if (word_[i - 1] == '(') ++count;
    return count;
}

Matching Matching::nested(int p) const {
    if (p < 0) throw ValidationError("nesting depth must be non-negative");
    return parse(std::string(p, '(') + word_ + std::string(p, ')'));
}

Matching Matching::rotated() const {
    int m = 2 * n_;
    std::string w(m, '?');
    for (int i = 1; i <= m; ++i) {
        int ni = i % m + 1;
        int npartner = partner_[i] % m + 1;
        w[ni - 1] = ni < npartner ? '(' : ')';
    }
    return parse(w);
}

BigInt catalan(int n) {
    BigInt num = binomial(2 * n, n);
    if (num % (n + 1) != 0) throw VerificationError("catalan division not exact");
    return num / (n + 1);
}

namespace {

void extend_strict(int n, std::vector<int>& prefix, std::vector<ASequence>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(ASequence::strict(prefix));
        return;
    }
    int i = static_cast<int>(prefix.size()) + 1;
    int lo = prefix.empty() ? 1 : prefix.back() + 1;
    for (int v = lo; v <= 2 * i - 1; ++v) {
        prefix.push_back(v);
        extend_strict(n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ASequence> enumerate_strict_sequences(int n) {
    if (n < 0) throw ValidationError("negative size");
    if (n > kEnumerationCap)
        throw ResourceError("enumeration size " + std::to_string(n) + " above cap " +
                            std::to_string(kEnumerationCap));
    std::vector<ASequence> out;
    std::vector<int> prefix;
    extend_strict(n, prefix, out);
    return out;
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for (const ASequence& a : enumerate_strict_sequences(n))
        out.push_back(Matching::from_openings(a));
    return out;
}

}  // namespace loopkit

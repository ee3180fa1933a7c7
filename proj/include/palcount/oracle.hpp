#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palcount/bigint.hpp"
#include "palcount/counts.hpp"
#include "palcount/word.hpp"

// Brute-force ground truth, independent of the closed forms and block
// recursions it is used to check. The palindromic tree (eertree) gives
// per-position palindromic-suffix counts in O(n); the center-expansion
// counter is the slower second opinion used to validate the tree itself.
namespace palcount::oracle {

// Palindromic tree over a word fed one letter at a time. Node 0 is the
// length(-1) root, node 1 the empty-word root; every other node is a distinct
// nonempty palindromic factor.
class PalTree {
public:
    PalTree();

    void push(char letter);
    void build(std::string_view text);

    // Number of distinct nonempty palindromic factors seen so far.
    std::size_t distinct() const { return nodes_.size() - 2; }

    std::size_t length() const { return text_.size(); }

    // Number of palindromic suffixes of the prefix ending at pos (1-based).
    std::uint64_t suffix_count_at(std::size_t pos) const { return counts_.at(pos - 1); }
    const std::vector<std::uint64_t>& suffix_counts() const { return counts_; }

    // Lengths of all palindromic suffixes ending at pos, longest first.
    std::vector<std::size_t> palindromic_suffix_lengths(std::size_t pos) const;

    // Occurrence count per distinct palindrome (suffix-link subtree sums),
    // paired with the palindrome's length. Order is unspecified.
    struct NodeCount {
        std::size_t length;
        std::uint64_t occurrences;
    };
    std::vector<NodeCount> occurrence_counts() const;
    BigInt total_occurrences() const;

private:
    struct Node {
        int len;
        int link;
        std::uint32_t depth;  // palindromic suffixes reachable via links
        std::uint64_t ends_here;
        int next[3];
    };

    int extend_from(int v, char letter) const;

    std::vector<Node> nodes_;
    std::string text_;
    int last_;
    std::vector<std::uint64_t> counts_;
    std::vector<int> node_at_;  // node of the longest palindromic suffix per position
};

// Per-position palindromic-suffix counts of w, via the tree.
CountSlice pal_suffix_counts(const Word& w);

// Same counts by center expansion: O(total palindromic occurrences), worst
// case O(|w|^2). Kept as an independent check on the tree.
std::vector<std::uint64_t> pal_suffix_counts_naive(const Word& w);

// End positions (1-based, strictly increasing) of all occurrences of factor
// in prefix, by literal scanning. factor must be nonempty.
struct Occurrences {
    Word factor;
    std::vector<BigInt> last_positions;
};
Occurrences occurrences(const Word& factor, const Word& prefix);

// Word between consecutive occurrences: empty when they are adjacent, the
// overlap marked inverse when they overlap.
struct Gap {
    enum class Kind { plain, empty, inverse };
    Kind kind{Kind::empty};
    Word content;
    bool operator==(const Gap&) const = default;
};

// Gaps G_1, G_2, ... between consecutive occurrences of factor in prefix.
// Requires at least two occurrences.
std::vector<Gap> gap_sequence(const Word& factor, const Word& prefix);

// Checks that the first `depth` gaps of factor in its family's word, with
// distinct gap values relabeled in first-occurrence order, reproduce the
// prefix of F (resp. T) of that length.
bool gap_projection_check(const Word& factor, Family family, std::size_t depth);

BigInt distinct_palindromes(const Word& w);

}  // namespace palcount::oracle

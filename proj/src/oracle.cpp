#include "palcount/oracle.hpp"

#include <stdexcept>

#include "palcount/sequences.hpp"

namespace palcount::oracle {

namespace {

namespace seq = palcount::sequences;

int letter_index(char letter) {
    const int idx = letter - 'a';
    if (idx < 0 || idx > 2)
        throw std::domain_error(std::string("letter out of alphabet: ") + letter);
    return idx;
}

}  // namespace

PalTree::PalTree() {
    nodes_.push_back(Node{-1, 0, 0, 0, {0, 0, 0}});  // length(-1) root
    nodes_.push_back(Node{0, 0, 0, 0, {0, 0, 0}});   // empty-word root
    last_ = 1;
}

int PalTree::extend_from(int v, char letter) const {
    const auto i = static_cast<long>(text_.size()) - 1;
    while (true) {
        const long l = nodes_[static_cast<std::size_t>(v)].len;
        if (i - l - 1 >= 0 && text_[static_cast<std::size_t>(i - l - 1)] == letter)
            return v;
        v = nodes_[static_cast<std::size_t>(v)].link;
    }
}

void PalTree::push(char letter) {
    const int idx = letter_index(letter);
    text_.push_back(letter);
    const int x = extend_from(last_, letter);
    if (const int existing = nodes_[static_cast<std::size_t>(x)].next[idx]; existing != 0) {
        last_ = existing;
    } else {
        Node fresh{};
        fresh.len = nodes_[static_cast<std::size_t>(x)].len + 2;
        if (fresh.len == 1) {
            fresh.link = 1;
        } else {
            const int y = extend_from(nodes_[static_cast<std::size_t>(x)].link, letter);
            fresh.link = nodes_[static_cast<std::size_t>(y)].next[idx];
        }
        fresh.depth = nodes_[static_cast<std::size_t>(fresh.link)].depth + 1;
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(fresh);
        // Register only after the suffix link is resolved, so the lookup above
        // can never return the node being created.
        nodes_[static_cast<std::size_t>(x)].next[idx] = id;
        last_ = id;
    }
    nodes_[static_cast<std::size_t>(last_)].ends_here += 1;
    counts_.push_back(nodes_[static_cast<std::size_t>(last_)].depth);
    node_at_.push_back(last_);
}

void PalTree::build(std::string_view text) {
    for (char letter : text)
        push(letter);
}

std::vector<std::size_t> PalTree::palindromic_suffix_lengths(std::size_t pos) const {
    std::vector<std::size_t> lengths;
    int v = node_at_.at(pos - 1);
    while (nodes_[static_cast<std::size_t>(v)].len > 0) {
        lengths.push_back(static_cast<std::size_t>(nodes_[static_cast<std::size_t>(v)].len));
        v = nodes_[static_cast<std::size_t>(v)].link;
    }
    return lengths;
}

std::vector<PalTree::NodeCount> PalTree::occurrence_counts() const {
    std::vector<std::uint64_t> occ(nodes_.size());
    for (std::size_t v = 0; v < nodes_.size(); ++v)
        occ[v] = nodes_[v].ends_here;
    // A node's palindrome also occurs wherever a longer palindrome that links
    // to it ends; nodes are created in link-topological order, so one reverse
    // sweep accumulates whole subtrees.
    for (std::size_t v = nodes_.size(); v-- > 2;)
        occ[static_cast<std::size_t>(nodes_[v].link)] += occ[v];
    std::vector<NodeCount> result;
    result.reserve(nodes_.size() - 2);
    for (std::size_t v = 2; v < nodes_.size(); ++v)
        result.push_back(NodeCount{static_cast<std::size_t>(nodes_[v].len), occ[v]});
    return result;
}

BigInt PalTree::total_occurrences() const {
    BigInt total = 0;
    for (const NodeCount& node : occurrence_counts())
        total += node.occurrences;
    return total;
}

CountSlice pal_suffix_counts(const Word& w) {
    PalTree tree;
    tree.build(w.view());
    CountSlice slice;
    slice.start = 1;
    slice.values.assign(tree.suffix_counts().begin(), tree.suffix_counts().end());
    return slice;
}

std::vector<std::uint64_t> pal_suffix_counts_naive(const Word& w) {
    const std::string_view s = w.view();
    const std::size_t n = s.size();
    std::vector<std::uint64_t> counts(n, 0);
    for (std::size_t center = 0; center < n; ++center) {
        for (std::size_t r = 0; center >= r && center + r < n; ++r) {
            if (s[center - r] != s[center + r])
                break;
            counts[center + r] += 1;  // odd length 2r + 1 ending here
        }
        for (std::size_t r = 0; center >= r && center + 1 + r < n; ++r) {
            if (s[center - r] != s[center + 1 + r])
                break;
            counts[center + 1 + r] += 1;  // even length 2r + 2 ending here
        }
    }
    return counts;
}

Occurrences occurrences(const Word& factor, const Word& prefix) {
    if (factor.empty())
        throw std::domain_error("occurrences of the empty word are not defined");
    Occurrences found{factor, {}};
    const std::string_view haystack = prefix.view();
    for (std::size_t from = 0;;) {
        const std::size_t at = haystack.find(factor.view(), from);
        if (at == std::string_view::npos)
            break;
        found.last_positions.emplace_back(static_cast<unsigned long>(at + factor.size()));
        from = at + 1;
    }
    return found;
}

std::vector<Gap> gap_sequence(const Word& factor, const Word& prefix) {
    const Occurrences found = occurrences(factor, prefix);
    if (found.last_positions.size() < 2)
        throw std::domain_error("gap sequence needs at least two occurrences");
    std::vector<Gap> gaps;
    gaps.reserve(found.last_positions.size() - 1);
    for (std::size_t j = 0; j + 1 < found.last_positions.size(); ++j) {
        const auto end_here = static_cast<std::size_t>(found.last_positions[j].get_ui());
        const auto end_next = static_cast<std::size_t>(found.last_positions[j + 1].get_ui());
        const std::size_t begin_next = end_next - factor.size() + 1;  // 1-based
        Gap gap;
        if (begin_next == end_here + 1) {
            gap.kind = Gap::Kind::empty;
        } else if (begin_next > end_here + 1) {
            gap.kind = Gap::Kind::plain;
            gap.content = prefix.slice(end_here + 1, begin_next - 1);
        } else {
            gap.kind = Gap::Kind::inverse;
            gap.content = prefix.slice(begin_next, end_here);
        }
        gaps.push_back(std::move(gap));
    }
    return gaps;
}

bool gap_projection_check(const Word& factor, Family family, std::size_t depth) {
    if (depth == 0)
        return true;
    // Grow the prefix until it holds depth + 1 occurrences (depth gaps).
    BigInt span = BigInt(32) * static_cast<unsigned long>(factor.size()) + 64;
    Word prefix;
    std::vector<Gap> gaps;
    while (true) {
        prefix = family == Family::fib ? seq::fib_prefix(span) : seq::trib_prefix(span);
        const Occurrences found = occurrences(factor, prefix);
        if (found.last_positions.empty())
            throw not_a_factor_error("not a factor of the " + to_string(family) +
                                     " word: " + factor.str());
        if (found.last_positions.size() >= depth + 1) {
            gaps = gap_sequence(factor, prefix);
            gaps.resize(depth);
            break;
        }
        if (span > 1'000'000'000)
            throw std::domain_error("gap projection depth needs an unreasonably long prefix");
        span *= 2;
    }
    std::vector<Gap> seen;
    std::string relabeled;
    relabeled.reserve(depth);
    for (const Gap& gap : gaps) {
        std::size_t idx = 0;
        while (idx < seen.size() && !(seen[idx] == gap))
            ++idx;
        if (idx == seen.size())
            seen.push_back(gap);
        if (idx > 2)
            return false;  // more distinct gaps than letters
        relabeled.push_back(static_cast<char>('a' + idx));
    }
    const Word expected =
        family == Family::fib ? seq::fib_prefix(BigInt(static_cast<unsigned long>(depth)))
                              : seq::trib_prefix(BigInt(static_cast<unsigned long>(depth)));
    return relabeled == expected.view();
}

BigInt distinct_palindromes(const Word& w) {
    PalTree tree;
    tree.build(w.view());
    return BigInt(static_cast<unsigned long>(tree.distinct()));
}

}  // namespace palcount::oracle

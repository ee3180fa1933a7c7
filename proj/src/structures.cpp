#include "palcount/structures.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "palcount/output.hpp"
#include "palcount/sequences.hpp"

namespace palcount::structures {

namespace {

namespace seq = palcount::sequences;

void require(bool cond, const char* message) {
    if (!cond)
        throw std::domain_error(message);
}

BigInt interval_size(const kernels::KernelId& id) {
    return id.family == Family::fib ? seq::fib(id.order + 1) : seq::trib(id.order - 1);
}

std::string kernel_label(const kernels::KernelId& id) {
    return "K_" + std::to_string(id.order);
}

}  // namespace

OccInterval interval(const kernels::KernelId& id, const BigInt& p) {
    require(p >= 1, "occurrence index must be >= 1");
    const BigInt lo = id.family == Family::fib ? kernels::pos_kernel_fib(id.order, p)
                                               : kernels::pos_kernel_trib(id.order, p);
    return OccInterval{id, p, lo, lo + interval_size(id) - 1};
}

std::vector<OccInterval> decompose(const OccInterval& iv) {
    const Family family = iv.kernel.family;
    const long m = iv.kernel.order;
    const BigInt& p = iv.p;
    std::vector<OccInterval> children;
    if (family == Family::fib) {
        const BigInt after_a = kernels::pos_kernel_fib(-1, p) + 1;
        if (m == -1)
            return children;
        if (m == 0) {
            children.push_back(interval({family, -1}, after_a));
            return children;
        }
        const BigInt after_b = kernels::pos_kernel_fib(0, p) + 1;
        children.push_back(interval({family, m - 2}, after_b));
        children.push_back(interval({family, m - 1}, after_a));
        return children;
    }
    if (m == 1)
        return children;
    const BigInt after_a = kernels::pos_kernel_trib(1, p) + 1;
    if (m == 2) {
        children.push_back(interval({family, 1}, after_a));
        return children;
    }
    const BigInt after_b = kernels::pos_kernel_trib(2, p) + 1;
    if (m == 3) {
        children.push_back(interval({family, 1}, after_b));
        children.push_back(interval({family, 2}, after_a));
        return children;
    }
    const BigInt after_c = kernels::pos_kernel_trib(3, p) + 1;
    children.push_back(interval({family, m - 3}, after_c));
    children.push_back(interval({family, m - 2}, after_b));
    children.push_back(interval({family, m - 1}, after_a));
    return children;
}

bool is_palprefix(Family family, const BigInt& n) {
    require(n >= 1, "prefix length must be >= 1");
    if (family == Family::fib) {
        for (long m = 2; seq::fib(m) <= n + 2; ++m)
            if (seq::fib(m) == n + 2)
                return true;
        return false;
    }
    for (long m = 1; seq::kernel_number(m + 4) <= n + 2; ++m)
        if (seq::kernel_number(m + 4) == n + 2)
            return true;
    return false;
}

std::string to_string(Cylinder c) {
    switch (c) {
        case Cylinder::a: return "a";
        case Cylinder::b: return "b";
        case Cylinder::c: return "c";
        default: return "aa";
    }
}

Cylinder cylinder_of(const Word& w, Family family) {
    require(!w.empty() && w.is_palindrome(), "cylinders classify nonempty palindromes");
    if (!kernels::is_factor(w, family))
        throw not_a_factor_error("not a factor of the " + palcount::to_string(family) +
                                 " word: " + w.str());
    if (w.size() % 2 == 0) {
        if (w.at(w.size() / 2) != 'a' || w.at(w.size() / 2 + 1) != 'a')
            throw invariant_error("even palindromic factor not centered on aa: " + w.str());
        return Cylinder::aa;
    }
    switch (w.at(w.size() / 2 + 1)) {
        case 'a': return Cylinder::a;
        case 'b': return Cylinder::b;
        default: return Cylinder::c;
    }
}

long pal_count_by_length(Family family, const BigInt& n) {
    require(n >= 1, "palindrome length must be >= 1");
    long count = 0;
    if (family == Family::fib) {
        // Palindromes with kernel order m have lengths f_{m+3} - 2i for
        // offsets i in [1, f_{m+1}]; the shortest is f_m.
        for (long m = -1; seq::fib(m) <= n; ++m) {
            const BigInt twice_i = seq::fib(m + 3) - n;
            if (twice_i % 2 != 0)
                continue;
            const BigInt i = twice_i / 2;
            if (i >= 1 && i <= seq::fib(m + 1))
                ++count;
        }
        return count;
    }
    // Trib lengths are k_{m+4} - 2i for i in [1, t_{m-1}]; the shortest is
    // k_{m+4} - 2 t_{m-1}, nondecreasing in m.
    for (long m = 1; seq::kernel_number(m + 4) - 2 * seq::trib(m - 1) <= n; ++m) {
        const BigInt twice_i = seq::kernel_number(m + 4) - n;
        if (twice_i % 2 != 0)
            continue;
        const BigInt i = twice_i / 2;
        if (i >= 1 && i <= seq::trib(m - 1))
            ++count;
    }
    return count;
}

OccInterval chain(Family family, long m) {
    return interval({family, m}, 1);
}

namespace {

struct TreeNode {
    OccInterval iv;
    std::vector<std::size_t> children;  // indices into the node pool
};

// Expands the decomposition tree breadth-first to `depth` levels (-1 = all the
// way down) and returns the node pool; index 0 is the root.
std::vector<TreeNode> expand(Family family, long m, const BigInt& p, long depth) {
    std::vector<TreeNode> pool;
    pool.push_back(TreeNode{interval({family, m}, p), {}});
    std::deque<std::pair<std::size_t, long>> frontier{{0, 0}};  // node, level
    while (!frontier.empty()) {
        const auto [at, level] = frontier.front();
        frontier.pop_front();
        if (depth >= 0 && level >= depth)
            continue;
        for (const OccInterval& child : decompose(pool[at].iv)) {
            if (pool.size() >= export_node_budget)
                throw std::domain_error("decomposition tree exceeds the node budget");
            pool.push_back(TreeNode{child, {}});
            pool[at].children.push_back(pool.size() - 1);
            frontier.emplace_back(pool.size() - 1, level + 1);
        }
    }
    return pool;
}

void json_node(const std::vector<TreeNode>& pool, std::size_t at, std::ostringstream& out) {
    const OccInterval& iv = pool[at].iv;
    out << "{\"kernel\":\"" << kernel_label(iv.kernel) << "\",\"p\":\"" << iv.p.get_str()
        << "\",\"lo\":\"" << iv.lo.get_str() << "\",\"hi\":\"" << iv.hi.get_str()
        << "\",\"children\":[";
    bool first = true;
    for (std::size_t child : pool[at].children) {
        if (!first)
            out << ',';
        first = false;
        json_node(pool, child, out);
    }
    out << "]}";
}

}  // namespace

std::string export_edges(Family family, long m, const BigInt& p, long depth) {
    const std::vector<TreeNode> pool = expand(family, m, p, depth);
    output::RecordTable table({"parent_kernel", "parent_p", "parent_lo", "parent_hi",
                               "child_kernel", "child_p", "child_lo", "child_hi"});
    for (const TreeNode& node : pool) {
        for (std::size_t at : node.children) {
            const OccInterval& child = pool[at].iv;
            table.add_row({output::str_cell(kernel_label(node.iv.kernel)),
                           output::str_cell(node.iv.p.get_str()),
                           output::str_cell(node.iv.lo.get_str()),
                           output::str_cell(node.iv.hi.get_str()),
                           output::str_cell(kernel_label(child.kernel)),
                           output::str_cell(child.p.get_str()),
                           output::str_cell(child.lo.get_str()),
                           output::str_cell(child.hi.get_str())});
        }
    }
    return table.to_csv();
}

std::string export_json(Family family, long m, const BigInt& p, long depth) {
    const std::vector<TreeNode> pool = expand(family, m, p, depth);
    std::ostringstream out;
    json_node(pool, 0, out);
    out << '\n';
    return out.str();
}

}  // namespace palcount::structures

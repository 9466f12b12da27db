#include "flex/list_color.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "flex/plane_graph.hpp"

namespace flex {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists))
{
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

ListAssignment ListAssignment::uniform(int vertex_count, std::vector<Color> list)
{
    return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(vertex_count), list));
}

void ListAssignment::set(Vertex v, std::vector<Color> list)
{
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    lists_[v] = std::move(list);
}

bool ListAssignment::contains(Vertex v, Color c) const
{
    return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

std::vector<Color> ListAssignment::palette() const
{
    std::vector<Color> all;
    for (const auto& l : lists_)
        all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool is_proper_l_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi)
{
    if (static_cast<int>(phi.size()) != g.vertex_count() || lists.vertex_count() != g.vertex_count())
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!lists.contains(v, phi[v]))
            return false;
        for (Vertex w : g.neighbors(v))
            if (phi[w] == phi[v])
                return false;
    }
    return true;
}

namespace {

template <typename Set>
struct SetOps;

template <>
struct SetOps<std::uint64_t> {
    static std::uint64_t empty(std::size_t) { return 0; }
    static void insert(std::uint64_t& s, std::size_t i) { s |= std::uint64_t{1} << i; }
    static void erase(std::uint64_t& s, std::size_t i) { s &= ~(std::uint64_t{1} << i); }
    static int count(std::uint64_t s) { return std::popcount(s); }
    template <typename F>
    static bool for_each(std::uint64_t s, F&& f)
    {
        while (s) {
            if (f(static_cast<std::size_t>(std::countr_zero(s))))
                return true;
            s &= s - 1;
        }
        return false;
    }
};

template <>
struct SetOps<boost::dynamic_bitset<>> {
    using S = boost::dynamic_bitset<>;
    static S empty(std::size_t n) { return S(n); }
    static void insert(S& s, std::size_t i) { s.set(i); }
    static void erase(S& s, std::size_t i) { s.reset(i); }
    static int count(const S& s) { return static_cast<int>(s.count()); }
    template <typename F>
    static bool for_each(const S& s, F&& f)
    {
        for (auto i = s.find_first(); i != S::npos; i = s.find_next(i))
            if (f(i))
                return true;
        return false;
    }
};

template <typename Set>
class Backtracker {
public:
    Backtracker(const Graph& g, std::vector<Set> lists) : g_(g), lists_(std::move(lists)), color_(g.vertex_count(), -1)
    {
    }

    bool run() { return solve(g_.vertex_count()); }
    const std::vector<int>& colors() const { return color_; }

private:
    using Ops = SetOps<Set>;

    Set available(Vertex v) const
    {
        Set a = lists_[v];
        for (Vertex w : g_.neighbors(v))
            if (color_[w] >= 0)
                Ops::erase(a, static_cast<std::size_t>(color_[w]));
        return a;
    }

    bool solve(int remaining)
    {
        if (remaining == 0)
            return true;
        Vertex best = -1;
        int best_count = 0;
        Set best_set{};
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v] >= 0)
                continue;
            Set a = available(v);
            const int c = Ops::count(a);
            if (c == 0)
                return false;
            if (best < 0 || c < best_count) {
                best = v;
                best_count = c;
                best_set = std::move(a);
            }
        }
        return Ops::for_each(best_set, [&](std::size_t c) {
            color_[best] = static_cast<int>(c);
            if (solve(remaining - 1))
                return true;
            color_[best] = -1;
            return false;
        });
    }

    const Graph& g_;
    std::vector<Set> lists_;
    std::vector<int> color_;
};

template <typename Set>
std::optional<Coloring> solve_with(const Graph& g, const ListAssignment& lists, const std::vector<Color>& palette)
{
    using Ops = SetOps<Set>;
    std::vector<Set> sets;
    sets.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Set s = Ops::empty(palette.size());
        for (Color c : lists[v])
            Ops::insert(s, static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
        sets.push_back(std::move(s));
    }
    Backtracker<Set> bt(g, std::move(sets));
    if (!bt.run())
        return std::nullopt;
    Coloring phi(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        phi[v] = palette[bt.colors()[v]];
    return phi;
}

}  // namespace

std::optional<Coloring> find_l_coloring(const Graph& g, const ListAssignment& lists)
{
    if (lists.vertex_count() != g.vertex_count())
        throw ColoringError(ColoringErrorKind::ListMismatch, "list assignment does not cover the graph");
    const auto palette = lists.palette();
    if (palette.size() <= 64)
        return solve_with<std::uint64_t>(g, lists, palette);
    return solve_with<boost::dynamic_bitset<>>(g, lists, palette);
}

std::optional<Coloring> greedy_color_in_order(const Graph& g, const ListAssignment& lists,
                                              std::span<const Vertex> order,
                                              std::span<const std::pair<Vertex, Color>> fixed)
{
    const int n = g.vertex_count();
    if (lists.vertex_count() != n)
        throw ColoringError(ColoringErrorKind::ListMismatch, "list assignment does not cover the graph");
    {
        std::vector<Vertex> sorted(order.begin(), order.end());
        std::sort(sorted.begin(), sorted.end());
        bool perm = static_cast<int>(sorted.size()) == n;
        for (int i = 0; perm && i < n; ++i)
            perm = sorted[i] == i;
        if (!perm)
            throw ColoringError(ColoringErrorKind::BadOrder, "order is not a permutation of the vertices");
    }

    Coloring phi(static_cast<std::size_t>(n), -1);
    std::vector<char> is_fixed(static_cast<std::size_t>(n), 0);
    for (auto [v, c] : fixed) {
        if (v < 0 || v >= n || is_fixed[v])
            throw ColoringError(ColoringErrorKind::FixedConflict, "bad or repeated fixed vertex");
        if (!lists.contains(v, c))
            throw ColoringError(ColoringErrorKind::FixedConflict,
                                "fixed color " + std::to_string(c) + " not in list of " + std::to_string(v));
        is_fixed[v] = 1;
        phi[v] = c;
    }
    for (auto [v, c] : fixed)
        for (Vertex w : g.neighbors(v))
            if (is_fixed[w] && phi[w] == c)
                throw ColoringError(ColoringErrorKind::FixedConflict,
                                    "fixed neighbors " + std::to_string(v) + " and " + std::to_string(w) +
                                        " share color " + std::to_string(c));

    for (Vertex v : order) {
        if (is_fixed[v])
            continue;
        Color chosen = -1;
        for (Color c : lists[v]) {
            bool clash = false;
            for (Vertex w : g.neighbors(v))
                if (phi[w] == c) {
                    clash = true;
                    break;
                }
            if (!clash) {
                chosen = c;
                break;
            }
        }
        if (chosen < 0)
            return std::nullopt;
        phi[v] = chosen;
    }
    return phi;
}

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Vertex>> blocks;
    int timer = 0;

    auto pop_block = [&](Edge until) {
        std::vector<Vertex> block;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == until)
                break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    };

    // Iterative DFS: frame = (vertex, parent, next neighbor index).
    struct Frame {
        Vertex v, parent;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back({root});
            continue;
        }
        std::vector<Frame> frames{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (disc[w] < 0) {
                    stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const Vertex v = f.v, parent = f.parent;
                frames.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent])
                        pop_block({parent, v});
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

bool is_complete_or_odd_cycle(const Graph& g, const std::vector<Vertex>& block)
{
    const int k = static_cast<int>(block.size());
    int edges = 0;
    std::vector<int> deg(block.size(), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(block[i], block[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges == k * (k - 1) / 2)
        return true;
    const bool cycle = edges == k && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    return cycle && k % 2 == 1;
}

}  // namespace

bool degree_colorable_guarantee(const Graph& g, std::span<const int> list_sizes)
{
    if (!g.connected())
        throw std::invalid_argument("degree_colorable_guarantee needs a connected graph");
    bool slack = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (list_sizes[v] < g.degree(v))
            return false;
        if (list_sizes[v] > g.degree(v))
            slack = true;
    }
    if (slack)
        return true;
    for (const auto& block : biconnected_blocks(g))
        if (!is_complete_or_odd_cycle(g, block))
            return true;
    return false;
}

bool degree_colorable_guarantee(const Graph& g, const ListAssignment& lists)
{
    std::vector<int> sizes;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        sizes.push_back(lists.size_of(v));
    return degree_colorable_guarantee(g, sizes);
}

namespace {

bool mask_solve(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> lists, std::span<int> color,
                std::uint64_t assigned, int remaining)
{
    if (remaining == 0)
        return true;
    const int n = static_cast<int>(adj.size());
    int best = -1;
    int best_count = 65;
    std::uint64_t best_avail = 0;
    for (int v = 0; v < n; ++v) {
        if (assigned >> v & 1)
            continue;
        std::uint64_t blocked = 0;
        for (std::uint64_t nb = adj[v] & assigned; nb; nb &= nb - 1)
            blocked |= std::uint64_t{1} << color[std::countr_zero(nb)];
        const std::uint64_t avail = lists[v] & ~blocked;
        const int c = std::popcount(avail);
        if (c == 0)
            return false;
        if (c < best_count) {
            best = v;
            best_count = c;
            best_avail = avail;
        }
    }
    for (std::uint64_t a = best_avail; a; a &= a - 1) {
        color[best] = std::countr_zero(a);
        if (mask_solve(adj, lists, color, assigned | (std::uint64_t{1} << best), remaining - 1))
            return true;
    }
    color[best] = -1;
    return false;
}

}  // namespace

bool mask_colorable(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> lists,
                    std::span<int> coloring_out)
{
    const int n = static_cast<int>(adjacency.size());
    int scratch[64];
    std::span<int> color = coloring_out.empty() ? std::span<int>(scratch, static_cast<std::size_t>(n)) : coloring_out;
    std::fill(color.begin(), color.end(), -1);
    return mask_solve(adjacency, lists, color, 0, n);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    if (g.vertex_count() > 64)
        throw std::invalid_argument("adjacency_masks needs at most 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.neighbors(v))
            adj[v] |= std::uint64_t{1} << w;
    return adj;
}

ListAssignment parse_lists(std::istream& in, int vertex_count)
{
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(vertex_count));
    std::vector<char> given(static_cast<std::size_t>(vertex_count), 0);
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        if (!header) {
            std::string version;
            if (word != "lists" || !(ls >> version) || version != "v1")
                throw ParseError(lineno, "expected header 'lists v1'");
            header = true;
            continue;
        }
        if (word != "L")
            throw ParseError(lineno, "expected 'L <v>: <colors>'");
        std::string rest;
        std::getline(ls, rest);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "missing ':'");
        std::istringstream vs(rest.substr(0, colon));
        long long v = -1;
        std::string extra;
        if (!(vs >> v) || (vs >> extra) || v < 0 || v >= vertex_count)
            throw ParseError(lineno, "bad or out-of-range vertex id");
        if (given[v])
            throw ParseError(lineno, "duplicate list for vertex " + std::to_string(v));
        given[v] = 1;
        std::istringstream cs(rest.substr(colon + 1));
        std::string tok;
        while (cs >> tok) {
            std::size_t used = 0;
            long long c = -1;
            try {
                c = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || c < 0 || c > 1'000'000'000)
                throw ParseError(lineno, "bad color '" + tok + "'");
            if (std::find(lists[v].begin(), lists[v].end(), c) != lists[v].end())
                throw ParseError(lineno, "repeated color " + tok);
            lists[v].push_back(static_cast<Color>(c));
        }
    }
    if (!header)
        throw ParseError(0, "missing header 'lists v1'");
    for (int v = 0; v < vertex_count; ++v)
        if (!given[v])
            throw ParseError(0, "no list for vertex " + std::to_string(v));
    return ListAssignment(std::move(lists));
}

ListAssignment parse_lists(std::string_view text, int vertex_count)
{
    std::istringstream in{std::string(text)};
    return parse_lists(in, vertex_count);
}

std::string format_lists(const ListAssignment& lists)
{
    std::ostringstream out;
    out << "lists v1\n";
    for (Vertex v = 0; v < lists.vertex_count(); ++v) {
        out << "L " << v << ":";
        for (Color c : lists[v])
            out << " " << c;
        out << "\n";
    }
    return out.str();
}

}  // namespace flex

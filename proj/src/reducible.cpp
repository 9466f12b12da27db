#include "flex/reducible.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace flex {

namespace {

struct Split {
    std::vector<Vertex> inner;  // H \ B, in the order of h
};

Split split_boundary(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b)
{
    std::vector<Vertex> hs(h.begin(), h.end());
    std::sort(hs.begin(), hs.end());
    if (std::adjacent_find(hs.begin(), hs.end()) != hs.end())
        throw ReducibilityError(ReducibilityErrorKind::BadSubgraph, "repeated vertex in H");
    for (Vertex v : hs)
        if (v < 0 || v >= g.vertex_count())
            throw ReducibilityError(ReducibilityErrorKind::BadSubgraph, "vertex " + std::to_string(v) + " not in G");
    std::vector<Vertex> bs(b.begin(), b.end());
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    for (Vertex v : bs)
        if (!std::binary_search(hs.begin(), hs.end(), v))
            throw ReducibilityError(ReducibilityErrorKind::BoundaryNotProper, "boundary vertex outside H");
    if (bs.size() >= hs.size())
        throw ReducibilityError(ReducibilityErrorKind::BoundaryNotProper, "boundary must be a proper subset of H");
    Split s;
    for (Vertex v : h)
        if (!std::binary_search(bs.begin(), bs.end(), v))
            s.inner.push_back(v);
    return s;
}

class Enumerator {
public:
    Enumerator(std::span<const int> sizes, bool intersecting, const std::function<bool(const ListSystem&)>& visit)
        : n_(static_cast<int>(sizes.size())), need_(sizes.begin(), sizes.end()), intersecting_(intersecting),
          visit_(visit)
    {
        if (n_ > 16)
            throw std::invalid_argument("list system enumeration supports at most 16 vertices");
        for (int s : sizes)
            if (s < 0)
                throw std::invalid_argument("negative list size");
        if (std::accumulate(sizes.begin(), sizes.end(), 0) > 64)
            throw std::invalid_argument("list system enumeration supports at most 64 colors");
        sys_.vertex_count = n_;
        sys_.masks.assign(static_cast<std::size_t>(n_), 0);
    }

    std::uint64_t run()
    {
        rec(~std::uint32_t{0});
        return count_;
    }

private:
    // Keys put vertex 0 in the most significant position; types are emitted
    // in non-increasing key order, so leaders (lowest member) never decrease.
    std::uint32_t key_bit(int v) const { return std::uint32_t{1} << (n_ - 1 - v); }

    bool rec(std::uint32_t max_key)
    {
        int u = 0;
        while (u < n_ && need_[u] == 0)
            ++u;
        if (u == n_) {
            ++count_;
            return visit_(sys_);
        }
        std::uint32_t rest_key = 0;
        for (int w = u + 1; w < n_; ++w)
            if (need_[w] > 0)
                rest_key |= key_bit(w);
        const std::uint32_t lead = key_bit(u);
        for (std::uint32_t s = rest_key;; s = (s - 1) & rest_key) {
            const std::uint32_t key = lead | s;
            if (key <= max_key) {
                std::uint32_t type = 0;
                for (int w = 0; w < n_; ++w)
                    if (key & key_bit(w))
                        type |= std::uint32_t{1} << w;
                if (!intersecting_ || std::all_of(sys_.types.begin(), sys_.types.end(),
                                                  [type](std::uint32_t t) { return (t & type) != 0; })) {
                    push(type);
                    const bool go_on = rec(key);
                    pop(type);
                    if (!go_on)
                        return false;
                }
            }
            if (s == 0)
                break;
        }
        return true;
    }

    void push(std::uint32_t type)
    {
        const std::uint64_t bit = std::uint64_t{1} << sys_.types.size();
        for (int w = 0; w < n_; ++w)
            if (type >> w & 1) {
                --need_[w];
                sys_.masks[w] |= bit;
            }
        sys_.types.push_back(type);
    }

    void pop(std::uint32_t type)
    {
        sys_.types.pop_back();
        const std::uint64_t bit = std::uint64_t{1} << sys_.types.size();
        for (int w = 0; w < n_; ++w)
            if (type >> w & 1) {
                ++need_[w];
                sys_.masks[w] &= ~bit;
            }
    }

    int n_;
    std::vector<int> need_;
    bool intersecting_;
    const std::function<bool(const ListSystem&)>& visit_;
    ListSystem sys_;
    std::uint64_t count_ = 0;
};

ListAssignment lists_from_masks(std::span<const std::uint64_t> masks)
{
    std::vector<std::vector<Color>> lists(masks.size());
    for (std::size_t v = 0; v < masks.size(); ++v)
        for (int c = 0; c < 64; ++c)
            if (masks[v] >> c & 1)
                lists[v].push_back(c);
    return ListAssignment(std::move(lists));
}

// First system in enumeration order that H - B cannot color, if any.
std::optional<ListAssignment> first_failure(const std::vector<std::uint64_t>& adj, const SizeFunction& sizes,
                                            std::uint64_t& checked)
{
    std::optional<ListAssignment> failure;
    checked += for_each_list_system(sizes, false, [&](const ListSystem& sys) {
        if (mask_colorable(adj, sys.masks))
            return true;
        failure = lists_from_masks(sys.masks);
        return false;
    });
    return failure;
}

}  // namespace

SizeFunction residual_sizes(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k)
{
    const Split s = split_boundary(g, h, b);
    const Graph inner = g.induced(s.inner);
    SizeFunction sizes;
    for (std::size_t i = 0; i < s.inner.size(); ++i) {
        const int size = k - g.degree(s.inner[i]) + inner.degree(static_cast<Vertex>(i));
        if (size < 0)
            throw ReducibilityError(ReducibilityErrorKind::NegativeResidual,
                                    "residual size " + std::to_string(size) + " at vertex " +
                                        std::to_string(s.inner[i]));
        sizes.push_back(size);
    }
    return sizes;
}

SizeFunction lower_at(const SizeFunction& sizes, int v)
{
    SizeFunction out = sizes;
    out.at(static_cast<std::size_t>(v)) = 1;
    return out;
}

SizeFunction subtract_indicator(const SizeFunction& sizes, std::span<const int> s)
{
    SizeFunction out = sizes;
    for (int v : s) {
        // An emptied list can never be colored, so it is rejected like a
        // negative one.
        if (--out.at(static_cast<std::size_t>(v)) < 1)
            throw ReducibilityError(ReducibilityErrorKind::NegativeResidual,
                                    "list size would drop to zero at position " + std::to_string(v));
    }
    return out;
}

ListAssignment ListSystem::to_lists() const
{
    return lists_from_masks(masks);
}

std::uint64_t for_each_list_system(std::span<const int> sizes, bool intersecting_only,
                                   const std::function<bool(const ListSystem&)>& visit)
{
    return Enumerator(sizes, intersecting_only, visit).run();
}

std::uint64_t count_list_systems(std::span<const int> sizes, bool intersecting_only)
{
    return for_each_list_system(sizes, intersecting_only, [](const ListSystem&) { return true; });
}

std::vector<ListAssignment> enumerate_canonical_list_systems(std::span<const int> sizes)
{
    std::vector<ListAssignment> out;
    for_each_list_system(sizes, false, [&](const ListSystem& sys) {
        out.push_back(sys.to_lists());
        return true;
    });
    return out;
}

ReducibilityReport check_fix(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k)
{
    const Split s = split_boundary(g, h, b);
    const SizeFunction sizes = residual_sizes(g, h, b, k);
    const auto adj = adjacency_masks(g.induced(s.inner));
    ReducibilityReport r;
    for (std::size_t i = 0; i < s.inner.size(); ++i) {
        if (auto bad = first_failure(adj, lower_at(sizes, static_cast<int>(i)), r.systems_checked)) {
            r.fix_ok = false;
            r.witness = ReducibilityWitness{ReducibilityWitness::Check::Fix, {s.inner[i]}, std::move(*bad)};
            break;
        }
    }
    return r;
}

ReducibilityReport check_forb(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k,
                              GraphClass c)
{
    const Split s = split_boundary(g, h, b);
    const SizeFunction sizes = residual_sizes(g, h, b, k);
    const Graph inner = g.induced(s.inner);
    const auto adj = adjacency_masks(inner);
    const int m = static_cast<int>(s.inner.size());
    ReducibilityReport r;
    for (int size = 2; size <= std::min(k - 2, m); ++size) {
        // Combinations of positions in lexicographic order.
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (is_forbidding(inner, pick, c)) {
                std::vector<Vertex> where;
                for (int p : pick)
                    where.push_back(s.inner[p]);
                r.forbidding_sets.push_back(where);
                if (auto bad = first_failure(adj, subtract_indicator(sizes, pick), r.systems_checked)) {
                    r.forb_ok = false;
                    r.witness = ReducibilityWitness{ReducibilityWitness::Check::Forb, where, std::move(*bad)};
                    return r;
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return r;
}

ReducibilityReport check_boundary_reducible(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b,
                                            int k, GraphClass c, std::string config_id)
{
    ReducibilityReport r = check_fix(g, h, b, k);
    if (r.fix_ok) {
        ReducibilityReport forb = check_forb(g, h, b, k, c);
        r.forb_ok = forb.forb_ok;
        r.witness = std::move(forb.witness);
        r.systems_checked += forb.systems_checked;
        r.forbidding_sets = std::move(forb.forbidding_sets);
    }
    r.config_id = std::move(config_id);
    return r;
}

const ReducibilityReport& verify_cached(const Graph& g, std::span<const Vertex> h, int k, GraphClass c,
                                        const std::string& config_id)
{
    using Key = std::tuple<std::string, GraphClass, int, std::vector<std::uint64_t>, SizeFunction>;
    static std::mutex mutex;
    static std::map<Key, ReducibilityReport> cache;

    std::vector<Vertex> hv(h.begin(), h.end());
    Key key{config_id, c, k, adjacency_masks(g.induced(hv)), residual_sizes(g, hv, {}, k)};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    // The report depends only on the key: verify on H plus pendant leaves
    // realizing the same degrees, so witnesses carry local ids. A racing
    // duplicate computation is harmless; emplace keeps the first.
    const Graph local = g.induced(hv);
    std::vector<Vertex> ids(hv.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> pendants;
    for (std::size_t i = 0; i < hv.size(); ++i)
        pendants.push_back(g.degree(hv[i]) - local.degree(static_cast<Vertex>(i)));
    const int extra = std::accumulate(pendants.begin(), pendants.end(), 0);
    Graph full(local.vertex_count() + extra);
    for (auto [a, bb] : local.edges())
        full.add_edge(a, bb);
    int next = local.vertex_count();
    for (std::size_t i = 0; i < hv.size(); ++i)
        for (int j = 0; j < pendants[i]; ++j)
            full.add_edge(static_cast<Vertex>(i), next++);
    ReducibilityReport r = check_boundary_reducible(full, ids, {}, k, c, config_id);
    std::lock_guard lock(mutex);
    return cache.emplace(std::move(key), std::move(r)).first->second;
}

ReducibilityReport verify_configuration(std::string_view id, std::span<const int> degrees)
{
    const Pattern& p = configuration(id);
    const std::vector<int> d = degrees.empty() ? canonical_degrees(p) : std::vector<int>(degrees.begin(), degrees.end());
    const Graph host = witness_host(p, d);
    std::vector<Vertex> h(static_cast<std::size_t>(p.vertex_count()));
    std::iota(h.begin(), h.end(), 0);
    return check_boundary_reducible(host, h, {}, 5, configuration_class(id), std::string(id));
}

std::string format_report(const ReducibilityReport& r)
{
    std::ostringstream out;
    if (!r.config_id.empty())
        out << "config " << r.config_id << "\n";
    out << "FIX " << (r.fix_ok ? "ok" : "fail") << "\n";
    out << "FORB " << (r.forb_ok ? "ok" : "fail") << "\n";
    out << "systems " << r.systems_checked << "\n";
    out << "forbidding-sets " << r.forbidding_sets.size() << "\n";
    if (r.witness) {
        out << "witness " << (r.witness->check == ReducibilityWitness::Check::Fix ? "fix" : "forb");
        for (Vertex v : r.witness->where)
            out << " " << v;
        out << "\n" << format_lists(r.witness->system);
    }
    return out.str();
}

}  // namespace flex

#include "kecs/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"

namespace kecs {

namespace {

class Search {
public:
    Search(const MultiGraph& g, int k) : g_(g), k_(k), used_(g.num_vertices()), undecided_(g.num_vertices(), 0)
    {
        const int m = g.num_edges();
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), 0);
        auto weight = [&](EdgeId e) { return g.degree(g.endpoints(e).u) + g.degree(g.endpoints(e).v); };
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
        current_.assign(m, kUncolored);
        best_.assign(m, kUncolored);
        for (const Endpoints& e : g.edges()) {
            ++undecided_[e.u];
            ++undecided_[e.v];
        }
        ceiling_ = 0;
        for (const auto& comp : component_vertices(g)) {
            int edges = 0;
            for (VertexId v : comp)
                edges += g.degree(v);
            ceiling_ += std::min(edges / 2, k * (static_cast<int>(comp.size()) / 2));
        }
    }

    void seed_greedy()
    {
        std::vector<ColorSet> used(g_.num_vertices());
        std::vector<Color> col(g_.num_edges(), kUncolored);
        int count = 0;
        for (EdgeId e : order_) {
            const Endpoints ep = g_.endpoints(e);
            const ColorSet avail = ColorSet::palette(k_) - used[ep.u] - used[ep.v];
            if (avail.empty())
                continue;
            col[e] = avail.lowest();
            used[ep.u].insert(col[e]);
            used[ep.v].insert(col[e]);
            ++count;
        }
        best_ = col;
        best_count_ = count;
    }

    void run()
    {
        if (best_count_ < ceiling_)
            dfs(0, 0, 0);
    }

    int best_count() const { return best_count_; }
    const std::vector<Color>& best() const { return best_; }
    std::int64_t nodes() const { return nodes_; }

private:
    int upper_bound(std::size_t pos, int colored) const
    {
        // Undecided edges that could still take some color.
        int open = 0;
        for (std::size_t i = pos; i < order_.size(); ++i) {
            const Endpoints ep = g_.endpoints(order_[i]);
            if (!(ColorSet::palette(k_) - used_[ep.u] - used_[ep.v]).empty())
                ++open;
        }
        int bound = colored + open;
        if (bound <= best_count_)
            return bound;
        // Vertex capacity: each vertex can absorb at most its free count.
        int cap = 0;
        int per_color = 0;
        for (VertexId v = 0; v < g_.num_vertices(); ++v) {
            if (undecided_[v] == 0)
                continue;
            cap += std::min(undecided_[v], k_ - used_[v].size());
        }
        bound = std::min(bound, colored + cap / 2);
        if (bound <= best_count_)
            return bound;
        // Each color class is a matching on the vertices that still miss it.
        for (Color c = 1; c <= k_; ++c) {
            int holders = 0;
            for (VertexId v = 0; v < g_.num_vertices(); ++v)
                if (undecided_[v] > 0 && !used_[v].contains(c))
                    ++holders;
            per_color += holders / 2;
        }
        return std::min(bound, colored + per_color);
    }

    bool dfs(std::size_t pos, int colored, int max_color)
    {
        ++nodes_;
        if (pos == order_.size()) {
            if (colored > best_count_) {
                best_count_ = colored;
                best_ = current_;
            }
            return best_count_ >= ceiling_;
        }
        if (upper_bound(pos, colored) <= best_count_)
            return false;
        const EdgeId e = order_[pos];
        const Endpoints ep = g_.endpoints(e);
        --undecided_[ep.u];
        --undecided_[ep.v];
        const ColorSet avail = ColorSet::palette(k_) - used_[ep.u] - used_[ep.v];
        const int limit = std::min(k_, max_color + 1);
        bool done = false;
        for (Color c = 1; c <= limit && !done; ++c) {
            if (!avail.contains(c))
                continue;
            current_[e] = c;
            used_[ep.u].insert(c);
            used_[ep.v].insert(c);
            done = dfs(pos + 1, colored + 1, std::max(max_color, c));
            used_[ep.u].erase(c);
            used_[ep.v].erase(c);
            current_[e] = kUncolored;
        }
        if (!done)
            done = dfs(pos + 1, colored, max_color);
        ++undecided_[ep.u];
        ++undecided_[ep.v];
        return done;
    }

    const MultiGraph& g_;
    int k_;
    std::vector<EdgeId> order_;
    std::vector<ColorSet> used_;
    std::vector<int> undecided_;
    std::vector<Color> current_;
    std::vector<Color> best_;
    int best_count_ = 0;
    int ceiling_ = 0;
    std::int64_t nodes_ = 0;
};

} // namespace

OracleResult exact_max_ecs(const MultiGraph& g, int k, int cap)
{
    if (g.num_edges() > cap)
        throw Error(Errc::InstanceTooLarge,
                    std::to_string(g.num_edges()) + " edges exceed the oracle cap of " + std::to_string(cap));
    if (k < 1 || k > kMaxPalette)
        throw Error(Errc::BadDimensions, "palette size " + std::to_string(k));
    Search s(g, k);
    s.seed_greedy();
    s.run();
    OracleResult r;
    r.optimum = s.best_count();
    r.witness = s.best();
    r.nodes = s.nodes();
    r.gamma = g.num_edges() == 0 ? Rational(1) : Rational(r.optimum, g.num_edges());
    return r;
}

Rational gamma_k(const MultiGraph& g, int k, int cap) { return exact_max_ecs(g, k, cap).gamma; }

} // namespace kecs

#include "kecs/blossom.hpp"

#include <algorithm>
#include <limits>

#include "kecs/error.hpp"

namespace kecs {

namespace {

// Endpoint p of edge p/2: endpoint[p] is the vertex, p^1 the other end.
// Labels: 0 free, 1 S (outer), 2 T (inner); bit 4 marks a scan in progress.
class Matcher {
public:
    Matcher(int n, const std::vector<WeightedEdge>& edges)
        : n_(n), m_(static_cast<int>(edges.size())), edges_(edges)
    {
        std::int64_t maxw = 0;
        for (auto& e : edges_) {
            e.weight *= 2;
            maxw = std::max(maxw, e.weight);
        }
        endpoint_.resize(2 * m_);
        neighbend_.resize(n_);
        for (int k = 0; k < m_; ++k) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v)
            inblossom_[v] = v;
        parent_.assign(2 * n_, -1);
        childs_.assign(2 * n_, {});
        base_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v)
            base_[v] = v;
        endps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        bestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, false);
        for (int b = 2 * n_ - 1; b >= n_; --b)
            unused_.push_back(b);
        dual_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v)
            dual_[v] = maxw;
        allowed_.assign(m_, false);
    }

    std::vector<int> run()
    {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                bestedges_[b].clear();
                has_bestedges_[b] = false;
            }
            std::fill(allowed_.begin(), allowed_.end(), false);
            queue_.clear();
            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
                    assign_label(v, 1, -1);
            if (!stage_search())
                break;
            for (int b = n_; b < 2 * n_; ++b)
                if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0)
                    expand(b, true);
        }
        std::vector<int> out(n_, -1);
        for (int v = 0; v < n_; ++v)
            if (mate_[v] >= 0)
                out[v] = endpoint_[mate_[v]];
        return out;
    }

private:
    std::int64_t slack(int k) const
    {
        return dual_[edges_[k].u] + dual_[edges_[k].v] - 2 * edges_[k].weight;
    }

    static int wrap(int j, int len) { return j < 0 ? j + len : j; }

    void leaves(int b, std::vector<int>& out) const
    {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : childs_[b])
            leaves(t, out);
    }

    std::vector<int> leaves(int b) const
    {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p)
    {
        const int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            const int base = base_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Walks up from v and w alternately; returns the base of the new blossom
    // or -1 when the two trees are different (augmenting path found).
    int scan_blossom(int v, int w)
    {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = base_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1)
                std::swap(v, w);
        }
        for (int b : path)
            label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k)
    {
        int v = edges_[k].u;
        int w = edges_[k].v;
        const int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        const int b = unused_.back();
        unused_.pop_back();
        base_[b] = base;
        parent_[b] = -1;
        parent_[bb] = b;
        std::vector<int>& path = childs_[b];
        std::vector<int>& endps = endps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            parent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            parent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dual_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2)
                queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        std::vector<int> bestto(2 * n_, -1);
        for (int sub : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[sub]) {
                for (int leaf : leaves(sub))
                    for (int p : neighbend_[leaf])
                        candidates.push_back(p / 2);
            } else {
                candidates = bestedges_[sub];
            }
            for (int e : candidates) {
                int i = edges_[e].u;
                int j = edges_[e].v;
                if (inblossom_[j] == b)
                    std::swap(i, j);
                const int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestto[bj] == -1 || slack(e) < slack(bestto[bj])))
                    bestto[bj] = e;
            }
            bestedges_[sub].clear();
            has_bestedges_[sub] = false;
            bestedge_[sub] = -1;
        }
        bestedges_[b].clear();
        for (int e : bestto)
            if (e != -1)
                bestedges_[b].push_back(e);
        has_bestedges_[b] = true;
        bestedge_[b] = -1;
        for (int e : bestedges_[b])
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b]))
                bestedge_[b] = e;
    }

    void expand(int b, bool endstage)
    {
        for (int s : childs_[b]) {
            parent_[s] = -1;
            if (s < n_)
                inblossom_[s] = s;
            else if (endstage && dual_[s] == 0)
                expand(s, endstage);
            else
                for (int leaf : leaves(s))
                    inblossom_[leaf] = s;
        }
        if (!endstage && label_[b] == 2) {
            const std::vector<int>& ch = childs_[b];
            const std::vector<int>& ep = endps_[b];
            const int len = static_cast<int>(ch.size());
            const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep = 0;
            int trick = 0;
            if (j & 1) {
                j -= len;
                jstep = 1;
                trick = 0;
            } else {
                jstep = -1;
                trick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[wrap(j - trick, len)] ^ trick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowed_[ep[wrap(j - trick, len)] / 2] = true;
                j += jstep;
                p = ep[wrap(j - trick, len)] ^ trick;
                allowed_[p / 2] = true;
                j += jstep;
            }
            int bv = ch[wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, len)] != entrychild) {
                bv = ch[wrap(j, len)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv))
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                if (found != -1) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[base_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        childs_[b].clear();
        endps_[b].clear();
        base_[b] = -1;
        bestedges_[b].clear();
        has_bestedges_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v)
    {
        int t = v;
        while (parent_[t] != b)
            t = parent_[t];
        if (t >= n_)
            augment_blossom(t, v);
        std::vector<int>& ch = childs_[b];
        std::vector<int>& ep = endps_[b];
        const int len = static_cast<int>(ch.size());
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep = 0;
        int trick = 0;
        if (i & 1) {
            j -= len;
            jstep = 1;
            trick = 0;
        } else {
            jstep = -1;
            trick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, len)];
            const int p = ep[wrap(j - trick, len)] ^ trick;
            if (t >= n_)
                augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = ch[wrap(j, len)];
            if (t >= n_)
                augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        base_[b] = base_[ch[0]];
    }

    void augment_matching(int k)
    {
        const std::pair<int, int> starts[2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
        for (auto [s, p] : starts) {
            for (;;) {
                const int bs = inblossom_[s];
                if (bs >= n_)
                    augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1)
                    break;
                const int t = endpoint_[labelend_[bs]];
                const int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                const int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_)
                    augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    // One stage: grow alternating trees and adjust duals until an
    // augmentation happens (true) or the optimum is certified (false).
    bool stage_search()
    {
        for (;;) {
            while (!queue_.empty()) {
                const int v = queue_.back();
                queue_.pop_back();
                for (int p : neighbend_[v]) {
                    const int k = p / 2;
                    const int w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w])
                        continue;
                    std::int64_t kslack = 0;
                    if (!allowed_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0)
                            allowed_[k] = true;
                    }
                    if (allowed_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            const int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                return true;
                            }
                        } else if (label_[w] == 0) {
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        const int b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                            bestedge_[b] = k;
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                            bestedge_[w] = k;
                    }
                }
            }

            int type = 1;
            std::int64_t delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
            int dedge = -1;
            int dblossom = -1;
            for (int v = 0; v < n_; ++v)
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    const std::int64_t d = slack(bestedge_[v]);
                    if (d < delta) {
                        delta = d;
                        type = 2;
                        dedge = bestedge_[v];
                    }
                }
            for (int b = 0; b < 2 * n_; ++b)
                if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    const std::int64_t d = slack(bestedge_[b]) / 2;
                    if (d < delta) {
                        delta = d;
                        type = 3;
                        dedge = bestedge_[b];
                    }
                }
            for (int b = n_; b < 2 * n_; ++b)
                if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && dual_[b] < delta) {
                    delta = dual_[b];
                    type = 4;
                    dblossom = b;
                }

            for (int v = 0; v < n_; ++v) {
                if (label_[inblossom_[v]] == 1)
                    dual_[v] -= delta;
                else if (label_[inblossom_[v]] == 2)
                    dual_[v] += delta;
            }
            for (int b = n_; b < 2 * n_; ++b)
                if (base_[b] >= 0 && parent_[b] == -1) {
                    if (label_[b] == 1)
                        dual_[b] += delta;
                    else if (label_[b] == 2)
                        dual_[b] -= delta;
                }

            if (type == 1)
                return false;
            if (type == 2) {
                allowed_[dedge] = true;
                int i = edges_[dedge].u;
                if (label_[inblossom_[i]] == 0)
                    i = edges_[dedge].v;
                queue_.push_back(i);
            } else if (type == 3) {
                allowed_[dedge] = true;
                queue_.push_back(edges_[dedge].u);
            } else {
                expand(dblossom, false);
            }
        }
    }

    int n_;
    int m_;
    std::vector<WeightedEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> childs_;
    std::vector<int> base_;
    std::vector<std::vector<int>> endps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> bestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unused_;
    std::vector<std::int64_t> dual_;
    std::vector<bool> allowed_;
    std::vector<int> queue_;
};

} // namespace

std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges)
{
    if (n < 0)
        throw Error(Errc::BadDimensions, "negative vertex count");
    constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 8;
    for (const WeightedEdge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error(Errc::IndexOutOfRange, "matching edge endpoint out of range");
        if (e.u == e.v)
            throw Error(Errc::LoopEdge, "matching edge is a loop");
        if (e.weight < 0 || e.weight > limit)
            throw Error(Errc::PreconditionViolated, "matching weights must be non-negative and bounded");
    }
    if (n == 0)
        return {};
    return Matcher(n, edges).run();
}

} // namespace kecs

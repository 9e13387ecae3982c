#include "plab/forcing.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace plab::forcing {

const char* flavor_name(Flavor f) { return f == Flavor::injective ? "injective" : "walk"; }

Flavor flavor_from_name(std::string_view name) {
    if (name == "injective") return Flavor::injective;
    if (name == "walk") return Flavor::walk;
    throw Error(Errc::config_invalid, "unknown flavor: " + std::string(name));
}

Condition Condition::from_entries(std::vector<Vertex> u, std::span<const PairEntry> f) {
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end())
        throw Error(Errc::duplicate_pair, "duplicate label in u");
    Condition c;
    c.u_ = std::move(u);
    const std::size_t k = c.u_.size();
    c.f_.assign(k * (k ? k - 1 : 0) / 2, 0);
    std::vector<bool> seen(c.f_.size(), false);
    for (const auto& e : f) {
        if (e.a == e.b) throw Error(Errc::self_pair, "entry (a,a)");
        if (e.color < 1) throw Error(Errc::bad_colors, "color 0 in condition");
        const std::size_t i = c.position(std::min(e.a, e.b));
        const std::size_t j = c.position(std::max(e.a, e.b));
        const std::size_t idx = j * (j - 1) / 2 + i;
        if (seen[idx]) throw Error(Errc::duplicate_pair, "pair assigned twice");
        seen[idx] = true;
        c.f_[idx] = e.color;
    }
    for (bool s : seen)
        if (!s) throw Error(Errc::missing_pair, "condition color map not total");
    return c;
}

Condition Condition::from_parts(std::vector<Vertex> u, std::vector<Color> colors) {
    Condition c;
    c.u_ = std::move(u);
    c.f_ = std::move(colors);
    assert(c.f_.size() == c.u_.size() * (c.u_.empty() ? 0 : c.u_.size() - 1) / 2);
    return c;
}

bool Condition::contains(Vertex a) const {
    return std::binary_search(u_.begin(), u_.end(), a);
}

std::size_t Condition::position(Vertex a) const {
    const auto it = std::lower_bound(u_.begin(), u_.end(), a);
    if (it == u_.end() || *it != a) throw Error(Errc::out_of_range, "label not in u");
    return static_cast<std::size_t>(it - u_.begin());
}

Color Condition::color(Vertex a, Vertex b) const {
    if (a == b) throw Error(Errc::self_pair, "color lookup on (a,a)");
    std::size_t i = position(a), j = position(b);
    if (i > j) std::swap(i, j);
    return f_[j * (j - 1) / 2 + i];
}

Color Condition::color_at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return f_[j * (j - 1) / 2 + i];
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent, sz;
    explicit UnionFind(std::size_t n) : parent(n), sz(n, 1) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    std::size_t merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (sz[a] < sz[b]) std::swap(a, b);
        parent[b] = a;
        sz[a] += sz[b];
        return a;
    }
};

struct Edge {
    std::size_t i, j;
    Color c;
};

// A violating walk exists iff some present color M has a component of size
// >= M among edges colored <= M: such a component can be toured visiting its
// vertices in increasing order (LIS >= |component| >= M >= every color
// used), and conversely a violating walk stays inside one such component.
Verdict walk_check(const Condition& cond) {
    Verdict v;
    const std::size_t k = cond.size();
    if (k < 2) return v;

    std::vector<Edge> edges;
    edges.reserve(k * (k - 1) / 2);
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Color c = cond.color_at(i, j);
            if (c == 0) throw Error(Errc::bad_colors, "color 0 in condition");
            edges.push_back({i, j, c});
        }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.c, a.i, a.j) < std::tie(b.c, b.i, b.j);
    });

    UnionFind uf(k);
    std::size_t max_component = 1;
    std::size_t e = 0;
    while (e < edges.size()) {
        const Color M = edges[e].c;
        while (e < edges.size() && edges[e].c == M) {
            const std::size_t root = uf.merge(edges[e].i, edges[e].j);
            max_component = std::max(max_component, uf.sz[root]);
            ++e;
        }
        if (max_component < M) continue;

        // witness: tour the first oversized component in increasing order.
        // A violating walk needs an edge, so the component must also have at
        // least two vertices (relevant only at M = 1).
        const std::size_t need = std::max<std::size_t>(M, 2);
        std::size_t root = SIZE_MAX;
        for (std::size_t p = 0; p < k; ++p)
            if (uf.sz[uf.find(p)] >= need) {
                root = uf.find(p);
                break;
            }
        std::vector<std::size_t> members;
        for (std::size_t p = 0; p < k; ++p)
            if (uf.find(p) == root) members.push_back(p);

        std::vector<std::vector<std::size_t>> adj(k);
        for (std::size_t j2 = 1; j2 < k; ++j2)
            for (std::size_t i2 = 0; i2 < j2; ++i2)
                if (cond.color_at(i2, j2) <= M) {
                    adj[i2].push_back(j2);
                    adj[j2].push_back(i2);
                }

        std::vector<std::size_t> walk{members[0]};
        v.increasing_positions.push_back(0);
        for (std::size_t t = 1; t < members.size(); ++t) {
            const std::size_t target = members[t];
            std::vector<std::size_t> par(k, SIZE_MAX);
            std::deque<std::size_t> queue{walk.back()};
            par[walk.back()] = walk.back();
            while (!queue.empty()) {
                const std::size_t at = queue.front();
                queue.pop_front();
                if (at == target) break;
                for (std::size_t nb : adj[at])
                    if (par[nb] == SIZE_MAX) {
                        par[nb] = at;
                        queue.push_back(nb);
                    }
            }
            std::vector<std::size_t> hop;
            for (std::size_t at = target; at != par[at]; at = par[at]) hop.push_back(at);
            std::reverse(hop.begin(), hop.end());
            walk.insert(walk.end(), hop.begin(), hop.end());
            v.increasing_positions.push_back(walk.size() - 1);
        }

        v.valid = false;
        for (std::size_t p : walk) v.sequence.push_back(cond.labels()[p]);
        v.max_color = 0;
        for (std::size_t t = 1; t < walk.size(); ++t)
            v.max_color = std::max(v.max_color, cond.color_at(walk[t - 1], walk[t]));
        return v;
    }
    return v;
}

struct InjectiveSearch {
    const Condition& cond;
    std::size_t k;
    std::vector<Vertex> seq;
    std::vector<char> used;
    std::vector<Vertex> tails;
    Color maxc = 0;
    Verdict result;
    bool found = false;

    explicit InjectiveSearch(const Condition& c) : cond(c), k(c.size()), used(k, 0) {}

    void dfs() {
        if (found) return;
        if (seq.size() >= 2 && tails.size() >= maxc) {
            result.valid = false;
            result.sequence = seq;
            result.increasing_positions = lis_positions(seq);
            result.max_color = maxc;
            found = true;
            return;
        }
        if (tails.size() + (k - seq.size()) < maxc) return; // LIS can no longer catch up
        for (std::size_t p = 0; p < k && !found; ++p) {
            if (used[p]) continue;
            const Vertex x = cond.labels()[p];
            const Color prev_max = maxc;
            if (!seq.empty()) maxc = std::max(maxc, cond.color(seq.back(), x));
            const auto it = std::lower_bound(tails.begin(), tails.end(), x);
            const std::size_t pos = static_cast<std::size_t>(it - tails.begin());
            const bool appended = it == tails.end();
            const Vertex old = appended ? 0 : *it;
            if (appended)
                tails.push_back(x);
            else
                *it = x;
            used[p] = 1;
            seq.push_back(x);
            dfs();
            seq.pop_back();
            used[p] = 0;
            if (appended)
                tails.pop_back();
            else
                tails[pos] = old;
            maxc = prev_max;
        }
    }
};

Verdict injective_check(const Condition& cond) {
    InjectiveSearch search(cond);
    search.dfs();
    return search.found ? search.result : Verdict{};
}

} // namespace

Verdict is_valid(const Condition& cond, Flavor flavor) {
    Verdict walk = walk_check(cond);
    if (flavor == Flavor::walk) return walk;
    if (walk.valid) return walk; // every injective sequence is a walk
    return injective_check(cond);
}

bool revalidate_verdict(const Condition& cond, const Verdict& v, Flavor flavor) {
    if (v.valid) return true;
    const auto& s = v.sequence;
    if (s.size() < 2) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!cond.contains(s[i])) return false;
        if (i > 0 && s[i] == s[i - 1]) return false;
    }
    if (flavor == Flavor::injective) {
        std::set<Vertex> distinct(s.begin(), s.end());
        if (distinct.size() != s.size()) return false;
    }
    Color maxc = 0;
    for (std::size_t i = 1; i < s.size(); ++i) maxc = std::max(maxc, cond.color(s[i - 1], s[i]));
    if (maxc != v.max_color) return false;
    const auto& pos = v.increasing_positions;
    if (pos.size() < maxc) return false; // |v| >= max is the violation
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] >= s.size()) return false;
        if (i > 0 && (pos[i] <= pos[i - 1] || s[pos[i]] <= s[pos[i - 1]])) return false;
    }
    return true;
}

Condition extend_with_vertex(const Condition& p, Vertex alpha, Flavor flavor,
                             std::uint32_t bump) {
    if (p.contains(alpha)) throw Error(Errc::already_present, "vertex already in u");
    std::vector<Vertex> u2 = p.labels();
    u2.insert(std::upper_bound(u2.begin(), u2.end(), alpha), alpha);
    const std::size_t k2 = u2.size();
    std::vector<Color> f2(k2 * (k2 - 1) / 2, 0);
    for (std::size_t j = 1; j < k2; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Vertex a = u2[i], b = u2[j];
            Color col;
            if (a == alpha || b == alpha) {
                const Vertex beta = a == alpha ? b : a;
                col = static_cast<Color>(p.size() + bump + p.position(beta));
            } else {
                col = p.color(a, b);
            }
            f2[j * (j - 1) / 2 + i] = col;
        }
    Condition q = Condition::from_parts(std::move(u2), std::move(f2));
    Verdict v = is_valid(q, flavor);
    if (!v.valid)
        throw ValidityLostError(std::move(v), "extension broke the path bound at |u|=" +
                                                  std::to_string(p.size()));
    return q;
}

Condition project_below(const Condition& q, Vertex delta) {
    std::vector<Vertex> u2;
    for (Vertex a : q.labels())
        if (a < delta) u2.push_back(a);
    const std::size_t k2 = u2.size();
    std::vector<Color> f2(k2 * (k2 ? k2 - 1 : 0) / 2, 0);
    for (std::size_t j = 1; j < k2; ++j)
        for (std::size_t i = 0; i < j; ++i) f2[j * (j - 1) / 2 + i] = q.color(u2[i], u2[j]);
    return Condition::from_parts(std::move(u2), std::move(f2));
}

Condition copy_below(const Condition& q, Vertex delta,
                     const std::optional<std::vector<std::pair<Vertex, Vertex>>>& h) {
    const auto& u = q.labels();
    std::vector<Vertex> image;
    image.reserve(u.size());
    if (h) {
        std::map<Vertex, Vertex> hmap(h->begin(), h->end());
        for (Vertex a : u) {
            const auto it = hmap.find(a);
            if (it == hmap.end()) throw Error(Errc::bad_h, "h undefined on a label");
            if (a < delta && it->second != a)
                throw Error(Errc::bad_h, "h must be the identity below delta");
            if (it->second >= delta) throw Error(Errc::bad_h, "h range must lie below delta");
            if (!image.empty() && it->second <= image.back())
                throw Error(Errc::bad_h, "h must be strictly increasing");
            image.push_back(it->second);
        }
    } else {
        std::vector<Vertex> low, displaced;
        for (Vertex a : u) (a < delta ? low : displaced).push_back(a);
        const std::size_t need = displaced.size();
        const std::uint64_t base = low.empty() ? 0 : static_cast<std::uint64_t>(low.back()) + 1;
        if (static_cast<std::uint64_t>(delta) < base + need)
            throw Error(Errc::no_room,
                        "only " + std::to_string(delta >= base ? delta - base : 0) +
                            " labels free below delta, need " + std::to_string(need));
        image = low;
        for (std::size_t i = 0; i < need; ++i)
            image.push_back(static_cast<Vertex>(delta - need + i));
    }
    // strictly increasing relabelling: positions are preserved, so the
    // triangular color array transports unchanged
    return Condition::from_parts(std::move(image), q.triangular());
}

namespace {

// Common extension of two conditions agreeing on their label intersection,
// with the low tail entirely below the high tail. Mixed pairs get the large
// fresh colors.
Condition merge_over_root(const Condition& low, const Condition& high) {
    const auto& ul = low.labels();
    const auto& uh = high.labels();
    std::vector<Vertex> ur;
    std::set_union(ul.begin(), ul.end(), uh.begin(), uh.end(), std::back_inserter(ur));
    const std::size_t nr = ur.size();
    std::vector<Color> fr(nr * (nr - 1) / 2, 0);
    for (std::size_t j = 1; j < nr; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Vertex a = ur[i], b = ur[j];
            Color col;
            if (low.contains(a) && low.contains(b))
                col = low.color(a, b);
            else if (high.contains(a) && high.contains(b))
                col = high.color(a, b);
            else
                col = static_cast<Color>(nr + 2 + nr * (i + j)); // |u^r ∩ a| = i, |u^r ∩ b| = j
            fr[j * (j - 1) / 2 + i] = col;
        }
    return Condition::from_parts(std::move(ur), std::move(fr));
}

} // namespace

Amalgamation amalgamate(const Condition& q, Vertex delta, Flavor flavor) {
    Amalgamation out;
    out.p_delta = copy_below(q, delta);
    if (q.empty() || q.labels().back() < delta) {
        out.merged = q;
        out.verdict = is_valid(q, flavor);
        return out;
    }
    out.merged = merge_over_root(out.p_delta, q);
    out.verdict = is_valid(out.merged, flavor);
    return out;
}

Condition order_pattern(const Condition& cond) {
    std::vector<Vertex> u2(cond.size());
    std::iota(u2.begin(), u2.end(), Vertex{0});
    return Condition::from_parts(std::move(u2), cond.triangular());
}

namespace {

std::string pattern_key(const Condition& cond) {
    std::ostringstream os;
    os << cond.size();
    for (Color c : cond.triangular()) os << ',' << c;
    return os.str();
}

// Shared-root block structure: the common part is an initial segment of both
// label sets and the remaining tails are disjoint ordered blocks.
bool block_mergeable(const Condition& low, const Condition& high) {
    const auto& ul = low.labels();
    const auto& uh = high.labels();
    std::vector<Vertex> common;
    std::set_intersection(ul.begin(), ul.end(), uh.begin(), uh.end(),
                          std::back_inserter(common));
    for (std::size_t j = 1; j < common.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (low.color(common[i], common[j]) != high.color(common[i], common[j])) return false;
    std::vector<Vertex> low_tail, high_tail;
    std::set_difference(ul.begin(), ul.end(), common.begin(), common.end(),
                        std::back_inserter(low_tail));
    std::set_difference(uh.begin(), uh.end(), common.begin(), common.end(),
                        std::back_inserter(high_tail));
    const Vertex tail_min = std::min(low_tail.empty() ? UINT32_MAX : low_tail.front(),
                                     high_tail.empty() ? UINT32_MAX : high_tail.front());
    if (!common.empty() && tail_min != UINT32_MAX && common.back() >= tail_min) return false;
    if (!low_tail.empty() && !high_tail.empty() && low_tail.back() >= high_tail.front())
        return false;
    return true;
}

} // namespace

CccOutcome ccc_experiment(std::span<const Condition> conditions, Flavor flavor) {
    CccOutcome out;
    if (conditions.size() < 2) {
        out.diagnostics = "no pair: fewer than two conditions";
        return out;
    }
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < conditions.size(); ++i)
        buckets[pattern_key(order_pattern(conditions[i]))].push_back(i);

    std::size_t pairs_tried = 0, merges_failed = 0;
    for (const auto& [key, idxs] : buckets) {
        for (std::size_t a = 0; a < idxs.size(); ++a)
            for (std::size_t b = a + 1; b < idxs.size(); ++b) {
                for (auto [lo, hi] : {std::pair{idxs[a], idxs[b]}, std::pair{idxs[b], idxs[a]}}) {
                    if (!block_mergeable(conditions[lo], conditions[hi])) continue;
                    ++pairs_tried;
                    Condition merged = merge_over_root(conditions[lo], conditions[hi]);
                    Verdict v = is_valid(merged, flavor);
                    if (!v.valid) {
                        ++merges_failed;
                        out.verdict = v;
                        continue;
                    }
                    out.found = true;
                    out.first = lo;
                    out.second = hi;
                    out.extension = std::move(merged);
                    out.verdict = std::move(v);
                    return out;
                }
            }
    }
    std::ostringstream os;
    os << "no compatible pair: " << buckets.size() << " pattern buckets, " << pairs_tried
       << " block-ordered pairs tried, " << merges_failed << " merges failed validation";
    out.diagnostics = os.str();
    return out;
}

GenericColoring build_generic_coloring(std::uint32_t n, std::uint64_t order_seed, Flavor flavor,
                                       std::uint32_t bump) {
    GenericColoring g;
    g.flavor = flavor;
    Condition cond;
    Rng rng(order_seed);
    for (Vertex alpha : rng.permutation(n)) {
        Condition next = extend_with_vertex(cond, alpha, flavor, bump);
        ChainStep step;
        step.alpha = alpha;
        for (Vertex beta : cond.labels()) step.edges.emplace_back(beta, next.color(alpha, beta));
        g.chain.push_back(std::move(step));
        cond = std::move(next);
    }
    std::vector<PairEntry> entries;
    cond.for_each_edge([&](Vertex a, Vertex b, Color c) { entries.push_back({a, b, c}); });
    g.coloring = UnorderedPairColoring::from_entries(n, entries);
    g.condition = std::move(cond);
    g.valid = true;
    return g;
}

namespace {

struct SequenceBoundSearch {
    const UnorderedPairColoring& c;
    Color bound;
    const std::vector<std::vector<Vertex>>& adj;
    std::vector<Vertex> seq;
    std::vector<char> used;
    Verdict result;
    bool found = false;

    void dfs() {
        if (found) return;
        if (seq.size() >= 2) {
            const std::uint32_t lis = longest_increasing_subsequence(seq);
            if (lis >= bound) {
                result.valid = false;
                result.sequence = seq;
                result.increasing_positions = lis_positions(seq);
                result.max_color = 0;
                for (std::size_t i = 1; i < seq.size(); ++i)
                    result.max_color = std::max(result.max_color, c.color(seq[i - 1], seq[i]));
                found = true;
                return;
            }
        }
        for (Vertex next : adj[seq.back()]) {
            if (used[next]) continue;
            used[next] = 1;
            seq.push_back(next);
            dfs();
            seq.pop_back();
            used[next] = 0;
            if (found) return;
        }
    }
};

} // namespace

Verdict sequence_bound_check(const UnorderedPairColoring& c, Color bound, std::uint64_t trials,
                        std::uint64_t seed) {
    const std::size_t n = c.size();
    Verdict ok;
    if (n < 2 || bound < 1) return ok;
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b && c.color(a, b) < bound) adj[a].push_back(b);

    if (n <= 7) {
        SequenceBoundSearch search{c, bound, adj, {}, std::vector<char>(n, 0), {}, false};
        for (Vertex start = 0; start < n; ++start) {
            search.seq = {start};
            search.used.assign(n, 0);
            search.used[start] = 1;
            search.dfs();
            if (search.found) return search.result;
        }
        return ok;
    }

    Rng rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng tr = rng.split(trial);
        std::vector<char> used(n, 0);
        std::vector<Vertex> seq{static_cast<Vertex>(tr.below(n))};
        used[seq[0]] = 1;
        while (true) {
            std::vector<Vertex> options;
            for (Vertex next : adj[seq.back()])
                if (!used[next]) options.push_back(next);
            if (options.empty()) break;
            if (seq.size() >= 2 && tr.below(8) == 0) break;
            const Vertex next = options[tr.below(options.size())];
            used[next] = 1;
            seq.push_back(next);
        }
        if (seq.size() < 2) continue;
        const std::uint32_t lis = longest_increasing_subsequence(seq);
        if (lis >= bound) {
            Verdict bad;
            bad.valid = false;
            bad.sequence = seq;
            bad.increasing_positions = lis_positions(seq);
            for (std::size_t i = 1; i < seq.size(); ++i)
                bad.max_color = std::max(bad.max_color, c.color(seq[i - 1], seq[i]));
            return bad;
        }
    }
    return ok;
}

Condition random_raw_condition(Rng& rng, std::size_t size, Vertex label_bound, Color max_color) {
    auto labels32 = rng.sample_sorted(label_bound, static_cast<std::uint32_t>(size));
    std::vector<Vertex> u(labels32.begin(), labels32.end());
    std::vector<Color> f(size * (size ? size - 1 : 0) / 2);
    for (auto& c : f) c = static_cast<Color>(1 + rng.below(max_color));
    return Condition::from_parts(std::move(u), std::move(f));
}

Condition random_chain_condition(Rng& rng, std::size_t size, Vertex label_bound, Flavor flavor) {
    auto labels = rng.sample_sorted(label_bound, static_cast<std::uint32_t>(size));
    auto order = rng.permutation(static_cast<std::uint32_t>(labels.size()));
    Condition cond;
    for (std::uint32_t idx : order) cond = extend_with_vertex(cond, labels[idx], flavor);
    return cond;
}

Condition ascending_chain_condition(Rng& rng, std::size_t size, Vertex label_bound,
                                    Flavor flavor) {
    auto labels = rng.sample_sorted(label_bound, static_cast<std::uint32_t>(size));
    Condition cond;
    for (Vertex label : labels) cond = extend_with_vertex(cond, label, flavor);
    return cond;
}

std::optional<Vertex> pick_amalgamation_delta(const Condition& q, Rng& rng) {
    const auto& u = q.labels();
    if (u.size() < 2) return std::nullopt;
    struct Window {
        Vertex lo, hi;
    };
    std::vector<Window> windows;
    for (std::size_t j = 1; j < u.size(); ++j) {
        const std::uint64_t displaced = u.size() - j;
        const std::uint64_t lo = static_cast<std::uint64_t>(u[j - 1]) + displaced + 1;
        if (lo <= u[j]) windows.push_back({static_cast<Vertex>(lo), u[j]});
    }
    if (windows.empty()) return std::nullopt;
    const Window w = windows[rng.below(windows.size())];
    return static_cast<Vertex>(w.lo + rng.below(static_cast<std::uint64_t>(w.hi) - w.lo + 1));
}

std::vector<Condition> seeded_condition_family(std::span<const Vertex> root_labels,
                                               std::uint32_t tail_size, std::uint32_t count,
                                               std::uint64_t seed) {
    Rng rng(seed);
    Condition root;
    for (Vertex label : root_labels) root = extend_with_vertex(root, label, Flavor::walk);
    // tails are inserted in ascending order; block positions vary with the
    // seed, which keeps members pairwise order-isomorphic
    std::vector<Condition> out;
    out.reserve(count);
    Vertex base = (root.empty() ? 0 : root.labels().back()) + 2;
    for (std::uint32_t i = 0; i < count; ++i) {
        base += 1 + static_cast<Vertex>(rng.below(7));
        Condition cond = root;
        for (std::uint32_t j = 0; j < tail_size; ++j)
            cond = extend_with_vertex(cond, base + j, Flavor::walk);
        base += tail_size;
        out.push_back(std::move(cond));
    }
    return out;
}

} // namespace plab::forcing

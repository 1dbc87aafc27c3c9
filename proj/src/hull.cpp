#include "hull.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace lgtoric::detail {

namespace {

// Coordinates up to this magnitude keep every intermediate product of the
// 3D wrapping step below 2^100, so __int128 arithmetic is exact.
constexpr long long kFastPathBound = 4096;

template <class S>
using P3 = std::array<S, 3>;

template <class S>
P3<S> sub(const P3<S>& a, const P3<S>& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class S>
P3<S> cross(const P3<S>& a, const P3<S>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S dot(const P3<S>& a, const P3<S>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
bool is_zero(const P3<S>& a)
{
    return a[0] == 0 && a[1] == 0 && a[2] == 0;
}

template <class S>
P3<S> negate(const P3<S>& a)
{
    return {S(-a[0]), S(-a[1]), S(-a[2])};
}

template <class S>
void make_primitive(P3<S>& n)
{
    S g = gcd_generic(gcd_generic(n[0], n[1]), n[2]);
    if (g > 1)
        for (auto& v : n)
            v /= g;
}

template <class S>
S cross2(const P3<S>& o, const P3<S>& a, const P3<S>& b, std::size_t c0, std::size_t c1)
{
    return (a[c0] - o[c0]) * (b[c1] - o[c1]) - (a[c1] - o[c1]) * (b[c0] - o[c0]);
}

// Strict counter-clockwise hull of the selected points, using coordinates
// (c0, c1). Starts at the lexicographically smallest point.
template <class S>
std::vector<std::size_t> monotone_chain(const std::vector<P3<S>>& pts, std::vector<std::size_t> idx,
                                        std::size_t c0, std::size_t c1)
{
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a][c0] != pts[b][c0])
            return pts[a][c0] < pts[b][c0];
        return pts[a][c1] < pts[b][c1];
    });
    if (idx.size() < 3)
        return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]], c0, c1) <= 0)
            --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i - 1]], c0, c1) <= 0)
            --k;
        h[k++] = idx[i - 1];
    }
    h.resize(k - 1);
    return h;
}

template <class S>
struct Facet3
{
    P3<S> normal;
    S offset;
    std::vector<std::size_t> cycle;
};

template <class S>
std::vector<Facet3<S>> wrap3(const std::vector<P3<S>>& p)
{
    const std::size_t n = p.size();
    const std::size_t s = static_cast<std::size_t>(std::min_element(p.begin(), p.end()) - p.begin());

    // One supporting plane through the lexicographic minimum.
    P3<S> start{};
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
        if (i == s)
            continue;
        for (std::size_t j = i + 1; j < n && !found; ++j) {
            if (j == s)
                continue;
            P3<S> nn = cross(sub(p[i], p[s]), sub(p[j], p[s]));
            if (is_zero(nn))
                continue;
            bool pos = false, neg = false;
            for (std::size_t k = 0; k < n && !(pos && neg); ++k) {
                S d = dot(nn, sub(p[k], p[s]));
                if (d > 0)
                    pos = true;
                else if (d < 0)
                    neg = true;
            }
            if (pos && neg)
                continue;
            start = neg ? negate(nn) : nn;
            found = true;
        }
    }
    if (!found)
        throw InternalError("hull: no supporting plane found for a full-rank point set");
    make_primitive(start);

    std::map<P3<S>, std::size_t> seen;
    std::vector<Facet3<S>> facets;
    std::deque<P3<S>> queue{start};
    seen.emplace(start, 0);
    while (!queue.empty()) {
        const P3<S> normal = queue.front();
        queue.pop_front();
        S offset = dot(normal, p[0]);
        for (const auto& q : p)
            offset = std::min(offset, dot(normal, q));
        std::vector<std::size_t> on_plane;
        for (std::size_t k = 0; k < n; ++k)
            if (dot(normal, p[k]) == offset)
                on_plane.push_back(k);
        // Drop a coordinate the normal does not vanish on; the projection is
        // injective on the plane.
        std::size_t drop = 0;
        while (normal[drop] == 0)
            ++drop;
        const std::size_t c0 = drop == 0 ? 1 : 0;
        const std::size_t c1 = drop == 2 ? 1 : 2;
        std::vector<std::size_t> cycle = monotone_chain(p, on_plane, c0, c1);
        if (cycle.size() < 3)
            throw InternalError("hull: degenerate facet");

        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const std::size_t u = cycle[i];
            const std::size_t w = cycle[(i + 1) % cycle.size()];
            const std::size_t q = cycle[(i + 2) % cycle.size()];
            const P3<S> e = sub(p[w], p[u]);
            P3<S> m = cross(e, normal);
            if (dot(m, sub(p[q], p[u])) > 0)
                m = negate(m);
            std::size_t best = n;
            S best_alpha = 0, best_beta = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const P3<S> d = sub(p[k], p[u]);
                const S alpha = dot(normal, d);
                if (alpha == 0)
                    continue;
                const S beta = dot(m, d);
                if (best == n || beta * best_alpha - alpha * best_beta > 0) {
                    best = k;
                    best_alpha = alpha;
                    best_beta = beta;
                }
            }
            if (best == n)
                throw InternalError("hull: wrapping found no point off the facet");
            P3<S> next = cross(e, sub(p[best], p[u]));
            if (dot(next, sub(p[q], p[u])) < 0)
                next = negate(next);
            make_primitive(next);
            if (seen.emplace(next, 0).second)
                queue.push_back(next);
        }
        facets.push_back({normal, offset, std::move(cycle)});
    }
    return facets;
}

template <class S>
HullResult hull_impl(const std::vector<P3<S>>& p, std::size_t rank, auto&& to_integer)
{
    HullResult out;
    const std::size_t n = p.size();
    auto put_normal = [&](const P3<S>& v) {
        return std::array<Integer, 3>{to_integer(v[0]), to_integer(v[1]), to_integer(v[2])};
    };
    if (rank == 0) {
        out.vertices = {0};
        return out;
    }
    if (rank == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (p[i][0] < p[lo][0])
                lo = i;
            if (p[i][0] > p[hi][0])
                hi = i;
        }
        out.vertices = {lo, hi};
        out.facets.push_back({put_normal({S(1), S(0), S(0)}), to_integer(p[lo][0]), {lo}});
        out.facets.push_back({put_normal({S(-1), S(0), S(0)}), to_integer(S(-p[hi][0])), {hi}});
        return out;
    }
    if (rank == 2) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        out.cycle = monotone_chain(p, all, 0, 1);
        out.vertices = out.cycle;
        for (std::size_t i = 0; i < out.cycle.size(); ++i) {
            const std::size_t a = out.cycle[i];
            const std::size_t b = out.cycle[(i + 1) % out.cycle.size()];
            P3<S> normal{S(p[a][1] - p[b][1]), S(p[b][0] - p[a][0]), S(0)};
            make_primitive(normal);
            out.facets.push_back({put_normal(normal), to_integer(dot(normal, p[a])), {a, b}});
        }
        return out;
    }
    std::vector<Facet3<S>> facets = wrap3(p);
    std::vector<bool> is_vertex(n, false);
    for (auto& f : facets) {
        for (auto v : f.cycle)
            is_vertex[v] = true;
        out.facets.push_back({put_normal(f.normal), to_integer(f.offset), std::move(f.cycle)});
    }
    for (std::size_t i = 0; i < n; ++i)
        if (is_vertex[i])
            out.vertices.push_back(i);
    return out;
}

} // namespace

HullResult hull_in_chart(const std::vector<std::array<Integer, 3>>& points, std::size_t rank)
{
    bool small = true;
    for (const auto& q : points)
        for (const auto& c : q)
            if (abs_value(c) > kFastPathBound)
                small = false;
    if (small) {
        std::vector<P3<__int128>> p;
        p.reserve(points.size());
        for (const auto& q : points)
            p.push_back({to_int64(q[0]), to_int64(q[1]), to_int64(q[2])});
        return hull_impl(p, rank, [](__int128 v) { return Integer(static_cast<long long>(v)); });
    }
    return hull_impl(points, rank, [](const Integer& v) { return v; });
}

} // namespace lgtoric::detail

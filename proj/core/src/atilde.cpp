#include "glci/atilde.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "glci/error.hpp"

namespace glci {

GroupElement interval_representative(const WeightSystem& p, GroupElement x) {
    const GroupElement w = omega(p);
    const GroupElement minus_w = negate(p, w);
    if (sign_of(delta(p, w)) >= 0) throw InvalidInput("interval representatives need omega of negative degree");
    while (!is_nonneg(p, x)) x = add(p, x, minus_w);
    for (GroupElement y = add(p, x, w); is_nonneg(p, y); y = add(p, y, w)) x = y;
    return x;
}

OrbitQuiverWithCut atilde_presentation(const WeightSystem& w) {
    validate(w);
    OrbitQuiverWithCut out;
    WeightSystem p = minimal_presentation(w);
    p.lambda.reset();
    if (p.n() > static_cast<std::size_t>(p.d) + 1)
        throw InvalidInput("the type A~ presentation needs n <= d + 1 after normalization");
    out.presentation = p;
    Quiver& q = out.quiver;
    q.d = p.d;
    q.weights = p.weights;
    q.vertices = canonical_interval(p);
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        for (std::size_t i = 1; i <= p.n(); ++i) {
            GroupElement y = add(p, q.vertices[v], generator(p, i));
            bool cut = false;
            auto idx = q.vertex_index(y);
            if (!idx) {
                cut = true;
                idx = q.vertex_index(interval_representative(p, y));
                if (!idx) throw VerificationFailure("orbit representative outside [0, dc]");
            }
            q.arrows.push_back(Arrow{v, *idx, static_cast<int>(i), cut});
        }
    return out;
}

CutReport verify_cut(const OrbitQuiverWithCut& oq, int max_d) {
    const Quiver& q = oq.quiver;
    const int d = q.d;
    if (d > max_d) throw InvalidInput("walk enumeration capped at d = " + std::to_string(max_d));
    CutReport rep;
    const std::size_t V = q.vertices.size();
    const std::size_t L = static_cast<std::size_t>(d) + 1;

    Quiver noncut = q;
    noncut.arrows.clear();
    for (const auto& a : q.arrows)
        if (!a.cut) noncut.arrows.push_back(a);
    rep.acyclic = noncut.is_acyclic();

    Quiver canon = i_canonical_quiver(oq.presentation, q.vertices);
    auto key = [](const Quiver& qq) {
        std::multiset<std::tuple<GroupElement, GroupElement, int>> s;
        for (const auto& a : qq.arrows) s.emplace(qq.vertices[a.source], qq.vertices[a.target], a.label);
        return s;
    };
    rep.matches_canonical = key(noncut) == key(canon);
    if (!rep.matches_canonical) rep.detail = "non-cut arrows differ from the canonical quiver";

    std::vector<std::size_t> out(V * L, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto& slot = out[q.arrows[a].source * L + q.arrows[a].label - 1];
        if (slot != static_cast<std::size_t>(-1)) throw VerificationFailure("two arrows share a vertex and label");
        slot = a;
    }
    rep.passing_walks_per_vertex.assign(V, 0);
    for (std::size_t v = 0; v < V; ++v) {
        std::vector<int> perm(L);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::size_t cur = v;
            int cuts = 0;
            bool complete = true;
            for (int lab : perm) {
                std::size_t a = out[cur * L + lab - 1];
                if (a == static_cast<std::size_t>(-1)) {
                    complete = false;
                    break;
                }
                cuts += q.arrows[a].cut ? 1 : 0;
                cur = q.arrows[a].target;
            }
            ++rep.walks_checked;
            if (complete && cur == v && cuts == 1) {
                ++rep.passing_walks_per_vertex[v];
            } else {
                ++rep.walks_failed;
                if (rep.detail.empty())
                    rep.detail = "walk from " + to_string(q.vertices[v]) + " has " + std::to_string(cuts) +
                                 " cut arrows" + (cur == v ? "" : " and does not close");
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return rep;
}

}  // namespace glci

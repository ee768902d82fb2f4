#include "ei/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace ei {

namespace {

void sort_faces(std::vector<Vmask>& faces) {
    std::sort(faces.begin(), faces.end(), [](Vmask a, Vmask b) {
        int ca = vcount(a), cb = vcount(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(int ground, std::vector<Vmask> faces) {
    if (ground < 0 || ground > kMaxVertices)
        throw CapacityExceeded("ground set size out of range");
    if (faces.empty())
        throw VoidComplex("complex without faces");
    sort_faces(faces);
    if (faces.front() != 0)
        throw InvalidParameter("complex must contain the empty face");
    std::unordered_set<Vmask> present(faces.begin(), faces.end());
    Vmask gmask = ground == 0 ? 0 : (~Vmask{0} >> (64 - ground));
    for (Vmask f : faces) {
        if (f & ~gmask)
            throw InvalidVertex("face outside the ground set");
        for (Vmask m = f; m; m &= m - 1)
            if (!present.count(f & ~(m & -m)))
                throw InvalidParameter("face family not downward closed");
    }
    SimplicialComplex k;
    k.ground_ = ground;
    k.faces_ = std::move(faces);
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(int ground, const std::vector<Vmask>& facets) {
    std::unordered_set<Vmask> seen;
    std::vector<Vmask> stack(facets.begin(), facets.end());
    stack.push_back(0);
    while (!stack.empty()) {
        Vmask f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        for (Vmask m = f; m; m &= m - 1)
            stack.push_back(f & ~(m & -m));
    }
    std::vector<Vmask> faces(seen.begin(), seen.end());
    sort_faces(faces);
    SimplicialComplex k;
    if (ground < 0 || ground > kMaxVertices)
        throw CapacityExceeded("ground set size out of range");
    Vmask gmask = ground == 0 ? 0 : (~Vmask{0} >> (64 - ground));
    for (Vmask f : faces)
        if (f & ~gmask) throw InvalidVertex("facet outside the ground set");
    k.ground_ = ground;
    k.faces_ = std::move(faces);
    return k;
}

int SimplicialComplex::dimension() const {
    return vcount(faces_.back()) - 1;
}

namespace {

void collect_independent(const Graph& g, Vmask chosen, Vmask candidates,
                         std::vector<Vmask>& out, std::size_t max_faces) {
    out.push_back(chosen);
    if (out.size() > max_faces)
        throw CapacityExceeded("independence complex exceeds the face bound");
    while (candidates) {
        int v = vlowest(candidates);
        candidates &= candidates - 1;
        collect_independent(g, chosen | vbit(v), candidates & ~g.neighbors(v), out, max_faces);
    }
}

} // namespace

SimplicialComplex independence_complex(const Graph& g, std::size_t max_faces) {
    std::vector<Vmask> faces;
    collect_independent(g, 0, g.vertex_mask(), faces, max_faces);
    // Independent sets are downward closed, so the face list doubles as a
    // facet list and from_facets just sorts and dedups.
    return SimplicialComplex::from_facets(g.vertex_count(), faces);
}

FVector f_vector(const SimplicialComplex& k) {
    FVector fv;
    fv.f.assign(static_cast<std::size_t>(k.dimension()) + 2, 0);
    for (Vmask f : k.faces())
        ++fv.f[static_cast<std::size_t>(vcount(f))];
    return fv;
}

} // namespace ei

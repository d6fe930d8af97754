#include "sigmafold/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sigmafold/error.hpp"

namespace sigma {

namespace {

Facet shifted(const Facet& f, const Coord4& by) { return {f.anchor + by, f.type}; }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Links at a vertex as a graph on the (at most eight) signed directions.
struct LinkGraph {
  std::map<SignedDir, std::vector<SignedDir>> adj;
};

LinkGraph link_graph(const std::vector<Incidence>& at) {
  LinkGraph g;
  for (const auto& inc : at) {
    const Corner c = facet_corners(inc.facet)[inc.index];
    g.adj[c.first].push_back(c.second);
    g.adj[c.second].push_back(c.first);
  }
  return g;
}

LinkShape shape_of(const LinkGraph& g) {
  if (g.adj.empty()) return LinkShape::NonManifold;
  int ends = 0;
  for (const auto& [node, nb] : g.adj) {
    if (nb.size() > 2) return LinkShape::NonManifold;
    if (nb.size() == 1) ++ends;
  }
  std::set<SignedDir> seen;
  std::vector<SignedDir> stack{g.adj.begin()->first};
  while (!stack.empty()) {
    SignedDir d = stack.back();
    stack.pop_back();
    if (!seen.insert(d).second) continue;
    for (const auto& n : g.adj.at(d)) stack.push_back(n);
  }
  if (seen.size() != g.adj.size()) return LinkShape::NonManifold;
  if (ends == 0) return LinkShape::Cycle;
  return ends == 2 ? LinkShape::Path : LinkShape::NonManifold;
}

}  // namespace

SigmaComplex SigmaComplex::build(std::span<const Facet> facets, std::vector<Coord4> periods,
                                 BuildDiagnostics* diag) {
  if (facets.empty()) throw DomainError("a complex needs at least one facet");
  SigmaComplex c;
  c.periods_ = PeriodLattice(std::move(periods));

  std::set<Facet> unique;
  for (const auto& f : facets) {
    if (!f.type.admissible()) {
      throw Error(ErrorCode::ForbiddenFacet, "forbidden facet " + to_string(f));
    }
    if (!unique.insert(c.periods_.reduce(f)).second && diag) diag->duplicates.push_back(f);
  }
  c.facets_.assign(unique.begin(), unique.end());

  for (const auto& f : c.facets_) {
    const auto es = facet_edges(f);
    const auto cs = f.corners();
    for (int k = 0; k < 4; ++k) {
      const Edge ce = c.periods_.reduce(es[k]);
      c.edge_counts_[ce] += 1;
      c.edge_index_[ce].push_back({shifted(f, ce.tail - es[k].tail), k});
      const Coord4 cv = c.periods_.reduce(cs[k]);
      c.vertex_index_[cv].push_back({shifted(f, cv - cs[k]), k});
    }
  }

  std::map<Facet, std::size_t> id;
  for (std::size_t k = 0; k < c.facets_.size(); ++k) id[c.facets_[k]] = k;
  UnionFind uf(c.facets_.size());
  for (const auto& [v, incs] : c.vertex_index_) {
    const std::size_t first = id.at(c.periods_.reduce(incs.front().facet));
    for (const auto& inc : incs) uf.unite(first, id.at(c.periods_.reduce(inc.facet)));
  }
  for (std::size_t k = 1; k < c.facets_.size(); ++k) {
    if (uf.find(k) != uf.find(0)) {
      throw Error(ErrorCode::Disconnected, "facet " + to_string(c.facets_[k]) +
                                               " is not connected to " + to_string(c.facets_[0]));
    }
  }
  return c;
}

bool SigmaComplex::contains(const Facet& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), periods_.reduce(f));
}

int SigmaComplex::edge_count(const Edge& e) const {
  auto it = edge_counts_.find(periods_.reduce(e));
  return it == edge_counts_.end() ? 0 : it->second;
}

std::vector<Incidence> SigmaComplex::facets_on_edge(const Edge& e) const {
  const Edge ce = periods_.reduce(e);
  auto it = edge_index_.find(ce);
  if (it == edge_index_.end()) return {};
  std::vector<Incidence> out = it->second;
  const Coord4 by = e.tail - ce.tail;
  for (auto& inc : out) inc.facet = shifted(inc.facet, by);
  return out;
}

std::vector<Incidence> SigmaComplex::facets_at(const Coord4& v) const {
  const Coord4 cv = periods_.reduce(v);
  auto it = vertex_index_.find(cv);
  if (it == vertex_index_.end()) return {};
  std::vector<Incidence> out = it->second;
  const Coord4 by = v - cv;
  for (auto& inc : out) inc.facet = shifted(inc.facet, by);
  return out;
}

std::vector<Coord4> SigmaComplex::vertices() const {
  std::vector<Coord4> out;
  out.reserve(vertex_index_.size());
  for (const auto& [v, incs] : vertex_index_) out.push_back(v);
  return out;
}

bool SigmaComplex::same_complex(const SigmaComplex& other) const {
  if (facets_ != other.facets_) return false;
  if (periods_.rank() != other.periods_.rank()) return false;
  return periods_.contains(other.periods_) && other.periods_.contains(periods_);
}

SigmaComplex build(std::span<const Facet> facets, std::vector<Coord4> periods, BuildDiagnostics* diag) {
  return SigmaComplex::build(facets, std::move(periods), diag);
}

const std::map<Edge, int>& edges(const SigmaComplex& complex) { return complex.edge_counts(); }

PolyhedronReport is_polyhedron(const SigmaComplex& complex) {
  PolyhedronReport rep;
  for (const auto& [e, n] : complex.edge_counts()) {
    if (n > 2) rep.bad_edges.push_back(e);
  }
  for (const auto& v : complex.vertices()) {
    if (link_shape(complex, v) == LinkShape::NonManifold) rep.bad_vertices.push_back(v);
  }
  rep.ok = rep.bad_edges.empty() && rep.bad_vertices.empty();
  return rep;
}

LinkShape link_shape(const SigmaComplex& complex, const Coord4& vertex) {
  return shape_of(link_graph(complex.facets_at(vertex)));
}

std::size_t BoundaryLoops::edge_count() const {
  std::size_t n = unordered.size();
  for (const auto& l : loops) n += l.size();
  return n;
}

BoundaryLoops boundary_loops(const SigmaComplex& complex) {
  const auto& lat = complex.periods();
  std::vector<Edge> open;
  for (const auto& [e, n] : complex.edge_counts()) {
    if (n == 1) open.push_back(e);
  }
  // vertex class -> boundary edges touching it
  std::map<Coord4, std::vector<std::size_t>> touch;
  for (std::size_t k = 0; k < open.size(); ++k) {
    touch[lat.reduce(open[k].tail)].push_back(k);
    touch[lat.reduce(open[k].head())].push_back(k);
  }
  std::vector<bool> used(open.size(), false);
  BoundaryLoops out;
  for (std::size_t start = 0; start < open.size(); ++start) {
    if (used[start]) continue;
    std::vector<Edge> lifted{open[start]};
    used[start] = true;
    const Coord4 origin = open[start].tail;
    Coord4 at = open[start].head();
    bool closed = false;
    while (true) {
      const Coord4 cls = lat.reduce(at);
      // back at the start, possibly one period further along
      if (cls == lat.reduce(origin)) {
        closed = true;
        break;
      }
      std::optional<std::size_t> next;
      for (std::size_t k : touch[cls]) {
        if (!used[k]) {
          next = k;
          break;
        }
      }
      if (!next) break;
      used[*next] = true;
      const Edge& e = open[*next];
      if (lat.reduce(e.tail) == cls) {
        lifted.push_back({at, e.dir});
        at = at + Coord4::unit(e.dir);
      } else {
        at = at - Coord4::unit(e.dir);
        lifted.push_back({at, e.dir});
      }
    }
    if (closed) {
      out.loops.push_back(std::move(lifted));
    } else {
      for (auto& e : lifted) out.unordered.push_back(e);
    }
  }
  return out;
}

std::vector<Edge> boundary(const SigmaComplex& complex) {
  const BoundaryLoops b = boundary_loops(complex);
  std::vector<Edge> out;
  for (const auto& l : b.loops) out.insert(out.end(), l.begin(), l.end());
  out.insert(out.end(), b.unordered.begin(), b.unordered.end());
  return out;
}

std::vector<CycleEntry> vertex_cycle(const SigmaComplex& complex, const Coord4& vertex) {
  auto at = complex.facets_at(vertex);
  if (at.empty()) throw Error(ErrorCode::NotManifold, "no facet has corner " + to_string(vertex));
  const LinkGraph g = link_graph(at);
  switch (shape_of(g)) {
    case LinkShape::NonManifold:
      throw Error(ErrorCode::NotManifold, "vertex " + to_string(vertex) + " is not a manifold point");
    case LinkShape::Path:
      throw Error(ErrorCode::BoundaryVertex, "vertex " + to_string(vertex) + " lies on the boundary");
    case LinkShape::Cycle:
      break;
  }

  std::vector<CycleEntry> entries;
  for (const auto& inc : at) entries.push_back({inc.facet, facet_corners(inc.facet)[inc.index]});
  std::sort(entries.begin(), entries.end(),
            [](const CycleEntry& a, const CycleEntry& b) { return a.facet < b.facet; });

  auto find_other = [&](std::size_t current, SignedDir shared) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k == current) continue;
      const Corner& c = entries[k].corner;
      if (c.first == shared || c.second == shared) return k;
    }
    throw Error(ErrorCode::NotManifold, "broken vertex link at " + to_string(vertex));
  };

  const Corner& c0 = entries[0].corner;
  const std::size_t via_first = find_other(0, c0.first);
  const std::size_t via_second = find_other(0, c0.second);
  SignedDir toward = via_first < via_second ? c0.first : c0.second;

  std::vector<CycleEntry> out{entries[0]};
  std::size_t cur = 0;
  while (out.size() < entries.size()) {
    cur = find_other(cur, toward);
    out.push_back(entries[cur]);
    const Corner& c = entries[cur].corner;
    toward = c.first == toward ? c.second : c.first;
  }
  return out;
}

std::vector<SignedDir> link_directions(const std::vector<CycleEntry>& cycle) {
  const std::size_t n = cycle.size();
  std::vector<SignedDir> dirs;
  if (n == 0) return dirs;
  if (n == 1) return {cycle[0].corner.first, cycle[0].corner.second};
  auto shared = [](const Corner& a, const Corner& b) {
    return (a.first == b.first || a.first == b.second) ? a.first : a.second;
  };
  // dirs[k] is shared by entries k-1 and k
  for (std::size_t k = 0; k < n; ++k) {
    dirs.push_back(shared(cycle[(k + n - 1) % n].corner, cycle[k].corner));
  }
  return dirs;
}

std::vector<Facet> legal_extensions(const SigmaComplex& complex, const Edge& edge) {
  if (complex.edge_count(edge) != 1) {
    throw Error(ErrorCode::NotBoundaryEdge, to_string(edge) + " is not a boundary edge");
  }
  std::vector<Facet> out;
  for (const auto& t : kAdmissibleTypes) {
    if (!t.contains(edge.dir)) continue;
    const StarIndex o = t.other(edge.dir);
    for (const Coord4& anchor : {edge.tail, edge.tail - Coord4::unit(o)}) {
      const Facet cand{anchor, t};
      if (complex.contains(cand)) continue;
      std::map<Edge, int> add;
      for (const auto& e : facet_edges(cand)) add[complex.canonical(e)] += 1;
      bool fits = true;
      for (const auto& [e, n] : add) {
        if (complex.edge_count(e) + n > 2) fits = false;
      }
      if (fits) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SigmaComplex extend(const SigmaComplex& complex, const Facet& facet) {
  if (!facet.type.admissible()) {
    throw Error(ErrorCode::ForbiddenFacet, "forbidden facet " + to_string(facet));
  }
  if (complex.contains(facet)) {
    throw Error(ErrorCode::DuplicateFacet, to_string(facet) + " is already present");
  }
  std::map<Edge, int> add;
  for (const auto& e : facet_edges(facet)) add[complex.canonical(e)] += 1;
  bool touches = false;
  for (const auto& [e, n] : add) {
    const int have = complex.edge_count(e);
    if (have > 0) touches = true;
    if (have + n > 2) {
      throw Error(ErrorCode::NonManifoldEdge,
                  to_string(facet) + " would give edge " + to_string(e) + " more than two facets");
    }
  }
  if (!touches) {
    throw Error(ErrorCode::Disconnected, to_string(facet) + " shares no edge with the complex");
  }
  std::vector<Facet> fs = complex.facets();
  fs.push_back(facet);
  SigmaComplex out = SigmaComplex::build(fs, complex.periods().generators());
  out.meta() = complex.meta();
  return out;
}

namespace {

StarIndex swap_index(StarIndex k, MirrorAxis axis) {
  if (axis == MirrorAxis::Swap12 && k < 2) return 1 - k;
  if (axis == MirrorAxis::Swap34 && k >= 2) return 5 - k;
  return k;
}

Coord4 swap_coord(const Coord4& c, MirrorAxis axis) {
  Coord4 out;
  for (int k = 0; k < 4; ++k) out[swap_index(k, axis)] = c[k];
  return out;
}

}  // namespace

Facet mirror(const Facet& f, MirrorAxis axis) {
  return {swap_coord(f.anchor, axis), make_facet_type(swap_index(f.type.i, axis), swap_index(f.type.j, axis))};
}

SigmaComplex mirror(const SigmaComplex& complex, MirrorAxis axis) {
  std::vector<Facet> fs;
  for (const auto& f : complex.facets()) fs.push_back(mirror(f, axis));
  std::vector<Coord4> ps;
  for (const auto& p : complex.periods().generators()) ps.push_back(swap_coord(p, axis));
  SigmaComplex out = SigmaComplex::build(fs, ps);
  out.meta() = complex.meta();
  if (axis == MirrorAxis::Swap12) out.meta().requires_.r12_equal = true;
  else out.meta().requires_.r34_equal = true;
  return out;
}

Facet point_reflect(const Facet& f) {
  return {-(f.anchor + Coord4::unit(f.type.i) + Coord4::unit(f.type.j)), f.type};
}

SigmaComplex point_reflect(const SigmaComplex& complex) {
  std::vector<Facet> fs;
  for (const auto& f : complex.facets()) fs.push_back(point_reflect(f));
  std::vector<Coord4> ps;
  for (const auto& p : complex.periods().generators()) ps.push_back(-p);
  SigmaComplex out = SigmaComplex::build(fs, ps);
  out.meta() = complex.meta();
  return out;
}

SigmaComplex translate(const SigmaComplex& complex, const Coord4& offset) {
  std::vector<Facet> fs;
  for (const auto& f : complex.facets()) fs.push_back({f.anchor + offset, f.type});
  SigmaComplex out = SigmaComplex::build(fs, complex.periods().generators());
  out.meta() = complex.meta();
  return out;
}

}  // namespace sigma

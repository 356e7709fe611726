#include "slcinv/topology.hpp"

#include <algorithm>
#include <deque>

#include "slcinv/error.hpp"

namespace slcinv {

namespace {

void require_genus_zero(const ValidatedGluing& g) {
  for (const auto& c : g.curve_components())
    if (c.genus != 0)
      throw Error(Errc::GenusNotZero, "curve '" + c.id + "' has genus " + std::to_string(c.genus));
}

// Marked points of curve c in model order.
std::vector<std::size_t> model_order(const ValidatedGluing& g, std::size_t c) {
  std::size_t partner = g.curve_partner(c);
  if (c < partner) return g.points_of_curve(c);
  std::vector<std::size_t> out;
  for (std::size_t p : g.points_of_curve(partner)) out.push_back(g.tau(p));
  return out;
}

std::vector<std::size_t> cusp_of_points(const ValidatedGluing& g,
                                        const std::vector<DegenerateCusp>& cs) {
  std::vector<std::size_t> out(g.point_count());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (std::size_t p : cs[k].r_cycle) out[p] = k;
    for (std::size_t p : cs[k].s_cycle) out[p] = k;
  }
  return out;
}

void build_forest(HomotopyGraph& h) {
  const std::size_t nv = h.vertex_names.size();
  struct Adj {
    std::size_t edge, other;
  };
  std::vector<std::vector<Adj>> adj(nv);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& ed = h.edges[e];
    if (ed.source == ed.target) continue;
    adj[ed.source].push_back({e, ed.target});
    adj[ed.target].push_back({e, ed.source});
  }
  h.parent_edge.assign(nv, HomotopyGraph::npos);
  h.tree_edge.assign(h.edges.size(), false);
  h.component_of_vertex.assign(nv, HomotopyGraph::npos);
  h.component_count = 0;
  for (std::size_t root = 0; root < nv; ++root) {
    if (h.component_of_vertex[root] != HomotopyGraph::npos) continue;
    const std::size_t comp = h.component_count++;
    h.component_of_vertex[root] = comp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& [e, w] : adj[v]) {
        if (h.component_of_vertex[w] != HomotopyGraph::npos) continue;
        h.component_of_vertex[w] = comp;
        h.parent_edge[w] = e;
        h.tree_edge[e] = true;
        queue.push_back(w);
      }
    }
  }
  h.generator_edges.clear();
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (!h.tree_edge[e]) h.generator_edges.push_back(e);
}

std::string generator_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

// Closed loop in the Dbar graph through generator edge e, as signed edges.
std::vector<std::pair<std::size_t, int>> loop_through(const HomotopyGraph& h, std::size_t e) {
  auto out = h.tree_path(h.edges[e].source);
  out.emplace_back(e, 1);
  auto back = h.tree_path(h.edges[e].target);
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, int>> HomotopyGraph::tree_path(std::size_t v) const {
  std::vector<std::pair<std::size_t, int>> path;
  while (parent_edge[v] != npos) {
    const auto& e = edges[parent_edge[v]];
    // Walking from the root we arrive at v through this edge.
    if (e.target == v) {
      path.emplace_back(parent_edge[v], 1);
      v = e.source;
    } else {
      path.emplace_back(parent_edge[v], -1);
      v = e.target;
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

HomotopyGraph homotopy_graph(Side side, const ValidatedGluing& g) {
  require_genus_zero(g);
  HomotopyGraph h;
  h.side = side;
  const std::size_t nc = g.curve_components().size();

  if (side == Side::Dbar) {
    for (std::size_t n = 0; n < g.nodes().size(); ++n) h.vertex_names.push_back(g.node_name(n));
    for (std::size_t c = 0; c < nc; ++c) {
      auto pts = model_order(g, c);
      h.sphere_attachments.push_back(g.node_of_point(pts.front()));
      for (std::size_t j = 0; j + 1 < pts.size(); ++j)
        h.edges.push_back({g.node_of_point(pts[j]), g.node_of_point(pts[j + 1]), c, j});
    }
  } else {
    auto cs = cusps(g);
    auto cusp_of = cusp_of_points(g, cs);
    for (const auto& cusp : cs) h.vertex_names.push_back("[" + g.node_name(cusp.sorted_nodes().front()) + "]");
    DCurveModel model = quotient_curve(g);
    for (std::size_t k = 0; k < model.components.size(); ++k) {
      auto pts = model_order(g, model.components[k].first);
      h.sphere_attachments.push_back(cusp_of[pts.front()]);
      for (std::size_t j = 0; j + 1 < pts.size(); ++j)
        h.edges.push_back({cusp_of[pts[j]], cusp_of[pts[j + 1]], k, j});
    }
  }
  build_forest(h);
  return h;
}

std::vector<std::size_t> edge_map(const ValidatedGluing& g, const HomotopyGraph& dbar,
                                  const HomotopyGraph& d) {
  DCurveModel model = quotient_curve(g);
  std::vector<std::size_t> first_edge(model.components.size(), HomotopyGraph::npos);
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (first_edge[d.edges[e].label] == HomotopyGraph::npos) first_edge[d.edges[e].label] = e;
  std::vector<std::size_t> out;
  for (const auto& e : dbar.edges)
    out.push_back(first_edge[model.component_of_curve[e.label]] + e.position);
  return out;
}

std::vector<Word> dbar_loop_images(const ValidatedGluing& g) {
  HomotopyGraph dbar = homotopy_graph(Side::Dbar, g);
  HomotopyGraph d = homotopy_graph(Side::D, g);
  auto image = edge_map(g, dbar, d);
  std::vector<std::size_t> letter(d.edges.size(), HomotopyGraph::npos);
  for (std::size_t i = 0; i < d.generator_edges.size(); ++i) letter[d.generator_edges[i]] = i;

  std::vector<Word> out;
  for (std::size_t e : dbar.generator_edges) {
    Word w;
    for (const auto& [edge, sign] : loop_through(dbar, e)) {
      std::size_t l = letter[image[edge]];
      if (l != HomotopyGraph::npos) w.push_back(Letter{l, sign});
    }
    out.push_back(free_reduce(w));
  }
  return out;
}

GroupPresentation pi1_presentation(const ValidatedGluing& g) {
  require_genus_zero(g);
  if (!g.dbar_connected())
    throw Error(Errc::DbarDisconnected,
                "Dbar has " + std::to_string(g.dbar_component_count()) + " components");
  if (g.x_component_count() != 1)
    throw Error(Errc::XDisconnected, "X has " + std::to_string(g.x_component_count()) + " components");
  for (const auto& n : g.normal_components())
    if (!n.simply_connected)
      throw Error(Errc::NotSimplyConnected,
                  "normal component '" + n.id + "' is not simply connected");

  GroupPresentation p;
  HomotopyGraph d = homotopy_graph(Side::D, g);
  for (std::size_t i = 0; i < d.generator_edges.size(); ++i) p.generators.push_back(generator_name(i));
  p.relators = dbar_loop_images(g);
  return p;
}

MayerVietorisMatrices mv_matrices(const ValidatedGluing& g) {
  require_genus_zero(g);
  MayerVietorisMatrices mv;
  const auto& curves = g.curve_components();
  const auto& normal = g.normal_components();
  DCurveModel model = quotient_curve(g);

  std::vector<std::size_t> h2_offset;
  std::size_t rows = model.components.size();
  for (const auto& n : normal) {
    h2_offset.push_back(rows);
    rows += n.h2_rank;
  }
  mv.n = IntegerMatrix(rows, curves.size());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    mv.n(model.component_of_curve[c], c) = 1;
    std::size_t off = h2_offset[g.ambient_of_curve(c)];
    for (std::size_t k = 0; k < curves[c].h2_class.size(); ++k) mv.n(off + k, c) = curves[c].h2_class[k];
  }

  HomotopyGraph dbar = homotopy_graph(Side::Dbar, g);
  HomotopyGraph d = homotopy_graph(Side::D, g);
  auto loops = dbar_loop_images(g);
  mv.m = IntegerMatrix(d.generator_edges.size(), loops.size());
  for (std::size_t j = 0; j < loops.size(); ++j)
    for (const Letter& l : loops[j]) mv.m(l.gen, j) += l.exp;

  // Every Dbar vertex (node) lies over the D vertex of its cusp.
  auto cs = cusps(g);
  auto cusp_of = cusp_of_points(g, cs);
  mv.h0 = IntegerMatrix(d.component_count + normal.size(), g.dbar_component_count());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    std::size_t col = g.dbar_component_of_curve(c);
    std::size_t p = g.points_of_curve(c).front();
    mv.h0(d.component_of_vertex[cusp_of[p]], col) = 1;
    mv.h0(d.component_count + g.ambient_of_curve(c), col) = 1;
  }
  return mv;
}

HomologyOfX homology_of_X(const ValidatedGluing& g) {
  std::size_t h4 = 0;
  for (const auto& n : g.normal_components()) {
    if (!n.h1.is_trivial() || !n.h3.is_trivial())
      throw Error(Errc::UnsupportedNormalHomology,
                  "normal component '" + n.id + "' has nontrivial H1 or H3");
    h4 += n.h4_rank;
  }
  MayerVietorisMatrices mv = mv_matrices(g);
  const std::size_t rank_n = rank(mv.n);
  const std::size_t rank_m = rank(mv.m);
  const std::size_t rank_h0 = rank(mv.h0);

  HomologyOfX h;
  h.groups[4] = AbelianGroup::free(h4);
  h.groups[3] = AbelianGroup::free(mv.n.cols() - rank_n);
  h.groups[2] = direct_sum(cokernel_invariants(mv.n), AbelianGroup::free(mv.m.cols() - rank_m));
  h.groups[1] = direct_sum(cokernel_invariants(mv.m), AbelianGroup::free(mv.h0.cols() - rank_h0));
  h.groups[0] = cokernel_invariants(mv.h0);
  return h;
}

}  // namespace slcinv

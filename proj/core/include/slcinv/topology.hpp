#pragma once

// Graph models of Dbar and D (each curve component is a sphere with marked
// points, homotopy equivalent to a path through the points wedged with a
// 2-sphere), the fundamental group of X as pi_1(D) modulo the image of
// pi_1(Dbar), and the integral homology of X from the Mayer-Vietoris sequence
// of the normalization square.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "slcinv/abelian_group.hpp"
#include "slcinv/gluing.hpp"
#include "slcinv/intlinalg.hpp"
#include "slcinv/words.hpp"

namespace slcinv {

enum class Side { Dbar, D };

struct GraphEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  // Curve component (Dbar side) or D^nu component (D side) carrying the edge.
  std::size_t label = 0;
  // Index of the segment along that component's path.
  std::size_t position = 0;
};

struct HomotopyGraph {
  Side side = Side::Dbar;
  // Dbar: one vertex per node. D: one vertex per degenerate cusp.
  std::vector<std::string> vertex_names;
  std::vector<GraphEdge> edges;
  // Vertex carrying the 2-sphere of each (curve or D^nu) component.
  std::vector<std::size_t> sphere_attachments;
  // Breadth-first spanning forest; roots have parent_edge == npos.
  std::vector<std::size_t> parent_edge;
  std::vector<bool> tree_edge;
  std::vector<std::size_t> generator_edges;  // non-tree edges, ascending
  std::vector<std::size_t> component_of_vertex;
  std::size_t component_count = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t b1() const { return edges.size() + component_count - vertex_names.size(); }
  // Edges (index, +1 forward / -1 backward) on the tree path from the root of
  // v's component to v.
  std::vector<std::pair<std::size_t, int>> tree_path(std::size_t v) const;
};

// Requires genus 0 on every curve component. The smaller curve of each tau
// pair keeps its stored point order; its partner uses the tau-image of that
// order, so every Dbar edge lies over exactly one D edge.
HomotopyGraph homotopy_graph(Side side, const ValidatedGluing& g);

// Index of the D edge under each Dbar edge.
std::vector<std::size_t> edge_map(const ValidatedGluing& g, const HomotopyGraph& dbar,
                                  const HomotopyGraph& d);

// Images in pi_1(D) of the loops closed by the Dbar generator edges, as words
// in the D generator edges (freely reduced).
std::vector<Word> dbar_loop_images(const ValidatedGluing& g);

// Requires connected Dbar, connected X and simply connected normalization.
GroupPresentation pi1_presentation(const ValidatedGluing& g);

struct MayerVietorisMatrices {
  // H2(Dbar) -> H2(D) + H2(Xbar): rows D^nu components then the H2 bases of
  // the normal components; columns curve components.
  IntegerMatrix n;
  // H1(Dbar) -> H1(D): rows D generators, columns Dbar generators.
  IntegerMatrix m;
  // H0(Dbar) -> H0(D) + H0(Xbar): rows D components then normal components;
  // columns Dbar components.
  IntegerMatrix h0;
};

MayerVietorisMatrices mv_matrices(const ValidatedGluing& g);

struct HomologyOfX {
  std::array<AbelianGroup, 5> groups;

  const AbelianGroup& operator[](std::size_t i) const { return groups.at(i); }
  friend bool operator==(const HomologyOfX&, const HomologyOfX&) = default;
};

// Requires trivial H1 and H3 on every normal component.
HomologyOfX homology_of_X(const ValidatedGluing& g);

}  // namespace slcinv

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rotamap/rotary.hpp"

namespace rotamap {

enum class MapConstruction { RotaMap, BiRoMap, RegMap, Custom };
std::string to_string(MapConstruction c);

// A graph together with its faces, each face given by its boundary cycle.
struct CombMap {
  MultiGraph graph;
  std::vector<std::string> face_labels;
  std::vector<CycleSeq> faces;

  MapConstruction construction = MapConstruction::Custom;
  std::string type_label;               // "2^Pex", "2*ex" or empty
  std::map<std::string, Perm> elements; // generating data of the construction
  // Group context; null for hand-built maps.
  std::shared_ptr<const CosetGraph> context;

  std::size_t num_faces() const noexcept { return faces.size(); }
};

CombMap rota_map(const RotaryPair& rp);
CombMap biro_map(const RotaryPair& rp);

struct FlagRegularTriple {
  Perm x, y, z;
  Perm a, b;  // a = xy, b = zy
  Group G;    // <x, y, z>
  Group H;    // <x, y>
  Group J;    // <x, z>
  Group W;    // <y, z>
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t m = 0;         // |b|
  std::size_t lambda_p = 0;  // |<a> ∩ <b>|
};

// Throws DegreeMismatch, NotInvolution, NotDistinct, NotCommuting, ZInsideXY,
// ValencyTooSmall or FaceLengthTooSmall.
FlagRegularTriple validate_flag_regular_triple(const Perm& x, const Perm& y, const Perm& z);

CombMap reg_map(const FlagRegularTriple& t);

// The two face slots of every edge, in order of first appearance.
std::vector<std::array<std::size_t, 2>> edge_faces(const CombMap& M);

// Flags are indexed 4e + 2*end + side, where end selects graph.ends(e) and
// side selects edge_faces(M)[e]. r0 changes the vertex, r1 the edge and r2
// the face.
struct FlagSystem {
  std::size_t count = 0;
  std::vector<std::size_t> r0, r1, r2;
  std::vector<std::size_t> vertex, face;  // per flag; the edge is flag / 4
};

struct SurfaceReport {
  long long chi = 0;
  std::size_t flags = 0;
};

// Throws NotASurface naming the offending edge or vertex.
FlagSystem flag_system(const CombMap& M);
SurfaceReport surface_check(const CombMap& M);

// Face directions that traverse every edge once each way, found by
// propagating across shared edges.
bool orientability(const CombMap& M);

// Permutation of V ∪ E ∪ F induced by an element of the map's group.
// Throws NotAnAutomorphism when a face image is not a face.
Perm map_action(const CombMap& M, const Perm& g);

struct MapKernels {
  Group G_V;
  Group G_VF;
  bool circular = false;
};

// Kernel formulas of the construction, each cross-checked against the kernels
// of the induced actions on V and on V ∪ F. Throws CrossCheckFailed.
MapKernels map_kernels(const CombMap& M);

// Same labelled graph and the same multiset of boundary sequence classes.
// Throws LabelMismatch if the labelled graphs differ.
bool maps_equal(const CombMap& M1, const CombMap& M2);

// Flag-preserving bijection search; both maps must pass surface_check.
bool map_isomorphic(const CombMap& M1, const CombMap& M2,
                    std::size_t budget = kDefaultSearchBudget);

enum class MapKind { Rotary, BiRotary };
std::string to_string(MapKind kind);

struct Classification {
  MapKind kind;
  std::array<std::size_t, 2> faces;  // the two faces at the base edge
};

// Decides whether z swaps or fixes the two faces at the base edge and
// cross-checks the result against rota_map / biro_map of the same pair.
// Throws InconsistentAction or CrossCheckFailed.
Classification classify_vertex_rotary(const CombMap& M, const RotaryPair& rp);

// G, a subgroup of the map's group, is regular on flags modulo its kernel.
bool flag_regular_check(const CombMap& M, const Group& G);

}  // namespace rotamap

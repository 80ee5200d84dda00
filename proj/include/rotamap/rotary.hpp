#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rotamap/cosetgraph.hpp"

namespace rotamap {

// A validated rotary pair (a, z) with the parameters of its coset graph.
struct RotaryPair {
  Perm a, z;
  Group G;   // <a, z>
  Group A;   // <a>
  Group Z;   // <z>
  std::size_t k = 0;          // |<a> : <a> ∩ <a>^z|
  std::size_t lambda = 0;     // |<a> ∩ <a>^z|
  std::size_t m = 0;          // |az|
  std::size_t ell = 0;        // |z z^a|
  std::size_t lambda_p = 0;   // |<a> ∩ <az>|
  std::size_t lambda_pp = 0;  // |<a> ∩ <z z^a>|
};

// Throws DegreeMismatch, ZNotInvolution or ZInsideA.
RotaryPair validate_rotary_pair(const Perm& a, const Perm& z);

// Cos(<a,z>, <a>, <z>).
CosetGraph vertex_rotary_graph(const RotaryPair& rp);

enum class DegenerateKind { TwoVertexExtender, SimpleCycleGraph, General };

struct DegenerateClass {
  DegenerateKind kind = DegenerateKind::General;
  std::size_t r = 0;  // cycle length for SimpleCycleGraph
};

DegenerateClass degenerate_class(const RotaryPair& rp);
std::string to_string(DegenerateKind kind);

// Cyclic edge sequence; edge i joins vertices[i] and vertices[i+1 mod n].
struct CycleSeq {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vertices;
  std::size_t length() const noexcept { return edges.size(); }
};

// Builds the vertex trace of a closed walk through pairwise distinct edges.
// Throws BadCycle when the edges do not close up.
CycleSeq make_cycle(const MultiGraph& graph, std::vector<std::size_t> edges,
                    std::optional<std::size_t> start = std::nullopt);

// Least sequence among all rotations of the edges and of their reversal.
std::vector<std::size_t> normal_form(const std::vector<std::size_t>& edges);
bool seq_class_equal(const CycleSeq& c1, const CycleSeq& c2);

enum class CycleKind { SimpleCycle, ExtendedCycle, DoubledPair, NotRegular };

struct RegularCycleKind {
  CycleKind tag = CycleKind::NotRegular;
  std::size_t n = 0;       // distinct vertices
  std::size_t lambda = 0;  // parallel edges per step of the trace
  friend bool operator==(const RegularCycleKind&, const RegularCycleKind&) = default;
};

RegularCycleKind classify_induced(const CycleSeq& c);
std::string to_string(const RegularCycleKind& kind);

enum class CycleType { AZ, AinvZ, ZZa, ZZainv };
std::string to_string(CycleType type);

struct CanonicalCycle {
  CycleSeq cycle;
  Group stabilizer;          // <az> or <z, z^a> (a^-1 for mirrored kinds)
  std::size_t lambda_param;  // lambda' or lambda''
};

// Throws DegenerateGraph unless degenerate_class(rp) is General.
CanonicalCycle canonical_cycle(const RotaryPair& rp, const CosetGraph& cg, CycleType type);
CanonicalCycle canonical_cycle(const RotaryPair& rp, CycleType type);

// Image of a cycle under g acting by right multiplication on cosets.
CycleSeq translate(const CosetGraph& cg, const CycleSeq& c, const Perm& g);

// Elements of G mapping the cycle into its own sequence class.
Group sequence_stabilizer(const CosetGraph& cg, const CycleSeq& c);

// <a> ∩ <a^z>, cross-checked against the kernel of the action on [G:<a>].
Group vertex_kernel(const RotaryPair& rp);

}  // namespace rotamap

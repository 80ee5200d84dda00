#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "rotamap/perm.hpp"

namespace rotamap {

inline constexpr std::size_t kDefaultCap = 1000000;

// Group-size cap: ROTAMAP_CAP when set to a positive integer, else 10^6.
std::size_t default_cap();

// Breadth-first closure: words by length, generators tried in the given
// order. Throws CapExceeded once the element count would pass `cap`.
std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& generators,
                          std::size_t cap = default_cap());

// A permutation group, fully materialized at construction. Copies share the
// immutable element table.
class Group {
 public:
  Group();
  Group(std::size_t degree, std::vector<Perm> generators,
        std::size_t cap = default_cap());

  // Wraps an element set already known to be closed. Generators are chosen
  // greedily from the lexicographically sorted elements.
  static Group from_elements(std::size_t degree, const std::vector<Perm>& elements);

  std::size_t degree() const noexcept;
  const std::vector<Perm>& generators() const noexcept;
  const std::vector<Perm>& elements() const noexcept;
  std::size_t order() const noexcept;
  Perm identity() const;

  bool contains(const Perm& p) const;
  // Position of p in elements(); npos when p is not a member.
  std::size_t index_of(const Perm& p) const;
  bool is_subgroup_of(const Group& other) const;
  bool is_trivial() const noexcept { return order() == 1; }

  friend bool operator==(const Group& a, const Group& b);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::size_t, PermHash> index;
  };
  explicit Group(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  static std::shared_ptr<const Data> build(std::size_t degree,
                                           std::vector<Perm> generators,
                                           std::size_t cap);

  std::shared_ptr<const Data> d_;
};

Group cyclic(const Perm& p);
Group conjugate(const Group& H, const Perm& g);
Group generated(std::size_t degree, const std::vector<Perm>& elements,
                std::size_t cap = default_cap());
Group intersect(const Group& A, const Group& B);

// Right cosets Hx of H in G, each labelled by its lexicographically least
// element. Representatives are sorted ascending.
class CosetSpace {
 public:
  CosetSpace(const Group& G, const Group& H);

  const Group& ambient() const noexcept { return G_; }
  const Group& subgroup() const noexcept { return H_; }
  std::size_t size() const noexcept { return reps_.size(); }
  const std::vector<Perm>& reps() const noexcept { return reps_; }
  const Perm& rep(std::size_t i) const { return reps_[i]; }

  // Index of the coset containing x, an element of G.
  std::size_t index_of(const Perm& x) const;
  Perm canonical(const Perm& x) const { return reps_[index_of(x)]; }
  // Index of coset(i) * g.
  std::size_t act(std::size_t i, const Perm& g) const;
  // Members of coset i.
  std::vector<Perm> members(std::size_t i) const;

 private:
  Group G_;
  Group H_;
  std::vector<Perm> reps_;
  std::vector<std::size_t> coset_of_;  // indexed like G_.elements()
};

CosetSpace coset_space(const Group& G, const Group& H);

// Elements of G fixing every coset of H.
Group action_kernel(const Group& G, const Group& H);
// Largest normal subgroup of G inside H, as the intersection of conjugates.
Group core(const Group& G, const Group& H);

bool normalizes(const Perm& g, const Group& N);
bool is_normal(const Group& N, const Group& G);
Group center(const Group& G);

// Elements of G fixing the given point.
Group point_stabilizer(const Group& G, Point p);

// All subgroups of G, sorted by order then by sorted element list.
// Throws TooLarge when |G| > limit.
std::vector<Group> all_subgroups(const Group& G, std::size_t limit = 256);

}  // namespace rotamap

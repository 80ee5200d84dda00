#include "rotamap/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "rotamap/error.hpp"

namespace rotamap {

std::size_t default_cap() {
  if (const char* env = std::getenv("ROTAMAP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& generators,
                          std::size_t cap) {
  if (cap < 1) throw Error("CapExceeded", "cap must be at least 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw Error("DegreeMismatch", "generator of degree " +
                                        std::to_string(g.degree()) +
                                        " in a group of degree " +
                                        std::to_string(degree));
    }
  }
  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<Perm, std::size_t, PermHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : generators) {
      Perm next = elements[head] * g;
      if (seen.count(next)) continue;
      if (elements.size() >= cap) {
        throw Error("CapExceeded",
                    "group order exceeds cap " + std::to_string(cap));
      }
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::shared_ptr<const Group::Data> Group::build(std::size_t degree,
                                                std::vector<Perm> generators,
                                                std::size_t cap) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = closure(degree, generators, cap);
  data->generators = std::move(generators);
  data->index.reserve(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    data->index.emplace(data->elements[i], i);
  }
  return data;
}

Group::Group() : d_(build(0, {}, 1)) {}

Group::Group(std::size_t degree, std::vector<Perm> generators, std::size_t cap)
    : d_(build(degree, std::move(generators), cap)) {}

Group Group::from_elements(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> gens;
  std::unordered_map<Perm, bool, PermHash> reached;
  reached.emplace(Perm::identity(degree), true);
  for (const Perm& p : sorted) {
    if (reached.count(p)) continue;
    gens.push_back(p);
    reached.clear();
    for (Perm& q : closure(degree, gens, elements.size() + 1)) {
      reached.emplace(std::move(q), true);
    }
  }
  Group g(degree, gens, elements.size() + 1);
  if (g.order() != elements.size()) {
    throw Error("CrossCheckFailed", "element set is not closed");
  }
  return g;
}

std::size_t Group::degree() const noexcept { return d_->degree; }
const std::vector<Perm>& Group::generators() const noexcept { return d_->generators; }
const std::vector<Perm>& Group::elements() const noexcept { return d_->elements; }
std::size_t Group::order() const noexcept { return d_->elements.size(); }
Perm Group::identity() const { return d_->elements.front(); }

bool Group::contains(const Perm& p) const { return d_->index.count(p) > 0; }

std::size_t Group::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  return it == d_->index.end() ? npos : it->second;
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree() || other.order() % order() != 0) return false;
  for (const Perm& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool operator==(const Group& a, const Group& b) {
  return a.order() == b.order() && a.is_subgroup_of(b);
}

Group cyclic(const Perm& p) { return Group(p.degree(), {p}); }

Group conjugate(const Group& H, const Perm& g) {
  std::vector<Perm> gens;
  gens.reserve(H.generators().size());
  for (const Perm& h : H.generators()) gens.push_back(conj(h, g));
  return Group(H.degree(), gens);
}

Group generated(std::size_t degree, const std::vector<Perm>& elements,
                std::size_t cap) {
  return Group(degree, elements, cap);
}

Group intersect(const Group& A, const Group& B) {
  if (A.degree() != B.degree()) {
    throw Error("DegreeMismatch", "intersection of groups of different degree");
  }
  const Group& small = A.order() <= B.order() ? A : B;
  const Group& large = A.order() <= B.order() ? B : A;
  std::vector<Perm> common;
  for (const Perm& p : small.elements()) {
    if (large.contains(p)) common.push_back(p);
  }
  return Group::from_elements(A.degree(), common);
}

CosetSpace::CosetSpace(const Group& G, const Group& H) : G_(G), H_(H) {
  if (!H.is_subgroup_of(G)) {
    throw Error("NotASubgroup", "subgroup is not contained in the ambient group");
  }
  const auto& elems = G.elements();
  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  coset_of_.assign(elems.size(), Group::npos);
  for (std::size_t idx : order) {
    if (coset_of_[idx] != Group::npos) continue;
    std::size_t label = reps_.size();
    reps_.push_back(elems[idx]);
    for (const Perm& h : H.elements()) {
      coset_of_[G.index_of(h * elems[idx])] = label;
    }
  }
}

std::size_t CosetSpace::index_of(const Perm& x) const {
  std::size_t i = G_.index_of(x);
  if (i == Group::npos) {
    throw Error("NotASubgroup", "element " + x.to_cycles() +
                                    " is not in the ambient group");
  }
  return coset_of_[i];
}

std::size_t CosetSpace::act(std::size_t i, const Perm& g) const {
  return index_of(reps_[i] * g);
}

std::vector<Perm> CosetSpace::members(std::size_t i) const {
  std::vector<Perm> out;
  out.reserve(H_.order());
  for (const Perm& h : H_.elements()) out.push_back(h * reps_[i]);
  return out;
}

CosetSpace coset_space(const Group& G, const Group& H) { return CosetSpace(G, H); }

Group action_kernel(const Group& G, const Group& H) {
  CosetSpace cs(G, H);
  std::vector<Perm> kernel;
  for (const Perm& g : G.elements()) {
    bool trivial = true;
    for (std::size_t i = 0; i < cs.size() && trivial; ++i) {
      trivial = cs.act(i, g) == i;
    }
    if (trivial) kernel.push_back(g);
  }
  return Group::from_elements(G.degree(), kernel);
}

Group core(const Group& G, const Group& H) {
  if (!H.is_subgroup_of(G)) {
    throw Error("NotASubgroup", "subgroup is not contained in the ambient group");
  }
  std::vector<Perm> current = H.elements();
  for (const Perm& g : G.elements()) {
    Perm gi = g.inverse();
    std::vector<Perm> next;
    for (const Perm& h : current) {
      // h lies in H^g iff g h g^-1 lies in H.
      if (H.contains(g * h * gi)) next.push_back(h);
    }
    current = std::move(next);
    if (current.size() == 1) break;
  }
  return Group::from_elements(G.degree(), current);
}

bool normalizes(const Perm& g, const Group& N) {
  for (const Perm& n : N.generators()) {
    if (!N.contains(conj(n, g))) return false;
  }
  return true;
}

bool is_normal(const Group& N, const Group& G) {
  if (!N.is_subgroup_of(G)) return false;
  for (const Perm& g : G.generators()) {
    if (!normalizes(g, N)) return false;
  }
  return true;
}

Group center(const Group& G) {
  std::vector<Perm> z;
  for (const Perm& p : G.elements()) {
    bool central = true;
    for (const Perm& g : G.generators()) {
      if (p * g != g * p) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(p);
  }
  return Group::from_elements(G.degree(), z);
}

Group point_stabilizer(const Group& G, Point p) {
  std::vector<Perm> stab;
  for (const Perm& g : G.elements()) {
    if (g[p] == p) stab.push_back(g);
  }
  return Group::from_elements(G.degree(), stab);
}

namespace {

using Mask = std::vector<std::uint64_t>;

struct Table {
  std::size_t n;
  std::vector<std::size_t> mul;
  std::size_t at(std::size_t a, std::size_t b) const { return mul[a * n + b]; }
};

Mask close_indices(const Table& t, const std::vector<std::size_t>& gens) {
  Mask mask((t.n + 63) / 64, 0);
  std::vector<std::size_t> queue{0};
  mask[0] |= 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t g : gens) {
      std::size_t next = t.at(queue[head], g);
      if (mask[next / 64] >> (next % 64) & 1ULL) continue;
      mask[next / 64] |= 1ULL << (next % 64);
      queue.push_back(next);
    }
  }
  return mask;
}

}  // namespace

std::vector<Group> all_subgroups(const Group& G, std::size_t limit) {
  if (G.order() > limit) {
    throw Error("TooLarge", "subgroup enumeration limited to order " +
                                std::to_string(limit));
  }
  const auto& elems = G.elements();
  Table t{elems.size(), {}};
  t.mul.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) {
      t.mul[a * t.n + b] = G.index_of(elems[a] * elems[b]);
    }
  }

  std::map<Mask, std::vector<std::size_t>> found;
  std::deque<Mask> work;
  std::vector<std::size_t> cyclic_gens;
  for (std::size_t i = 0; i < t.n; ++i) {
    Mask m = close_indices(t, {i});
    if (found.emplace(m, std::vector<std::size_t>{i}).second) {
      work.push_back(m);
      cyclic_gens.push_back(i);
    }
  }
  while (!work.empty()) {
    Mask m = work.front();
    work.pop_front();
    const std::vector<std::size_t> gens = found.at(m);
    for (std::size_t c : cyclic_gens) {
      if (m[c / 64] >> (c % 64) & 1ULL) continue;
      std::vector<std::size_t> joined = gens;
      joined.push_back(c);
      Mask j = close_indices(t, joined);
      if (found.emplace(j, joined).second) work.push_back(j);
    }
  }

  std::vector<std::pair<std::vector<Perm>, Group>> subs;
  for (const auto& [mask, gens] : found) {
    std::vector<Perm> members;
    for (std::size_t i = 0; i < t.n; ++i) {
      if (mask[i / 64] >> (i % 64) & 1ULL) members.push_back(elems[i]);
    }
    std::sort(members.begin(), members.end());
    std::vector<Perm> gen_perms;
    for (std::size_t i : gens) gen_perms.push_back(elems[i]);
    subs.emplace_back(members, Group(G.degree(), gen_perms));
  }
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Group> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.push_back(std::move(s.second));
  return out;
}

}  // namespace rotamap

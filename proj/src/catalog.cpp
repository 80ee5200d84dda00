#include "rotamap/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "rotamap/catalog_data.hpp"
#include "rotamap/error.hpp"

namespace rotamap {

namespace {

void require(bool ok, const std::string& entry, const std::string& what) {
  if (!ok) throw Error("CrossCheckFailed", entry + ": " + what);
}

std::vector<Perm> values(const std::map<std::string, Perm>& m) {
  std::vector<Perm> out;
  for (const auto& [name, p] : m) out.push_back(p);
  return out;
}

Group group_of(std::size_t degree, std::initializer_list<Perm> gens) {
  return Group(degree, std::vector<Perm>(gens));
}

template <std::size_t N>
Perm from_array(const std::array<Point, N>& images) {
  return Perm(std::vector<Point>(images.begin(), images.end()));
}

}  // namespace

CatalogEntry petersen(PetersenVariant variant) {
  const bool s5 = variant == PetersenVariant::S5;
  CatalogEntry e;
  e.name = s5 ? "petersen-s5" : "petersen-a5";
  auto p = [](const char* cycles) { return Perm::parse_cycles(cycles, 5, 1); };
  e.elements = {{"h1", p("(1 4 5)")}, {"h2", p("(2 3)(4 5)")},
                {"g", p("(2 4)(3 5)")}, {"b", p("(2 3)(4 5)")}};
  if (s5) e.elements.emplace("t", p("(4 5)"));
  e.group = Group(5, values(e.elements));

  std::vector<Perm> hgens{e.elements["h1"], e.elements["h2"]};
  std::vector<Perm> lgens{e.elements["b"], e.elements["g"]};
  if (s5) {
    hgens.push_back(e.elements["t"]);
    lgens.push_back(e.elements["t"]);
  }
  Group H(5, hgens);
  Group L(5, lgens);
  Group K = intersect(H, conjugate(H, e.elements["g"]));
  e.subgroups = {{"G", e.group}, {"H", H}, {"K", K}, {"L", L}};

  const std::size_t scale = s5 ? 2 : 1;
  require(e.group.order() == 60 * scale, e.name, "|G|");
  require(H.order() == 6 * scale, e.name, "|H|");
  require(L.order() == 4 * scale, e.name, "|L|");
  require(K.order() == 2 * scale, e.name, "|K|");
  require(!H.contains(e.elements["g"]) && L.contains(e.elements["g"]), e.name,
          "g must lie in L \\ H");
  return e;
}

CatalogEntry hypercube(std::size_t n, std::size_t lambda) {
  if (n < 3 || lambda < 1) {
    throw Error("BadParams", "hypercube needs n >= 3 and lambda >= 1");
  }
  const std::size_t nl = n * lambda;
  const std::size_t degree = 2 * n + nl;
  auto cube = [n](std::size_t eps, std::size_t i) { return static_cast<Point>(eps * n + i); };
  auto ring = [n](std::size_t j) { return static_cast<Point>(2 * n + j); };

  std::vector<Point> a(degree), x(degree);
  for (std::size_t eps = 0; eps < 2; ++eps) {
    for (std::size_t i = 0; i < n; ++i) {
      a[cube(eps, i)] = cube(eps, (i + 1) % n);
      x[cube(eps, i)] = cube(eps, (n - i) % n);
    }
  }
  for (std::size_t j = 0; j < nl; ++j) {
    a[ring(j)] = ring((j + 1) % nl);
    x[ring(j)] = ring((nl - j) % nl);
  }

  CatalogEntry e;
  e.name = "hypercube";
  e.params = {{"n", static_cast<long long>(n)}, {"lambda", static_cast<long long>(lambda)}};
  std::vector<Perm> v;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::swap(img[cube(0, j)], img[cube(1, j)]);
    v.emplace_back(std::move(img));
    e.elements.emplace("v" + std::to_string(j), v.back());
  }
  const Perm pa(std::move(a)), px(std::move(x));
  const Perm z = v[0];
  e.elements.emplace("a", pa);
  e.elements.emplace("x", px);
  e.elements.emplace("z", z);
  e.elements.emplace("y", pa * px);
  e.elements.emplace("zx", z * px);

  for (std::size_t i = 0; i < n; ++i) {
    require(conj(v[i], pa) == v[(i + 1) % n], e.name, "v_i^a = v_{i+1}");
    require(conj(v[i], px) == v[(n - i) % n], e.name, "v_i^x = v_{n-i}");
  }
  require(conj(pa, px) == pa.inverse(), e.name, "a^x = a^-1");
  require(element_order(pa) == nl, e.name, "|a| = n lambda");

  const Perm& y = e.elements.at("y");
  e.group = Group(degree, {pa, px, z});
  Group X = group_of(degree, {pa, z});
  Group Y = group_of(degree, {pa, z * px});
  const std::size_t order = (std::size_t{1} << (n + 1)) * nl;
  require(e.group.order() == order, e.name, "|A| = 2^(n+1) n lambda");
  require(X.order() * 2 == order && Y.order() * 2 == order, e.name, "|A:X| = |A:Y| = 2");
  require(Group(degree, {px, y, z}) == e.group, e.name, "A = <x, y, z>");
  e.subgroups = {{"A", e.group},
                 {"X", X},
                 {"Y", Y},
                 {"H", group_of(degree, {px, y})},
                 {"J", group_of(degree, {px, z})},
                 {"W", group_of(degree, {y, z})}};
  return e;
}

CatalogEntry knn(std::size_t n, std::size_t lambda) {
  if (n < 3 || n % 2 == 0) throw Error("BadParams", "knn needs odd n >= 3");
  if (lambda <= 2 || lambda % 2 != 0) throw Error("BadParams", "knn needs even lambda > 2");
  if (std::gcd(n, lambda) != 1) throw Error("BadParams", "knn needs gcd(lambda, n) = 1");
  const std::size_t mu = lambda / 2;
  const std::size_t delta = mu % 2 == 0 ? 1 : 2;
  const std::size_t r = mu + delta;
  if ((r * r) % lambda != 1 % lambda) {
    throw Error("IllDefined", "(mu+delta)^2 = " + std::to_string((r * r) % lambda) +
                                  " mod " + std::to_string(lambda) +
                                  ", so z is not an involution on <b>");
  }

  const std::size_t degree = lambda + 2 * n;
  auto id = [degree] {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return img;
  };
  const Point first = static_cast<Point>(lambda);
  const Point second = static_cast<Point>(lambda + n);
  std::vector<Point> b = id(), c1 = id(), c2 = id(), z = id();
  for (std::size_t j = 0; j < lambda; ++j) {
    b[j] = static_cast<Point>((j + 1) % lambda);
    z[j] = static_cast<Point>((j * r) % lambda);
  }
  for (std::size_t i = 0; i < n; ++i) {
    c1[first + i] = static_cast<Point>(first + (i + 1) % n);
    c2[second + i] = static_cast<Point>(second + (i + 1) % n);
    z[second + i] = static_cast<Point>(second + (n - i) % n);
  }

  CatalogEntry e;
  e.name = "knn";
  const Perm pb(std::move(b)), pc1(std::move(c1)), pc2(std::move(c2)), pz(std::move(z));
  const Perm pa = pb * pc1 * pc2;
  e.elements = {{"a", pa}, {"b", pb}, {"c1", pc1}, {"c2", pc2}, {"z", pz}};

  require(element_order(pz) == 2, e.name, "|z| = 2");
  require(conj(pb, pz) == pb.pow(static_cast<long long>(r)), e.name, "b^z = b^(mu+delta)");
  require(conj(pc1, pz) == pc1, e.name, "c1^z = c1");
  require(conj(pc2, pz) == pc2.inverse(), e.name, "c2^z = c2^-1");
  require(element_order(pa) == lambda * n, e.name, "|a| = lambda n");

  e.group = Group(degree, values(e.elements));
  require(e.group.order() == 2 * lambda * n * n, e.name, "|G| = 2 lambda n^2");
  require(Group(degree, {pa, pz}) == e.group, e.name, "G = <a, z>");

  const std::size_t lambda_p = element_order(pb.pow(static_cast<long long>(r + 1)));
  e.params = {{"n", static_cast<long long>(n)},
              {"lambda", static_cast<long long>(lambda)},
              {"mu", static_cast<long long>(mu)},
              {"delta", static_cast<long long>(delta)},
              {"lambda_p", static_cast<long long>(lambda_p)},
              {"m", static_cast<long long>(2 * std::lcm(lambda_p, n))}};
  e.subgroups = {{"G", e.group}};
  return e;
}

const std::vector<std::vector<Point>>& three_a6_blocks() {
  static const std::vector<std::vector<Point>> blocks = [] {
    std::vector<std::vector<Point>> out;
    for (const auto& b : detail::kThreeA6Blocks) out.emplace_back(b.begin(), b.end());
    return out;
  }();
  return blocks;
}

Perm three_a6_block_image(const Perm& g) {
  const auto& blocks = three_a6_blocks();
  std::vector<Point> block_of(18);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Point p : blocks[i]) block_of[p] = static_cast<Point>(i);
  }
  std::vector<Point> img(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Point target = block_of[g[blocks[i][0]]];
    for (Point p : blocks[i]) {
      if (block_of[g[p]] != target) {
        throw Error("CrossCheckFailed", "element does not preserve the block system");
      }
    }
    img[i] = target;
  }
  return Perm(std::move(img));
}

CatalogEntry three_a6() {
  CatalogEntry e;
  e.name = "three-a6";
  const Perm a = from_array(detail::kThreeA6_a);
  const Perm z = from_array(detail::kThreeA6_z);
  const Perm b = from_array(detail::kThreeA6_b);
  const Perm c = from_array(detail::kThreeA6_c);
  const Perm ap = from_array(detail::kThreeA6_ap);
  e.elements = {{"a", a}, {"z", z}, {"b", b}, {"c", c}, {"ap", ap}};
  e.group = Group(18, {a, z});
  const Group Z = center(e.group);
  e.subgroups = {{"G", e.group}, {"Z", Z}};

  require(Group(18, values(e.elements)) == e.group, e.name, "b, c, a' lie in <a, z>");
  require(e.group.order() == 1080, e.name, "|G| = 1080");
  require(Z.order() == 3 && Z.contains(c) && !c.is_identity(), e.name, "Z(G) = <c> of order 3");
  require(element_order(b) == 5 && element_order(z) == 2, e.name, "|b| = 5, |z| = 2");
  require(b * b * c == a, e.name, "a = b^2 c");
  require(element_order(a) == 15, e.name, "|a| = 15");
  require(ap == a.pow(11), e.name, "a' = a^11");
  require(element_order(z * conj(z, a)) == 5, e.name, "|z z^a| = 5");

  std::vector<Perm> images;
  for (const Perm& g : e.group.generators()) images.push_back(three_a6_block_image(g));
  const Group quotient(6, images);
  require(quotient.order() == 360, e.name, "G/Z has order 360");
  const Perm shift = Perm::parse_cycles("(1 2 3 4 5)", 6, 1);
  require(quotient == Group(6, {shift, Perm::parse_cycles("(1 2 3)", 6, 1),
                                Perm::parse_cycles("(4 5 6)", 6, 1)}),
          e.name, "G/Z acts as A6 on the blocks");
  require(three_a6_block_image(a) == shift, e.name, "a maps to (1 2 3 4 5) on blocks");
  require(three_a6_block_image(z) == Perm::parse_cycles("(3 4)(5 6)", 6, 1), e.name,
          "z maps to (3 4)(5 6) on blocks");
  return e;
}

CatalogEntry core_example(std::size_t lambda) {
  if (lambda < 2) throw Error("BadParams", "core_example needs lambda >= 2");
  const std::size_t degree = 3 + lambda;
  std::vector<std::vector<Point>> ring(1);
  for (std::size_t j = 0; j < lambda; ++j) ring[0].push_back(static_cast<Point>(3 + j));

  CatalogEntry e;
  e.name = "core-example";
  e.params = {{"lambda", static_cast<long long>(lambda)}};
  const Perm r = Perm::from_cycles(degree, {{0, 1, 2}});
  const Perm s = Perm::from_cycles(degree, {{0, 1}});  // generates Y3
  const Perm t = Perm::from_cycles(degree, {{1, 2}});  // generates Y1
  const Perm w = Perm::from_cycles(degree, ring);
  e.elements = {{"r", r}, {"s", s}, {"t", t}, {"w", w}};
  e.group = Group(degree, values(e.elements));
  const Group Z = cyclic(w);
  e.subgroups = {{"G", e.group},
                 {"H", group_of(degree, {t, w})},
                 {"J", cyclic(s)},
                 {"Z", Z}};
  require(e.group.order() == 6 * lambda, e.name, "|G| = 6 lambda");
  return e;
}

std::vector<std::string> catalog_names() {
  return {"petersen-a5", "petersen-s5", "hypercube", "knn", "three-a6", "core-example"};
}

CatalogEntry catalog_entry(const std::string& name, std::size_t n, std::size_t lambda) {
  if (name == "petersen-a5") return petersen(PetersenVariant::A5);
  if (name == "petersen-s5") return petersen(PetersenVariant::S5);
  if (name == "hypercube") return hypercube(n, lambda);
  if (name == "knn") return knn(n, lambda);
  if (name == "three-a6") return three_a6();
  if (name == "core-example") return core_example(lambda);
  throw Error("UnknownName", "no catalog entry named '" + name + "'");
}

}  // namespace rotamap

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rotamap/group.hpp"

namespace rotamap {

// One of the example families as an explicit permutation group. `group` is
// generated by all named elements; `subgroups` holds the named subgroups the
// examples are built from. Relations and orders are re-checked on
// construction and a failure raises CrossCheckFailed.
struct CatalogEntry {
  std::string name;
  Group group;
  std::map<std::string, Perm> elements;
  std::map<std::string, Group> subgroups;
  std::map<std::string, long long> params;
};

enum class PetersenVariant { A5, S5 };

// Points 1..5 stored as 0..4. Elements h1, h2 (and t for S5) generate H,
// g reverses the arc {2,3} - {4,5}, b = (2 3)(4 5). Subgroups G, H, K, L.
CatalogEntry petersen(PetersenVariant variant);

// A = Z_2^n : D_{2n lambda} on 2n + n lambda points. Elements v0..v{n-1},
// a, x, z = v0, y = a x, zx. Subgroups A, X, Y, H, J, W.
// Throws BadParams unless n >= 3 and lambda >= 1.
CatalogEntry hypercube(std::size_t n, std::size_t lambda);

// (<b> x <c1> x <c2>) : <z> on lambda + 2n points, a = b c1 c2.
// Params n, lambda, mu, delta, lambda_p (= |b^(mu+delta+1)|) and m.
// Throws BadParams on the parameter constraints and IllDefined when
// (mu+delta)^2 != 1 mod lambda.
CatalogEntry knn(std::size_t n, std::size_t lambda);

// 3.A6 on 18 points with a, z, b, c, ap = a^11. Subgroups G, Z (centre).
CatalogEntry three_a6();

// S3 x Z_lambda on 3 + lambda points with H = Y1 x Z, J = Y3 x 1.
// Throws BadParams unless lambda >= 2.
CatalogEntry core_example(std::size_t lambda);

// Entry names accepted by catalog_entry, for the CLI.
std::vector<std::string> catalog_names();

// Dispatch by name; `n` and `lambda` are used where relevant.
// Throws UnknownName.
CatalogEntry catalog_entry(const std::string& name, std::size_t n, std::size_t lambda);

// Block system of the 3.A6 data: blocks[i] is the fibre labelled i + 1.
const std::vector<std::vector<Point>>& three_a6_blocks();

// Action of g on the blocks of three_a6_blocks(), as a permutation of 6 points.
Perm three_a6_block_image(const Perm& g);

}  // namespace rotamap

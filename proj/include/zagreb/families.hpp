#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/numeric.hpp"

namespace zagreb {

/// Parameters of the equality family G(x, y, z, w): x chained copies of
/// K_{2,5}, a path on 2y vertices, one modified K_{2,z} and w spliced copies
/// of K_{3,3}.
struct FamilyParams {
  std::uint64_t x = 1;
  std::uint64_t y = 1;
  std::uint64_t z = 2;
  std::uint64_t w = 1;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws std::invalid_argument unless x, y, w >= 1 and z >= 2.
void validate(const FamilyParams& params);

/// Builds G(x, y, z, w). The result is checked against the closed-form
/// degree multiset, edge-class table, order, size and connectivity; any
/// mismatch throws std::logic_error.
Graph build_gxyzw(const FamilyParams& params);

/// Closed forms for G(x, y, z, w).
std::uint64_t family_order(const FamilyParams& params);
std::uint64_t family_size(const FamilyParams& params);
Integer family_first_zagreb(const FamilyParams& params);
Integer family_second_zagreb(const FamilyParams& params);
EdgeClassCounts family_edge_classes(const FamilyParams& params);

/// m*M1 - n*M2 of G(x, y, z, w) as the explicit polynomial in x, y, z, w.
Integer family_defect_polynomial(const FamilyParams& params);

/// True when z collides with one of the fixed degrees 2, 3, 5, so the degree
/// set has fewer than four values.
bool degree_collision(const FamilyParams& params);

/// Chooses w so that the denominator of the x-formula is 1, then takes x as
/// its numerator. The built graph is verified to satisfy m*M1 = n*M2;
/// violations throw std::logic_error. Needs y >= 1 and z >= 2.
FamilyParams solve_params(std::uint64_t y, std::uint64_t z);

/// Known equality (and violation) families.
struct CatalogEntry {
  std::string name;
  std::vector<std::uint64_t> params;
  Verdict expected_verdict = Verdict::Equal;
};

/// Family names accepted by catalog_entry / catalog_generate.
const std::vector<std::string>& catalog_families();

/// Fills in the expected verdict for `name`. Throws std::invalid_argument
/// for an unknown family.
CatalogEntry catalog_entry(const std::string& name, std::vector<std::uint64_t> params);

///   subdivision-of-regular  r, base   S(G) of an r-regular circulant on `base` vertices
///   equal-complete-union    p, count  count copies of K_p
///   complete3-plus-cycle    q         K_3 u C_q
///   two-paths               p, q      P_p u P_q with (p,q) in {(2,2), (3,3)}
///   cycle-plus-K22          p         C_p u K_{2,2}
///   cycle-plus-star4        p         C_p u K_{1,4}
///   cycle-plus-star-b       p, b      C_p u K_{1,b}, b >= 5 (violates the inequality)
Graph catalog_generate(const CatalogEntry& entry);

}  // namespace zagreb

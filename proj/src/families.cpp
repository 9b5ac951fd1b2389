#include "zagreb/families.hpp"

#include <map>
#include <stdexcept>

namespace zagreb {

namespace {

std::string describe(const FamilyParams& p) {
  return "G(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + "," +
         std::to_string(p.w) + ")";
}

void ensure(bool ok, const FamilyParams& params, const std::string& what) {
  if (!ok) throw std::logic_error("construction of " + describe(params) + " broke: " + what);
}

std::map<Degree, std::uint64_t> expected_degree_counts(const FamilyParams& p) {
  std::map<Degree, std::uint64_t> counts;
  counts[5] += 2 * p.x;
  counts[3] += 8 * p.w + 2;
  counts[2] += 5 * p.x + 2 * p.y + p.z + 2;
  counts[static_cast<Degree>(p.z)] += 2;
  return counts;
}

std::uint64_t require_param(const std::vector<std::uint64_t>& params, std::size_t count,
                            const std::string& family, std::size_t index) {
  if (params.size() != count) {
    throw std::invalid_argument(family + " takes " + std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
  return params[index];
}

}  // namespace

void validate(const FamilyParams& params) {
  if (params.x < 1 || params.y < 1 || params.w < 1) {
    throw std::invalid_argument("G(x,y,z,w) needs x, y, w >= 1");
  }
  if (params.z < 2) throw std::invalid_argument("G(x,y,z,w) needs z >= 2");
}

std::uint64_t family_order(const FamilyParams& p) { return 7 * p.x + 2 * p.y + p.z + 8 * p.w + 6; }

std::uint64_t family_size(const FamilyParams& p) { return 10 * p.x + 2 * p.y + 2 * p.z + 12 * p.w + 5; }

Integer family_first_zagreb(const FamilyParams& p) {
  Integer z = p.z;
  return 2 * (35 * Integer(p.x) + 4 * Integer(p.y) + z * z + 2 * z + 36 * Integer(p.w) + 13);
}

Integer family_second_zagreb(const FamilyParams& p) {
  Integer z = p.z;
  return 100 * Integer(p.x) + 8 * Integer(p.y) + 4 * z * z + 108 * Integer(p.w) + 36;
}

EdgeClassCounts family_edge_classes(const FamilyParams& p) {
  EdgeClassCounts out;
  auto add = [&](Degree i, Degree j, std::uint64_t count) {
    out.entries[{std::min(i, j), std::max(i, j)}] += count;
  };
  add(static_cast<Degree>(p.z), 2, 2 * p.z);
  add(5, 2, 10 * p.x - 1);
  add(3, 2, 3);
  add(2, 2, 2 * p.y + 1);
  add(5, 3, 1);
  add(3, 3, 12 * p.w + 1);
  return out;
}

Integer family_defect_polynomial(const FamilyParams& p) {
  Integer x = p.x, y = p.y, z = p.z, w = p.w;
  return -86 - 242 * x - 28 * y + 36 * z - 264 * w - 36 * x * y + 80 * x * z + 4 * x * w + 16 * y * z -
         40 * y * w + 84 * z * w - 8 * x * z * z - 4 * y * z * z - 8 * w * z * z - 6 * z * z;
}

bool degree_collision(const FamilyParams& params) {
  return params.z == 2 || params.z == 3 || params.z == 5;
}

Graph build_gxyzw(const FamilyParams& params) {
  validate(params);
  const std::uint64_t x = params.x;
  const std::uint64_t y = params.y;
  const std::uint64_t z = params.z;
  const std::uint64_t w = params.w;

  GraphBuilder b;

  // Chained K_{2,5} copies: per copy u1, u2 then v1..v5.
  struct Block {
    Vertex u1, u2;
    Vertex v[5];
  };
  std::vector<Block> blocks(x);
  for (auto& blk : blocks) {
    blk.u1 = b.add_vertex();
    blk.u2 = b.add_vertex();
    for (auto& vi : blk.v) vi = b.add_vertex();
    for (Vertex vi : blk.v) {
      b.add_edge(blk.u1, vi);
      b.add_edge(blk.u2, vi);
    }
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    Block& cur = blocks[i];
    Block& nxt = blocks[i + 1];
    b.remove_edge(cur.u2, cur.v[4]);
    b.remove_edge(nxt.u1, nxt.v[0]);
    b.add_edge(cur.u2, nxt.v[0]);
    b.add_edge(nxt.u1, cur.v[4]);
  }
  // The chain's two open ends receive the path, the extra degree-2 vertex
  // and the hub vertex q.
  Block& first = blocks.front();
  Block& last = blocks.back();
  b.remove_edge(last.u2, last.v[4]);
  b.remove_edge(first.u1, first.v[0]);

  // K_{2,z} without t2p1 and t1pz.
  Vertex t1 = b.add_vertex();
  Vertex t2 = b.add_vertex();
  Vertex p_first = b.add_vertices(z);
  Vertex p_last = p_first + static_cast<Vertex>(z - 1);
  for (Vertex pi = p_first; pi <= p_last; ++pi) {
    if (pi != p_last) b.add_edge(t1, pi);
    if (pi != p_first) b.add_edge(t2, pi);
  }

  // Path on 2y vertices from v5 of the last copy to p1.
  Vertex q_first = b.add_vertices(2 * y);
  b.add_edge(last.v[4], q_first);
  for (Vertex qi = q_first; qi + 1 < q_first + 2 * y; ++qi) b.add_edge(qi, qi + 1);
  b.add_edge(q_first + static_cast<Vertex>(2 * y - 1), p_first);

  Vertex bridge = b.add_vertex();
  b.add_edge(last.u2, bridge);
  b.add_edge(bridge, t1);

  Vertex t = b.add_vertex();
  Vertex s = b.add_vertex();
  b.add_edge(t2, t);
  b.add_edge(p_last, s);
  b.add_edge(t, s);

  // Spliced K_{3,3} chain: a^i joins a1 and a3 in place of a1b1, b^i joins
  // b1 and b3 in place of a3b3.
  Vertex previous = s;
  for (std::uint64_t i = 0; i < w; ++i) {
    Vertex a0 = b.add_vertices(3);
    Vertex b0 = b.add_vertices(3);
    for (Vertex ai = a0; ai < a0 + 3; ++ai) {
      for (Vertex bi = b0; bi < b0 + 3; ++bi) b.add_edge(ai, bi);
    }
    b.remove_edge(a0, b0);
    b.remove_edge(a0 + 2, b0 + 2);
    Vertex a_new = b.add_vertex();
    Vertex b_new = b.add_vertex();
    b.add_edge(a_new, a0);
    b.add_edge(a_new, a0 + 2);
    b.add_edge(b_new, b0);
    b.add_edge(b_new, b0 + 2);
    b.add_edge(previous, a_new);
    previous = b_new;
  }
  Vertex hub = b.add_vertex();
  b.add_edge(hub, previous);
  b.add_edge(hub, first.u1);
  b.add_edge(hub, first.v[0]);

  Graph g = std::move(b).build();

  ensure(g.order() == family_order(params), params, "vertex count");
  ensure(g.size() == family_size(params), params, "edge count");
  std::map<Degree, std::uint64_t> degrees;
  for (Vertex v = 0; v < g.order(); ++v) ++degrees[g.degree(v)];
  ensure(degrees == expected_degree_counts(params), params, "degree multiset");
  ensure(edge_class_counts(g) == family_edge_classes(params), params, "edge class table");
  ensure(is_connected(g), params, "connectivity");
  return g;
}

FamilyParams solve_params(std::uint64_t y, std::uint64_t z) {
  if (y < 1 || z < 2) throw std::invalid_argument("solve_params needs y >= 1 and z >= 2");
  Integer Y = y, Z = z;
  // 2z² - 20z + 61 has negative discriminant, so w > 0 for every y.
  Integer W = 61 + 9 * Y - 20 * Z + 2 * Z * Z;
  Integer denominator = -121 - 18 * Y + 2 * W + 40 * Z - 4 * Z * Z;
  Integer numerator = 132 * W - 42 * Z * W + 4 * Z * Z * W + 14 * Y - 8 * Y * Z + 20 * Y * W +
                      2 * Y * Z * Z + 3 * Z * Z - 18 * Z + 43;
  if (denominator != 1) {
    throw std::logic_error("x-formula denominator is " + denominator.str() + ", expected 1");
  }
  if (numerator < 1 || numerator > Integer(UINT32_MAX)) {
    throw std::logic_error("solved x = " + numerator.str() + " is out of range");
  }
  FamilyParams params{numerator.convert_to<std::uint64_t>(), y, z, W.convert_to<std::uint64_t>()};

  if (family_defect_polynomial(params) != 0) {
    throw std::logic_error("solved " + describe(params) + " does not annihilate m*M1 - n*M2");
  }
  ZagrebReport report = compare(build_gxyzw(params));
  if (report.verdict != Verdict::Equal) {
    throw std::logic_error("solved " + describe(params) + " built a graph with verdict " +
                           to_string(report.verdict));
  }
  return params;
}

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> names = {
      "subdivision-of-regular", "equal-complete-union", "complete3-plus-cycle", "two-paths",
      "cycle-plus-K22",         "cycle-plus-star4",     "cycle-plus-star-b",
  };
  return names;
}

CatalogEntry catalog_entry(const std::string& name, std::vector<std::uint64_t> params) {
  bool known = false;
  for (const auto& n : catalog_families()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown family: " + name);
  Verdict expected = name == "cycle-plus-star-b" ? Verdict::StrictlyGreater : Verdict::Equal;
  return {name, std::move(params), expected};
}

Graph catalog_generate(const CatalogEntry& entry) {
  const auto& name = entry.name;
  const auto& ps = entry.params;
  auto fail = [&](const std::string& why) -> Graph { throw std::invalid_argument(name + ": " + why); };

  if (name == "subdivision-of-regular") {
    std::uint64_t r = require_param(ps, 2, name, 0);
    std::uint64_t base = ps[1];
    if (r < 1) return fail("needs r >= 1");
    return subdivision(regular_circulant(base, r));
  }
  if (name == "equal-complete-union") {
    std::uint64_t p = require_param(ps, 2, name, 0);
    std::uint64_t count = ps[1];
    if (p < 2 || count < 1) return fail("needs p >= 2 and count >= 1");
    Graph g = complete(p);
    for (std::uint64_t i = 1; i < count; ++i) g = disjoint_union(g, complete(p));
    return g;
  }
  if (name == "complete3-plus-cycle") {
    std::uint64_t q = require_param(ps, 1, name, 0);
    if (q < 3) return fail("needs q >= 3");
    return disjoint_union(complete(3), cycle(q));
  }
  if (name == "two-paths") {
    std::uint64_t p = require_param(ps, 2, name, 0);
    std::uint64_t q = ps[1];
    if (!((p == 2 && q == 2) || (p == 3 && q == 3))) return fail("only (2,2) and (3,3) are known");
    return disjoint_union(path(p), path(q));
  }
  if (name == "cycle-plus-K22") {
    std::uint64_t p = require_param(ps, 1, name, 0);
    if (p < 3) return fail("needs p >= 3");
    return disjoint_union(cycle(p), complete_bipartite(2, 2));
  }
  if (name == "cycle-plus-star4") {
    std::uint64_t p = require_param(ps, 1, name, 0);
    if (p < 3) return fail("needs p >= 3");
    return disjoint_union(cycle(p), star(4));
  }
  if (name == "cycle-plus-star-b") {
    std::uint64_t p = require_param(ps, 2, name, 0);
    std::uint64_t b = ps[1];
    if (p < 3 || b < 5) return fail("needs p >= 3 and b >= 5");
    return disjoint_union(cycle(p), star(b));
  }
  return fail("unknown family");
}

}  // namespace zagreb

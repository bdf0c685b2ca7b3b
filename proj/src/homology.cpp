#include "mh/homology.hpp"

#include <map>
#include <numeric>

#include "mh/error.hpp"

namespace mh {

HomologyGroup complex_homology(const SparseIntMatrix& out, const SparseIntMatrix& in, std::size_t dim) {
  HomologyGroup h;
  if (dim == 0) return h;
  std::size_t rank_out = out.rows() == 0 || out.cols() == 0 ? 0 : integer_rank(out);
  SmithNormalForm snf;
  if (in.rows() != 0 && in.cols() != 0) snf = smith_normal_form(in);
  h.rank = dim - rank_out - snf.rank();
  h.torsion = snf.torsion();
  return h;
}

namespace {

void check_cap(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant, std::size_t cap) {
  for (int k = std::max(n - 1, 0); k <= n + 1; ++k) {
    Integer count = count_trails(space, k, ell, variant);
    if (count > cap) {
      throw ResourceLimit("basis of MC_" + std::to_string(k) + "^" + format_rational(ell) + " has " +
                          count.get_str() + " elements, above the cap of " + std::to_string(cap));
    }
  }
}

std::vector<Tuple> block_trails(const QuasiMetricSpace& space, int n, std::int64_t ell, Variant variant, Point a,
                                Point b) {
  std::vector<Tuple> out;
  for_each_trail(space, n, ell, variant, a, b, [&](const Tuple& t) { out.push_back(t); });
  return out;
}

/// Chain groups of degrees n-1, n, n+1 with fixed endpoints (a, b).
struct Block {
  Point a = 0, b = 0;
  std::vector<Tuple> lower, middle, upper;
};

std::vector<Block> blocks(const QuasiMetricSpace& space, int n, std::int64_t ell, Variant variant) {
  std::vector<Block> out;
  for (Point a = 0; a < space.size(); ++a) {
    for (Point b = 0; b < space.size(); ++b) {
      std::int64_t d = space.units(a, b);
      if (d == QuasiMetricSpace::kInfiniteUnits || d > ell) continue;
      Block block{a, b, {}, block_trails(space, n, ell, variant, a, b), {}};
      if (block.middle.empty()) continue;
      if (n >= 1) block.lower = block_trails(space, n - 1, ell, variant, a, b);
      block.upper = block_trails(space, n + 1, ell, variant, a, b);
      out.push_back(std::move(block));
    }
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

struct GroupCheck {
  std::size_t kernel_rank = 0;
  std::size_t boundary_rank = 0;
  SmithNormalForm stacked;  // SNF of [boundaries | chains]
  std::vector<Integer> boundary_torsion;
};

/// Builds, for each group of blocks linked by the chains, the matrix whose
/// columns are the incoming boundaries followed by the chain vectors.
std::vector<GroupCheck> check_groups(const QuasiMetricSpace& space, const std::vector<Chain>& chains, int n,
                                     const Rational& ell, Variant variant, std::size_t cap) {
  for (const auto& c : chains) {
    if (c.n != n || c.ell != ell) throw UnknownTrail("chain of the wrong bidegree");
    if (!is_cycle(space, c, variant)) throw NotACycle("chain has nonzero boundary");
  }
  std::vector<GroupCheck> out;
  auto ell_units = space.to_units(ell);
  if (!ell_units) {
    for (const auto& c : chains) {
      if (!c.is_zero()) throw UnknownTrail("trail of the wrong length");
    }
    return out;
  }
  check_cap(space, n, ell, variant, cap);
  auto all = blocks(space, n, *ell_units, variant);
  std::map<std::pair<Point, Point>, std::size_t> block_of;
  for (std::size_t i = 0; i < all.size(); ++i) block_of[{all[i].a, all[i].b}] = i;

  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::optional<std::size_t>> chain_block(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    for (const auto& [t, coefficient] : chains[k].terms) {
      auto it = block_of.find({t.front(), t.back()});
      if (it == block_of.end()) throw UnknownTrail("trail is not in the basis of the requested bidegree");
      if (chain_block[k]) {
        parent[find_root(parent, it->second)] = find_root(parent, *chain_block[k]);
      } else {
        chain_block[k] = it->second;
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < all.size(); ++i) members[find_root(parent, i)].push_back(i);
  std::map<std::size_t, std::vector<std::size_t>> group_chains;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    if (chain_block[k]) group_chains[find_root(parent, *chain_block[k])].push_back(k);
  }

  for (const auto& [root, ids] : members) {
    GroupCheck check;
    std::size_t rows = 0, boundary_cols = 0;
    for (std::size_t id : ids) {
      rows += all[id].middle.size();
      boundary_cols += all[id].upper.size();
    }
    const auto& own_chains = group_chains[root];
    SparseIntMatrix stacked(rows, boundary_cols + own_chains.size());
    SparseIntMatrix boundaries(rows, boundary_cols);
    std::map<std::pair<Point, Point>, std::size_t> row_offset;
    std::size_t row = 0, col = 0;
    for (std::size_t id : ids) {
      const Block& block = all[id];
      row_offset[{block.a, block.b}] = row;
      if (n >= 1) {
        auto out_matrix = boundary_matrix(space, block.middle, block.lower, variant);
        check.kernel_rank += block.middle.size() - integer_rank(out_matrix);
      } else {
        check.kernel_rank += block.middle.size();
      }
      auto in_matrix = boundary_matrix(space, block.upper, block.middle, variant);
      for (const auto& e : in_matrix.entries()) {
        stacked.add(row + e.row, col + e.col, e.value);
        boundaries.add(row + e.row, col + e.col, e.value);
      }
      row += block.middle.size();
      col += block.upper.size();
    }
    for (std::size_t k = 0; k < own_chains.size(); ++k) {
      for (const auto& [t, coefficient] : chains[own_chains[k]].terms) {
        const Block& block = all[block_of.at({t.front(), t.back()})];
        auto it = std::lower_bound(block.middle.begin(), block.middle.end(), t);
        if (it == block.middle.end() || *it != t) {
          throw UnknownTrail("trail is not in the basis of the requested bidegree");
        }
        std::size_t r = row_offset.at({block.a, block.b}) + static_cast<std::size_t>(it - block.middle.begin());
        stacked.add(r, boundary_cols + k, coefficient);
      }
    }
    auto boundary_snf = smith_normal_form(boundaries);
    check.boundary_rank = boundary_snf.rank();
    check.boundary_torsion = boundary_snf.torsion();
    check.stacked = smith_normal_form(stacked);
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace

HomologyGroup homology(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant, std::size_t cap) {
  HomologyGroup h;
  auto ell_units = space.to_units(ell);
  if (n < 0 || !ell_units || *ell_units < 0) return h;
  check_cap(space, n, ell, variant, cap);
  std::vector<Integer> torsion;
  for (const auto& block : blocks(space, n, *ell_units, variant)) {
    SparseIntMatrix out = n >= 1 ? boundary_matrix(space, block.middle, block.lower, variant) : SparseIntMatrix();
    auto in = boundary_matrix(space, block.upper, block.middle, variant);
    auto part = complex_homology(out, in, block.middle.size());
    h.rank += part.rank;
    torsion.insert(torsion.end(), part.torsion.begin(), part.torsion.end());
  }
  h.torsion = invariant_factors(torsion);
  std::erase_if(h.torsion, [](const Integer& d) { return d == 1; });
  return h;
}

bool is_cycle(const QuasiMetricSpace& space, const Chain& chain, Variant variant) {
  return boundary(space, chain, variant).is_zero();
}

bool classes_independent(const QuasiMetricSpace& space, const std::vector<Chain>& chains, int n, const Rational& ell,
                         Variant variant, std::size_t cap) {
  std::size_t total_chains = 0;
  auto groups = check_groups(space, chains, n, ell, variant, cap);
  for (const auto& c : chains) {
    if (c.is_zero()) return false;
    ++total_chains;
  }
  std::size_t gained = 0;
  for (const auto& g : groups) {
    if (!g.boundary_torsion.empty()) return false;
    gained += g.stacked.rank() - g.boundary_rank;
  }
  return gained == total_chains;
}

bool classes_span(const QuasiMetricSpace& space, const std::vector<Chain>& chains, int n, const Rational& ell,
                  Variant variant, std::size_t cap) {
  for (const auto& g : check_groups(space, chains, n, ell, variant, cap)) {
    if (g.stacked.rank() != g.kernel_rank || !g.stacked.torsion().empty()) return false;
  }
  return true;
}

}  // namespace mh

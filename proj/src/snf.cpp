#include "mh/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <tuple>

namespace mh {

std::size_t SmithNormalForm::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

std::vector<Integer> SmithNormalForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

std::vector<Integer> invariant_factors(std::vector<Integer> values) {
  std::vector<Integer> units, rest;
  for (auto& v : values) {
    v = abs(v);
    if (v == 0) continue;
    (v == 1 ? units : rest).push_back(v);
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = gcd(rest[i], rest[j]);
      if (g == rest[i]) continue;
      rest[j] = rest[i] / g * rest[j];
      rest[i] = g;
    }
  }
  std::size_t ones = units.size();
  std::vector<Integer> out(ones, Integer(1));
  for (auto& v : rest) out.push_back(std::move(v));
  // gcd/lcm rewriting may have produced further ones; keep them in front
  std::stable_partition(out.begin(), out.end(), [](const Integer& v) { return v == 1; });
  return out;
}

namespace {

/// Quotient rounded to nearest, so the remainder satisfies |r| <= |p|/2.
Integer nearest_quotient(const Integer& a, const Integer& p) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * abs(r) > abs(p)) q += sgn(a) * sgn(p);
  return q;
}

struct Cell {
  std::uint32_t col;
  Integer value;
};
using Row = std::vector<Cell>;

class Eliminator {
 public:
  explicit Eliminator(const SparseIntMatrix& m)
      : rows_(m.rows()), active_(m.rows(), 1), col_rows_(m.cols()), col_count_(m.cols(), 0) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) {
        rows_[r].push_back({static_cast<std::uint32_t>(c), v});
        col_rows_[c].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[c];
      }
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      for (const auto& cell : rows_[r]) {
        if (abs(cell.value) == 1) push_candidate(r, cell.col);
      }
    }
  }

  std::vector<Integer> run() {
    while (true) {
      if (auto unit = pop_unit()) {
        eliminate(unit->first, unit->second);
        continue;
      }
      auto general = smallest_entry();
      if (!general) break;
      eliminate(general->first, general->second);
    }
    return std::move(pivots_);
  }

 private:
  using Candidate = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;

  std::uint64_t cost(std::uint32_t r, std::uint32_t c) const {
    return static_cast<std::uint64_t>(rows_[r].size() - 1) * static_cast<std::uint64_t>(col_count_[c] - 1);
  }

  void push_candidate(std::uint32_t r, std::uint32_t c) { heap_.emplace(cost(r, c), r, c); }

  const Integer* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& cell, std::uint32_t col) {
      return cell.col < col;
    });
    return it != row.end() && it->col == c ? &it->value : nullptr;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> pop_unit() {
    while (!heap_.empty()) {
      auto [stored, r, c] = heap_.top();
      heap_.pop();
      if (!active_[r]) continue;
      const Integer* v = find(r, c);
      if (v == nullptr || abs(*v) != 1) continue;
      std::uint64_t now = cost(r, c);
      if (now > stored) {
        heap_.emplace(now, r, c);
        continue;
      }
      return std::make_pair(r, c);
    }
    return std::nullopt;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> smallest_entry() const {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    const Integer* best_value = nullptr;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!active_[r]) continue;
      for (const auto& cell : rows_[r]) {
        if (best_value == nullptr || cmpabs(cell.value, *best_value) < 0) {
          best_value = &cell.value;
          best = std::make_pair(r, cell.col);
        }
      }
    }
    return best;
  }

  /// Active rows with a nonzero entry in column c; compacts the lazy list.
  std::vector<std::uint32_t> rows_in_column(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t r) { return !active_[r] || find(r, c) == nullptr; });
    return list;
  }

  /// row[target] -= factor * row[source]
  void axpy(std::uint32_t target, std::uint32_t source, const Integer& factor) {
    if (factor == 0) return;
    const Row& a = rows_[target];
    const Row& b = rows_[source];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        std::uint32_t c = b[j].col;
        out.push_back({c, -factor * b[j].value});
        col_rows_[c].push_back(target);
        ++col_count_[c];
        ++j;
      } else {
        Integer v = a[i].value - factor * b[j].value;
        std::uint32_t c = a[i].col;
        if (v == 0) {
          --col_count_[c];
        } else {
          out.push_back({c, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    rows_[target] = std::move(out);
    for (const auto& cell : rows_[target]) {
      if (abs(cell.value) == 1) push_candidate(target, cell.col);
    }
  }

  void eliminate(std::uint32_t r, std::uint32_t c) {
    while (true) {
      Integer p = *find(r, c);
      bool remainder = false;
      for (std::uint32_t i : rows_in_column(c)) {
        if (i == r) continue;
        axpy(i, r, nearest_quotient(*find(i, c), p));
        if (find(i, c) != nullptr) remainder = true;
      }
      if (remainder) {
        for (std::uint32_t i : rows_in_column(c)) {
          if (cmpabs(*find(i, c), *find(r, c)) < 0) r = i;
        }
        continue;
      }
      // Column c is now zero outside row r, so column operations against c
      // only touch row r.
      Row& row = rows_[r];
      Row kept;
      std::optional<std::uint32_t> next;
      const Integer* next_value = nullptr;
      for (auto& cell : row) {
        if (cell.col == c) {
          kept.push_back(cell);
          continue;
        }
        Integer rem = cell.value - nearest_quotient(cell.value, p) * p;
        if (rem == 0) {
          --col_count_[cell.col];
          continue;
        }
        kept.push_back({cell.col, std::move(rem)});
      }
      row = std::move(kept);
      for (const auto& cell : row) {
        if (cell.col == c) continue;
        if (next_value == nullptr || cmpabs(cell.value, *next_value) < 0) {
          next = cell.col;
          next_value = &cell.value;
        }
      }
      if (next) {
        if (abs(*next_value) == 1) push_candidate(r, *next);
        c = *next;
        continue;
      }
      pivots_.push_back(abs(p));
      active_[r] = 0;
      --col_count_[c];
      row.clear();
      return;
    }
  }

  std::vector<Row> rows_;
  std::vector<char> active_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap_;
  std::vector<Integer> pivots_;
};

SmithNormalForm dense_with_transforms(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (pr == rows || cmpabs(a(i, j), a(pr, pc)) < 0)) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = nearest_quotient(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0 && cmpabs(a(i, t), a(best, t)) < 0) best = i;
        }
        a.swap_rows(t, best);
        u.swap_rows(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = nearest_quotient(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) != 0 && cmpabs(a(t, j), a(t, best)) < 0) best = j;
        }
        a.swap_cols(t, best);
        v.swap_cols(t, best);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      a.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithNormalForm out;
  out.rows = rows;
  out.cols = cols;
  out.diagonal.resize(std::min(rows, cols));
  for (std::size_t i = 0; i < out.diagonal.size(); ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

}  // namespace

SmithNormalForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
  if (with_transforms) return dense_with_transforms(m.to_dense());
  SmithNormalForm out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.diagonal = invariant_factors(Eliminator(m).run());
  out.diagonal.resize(std::min(m.rows(), m.cols()));
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  if (with_transforms) return dense_with_transforms(m);
  return smith_normal_form(SparseIntMatrix::from_dense(m), false);
}

std::size_t integer_rank(const SparseIntMatrix& m) { return Eliminator(m).run().size(); }

}  // namespace mh

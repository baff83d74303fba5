#include "hurwitz/abelian.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace hurwitz {

namespace {

// Nearest-integer quotient, so remainders satisfy |r| <= |b|/2.
Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  Int half = abs(b);
  if (2 * abs(r) > half) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Incremental integer row reduction: keeps one pivot row per leading
// column so huge relator matrices collapse to at most #columns rows
// before the full Smith reduction runs.
class RowReducer {
public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  void add(std::vector<Int> row) {
    std::size_t j = leading(row);
    while (j < cols_) {
      auto it = pivots_.find(j);
      if (it == pivots_.end()) {
        if (row[j] < 0)
          for (auto& v : row) v = -v;
        pivots_.emplace(j, std::move(row));
        return;
      }
      std::vector<Int>& pivot = it->second;
      while (row[j] != 0) {
        Int q = rounded_div(row[j], pivot[j]);
        if (q != 0)
          for (std::size_t c = j; c < cols_; ++c) row[c] -= q * pivot[c];
        if (row[j] == 0) break;
        row.swap(pivot);
      }
      j = leading(row);
    }
  }

  std::vector<std::vector<Int>> rows() && {
    std::vector<std::vector<Int>> out;
    out.reserve(pivots_.size());
    for (auto& [col, row] : pivots_) out.push_back(std::move(row));
    return out;
  }

private:
  std::size_t leading(const std::vector<Int>& row) const {
    std::size_t j = 0;
    while (j < cols_ && row[j] == 0) ++j;
    return j;
  }

  std::size_t cols_;
  std::map<std::size_t, std::vector<Int>> pivots_;
};

}  // namespace

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) raise(Errc::invalid_argument, "ragged matrix");

  const std::size_t n = std::min(rows, cols);
  std::vector<Int> diag;
  diag.reserve(n);

  std::size_t t = 0;
  while (t < n) {
    // Pivot: minimal nonzero absolute value in the remaining block.
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          Int q = rounded_div(m[i][t], m[t][t]);
          if (q != 0)
            for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) std::swap(m[i], m[t]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          Int q = rounded_div(m[t][j], m[t][t]);
          if (q != 0)
            for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (std::size_t i = t; i < rows; ++i) std::swap(m[i][j], m[i][t]);
            clean = false;  // column swap may dirty the rows again
          }
        }
      }
    }

    // Divisibility: fold in any row with an entry the pivot misses.
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
          redo = true;
        }
    if (redo) continue;

    diag.push_back(abs(m[t][t]));
    ++t;
  }
  diag.resize(n, Int(0));
  return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::size_t n = p.generators.size();
  RowReducer reducer(n);
  for (const Word& w : p.relators) {
    std::vector<Int> row(n, Int(0));
    for (const Letter& l : w) row[static_cast<std::size_t>(l.gen)] += l.exp;
    reducer.add(std::move(row));
  }
  auto diag = smith_normal_form(std::move(reducer).rows());

  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const Int& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = static_cast<int>(n - nonzero);
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream out;
  out << "torsion [";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out << ", ";
    out << torsion[i].str();
  }
  out << "], free rank " << free_rank;
  return out.str();
}

std::optional<std::uint64_t> closure_order(std::span<const ResidueMatrix> gens,
                                           bool projectivize, std::uint64_t cap) {
  if (gens.empty()) return 1;
  const std::int64_t q = gens.front().m;
  if (q < 2 || q > 0xffff) raise(Errc::invalid_argument, "modulus out of range for closure");

  std::vector<ResidueMatrix> normalized;
  for (const auto& g : gens) {
    if (g.m != q) raise(Errc::invalid_argument, "mixed moduli in closure");
    if (std::gcd(g.det(), q) != 1)
      raise(Errc::singular_generator, "singular generator mod " + std::to_string(q));
    normalized.push_back(g);
  }

  auto canon = [&](ResidueMatrix m) {
    if (projectivize) {
      std::int64_t lead = 0;
      for (std::int64_t v : m.e)
        if (v != 0) {
          lead = v;
          break;
        }
      // lead is nonzero: invertible matrices are nonzero.
      std::int64_t inv = 1;
      {  // Fermat inverse; q is prime in every caller, but fall back to Euclid.
        std::int64_t t0 = 0, t1 = 1, r0 = q, r1 = lead;
        while (r1 != 0) {
          std::int64_t k = r0 / r1;
          std::swap(t0 -= k * t1, t1);
          std::swap(r0 -= k * r1, r1);
        }
        inv = t0 < 0 ? t0 + q : t0;
      }
      for (auto& v : m.e) v = (v * inv) % q;
    }
    return m;
  };
  auto key = [](const ResidueMatrix& m) {
    return (static_cast<std::uint64_t>(m.e[0]) << 48) | (static_cast<std::uint64_t>(m.e[1]) << 32) |
           (static_cast<std::uint64_t>(m.e[2]) << 16) | static_cast<std::uint64_t>(m.e[3]);
  };

  std::unordered_set<std::uint64_t> seen;
  std::queue<ResidueMatrix> todo;
  ResidueMatrix id = canon(ResidueMatrix::identity(q));
  seen.insert(key(id));
  todo.push(id);
  while (!todo.empty()) {
    ResidueMatrix cur = todo.front();
    todo.pop();
    for (const auto& g : normalized) {
      ResidueMatrix next = canon(cur.mul(g));
      if (seen.insert(key(next)).second) {
        if (seen.size() > cap) return std::nullopt;
        todo.push(next);
      }
    }
  }
  return seen.size();
}

}  // namespace hurwitz

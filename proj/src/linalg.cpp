#include "hgalg/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace hgalg {

namespace {

struct ModP {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from_int(int v) const {
    const long long r = v % static_cast<long long>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  bool is_zero(const Value& v) const { return v == 0; }
  Value inverse(Value a) const {
    // Fermat: a^(p-2).
    Value result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
};

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

// row <- row - factor * pivot, both sorted by column.
void axpy_mod(ModRow& row, std::uint64_t factor, const ModRow& pivot, std::uint64_t p) {
  ModRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  const std::uint64_t neg = (p - factor) % p;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, neg * pivot[b].second % p);
      ++b;
    } else {
      const std::uint64_t v = (row[a].second + neg * pivot[b].second) % p;
      if (v) out.emplace_back(row[a].first, v);
      ++a;
      ++b;
    }
  }
  row.swap(out);
}

int rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  const ModP field{p};
  std::unordered_map<int, ModRow> pivots;
  int rank = 0;
  for (const auto& source : m.rows) {
    ModRow row;
    row.reserve(source.size());
    for (const auto& e : source) {
      const auto v = field.from_int(e.value);
      if (v) row.emplace_back(e.col, v);
    }
    std::sort(row.begin(), row.end());
    // Merge duplicate columns.
    ModRow merged;
    for (const auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second = (merged.back().second + e.second) % p;
        if (!merged.back().second) merged.pop_back();
      } else {
        merged.push_back(e);
      }
    }
    row.swap(merged);
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = field.inverse(row.front().second);
        for (auto& e : row) e.second = e.second * inv % p;
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      axpy_mod(row, row.front().second, it->second, p);
    }
  }
  return rank;
}

using QRow = std::vector<std::pair<int, mpz_class>>;

void make_primitive(QRow& row) {
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- a * row - b * pivot, where a = pivot lead and b = row lead.
void eliminate_q(QRow& row, const QRow& pivot) {
  const mpz_class a = pivot.front().second;
  const mpz_class b = row.front().second;
  QRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t x = 0, y = 0;
  while (x < row.size() || y < pivot.size()) {
    if (y == pivot.size() || (x < row.size() && row[x].first < pivot[y].first)) {
      out.emplace_back(row[x].first, a * row[x].second);
      ++x;
    } else if (x == row.size() || pivot[y].first < row[x].first) {
      out.emplace_back(pivot[y].first, -b * pivot[y].second);
      ++y;
    } else {
      mpz_class v = a * row[x].second - b * pivot[y].second;
      if (v != 0) out.emplace_back(row[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  make_primitive(out);
  row.swap(out);
}

int rank_rational(const SparseMatrix& m) {
  std::unordered_map<int, QRow> pivots;
  int rank = 0;
  for (const auto& source : m.rows) {
    std::vector<SparseEntry> sorted = source;
    std::sort(sorted.begin(), sorted.end(), [](const SparseEntry& l, const SparseEntry& r) { return l.col < r.col; });
    QRow row;
    for (const auto& e : sorted) {
      if (!row.empty() && row.back().first == e.col) {
        row.back().second += e.value;
        if (row.back().second == 0) row.pop_back();
      } else if (e.value != 0) {
        row.emplace_back(e.col, mpz_class(e.value));
      }
    }
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        make_primitive(row);
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      eliminate_q(row, it->second);
    }
  }
  return rank;
}

}  // namespace

int rank_over_field(const SparseMatrix& m, const FieldSpec& field) {
  if (field.is_rational()) return rank_rational(m);
  return rank_mod_p(m, field.characteristic());
}

}  // namespace hgalg

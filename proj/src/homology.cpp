#include "hgalg/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hgalg/errors.hpp"
#include "hgalg/linalg.hpp"

namespace hgalg {

std::int64_t ChainComplexDims::dim(int degree) const {
  const int idx = degree + 1;
  if (idx < 0 || idx >= static_cast<int>(homology.size())) return 0;
  return homology[idx];
}

bool ChainComplexDims::acyclic() const {
  return std::all_of(homology.begin(), homology.end(), [](std::int64_t h) { return h == 0; });
}

namespace {

int highest_vertex(Mask m) { return 63 - std::countl_zero(m); }

}  // namespace

ChainComplexDims downset_homology(Mask ground, const std::function<bool(Mask)>& is_face, const FieldSpec& field,
                                  std::int64_t face_budget) {
  ChainComplexDims out;
  if (!is_face(0)) return out;

  const std::vector<int> vs = vertices_of(ground);
  std::vector<std::vector<Mask>> levels{{Mask{0}}};
  std::int64_t total = 1;
  while (true) {
    std::vector<Mask> next;
    for (Mask f : levels.back()) {
      const int top = f ? highest_vertex(f) : -1;
      for (int v : vs) {
        if (v <= top) continue;
        const Mask g = f | bit(v);
        if (is_face(g)) next.push_back(g);
      }
    }
    if (next.empty()) break;
    total += static_cast<std::int64_t>(next.size());
    if (total > face_budget) {
      throw SizeLimitExceeded("homology: complex exceeds the face budget of " + std::to_string(face_budget));
    }
    levels.push_back(std::move(next));
  }

  const int n_levels = static_cast<int>(levels.size());
  out.face_counts.resize(n_levels);
  out.boundary_ranks.assign(n_levels, 0);
  for (int k = 0; k < n_levels; ++k) out.face_counts[k] = static_cast<std::int64_t>(levels[k].size());
  if (n_levels > 1) out.boundary_ranks[1] = 1;  // augmentation

  for (int k = 2; k < n_levels; ++k) {
    std::unordered_map<Mask, int> index;
    index.reserve(levels[k - 1].size() * 2);
    for (std::size_t i = 0; i < levels[k - 1].size(); ++i) index.emplace(levels[k - 1][i], static_cast<int>(i));
    SparseMatrix m;
    m.cols = static_cast<int>(levels[k - 1].size());
    m.rows.reserve(levels[k].size());
    for (Mask f : levels[k]) {
      std::vector<SparseEntry> row;
      row.reserve(k);
      int pos = 0;
      for_each_vertex(f, [&](int v) {
        row.push_back({index.at(f & ~bit(v)), (pos % 2 == 0) ? 1 : -1});
        ++pos;
      });
      m.rows.push_back(std::move(row));
    }
    out.boundary_ranks[k] = rank_over_field(m, field);
  }

  out.homology.resize(n_levels);
  std::int64_t euler_faces = 0, euler_homology = 0;
  for (int k = 0; k < n_levels; ++k) {
    const std::int64_t next_rank = k + 1 < n_levels ? out.boundary_ranks[k + 1] : 0;
    out.homology[k] = out.face_counts[k] - out.boundary_ranks[k] - next_rank;
    if (out.homology[k] < 0) throw std::logic_error("homology: negative dimension");
    const std::int64_t sign = (k % 2 == 0) ? -1 : 1;  // slot k is degree k-1
    euler_faces += sign * out.face_counts[k];
    euler_homology += sign * out.homology[k];
  }
  if (euler_faces != euler_homology) throw std::logic_error("homology: Euler characteristic mismatch");
  return out;
}

ChainComplexDims reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                       std::int64_t face_budget) {
  if (c.is_void()) return {};
  return downset_homology(c.vertex_set(), [&c](Mask f) { return c.contains(f); }, field, face_budget);
}

RestrictionHomology::RestrictionHomology(int n_vertices, std::vector<Mask> minimal_nonfaces, FieldSpec field,
                                         std::int64_t face_budget)
    : n_(n_vertices), nonfaces_(minimal_sets(std::move(minimal_nonfaces))), field_(field), face_budget_(face_budget) {
  if (n_ < 0 || n_ > kMaxVertices) throw InvalidArgument("vertex count out of range");
}

RestrictionHomology::RestrictionHomology(const SimplicialComplex& c, FieldSpec field, std::int64_t face_budget)
    : RestrictionHomology(c.n_vertices(), c.minimal_nonfaces(), field, face_budget) {
  if (c.is_void()) throw InvalidArgument("restriction homology of the void complex is undefined");
}

bool RestrictionHomology::is_cone(Mask v) const {
  if (v == 0) return false;
  Mask covered = 0;
  for (Mask s : nonfaces_) {
    if (is_subset(s, v)) covered |= s;
  }
  return covered != v;
}

std::vector<std::int64_t> RestrictionHomology::dims(Mask v) const {
  if (v == 0) return {1};
  std::vector<Mask> inside;
  Mask covered = 0;
  for (Mask s : nonfaces_) {
    if (is_subset(s, v)) {
      inside.push_back(s);
      covered |= s;
    }
  }
  if (covered != v) return {};
  const int size = popcount(v);
  if (inside.size() == 1) {
    // Δ_V is the boundary of the simplex on V.
    std::vector<std::int64_t> out(size, 0);
    out[size - 1] = 1;
    return out;
  }

  std::vector<std::int64_t> out;
  if (static_cast<int>(inside.size()) < size && inside.size() <= 62) {
    const int k = static_cast<int>(inside.size());
    const auto nerve = downset_homology(
        full_mask(k),
        [&](Mask s) {
          if (s == 0) return true;
          Mask u = 0;
          for_each_vertex(s, [&](int i) { u |= inside[i]; });
          return u != v;
        },
        field_, face_budget_);
    for (int q = -1; q <= nerve.top_degree(); ++q) {
      const std::int64_t h = nerve.dim(q);
      if (h == 0) continue;
      const int j = size - q - 3;
      if (static_cast<int>(out.size()) < j + 2) out.resize(j + 2, 0);
      out[j + 1] = h;
    }
  } else {
    const auto direct = downset_homology(
        v,
        [&](Mask f) {
          return std::none_of(inside.begin(), inside.end(), [f](Mask s) { return is_subset(s, f); });
        },
        field_, face_budget_);
    out = direct.homology;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::int64_t RestrictionHomology::dim(Mask v, int degree) const {
  const auto d = dims(v);
  const int idx = degree + 1;
  return idx >= 0 && idx < static_cast<int>(d.size()) ? d[idx] : 0;
}

}  // namespace hgalg

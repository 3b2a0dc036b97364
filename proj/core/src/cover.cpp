#include "twistlab/cover.hpp"

#include <algorithm>
#include <set>

#include "twistlab/errors.hpp"

namespace twistlab {

FinSpace::FinSpace(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw InputError("space must have at least one point");
  for (std::size_t p = 0; p < ids_.size(); ++p) {
    if (!index_.emplace(ids_[p], static_cast<int>(p)).second) throw InputError("duplicate point identifier '" + ids_[p] + "'");
  }
}

std::optional<int> FinSpace::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FinSpace::index_of(std::string_view id) const {
  auto p = find(id);
  if (!p) throw InputError("unknown point '" + std::string(id) + "'");
  return *p;
}

Cover::Cover(FinSpace space, std::vector<std::string> labels, std::vector<std::vector<int>> sets)
    : space_(std::move(space)), labels_(std::move(labels)), sets_(std::move(sets)) {
  if (labels_.size() != sets_.size()) throw InputError("cover needs one label per set");
  if (sets_.empty()) throw InputError("cover must have at least one set");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InputError("duplicate cover index '" + l + "'");
  const std::size_t n = space_.size();
  member_.assign(sets_.size() * n, 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("cover set '" + labels_[i] + "' repeats a point");
    if (s.empty()) throw InputError("cover set '" + labels_[i] + "' is empty");
    for (int x : s) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError("cover set '" + labels_[i] + "' has an unknown point");
      member_[i * n + static_cast<std::size_t>(x)] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool covered = false;
    for (std::size_t i = 0; i < sets_.size() && !covered; ++i) covered = member_[i * n + x] != 0;
    if (!covered) throw InputError("point '" + space_.id(static_cast<int>(x)) + "' is not covered");
  }
}

std::optional<int> Cover::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> index_set_at(const Cover& cover, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= cover.space().size()) throw InputError("point index out of range");
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cover.num_sets()); ++i)
    if (cover.contains(i, x)) out.push_back(i);
  return out;
}

std::vector<int> index_set_at(const Cover& cover, std::string_view point) {
  return index_set_at(cover, cover.space().index_of(point));
}

Simplex support_of(std::span<const int> tuple) {
  Simplex s(tuple.begin(), tuple.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<int> Nerve::find_vertex(std::string_view label) const {
  for (std::size_t v = 0; v < vertex_labels_.size(); ++v)
    if (vertex_labels_[v] == label) return static_cast<int>(v);
  return std::nullopt;
}

const std::vector<Simplex>& Nerve::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t Nerve::total_simplices() const {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::optional<int> Nerve::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Nerve::spans_simplex(std::span<const int> tuple) const {
  if (tuple.empty()) return false;
  return contains(support_of(tuple));
}

const Cover& Nerve::cover() const {
  if (!cover_) throw PreconditionError("complex was loaded abstractly and has no cover");
  return *cover_;
}

const std::vector<int>& Nerve::carrier(std::span<const int> tuple) const {
  if (!cover_) throw PreconditionError("complex was loaded abstractly and has no carriers");
  const Simplex s = support_of(tuple);
  auto idx = index_of(s);
  if (!idx) throw InputError("tuple does not span a simplex");
  return carriers_[s.size() - 1][static_cast<std::size_t>(*idx)];
}

void Nerve::finalize() {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  index_.clear();
  for (auto& d : by_dim_) {
    std::sort(d.begin(), d.end());
    for (std::size_t k = 0; k < d.size(); ++k) index_.emplace(d[k], static_cast<int>(k));
  }
}

Nerve build_nerve(const Cover& cover) {
  Nerve nerve;
  const int m = static_cast<int>(cover.num_sets());
  nerve.vertex_labels_ = cover.labels();
  nerve.cover_ = std::make_shared<const Cover>(cover);

  // depth-first extension by larger indices while the intersection stays nonempty
  std::vector<std::pair<Simplex, std::vector<int>>> found;
  std::vector<std::pair<Simplex, std::vector<int>>> stack;
  for (int i = m - 1; i >= 0; --i) stack.push_back({Simplex{i}, cover.set(i)});
  while (!stack.empty()) {
    auto [s, pts] = std::move(stack.back());
    stack.pop_back();
    for (int j = m - 1; j > s.back(); --j) {
      std::vector<int> next;
      for (int x : pts)
        if (cover.contains(j, x)) next.push_back(x);
      if (next.empty()) continue;
      Simplex t = s;
      t.push_back(j);
      stack.push_back({std::move(t), std::move(next)});
    }
    found.push_back({std::move(s), std::move(pts)});
  }

  std::size_t top = 0;
  for (const auto& f : found) top = std::max(top, f.first.size());
  nerve.by_dim_.assign(top, {});
  for (const auto& f : found) nerve.by_dim_[f.first.size() - 1].push_back(f.first);
  nerve.finalize();
  nerve.carriers_.assign(nerve.by_dim_.size(), {});
  for (std::size_t d = 0; d < nerve.by_dim_.size(); ++d) nerve.carriers_[d].resize(nerve.by_dim_[d].size());
  for (auto& f : found) {
    const auto idx = static_cast<std::size_t>(*nerve.index_of(f.first));
    nerve.carriers_[f.first.size() - 1][idx] = std::move(f.second);
  }
  return nerve;
}

Nerve load_complex(const std::vector<std::string>& vertices, const std::vector<std::vector<std::string>>& maximal_simplices) {
  if (vertices.empty()) throw InputError("complex needs at least one vertex");
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!index.emplace(vertices[v], static_cast<int>(v)).second) throw InputError("duplicate vertex '" + vertices[v] + "'");

  std::set<Simplex> all;
  for (std::size_t v = 0; v < vertices.size(); ++v) all.insert(Simplex{static_cast<int>(v)});
  for (const auto& ms : maximal_simplices) {
    if (ms.empty()) throw InputError("empty simplex in complex description");
    Simplex s;
    for (const auto& label : ms) {
      auto it = index.find(label);
      if (it == index.end()) throw InputError("simplex uses unknown vertex '" + label + "'");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex repeats a vertex");
    if (s.size() > 24) throw InputError("simplex dimension too large");
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (std::uint32_t{1} << k)) face.push_back(s[k]);
      all.insert(std::move(face));
    }
  }

  Nerve nerve;
  nerve.vertex_labels_ = vertices;
  for (const auto& s : all) {
    if (nerve.by_dim_.size() < s.size()) nerve.by_dim_.resize(s.size());
    nerve.by_dim_[s.size() - 1].push_back(s);
  }
  nerve.finalize();
  return nerve;
}

long euler_characteristic(const Nerve& nerve) {
  long chi = 0;
  for (int d = 0; d <= nerve.dimension(); ++d) chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(nerve.count(d));
  return chi;
}

}  // namespace twistlab

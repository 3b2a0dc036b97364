#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

/// Strictly increasing list of vertex indices.
using Simplex = std::vector<int>;

/// Finite point set with opaque, pairwise distinct identifiers.
class FinSpace {
 public:
  explicit FinSpace(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(int p) const { return ids_.at(static_cast<std::size_t>(p)); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<int> find(std::string_view id) const;
  /// Throws InputError for unknown identifiers.
  int index_of(std::string_view id) const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int, std::less<>> index_;
};

/// Indexed family of nonempty subsets U_i whose union is the whole space.
/// Indices are 0..num_sets()-1; labels are only used for I/O.
class Cover {
 public:
  Cover(FinSpace space, std::vector<std::string> labels, std::vector<std::vector<int>> sets);

  const FinSpace& space() const { return space_; }
  std::size_t num_sets() const { return sets_.size(); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted point indices of U_i.
  const std::vector<int>& set(int i) const { return sets_.at(static_cast<std::size_t>(i)); }
  bool contains(int i, int x) const {
    return member_[static_cast<std::size_t>(i) * space_.size() + static_cast<std::size_t>(x)] != 0;
  }
  std::optional<int> find_label(std::string_view label) const;

 private:
  FinSpace space_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> sets_;
  std::vector<char> member_;
};

/// I(x) = { i : x in U_i }, increasing.
std::vector<int> index_set_at(const Cover& cover, int x);
std::vector<int> index_set_at(const Cover& cover, std::string_view point);

/// Abstract simplicial complex on vertices 0..n-1. When built from a cover it also
/// remembers the cover and the carrier U_{i_0...i_p} of every simplex.
class Nerve {
 public:
  std::size_t num_vertices() const { return vertex_labels_.size(); }
  const std::string& vertex_label(int v) const { return vertex_labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::optional<int> find_vertex(std::string_view label) const;

  /// Top dimension; -1 for the empty complex (never produced by the builders).
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of the given dimension in lexicographic order; empty past the top dimension.
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  std::size_t total_simplices() const;

  /// Position of a sorted simplex within simplices(s.size()-1).
  std::optional<int> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// True when the set of entries (repeats allowed, any order) is a simplex.
  bool spans_simplex(std::span<const int> tuple) const;

  bool has_carrier() const { return cover_ != nullptr; }
  /// The cover this nerve was built from. Throws for abstract complexes.
  const Cover& cover() const;
  /// Points of U_{i_0} cap ... cap U_{i_p} for the set spanned by tuple.
  const std::vector<int>& carrier(std::span<const int> tuple) const;

 private:
  friend Nerve build_nerve(const Cover& cover);
  friend Nerve load_complex(const std::vector<std::string>& vertices,
                            const std::vector<std::vector<std::string>>& maximal_simplices);
  void finalize();

  std::vector<std::string> vertex_labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, int> index_;
  std::shared_ptr<const Cover> cover_;
  std::vector<std::vector<std::vector<int>>> carriers_;  // [dim][index]
};

/// Simplices are exactly the index sets with nonempty common intersection.
Nerve build_nerve(const Cover& cover);

/// Downward closure of the given maximal simplices. Vertices must be distinct and
/// every simplex must list distinct known vertices.
Nerve load_complex(const std::vector<std::string>& vertices,
                   const std::vector<std::vector<std::string>>& maximal_simplices);

long euler_characteristic(const Nerve& nerve);

/// Sorted, deduplicated copy of a tuple.
Simplex support_of(std::span<const int> tuple);

}  // namespace twistlab

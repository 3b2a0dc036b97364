#include "twistlab/cochain.hpp"

#include <algorithm>

#include "twistlab/errors.hpp"

namespace twistlab {

std::string to_string(CochainMode mode) { return mode == CochainMode::pointwise ? "pointwise" : "nerve"; }

CochainMode parse_mode(std::string_view text) {
  if (text == "pointwise") return CochainMode::pointwise;
  if (text == "nerve") return CochainMode::nerve;
  throw InputError("unknown cochain mode '" + std::string(text) + "'");
}

namespace {

void extend_tuples(const Nerve& nerve, int len, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v < static_cast<int>(nerve.num_vertices()); ++v) {
    prefix.push_back(v);
    if (nerve.spans_simplex(prefix)) extend_tuples(nerve, len, prefix, out);
    prefix.pop_back();
  }
}

void check_key(const Nerve& nerve, int degree, CochainMode mode, std::span<const int> tuple, int point) {
  if (static_cast<int>(tuple.size()) != degree + 1)
    throw InputError("tuple of length " + std::to_string(tuple.size()) + " given to a degree-" +
                     std::to_string(degree) + " cochain");
  for (int v : tuple)
    if (v < 0 || v >= static_cast<int>(nerve.num_vertices())) throw InputError("tuple index out of range");
  if (!nerve.spans_simplex(tuple)) throw InputError("tuple does not span a simplex of the nerve");
  if (mode == CochainMode::pointwise) {
    const auto& carrier = nerve.carrier(tuple);
    if (!std::binary_search(carrier.begin(), carrier.end(), point))
      throw InputError("point is not in the overlap of the tuple's sets");
  }
}

}  // namespace

std::vector<std::vector<int>> ordered_tuples(const Nerve& nerve, int len) {
  std::vector<std::vector<int>> out;
  if (len <= 0) return out;
  std::vector<int> prefix;
  extend_tuples(nerve, len, prefix, out);
  return out;
}

std::vector<CochainKey> cochain_domain(const Nerve& nerve, int degree, CochainMode mode) {
  std::vector<CochainKey> out;
  for (auto& t : ordered_tuples(nerve, degree + 1)) {
    if (mode == CochainMode::nerve) {
      out.push_back({std::move(t), -1});
    } else {
      for (int x : nerve.carrier(t)) out.push_back({t, x});
    }
  }
  return out;
}

CechCochain::CechCochain(std::shared_ptr<const Nerve> nerve, FinAbGroup group, int degree, CochainMode mode)
    : nerve_(std::move(nerve)), group_(std::move(group)), degree_(degree), mode_(mode) {
  if (!nerve_) throw InputError("cochain needs a nerve");
  if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  if (mode_ == CochainMode::pointwise && !nerve_->has_carrier())
    throw InputError("pointwise cochains need a nerve built from a cover");
}

CochainKey CechCochain::make_key(std::span<const int> tuple, int point) const {
  check_key(*nerve_, degree_, mode_, tuple, point);
  return {std::vector<int>(tuple.begin(), tuple.end()), mode_ == CochainMode::nerve ? -1 : point};
}

GroupElem CechCochain::at(std::span<const int> tuple, int point) const {
  const auto it = values_.find(make_key(tuple, point));
  return it == values_.end() ? group_.zero() : it->second;
}

void CechCochain::set(std::span<const int> tuple, int point, const GroupElem& value) {
  if (!group_.contains(value)) throw InputError("cochain value is not an element of " + group_.to_string());
  auto key = make_key(tuple, point);
  if (group_.is_zero(value))
    values_.erase(key);
  else
    values_[std::move(key)] = value;
}

void CechCochain::check_compatible(const CechCochain& other) const {
  if (nerve_ != other.nerve_ || !(group_ == other.group_) || degree_ != other.degree_ || mode_ != other.mode_)
    throw InputError("cochains live on different complexes, groups, degrees or modes");
}

CechCochain CechCochain::operator+(const CechCochain& other) const {
  check_compatible(other);
  CechCochain out = *this;
  for (const auto& [k, v] : other.values_) out.set(k, group_.add(out.at(k), v));
  return out;
}

CechCochain CechCochain::operator-(const CechCochain& other) const { return *this + (-other); }

CechCochain CechCochain::operator-() const {
  CechCochain out(nerve_, group_, degree_, mode_);
  for (const auto& [k, v] : values_) out.values_[k] = group_.neg(v);
  return out;
}

bool operator==(const CechCochain& a, const CechCochain& b) {
  return a.nerve_ == b.nerve_ && a.group_ == b.group_ && a.degree_ == b.degree_ && a.mode_ == b.mode_ &&
         a.values_ == b.values_;
}

std::vector<std::int64_t> CechCochain::simplicial_component(std::size_t factor) const {
  if (mode_ != CochainMode::nerve) throw PreconditionError("simplicial values exist only in nerve mode");
  if (factor >= group_.rank()) throw InputError("group factor out of range");
  const auto& simplices = nerve_->simplices(degree_);
  std::vector<std::int64_t> out(simplices.size(), 0);
  for (std::size_t s = 0; s < simplices.size(); ++s) out[s] = at(simplices[s]).c[factor];
  return out;
}

CechCochain from_simplicial(std::shared_ptr<const Nerve> nerve, const FinAbGroup& group, int degree,
                            const std::vector<std::vector<std::int64_t>>& values) {
  CechCochain out(nerve, group, degree, CochainMode::nerve);
  if (values.size() != group.rank()) throw InputError("one value vector per cyclic factor expected");
  const auto& simplices = nerve->simplices(degree);
  for (const auto& v : values)
    if (v.size() != simplices.size()) throw InputError("simplicial value vector has the wrong length");
  for (auto& t : ordered_tuples(*nerve, degree + 1)) {
    Simplex sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    // sign of the permutation sorting t
    int inversions = 0;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b)
        if (t[a] > t[b]) ++inversions;
    const std::size_t s = static_cast<std::size_t>(*nerve->index_of(sorted));
    std::vector<std::int64_t> comps(group.rank());
    for (std::size_t j = 0; j < group.rank(); ++j) comps[j] = inversions % 2 ? -values[j][s] : values[j][s];
    out.set(t, -1, group.element(std::move(comps)));
  }
  return out;
}

UnimodularCochain::UnimodularCochain(std::shared_ptr<const Nerve> nerve, int degree, CochainMode mode)
    : nerve_(std::move(nerve)), degree_(degree), mode_(mode) {
  if (!nerve_) throw InputError("cochain needs a nerve");
  if (mode_ == CochainMode::pointwise && !nerve_->has_carrier())
    throw InputError("pointwise cochains need a nerve built from a cover");
}

CochainKey UnimodularCochain::make_key(std::span<const int> tuple, int point) const {
  check_key(*nerve_, degree_, mode_, tuple, point);
  return {std::vector<int>(tuple.begin(), tuple.end()), mode_ == CochainMode::nerve ? -1 : point};
}

RootOfUnity UnimodularCochain::at(std::span<const int> tuple, int point) const {
  const auto it = values_.find(make_key(tuple, point));
  return it == values_.end() ? RootOfUnity::one() : it->second;
}

void UnimodularCochain::set(std::span<const int> tuple, int point, const RootOfUnity& value) {
  auto key = make_key(tuple, point);
  if (value.is_one())
    values_.erase(key);
  else
    values_[std::move(key)] = value;
}

bool UnimodularCochain::is_cocycle() const {
  for (const auto& key : cochain_domain(*nerve_, degree_ + 1, mode_)) {
    RootOfUnity prod;
    for (std::size_t k = 0; k < key.tuple.size(); ++k) {
      std::vector<int> face = key.tuple;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      const RootOfUnity v = at(face, key.point);
      prod = prod * (k % 2 ? v.conj() : v);
    }
    if (!prod.is_one()) return false;
  }
  return true;
}

bool UnimodularCochain::is_normalized() const {
  for (const auto& [key, v] : values_) {
    if (std::all_of(key.tuple.begin(), key.tuple.end(), [&](int i) { return i == key.tuple.front(); })) return false;
  }
  return true;
}

}  // namespace twistlab

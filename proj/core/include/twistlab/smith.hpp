#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace twistlab {

/// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// U * A * V = diag(d_1, ..., d_r, 0, ...), with d_1 | d_2 | ... | d_r all positive.
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // min(rows, cols) entries
  std::size_t rank = 0;
  IntMatrix U, U_inv;  // rows x rows, unimodular
  IntMatrix V, V_inv;  // cols x cols, unimodular
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Some x in (Z/n)^cols with A x = b (mod n), or nullopt when none exists.
/// The solution is deterministic: free coordinates of the diagonalised system are zero.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, std::span<const std::int64_t> b, std::int64_t n);

/// Rank of A over Z/p for prime p.
std::size_t rank_mod_prime(const IntMatrix& a, std::int64_t p);

}  // namespace twistlab

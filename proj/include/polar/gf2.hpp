#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polar/types.hpp"

namespace polar {

/// Dense GF(2) matrix with rows packed into 64-bit words. The packing is an
/// internal detail; the public interface works on whole bits.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  // The 2x2 polarization kernel [[1,0],[1,1]].
  static BitMatrix kernel();
  // F^(kron n_levels), the generator of a length-2^n_levels polar code in
  // natural (non-bit-reversed) ordering.
  static BitMatrix polar_generator(int n_levels);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int r, int c) const;
  void set(int r, int c, int bit);

  BitMatrix mul(const BitMatrix& rhs) const;
  // v interpreted as a row vector; returns v * M.
  BitVector row_mul(const BitVector& v) const;

  // Rows/cols are 0-based ascending index sets; out-of-range indices throw.
  BitMatrix submatrix(std::span<const int> rowset, std::span<const int> colset) const;

  // Gauss-Jordan inverse; throws std::domain_error on a singular input.
  BitMatrix inverse() const;

  BitMatrix kron(const BitMatrix& rhs) const;

  bool operator==(const BitMatrix& rhs) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;

  const std::uint64_t* row_ptr(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_per_row_; }
  std::uint64_t* row_ptr(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_per_row_; }
};

// In-place polar transform v := v * F^(kron n); self-inverse over GF(2).
// Length must be a power of two.
void polar_transform_inplace(BitVector& v);

BitVector extract(const BitVector& v, std::span<const int> positions);
void assign_at(BitVector& v, std::span<const int> positions, const BitVector& values);

}  // namespace polar

#include "polar/gf2.hpp"

#include <stdexcept>
#include <string>

namespace polar {

namespace {
bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }
}  // namespace

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("BitMatrix: dimensions must be positive");
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

BitMatrix BitMatrix::kernel() {
  BitMatrix f(2, 2);
  f.set(0, 0, 1);
  f.set(1, 0, 1);
  f.set(1, 1, 1);
  return f;
}

BitMatrix BitMatrix::polar_generator(int n_levels) {
  BitMatrix g = identity(1);
  const BitMatrix f = kernel();
  for (int i = 0; i < n_levels; ++i) g = g.kron(f);
  return g;
}

int BitMatrix::get(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("BitMatrix::get: index out of range");
  return static_cast<int>((row_ptr(r)[c >> 6] >> (c & 63)) & 1u);
}

void BitMatrix::set(int r, int c, int bit) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("BitMatrix::set: index out of range");
  const std::uint64_t mask = 1ULL << (c & 63);
  if (bit)
    row_ptr(r)[c >> 6] |= mask;
  else
    row_ptr(r)[c >> 6] &= ~mask;
}

BitMatrix BitMatrix::mul(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("BitMatrix::mul: inner dimensions disagree (" +
                                std::to_string(cols_) + " vs " + std::to_string(rhs.rows_) + ")");
  BitMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    const std::uint64_t* src = row_ptr(r);
    std::uint64_t* dst = out.row_ptr(r);
    for (int k = 0; k < cols_; ++k) {
      if ((src[k >> 6] >> (k & 63)) & 1u) {
        const std::uint64_t* rr = rhs.row_ptr(k);
        for (int w = 0; w < out.words_per_row_; ++w) dst[w] ^= rr[w];
      }
    }
  }
  return out;
}

BitVector BitMatrix::row_mul(const BitVector& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("BitMatrix::row_mul: vector length " + std::to_string(v.size()) +
                                " does not match row count " + std::to_string(rows_));
  std::vector<std::uint64_t> acc(words_per_row_, 0);
  for (int k = 0; k < rows_; ++k) {
    if (v[k] & 1u) {
      const std::uint64_t* rr = row_ptr(k);
      for (int w = 0; w < words_per_row_; ++w) acc[w] ^= rr[w];
    }
  }
  BitVector out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = static_cast<std::uint8_t>((acc[c >> 6] >> (c & 63)) & 1u);
  return out;
}

BitMatrix BitMatrix::submatrix(std::span<const int> rowset, std::span<const int> colset) const {
  if (rowset.empty() || colset.empty())
    throw std::invalid_argument("BitMatrix::submatrix: empty index set");
  BitMatrix out(static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
  for (std::size_t i = 0; i < rowset.size(); ++i) {
    for (std::size_t j = 0; j < colset.size(); ++j) {
      out.set(static_cast<int>(i), static_cast<int>(j), get(rowset[i], colset[j]));
    }
  }
  return out;
}

BitMatrix BitMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("BitMatrix::inverse: matrix not square");
  const int n = rows_;
  // Work on [A | I] with 2n packed columns.
  BitMatrix work(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      if (get(r, c)) work.set(r, c, 1);
    work.set(r, n + r, 1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work.get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("BitMatrix::inverse: singular matrix");
    if (pivot != col) {
      for (int w = 0; w < work.words_per_row_; ++w)
        std::swap(work.row_ptr(col)[w], work.row_ptr(pivot)[w]);
    }
    for (int r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        const std::uint64_t* src = work.row_ptr(col);
        std::uint64_t* dst = work.row_ptr(r);
        for (int w = 0; w < work.words_per_row_; ++w) dst[w] ^= src[w];
      }
    }
  }
  BitMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (work.get(r, n + c)) out.set(r, c, 1);
  return out;
}

BitMatrix BitMatrix::kron(const BitMatrix& rhs) const {
  BitMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c))
        for (int rr = 0; rr < rhs.rows_; ++rr)
          for (int cc = 0; cc < rhs.cols_; ++cc)
            if (rhs.get(rr, cc)) out.set(r * rhs.rows_ + rr, c * rhs.cols_ + cc, 1);
  return out;
}

bool BitMatrix::operator==(const BitMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

void polar_transform_inplace(BitVector& v) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("polar_transform_inplace: length must be a power of two");
  for (std::size_t h = 1; h < n; h *= 2)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) v[j] ^= v[j + h];
}

BitVector extract(const BitVector& v, std::span<const int> positions) {
  BitVector out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) out[i] = v.at(positions[i]);
  return out;
}

void assign_at(BitVector& v, std::span<const int> positions, const BitVector& values) {
  if (positions.size() != values.size())
    throw std::invalid_argument("assign_at: position/value length mismatch");
  for (std::size_t i = 0; i < positions.size(); ++i) v.at(positions[i]) = values[i];
}

}  // namespace polar

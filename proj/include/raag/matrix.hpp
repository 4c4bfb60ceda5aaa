#ifndef RAAG_MATRIX_HPP
#define RAAG_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace raag
{

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over an exact integer type.
template<typename T = BigInt>
class Matrix
{
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
  : _rows(rows),
    _cols(cols),
    _data(rows * cols, T(0))
  {}

  static Matrix identity(std::size_t n)
  {
    Matrix res(n, n);
    for (std::size_t i = 0; i < n; ++i)
      res(i, i) = 1;
    return res;
  }

  static Matrix diagonal(std::vector<T> const &entries)
  {
    Matrix res(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
      res(i, i) = entries[i];
    return res;
  }

  std::size_t rows() const { return _rows; }
  std::size_t cols() const { return _cols; }

  T &operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
  T const &operator()(std::size_t i, std::size_t j) const
  { return _data[i * _cols + j]; }

  std::vector<T> const &data() const { return _data; }

  bool operator==(Matrix const &) const = default;

  Matrix operator*(Matrix const &rhs) const
  {
    if (_cols != rhs._rows)
      throw precondition_error("matrix dimensions do not match");

    Matrix res(_rows, rhs._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        T const &a = (*this)(i, k);
        if (a == 0)
          continue;
        for (std::size_t j = 0; j < rhs._cols; ++j)
          res(i, j) += a * rhs(k, j);
      }
    }
    return res;
  }

  Matrix operator-(Matrix const &rhs) const
  {
    if (_rows != rhs._rows || _cols != rhs._cols)
      throw precondition_error("matrix dimensions do not match");

    Matrix res(*this);
    for (std::size_t i = 0; i < _data.size(); ++i)
      res._data[i] -= rhs._data[i];
    return res;
  }

  bool is_identity() const { return *this == identity(_rows); }

  std::string to_string() const
  {
    std::ostringstream out;
    for (std::size_t i = 0; i < _rows; ++i) {
      out << '[';
      for (std::size_t j = 0; j < _cols; ++j)
        out << (j ? " " : "") << (*this)(i, j);
      out << "]\n";
    }
    return out.str();
  }

private:
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<T> _data;
};

using IntMatrix = Matrix<BigInt>;

namespace detail
{

// Fraction-free Gaussian elimination (Bareiss). Returns the rank and, for
// square input, the determinant.
template<typename T>
std::pair<std::size_t, T> bareiss(Matrix<T> m)
{
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  T prev = 1;
  int sign = 1;

  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows)
      continue;

    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }

    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m(r, j) = (m(rank, col) * m(r, j) - m(r, col) * m(rank, j)) / prev;
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }

  T det = 0;
  if (rows == cols && rank == rows)
    det = sign * m(rows - 1, cols - 1);
  return {rank, det};
}

} // namespace detail

template<typename T>
std::size_t rank(Matrix<T> const &m)
{ return detail::bareiss(m).first; }

template<typename T>
T determinant(Matrix<T> const &m)
{
  if (m.rows() != m.cols())
    throw precondition_error("determinant of a non-square matrix");
  if (m.rows() == 0)
    return T(1);
  return detail::bareiss(m).second;
}

} // namespace raag

#endif // RAAG_MATRIX_HPP

#include "cmbal/exact_linalg.hpp"

#include <algorithm>

#include "cmbal/errors.hpp"

namespace cmbal {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw InputError("malformed rational '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(), ::isdigit)) {
      throw InputError("malformed rational '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void RationalMatrix::set_block(std::size_t r0, std::size_t c0, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix scaled_rows(const RationalMatrix& m) {
  IntMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  return out;
}

/// Bareiss elimination in place; returns the rank and the sign of the row permutation.
std::pair<std::size_t, int> bareiss(IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return {r, sign};
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  IntMatrix a = scaled_rows(m);
  return bareiss(a, m.cols()).first;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Scale each row to integers, take the integer determinant, undo the scaling.
  Rational scale = 1;
  IntMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    scale *= Rational(l);
  }
  auto [r, sign] = bareiss(a, n);
  if (r < n) return 0;
  return Rational(a[n - 1][n - 1] * sign) / scale;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

SparseRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row) {
  BigInt l = 1;
  for (const auto& [c, v] : row) l = boost::multiprecision::lcm(l, denominator(v));
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v != 0) out.emplace_back(c, numerator(v) * (l / denominator(v)));
  }
  return out;
}

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

/// a*x - b*y over the union of supports.
SparseRow combine(const BigInt& a, const SparseRow& x, const BigInt& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      BigInt v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  make_primitive(row);
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const SparseRow& pivot = pivots_[lead];
    if (pivot.empty()) {
      pivots_[lead] = std::move(row);
      ++rank_;
      return true;
    }
    const BigInt& p = pivot.front().second;
    const BigInt& c = row.front().second;
    const BigInt g = boost::multiprecision::gcd(p, c);
    row = combine(p / g, row, c / g, pivot);
    make_primitive(row);
  }
  return false;
}

std::vector<std::size_t> SparseEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivots_.size(); ++c) {
    if (!pivots_[c].empty()) out.push_back(c);
  }
  return out;
}

}  // namespace cmbal

#include "schwarzian/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace schwarzian {

RatMat::RatMat(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  e_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), RatFunc(0));
}

RatMat::RatMat(std::initializer_list<std::initializer_list<RatFunc>> rows)
    : RatMat(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("matrix rows must have equal length");
    int j = 0;
    for (const auto& v : row) at(i, j++) = v;
    ++i;
  }
}

RatMat RatMat::identity(int n) {
  RatMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
  return m;
}

RatMat RatMat::diagonal(const std::vector<RatFunc>& d) {
  RatMat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool RatMat::is_constant() const {
  for (const auto& v : e_)
    if (!v.is_constant()) return false;
  return true;
}

RatMat RatMat::operator-() const {
  RatMat r = *this;
  for (auto& v : r.e_) v = -v;
  return r;
}

namespace {
void check_dims(const RatMat& a, const RatMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
}
}  // namespace

RatMat operator+(const RatMat& a, const RatMat& b) {
  check_dims(a, b);
  RatMat r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) { return a + (-b); }

RatMat operator*(const RatMat& a, const RatMat& b) {
  check_dims(a, b);
  const int n = a.dim();
  RatMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc acc(0);
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

RatMat RatMat::operator*(const RatFunc& s) const {
  RatMat r = *this;
  for (auto& v : r.e_) v *= s;
  return r;
}

RatMat RatMat::derivative() const {
  RatMat r = *this;
  for (auto& v : r.e_) v = v.derivative();
  return r;
}

RatFunc RatMat::trace() const {
  RatFunc acc(0);
  for (int i = 0; i < n_; ++i) acc += at(i, i);
  return acc;
}

RatFunc RatMat::det() const {
  // Gaussian elimination over the function field.
  RatMat m = *this;
  RatFunc d(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (!m.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return RatFunc(0);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    const RatFunc inv = m.at(col, col).inverse();
    for (int row = col + 1; row < n_; ++row) {
      if (m.at(row, col).is_zero()) continue;
      const RatFunc f = m.at(row, col) * inv;
      for (int j = col; j < n_; ++j) m.at(row, j) -= f * m.at(col, j);
    }
  }
  return d;
}

RatMat RatMat::inverse() const {
  if (n_ == 2) {
    const RatFunc d = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (d.is_zero()) throw SingularMatrix("matrix has identically zero determinant");
    const RatFunc inv_d = d.inverse();
    return RatMat{{at(1, 1) * inv_d, -(at(0, 1) * inv_d)},
                  {-(at(1, 0) * inv_d), at(0, 0) * inv_d}};
  }
  RatMat m = *this;
  RatMat inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (!m.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularMatrix("matrix has identically zero determinant");
    if (pivot != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const RatFunc piv_inv = m.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      m.at(col, j) *= piv_inv;
      inv.at(col, j) *= piv_inv;
    }
    for (int row = 0; row < n_; ++row) {
      if (row == col || m.at(row, col).is_zero()) continue;
      const RatFunc f = m.at(row, col);
      for (int j = 0; j < n_; ++j) {
        m.at(row, j) -= f * m.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMat RatMat::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  RatMat r = identity(n_);
  RatMat b = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    b = b * b;
  }
  return r;
}

std::vector<RatFunc> RatMat::charpoly() const {
  // Faddeev–LeVerrier recursion.
  std::vector<RatFunc> c(static_cast<size_t>(n_) + 1, RatFunc(0));
  c[static_cast<size_t>(n_)] = RatFunc(1);
  RatMat m(n_);
  for (int k = 1; k <= n_; ++k) {
    m = *this * m + c[static_cast<size_t>(n_ - k + 1)] * identity(n_);
    const RatMat am = *this * m;
    c[static_cast<size_t>(n_ - k)] = -(am.trace() / RatFunc(Rational(k)));
  }
  return c;
}

RatMat RatMat::compose(const RatFunc& inner) const {
  RatMat r = *this;
  for (auto& v : r.e_) v = v.compose(inner);
  return r;
}

std::string RatMat::to_string(const std::string& var) const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) {
    out << (i == 0 ? "[" : " [");
    for (int j = 0; j < n_; ++j) {
      out << at(i, j).to_string(var);
      if (j + 1 < n_) out << ", ";
    }
    out << "]";
    if (i + 1 < n_) out << ",";
  }
  out << "]";
  return out.str();
}

}  // namespace schwarzian

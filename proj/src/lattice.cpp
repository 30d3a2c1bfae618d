#include "hypertile/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace hypertile {

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector integer_scaling(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    out[i] = scaled.get_num();
  }
  return primitive(out);
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(IntVector& y, const Integer& c, const IntVector& x) {
  if (c == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += c * x[k];
}

// Unimodular row reduction of `rows` to echelon form on the first
// `pivot_cols` columns.  Returns the pivot columns in order; rows past the
// rank are zero on those columns.  With `reduce`, entries above each pivot
// are brought into [0, pivot).
std::vector<std::size_t> echelon(std::vector<IntVector>& rows, std::size_t pivot_cols, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = floor_div(rows[i][col], rows[r][col]);
        axpy(rows[i], -q, rows[r]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    if (reduce) {
      for (std::size_t i = 0; i < r; ++i) {
        Integer q = floor_div(rows[i][col], rows[r][col]);
        axpy(rows[i], -q, rows[r]);
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

SubLattice SubLattice::full(std::size_t n) {
  std::vector<IntVector> id;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = zero_vector(n);
    e[i] = 1;
    id.push_back(std::move(e));
  }
  return hermite_basis(id, n);
}

SubLattice hermite_basis(const std::vector<IntVector>& vectors, std::size_t ambient_dim) {
  std::size_t n = vectors.empty() ? ambient_dim : vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw InputError("hermite_basis: vectors of different dimensions");
  if (!vectors.empty() && ambient_dim != 0 && ambient_dim != n)
    throw InputError("hermite_basis: ambient dimension mismatch");
  std::vector<IntVector> rows = vectors;
  auto pivots = echelon(rows, n, true);
  rows.resize(pivots.size());
  SubLattice out(n);
  out.basis_ = std::move(rows);
  return out;
}

bool SubLattice::contains(const IntVector& v) const {
  auto c = lattice_coordinates(*this, v);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool SubLattice::contains(const SubLattice& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(),
                     [&](const IntVector& v) { return contains(v); });
}

std::optional<RatVector> lattice_coordinates(const SubLattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient_dim()) throw InputError("lattice_coordinates: dimension mismatch");
  // The basis is echelon: solve top-down on pivot columns, then verify.
  const auto& b = lattice.basis();
  RatVector coords(b.size());
  RatVector residual = to_rational(v);
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t p = 0;
    while (b[i][p] == 0) ++p;
    coords[i] = residual[p] / Rational(b[i][p]);
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= coords[i] * b[i][k];
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coords;
}

SubLattice kernel_lattice(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // Rows are [M^T | I]; reducing the left block exposes kernel vectors on the right.
  std::vector<IntVector> rows(n, zero_vector(k + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = m(j, i);
    rows[i][k + i] = 1;
  }
  auto pivots = echelon(rows, k, false);
  std::vector<IntVector> kernel;
  for (std::size_t i = pivots.size(); i < n; ++i)
    kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(k), rows[i].end());
  return hermite_basis(kernel, n);
}

SubLattice perp_lattice(const SubLattice& lattice) {
  return kernel_lattice(IntMatrix::from_rows(lattice.basis(), lattice.ambient_dim()));
}

std::vector<Integer> smith_invariant_factors(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));
    bool done = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      Integer q = floor_div(a(i, t), a(t, t));
      for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
      if (a(i, t) != 0) done = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      Integer q = floor_div(a(t, j), a(t, t));
      for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
      if (a(t, j) != 0) done = false;
    }
    if (!done) continue;
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) a(t, jj) += a(i, jj);
          divisible = false;
          break;
        }
    if (!divisible) continue;
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

Saturation saturation(const SubLattice& lattice) {
  SubLattice sat = perp_lattice(perp_lattice(lattice));
  Integer index = 1;
  if (!lattice.is_zero()) {
    for (const auto& d : smith_invariant_factors(IntMatrix::from_rows(lattice.basis(), lattice.ambient_dim())))
      index *= d;
  }
  return {std::move(sat), index};
}

std::size_t rational_rank(const std::vector<IntVector>& vectors, std::size_t ambient_dim) {
  return hermite_basis(vectors, ambient_dim).rank();
}

void LinearSystem::validate() const {
  auto check = [&](const std::vector<IntVector>& rows) {
    for (const auto& r : rows)
      if (r.size() != dim) throw InputError("LinearSystem: row length differs from dim");
  };
  check(strict);
  check(weak);
  check(equalities);
}

bool satisfies(const LinearSystem& system, const RatVector& x) {
  if (x.size() != system.dim) return false;
  for (const auto& r : system.strict)
    if (dot(r, x) <= 0) return false;
  for (const auto& r : system.weak)
    if (dot(r, x) < 0) return false;
  for (const auto& r : system.equalities)
    if (dot(r, x) != 0) return false;
  return true;
}

namespace {

// Dense phase-one simplex with Bland's rule over the rationals.
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t structural)
      : a_(std::move(rows)), b_(std::move(rhs)), structural_(structural) {
    const std::size_t m = a_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (b_[i] < 0) {
        for (auto& x : a_[i]) x = -x;
        b_[i] = -b_[i];
      }
      for (std::size_t k = 0; k < m; ++k) a_[i].push_back(i == k ? Rational(1) : Rational(0));
      basis_.push_back(structural_ + i);
    }
    cols_ = structural_ + m;
    cost_.assign(cols_, Rational(0));
    objective_ = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cost_[j] -= a_[i][j];
      objective_ += b_[i];
    }
  }

  // Returns the structural part of a feasible point, or nullopt.
  std::optional<std::vector<Rational>> solve() {
    const std::size_t m = a_.size();
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) break;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) break;  // unbounded direction cannot occur in phase one
      pivot(leave, enter);
    }
    if (objective_ != 0) return std::nullopt;
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] < structural_) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
    }
    if (cost_[c] != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[r][j] != 0) cost_[j] -= f * a_[r][j];
      objective_ += f * b_[r];
    }
    basis_[r] = c;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> cost_;
  Rational objective_;
  std::vector<std::size_t> basis_;
  std::size_t structural_;
  std::size_t cols_ = 0;
};

}  // namespace

std::optional<RatVector> feasible_strict(const LinearSystem& system) {
  system.validate();
  const std::size_t n = system.dim;
  const std::size_t ineq = system.strict.size() + system.weak.size();
  // Structural columns: x+ (n), x- (n), one surplus per inequality.
  const std::size_t structural = 2 * n + ineq;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto add_row = [&](const IntVector& r, long surplus, long b) {
    std::vector<Rational> row(structural, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = r[j];
      row[n + j] = -r[j];
    }
    if (surplus >= 0) row[2 * n + static_cast<std::size_t>(surplus)] = -1;
    rows.push_back(std::move(row));
    rhs.emplace_back(b);
  };
  long s = 0;
  for (const auto& r : system.strict) add_row(r, s++, 1);
  for (const auto& r : system.weak) add_row(r, s++, 0);
  for (const auto& r : system.equalities) add_row(r, -1, 0);
  if (rows.empty()) return RatVector(n, Rational(0));

  auto sol = PhaseOne(std::move(rows), std::move(rhs), structural).solve();
  if (!sol) return std::nullopt;
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*sol)[j] - (*sol)[n + j];
  return x;
}

std::optional<RatVector> solve_linear(const std::vector<IntVector>& rows, const RatVector& rhs,
                                      std::size_t dim) {
  if (rows.size() != rhs.size()) throw InputError("solve_linear: row/rhs count mismatch");
  // Gauss-Jordan on the augmented rational matrix; free variables set to 0.
  std::vector<RatVector> a;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw InputError("solve_linear: row length mismatch");
    RatVector r = to_rational(rows[i]);
    r.push_back(rhs[i]);
    a.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k <= dim; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (a[i][dim] != 0) return std::nullopt;
  RatVector x(dim, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][dim];
  return x;
}

}  // namespace hypertile

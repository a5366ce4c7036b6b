#include "flownet/linalg.hpp"

#include <algorithm>

namespace flownet {

std::string to_string(const QuotientPresentation& p, Ring ring) {
  const std::string base(ring_name(ring));
  std::vector<std::string> parts;
  if (p.free_rank == 1) {
    parts.push_back(base);
  } else if (p.free_rank > 1) {
    parts.push_back(base + "^" + std::to_string(p.free_rank));
  }
  for (const auto& d : p.invariant_factors) parts.push_back(base + "/" + to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}, 0};
  RatMatrix& r = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    r.swap_rows(row, pivot);
    const Rational inv = 1 / r(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Rational factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_vars.push_back(j);
  }
  RatMatrix k(n, free_vars.size());
  for (std::size_t c = 0; c < free_vars.size(); ++c) {
    const std::size_t f = free_vars[c];
    k(f, c) = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      k(r.pivots[row], c) = -r.reduced(row, f);
    }
  }
  return k;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) {
    fail(ErrorCode::InputError, "solve: right-hand side has length " + std::to_string(b.size()) +
                                    ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  const RatMatrix augmented = hstack(m, RatMatrix(m.rows(), 1, b));
  const RrefResult r = rref(augmented);
  const std::size_t n = m.cols();
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t row = 0; row < r.pivots.size(); ++row) x[r.pivots[row]] = r.reduced(row, n);
  return x;
}

bool column_span_contains(const RatMatrix& outer, const RatMatrix& inner) {
  if (outer.rows() != inner.rows()) fail(ErrorCode::InputError, "span comparison: row mismatch");
  return rank(hstack(outer, inner)) == rank(outer);
}

bool same_column_span(const RatMatrix& a, const RatMatrix& b) {
  return column_span_contains(a, b) && column_span_contains(b, a);
}

IntMatrix to_integer_matrix(const RatMatrix& m) {
  std::vector<Integer> data;
  data.reserve(m.rows() * m.cols());
  for (const auto& x : m.data()) {
    if (!is_integral(x)) fail(ErrorCode::InputError, "non-integral entry " + to_string(x));
    data.push_back(x.get_num());
  }
  return IntMatrix(m.rows(), m.cols(), std::move(data));
}

RatMatrix to_rational_matrix(const IntMatrix& m) {
  std::vector<Rational> data;
  data.reserve(m.rows() * m.cols());
  for (const auto& x : m.data()) data.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(data));
}

namespace {

// Elementary-operation bookkeeping for the Smith reduction. `u` receives the
// row operations, `v` the column operations and `v_inv` their inverses, so
// that u * a0 * v == a and v * v_inv == I throughout.
class SmithReducer {
 public:
  SmithReducer(IntMatrix a, bool track_u, bool track_v, bool track_v_inv)
      : a_(std::move(a)), track_u_(track_u), track_v_(track_v), track_v_inv_(track_v_inv) {
    if (track_u_) u_ = IntMatrix::identity(a_.rows());
    if (track_v_) v_ = IntMatrix::identity(a_.cols());
    if (track_v_inv_) v_inv_ = IntMatrix::identity(a_.cols());
  }

  void reduce() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_min_to_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (a_(i, t) == 0) continue;
          row_sub(i, t, a_(i, t) / a_(t, t));
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) == 0) continue;
          col_sub(j, t, a_(t, j) / a_(t, t));
          if (a_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(t);
          continue;
        }
        if (auto row = indivisible_row(t)) {
          row_sub(t, *row, Integer(-1));
          continue;
        }
        break;
      }
      if (a_(t, t) < 0) row_negate(t);
    }
  }

  IntMatrix& a() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  IntMatrix& v_inv() { return v_inv_; }

 private:
  bool move_min_to_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer mag = abs(a_(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void move_min_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(a_(t, t));
    bool in_column = true;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      if (a_(i, t) != 0 && (best == 0 || abs(a_(i, t)) < best)) {
        best = abs(a_(i, t));
        bi = i;
        in_column = true;
      }
    }
    for (std::size_t j = t; j < a_.cols(); ++j) {
      if (a_(t, j) != 0 && (best == 0 || abs(a_(t, j)) < best)) {
        best = abs(a_(t, j));
        bj = j;
        in_column = false;
      }
    }
    if (in_column) {
      row_swap(t, bi);
    } else {
      col_swap(t, bj);
    }
  }

  std::optional<std::size_t> indivisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) % a_(t, t) != 0) return i;
    return std::nullopt;
  }

  // row_target -= q * row_source
  void row_sub(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(target, j) -= q * a_(source, j);
    if (track_u_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(target, j) -= q * u_(source, j);
    }
  }

  // col_target -= q * col_source
  void col_sub(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, target) -= q * a_(i, source);
    if (track_v_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, target) -= q * v_(i, source);
    }
    if (track_v_inv_) {
      for (std::size_t j = 0; j < v_inv_.cols(); ++j) v_inv_(source, j) += q * v_inv_(target, j);
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (track_u_) u_.swap_rows(a, b);
  }

  void col_swap(std::size_t a, std::size_t b) {
    a_.swap_columns(a, b);
    if (track_v_) v_.swap_columns(a, b);
    if (track_v_inv_) v_inv_.swap_rows(a, b);
  }

  void row_negate(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    if (track_u_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix v_inv_;
  bool track_u_;
  bool track_v_;
  bool track_v_inv_;
};

std::size_t diagonal_rank(const IntMatrix& d) {
  std::size_t r = 0;
  while (r < std::min(d.rows(), d.cols()) && d(r, r) != 0) ++r;
  return r;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithReducer reducer(m, true, true, false);
  reducer.reduce();
  return SmithResult{std::move(reducer.u()), std::move(reducer.a()), std::move(reducer.v())};
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  SmithReducer reducer(m, false, false, false);
  reducer.reduce();
  const IntMatrix& d = reducer.a();
  std::vector<Integer> out;
  for (std::size_t i = 0; i < diagonal_rank(d); ++i) out.push_back(d(i, i));
  return out;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) {
    fail(ErrorCode::InputError, "solve_integer: right-hand side has length " + std::to_string(b.size()) +
                                    ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  SmithReducer reducer(m, true, true, false);
  reducer.reduce();
  const IntMatrix& d = reducer.a();
  const std::size_t r = diagonal_rank(d);
  const std::vector<Integer> ub = reducer.u() * b;
  std::vector<Integer> y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (ub[i] % d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return reducer.v() * y;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  SmithReducer reducer(m, false, true, false);
  reducer.reduce();
  const std::size_t r = diagonal_rank(reducer.a());
  std::vector<std::size_t> tail;
  for (std::size_t j = r; j < m.cols(); ++j) tail.push_back(j);
  return reducer.v().select_columns(tail);
}

namespace {

QuotientPresentation presentation_from_diagonal(std::size_t generators,
                                                const std::vector<Integer>& diagonal) {
  QuotientPresentation p;
  p.free_rank = generators - diagonal.size();
  for (const auto& d : diagonal) {
    if (d > 1) p.invariant_factors.push_back(d);
  }
  return p;
}

}  // namespace

QuotientPresentation homology_at(const RatMatrix& d_in, const RatMatrix& d_out, Ring ring) {
  if (d_in.rows() != d_out.cols()) {
    fail(ErrorCode::InputError, "homology_at: incoming map has " + std::to_string(d_in.rows()) +
                                    " rows, outgoing map has " + std::to_string(d_out.cols()) +
                                    " columns");
  }
  if (!(d_out * d_in).is_zero()) {
    fail(ErrorCode::CompositionNotZero, "homology_at: d_out * d_in is not zero");
  }
  const std::size_t n = d_in.rows();
  if (ring == Ring::Q) {
    QuotientPresentation p;
    p.free_rank = n - rank(d_out) - rank(d_in);
    return p;
  }

  const IntMatrix in = to_integer_matrix(d_in);
  SmithReducer reducer(to_integer_matrix(d_out), false, false, true);
  reducer.reduce();
  const std::size_t r = diagonal_rank(reducer.a());
  // Coordinates of im(d_in) in the kernel basis given by the tail columns of V.
  const IntMatrix coords = reducer.v_inv() * in;
  std::vector<std::size_t> tail;
  for (std::size_t i = r; i < n; ++i) tail.push_back(i);
  return presentation_from_diagonal(n - r, smith_diagonal(coords.select_rows(tail)));
}

CokernelResult cokernel_presentation(const RatMatrix& m, Ring ring) {
  CokernelResult out;
  if (ring == Ring::Z) {
    out.presentation = presentation_from_diagonal(m.rows(), smith_diagonal(to_integer_matrix(m)));
    return out;
  }
  const RrefResult r = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!is_pivot[i]) out.complement.push_back(i);
  }
  RatMatrix proj(out.complement.size(), m.rows());
  for (std::size_t c = 0; c < out.complement.size(); ++c) {
    proj(c, out.complement[c]) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      proj(c, r.pivots[k]) = -r.reduced(k, out.complement[c]);
    }
  }
  out.presentation.free_rank = out.complement.size();
  out.projection = std::move(proj);
  return out;
}

}  // namespace flownet

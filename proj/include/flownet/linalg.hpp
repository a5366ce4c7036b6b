#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/rational.hpp"

namespace flownet {

/// A finitely generated module: free part plus torsion given by invariant
/// factors d_1 | d_2 | ... with every d_i >= 2. Over Q the torsion is empty.
struct QuotientPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }

  friend bool operator==(const QuotientPresentation&, const QuotientPresentation&) = default;
};

// "0", "Q^2", "Z", "Z^2 + Z/2 + Z/4".
std::string to_string(const QuotientPresentation& p, Ring ring);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of ker M as columns. One column per free variable, in ascending
/// free-variable order: the free variable is 1, other free variables 0.
RatMatrix kernel_basis(const RatMatrix& m);

/// Particular solution of M x = b with all free variables zero, or nullopt
/// when b is outside the image. Length mismatch raises InputError.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Column span of `inner` lies in the column span of `outer`.
bool column_span_contains(const RatMatrix& outer, const RatMatrix& inner);
bool same_column_span(const RatMatrix& a, const RatMatrix& b);

struct SmithResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
/// Pivots are chosen by minimal absolute value.
SmithResult smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal of the Smith form, without tracking transforms.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

/// Integer solution of M x = b (free Smith coordinates zeroed), or nullopt
/// when b is not in the Z-span of the columns.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);

/// Z-basis (as columns) of the lattice {x in Z^n : M x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// ker(d_out) / im(d_in). Over Z both maps must be integral. Raises
/// CompositionNotZero when d_out * d_in != 0.
QuotientPresentation homology_at(const RatMatrix& d_in, const RatMatrix& d_out, Ring ring);

struct CokernelResult {
  QuotientPresentation presentation;
  /// Over Q only: rows index the complement coordinates (those that are not
  /// pivots of the column space, ascending); kernel of the projection is im M.
  std::optional<RatMatrix> projection;
  std::vector<std::size_t> complement;
};

CokernelResult cokernel_presentation(const RatMatrix& m, Ring ring);

}  // namespace flownet

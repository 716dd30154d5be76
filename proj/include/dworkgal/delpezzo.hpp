#pragma once

#include <array>
#include <string>
#include <vector>

#include "dworkgal/multiquad.hpp"
#include "dworkgal/polynomial.hpp"
#include "dworkgal/rational.hpp"

namespace dworkgal::dp {

using alg::AlgebraElement;
using alg::FieldPtr;
using alg::HomogPoly;
using alg::SignVector;

// Degree-2 del Pezzo quotient of the Dwork surface by the involution
// swapping X_i, X_j with twist r. The weighted model is 2 w^2 = Q with Q
// the branch quartic below in the chart variables (u, X2, X3); the factor
// 2 is the recorded normalization of the printed w^2 = Q form.
struct QuotientSurface {
  int i = 0, j = 1, r = 4;
  Rat lambda;
  FieldPtr field;  // 16-dimensional coefficient algebra over Q
  HomogPoly branch_quartic;
};

QuotientSurface surface_model(int i, int j, int r, const Rat& lambda);

// A line on the double cover: linear form (normalized so its first
// nonzero coefficient in (u, X2, X3) order is 1) together with the exact
// quadratic giving w on the line, reduced modulo the linear form.
// norm_factor * w_expr^2 = branch quartic on the line (always 2 here).
struct Line {
  std::array<AlgebraElement, 3> linear;
  HomogPoly w_expr;
  Rat norm_factor;
  int family = 0;      // 1..7
  int root_index = 0;  // 0..3 within the family
  int sign = +1;       // which lift over the bitangent

  std::string key() const;  // canonical representative for matching
};

// All 56 lines: families (1)-(3) from the printed closed forms, families
// (4)-(7) from derived roots plus exact square completion of the
// restricted quartic. Errors: RootVerificationFailed,
// SquareCompletionFailed.
std::vector<Line> build_lines(const QuotientSurface& S);

struct LineVerification {
  bool passed = false;
  Rat normalization;  // scalar c with c * w^2 = Q on the line
};

// Exact membership: w_expr^2 proportional to the branch quartic after
// eliminating one variable through the linear form; the constant of
// proportionality is solved for and reported.
LineVerification verify_line(const QuotientSurface& S, const Line& line);

// Index permutation of `lines` induced by the sign automorphism eps
// applied to every coefficient. ImageNotFound when a coefficient image is
// not in the list.
std::vector<int> galois_permutation(const QuotientSurface& S,
                                    const std::vector<Line>& lines,
                                    const SignVector& eps);

// The lambda = 0 specialization 2 w^2 = A x^4 + B y^4 + C z^4 over
// Q(zeta8), with chosen fourth roots (a, b, c) of (A, B, C).
struct FermatModel {
  Rat A, B, C;
  FieldPtr field;  // generators (-1, 2)
  AlgebraElement a, b, c, zeta;
  HomogPoly rhs;  // A x^4 + B y^4 + C z^4
};

// The quotient chart at lambda = 0: (A, B, C) = (1, -1, -1), a = 1,
// b = c = zeta8.
FermatModel fermat_model();

std::vector<Line> fermat_lines(const FermatModel& M);

// The eight classes v1..v7, v8' fixed in the lambda = 0 analysis, in that
// order (v7 is the line with coefficient triple (I, I, I)).
std::array<Line, 8> fermat_basis_lines(const FermatModel& M);

// Intersection number of distinct lines: 1 or 0 when the bitangents
// differ (they meet in one plane point, on the cover iff the w values
// agree), 2 for the two lifts of one bitangent. SameLine for equal lines.
int intersection_number(const FermatModel& M, const Line& l1, const Line& l2);

}  // namespace dworkgal::dp

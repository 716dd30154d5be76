#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dworkgal/ffield.hpp"
#include "dworkgal/rational.hpp"

namespace dworkgal::cnt {

enum class Model { DworkX, MirrorM, ResolvedY };

const char* model_name(Model m);

struct SurfaceSpec {
  Model model;
  Rat lambda;
};

struct CountReport {
  SurfaceSpec spec;
  uint64_t p = 0;
  int k = 1;
  uint64_t q = 0;
  uint64_t n_points = 0;
};

struct TraceReport {
  uint64_t p = 0;
  int k = 1;
  uint64_t q = 0;
  int t_ns_predicted = 0;
  uint64_t x_count = 0;
  uint64_t y_count = 0;
  // q * tr(Frob | T): the residual after removing 1 + q^2 + q*t_ns.
  long long t_transcendental = 0;
  bool passed = false;
  bool weil_bound_ok = false;
};

struct CurveReport {
  uint64_t q = 0;
  uint64_t n_x = 0;
  uint64_t n_y = 0;
  bool bijection_ok = false;
  // packed field indices of the roots, ascending
  std::vector<uint64_t> roots_x;
  std::vector<uint64_t> roots_y;
};

struct Admissibility {
  bool ok = true;
  std::string reason;  // error-code name when !ok
};

// Exact projective point count of
//   X_lambda : X0^4+X1^4+X2^4+X3^4 - 4 lambda X0X1X2X3 = 0
// over F_q, by chart-wise enumeration. jobs = 0 means all hardware threads.
CountReport count_x(const Rat& lambda, const ff::FieldSpec& F, int jobs = 0);

// Exact projective point count of the singular mirror quotient
//   M_lambda : (Y0+Y1+Y2+Y3)^4 - (4 lambda)^4 Y0Y1Y2Y3 = 0.
CountReport count_m(const Rat& lambda, const ff::FieldSpec& F, int jobs = 0);

// Count of the resolved mirror Y_lambda = #M + 18q (six rational A_3
// points, each replaced by a chain of three rational curves).
CountReport count_y(const Rat& lambda, const ff::FieldSpec& F, int jobs = 0);

// Predicted tr(Frob_q | NS) from the character decomposition:
// 1 + 3 chi(-(l^2-1)) + 3 chi(-(l^2+1)) + 6 chi(-2(l^4-1)) + 6 chi(2(l^4-1)).
int t_ns_predicted(const Rat& lambda, const ff::FieldSpec& F);

// Checks #X - #Y = q (t_ns - 19) exactly.
TraceReport verify_trace_identity(const Rat& lambda, const ff::FieldSpec& F,
                                  int jobs = 0);

// Wan congruence #X = #Y (mod p^k).
bool verify_wan(const Rat& lambda, uint64_t p, int k, int jobs = 0);

// Strengthened congruence #X = #Y (mod 3 p^k); rejects p in {2,3}.
bool verify_mod3q(const Rat& lambda, uint64_t p, int k, int jobs = 0);

// Root counts of u^4 + 3 - 4 lambda u and (s+3)^4 - (4 lambda)^4 s over
// F_q, plus the u -> u^4 bijection check between the two root sets.
CurveReport curve_counts(const Rat& lambda, const ff::FieldSpec& F);

// Aggregated good-reduction test: p odd, p does not divide den(lambda)
// nor 2 num(lambda^4-1), and lambda != 0 mod p when the mirror is needed.
Admissibility admissible(const Rat& lambda, uint64_t p,
                         bool need_mirror = true);

}  // namespace dworkgal::cnt

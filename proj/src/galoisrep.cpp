#include "dworkgal/galoisrep.hpp"

#include <numeric>
#include <sstream>

#include "dworkgal/errors.hpp"
#include "dworkgal/ffield.hpp"

namespace dworkgal::gal {

namespace {

// Transcribed once from the source tables; the structural suite
// (involutions, commutation, isometry, eigenstructure, Frobenius traces
// against point counts) validates the transcription. Stored row-major as
// printed; the accessor semantics are column action on coordinates.
constexpr int kSigmaI8[8][8] = {
    {-1, 0, 0, 0, 0, 0, -1, -1},
    {0, -1, 0, 0, 0, 0, -1, -1},
    {0, 0, -1, 0, 0, 0, -1, -1},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, -1, -1},
    {-1, -1, -1, 0, 0, -1, -1, -2},
    {1, 1, 1, 0, 0, 1, 2, 3},
};

constexpr int kSigma28[8][8] = {
    {0, -1, -1, -1, -1, -1, 0, -2},
    {-1, 0, -1, -1, -1, -1, 0, -2},
    {-1, -1, -2, -1, -1, -1, -1, -3},
    {-1, -1, -1, -2, -1, -1, -1, -3},
    {-1, -1, -1, -1, -2, -1, -1, -3},
    {-1, -1, -1, -1, -1, -2, -1, -3},
    {0, 0, -1, -1, -1, -1, -1, -2},
    {2, 2, 3, 3, 3, 3, 2, 7},
};

constexpr int kSigmaPlus8[8][8] = {
    {-1, 0, -1, -1, -1, -1, 0, -2},
    {0, -1, -1, -1, -1, -1, 0, -2},
    {-1, -1, -2, -1, -1, -1, -1, -3},
    {-1, -1, -1, -2, -1, -1, -1, -3},
    {-1, -1, -1, -1, -2, -1, -1, -3},
    {-1, -1, -1, -1, -1, -2, -1, -3},
    {0, 0, -1, -1, -1, -1, -1, -2},
    {2, 2, 3, 3, 3, 3, 2, 7},
};

constexpr int kSigmaMinus8[8][8] = {
    {-1, -2, -1, -1, -1, -1, -1, -3},
    {-2, -1, -1, -1, -1, -1, -1, -3},
    {-1, -1, -2, -1, -1, -1, -1, -3},
    {-1, -1, -1, -2, -1, -1, -1, -3},
    {-1, -1, -1, -1, -2, -1, -1, -3},
    {-1, -1, -1, -1, -1, -2, -1, -3},
    {-1, -1, -1, -1, -1, -1, -2, -3},
    {3, 3, 3, 3, 3, 3, 3, 8},
};

constexpr int kSigmaI19[19][19] = {
    {-1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, -1, -1, 0, -1, -2, -1},
    {0, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, -1, -1, 0, -1, -2, -1},
    {0, 0, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, -1, -1, 0, -1, -2, -1},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, -1, -3, -1},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1},
    {0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, -1, -1, -1, 0, -1, -2, -1},
    {-1, -1, -1, 0, 0, -1, -1, -2, -1, 0, 0, -1, 0, 0, 0, 0, 0, -2, -1},
    {1, 1, 1, 0, 0, 1, 2, 3, 1, 0, 0, 1, 2, 2, 2, 0, 2, 6, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
};

constexpr int kSigma219[19][19] = {
    {0, -1, -1, -1, -1, -1, 0, -2, -1, -1, -1, -1, 0, 0, -1, -1, -1, 1, -1},
    {-1, 0, -1, -1, -1, -1, 0, -2, -1, -1, -1, -1, 0, 0, -1, -1, -1, 1, -1},
    {-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, 1, -1},
    {-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, 2, -1},
    {-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, 1, -2},
    {0, 0, -1, -1, -1, -1, -1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 0},
    {2, 2, 3, 3, 3, 3, 2, 7, 3, 3, 3, 3, 1, 1, 3, 3, 3, -3, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0, 0, 0, -1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

constexpr int kSigmaPlus19[19][19] = {
    {-1, 0, -1, -1, -1, -1, 0, -2, -1, -1, -1, -1, 0, 0, -1, -1, -1, 0, -2},
    {0, -1, -1, -1, -1, -1, 0, -2, -1, -1, -1, -1, 0, 0, -1, -1, -1, 0, -2},
    {-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -3},
    {-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -4},
    {-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
    {-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -4},
    {0, 0, -1, -1, -1, -1, -1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, -1},
    {2, 2, 3, 3, 3, 3, 2, 7, 3, 3, 3, 3, 1, 1, 3, 3, 3, 2, 7},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

constexpr int kSigmaMinus19[19][19] = {
    {-1, -2, -1, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {-2, -1, -1, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {-1, -1, -2, -1, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1},
    {-1, -1, -1, -2, -1, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 2, 2},
    {-1, -1, -1, -1, -2, -1, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {-1, -1, -1, -1, -1, -2, -1, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1},
    {-1, -1, -1, -1, -1, -1, -2, -3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
    {3, 3, 3, 3, 3, 3, 3, 8, 3, 3, 3, 3, 3, 3, 3, 3, 3, -2, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
};

constexpr const char* kLabels[4] = {"sigma_I", "sigma_2", "sigma_plus",
                                    "sigma_minus"};

// entry checksums (sum of all entries) pin the transcription
constexpr long long kChecksum8[4] = {-8, -40, -40, -48};
constexpr long long kChecksum19[4] = {-35, -73, -93, -83};

template <int N>
GaloisMatrix from_array(const int (*a)[N], const char* label,
                        const char* basis) {
  GaloisMatrix m;
  m.dim = N;
  m.label = label;
  m.basis = basis;
  m.entries.assign(N, std::vector<long long>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m.entries[i][j] = a[i][j];
  return m;
}

std::vector<std::vector<long long>> matmul(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b) {
  size_t n = a.size();
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long v = a[i][k];
      if (!v) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += v * b[k][j];
    }
  return out;
}

bool is_identity(const std::vector<std::vector<long long>>& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// rank of an integer matrix over Q by fraction-free elimination
int rank_of(std::vector<std::vector<Int>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Int f1 = m[r][c], f2 = m[i][c];
      Int g = boost::multiprecision::gcd(f1, f2);
      f1 /= g;
      f2 /= g;
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * f1 - m[r][j] * f2;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

long long GaloisMatrix::trace() const {
  long long t = 0;
  for (int i = 0; i < dim; ++i) t += entries[i][i];
  return t;
}

std::string GaloisMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (j) os << " ";
      os << entries[i][j];
    }
    os << "\n";
  }
  return os.str();
}

MatrixSet load_matrices(int dim) {
  MatrixSet out;
  if (dim == 8) {
    out = {from_array<8>(kSigmaI8, kLabels[0], "S1-lines"),
           from_array<8>(kSigma28, kLabels[1], "S1-lines"),
           from_array<8>(kSigmaPlus8, kLabels[2], "S1-lines"),
           from_array<8>(kSigmaMinus8, kLabels[3], "S1-lines")};
    for (int i = 0; i < 4; ++i) {
      long long sum = 0;
      for (auto& row : out[i].entries)
        sum = std::accumulate(row.begin(), row.end(), sum);
      if (sum != kChecksum8[i])
        raise(ErrorCode::Internal, "matrix checksum mismatch (dim 8)");
    }
  } else if (dim == 19) {
    out = {from_array<19>(kSigmaI19, kLabels[0], "dwork-B"),
           from_array<19>(kSigma219, kLabels[1], "dwork-B"),
           from_array<19>(kSigmaPlus19, kLabels[2], "dwork-B"),
           from_array<19>(kSigmaMinus19, kLabels[3], "dwork-B")};
    for (int i = 0; i < 4; ++i) {
      long long sum = 0;
      for (auto& row : out[i].entries)
        sum = std::accumulate(row.begin(), row.end(), sum);
      if (sum != kChecksum19[i])
        raise(ErrorCode::Internal, "matrix checksum mismatch (dim 19)");
    }
  } else {
    raise(ErrorCode::UnsupportedInput, "dim must be 8 or 19");
  }
  return out;
}

CheckResult verify_group_relations(const MatrixSet& mats) {
  for (const auto& m : mats) {
    if (!is_identity(matmul(m.entries, m.entries)))
      return {false, m.label + "^2 != id"};
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (matmul(mats[i].entries, mats[j].entries) !=
          matmul(mats[j].entries, mats[i].entries))
        return {false, mats[i].label + " and " + mats[j].label +
                           " do not commute"};
    }
  return {true, ""};
}

namespace {

CheckResult isometry_check(const MatrixSet& mats, bool transpose) {
  if (mats[0].dim != 8) raise(ErrorCode::UnsupportedInput, "dim 8 only");
  auto G = [](int i) { return i == 7 ? 1 : -1; };
  const long long k[8] = {-1, -1, -1, -1, -1, -1, -1, 3};
  // k.G.k = 2 and k.G.e_i = 1 for i < 8
  long long kk = 0;
  for (int i = 0; i < 8; ++i) kk += k[i] * G(i) * k[i];
  if (kk != 2) return {false, "k.G.k != 2"};
  for (int i = 0; i < 7; ++i)
    if (k[i] * G(i) != 1) return {false, "k.G.e_i != 1"};
  for (const auto& m : mats) {
    auto at = [&](int i, int j) {
      return transpose ? m.entries[j][i] : m.entries[i][j];
    };
    // M^T G M = G
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        long long v = 0;
        for (int l = 0; l < 8; ++l) v += at(l, i) * G(l) * at(l, j);
        if (v != (i == j ? G(i) : 0))
          return {false, m.label + " is not a G-isometry"};
      }
    // M k = k
    for (int i = 0; i < 8; ++i) {
      long long v = 0;
      for (int j = 0; j < 8; ++j) v += at(i, j) * k[j];
      if (v != k[i])
        return {false, m.label + " does not fix the anticanonical vector"};
    }
  }
  return {true, ""};
}

}  // namespace

CheckResult verify_isometry_8(const MatrixSet& mats) {
  auto r = isometry_check(mats, false);
  if (!r.passed)
    raise(ErrorCode::IsometryViolated, r.detail);
  return r;
}

ConventionReport matrix_convention() {
  auto mats = load_matrices(8);
  ConventionReport rep;
  rep.column_passes = isometry_check(mats, false).passed;
  rep.transposed_passes = isometry_check(mats, true).passed;
  rep.winning = rep.column_passes ? "column" : "row";
  return rep;
}

int EigenReport::multiplicity_of(unsigned mask) const {
  for (const auto& e : entries)
    if (e.sign_vector.mask() == mask) return e.multiplicity;
  raise(ErrorCode::Internal, "sign vector missing from report");
}

EigenReport joint_eigenspaces(const MatrixSet& mats) {
  auto rel = verify_group_relations(mats);
  if (!rel.passed) raise(ErrorCode::RelationViolated, rel.detail);
  int n = mats[0].dim;
  EigenReport rep;
  rep.dim = n;
  int total = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    // stack (M_j - eps_j I) and compute the kernel dimension
    std::vector<std::vector<Int>> stack;
    for (int j = 0; j < 4; ++j) {
      int eps = (mask >> j) & 1 ? -1 : 1;
      for (int i = 0; i < n; ++i) {
        std::vector<Int> row(n);
        for (int c = 0; c < n; ++c) {
          long long v = mats[j].entries[i][c];
          row[c] = Int(v - (i == c ? eps : 0));
        }
        stack.push_back(std::move(row));
      }
    }
    int mult = n - rank_of(std::move(stack));
    rep.entries.push_back({alg::SignVector::from_mask(mask), mult});
    total += mult;
  }
  if (total != n)
    raise(ErrorCode::IncompleteDecomposition,
          "joint eigenspace multiplicities sum to " + std::to_string(total));
  return rep;
}

SquareClass signvector_to_squareclass(const Rat& lambda,
                                      const alg::SignVector& eps) {
  // validated against the default field construction
  auto F = alg::MultiQuadField::make(lambda);
  Rat prod(1);
  unsigned mask = eps.mask();
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) prod *= F->generators()[i];
  if (mask == 0) return SquareClass{Int(1)};
  return squarefree_part(prod);
}

FrobeniusResult frobenius_matrix(const Rat& lambda, uint64_t p, int dim) {
  Rat l2 = lambda * lambda;
  const Rat args[4] = {Rat(-1), Rat(2), l2 + 1, l2 - 1};
  FrobeniusResult res;
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i) {
    Int arg = num(args[i]) * den(args[i]);  // same square class, integral
    int chi = ff::legendre(arg, p);
    if (chi == 0)
      raise(ErrorCode::RamifiedPrime,
            "legendre symbol of " + dworkgal::to_string(args[i]) +
                " vanishes at p = " + std::to_string(p));
    if (chi < 0) mask |= 1u << i;
  }
  res.sign_vector = alg::SignVector::from_mask(mask);
  auto mats = load_matrices(dim);
  std::vector<std::vector<long long>> acc(dim,
                                          std::vector<long long>(dim, 0));
  for (int i = 0; i < dim; ++i) acc[i][i] = 1;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) acc = matmul(acc, mats[i].entries);
  res.matrix.dim = dim;
  res.matrix.label = "frobenius";
  res.matrix.basis = mats[0].basis;
  res.matrix.entries = acc;
  res.trace = res.matrix.trace();
  return res;
}

CrosscheckReport crosscheck_trace(const Rat& lambda, uint64_t p, int k,
                                  int jobs) {
  CrosscheckReport rep;
  rep.p = p;
  rep.k = k;
  // quadratic characters over F_{p^k} compose as chi^k: even k gives the
  // identity matrix (all symbols squared), odd k the k = 1 matrix.
  if (k % 2 == 0) {
    rep.matrix_trace = 19;
  } else {
    rep.matrix_trace = frobenius_matrix(lambda, p, 19).trace;
  }
  auto F = ff::FieldSpec::make(p, k);
  rep.t_ns = cnt::t_ns_predicted(lambda, *F);
  auto x = cnt::count_x(lambda, *F, jobs).n_points;
  auto y = cnt::count_y(lambda, *F, jobs).n_points;
  long long q = static_cast<long long>(F->q());
  long long diff = static_cast<long long>(x) - static_cast<long long>(y);
  if (diff % q != 0) {
    rep.count_side = 0;
    rep.passed = false;
    return rep;
  }
  rep.count_side = diff / q + 19;
  rep.passed =
      rep.matrix_trace == rep.t_ns && rep.count_side == rep.matrix_trace;
  return rep;
}

}  // namespace dworkgal::gal

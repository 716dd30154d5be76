// Acceptance suite: one criterion per invocation (argv[1] in 1..10), each
// printing a single PASS/FAIL line plus any diagnostics. Run through ctest
// as acceptance_1 .. acceptance_10.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dworkgal/counting.hpp"
#include "dworkgal/delpezzo.hpp"
#include "dworkgal/galoisrep.hpp"
#include "dworkgal/reptheory.hpp"

using namespace dworkgal;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "    mismatch: " << what << "\n";
  }
}

const std::vector<Rat> kLambdas{Rat(2), Rat(3), Rat(5), Rat(1, 2), Rat(3, 2)};

std::vector<uint64_t> primes_below(uint64_t bound) {
  std::vector<uint64_t> out;
  for (uint64_t p = 3; p < bound; p += 2)
    if (ff::is_prime(p)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------

void criterion_1() {
  const std::vector<int> sizes{1, 3, 12, 12, 3, 3, 6, 32, 12, 12};
  const std::vector<int> chi{21, 5, -7, -3, 5, 5, 5, 3, -3, -3};
  const auto& cls = rep::conjugacy_classes();
  expect(cls.classes.size() == 10, "ten classes");
  for (int i = 0; i < 10; ++i)
    expect(cls.classes[i].size() == sizes[i],
           "class size at column " + std::to_string(i + 1));
  expect(rep::chi_pr_row() == chi, "chi_pr row");
}

void criterion_2() {
  const std::map<std::string, std::vector<long long>> table2{
      {"rho1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"rho2", {1, 1, -1, -1, 1, 1, 1, 1, -1, -1}},
      {"rho3", {2, 2, 0, 0, 2, 2, 2, -1, 0, 0}},
      {"rho4", {3, 3, 1, 1, -1, -1, -1, 0, -1, -1}},
      {"rho5", {3, 3, -1, -1, -1, -1, -1, 0, 1, 1}},
      {"phi1", {3, -1, 1, -1, 3, -1, -1, 0, 1, -1}},
      {"phi2", {3, -1, -1, 1, -1, 3, -1, 0, 1, -1}},
      {"phi3", {3, -1, 1, -1, -1, 3, -1, 0, -1, 1}},
      {"phi4", {3, -1, -1, 1, 3, -1, -1, 0, -1, 1}},
      {"phi5", {6, -2, 0, 0, -2, -2, 2, 0, 0, 0}},
  };
  const auto& t = rep::character_table_h();
  expect(t.rows.size() == 10, "ten irreducibles");
  for (const auto& [name, row] : table2) {
    auto got = rep::h_character(name);
    for (int c = 0; c < 10; ++c) {
      expect(got[c].is_integer() && got[c].a == row[c],
             name + " at column " + std::to_string(c + 1));
    }
  }
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      rep::Cyc3 acc;
      for (int c = 0; c < 10; ++c)
        acc = acc + t.rows[i][c] * t.rows[j][c].conj() *
                        rep::Cyc3(Rat(t.class_sizes[c]));
      expect(acc == rep::Cyc3(Rat(i == j ? 96 : 0)), "orthogonality");
    }
}

void criterion_3() {
  auto m = rep::decompose_chi_pr();
  const std::vector<long long> want{0, 4, 1, 0, 1, 0, 1, 0, 1, 1};
  for (int i = 0; i < 10; ++i)
    expect(m[i] == want[i],
           "multiplicity of " + rep::character_table_h().names[i]);
}

void criterion_4() {
  for (int dim : {8, 19}) {
    auto mats = gal::load_matrices(dim);
    auto rel = gal::verify_group_relations(mats);
    expect(rel.passed, "relations at dim " + std::to_string(dim) + ": " +
                           rel.detail);
  }
  auto m8 = gal::load_matrices(8);
  auto iso = gal::verify_isometry_8(m8);
  expect(iso.passed, "isometry and anticanonical fixing: " + iso.detail);
  auto conv = gal::matrix_convention();
  expect(conv.winning == "column" && conv.column_passes,
         "column action convention");
}

void criterion_5() {
  auto rep8 = gal::joint_eigenspaces(gal::load_matrices(8));
  auto rep19 = gal::joint_eigenspaces(gal::load_matrices(19));
  // sign vectors keyed by the square class they cut out (checked at two
  // generic lambda values)
  struct Want {
    unsigned mask;
    int m8, m19;
    const char* cls;
  };
  const Want table[] = {
      {0b0000, 1, 1, "1"},
      {0b1001, 1, 3, "-(l^2-1)"},
      {0b0101, 1, 3, "-(l^2+1)"},
      {0b1111, 2, 6, "-2(l^4-1)"},
      {0b1110, 3, 6, "2(l^4-1)"},
  };
  for (const auto& w : table) {
    expect(rep8.multiplicity_of(w.mask) == w.m8,
           std::string("dim 8 multiplicity on ") + w.cls);
    expect(rep19.multiplicity_of(w.mask) == w.m19,
           std::string("dim 19 multiplicity on ") + w.cls);
  }
  for (unsigned m = 0; m < 16; ++m) {
    bool named = false;
    for (const auto& w : table) named |= w.mask == m;
    if (!named) {
      expect(rep19.multiplicity_of(m) == 0, "extra eigenvector");
      expect(rep8.multiplicity_of(m) == 0, "extra eigenvector");
    }
  }
  for (const Rat& lam : {Rat(2), Rat(5)}) {
    Rat l2 = lam * lam, l4 = l2 * l2;
    const Rat vals[] = {Rat(1), -(l2 - 1), -(l2 + 1), -2 * (l4 - 1),
                        2 * (l4 - 1)};
    for (int i = 0; i < 5; ++i) {
      auto cls = gal::signvector_to_squareclass(
          lam, alg::SignVector::from_mask(table[i].mask));
      expect(cls.value == squarefree_part(vals[i]).value,
             "square class of sign vector at lambda " + to_string(lam));
    }
  }
  // trace spot checks against the character sums from the report
  auto trace_sum = [](const gal::EigenReport& r, unsigned prod) {
    long long t = 0;
    for (const auto& e : r.entries)
      t += (__builtin_popcount(e.sign_vector.mask() & prod) % 2 ? -1 : 1) *
           e.multiplicity;
    return t;
  };
  expect(gal::load_matrices(19)[0].trace() == -5, "tr M(sigma_I) dim 19");
  expect(trace_sum(rep19, 0b0001) == -5, "character sum for sigma_I dim 19");
  expect(gal::load_matrices(8)[3].trace() == -4, "tr M(sigma_minus) dim 8");
  expect(trace_sum(rep8, 0b1000) == -4, "character sum for sigma_minus dim 8");
}

void criterion_6() {
  auto rep19 = gal::joint_eigenspaces(gal::load_matrices(19));
  int distinct_nontrivial = 0;
  bool some_ge_6 = false;
  for (const auto& e : rep19.entries) {
    if (e.multiplicity == 0 || e.sign_vector.mask() == 0) continue;
    ++distinct_nontrivial;
    expect(e.multiplicity % 3 == 0, "n_i divisible by 3");
    some_ge_6 |= e.multiplicity >= 6;
  }
  expect(some_ge_6, "some n_i >= 6");
  expect(distinct_nontrivial <= 5, "r <= 5");
}

void criterion_7() {
  int pairs = 0;
  std::vector<std::string> exceptions;
  for (const Rat& lam : kLambdas) {
    for (uint64_t p : primes_below(100)) {
      if (!cnt::admissible(lam, p).ok) continue;
      auto F = ff::FieldSpec::make(p, 1);
      auto tr = cnt::verify_trace_identity(lam, *F);
      auto fr = gal::frobenius_matrix(lam, p);
      bool ok = tr.passed && fr.trace == tr.t_ns_predicted;
      if (!ok) {
        // re-run to confirm reproducibility before reporting
        auto tr2 = cnt::verify_trace_identity(lam, *F);
        std::ostringstream os;
        os << "candidate rank-20 exception at (lambda=" << to_string(lam)
           << ", p=" << p << "), reproducible="
           << (tr2.passed == tr.passed && tr2.x_count == tr.x_count);
        exceptions.push_back(os.str());
      }
      expect(tr.weil_bound_ok, "Weil bound on the residual");
      ++pairs;
    }
  }
  for (const auto& e : exceptions) {
    ++failures;
    std::cout << "    " << e << "\n";
  }
  std::cout << "    checked " << pairs << " (lambda, p) pairs\n";
  expect(pairs >= 100, "enough admissible pairs");
}

void criterion_8() {
  int checked = 0;
  for (const Rat& lam : kLambdas) {
    // k = 1 below 100, k = 2 below 30; singular reductions included
    for (int k : {1, 2}) {
      for (uint64_t p : primes_below(k == 1 ? 100 : 30)) {
        if (den(lam) % Int(p) == 0) continue;
        if (ff::reduce_rational(lam, p) == 0) continue;  // mirror degenerates
        bool wan = cnt::verify_wan(lam, p, k);
        expect(wan, "Wan congruence at (lambda=" + to_string(lam) +
                        ", p=" + std::to_string(p) + ", k=" +
                        std::to_string(k) + ")");
        if (p > 3) {
          bool m3 = cnt::verify_mod3q(lam, p, k);
          expect(m3, "mod-3q congruence at (lambda=" + to_string(lam) +
                         ", p=" + std::to_string(p) + ", k=" +
                         std::to_string(k) + ")");
        }
        ++checked;
      }
    }
  }
  std::cout << "    checked " << checked << " (lambda, p, k) triples\n";
}

void criterion_9() {
  int checked = 0;
  for (const Rat& lam : kLambdas) {
    for (uint64_t p : primes_below(200)) {
      if (den(lam) % Int(p) == 0) continue;
      if (ff::reduce_rational(lam, p) == 0) continue;
      Rat l2 = lam * lam;
      if (ff::reduce_rational(l2 * l2, p) == 1) continue;  // singular curve pair
      auto F = ff::FieldSpec::make(p, 1);
      auto rep = cnt::curve_counts(lam, *F);
      expect(rep.n_x == rep.n_y, "root counts agree at (lambda=" +
                                     to_string(lam) + ", p=" +
                                     std::to_string(p) + ")");
      expect(rep.bijection_ok, "u -> u^4 bijection at (lambda=" +
                                   to_string(lam) + ", p=" +
                                   std::to_string(p) + ")");
      ++checked;
    }
  }
  auto F7 = ff::FieldSpec::make(7, 1);
  auto worked = cnt::curve_counts(Rat(2), *F7);
  expect(worked.n_x == 1 && worked.roots_x == std::vector<uint64_t>{5},
         "worked instance root u = 5");
  expect(worked.n_y == 1 && worked.roots_y == std::vector<uint64_t>{2},
         "worked instance root s = 2");
  expect(worked.bijection_ok, "worked instance bijection");
  std::cout << "    checked " << checked << " (lambda, p) pairs\n";
}

void criterion_10() {
  for (const Rat& lam : {Rat(2), Rat(3)}) {
    auto S = dp::surface_model(0, 1, 4, lam);
    auto lines = dp::build_lines(S);
    expect(lines.size() == 56, "56 lines at lambda " + to_string(lam));
    for (const auto& l : lines)
      expect(dp::verify_line(S, l).passed,
             "membership at lambda " + to_string(lam));
    std::vector<std::vector<int>> perms;
    for (unsigned mask = 0; mask < 16; ++mask)
      perms.push_back(
          dp::galois_permutation(S, lines, alg::SignVector::from_mask(mask)));
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> out(a.size());
      for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
      return out;
    };
    for (unsigned m1 = 0; m1 < 16; ++m1) {
      auto sq = compose(perms[m1], perms[m1]);
      for (size_t i = 0; i < sq.size(); ++i)
        expect(sq[i] == static_cast<int>(i), "involution");
      for (unsigned m2 = 0; m2 < m1; ++m2)
        expect(compose(perms[m1], perms[m2]) ==
                   compose(perms[m2], perms[m1]),
               "permutations commute");
    }
  }
  // lambda = 0 configuration
  auto M = dp::fermat_model();
  auto v = dp::fermat_basis_lines(M);
  long long gram[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      gram[i][j] = i == j ? -1 : dp::intersection_number(M, v[i], v[j]);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) expect(gram[i][j] == 0, "v_i disjoint from v_j");
  auto dot_v8 = [&](int i) { return gram[5][i] + gram[6][i] + gram[7][i]; };
  for (int i = 0; i < 7; ++i)
    expect(3 * dot_v8(i) - [&] {
             long long s = 0;
             for (int j = 0; j < 7; ++j) s += gram[j][i];
             return s;
           }() == 1,
           "-K . v_i = 1");
  long long v8sq = 0;
  for (int a : {5, 6, 7})
    for (int b : {5, 6, 7}) v8sq += gram[a][b];
  expect(v8sq == 1, "v8^2 = 1");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..10>\n";
    return 2;
  }
  int n = std::atoi(argv[1]);
  const char* names[10] = {
      "character table of chi_pr (class sizes and values)",
      "table of irreducibles of H with exact orthogonality",
      "canonical decomposition multiplicities of chi_pr",
      "matrix involutions, commutation, isometry and -K fixing",
      "joint eigenspace multiplicities and trace spot checks",
      "divisibility, >= 6 and r <= 5 constraints on the exponents",
      "point-count trace identity across lambda set, p < 100",
      "Wan and mod-3q congruences (k = 1, 2)",
      "curve root-set bijection, p < 200",
      "56 lines, membership, Galois involutions, lambda = 0 basis",
  };
  if (n < 1 || n > 10) {
    std::cerr << "criterion out of range\n";
    return 2;
  }
  auto start = std::chrono::steady_clock::now();
  try {
    switch (n) {
      case 1: criterion_1(); break;
      case 2: criterion_2(); break;
      case 3: criterion_3(); break;
      case 4: criterion_4(); break;
      case 5: criterion_5(); break;
      case 6: criterion_6(); break;
      case 7: criterion_7(); break;
      case 8: criterion_8(); break;
      case 9: criterion_9(); break;
      case 10: criterion_10(); break;
    }
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "    exception: " << e.what() << "\n";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " criterion " << n << ": "
            << names[n - 1] << " (" << ms << " ms)\n";
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dworkgal/rational.hpp"

namespace dworkgal::rep {

// Element of H = S4 x| (Z/2)^2: a coordinate permutation together with an
// even-weight sign vector taken modulo the global flip. The canonical
// representative clears the sign bit of X0. Acts by X_i -> (-1)^{s_i} X_{p(i)}.
struct GroupElement {
  std::array<uint8_t, 4> perm{0, 1, 2, 3};
  uint8_t signs = 0;  // even popcount, bit0 always cleared by canonicalize

  static GroupElement identity() { return {}; }

  void canonicalize();
  GroupElement compose(const GroupElement& other) const;  // this after other
  GroupElement inverse() const;
  int order() const;
  bool is_pure_permutation() const { return signs == 0; }

  bool operator==(const GroupElement& o) const {
    return perm == o.perm && signs == o.signs;
  }
  bool operator<(const GroupElement& o) const {
    return perm != o.perm ? perm < o.perm : signs < o.signs;
  }
  std::string to_string() const;
};

// Exact element of Q(zeta3), zeta3^2 = -1 - zeta3.
struct Cyc3 {
  Rat a, b;  // a + b zeta3

  Cyc3() : a(0), b(0) {}
  Cyc3(Rat ra) : a(std::move(ra)), b(0) {}
  Cyc3(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}
  static Cyc3 zeta() { return Cyc3(Rat(0), Rat(1)); }

  Cyc3 operator+(const Cyc3& o) const { return {a + o.a, b + o.b}; }
  Cyc3 operator-(const Cyc3& o) const { return {a - o.a, b - o.b}; }
  Cyc3 operator*(const Cyc3& o) const {
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
    return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
  }
  Cyc3 conj() const { return {a - b, -b}; }  // zeta -> zeta^2
  bool operator==(const Cyc3& o) const { return a == o.a && b == o.b; }
  bool is_rational() const { return b == 0; }
  bool is_integer() const { return b == 0 && den(a) == 1; }
  std::string to_string() const;
};

struct ConjClass {
  GroupElement representative;
  std::vector<GroupElement> members;
  int size() const { return static_cast<int>(members.size()); }
};

// The ten conjugacy classes of H in the column order of the paper's
// tables, fixed by explicit representatives (the tables' own labels repeat
// one name, so the two ambiguous columns are pinned structurally: column 6
// is the size-3 class of sign-twisted double transpositions, column 10 the
// sign-twisted four-cycles).
struct ConjClassSet {
  std::vector<ConjClass> classes;
  int class_index_of(const GroupElement& g) const;
};

std::vector<GroupElement> build_group();
const ConjClassSet& conjugacy_classes();

// chi_pr(h) = (1/4) sum_{a^4=1} (-3)^{m_a(h)} with m_a the eigenvalue
// multiplicity on the 4-dimensional coordinate representation; evaluated
// for both lifts of h, which must agree (RepresentativeAmbiguous).
int chi_pr(const GroupElement& h);

// Permutation-only shortcut (1/4) sum_{e|4} phi(e) (-3)^{m'_e(h)};
// SignedInput unless the sign part is trivial.
int chi_pr_perm(const GroupElement& h);

// chi_pr as a vector over the ten classes in table order.
std::vector<int> chi_pr_row();

struct CharacterTable {
  std::string group;
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<int> class_sizes;
  std::vector<std::vector<Cyc3>> rows;  // rows[i][c]: character i on class c
};

// The ten irreducibles of H: rho1..rho5 inflated from S4, phi1..phi5
// induced from the little group D8 x| (Z/2)^2 twisted by chi1.
const CharacterTable& character_table_h();

// Multiplicities <f, chi_i> of a class function against a table; raises
// NonIntegralMultiplicity when the input is not a genuine character.
std::vector<Int> decompose(const std::vector<Cyc3>& values,
                           const CharacterTable& table);

std::vector<Int> decompose_chi_pr();

enum class Subgroup { S3, A3, A4, D8 };

const char* subgroup_name(Subgroup s);
const CharacterTable& subgroup_table(Subgroup s);

// Restricts a character of H (given by its ten class values) to the
// standard copy of the subgroup and decomposes against its table.
std::vector<Int> restrict_and_decompose(const std::vector<Cyc3>& h_values,
                                        Subgroup s);

// Row of an irreducible of H by name ("rho2", "phi5", ...).
std::vector<Cyc3> h_character(const std::string& name);

// Fingerprint data the CLI prints alongside the table.
struct ClassFingerprint {
  int size;
  int chi_pr;
  int order;
  std::array<int, 4> cycle_type;  // sorted descending, zero padded
  bool has_pure_representative;
};
std::vector<ClassFingerprint> class_fingerprints();

}  // namespace dworkgal::rep

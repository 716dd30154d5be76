#include "dworkgal/reptheory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dworkgal/errors.hpp"

namespace dworkgal::rep {

namespace {

int popcount4(uint8_t m) { return __builtin_popcount(m & 0xF); }

GroupElement from_cycles(std::initializer_list<std::initializer_list<int>> cyc,
                         uint8_t signs = 0) {
  GroupElement g;
  for (auto c : cyc) {
    std::vector<int> v(c);
    for (size_t i = 0; i < v.size(); ++i)
      g.perm[v[i]] = static_cast<uint8_t>(v[(i + 1) % v.size()]);
  }
  g.signs = signs;
  g.canonicalize();
  return g;
}

// cycle decomposition with per-cycle sign products, for a chosen lift
std::vector<std::pair<int, int>> signed_cycles(const GroupElement& g,
                                               uint8_t signs) {
  std::vector<std::pair<int, int>> out;  // (length, sign exponent in {0,1})
  std::array<bool, 4> seen{};
  for (int s = 0; s < 4; ++s) {
    if (seen[s]) continue;
    int len = 0, sg = 0, cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      sg ^= (signs >> cur) & 1;
      cur = g.perm[cur];
      ++len;
    }
    out.push_back({len, sg});
  }
  return out;
}

std::array<int, 4> cycle_type_of(const GroupElement& g) {
  std::array<int, 4> t{0, 0, 0, 0};
  std::vector<int> lens;
  for (auto& [len, sg] : signed_cycles(g, 0)) {
    (void)sg;
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  for (size_t i = 0; i < lens.size(); ++i) t[i] = lens[i];
  return t;
}

int chi_pr_of_lift(const GroupElement& g, uint8_t signs) {
  // m_alpha for alpha = i^t: a cycle of length len and sign (-1)^sg
  // contributes alpha iff alpha^len = (-1)^sg, i.e. t len = 2 sg mod 4.
  std::array<int, 4> mult{0, 0, 0, 0};
  for (auto& [len, sg] : signed_cycles(g, signs)) {
    for (int t = 0; t < 4; ++t)
      if ((t * len) % 4 == (2 * sg) % 4) ++mult[t];
  }
  long long total = 0;
  for (int t = 0; t < 4; ++t) {
    long long pw = 1;
    for (int i = 0; i < mult[t]; ++i) pw *= -3;
    total += pw;
  }
  if (total % 4 != 0)
    raise(ErrorCode::Internal, "chi_pr sum not divisible by 4");
  return static_cast<int>(total / 4);
}

}  // namespace

void GroupElement::canonicalize() {
  signs &= 0xF;
  if (popcount4(signs) % 2 != 0)
    raise(ErrorCode::Internal, "odd sign vector in H");
  if (signs & 1) signs ^= 0xF;
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  // (this * other)(X)_i = (-1)^{s_i} (other X)_{p(i)}
  GroupElement out;
  out.signs = 0;
  for (int i = 0; i < 4; ++i) {
    out.perm[i] = other.perm[perm[i]];
    uint8_t bit = ((signs >> i) & 1) ^ ((other.signs >> perm[i]) & 1);
    out.signs |= bit << i;
  }
  out.canonicalize();
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out;
  out.signs = 0;
  for (int i = 0; i < 4; ++i) out.perm[perm[i]] = static_cast<uint8_t>(i);
  for (int i = 0; i < 4; ++i) {
    uint8_t bit = (signs >> out.perm[i]) & 1;
    out.signs |= bit << i;
  }
  out.canonicalize();
  return out;
}

int GroupElement::order() const {
  GroupElement e = identity(), x = *this;
  int n = 1;
  while (!(x == e)) {
    x = x.compose(*this);
    ++n;
    if (n > 96) raise(ErrorCode::Internal, "order overflow");
  }
  return n;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  std::array<bool, 4> seen{};
  bool wrote = false;
  for (int s = 0; s < 4; ++s) {
    if (seen[s] || perm[s] == s) {
      seen[s] = true;
      continue;
    }
    os << "(";
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      os << cur;
      cur = perm[cur];
    }
    os << ")";
    wrote = true;
  }
  if (!wrote) os << "id";
  if (signs) {
    os << "*s[";
    for (int i = 0; i < 4; ++i)
      if (signs & (1 << i)) os << i;
    os << "]";
  }
  return os.str();
}

std::string Cyc3::to_string() const {
  if (b == 0) return dworkgal::to_string(a);
  std::string out = dworkgal::to_string(a);
  out += (b > 0 ? "+" : "-");
  Rat ab = b > 0 ? b : -b;
  out += dworkgal::to_string(ab) + "*z3";
  return out;
}

std::vector<GroupElement> build_group() {
  std::vector<GroupElement> out;
  std::array<uint8_t, 4> p{0, 1, 2, 3};
  do {
    for (uint8_t s : {0x0, 0x6, 0xA, 0xC}) {  // canonical even masks, bit0 clear
      GroupElement g;
      g.perm = p;
      g.signs = s;
      g.canonicalize();
      out.push_back(g);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 96) raise(ErrorCode::Internal, "H must have 96 elements");
  return out;
}

int ConjClassSet::class_index_of(const GroupElement& g) const {
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& m = classes[i].members;
    if (std::binary_search(m.begin(), m.end(), g)) return static_cast<int>(i);
  }
  raise(ErrorCode::Internal, "element not in any class");
}

namespace {

ConjClassSet compute_classes() {
  auto H = build_group();
  std::vector<std::vector<GroupElement>> raw;
  std::set<GroupElement> seen;
  for (const auto& x : H) {
    if (seen.count(x)) continue;
    std::set<GroupElement> cls;
    for (const auto& g : H) cls.insert(g.compose(x).compose(g.inverse()));
    raw.emplace_back(cls.begin(), cls.end());
    seen.insert(cls.begin(), cls.end());
  }
  if (raw.size() != 10) raise(ErrorCode::Internal, "H must have 10 classes");

  // Explicit representatives in the paper's column order. Columns 6 and 10
  // carry duplicated labels in the paper's tables; they are pinned here as
  // the size-3 class of sign-twisted double transpositions and the
  // sign-twisted 4-cycle class.
  const GroupElement e1 = from_cycles({}, 0b1100);
  const GroupElement e2 = from_cycles({}, 0b1010);
  std::vector<GroupElement> reps = {
      GroupElement::identity(),
      e1,
      from_cycles({{0, 1}}),
      e2.compose(from_cycles({{0, 1}})),
      from_cycles({{0, 1}, {2, 3}}),
      e1.compose(from_cycles({{0, 1}, {2, 3}})),
      e2.compose(from_cycles({{0, 1}, {2, 3}})),
      from_cycles({{0, 1, 2}}),
      from_cycles({{0, 1, 2, 3}}),
      e1.compose(from_cycles({{0, 1, 2, 3}})),
  };
  ConjClassSet out;
  std::set<size_t> used;
  for (const auto& r : reps) {
    bool found = false;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (std::binary_search(raw[i].begin(), raw[i].end(), r)) {
        if (used.count(i))
          raise(ErrorCode::Internal, "duplicate class representative");
        used.insert(i);
        out.classes.push_back({r, raw[i]});
        found = true;
        break;
      }
    }
    if (!found) raise(ErrorCode::Internal, "class representative missing");
  }
  static const int expected_sizes[10] = {1, 3, 12, 12, 3, 3, 6, 32, 12, 12};
  int total = 0;
  for (int i = 0; i < 10; ++i) {
    if (out.classes[i].size() != expected_sizes[i])
      raise(ErrorCode::Internal, "unexpected class size layout");
    total += out.classes[i].size();
  }
  if (total != 96) raise(ErrorCode::Internal, "class equation violated");
  return out;
}

}  // namespace

const ConjClassSet& conjugacy_classes() {
  static const ConjClassSet set = compute_classes();
  return set;
}

int chi_pr(const GroupElement& h) {
  int v1 = chi_pr_of_lift(h, h.signs);
  int v2 = chi_pr_of_lift(h, static_cast<uint8_t>(h.signs ^ 0xF));
  if (v1 != v2)
    raise(ErrorCode::RepresentativeAmbiguous,
          "lifts disagree on " + h.to_string());
  return v1;
}

int chi_pr_perm(const GroupElement& h) {
  if (h.signs != 0)
    raise(ErrorCode::SignedInput, "chi_pr_perm needs a pure permutation");
  // (1/4) sum_{e | 4} phi(e) (-3)^{m'_e}, m'_e = #cycles of length
  // divisible by e
  auto cyc = signed_cycles(h, 0);
  auto count_div = [&](int e) {
    int m = 0;
    for (auto& [len, sg] : cyc) {
      (void)sg;
      if (len % e == 0) ++m;
    }
    return m;
  };
  long long total = 0;
  for (auto [e, phi] : {std::pair<int, int>{1, 1}, {2, 1}, {4, 2}}) {
    long long pw = 1;
    for (int i = 0; i < count_div(e); ++i) pw *= -3;
    total += phi * pw;
  }
  if (total % 4 != 0) raise(ErrorCode::Internal, "totient sum not divisible");
  return static_cast<int>(total / 4);
}

std::vector<int> chi_pr_row() {
  std::vector<int> out;
  for (const auto& c : conjugacy_classes().classes)
    out.push_back(chi_pr(c.representative));
  return out;
}

namespace {

// --- fixed small tables -------------------------------------------------

// S4 classes: [id, (ab)(cd), (ab), (abcd), (abc)]
int s4_class_of(const GroupElement& g) {
  auto t = cycle_type_of(g);
  if (t == std::array<int, 4>{1, 1, 1, 1}) return 0;
  if (t == std::array<int, 4>{2, 2, 0, 0}) return 1;
  if (t == std::array<int, 4>{2, 1, 1, 0}) return 2;
  if (t == std::array<int, 4>{4, 0, 0, 0}) return 3;
  return 4;
}

const int kS4Table[5][5] = {
    {1, 1, 1, 1, 1},    // trivial
    {1, 1, -1, -1, 1},  // sign
    {2, 2, 0, 0, -1},   // 2-dim
    {3, -1, 1, -1, 0},  // standard
    {3, -1, -1, 1, 0},  // standard x sign
};

// K1 = stabilizer of the pairing {{0,1},{2,3}} in S4, a D8 with
// u a 4-cycle swapping the blocks and v = (01).
// Classes: [id, u^2, {u,u^3}, {v,u^2 v}, {uv,u^3 v}].
bool in_k1(const std::array<uint8_t, 4>& p) {
  auto is_block = [](uint8_t a, uint8_t b, uint8_t x, uint8_t y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  bool fix = is_block(p[0], p[1], 0, 1) && is_block(p[2], p[3], 2, 3);
  bool swap = is_block(p[0], p[1], 2, 3) && is_block(p[2], p[3], 0, 1);
  return fix || swap;
}

int d8_class_of(const GroupElement& g) {
  auto t = cycle_type_of(g);
  if (t == std::array<int, 4>{1, 1, 1, 1}) return 0;
  if (t == std::array<int, 4>{4, 0, 0, 0}) return 2;
  if (t == std::array<int, 4>{2, 1, 1, 0}) return 3;
  // double transpositions: u^2 = (01)(23) is central and alone in its
  // class; (02)(13) and (03)(12) form {uv, u^3 v}
  if (g.perm == std::array<uint8_t, 4>{1, 0, 3, 2}) return 1;
  return 4;
}

const int kD8Table[5][5] = {
    {1, 1, 1, 1, 1},
    {1, 1, 1, -1, -1},  // u-kernel
    {1, 1, -1, 1, -1},  // (u^2, v)-kernel
    {1, 1, -1, -1, 1},  // (u^2, uv)-kernel
    {2, -2, 0, 0, 0},   // 2-dim
};

// chi1 on N = {1, e1, e2, e3}: kernel {1, e1} with e1 = s[2,3].
int chi1_of_sign_part(uint8_t s) { return (s == 0 || s == 0b1100) ? 1 : -1; }

// canonical sign mask of x * (perm part)^-1
uint8_t sign_part_of(const GroupElement& x) {
  GroupElement p;
  p.perm = x.perm;
  GroupElement n = x.compose(p.inverse());
  if (n.perm != std::array<uint8_t, 4>{0, 1, 2, 3})
    raise(ErrorCode::Internal, "sign part extraction failed");
  return n.signs;
}

CharacterTable build_table_h() {
  const auto& cls = conjugacy_classes();
  const auto H = build_group();
  CharacterTable t;
  t.group = "H";
  t.names = {"rho1", "rho2", "rho3", "rho4", "rho5",
             "phi1", "phi2", "phi3", "phi4", "phi5"};
  for (const auto& c : cls.classes) t.class_sizes.push_back(c.size());

  for (int i = 0; i < 5; ++i) {
    std::vector<Cyc3> row;
    for (const auto& c : cls.classes)
      row.push_back(Cyc3(Rat(kS4Table[i][s4_class_of(c.representative)])));
    t.rows.push_back(row);
    t.degrees.push_back(kS4Table[i][0]);
  }
  // induced rows: theta(x) = (1/32) sum_{g in H, g^-1 x g in K1 N}
  //                          phi(perm part) chi1(sign part)
  for (int i = 0; i < 5; ++i) {
    std::vector<Cyc3> row;
    for (const auto& c : cls.classes) {
      long long total = 0;
      for (const auto& g : H) {
        GroupElement y = g.inverse().compose(c.representative).compose(g);
        if (!in_k1(y.perm)) continue;
        total +=
            kD8Table[i][d8_class_of(y)] * chi1_of_sign_part(sign_part_of(y));
      }
      if (total % 32 != 0)
        raise(ErrorCode::Internal, "induced character not integral");
      row.push_back(Cyc3(Rat(total / 32)));
    }
    t.rows.push_back(row);
    t.degrees.push_back(3 * kD8Table[i][0]);
  }

  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      Cyc3 acc;
      for (int c = 0; c < 10; ++c)
        acc = acc +
              t.rows[i][c] * t.rows[j][c].conj() * Cyc3(Rat(t.class_sizes[c]));
      if (!(acc == Cyc3(Rat(i == j ? 96 : 0))))
        raise(ErrorCode::Internal, "character table fails orthogonality");
    }
  }
  return t;
}

}  // namespace

const CharacterTable& character_table_h() {
  static const CharacterTable t = build_table_h();
  return t;
}

std::vector<Int> decompose(const std::vector<Cyc3>& values,
                           const CharacterTable& table) {
  if (values.size() != table.class_sizes.size())
    raise(ErrorCode::UnsupportedInput, "class function has wrong length");
  long long order = 0;
  for (int s : table.class_sizes) order += s;
  std::vector<Int> out;
  for (const auto& row : table.rows) {
    Cyc3 acc;
    for (size_t c = 0; c < values.size(); ++c)
      acc = acc + values[c] * row[c].conj() * Cyc3(Rat(table.class_sizes[c]));
    Cyc3 m{acc.a / order, acc.b / order};
    if (!m.is_integer() || m.a < 0)
      raise(ErrorCode::NonIntegralMultiplicity,
            "multiplicity " + m.to_string() + " is not a nonnegative integer");
    out.push_back(num(m.a));
  }
  return out;
}

std::vector<Int> decompose_chi_pr() {
  std::vector<Cyc3> vals;
  for (int v : chi_pr_row()) vals.push_back(Cyc3(Rat(v)));
  return decompose(vals, character_table_h());
}

const char* subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::S3: return "S3";
    case Subgroup::A3: return "A3";
    case Subgroup::A4: return "A4";
    case Subgroup::D8: return "D8";
  }
  return "?";
}

namespace {

bool perm_even(const std::array<uint8_t, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

std::vector<GroupElement> subgroup_elements(Subgroup s) {
  std::vector<GroupElement> out;
  for (const auto& g : build_group()) {
    if (g.signs != 0) continue;
    switch (s) {
      case Subgroup::S3:
        if (g.perm[3] == 3) out.push_back(g);
        break;
      case Subgroup::A3:
        if (g.perm[3] == 3 && perm_even(g.perm)) out.push_back(g);
        break;
      case Subgroup::A4:
        if (perm_even(g.perm)) out.push_back(g);
        break;
      case Subgroup::D8:
        if (in_k1(g.perm)) out.push_back(g);
        break;
    }
  }
  return out;
}

// class index of a pure permutation inside the subgroup's table
int subgroup_class_of(Subgroup s, const GroupElement& g) {
  auto t = cycle_type_of(g);
  switch (s) {
    case Subgroup::S3:
      if (t == std::array<int, 4>{1, 1, 1, 1}) return 0;
      if (t == std::array<int, 4>{2, 1, 1, 0}) return 1;
      return 2;
    case Subgroup::A3:
      if (t == std::array<int, 4>{1, 1, 1, 1}) return 0;
      // 0 -> 1 -> 2 -> 0 is the omega class, its inverse the omega^2 class
      return g.perm[0] == 1 ? 1 : 2;
    case Subgroup::A4: {
      if (t == std::array<int, 4>{1, 1, 1, 1}) return 0;
      if (t == std::array<int, 4>{2, 2, 0, 0}) return 1;
      static const std::set<std::array<uint8_t, 4>> class2 = [] {
        std::set<std::array<uint8_t, 4>> out;
        GroupElement r = from_cycles({{0, 1, 2}});
        for (const auto& h : subgroup_elements(Subgroup::A4))
          out.insert(h.compose(r).compose(h.inverse()).perm);
        return out;
      }();
      return class2.count(g.perm) ? 2 : 3;
    }
    case Subgroup::D8:
      return d8_class_of(g);
  }
  raise(ErrorCode::Internal, "bad subgroup");
}

CharacterTable build_subgroup_table(Subgroup s) {
  CharacterTable t;
  t.group = subgroup_name(s);
  Cyc3 one(Rat(1)), w = Cyc3::zeta(), w2 = Cyc3::zeta().conj();
  switch (s) {
    case Subgroup::S3:
      t.names = {"triv", "sign", "std2"};
      t.degrees = {1, 1, 2};
      t.class_sizes = {1, 3, 2};
      t.rows = {{one, one, one},
                {one, Cyc3(Rat(-1)), one},
                {Cyc3(Rat(2)), Cyc3(Rat(0)), Cyc3(Rat(-1))}};
      break;
    case Subgroup::A3:
      t.names = {"triv", "omega", "omega2"};
      t.degrees = {1, 1, 1};
      t.class_sizes = {1, 1, 1};
      t.rows = {{one, one, one}, {one, w, w2}, {one, w2, w}};
      break;
    case Subgroup::A4:
      t.names = {"triv", "omega", "omega2", "std3"};
      t.degrees = {1, 1, 1, 3};
      t.class_sizes = {1, 3, 4, 4};
      t.rows = {{one, one, one, one},
                {one, one, w, w2},
                {one, one, w2, w},
                {Cyc3(Rat(3)), Cyc3(Rat(-1)), Cyc3(Rat(0)), Cyc3(Rat(0))}};
      break;
    case Subgroup::D8:
      t.names = {"phi1", "phi2", "phi3", "phi4", "phi5"};
      t.degrees = {1, 1, 1, 1, 2};
      t.class_sizes = {1, 1, 2, 2, 2};
      t.rows.resize(5);
      for (int i = 0; i < 5; ++i)
        for (int c = 0; c < 5; ++c)
          t.rows[i].push_back(Cyc3(Rat(kD8Table[i][c])));
      break;
  }
  return t;
}

}  // namespace

const CharacterTable& subgroup_table(Subgroup s) {
  static const CharacterTable s3 = build_subgroup_table(Subgroup::S3);
  static const CharacterTable a3 = build_subgroup_table(Subgroup::A3);
  static const CharacterTable a4 = build_subgroup_table(Subgroup::A4);
  static const CharacterTable d8 = build_subgroup_table(Subgroup::D8);
  switch (s) {
    case Subgroup::S3: return s3;
    case Subgroup::A3: return a3;
    case Subgroup::A4: return a4;
    case Subgroup::D8: return d8;
  }
  raise(ErrorCode::Internal, "bad subgroup");
}

std::vector<Int> restrict_and_decompose(const std::vector<Cyc3>& h_values,
                                        Subgroup s) {
  if (h_values.size() != 10)
    raise(ErrorCode::UnsupportedInput, "need ten class values");
  const auto& cls = conjugacy_classes();
  const auto& table = subgroup_table(s);
  auto elements = subgroup_elements(s);
  long long order = static_cast<long long>(elements.size());
  std::vector<Int> out;
  for (const auto& row : table.rows) {
    Cyc3 acc;
    for (const auto& g : elements) {
      const Cyc3& fv = h_values[cls.class_index_of(g)];
      acc = acc + fv * row[subgroup_class_of(s, g)].conj();
    }
    Cyc3 m{acc.a / order, acc.b / order};
    if (!m.is_integer() || m.a < 0)
      raise(ErrorCode::NonIntegralMultiplicity,
            "restricted multiplicity " + m.to_string());
    out.push_back(num(m.a));
  }
  return out;
}

std::vector<Cyc3> h_character(const std::string& name) {
  const auto& t = character_table_h();
  for (size_t i = 0; i < t.names.size(); ++i)
    if (t.names[i] == name) return t.rows[i];
  raise(ErrorCode::UnsupportedInput, "no character named " + name);
}

std::vector<ClassFingerprint> class_fingerprints() {
  std::vector<ClassFingerprint> out;
  for (const auto& c : conjugacy_classes().classes) {
    ClassFingerprint f;
    f.size = c.size();
    f.chi_pr = chi_pr(c.representative);
    f.order = c.representative.order();
    f.cycle_type = cycle_type_of(c.representative);
    f.has_pure_representative = false;
    for (const auto& m : c.members)
      if (m.is_pure_permutation()) f.has_pure_representative = true;
    out.push_back(f);
  }
  return out;
}

}  // namespace dworkgal::rep

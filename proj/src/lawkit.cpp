#include "lawkit.hpp"

#include <algorithm>
#include <numeric>

#include "ffield.hpp"

namespace lawforge {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  bool ranked;
  uint32_t fixed_rank;  // for display of unranked families
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A", true, 0},        {Family::TwA, "2A", true, 0},
    {Family::B, "B", true, 0},        {Family::C, "C", true, 0},
    {Family::D, "D", true, 0},        {Family::TwD, "2D", true, 0},
    {Family::Tw3D4, "3D4", false, 4}, {Family::E6, "E6", false, 6},
    {Family::TwE6, "2E6", false, 6},  {Family::E7, "E7", false, 7},
    {Family::E8, "E8", false, 8},     {Family::F4, "F4", false, 4},
    {Family::G2, "G2", false, 2},     {Family::Tw2B2, "2B2", false, 2},
    {Family::Tw2F4, "2F4", false, 4}, {Family::Tw2G2, "2G2", false, 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  fail(Errc::internal, "unknown family");
}

void validate(const LieTypeTag& tag) {
  switch (tag.family) {
    case Family::A:
      if (tag.rank < 1) fail(Errc::invalid, "A_l needs l >= 1");
      break;
    case Family::TwA:
    case Family::C:
      if (tag.rank < 2) fail(Errc::invalid, family_str(tag) + " needs rank >= 2");
      break;
    case Family::B:
      if (tag.rank < 3) fail(Errc::invalid, "B_l needs l >= 3");
      break;
    case Family::D:
    case Family::TwD:
      if (tag.rank < 4) fail(Errc::invalid, family_str(tag) + " needs rank >= 4");
      break;
    default:
      break;
  }
}

}  // namespace

bool ranked_family(Family f) { return info(f).ranked; }

LieTypeTag parse_family(const std::string& text) {
  for (const auto& fi : kFamilies) {
    if (fi.ranked) {
      std::string prefix = fi.name;
      if (text.size() > prefix.size() && text.compare(0, prefix.size(), prefix) == 0) {
        // avoid matching "2A..." against "A" etc.: the remainder must be digits
        const std::string rest = text.substr(prefix.size());
        if (std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          LieTypeTag tag{fi.family, static_cast<uint32_t>(std::stoul(rest))};
          validate(tag);
          return tag;
        }
      }
    } else if (text == fi.name) {
      return LieTypeTag{fi.family, fi.fixed_rank};
    }
  }
  fail(Errc::parse, "unknown family tag '" + text + "'");
}

std::string family_str(const LieTypeTag& tag) {
  const FamilyInfo& fi = info(tag.family);
  if (!fi.ranked) return fi.name;
  return std::string(fi.name) + std::to_string(tag.rank);
}

uint32_t law_length_degree(const LieTypeTag& tag, uint64_t p) {
  validate(tag);
  uint32_t l = tag.rank;
  switch (tag.family) {
    case Family::A:
    case Family::TwA:
      return (l + 1) / 2;
    case Family::B:
      return p % 2 ? 2 * (l / 2) : l;
    case Family::C:
      return l;
    case Family::D:
      return (l % 2 == 0 && p % 2) ? l - 2 : l - 1;
    case Family::TwD:
      return 2 * (l / 2);
    case Family::E6:
    case Family::TwE6:
      return 4;
    case Family::E7:
    case Family::E8:
      return 7;
    case Family::F4:
      return 4;
    case Family::G2:
      return 1;
    case Family::Tw3D4:
      return 3;
    case Family::Tw2B2:
      return 1;
    case Family::Tw2F4:
      return 2;
    case Family::Tw2G2:
      return 1;
  }
  fail(Errc::internal, "unreachable");
}

uint32_t min_projective_dim(const LieTypeTag& tag, uint64_t p) {
  validate(tag);
  uint32_t l = tag.rank;
  switch (tag.family) {
    case Family::A:
    case Family::TwA:
      return l + 1;
    case Family::B:
      if (p == 2) fail(Errc::invalid, "B_l tables assume odd characteristic");
      return 2 * l + 1;  // l >= 3 enforced by validate
    case Family::C:
      return 2 * l;
    case Family::D:
    case Family::TwD:
      return 2 * l;  // l >= 4 enforced by validate
    case Family::E6:
    case Family::TwE6:
      return 27;
    case Family::E7:
      return 56;
    case Family::E8:
      return 248;
    case Family::F4:
      return p == 3 ? 25 : 26;
    case Family::G2:
      return p == 2 ? 6 : 7;
    case Family::Tw3D4:
      return 8;
    case Family::Tw2B2:
      return 4;
    case Family::Tw2F4:
      return 26;
    case Family::Tw2G2:
      return 7;
  }
  fail(Errc::internal, "unreachable");
}

uint32_t max_order_degree(const LieTypeTag& tag) {
  validate(tag);
  switch (tag.family) {
    case Family::A:
    case Family::TwA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwD:
      return tag.rank;
    case Family::E6:
    case Family::TwE6:
      return 6;
    case Family::E7:
      return 7;
    case Family::E8:
      return 8;
    case Family::F4:
      return 4;
    case Family::G2:
      return 2;
    case Family::Tw3D4:
      return 4;
    case Family::Tw2B2:
      return 1;
    case Family::Tw2F4:
      return 2;
    case Family::Tw2G2:
      return 1;
  }
  fail(Errc::internal, "unreachable");
}

uint64_t torus_exponent(const LieTypeTag& tag, uint64_t q) {
  validate(tag);
  switch (tag.family) {
    case Family::TwA:
    case Family::TwE6:
      return q + 1;
    case Family::Tw3D4:
      return q * q * q - 1;
    default:
      return q - 1;
  }
}

uint32_t twist_degree(const LieTypeTag& tag) {
  validate(tag);
  return tag.family == Family::Tw3D4 ? 3 : 1;
}

uint64_t type_a_pairing_gcd_sum(uint32_t rank) {
  if (rank < 1) fail(Errc::invalid, "rank must be positive");
  // Roots of A_l: e_i - e_j in Z^(l+1). <beta, alpha∨> = (beta, alpha) since
  // all roots have squared length 2.
  uint32_t n = rank + 1;
  std::vector<std::pair<uint32_t, uint32_t>> roots;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (i != j) roots.emplace_back(i, j);
  auto dot = [&](const std::pair<uint32_t, uint32_t>& a, const std::pair<uint32_t, uint32_t>& b) {
    int64_t d = 0;
    d += (a.first == b.first) - (a.first == b.second);
    d -= (a.second == b.first) - (a.second == b.second);
    return d < 0 ? -d : d;
  };
  uint64_t total = 0;
  for (const auto& beta : roots) {
    uint64_t g = 0;
    for (const auto& alpha : roots) g = std::gcd(g, static_cast<uint64_t>(dot(beta, alpha)));
    total += g;
  }
  return total;
}

std::optional<uint64_t> measured_order_constant(const LieTypeTag& tag) {
  // Measured over the enumerable members of each family (see the spectra
  // tests, which re-derive these bounds from full order censuses).
  if (tag.family == Family::A && tag.rank == 1) return 2;   // o <= q+1 <= 2q
  if (tag.family == Family::A && tag.rank == 2) return 3;   // o <= q^2+q+1 <= 3q^2
  if (tag.family == Family::TwA && tag.rank == 2) return 3;
  if (tag.family == Family::C && tag.rank == 2) return 3;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// constructors

namespace {

// Conjugator candidates for the pairwise combination, tried in order until
// the commutator is non-trivial in F2.
std::vector<Word> conjugator_candidates() {
  std::vector<Word> out;
  const Word x = Word::generator(Gen::x);
  const Word y = Word::generator(Gen::y);
  out.push_back(x);
  out.push_back(y);
  out.push_back(concat(x, y));
  out.push_back(concat(y, x));
  out.push_back(concat(x.inverse(), y));
  ReducedWordStream stream(4);
  while (auto w = stream.next()) {
    if (std::find(out.begin(), out.end(), *w) == out.end()) out.push_back(*w);
  }
  return out;
}

// [u, t v t^-1]: vanishes wherever u or v does; non-trivial for some t.
Word combine_pair(const Word& u, const Word& v) {
  static const std::vector<Word> candidates = conjugator_candidates();
  for (const Word& t : candidates) {
    Word c = Word::commutator(u, v.conjugate(t));
    if (!c.trivial()) return c;
  }
  fail(Errc::internal, "no conjugator separates " + u.str() + " and " + v.str());
}

}  // namespace

Word union_combine(const std::vector<Word>& ws, uint64_t length_cap) {
  if (ws.empty()) fail(Errc::invalid, "union of no words");
  uint64_t max_len = 0;
  for (const Word& w : ws) {
    if (w.trivial()) fail(Errc::invalid, "union inputs must be non-trivial");
    max_len = std::max<uint64_t>(max_len, static_cast<uint64_t>(w.length()));
  }
  uint64_t m = ws.size();
  __uint128_t bound128 = static_cast<__uint128_t>(16) * m * m * max_len;
  if (bound128 > length_cap) fail(Errc::cap, "union bound exceeds the length cap");
  uint64_t bound = static_cast<uint64_t>(bound128);

  std::vector<Word> level = ws;
  while (level.size() > 1) {
    std::vector<Word> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(combine_pair(level[i], level[i + 1]));
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  Word out = level[0];
  if (out.trivial()) fail(Errc::internal, "combined word reduced to the identity");
  if (static_cast<uint64_t>(out.length()) > bound)
    fail(Errc::internal, "combined word of length " + std::to_string(out.length()) +
                             " breaks the 16 m^2 max bound " + std::to_string(bound));
  return out;
}

Word product_law(const std::vector<Word>& ws, uint64_t length_cap) {
  return union_combine(ws, length_cap);
}

Word extension_combine(const Word& w_n0, const Word& w_q0, uint64_t length_cap) {
  if (w_n0.trivial() || w_q0.trivial()) fail(Errc::invalid, "extension inputs must be non-trivial");
  uint64_t bound = static_cast<uint64_t>(w_n0.length()) * static_cast<uint64_t>(w_q0.length());
  if (bound > length_cap) fail(Errc::cap, "extension bound exceeds the length cap");
  Word w_n = w_n0.cyclic_reduce().first;
  Word w_q = w_q0.cyclic_reduce().first;

  Word u, v;
  if (w_q.blocks().size() == 1) {
    // a power of a basis element: substitute x^k, y^k
    int64_t k = w_q.blocks()[0].exp;
    u = Word::generator(Gen::x, k);
    v = Word::generator(Gen::y, k);
  } else {
    // some cyclic permutation generates a rank-2 free subgroup with w_q
    int64_t len = w_q.length();
    bool found = false;
    for (int64_t k = 1; k < len; ++k) {
      Word rot = w_q.cyclic_permutation(k);
      if (!Word::commutator(w_q, rot).trivial()) {
        u = w_q;
        v = rot;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::internal, "no free cyclic permutation for " + w_q.str());
  }
  Word out = w_n.substitute(u, v);
  if (out.trivial()) fail(Errc::internal, "extension word reduced to the identity");
  if (static_cast<uint64_t>(out.length()) > bound)
    fail(Errc::internal, "extension word breaks the n*m bound");
  return out;
}

Word solvable_law(uint32_t d, uint64_t length_cap) {
  if (d < 1) fail(Errc::invalid, "derived length must be positive");
  const Word c = Word::commutator(Word::generator(Gen::x), Word::generator(Gen::y));
  Word w = c;
  for (uint32_t i = 1; i < d; ++i) w = extension_combine(w, c, length_cap);
  return w;
}

Word max_order_law(uint64_t m, uint64_t length_cap) {
  if (m < 1) fail(Errc::invalid, "order bound must be positive");
  if (static_cast<__uint128_t>(16) * m * m * m > length_cap)
    fail(Errc::cap, "order bound exceeds the length cap");
  std::vector<Word> powers;
  powers.reserve(m);
  for (uint64_t i = 1; i <= m; ++i) powers.push_back(Word::generator(Gen::x, static_cast<int64_t>(i)));
  return union_combine(powers, length_cap);
}

LawRecipe make_recipe(const std::string& name, std::map<std::string, uint64_t> params, Word w,
                      uint64_t bound) {
  LawRecipe r;
  r.constructor = name;
  r.params = std::move(params);
  r.word = std::move(w);
  r.claimed_bound = bound;
  return r;
}

LawRecipe psl2_law(uint64_t q, const Caps& caps) {
  uint32_t p = 0, k = 0;
  factor_prime_power(q, p, k);
  std::vector<Word> ws = {Word::generator(Gen::x, static_cast<int64_t>(q - 1)),
                          Word::generator(Gen::x, static_cast<int64_t>(q)),
                          Word::generator(Gen::x, static_cast<int64_t>(q + 1))};
  Word w = union_combine(ws, caps.word_length_cap);
  uint64_t bound = 144 * (q + 1);
  if (static_cast<uint64_t>(w.length()) > bound)
    fail(Errc::internal, "psl2 law breaks the 144(q+1) bound");
  return make_recipe("psl2-law", {{"q", q}}, std::move(w), bound);
}

LawRecipe small_field_law(const LieTypeTag& tag, uint64_t n_max, const Caps& caps) {
  validate(tag);
  if (n_max < 2) fail(Errc::invalid, "field bound must be at least 2");
  auto constant = measured_order_constant(tag);
  if (!constant)
    fail(Errc::unsupported, "no measured order constant for family " + family_str(tag));
  uint32_t d = max_order_degree(tag);
  uint64_t m = *constant;
  for (uint32_t i = 0; i < d; ++i) {
    if (m > caps.word_length_cap / n_max) fail(Errc::cap, "order bound exceeds the length cap");
    m *= n_max;
  }
  Word w = max_order_law(m, caps.word_length_cap);
  return make_recipe("small-field-law", {{"n", n_max}, {"k", *constant}, {"d", d}},
                     std::move(w), 16 * m * m * m);
}

}  // namespace lawforge

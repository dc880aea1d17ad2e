#include "spectra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lawforge {

SpectrumReport order_census(GroupPtr g, const Caps& caps) {
  if (g->order() > caps.enumeration_cap)
    fail(Errc::cap, g->describe() + " exceeds the enumeration cap");
  SpectrumReport report;
  report.group = g->describe();
  report.order = g->order();
  g->for_each([&](const Element& e) {
    uint64_t o = g->element_order(e);
    ++report.census[o];
    report.max_order = std::max(report.max_order, o);
  });
  uint64_t total = 0;
  for (const auto& [o, c] : report.census) total += c;
  if (total != report.order) fail(Errc::internal, "census does not sum to |G|");
  return report;
}

DensityReport power_divisor_density(GroupPtr g, const LieTypeTag& tag, uint64_t q, const Caps& caps) {
  DensityReport report;
  report.group = g->describe();
  report.family = family_str(tag);
  report.q = q;
  report.b = torus_exponent(tag, q);
  report.order = g->order();
  SpectrumReport spectrum = order_census(g, caps);
  for (const auto& [o, c] : spectrum.census)
    if (report.b % o == 0) report.e_count += c;
  return report;
}

namespace {

// characteristic polynomial det(xI - M) by cofactor expansion over GF(q)[x];
// fine for the n <= 4 range this census supports
using Poly = std::vector<uint32_t>;  // ascending coefficients, length n+1 padded

Poly char_poly(const FieldSpec& F, uint32_t n, const std::vector<uint32_t>& m) {
  // entries of xI - M as degree<=1 polynomials
  std::vector<std::array<uint32_t, 2>> entry(size_t(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      entry[size_t(i) * n + j] = {F.neg(m[size_t(i) * n + j]), i == j ? F.one() : 0u};
    }
  // permanent-style expansion with signs over Sym(n)
  Poly acc(n + 1, 0);
  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    uint32_t inversions = 0;
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = {F.one()};
    for (uint32_t i = 0; i < n; ++i) {
      const auto& e = entry[size_t(i) * n + perm[i]];
      Poly next(term.size() + 1, 0);
      for (size_t t = 0; t < term.size(); ++t) {
        next[t] = F.add(next[t], F.mul(term[t], e[0]));
        next[t + 1] = F.add(next[t + 1], F.mul(term[t], e[1]));
      }
      term = std::move(next);
    }
    bool negate = inversions & 1;
    for (size_t t = 0; t < term.size() && t < acc.size(); ++t)
      acc[t] = F.add(acc[t], negate ? F.neg(term[t]) : term[t]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

uint32_t poly_eval(const FieldSpec& F, const Poly& p, uint32_t x) {
  uint32_t acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
  return acc;
}

const MatrixGroup* as_matrix(const Group& g) { return dynamic_cast<const MatrixGroup*>(&g); }

}  // namespace

uint64_t regular_diagonalizable_census(GroupPtr g, const Caps& caps) {
  const MatrixGroup* mg = as_matrix(*g);
  if (!mg) fail(Errc::invalid, "regular census needs a matrix backend, got " + g->describe());
  uint32_t n = mg->dim();
  if (n > 4) fail(Errc::unsupported, "regular census supports dimension <= 4");
  if (g->order() > caps.enumeration_cap)
    fail(Errc::cap, g->describe() + " exceeds the enumeration cap");
  const FieldSpec& F = *mg->field();

  // candidate eigenvalues: the whole field, or the (q+1)-th roots of unity
  // for unitary kinds (diagonal unitary matrices have exactly those entries)
  std::vector<uint32_t> candidates;
  if (mg->unitary()) {
    uint64_t e = mg->base_q() + 1;
    for (uint64_t c = 1; c < F.q(); ++c)
      if (F.pow(static_cast<uint32_t>(c), e) == F.one()) candidates.push_back(static_cast<uint32_t>(c));
  } else {
    for (uint64_t c = 0; c < F.q(); ++c) candidates.push_back(static_cast<uint32_t>(c));
  }

  uint64_t count = 0;
  g->for_each([&](const Element& e) {
    Poly cp = char_poly(F, n, e.v);
    uint32_t roots = 0;
    for (uint32_t c : candidates)
      if (poly_eval(F, cp, c) == 0) ++roots;
    if (roots == n) ++count;
  });
  return count;
}

TupleCount cyclic_tuple_count(uint64_t n, uint32_t d, const Caps& caps) {
  if (d < 3) fail(Errc::invalid, "tuple counting needs d >= 3");
  if (n < 1) fail(Errc::invalid, "cyclic order must be positive");
  double total = 1;
  for (uint32_t i = 0; i < d; ++i) total *= static_cast<double>(n);
  if (total > static_cast<double>(caps.search_eval_budget))
    fail(Errc::budget, "n^d exceeds the tuple budget");

  TupleCount out;
  out.n = n;
  out.d = d;
  std::vector<uint64_t> tuple(d, 0);
  for (;;) {
    uint64_t sum = 0;
    for (uint64_t c : tuple) sum += c;
    if (sum % n == 0) {
      bool distinct = true;
      for (uint32_t i = 0; i < d && distinct; ++i)
        for (uint32_t j = i + 1; j < d; ++j)
          if (tuple[i] == tuple[j]) {
            distinct = false;
            break;
          }
      if (distinct) ++out.exact;
    }
    uint32_t pos = d;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < n) break;
      tuple[pos] = 0;
      if (pos == 0) {
        int64_t head = static_cast<int64_t>(n) - static_cast<int64_t>(d) * (d - 1) / 2;
        int64_t tail = 1;
        for (uint32_t i = 0; i + 2 < d; ++i) tail *= static_cast<int64_t>(n);
        out.bound = head * tail;
        return out;
      }
    }
  }
}

uint64_t centralizer_census(GroupPtr g, const Element& e, const Caps& caps) {
  if (g->order() > caps.enumeration_cap)
    fail(Errc::cap, g->describe() + " exceeds the enumeration cap");
  uint64_t count = 0;
  g->for_each([&](const Element& h) {
    if (g->mul(h, e) == g->mul(e, h)) ++count;
  });
  return count;
}

std::string fraction_str(uint64_t num, uint64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string fraction_reduced_str(uint64_t num, uint64_t den) {
  uint64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace lawforge

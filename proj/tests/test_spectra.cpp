#include <doctest.h>

#include <numeric>

#include "spectra.hpp"

using namespace lawforge;

namespace {
const Caps caps;
}

TEST_CASE("order censuses") {
  SpectrumReport a5 = order_census(parse_group("Alt(5)", caps), caps);
  CHECK(a5.census == std::map<uint64_t, uint64_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK(a5.max_order == 5);

  SpectrumReport sl25 = order_census(parse_group("SL(2,5)", caps), caps);
  CHECK(sl25.max_order == 10);
  CHECK(sl25.order == 120);

  // cyclic group: phi(d) elements of order d for each divisor d
  SpectrumReport c12 = order_census(parse_group("C(12)", caps), caps);
  auto phi = [](uint64_t d) {
    uint64_t count = 0;
    for (uint64_t i = 1; i <= d; ++i)
      if (std::gcd(i, d) == 1) ++count;
    return count;
  };
  for (uint64_t d : {1, 2, 3, 4, 6, 12}) CHECK(c12.census.at(d) == phi(d));
}

TEST_CASE("PSL2 element orders divide q-1, q, or q+1") {
  for (uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
    SpectrumReport r =
        order_census(parse_group("PSL(2," + std::to_string(q) + ")", caps), caps);
    for (const auto& [o, c] : r.census) {
      bool divides = (q - 1) % o == 0 || q % o == 0 || (q + 1) % o == 0;
      CHECK(divides);
    }
  }
}

TEST_CASE("PGL(2,q) matches the symmetric group it is isomorphic to") {
  CHECK(order_census(parse_group("PGL(2,3)", caps), caps).census ==
        order_census(parse_group("Sym(4)", caps), caps).census);
  CHECK(order_census(parse_group("PGL(2,5)", caps), caps).census ==
        order_census(parse_group("Sym(5)", caps), caps).census);
}

TEST_CASE("exceptional isomorphisms: PSL2 = PSp2 = PSU2 spectra") {
  for (uint64_t q : {3, 4, 5, 7}) {
    std::string qs = std::to_string(q);
    SpectrumReport psl = order_census(parse_group("PSL(2," + qs + ")", caps), caps);
    SpectrumReport psp = order_census(parse_group("PSp(2," + qs + ")", caps), caps);
    SpectrumReport psu = order_census(parse_group("PSU(2," + qs + ")", caps), caps);
    CHECK(psl.order == psp.order);
    CHECK(psl.order == psu.order);
    CHECK(psl.census == psp.census);
    CHECK(psl.census == psu.census);
  }
}

TEST_CASE("power-divisor density") {
  DensityReport d = power_divisor_density(parse_group("PSL(2,5)", caps), parse_family("A1"), 5, caps);
  CHECK(d.b == 4);
  CHECK(d.e_count == 16);  // identity plus the fifteen involutions
  CHECK(d.order == 60);
  CHECK(fraction_str(d.e_count, d.order) == "16/60");
  CHECK(fraction_reduced_str(d.e_count, d.order) == "4/15");

  // independent oracle: count g with g^b = 1 directly
  GroupPtr su32 = parse_group("SU(3,2)", caps);
  DensityReport su = power_divisor_density(su32, parse_family("2A2"), 2, caps);
  CHECK(su.b == 3);
  uint64_t direct = 0;
  su32->for_each([&](const Element& g) {
    if (su32->power(g, 3) == su32->identity()) ++direct;
  });
  CHECK(su.e_count == direct);

  // trivial group: density 1
  DensityReport triv = power_divisor_density(parse_group("C(1)", caps), parse_family("A1"), 2, caps);
  CHECK(triv.e_count == triv.order);
}

TEST_CASE("SL2 split-torus density bound where the hypothesis holds") {
  // q - 1 >= 2 * sum M(Phi, beta) = 8 activates the 1/(2|W|) = 1/4 bound
  CHECK(type_a_pairing_gcd_sum(1) == 4);
  for (uint64_t q : {9, 11, 13}) {
    GroupPtr sl = parse_group("SL(2," + std::to_string(q) + ")", caps);
    DensityReport d = power_divisor_density(sl, parse_family("A1"), q, caps);
    CHECK(4 * d.e_count >= d.order);
  }
}

TEST_CASE("regular diagonalizable censuses") {
  // SL2(3): the only candidate eigenvalue pairs (a, a^-1) with a != a^-1
  // would need a outside {1, 2}, and GF(3)* has nothing else
  CHECK(regular_diagonalizable_census(parse_group("SL(2,3)", caps), caps) == 0);

  // SL2(q) oracle: distinct eigenvalues in GF(q) iff tr^2 - 4 is a nonzero
  // square; count by scanning the group directly
  for (uint64_t q : {5, 7}) {
    GroupPtr sl = parse_group("SL(2," + std::to_string(q) + ")", caps);
    Field f = FieldSpec::make(static_cast<uint32_t>(q), 1);
    uint64_t oracle = 0;
    sl->for_each([&](const Element& e) {
      uint32_t tr = f->add(e.v[0], e.v[3]);
      uint32_t disc = f->sub(f->mul(tr, tr), 4 % static_cast<uint32_t>(q));
      if (disc != 0 && f->is_square(disc)) ++oracle;
    });
    CHECK(regular_diagonalizable_census(sl, caps) == oracle);
  }

  // the covering bound from the conjugation argument, exact at q = 5:
  // class of diag(2,3) has 30 elements >= |G| * 2 / (2! * (q-1)) = 15
  uint64_t split5 = regular_diagonalizable_census(parse_group("SL(2,5)", caps), caps);
  CHECK(split5 == 30);
  CHECK(split5 >= 120 * 2 / (2 * 4));

  // unitary census restricts eigenvalues to (q+1)-th roots of unity
  uint64_t su_reg = regular_diagonalizable_census(parse_group("SU(2,3)", caps), caps);
  // oracle: diag(a, a^-1) with a^(q+1) = 1, a != a^-1 gives (q+1)-2 = 2
  // diagonal matrices; conjugates counted by enumeration
  GroupPtr su23 = parse_group("SU(2,3)", caps);
  auto* mg = dynamic_cast<const MatrixGroup*>(su23.get());
  REQUIRE(mg != nullptr);
  Field f9 = mg->field();
  uint64_t oracle = 0;
  su23->for_each([&](const Element& e) {
    // eigenvalues of a unitary 2x2 with det 1: roots of x^2 - tr x + 1
    uint32_t tr = f9->add(e.v[0], e.v[3]);
    uint32_t roots = 0;
    for (uint32_t c = 1; c < 9; ++c)
      if (f9->pow(c, 4) == 1 &&
          f9->add(f9->sub(f9->mul(c, c), f9->mul(tr, c)), 1) == 0)
        ++roots;
    if (roots == 2) ++oracle;
  });
  CHECK(su_reg == oracle);

  CHECK_THROWS_AS((void)regular_diagonalizable_census(parse_group("Sym(3)", caps), caps), Error);
}

TEST_CASE("cyclic tuple counts") {
  TupleCount t73 = cyclic_tuple_count(7, 3, caps);
  CHECK(t73.exact == 30);
  CHECK(t73.bound == 28);
  TupleCount t63 = cyclic_tuple_count(6, 3, caps);
  CHECK(t63.exact == 24);
  CHECK(t63.bound == 18);
  TupleCount t23 = cyclic_tuple_count(2, 3, caps);
  CHECK(t23.bound < 0);  // degenerate bound, nothing to assert

  // inclusion-exclusion closed form for d = 3:
  // n^2 - 3n + 2 * #{c : 3c = 0 mod n}
  for (uint64_t n = 3; n <= 18; ++n) {
    uint64_t triples_fixed = 0;
    for (uint64_t c = 0; c < n; ++c)
      if (3 * c % n == 0) ++triples_fixed;
    TupleCount t = cyclic_tuple_count(n, 3, caps);
    CHECK(t.exact == n * n - 3 * n + 2 * triples_fixed);
    if (t.bound >= 0) CHECK(t.exact >= static_cast<uint64_t>(t.bound));
  }

  CHECK_THROWS_AS((void)cyclic_tuple_count(5, 2, caps), Error);
}

TEST_CASE("centralizer censuses") {
  // diagonal with distinct eigenvalues in GL2(3): centralizer is the
  // diagonal subgroup of order (q-1)^2 = 4
  GroupPtr gl23 = parse_group("GL(2,3)", caps);
  CHECK(centralizer_census(gl23, Element{{1, 0, 0, 2}}, caps) == 4);
  CHECK(centralizer_census(gl23, gl23->identity(), caps) == gl23->order());

  // diag(2,3) in SL2(5): the split torus, order q-1 = 4
  GroupPtr sl25 = parse_group("SL(2,5)", caps);
  CHECK(centralizer_census(sl25, Element{{2, 0, 0, 3}}, caps) == 4);
}

TEST_CASE("orthogonal minus-type sanity: derived subgroup matches PSL(2,9)") {
  // SO4^-(3) has a derived subgroup of index 2 isomorphic to PSL(2, q^2)
  GroupPtr so = parse_group("SOminus(4,3)", caps);
  auto elems = so->elements(caps.enumeration_cap);
  std::vector<Element> commutators;
  for (size_t i = 0; i < elems.size(); i += 7)
    for (size_t j = 0; j < elems.size(); j += 5) {
      Element c = so->mul(so->mul(so->inv(elems[i]), so->inv(elems[j])),
                          so->mul(elems[i], elems[j]));
      commutators.push_back(std::move(c));
    }
  GroupPtr derived = make_subgroup(so, commutators, caps, "Omega4minus(3)");
  CHECK(derived->order() == 360);
  SpectrumReport omega = order_census(derived, caps);
  SpectrumReport psl29 = order_census(parse_group("PSL(2,9)", caps), caps);
  CHECK(omega.census == psl29.census);
}

TEST_CASE("measured order constants hold on enumerable groups") {
  // A1: max element order of PSL2(q) is at most 2q
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    SpectrumReport r = order_census(parse_group("PSL(2," + std::to_string(q) + ")", caps), caps);
    CHECK(r.max_order <= 2 * q);
  }
  // A2: max element order of PSL3(q) is at most 3 q^2
  for (uint64_t q : {2, 3, 4}) {
    SpectrumReport r = order_census(parse_group("PSL(3," + std::to_string(q) + ")", caps), caps);
    CHECK(r.max_order <= 3 * q * q);
  }
  // 2A2: PSU3(q); C2: PSp4(q)
  for (uint64_t q : {2, 3}) {
    SpectrumReport u = order_census(parse_group("PSU(3," + std::to_string(q) + ")", caps), caps);
    CHECK(u.max_order <= 3 * q * q);
  }
  SpectrumReport sp = order_census(parse_group("PSp(4,2)", caps), caps);
  CHECK(sp.max_order <= 3 * 4);
  SpectrumReport sp3 = order_census(parse_group("PSp(4,3)", caps), caps);
  CHECK(sp3.max_order <= 3 * 9);
}

#include <doctest.h>

#include <algorithm>

#include "groups.hpp"

using namespace lawforge;

namespace {
const Caps caps;

uint64_t count_elements(const GroupPtr& g) {
  uint64_t n = 0;
  g->for_each([&](const Element&) { ++n; });
  return n;
}

Element perm(std::vector<uint32_t> img) { return Element{std::move(img)}; }
}  // namespace

TEST_CASE("cyclic group") {
  GroupPtr c6 = make_cyclic(6);
  CHECK(c6->order() == 6);
  CHECK(count_elements(c6) == 6);
  CHECK(c6->mul(Element{{4}}, Element{{5}}) == Element{{3}});
  CHECK(c6->inv(Element{{2}}) == Element{{4}});
  CHECK(c6->element_order(Element{{2}}) == 3);
  CHECK(c6->element_order(Element{{0}}) == 1);
}

TEST_CASE("symmetric and alternating groups") {
  GroupPtr s3 = make_sym(3, false);
  CHECK(s3->order() == 6);
  CHECK(count_elements(s3) == 6);
  // (1 2) * (2 3) is a 3-cycle
  Element a = perm({1, 0, 2});
  Element b = perm({0, 2, 1});
  Element c = s3->mul(a, b);
  CHECK(s3->element_order(c) == 3);
  CHECK(s3->element_order(a) == 2);

  GroupPtr s4 = make_sym(4, false);
  CHECK(s4->order() == 24);
  CHECK(count_elements(s4) == 24);
  GroupPtr a5 = make_sym(5, true);
  CHECK(a5->order() == 60);
  CHECK(count_elements(a5) == 60);
  // every enumerated element of Alt(5) is even
  a5->for_each([&](const Element& e) {
    uint32_t inversions = 0;
    for (size_t i = 0; i < e.v.size(); ++i)
      for (size_t j = i + 1; j < e.v.size(); ++j)
        if (e.v[i] > e.v[j]) ++inversions;
    CHECK((inversions & 1) == 0);
  });
}

TEST_CASE("SL2 orders: closed form against enumeration") {
  GroupPtr sl25 = make_matrix(MatrixKind::SL, 2, 5, caps);
  CHECK(sl25->order() == 120);  // q(q^2-1)
  CHECK(count_elements(sl25) == 120);
  GroupPtr sl27 = make_matrix(MatrixKind::SL, 2, 7, caps);
  CHECK(sl27->order() == 336);
  CHECK(count_elements(sl27) == 336);

  // g * g^-1 = I on a sample
  auto some = sl25->elements(caps.enumeration_cap);
  for (size_t i = 0; i < some.size(); i += 17)
    CHECK(sl25->mul(some[i], sl25->inv(some[i])) == sl25->identity());
}

TEST_CASE("projective quotient orders") {
  GroupPtr psl25 = parse_group("PSL(2,5)", caps);
  CHECK(psl25->order() == 60);  // 120 / gcd(2, q-1)
  CHECK(count_elements(psl25) == 60);
  GroupPtr psl24 = parse_group("PSL(2,4)", caps);
  CHECK(psl24->order() == 60);  // gcd(2, 3) = 1
  CHECK(count_elements(psl24) == 60);
  GroupPtr pgl23 = parse_group("PGL(2,3)", caps);
  CHECK(pgl23->order() == 24);
  CHECK(count_elements(pgl23) == 24);
}

TEST_CASE("unitary and symplectic orders against enumeration") {
  GroupPtr su32 = parse_group("SU(3,2)", caps);
  CHECK(su32->order() == 216);  // q^3 (q^2-1)(q^3+1)
  CHECK(count_elements(su32) == 216);
  GroupPtr sp42 = parse_group("Sp(4,2)", caps);
  CHECK(sp42->order() == 720);  // q^4 (q^2-1)(q^4-1)
  CHECK(count_elements(sp42) == 720);
  GroupPtr su22 = parse_group("SU(2,2)", caps);
  CHECK(su22->order() == 6);
  CHECK(count_elements(su22) == 6);
}

TEST_CASE("orthogonal backends, odd characteristic") {
  GroupPtr so_minus = parse_group("SOminus(4,3)", caps);
  CHECK(so_minus->order() == 720);  // q^2 (q^2+1)(q^2-1)
  CHECK(count_elements(so_minus) == 720);
  GroupPtr so_plus = parse_group("SOplus(4,3)", caps);
  CHECK(so_plus->order() == 576);  // q^2 (q^2-1)^2
  CHECK(count_elements(so_plus) == 576);
  GroupPtr so_circle = parse_group("SOcircle(3,3)", caps);
  CHECK(so_circle->order() == 24);
  CHECK(count_elements(so_circle) == 24);
  GroupPtr so2m = parse_group("SOminus(2,5)", caps);
  CHECK(so2m->order() == 6);  // anisotropic plane: rotations of order q+1
  CHECK(count_elements(so2m) == 6);
  CHECK_THROWS_AS((void)parse_group("SOminus(4,2)", caps), Error);  // even q unsupported
  CHECK_THROWS_AS((void)parse_group("SOcircle(4,3)", caps), Error);
  CHECK_THROWS_AS((void)parse_group("Sp(3,2)", caps), Error);
}

TEST_CASE("every enumerated matrix element satisfies its defining form") {
  for (const char* desc :
       {"SU(3,2)", "Sp(4,2)", "SOminus(4,3)", "SOcircle(3,3)", "SL(2,9)", "Sp(2,5)"}) {
    GroupPtr g = parse_group(desc, caps);
    auto* mg = dynamic_cast<const MatrixGroup*>(g.get());
    REQUIRE(mg != nullptr);
    g->for_each([&](const Element& e) { CHECK(mg->contains(e)); });
  }
}

TEST_CASE("element orders") {
  // diag(2,4) in SL2(7): 2*4 = 8 = 1 mod 7, and 2 has order 3 mod 7
  GroupPtr sl27 = make_matrix(MatrixKind::SL, 2, 7, caps);
  Element d{{2, 0, 0, 4}};
  CHECK(sl27->element_order(d) == 3);
  CHECK(sl27->element_order(sl27->identity()) == 1);

  // element_order divides |G| across a whole group
  GroupPtr psl25 = parse_group("PSL(2,5)", caps);
  psl25->for_each([&](const Element& e) { CHECK(60 % psl25->element_order(e) == 0); });
}

TEST_CASE("closure and generating pairs") {
  GroupPtr s3 = make_sym(3, false);
  auto all = closure(*s3, {perm({1, 0, 2}), perm({1, 2, 0})}, caps.closure_cap);
  CHECK(all.size() == 6);
  CHECK(closure(*s3, {s3->identity()}, caps.closure_cap).size() == 1);
  CHECK(is_generating_pair(*s3, perm({1, 0, 2}), perm({1, 2, 0}), caps));
  CHECK(!is_generating_pair(*s3, s3->identity(), s3->identity(), caps));

  // closure output is closed under multiplication
  for (const Element& a : all)
    for (const Element& b : all) {
      Element p = s3->mul(a, b);
      CHECK(std::find(all.begin(), all.end(), p) != all.end());
    }

  // a (2,3,7) pair generates PSL(2,7)
  GroupPtr psl27 = parse_group("PSL(2,7)", caps);
  Element a = psl27->mul(psl27->identity(), Element{{0, 6, 1, 0}});
  Element b = psl27->mul(psl27->identity(), Element{{0, 6, 1, 6}});
  CHECK(psl27->element_order(a) == 2);
  CHECK(psl27->element_order(b) == 3);
  CHECK(psl27->element_order(psl27->mul(a, b)) == 7);
  CHECK(closure(*psl27, {a, b}, caps.closure_cap).size() == 168);

  // two elements of a common cyclic subgroup never generate a nonabelian group
  Element r = psl27->mul(a, b);
  CHECK(!is_generating_pair(*psl27, r, psl27->power(r, 3), caps));

  // monotone and idempotent
  auto sub = closure(*s3, {perm({1, 0, 2})}, caps.closure_cap);
  for (const Element& e : sub) CHECK(std::find(all.begin(), all.end(), e) != all.end());
  CHECK(closure(*s3, sub, caps.closure_cap).size() == sub.size());
}

TEST_CASE("word evaluation") {
  GroupPtr s3 = make_sym(3, false);
  Element a = perm({1, 0, 2});
  Element b = perm({1, 2, 0});
  CHECK(evaluate(Word(), *s3, a, b) == s3->identity());
  Word comm = Word::commutator(Word::generator(Gen::x), Word::generator(Gen::y));
  CHECK(evaluate(comm, *s3, b, b) == s3->identity());  // commuting pair
  CHECK(evaluate(comm, *s3, a, b) != s3->identity());
  // x^|G| is a law
  Word x6 = Word::generator(Gen::x, 6);
  s3->for_each([&](const Element& g) { CHECK(evaluate(x6, *s3, g, g) == s3->identity()); });
}

TEST_CASE("products") {
  GroupPtr c2xc3 = parse_group("C(2)xC(3)", caps);
  CHECK(c2xc3->order() == 6);
  CHECK(count_elements(c2xc3) == 6);
  CHECK(c2xc3->mul(Element{{1, 2}}, Element{{1, 2}}) == Element{{0, 1}});
  GroupPtr mixed = parse_group("PSL(2,4)xC(3)", caps);
  CHECK(mixed->order() == 180);
  CHECK(count_elements(mixed) == 180);
}

TEST_CASE("materialized subgroups: C7:C3 and C3 wr C2") {
  // C7:C3 inside Sym(7): a 7-cycle and multiplication by 2
  GroupPtr s7 = make_sym(7, false);
  Element seven = perm({1, 2, 3, 4, 5, 6, 0});
  Element triple = perm({0, 2, 4, 6, 1, 3, 5});  // i -> 2i mod 7
  GroupPtr frob21 = make_subgroup(s7, {seven, triple}, caps, "C7:C3");
  CHECK(frob21->order() == 21);
  CHECK(count_elements(frob21) == 21);
  CHECK(frob21->describe() == "C7:C3");

  // C3 wr C2 inside Sym(6)
  GroupPtr s6 = make_sym(6, false);
  Element r1 = perm({1, 2, 0, 3, 4, 5});
  Element r2 = perm({0, 1, 2, 4, 5, 3});
  Element swap = perm({3, 4, 5, 0, 1, 2});
  GroupPtr wreath = make_subgroup(s6, {r1, r2, swap}, caps, "C3wrC2");
  CHECK(wreath->order() == 18);
}

TEST_CASE("descriptor parsing") {
  CHECK(parse_group("Sym(5)", caps)->describe() == "Sym(5)");
  CHECK(parse_group("C(12)", caps)->describe() == "C(12)");
  CHECK(parse_group("PSL(2,7)", caps)->describe() == "PSL(2,7)");
  CHECK(parse_group("SU(3,3)", caps)->describe() == "SU(3,3)");
  CHECK(parse_group("PSL(2,4)xC(3)", caps)->describe() == "PSL(2,4)xC(3)");
  CHECK_THROWS_AS((void)parse_group("Nope(3)", caps), Error);
  CHECK_THROWS_AS((void)parse_group("PSL(2,6)", caps), Error);  // not a prime power
  CHECK_THROWS_AS((void)parse_group("PSL(2)", caps), Error);
  CHECK_THROWS_AS((void)parse_group("", caps), Error);
  CHECK_THROWS_AS((void)parse_group("Sym(3", caps), Error);
}

TEST_CASE("SU(n,q) acts over the square field") {
  GroupPtr su33 = parse_group("SU(3,3)", caps);
  auto* mg = dynamic_cast<const MatrixGroup*>(su33.get());
  REQUIRE(mg != nullptr);
  CHECK(mg->field()->q() == 9);  // entries live in GF(q^2)
  CHECK(mg->base_q() == 3);
  CHECK(su33->order() == 6048);  // q^3 (q^2-1)(q^3+1)
  CHECK(count_elements(su33) == 6048);
  GroupPtr gu23 = parse_group("GU(2,3)", caps);
  CHECK(gu23->order() == 96);  // q (q+1)(q^2-1)
  CHECK(count_elements(gu23) == 96);
}

TEST_CASE("low-rank order identities across families") {
  // odd-dimensional orthogonal and symplectic groups share orders
  CHECK(parse_group("SOcircle(5,3)", caps)->order() == parse_group("Sp(4,3)", caps)->order());
  CHECK(parse_group("SOcircle(3,5)", caps)->order() == parse_group("Sp(2,5)", caps)->order());
  // minus-type four-dimensional orthogonal over GF(q) doubles PSL(2,q^2)
  CHECK(parse_group("SOminus(4,3)", caps)->order() ==
        2 * parse_group("PSL(2,9)", caps)->order());
}

TEST_CASE("deterministic seeded sampling") {
  GroupPtr psl25 = parse_group("PSL(2,5)", caps);
  Rng r1(42), r2(42);
  CHECK(psl25->sample(r1) == psl25->sample(r2));
  GroupPtr s5 = make_sym(5, false);
  Rng s_a(1), s_b(1);
  CHECK(s5->sample(s_a) == s5->sample(s_b));
}

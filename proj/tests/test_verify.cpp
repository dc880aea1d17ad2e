#include <doctest.h>

#include "lawkit.hpp"
#include "verify.hpp"

using namespace lawforge;

namespace {
const Caps caps;
const Word X = Word::generator(Gen::x);
const Word Y = Word::generator(Gen::y);
}  // namespace

TEST_CASE("check_law exhaustive") {
  Word comm = Word::commutator(X, Y);
  LawCertificate abelian = check_law(comm, parse_group("C(6)", caps), VerifyMode::Exhaustive, caps);
  CHECK(abelian.verdict == Verdict::Law);
  CHECK(abelian.pairs_checked == 36);

  LawCertificate nonabelian =
      check_law(comm, parse_group("Sym(3)", caps), VerifyMode::Exhaustive, caps);
  CHECK(nonabelian.verdict == Verdict::Counterexample);
  REQUIRE(nonabelian.counterexample.has_value());
  // the reported pair must re-evaluate to a non-identity element
  GroupPtr s3 = parse_group("Sym(3)", caps);
  DenseGroup dg(s3, caps.pair_group_cap);
  auto [i, j] = *nonabelian.counterexample;
  CHECK(evaluate(comm, *s3, dg.element(i), dg.element(j)) != s3->identity());

  CHECK_THROWS_AS((void)check_law(Word(), s3, VerifyMode::Exhaustive, caps), Error);
}

TEST_CASE("psl2 law holds exhaustively on PSL(2,5)") {
  LawRecipe recipe = psl2_law(5, caps);
  LawCertificate cert =
      check_law(recipe.word, parse_group("PSL(2,5)", caps), VerifyMode::Exhaustive, caps);
  CHECK(cert.verdict == Verdict::Law);
  CHECK(cert.pairs_checked == 3600);
}

TEST_CASE("exhaustive mode needs the group under the pair cap") {
  Caps tight = caps;
  tight.pair_group_cap = 50;
  CHECK_THROWS_AS(
      (void)check_law(X, parse_group("PSL(2,5)", tight), VerifyMode::Exhaustive, tight), Error);
}

TEST_CASE("vanishing sets") {
  // Z(C2, x): only the identity kills x, any h; 2 pairs
  VanishingSet z = vanishing_set(X, parse_group("C(2)", caps), caps);
  CHECK(z.count == 2);

  // Z(Sym(3), x^3): elements of order dividing 3 are the identity and the
  // two 3-cycles, so 3 * 6 pairs
  VanishingSet z3 = vanishing_set(Word::generator(Gen::x, 3), parse_group("Sym(3)", caps), caps);
  CHECK(z3.count == 18);

  CHECK_THROWS_AS((void)vanishing_set(Word(), parse_group("C(2)", caps), caps), Error);

  // consistency with check_law: a law vanishes on all of G x G
  GroupPtr c6 = parse_group("C(6)", caps);
  Word comm = Word::commutator(X, Y);
  CHECK(check_law(comm, c6, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  CHECK(vanishing_set(comm, c6, caps).count == 36);
  // and Z(G, x^|G|) is everything
  CHECK(vanishing_set(Word::generator(Gen::x, 6), c6, caps).count == 36);
}

TEST_CASE("sampled mode is seeded and distinct from proof") {
  GroupPtr psl27 = parse_group("PSL(2,7)", caps);
  Word x336 = Word::generator(Gen::x, 336);  // exponent law, holds everywhere
  LawCertificate a = check_law(x336, psl27, VerifyMode::Sampled, caps, 500, 11);
  LawCertificate b = check_law(x336, psl27, VerifyMode::Sampled, caps, 500, 11);
  CHECK(a.verdict == Verdict::LawSampled);
  CHECK(verdict_str(a.verdict) == "law-sampled");
  CHECK(a.pairs_checked == 500);
  CHECK(b.verdict == a.verdict);

  // a non-law dies fast in sampled mode
  LawCertificate c = check_law(Word::commutator(X, Y), psl27, VerifyMode::Sampled, caps, 500, 11);
  CHECK(c.verdict == Verdict::Counterexample);

  // sampled mode works beyond the pair cap, where exhaustive refuses
  GroupPtr sl217 = parse_group("SL(2,17)", caps);  // order 4896 > 1500
  CHECK_THROWS_AS((void)check_law(X, sl217, VerifyMode::Exhaustive, caps), Error);
  Word exponent_law = Word::generator(Gen::x, 4896);
  LawCertificate big = check_law(exponent_law, sl217, VerifyMode::Sampled, caps, 200, 3);
  CHECK(big.verdict == Verdict::LawSampled);
}

TEST_CASE("generating-pair coverage") {
  // x^|G| covers generating pairs for any group
  GroupPtr s3 = parse_group("Sym(3)", caps);
  LawCertificate cover = check_on_generating_pairs(Word::generator(Gen::x, 6), s3, caps);
  CHECK(cover.verdict == Verdict::CoversGeneratingPairs);
  CHECK(cover.pairs_checked > 0);

  // C2^3 is not 2-generated: no generating pairs, vacuous coverage
  GroupPtr c222 = parse_group("C(2)xC(2)xC(2)", caps);
  LawCertificate vac = check_on_generating_pairs(X, c222, caps);
  CHECK(vac.verdict == Verdict::CoversGeneratingPairs);
  CHECK(vac.pairs_checked == 0);

  // the commutator does not cover generating pairs of Sym(3)
  LawCertificate no = check_on_generating_pairs(Word::commutator(X, Y), s3, caps);
  CHECK(no.verdict == Verdict::Counterexample);
}

TEST_CASE("laws restrict to closure subgroups") {
  // x^12 is a law for Sym(4); it stays a law on random 2-generated subgroups
  GroupPtr s4 = parse_group("Sym(4)", caps);
  Word x12 = Word::generator(Gen::x, 12);
  REQUIRE(check_law(x12, s4, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    Element a = s4->sample(rng), b = s4->sample(rng);
    GroupPtr sub = make_subgroup(s4, {a, b}, caps);
    CHECK(check_law(x12, sub, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  }
}

TEST_CASE("shortest law search") {
  // C2: no law of length 1 (x, x^-1, y, y^-1 all fail at the nonzero
  // element); the first length-2 word in enumeration order is x^2
  ShortestLawResult r = shortest_law_search(parse_group("C(2)", caps), 2, caps);
  REQUIRE(r.found.has_value());
  CHECK(*r.found == Word::generator(Gen::x, 2));
  CHECK(r.words_tested > 4);  // all of length 1 plus some of length 2

  ShortestLawResult none = shortest_law_search(parse_group("C(2)", caps), 1, caps);
  CHECK(!none.found.has_value());
  CHECK(none.frontier == 1);
  CHECK(none.words_tested == 4);

  // PSL(2,7): nothing of length <= 2, consistent with the (q-1)/3 bound
  ShortestLawResult psl = shortest_law_search(parse_group("PSL(2,7)", caps), 2, caps);
  CHECK(!psl.found.has_value());
  CHECK(psl.words_tested == 16);

  Caps tiny = caps;
  tiny.search_eval_budget = 10;
  CHECK_THROWS_AS((void)shortest_law_search(parse_group("C(2)", tiny), 3, tiny), Error);
}

TEST_CASE("table scan agrees with generic evaluation on random words") {
  GroupPtr s4 = parse_group("Sym(4)", caps);
  DenseGroup dg(s4, caps.pair_group_cap);
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    // random block words with large mixed-sign exponents
    Word w;
    uint32_t blocks = 1 + static_cast<uint32_t>(rng.below(6));
    for (uint32_t i = 0; i < blocks; ++i) {
      int64_t e = 1 + static_cast<int64_t>(rng.below(20));
      if (rng.coin()) e = -e;
      w = concat(w, Word::generator(rng.coin() ? Gen::x : Gen::y, e));
    }
    if (w.trivial()) continue;
    std::vector<uint32_t> all;
    dg.evaluate_all_pairs(w, all);
    std::vector<uint32_t> as, bs;
    for (int s = 0; s < 40; ++s) {
      as.push_back(static_cast<uint32_t>(rng.below(dg.size())));
      bs.push_back(static_cast<uint32_t>(rng.below(dg.size())));
    }
    std::vector<uint32_t> listed;
    dg.evaluate_pairs(w, as, bs, listed);
    for (size_t s = 0; s < as.size(); ++s) {
      uint32_t expect = dg.index_of(evaluate(w, *s4, dg.element(as[s]), dg.element(bs[s])));
      CHECK(all[size_t(as[s]) * dg.size() + bs[s]] == expect);
      CHECK(listed[s] == expect);
      CHECK(dg.evaluate_one(w, as[s], bs[s]) == expect);
    }
  }
}

TEST_CASE("dense group basics") {
  DenseGroup dg(parse_group("Sym(3)", caps), caps.pair_group_cap);
  CHECK(dg.size() == 6);
  CHECK(dg.mul(dg.id_index(), 3) == 3);
  CHECK(dg.mul(3, dg.inv(3)) == dg.id_index());
  CHECK(dg.pow(dg.id_index(), 100) == dg.id_index());
  // pow agrees with repeated multiplication
  for (uint32_t i = 0; i < dg.size(); ++i) {
    uint32_t acc = dg.id_index();
    for (int k = 0; k < 5; ++k) acc = dg.mul(acc, i);
    CHECK(dg.pow(i, 5) == acc);
    CHECK(dg.pow(i, -1) == dg.inv(i));
  }
  // generating pairs of Sym(3): a transposition and a 3-cycle in either
  // order, or two distinct transpositions; count them by brute force
  uint64_t expected = 0;
  GroupPtr s3 = parse_group("Sym(3)", caps);
  auto elems = s3->elements(16);
  for (const Element& a : elems)
    for (const Element& b : elems)
      if (is_generating_pair(*s3, a, b, caps)) ++expected;
  CHECK(dg.generating_pairs().size() == expected);
}

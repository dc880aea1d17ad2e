// Cross-module checks: constructed laws against exhaustive verification.

#include <doctest.h>

#include "lawkit.hpp"
#include "spectra.hpp"
#include "verify.hpp"

using namespace lawforge;

namespace {
const Caps caps;
}

TEST_CASE("psl2 law holds on SL2 and on the projective quotient") {
  for (uint64_t q : {4, 5}) {
    LawRecipe r = psl2_law(q, caps);
    std::string qs = std::to_string(q);
    CHECK(check_law(r.word, parse_group("SL(2," + qs + ")", caps), VerifyMode::Exhaustive, caps)
              .verdict == Verdict::Law);
    CHECK(check_law(r.word, parse_group("PSL(2," + qs + ")", caps), VerifyMode::Exhaustive, caps)
              .verdict == Verdict::Law);
  }
  // PSL(2,4) = Alt(5): the q=4 law transfers across the isomorphism
  CHECK(check_law(psl2_law(4, caps).word, parse_group("Alt(5)", caps), VerifyMode::Exhaustive,
                  caps)
            .verdict == Verdict::Law);
}

TEST_CASE("solvable law tracks the derived length of Sym(4)") {
  GroupPtr s4 = parse_group("Sym(4)", caps);
  Word d2 = solvable_law(2, caps.word_length_cap);
  Word d3 = solvable_law(3, caps.word_length_cap);
  // derived series of Sym(4) has length 3: the d=2 word fails, d=3 holds
  CHECK(check_law(d2, s4, VerifyMode::Exhaustive, caps).verdict == Verdict::Counterexample);
  CHECK(check_law(d3, s4, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  // and d=2 is a law for the metabelian Sym(3)
  CHECK(check_law(d2, parse_group("Sym(3)", caps), VerifyMode::Exhaustive, caps).verdict ==
        Verdict::Law);
}

TEST_CASE("max-order laws from the order census") {
  // Alt(5) has orders {1,2,3,5}, all at most 5
  SpectrumReport census = order_census(parse_group("Alt(5)", caps), caps);
  CHECK(census.max_order == 5);
  Word m5 = max_order_law(5, caps.word_length_cap);
  CHECK(check_law(m5, parse_group("Alt(5)", caps), VerifyMode::Exhaustive, caps).verdict ==
        Verdict::Law);
  Word m4 = max_order_law(4, caps.word_length_cap);
  CHECK(check_law(m4, parse_group("Sym(4)", caps), VerifyMode::Exhaustive, caps).verdict ==
        Verdict::Law);
}

TEST_CASE("small-field law covers every PSL(2,q) with q <= 5") {
  LawRecipe r = small_field_law(parse_family("A1"), 5, caps);
  for (uint64_t q : {2, 3, 4, 5}) {
    GroupPtr g = parse_group("PSL(2," + std::to_string(q) + ")", caps);
    CHECK(check_law(r.word, g, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  }
}

TEST_CASE("product laws") {
  // component laws x^2 and x^3 give a law for C2 x C3
  Word w = product_law({Word::generator(Gen::x, 2), Word::generator(Gen::x, 3)},
                       caps.word_length_cap);
  CHECK(check_law(w, parse_group("C(2)xC(3)", caps), VerifyMode::Exhaustive, caps).verdict ==
        Verdict::Law);
  // single factor passes through
  Word only = Word::parse("x^2 y");
  CHECK(product_law({only}, caps.word_length_cap) == only);
}

TEST_CASE("product of psl2 laws on PSL(2,4) x PSL(2,5), raised cap") {
  Caps wide = caps;
  wide.pair_group_cap = 4000;  // 3600^2 pairs
  Word w = product_law({psl2_law(4, wide).word, psl2_law(5, wide).word}, wide.word_length_cap);
  LawCertificate cert =
      check_law(w, parse_group("PSL(2,4)xPSL(2,5)", wide), VerifyMode::Exhaustive, wide);
  CHECK(cert.verdict == Verdict::Law);
  CHECK(cert.pairs_checked == 3600ull * 3600ull);
}

TEST_CASE("no law of length four for PSL(2,13)") {
  ShortestLawResult r = shortest_law_search(parse_group("PSL(2,13)", caps), 4, caps);
  CHECK(!r.found.has_value());
  CHECK(r.words_tested == 160);
}

TEST_CASE("law verdicts agree between the fast scan and the slow vanishing set") {
  GroupPtr psl25 = parse_group("PSL(2,5)", caps);
  Word law = psl2_law(5, caps).word;
  REQUIRE(check_law(law, psl25, VerifyMode::Exhaustive, caps).verdict == Verdict::Law);
  CHECK(vanishing_set(law, psl25, caps).count == 3600);
}

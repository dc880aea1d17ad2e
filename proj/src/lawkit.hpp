#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caps.hpp"
#include "common.hpp"
#include "freeword.hpp"

namespace lawforge {

// The sixteen Lie-type families, twisted types spelled with a leading twist
// degree: "A3", "2A2", "B3", "C2", "D4", "2D4", "3D4", "E6", "2E6", "E7",
// "E8", "F4", "G2", "2B2", "2F4", "2G2".
enum class Family : uint8_t {
  A, TwA, B, C, D, TwD, Tw3D4, E6, TwE6, E7, E8, F4, G2, Tw2B2, Tw2F4, Tw2G2
};

struct LieTypeTag {
  Family family;
  uint32_t rank;  // meaningful for A/2A/B/C/D/2D; fixed otherwise

  bool operator==(const LieTypeTag&) const = default;
};

LieTypeTag parse_family(const std::string& text);
std::string family_str(const LieTypeTag& tag);
bool ranked_family(Family f);

// Degree of the polynomial part of the shortest-law length.
uint32_t law_length_degree(const LieTypeTag& tag, uint64_t p);
// Minimal dimension of a faithful projective representation.
uint32_t min_projective_dim(const LieTypeTag& tag, uint64_t p);
// Degree bound for maximal element orders: max o(g) = O(q^d).
uint32_t max_order_degree(const LieTypeTag& tag);
// Exponent divisor of the distinguished torus: q+1, q^3-1, or q-1.
uint64_t torus_exponent(const LieTypeTag& tag, uint64_t q);
// 1 for all families except 3 for the triality twist.
uint32_t twist_degree(const LieTypeTag& tag);

// Sum over the roots beta of A_l of gcd{<beta, alpha∨> : alpha in Phi};
// the threshold q - 1 >= 2 * this activates the 1/(2|W|) density bound.
uint64_t type_a_pairing_gcd_sum(uint32_t rank);

// Measured constant K with max{o(g) : g in X(q)} <= K * q^d(X) on the
// enumerable range; only families we can build as matrix groups carry one.
std::optional<uint64_t> measured_order_constant(const LieTypeTag& tag);

struct LawRecipe {
  std::string constructor;
  std::map<std::string, uint64_t> params;
  Word word;
  uint64_t claimed_bound;
};

// Combines non-trivial words into one word vanishing wherever any input
// vanishes; output length is at most 16 m^2 max|w_i| (enforced, not assumed).
Word union_combine(const std::vector<Word>& ws, uint64_t length_cap);
// Same construction; stated for direct products G_1 x ... x G_m.
Word product_law(const std::vector<Word>& ws, uint64_t length_cap);
// Law for any extension N.Q from laws for N and Q; length at most |w_n|*|w_q|.
Word extension_combine(const Word& w_n, const Word& w_q, uint64_t length_cap);
// Law for soluble groups of derived length <= d; length at most 4^d.
Word solvable_law(uint32_t d, uint64_t length_cap);
// Law for any group whose element orders are all <= m; length at most 16 m^3.
Word max_order_law(uint64_t m, uint64_t length_cap);

LawRecipe psl2_law(uint64_t q, const Caps& caps);
LawRecipe small_field_law(const LieTypeTag& tag, uint64_t n_max, const Caps& caps);
LawRecipe make_recipe(const std::string& name, std::map<std::string, uint64_t> params, Word w,
                      uint64_t bound);

}  // namespace lawforge

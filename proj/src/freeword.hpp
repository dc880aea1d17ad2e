#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace lawforge {

enum class Gen : uint8_t { x = 0, y = 1 };

// One signed letter of the alphabet {x, x^-1, y, y^-1}.
struct Letter {
  Gen gen;
  int8_t sign;  // +1 or -1
};

// A freely reduced word in F(x, y), stored as run-length blocks
// (generator, exponent) with adjacent blocks carrying distinct generators
// and no zero exponents. This makes x^(q+1) a single block instead of q+1
// letters, and block-merging on append performs free reduction.
//
// Words are immutable values; every operation returns a new word.
class Word {
 public:
  struct Block {
    Gen gen;
    int64_t exp;  // nonzero
    bool operator==(const Block&) const = default;
  };

  Word() = default;  // the identity

  static Word generator(Gen g, int64_t exp = 1);
  static Word from_letters(const std::vector<Letter>& raw);  // free reduction
  static Word commutator(const Word& a, const Word& b);      // a^-1 b^-1 a b

  // Text form: whitespace-separated "gen^exp" tokens with exponent 1 left
  // implicit, e.g. "x^3 y^-1 x". The identity prints and parses as "1".
  static Word parse(const std::string& text);
  std::string str() const;

  const std::vector<Block>& blocks() const { return blocks_; }
  bool trivial() const { return blocks_.empty(); }
  int64_t length() const;
  Letter letter_at(int64_t i) const;

  Word inverse() const;
  Word pow(uint64_t e) const;
  Word conjugate(const Word& by) const;  // by . w . by^-1
  Word substitute(const Word& u, const Word& v) const;

  // w = conjugator . core . conjugator^-1, core cyclically reduced.
  std::pair<Word, Word> cyclic_reduce() const;  // (core, conjugator)
  bool cyclically_reduced() const;
  Word cyclic_permutation(int64_t k) const;  // requires cyclically reduced input

  bool operator==(const Word&) const = default;

  friend Word concat(const Word& u, const Word& v);

 private:
  std::vector<Block> blocks_;
  static void push_block(std::vector<Block>& bs, Gen g, int64_t exp);
};

Word concat(const Word& u, const Word& v);

// pow with a letter-count guard, for constructors that take user exponents.
Word pow_checked(const Word& w, uint64_t e, uint64_t length_cap);

// Streams every freely reduced word of length 1..max_length exactly once,
// ordered by length and then lexicographically with x < x^-1 < y < y^-1.
class ReducedWordStream {
 public:
  explicit ReducedWordStream(uint32_t max_length) : max_length_(max_length) {}
  std::optional<Word> next();

  // 4 * (3^L - 1) / 2 for L >= 1
  static uint64_t count_up_to(uint32_t max_length);

 private:
  uint32_t max_length_;
  std::vector<uint8_t> codes_;  // 0=x, 1=x^-1, 2=y, 3=y^-1; empty means "not started"
};

}  // namespace lawforge

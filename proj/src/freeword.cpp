#include "freeword.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace lawforge {

void Word::push_block(std::vector<Block>& bs, Gen g, int64_t exp) {
  if (exp == 0) return;
  if (!bs.empty() && bs.back().gen == g) {
    bs.back().exp += exp;
    if (bs.back().exp == 0) bs.pop_back();
    return;
  }
  bs.push_back(Block{g, exp});
}

Word Word::generator(Gen g, int64_t exp) {
  Word w;
  push_block(w.blocks_, g, exp);
  return w;
}

Word Word::from_letters(const std::vector<Letter>& raw) {
  Word w;
  for (const Letter& l : raw) push_block(w.blocks_, l.gen, l.sign);
  return w;
}

Word Word::commutator(const Word& a, const Word& b) {
  return concat(concat(a.inverse(), b.inverse()), concat(a, b));
}

int64_t Word::length() const {
  int64_t n = 0;
  for (const Block& b : blocks_) n += b.exp < 0 ? -b.exp : b.exp;
  return n;
}

Letter Word::letter_at(int64_t i) const {
  for (const Block& b : blocks_) {
    int64_t len = b.exp < 0 ? -b.exp : b.exp;
    if (i < len) return Letter{b.gen, static_cast<int8_t>(b.exp < 0 ? -1 : 1)};
    i -= len;
  }
  fail(Errc::invalid, "letter index out of range");
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  for (const Word::Block& b : v.blocks_) Word::push_block(w.blocks_, b.gen, b.exp);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.blocks_.reserve(blocks_.size());
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
    w.blocks_.push_back(Block{it->gen, -it->exp});
  return w;
}

Word Word::pow(uint64_t e) const {
  Word result;
  Word base = *this;
  while (e) {
    if (e & 1) result = concat(result, base);
    e >>= 1;
    if (e) base = concat(base, base);
  }
  return result;
}

Word pow_checked(const Word& w, uint64_t e, uint64_t length_cap) {
  uint64_t len = static_cast<uint64_t>(w.length());
  if (len != 0 && e > length_cap / len)
    fail(Errc::cap, "word power would exceed the length cap");
  return w.pow(e);
}

Word Word::conjugate(const Word& by) const { return concat(concat(by, *this), by.inverse()); }

Word Word::substitute(const Word& u, const Word& v) const {
  Word out;
  for (const Block& b : blocks_) {
    const Word& base = b.gen == Gen::x ? u : v;
    Word piece = base.pow(static_cast<uint64_t>(b.exp < 0 ? -b.exp : b.exp));
    if (b.exp < 0) piece = piece.inverse();
    out = concat(out, piece);
  }
  return out;
}

std::pair<Word, Word> Word::cyclic_reduce() const {
  std::vector<Block> bs = blocks_;
  Word conj;
  while (bs.size() >= 2) {
    Block& f = bs.front();
    Block& b = bs.back();
    if (f.gen != b.gen || (f.exp > 0) == (b.exp > 0)) break;
    int64_t fa = f.exp < 0 ? -f.exp : f.exp;
    int64_t ba = b.exp < 0 ? -b.exp : b.exp;
    int64_t m = fa < ba ? fa : ba;
    int64_t s = f.exp > 0 ? 1 : -1;
    push_block(conj.blocks_, f.gen, s * m);
    f.exp -= s * m;
    b.exp += s * m;
    bool drop_back = (b.exp == 0);
    bool drop_front = (f.exp == 0);
    if (drop_back) bs.pop_back();
    if (drop_front) bs.erase(bs.begin());
  }
  Word core;
  core.blocks_ = std::move(bs);
  return {core, conj};
}

bool Word::cyclically_reduced() const {
  if (blocks_.size() < 2) return true;
  const Block& f = blocks_.front();
  const Block& b = blocks_.back();
  return f.gen != b.gen || (f.exp > 0) == (b.exp > 0);
}

Word Word::cyclic_permutation(int64_t k) const {
  if (!cyclically_reduced()) fail(Errc::invalid, "cyclic permutation requires a cyclically reduced word");
  int64_t len = length();
  if (len == 0) return *this;
  k %= len;
  if (k < 0) k += len;
  if (k == 0) return *this;
  // split into prefix A of k letters and suffix B, return B.A
  Word prefix, suffix;
  int64_t taken = 0;
  for (const Block& b : blocks_) {
    int64_t blen = b.exp < 0 ? -b.exp : b.exp;
    int64_t s = b.exp < 0 ? -1 : 1;
    int64_t into_prefix = 0;
    if (taken < k) into_prefix = std::min(blen, k - taken);
    if (into_prefix > 0) push_block(prefix.blocks_, b.gen, s * into_prefix);
    if (into_prefix < blen) push_block(suffix.blocks_, b.gen, s * (blen - into_prefix));
    taken += blen;
  }
  return concat(suffix, prefix);
}

std::string Word::str() const {
  if (blocks_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Block& b : blocks_) {
    if (!first) out << ' ';
    first = false;
    out << (b.gen == Gen::x ? 'x' : 'y');
    if (b.exp != 1) out << '^' << b.exp;
  }
  return out.str();
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) fail(Errc::parse, "empty word text; the identity is written \"1\"");
  if (tokens.size() == 1 && tokens[0] == "1") return Word();
  Word w;
  for (const std::string& t : tokens) {
    Gen g;
    if (t[0] == 'x')
      g = Gen::x;
    else if (t[0] == 'y')
      g = Gen::y;
    else
      fail(Errc::parse, "bad word token '" + t + "'");
    int64_t exp = 1;
    if (t.size() > 1) {
      if (t[1] != '^' || t.size() == 2) fail(Errc::parse, "bad word token '" + t + "'");
      errno = 0;
      char* end = nullptr;
      long long v = std::strtoll(t.c_str() + 2, &end, 10);
      if (errno != 0 || end != t.c_str() + t.size())
        fail(Errc::parse, "bad exponent in word token '" + t + "'");
      exp = v;
    }
    push_block(w.blocks_, g, exp);
  }
  return w;
}

std::optional<Word> ReducedWordStream::next() {
  auto inverse_of = [](uint8_t c) -> uint8_t { return c ^ 1; };
  auto smallest_after = [&](uint8_t prev) -> uint8_t {
    return inverse_of(prev) == 0 ? 1 : 0;  // smallest code that is not prev^-1
  };
  if (max_length_ == 0) return std::nullopt;
  if (codes_.empty()) {
    codes_.push_back(0);
  } else {
    size_t pos = codes_.size();
    while (pos > 0) {
      --pos;
      uint8_t c = codes_[pos];
      bool advanced = false;
      while (c < 3) {
        ++c;
        if (pos == 0 || c != inverse_of(codes_[pos - 1])) {
          codes_[pos] = c;
          advanced = true;
          break;
        }
      }
      if (advanced) {
        for (size_t i = pos + 1; i < codes_.size(); ++i) codes_[i] = smallest_after(codes_[i - 1]);
        break;
      }
      if (pos == 0) {
        // exhausted this length; grow
        if (codes_.size() >= max_length_) return std::nullopt;
        codes_.assign(codes_.size() + 1, 0);
        for (size_t i = 1; i < codes_.size(); ++i) codes_[i] = smallest_after(codes_[i - 1]);
        break;
      }
    }
  }
  std::vector<Letter> letters;
  letters.reserve(codes_.size());
  for (uint8_t c : codes_)
    letters.push_back(Letter{c < 2 ? Gen::x : Gen::y, static_cast<int8_t>(c & 1 ? -1 : 1)});
  return Word::from_letters(letters);
}

uint64_t ReducedWordStream::count_up_to(uint32_t max_length) {
  uint64_t total = 0, at_len = 4;
  for (uint32_t l = 1; l <= max_length; ++l) {
    total += at_len;
    at_len *= 3;
  }
  return total;
}

}  // namespace lawforge

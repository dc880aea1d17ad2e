#include "ffield.hpp"

#include <algorithm>
#include <sstream>

namespace lawforge {

namespace {

// Dense polynomial arithmetic over Z/p, coefficients ascending, no leading
// zeros (the zero polynomial is the empty vector).
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<uint32_t>((c[i + j] + uint64_t(a[i]) * b[j]) % p);
  trim(c);
  return c;
}

// a mod m, m monic
Poly pmod(Poly a, const Poly& m, uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    uint32_t lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = uint64_t(lead) * m[i] % p;
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, uint32_t p) {
  // d monic
  return pmod(a, d, p).empty();
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void factor_prime_power(uint64_t q, uint32_t& p, uint32_t& k) {
  if (q < 2) fail(Errc::parse, "field order must be at least 2");
  uint64_t base = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  uint32_t kk = 0;
  uint64_t v = q;
  while (v % base == 0) {
    v /= base;
    ++kk;
  }
  if (v != 1) fail(Errc::parse, std::to_string(q) + " is not a prime power");
  p = static_cast<uint32_t>(base);
  k = kk;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field FieldSpec::make(uint32_t p, uint32_t k, const Caps& caps) {
  if (!is_prime(p)) fail(Errc::invalid, std::to_string(p) + " is not prime");
  if (k < 1) fail(Errc::invalid, "field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (q > caps.field_order_cap / p) fail(Errc::cap, "field order exceeds the configured cap");
    q *= p;
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->k_ = k;
  spec->q_ = q;

  // Scan constant tuples (c0..c_{k-1}) in lex order for the first monic
  // irreducible x^k + sum c_i x^i. Irreducible means no monic divisor of
  // degree 1..k/2.
  uint64_t tuples = q;  // p^k
  Poly modulus;
  for (uint64_t rank = 0; rank < tuples; ++rank) {
    Poly f(k + 1, 0);
    f[k] = 1;
    uint64_t r = rank;
    for (uint32_t i = 0; i < k; ++i) {  // c0 is the most significant lex digit
      uint32_t digit = static_cast<uint32_t>(r % p);
      f[k - 1 - i] = digit;  // fill low-significance lex digits first
      r /= p;
    }
    // rank encodes (c_{k-1} fastest); reorder so c0 varies slowest:
    // the loop above already assigns c_{k-1} from the fastest digit.
    bool irreducible = true;
    if (f[0] == 0 && k > 1) irreducible = false;  // divisible by x
    if (irreducible) {
      uint64_t divisors = p;
      for (uint32_t d = 1; irreducible && 2 * d <= k; ++d) {
        // all monic polynomials of degree d
        for (uint64_t t = 0; t < divisors; ++t) {
          Poly g(d + 1, 0);
          g[d] = 1;
          uint64_t tt = t;
          for (uint32_t i = 0; i < d; ++i) {
            g[i] = static_cast<uint32_t>(tt % p);
            tt /= p;
          }
          if (divides(g, f, p)) {
            irreducible = false;
            break;
          }
        }
        divisors *= p;
      }
    }
    if (irreducible) {
      modulus = f;
      break;
    }
  }
  if (modulus.empty()) fail(Errc::internal, "no irreducible modulus found");
  spec->modulus_ = modulus;

  spec->neg_.resize(q);
  for (uint64_t a = 0; a < q; ++a) {
    auto c = spec->coeffs(static_cast<uint32_t>(a));
    for (auto& ci : c) ci = ci == 0 ? 0 : p - ci;
    spec->neg_[a] = spec->from_coeffs(c);
  }
  if (q <= kMulTableLimit) {
    spec->mul_table_.resize(q * q);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = a; b < q; ++b) {
        uint32_t v = spec->mul_slow(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
        spec->mul_table_[a * q + b] = v;
        spec->mul_table_[b * q + a] = v;
      }
    spec->inv_table_.assign(q, 0);
    for (uint64_t a = 1; a < q; ++a) spec->inv_table_[a] = spec->inv_slow(static_cast<uint32_t>(a));
  }
  if (q <= kAddTableLimit) {
    spec->add_table_.resize(q * q);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b) {
        auto ca = spec->coeffs(static_cast<uint32_t>(a));
        auto cb = spec->coeffs(static_cast<uint32_t>(b));
        for (uint32_t i = 0; i < k; ++i) ca[i] = (ca[i] + cb[i]) % p;
        spec->add_table_[a * q + b] = spec->from_coeffs(ca);
      }
  }
  return spec;
}

std::vector<uint32_t> FieldSpec::coeffs(uint32_t code) const {
  std::vector<uint32_t> c(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

uint32_t FieldSpec::from_coeffs(const std::vector<uint32_t>& c) const {
  uint32_t code = 0;
  for (uint32_t i = k_; i-- > 0;) code = code * p_ + c[i] % p_;
  return code;
}

uint64_t FieldSpec::lex_rank(uint32_t code) const {
  auto c = coeffs(code);
  uint64_t r = 0;
  for (uint32_t i = 0; i < k_; ++i) r = r * p_ + c[i];
  return r;
}

uint32_t FieldSpec::from_lex_rank(uint64_t rank) const {
  std::vector<uint32_t> c(k_, 0);
  for (uint32_t i = k_; i-- > 0;) {
    c[i] = static_cast<uint32_t>(rank % p_);
    rank /= p_;
  }
  return from_coeffs(c);
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
  if (!add_table_.empty()) return add_table_[uint64_t(a) * q_ + b];
  if (k_ == 1) {
    uint64_t s = uint64_t(a) + b;
    return static_cast<uint32_t>(s >= q_ ? s - q_ : s);
  }
  auto ca = coeffs(a);
  auto cb = coeffs(b);
  for (uint32_t i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(ca);
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[uint64_t(a) * q_ + b];
  return mul_slow(a, b);
}

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
  if (k_ == 1) return static_cast<uint32_t>(uint64_t(a) * b % p_);
  Poly pa = coeffs(a), pb = coeffs(b);
  trim(pa);
  trim(pb);
  Poly c = pmod(pmul(pa, pb, p_), modulus_, p_);
  c.resize(k_, 0);
  return from_coeffs(c);
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a == 0) fail(Errc::invalid, "division by zero in " + describe());
  if (!inv_table_.empty()) return inv_table_[a];
  return inv_slow(a);
}

uint32_t FieldSpec::inv_slow(uint32_t a) const {
  // a^(q-2); extended Euclid would also do, but q is capped and pow is simple
  return pow(a, q_ - 2);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  uint32_t result = one();
  uint32_t base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

uint32_t FieldSpec::frobenius(uint32_t a, uint32_t r) const {
  if (a == 0) return 0;
  // exponent p^r mod (q-1), since a^(q-1) = 1 for a != 0
  if (q_ == 2) return a;
  uint64_t e = 1;
  for (uint32_t i = 0; i < r; ++i) e = e * p_ % (q_ - 1);
  return pow(a, e);
}

uint32_t FieldSpec::primitive_element() const {
  auto factors = prime_factors(q_ - 1);
  for (uint64_t rank = 1; rank < q_; ++rank) {
    uint32_t a = from_lex_rank(rank);
    if (a == 0) continue;
    bool primitive = true;
    for (uint64_t f : factors) {
      if (pow(a, (q_ - 1) / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  fail(Errc::internal, "no primitive element found in " + describe());
}

bool FieldSpec::is_square(uint32_t a) const {
  if (p_ == 2) return true;
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

std::string FieldSpec::describe() const {
  std::ostringstream out;
  out << "GF(" << p_ << "^" << k_ << "; modulus=[";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out << ',';
    out << modulus_[i];
  }
  out << "])";
  return out.str();
}

std::string FieldSpec::format(uint32_t code) const {
  auto c = coeffs(code);
  std::ostringstream out;
  out << '[';
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) out << ',';
    out << c[i];
  }
  out << ']';
  return out.str();
}

namespace {
void check_same(const FieldElt& a, const FieldElt& b) {
  if (!a.field->same_as(*b.field)) fail(Errc::invalid, "field elements from different fields");
}
}  // namespace

FieldElt operator+(const FieldElt& a, const FieldElt& b) {
  check_same(a, b);
  return {a.field, a.field->add(a.code, b.code)};
}

FieldElt operator*(const FieldElt& a, const FieldElt& b) {
  check_same(a, b);
  return {a.field, a.field->mul(a.code, b.code)};
}

FieldElt operator-(const FieldElt& a) { return {a.field, a.field->neg(a.code)}; }

FieldElt inv(const FieldElt& a) { return {a.field, a.field->inv(a.code)}; }

FieldElt frobenius(const FieldElt& a, uint32_t r) { return {a.field, a.field->frobenius(a.code, r)}; }

}  // namespace lawforge

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "caps.hpp"
#include "common.hpp"

namespace lawforge {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// GF(p^k) in polynomial representation. Elements are passed around as packed
// codes c0 + c1*p + ... + c_{k-1}*p^{k-1}; the FieldSpec owns the modulus
// and (for small q) flat multiplication/inverse tables so the matrix kernels
// are pure table lookups.
class FieldSpec {
 public:
  // Deterministic: the modulus is the lexicographically smallest monic
  // irreducible of degree k, coefficients compared low-degree-first.
  static Field make(uint32_t p, uint32_t k, const Caps& caps = Caps());

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // fails on 0
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t frobenius(uint32_t a, uint32_t r) const;  // a^(p^r)

  uint32_t one() const { return 1 % q_; }

  // Least element of multiplicative order q-1 in coefficient-lex order.
  uint32_t primitive_element() const;

  bool is_square(uint32_t a) const;  // odd q only

  std::vector<uint32_t> coeffs(uint32_t code) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

  // Coefficient-lex order: compare c0 first, then c1, ...
  uint64_t lex_rank(uint32_t code) const;
  uint32_t from_lex_rank(uint64_t rank) const;

  std::string describe() const;              // "GF(p^k; modulus=[...])"
  std::string format(uint32_t code) const;   // "[c0,c1,...]"

  bool same_as(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  FieldSpec() = default;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;
  uint32_t inv_slow(uint32_t a) const;

  uint32_t p_ = 0, k_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;  // degree k, monic, ascending coefficients
  std::vector<uint32_t> neg_;
  std::vector<uint32_t> mul_table_;  // q*q when q <= kMulTableLimit
  std::vector<uint32_t> add_table_;  // q*q when q <= kAddTableLimit
  std::vector<uint32_t> inv_table_;

  static constexpr uint64_t kMulTableLimit = 1024;
  static constexpr uint64_t kAddTableLimit = 256;
};

// Element-with-field value for callers that want checked arithmetic.
struct FieldElt {
  Field field;
  uint32_t code = 0;

  std::string str() const { return field->format(code); }
  bool operator==(const FieldElt& o) const { return field->same_as(*o.field) && code == o.code; }
};

FieldElt operator+(const FieldElt& a, const FieldElt& b);
FieldElt operator*(const FieldElt& a, const FieldElt& b);
FieldElt operator-(const FieldElt& a);
FieldElt inv(const FieldElt& a);
FieldElt frobenius(const FieldElt& a, uint32_t r);

bool is_prime(uint64_t n);
// Writes q = p^k with p prime; fails if q is not a prime power.
void factor_prime_power(uint64_t q, uint32_t& p, uint32_t& k);
std::vector<uint64_t> prime_factors(uint64_t n);  // distinct primes

}  // namespace lawforge

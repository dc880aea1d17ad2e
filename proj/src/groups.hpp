#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "caps.hpp"
#include "common.hpp"
#include "ffield.hpp"
#include "freeword.hpp"
#include "rng.hpp"

namespace lawforge {

// Backend-specific payload: permutation image array, row-major matrix entry
// codes, a single residue, or the concatenation of factor payloads.
struct Element {
  std::vector<uint32_t> v;
  bool operator==(const Element&) const = default;
};

struct ElementHash {
  size_t operator()(const Element& e) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint32_t x : e.v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

class Group {
 public:
  virtual ~Group() = default;

  virtual std::string describe() const = 0;
  virtual uint64_t order() const = 0;
  virtual size_t payload_size() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  // Streams every element exactly once in a fixed deterministic order.
  // Callers are responsible for cap checks (see elements()).
  virtual void for_each(const std::function<void(const Element&)>& fn) const = 0;
  virtual Element sample(Rng& rng) const;
  virtual std::string format(const Element& e) const = 0;

  bool is_identity(const Element& e) const { return e == identity(); }
  Element power(const Element& g, int64_t e) const;
  uint64_t element_order(const Element& g) const;
  std::vector<Element> elements(uint64_t cap) const;
  void check_payload(const Element& e) const;  // rejects backend mismatches

 protected:
  // Cache for index-based sampling of backends without a direct sampler.
  mutable std::vector<Element> sample_cache_;
  mutable std::once_flag sample_once_;

 private:
  mutable std::vector<uint64_t> order_factors_;
  mutable std::once_flag factors_once_;
};

using GroupPtr = std::shared_ptr<const Group>;

enum class MatrixKind : uint8_t { GL, SL, GU, SU, Sp, SOplus, SOminus, SOcircle };

class MatrixGroup final : public Group {
 public:
  // q0 is the field order named in the descriptor. Unitary kinds live over
  // GF(q0^2); all others over GF(q0).
  MatrixGroup(MatrixKind kind, uint32_t n, uint64_t q0, const Caps& caps);

  std::string describe() const override;
  uint64_t order() const override;
  size_t payload_size() const override { return size_t(n_) * n_; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  void for_each(const std::function<void(const Element&)>& fn) const override;
  std::string format(const Element& e) const override;

  MatrixKind kind() const { return kind_; }
  uint32_t dim() const { return n_; }
  Field field() const { return field_; }  // entry field
  uint64_t base_q() const { return q0_; }
  bool unitary() const { return kind_ == MatrixKind::GU || kind_ == MatrixKind::SU; }
  bool det_one() const { return det_one_; }
  uint32_t conj_entry(uint32_t code) const;  // x -> x^q0, identity when not unitary
  const std::vector<uint32_t>& form() const { return form_; }

  bool contains(const Element& e) const;
  uint32_t det(const Element& e) const;

 private:
  MatrixKind kind_;
  uint32_t n_;
  uint64_t q0_;
  Field field_;
  bool det_one_;
  uint32_t frob_power_ = 0;        // conj = frobenius(., frob_power_) for unitary
  std::vector<uint32_t> form_;     // bilinear form matrix, row-major; empty for GL/SL/GU/SU
  bool alternating_ = false;       // skip the diagonal form constraint (symplectic)
  bool hermitian_ = false;
};

// Projective quotient: elements are matrices canonicalized by the scalar
// that lex-minimizes the first nonzero entry.
GroupPtr make_projective(std::shared_ptr<const MatrixGroup> inner, const Caps& caps);

GroupPtr make_cyclic(uint64_t n);
GroupPtr make_sym(uint32_t n, bool alternating);
GroupPtr make_matrix(MatrixKind kind, uint32_t n, uint64_t q0, const Caps& caps);
GroupPtr make_product(std::vector<GroupPtr> factors);
// Materializes the subgroup generated by gens inside parent (closure BFS).
GroupPtr make_subgroup(GroupPtr parent, const std::vector<Element>& gens, const Caps& caps,
                       const std::string& label = "");

// Descriptor grammar: C(n) | Sym(n) | Alt(n) | GL(n,q) | SL(n,q) | GU(n,q) |
// SU(n,q) | Sp(n,q) | SOplus(n,q) | SOminus(n,q) | SOcircle(n,q) | P<matrix>
// and products joined with 'x', e.g. "PSL(2,4)xC(3)".
// For unitary kinds q names the fixed field: SU(3,3) acts on GF(9)^3.
GroupPtr parse_group(const std::string& text, const Caps& caps);

std::vector<Element> closure(const Group& g, const std::vector<Element>& gens, uint64_t cap);
bool is_generating_pair(const Group& g, const Element& a, const Element& b, const Caps& caps);
Element evaluate(const Word& w, const Group& g, const Element& a, const Element& b);

}  // namespace lawforge

#include "groups.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lawforge {

namespace {

uint64_t mulck(uint64_t a, uint64_t b) {
  __uint128_t r = static_cast<__uint128_t>(a) * b;
  if (r > UINT64_MAX) fail(Errc::cap, "group order overflows 64 bits");
  return static_cast<uint64_t>(r);
}

uint64_t powck(uint64_t a, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r = mulck(r, a);
  return r;
}

using Mat = std::vector<uint32_t>;  // row-major payload
using Vec = std::vector<uint32_t>;

Mat mat_identity(const FieldSpec& F, uint32_t n) {
  Mat m(size_t(n) * n, 0);
  for (uint32_t i = 0; i < n; ++i) m[size_t(i) * n + i] = F.one();
  return m;
}

Mat mat_mul(const FieldSpec& F, uint32_t n, const Mat& a, const Mat& b) {
  Mat c(size_t(n) * n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t k = 0; k < n; ++k) {
      uint32_t aik = a[size_t(i) * n + k];
      if (aik == 0) continue;
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t t = F.mul(aik, b[size_t(k) * n + j]);
        c[size_t(i) * n + j] = F.add(c[size_t(i) * n + j], t);
      }
    }
  return c;
}

uint32_t mat_det(const FieldSpec& F, uint32_t n, Mat m) {
  uint32_t det = F.one();
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t pivot = col;
    while (pivot < n && m[size_t(pivot) * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (uint32_t j = 0; j < n; ++j) std::swap(m[size_t(pivot) * n + j], m[size_t(col) * n + j]);
      det = F.neg(det);
    }
    uint32_t d = m[size_t(col) * n + col];
    det = F.mul(det, d);
    uint32_t dinv = F.inv(d);
    for (uint32_t r = col + 1; r < n; ++r) {
      uint32_t f = m[size_t(r) * n + col];
      if (f == 0) continue;
      uint32_t scale = F.mul(f, dinv);
      for (uint32_t j = col; j < n; ++j) {
        uint32_t t = F.mul(scale, m[size_t(col) * n + j]);
        m[size_t(r) * n + j] = F.sub(m[size_t(r) * n + j], t);
      }
    }
  }
  return det;
}

Mat mat_inv(const FieldSpec& F, uint32_t n, Mat m) {
  Mat out = mat_identity(F, n);
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t pivot = col;
    while (pivot < n && m[size_t(pivot) * n + col] == 0) ++pivot;
    if (pivot == n) fail(Errc::invalid, "singular matrix");
    if (pivot != col)
      for (uint32_t j = 0; j < n; ++j) {
        std::swap(m[size_t(pivot) * n + j], m[size_t(col) * n + j]);
        std::swap(out[size_t(pivot) * n + j], out[size_t(col) * n + j]);
      }
    uint32_t dinv = F.inv(m[size_t(col) * n + col]);
    for (uint32_t j = 0; j < n; ++j) {
      m[size_t(col) * n + j] = F.mul(m[size_t(col) * n + j], dinv);
      out[size_t(col) * n + j] = F.mul(out[size_t(col) * n + j], dinv);
    }
    for (uint32_t r = 0; r < n; ++r) {
      if (r == col) continue;
      uint32_t f = m[size_t(r) * n + col];
      if (f == 0) continue;
      for (uint32_t j = 0; j < n; ++j) {
        m[size_t(r) * n + j] = F.sub(m[size_t(r) * n + j], F.mul(f, m[size_t(col) * n + j]));
        out[size_t(r) * n + j] = F.sub(out[size_t(r) * n + j], F.mul(f, out[size_t(col) * n + j]));
      }
    }
  }
  return out;
}

// Reduced-echelon membership tracker for the column-extension enumeration.
struct Echelon {
  const FieldSpec& F;
  uint32_t n;
  std::vector<Vec> rows;
  std::vector<uint32_t> pivots;

  explicit Echelon(const FieldSpec& f, uint32_t dim) : F(f), n(dim) {}

  void reduce(Vec& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t f = v[pivots[r]];
      if (f == 0) continue;
      for (uint32_t j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(f, rows[r][j]));
    }
  }

  bool independent(Vec v) const {
    reduce(v);
    return std::any_of(v.begin(), v.end(), [](uint32_t c) { return c != 0; });
  }

  // Returns false (unchanged) when v is dependent.
  bool add(Vec v) {
    reduce(v);
    uint32_t piv = n;
    for (uint32_t j = 0; j < n; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == n) return false;
    uint32_t dinv = F.inv(v[piv]);
    for (uint32_t j = 0; j < n; ++j) v[j] = F.mul(v[j], dinv);
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t f = rows[r][piv];
      if (f == 0) continue;
      for (uint32_t j = 0; j < n; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

// Solves rows * w = rhs; reports the affine solution set.
struct AffineSolutions {
  bool consistent = true;
  Vec particular;
  std::vector<Vec> basis;  // nullspace
};

AffineSolutions solve_affine(const FieldSpec& F, uint32_t n, std::vector<Vec> rows, Vec rhs) {
  AffineSolutions out;
  size_t m = rows.size();
  std::vector<uint32_t> pivot_col;
  size_t rank = 0;
  for (uint32_t col = 0; col < n && rank < m; ++col) {
    size_t pr = rank;
    while (pr < m && rows[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(rows[pr], rows[rank]);
    std::swap(rhs[pr], rhs[rank]);
    uint32_t dinv = F.inv(rows[rank][col]);
    for (uint32_t j = 0; j < n; ++j) rows[rank][j] = F.mul(rows[rank][j], dinv);
    rhs[rank] = F.mul(rhs[rank], dinv);
    for (size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      uint32_t f = rows[r][col];
      if (f == 0) continue;
      for (uint32_t j = 0; j < n; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
      rhs[r] = F.sub(rhs[r], F.mul(f, rhs[rank]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < m; ++r)
    if (rhs[r] != 0) {
      out.consistent = false;
      return out;
    }
  std::vector<bool> is_pivot(n, false);
  for (uint32_t c : pivot_col) is_pivot[c] = true;
  out.particular.assign(n, 0);
  for (size_t r = 0; r < rank; ++r) out.particular[pivot_col[r]] = rhs[r];
  for (uint32_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec b(n, 0);
    b[c] = F.one();
    for (size_t r = 0; r < rank; ++r) b[pivot_col[r]] = F.neg(rows[r][c]);
    out.basis.push_back(std::move(b));
  }
  return out;
}

}  // namespace

void Group::check_payload(const Element& e) const {
  if (e.v.size() != payload_size())
    fail(Errc::invalid, "element payload does not match " + describe());
}

Element Group::power(const Element& g, int64_t e) const {
  Element base = e < 0 ? inv(g) : g;
  uint64_t n = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  Element result = identity();
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

uint64_t Group::element_order(const Element& g) const {
  std::call_once(factors_once_, [&] { order_factors_ = prime_factors(order()); });
  uint64_t e = order();
  Element id = identity();
  for (uint64_t p : order_factors_) {
    while (e % p == 0 && power(g, static_cast<int64_t>(e / p)) == id) e /= p;
  }
  return e;
}

std::vector<Element> Group::elements(uint64_t cap) const {
  if (order() > cap) fail(Errc::cap, describe() + " has order " + std::to_string(order()) + " beyond the cap " + std::to_string(cap));
  std::vector<Element> out;
  out.reserve(order());
  for_each([&](const Element& e) { out.push_back(e); });
  if (out.size() != order())
    fail(Errc::internal, describe() + ": enumeration produced " + std::to_string(out.size()) + " of " + std::to_string(order()) + " elements");
  return out;
}

Element Group::sample(Rng& rng) const {
  std::call_once(sample_once_, [&] { sample_cache_ = elements(Caps().enumeration_cap); });
  return sample_cache_[rng.below(sample_cache_.size())];
}

// ---------------------------------------------------------------------------
// cyclic

namespace {

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(uint64_t n) : n_(n) {
    if (n == 0 || n > UINT32_MAX) fail(Errc::invalid, "cyclic order out of range");
  }
  std::string describe() const override { return "C(" + std::to_string(n_) + ")"; }
  uint64_t order() const override { return n_; }
  size_t payload_size() const override { return 1; }
  Element identity() const override { return Element{{0}}; }
  Element mul(const Element& a, const Element& b) const override {
    uint64_t s = uint64_t(a.v[0]) + b.v[0];
    return Element{{static_cast<uint32_t>(s >= n_ ? s - n_ : s)}};
  }
  Element inv(const Element& a) const override {
    return Element{{a.v[0] == 0 ? 0u : static_cast<uint32_t>(n_ - a.v[0])}};
  }
  void for_each(const std::function<void(const Element&)>& fn) const override {
    for (uint64_t r = 0; r < n_; ++r) fn(Element{{static_cast<uint32_t>(r)}});
  }
  Element sample(Rng& rng) const override { return Element{{static_cast<uint32_t>(rng.below(n_))}}; }
  std::string format(const Element& e) const override { return std::to_string(e.v[0]); }

 private:
  uint64_t n_;
};

// ---------------------------------------------------------------------------
// permutations

bool perm_even(const std::vector<uint32_t>& img) {
  uint32_t inversions = 0;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inversions;
  return (inversions & 1) == 0;
}

class PermGroup final : public Group {
 public:
  PermGroup(uint32_t n, bool alternating) : n_(n), alt_(alternating) {
    if (n < 1 || n > 20) fail(Errc::unsupported, "Sym/Alt degree must be in 1..20");
  }
  std::string describe() const override {
    return (alt_ ? "Alt(" : "Sym(") + std::to_string(n_) + ")";
  }
  uint64_t order() const override {
    uint64_t f = 1;
    for (uint32_t i = 2; i <= n_; ++i) f *= i;
    return alt_ && n_ >= 2 ? f / 2 : f;
  }
  size_t payload_size() const override { return n_; }
  Element identity() const override {
    Element e;
    e.v.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) e.v[i] = i;
    return e;
  }
  Element mul(const Element& a, const Element& b) const override {
    Element c;
    c.v.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) c.v[i] = a.v[b.v[i]];
    return c;
  }
  Element inv(const Element& a) const override {
    Element c;
    c.v.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) c.v[a.v[i]] = i;
    return c;
  }
  void for_each(const std::function<void(const Element&)>& fn) const override {
    Element e = identity();
    do {
      if (!alt_ || perm_even(e.v)) fn(e);
    } while (std::next_permutation(e.v.begin(), e.v.end()));
  }
  Element sample(Rng& rng) const override {
    Element e = identity();
    for (uint32_t i = n_; i > 1; --i) std::swap(e.v[i - 1], e.v[rng.below(i)]);
    if (alt_ && n_ >= 2 && !perm_even(e.v)) std::swap(e.v[0], e.v[1]);
    return e;
  }
  std::string format(const Element& e) const override {
    std::ostringstream out;
    out << '[';
    for (uint32_t i = 0; i < n_; ++i) {
      if (i) out << ' ';
      out << e.v[i];
    }
    out << ']';
    return out.str();
  }

 private:
  uint32_t n_;
  bool alt_;
};

}  // namespace

// ---------------------------------------------------------------------------
// matrix groups

MatrixGroup::MatrixGroup(MatrixKind kind, uint32_t n, uint64_t q0, const Caps& caps)
    : kind_(kind), n_(n), q0_(q0) {
  if (n < 1 || n > 16) fail(Errc::unsupported, "matrix dimension must be in 1..16");
  uint32_t p = 0, k = 0;
  factor_prime_power(q0, p, k);
  switch (kind) {
    case MatrixKind::GL:
      det_one_ = false;
      break;
    case MatrixKind::SL:
      det_one_ = true;
      break;
    case MatrixKind::GU:
    case MatrixKind::SU:
      det_one_ = (kind == MatrixKind::SU);
      hermitian_ = true;
      frob_power_ = k;
      break;
    case MatrixKind::Sp:
      if (n % 2) fail(Errc::invalid, "Sp needs even dimension");
      det_one_ = true;  // symplectic matrices have determinant 1
      alternating_ = true;
      break;
    case MatrixKind::SOplus:
    case MatrixKind::SOminus:
      if (n % 2) fail(Errc::invalid, "SOplus/SOminus need even dimension");
      if (p == 2) fail(Errc::unsupported, "orthogonal backends require odd characteristic");
      det_one_ = true;
      break;
    case MatrixKind::SOcircle:
      if (n % 2 == 0) fail(Errc::invalid, "SOcircle needs odd dimension");
      if (p == 2) fail(Errc::unsupported, "orthogonal backends require odd characteristic");
      det_one_ = true;
      break;
  }
  field_ = FieldSpec::make(p, unitary() ? 2 * k : k, caps);
  const FieldSpec& F = *field_;

  if (alternating_) {
    form_.assign(size_t(n) * n, 0);
    for (uint32_t i = 0; i < n / 2; ++i) form_[size_t(i) * n + (n - 1 - i)] = F.one();
    for (uint32_t i = n / 2; i < n; ++i) form_[size_t(i) * n + (n - 1 - i)] = F.neg(F.one());
  } else if (kind == MatrixKind::SOplus) {
    uint32_t l = n / 2;
    form_.assign(size_t(n) * n, 0);
    for (uint32_t i = 0; i < l; ++i) {
      form_[size_t(i) * n + l + i] = F.one();
      form_[size_t(l + i) * n + i] = F.one();
    }
  } else if (kind == MatrixKind::SOminus) {
    uint32_t l = n / 2;
    form_.assign(size_t(n) * n, 0);
    for (uint32_t i = 0; i + 1 < l; ++i) {
      form_[size_t(i) * n + (l - 1 + i)] = F.one();
      form_[size_t(l - 1 + i) * n + i] = F.one();
    }
    form_[size_t(n - 2) * n + (n - 2)] = F.one();
    // gamma with -gamma a non-square, so the trailing plane is anisotropic;
    // for q = 1 mod 4 this is the least non-square itself
    uint32_t gamma = 0;
    for (uint64_t rank = 1; rank < F.q(); ++rank) {
      uint32_t g = F.from_lex_rank(rank);
      if (!F.is_square(F.neg(g))) {
        gamma = g;
        break;
      }
    }
    if (gamma == 0) fail(Errc::internal, "no anisotropic scalar found");
    form_[size_t(n - 1) * n + (n - 1)] = gamma;
  } else if (kind == MatrixKind::SOcircle) {
    uint32_t l = (n - 1) / 2;
    form_.assign(size_t(n) * n, 0);
    for (uint32_t i = 0; i < l; ++i) {
      form_[size_t(i) * n + l + i] = F.one();
      form_[size_t(l + i) * n + i] = F.one();
    }
    form_[size_t(n - 1) * n + (n - 1)] = F.one();
  }
}

uint32_t MatrixGroup::conj_entry(uint32_t code) const {
  return unitary() ? field_->frobenius(code, frob_power_) : code;
}

std::string MatrixGroup::describe() const {
  const char* name = nullptr;
  switch (kind_) {
    case MatrixKind::GL: name = "GL"; break;
    case MatrixKind::SL: name = "SL"; break;
    case MatrixKind::GU: name = "GU"; break;
    case MatrixKind::SU: name = "SU"; break;
    case MatrixKind::Sp: name = "Sp"; break;
    case MatrixKind::SOplus: name = "SOplus"; break;
    case MatrixKind::SOminus: name = "SOminus"; break;
    case MatrixKind::SOcircle: name = "SOcircle"; break;
  }
  return std::string(name) + "(" + std::to_string(n_) + "," + std::to_string(q0_) + ")";
}

uint64_t MatrixGroup::order() const {
  uint64_t q = q0_;
  switch (kind_) {
    case MatrixKind::GL:
    case MatrixKind::SL: {
      uint64_t qn = powck(q, n_);
      uint64_t o = 1;
      uint64_t qi = 1;
      for (uint32_t i = 0; i < n_; ++i) {
        o = mulck(o, qn - qi);
        qi = mulck(qi, q);
      }
      return kind_ == MatrixKind::SL ? o / (q - 1) : o;
    }
    case MatrixKind::GU:
    case MatrixKind::SU: {
      uint64_t o = powck(q, n_ * (n_ - 1) / 2);
      for (uint32_t i = 1; i <= n_; ++i) {
        uint64_t qi = powck(q, i);
        o = mulck(o, i % 2 ? qi + 1 : qi - 1);
      }
      return kind_ == MatrixKind::SU ? o / (q + 1) : o;
    }
    case MatrixKind::Sp: {
      uint32_t m = n_ / 2;
      uint64_t o = powck(q, m * m);
      for (uint32_t i = 1; i <= m; ++i) o = mulck(o, powck(q, 2 * i) - 1);
      return o;
    }
    case MatrixKind::SOcircle: {
      uint32_t m = (n_ - 1) / 2;
      uint64_t o = powck(q, m * m);
      for (uint32_t i = 1; i <= m; ++i) o = mulck(o, powck(q, 2 * i) - 1);
      return o;
    }
    case MatrixKind::SOplus:
    case MatrixKind::SOminus: {
      uint32_t m = n_ / 2;
      uint64_t o = powck(q, m * (m - 1));
      uint64_t qm = powck(q, m);
      o = mulck(o, kind_ == MatrixKind::SOplus ? qm - 1 : qm + 1);
      for (uint32_t i = 1; i < m; ++i) o = mulck(o, powck(q, 2 * i) - 1);
      return o;
    }
  }
  fail(Errc::internal, "unreachable");
}

Element MatrixGroup::identity() const { return Element{mat_identity(*field_, n_)}; }

Element MatrixGroup::mul(const Element& a, const Element& b) const {
  return Element{mat_mul(*field_, n_, a.v, b.v)};
}

Element MatrixGroup::inv(const Element& a) const { return Element{mat_inv(*field_, n_, a.v)}; }

uint32_t MatrixGroup::det(const Element& e) const { return mat_det(*field_, n_, e.v); }

bool MatrixGroup::contains(const Element& e) const {
  if (e.v.size() != payload_size()) return false;
  const FieldSpec& F = *field_;
  if (hermitian_) {
    // conj(M)^T M = I
    for (uint32_t i = 0; i < n_; ++i)
      for (uint32_t j = 0; j < n_; ++j) {
        uint32_t s = 0;
        for (uint32_t t = 0; t < n_; ++t)
          s = F.add(s, F.mul(conj_entry(e.v[size_t(t) * n_ + i]), e.v[size_t(t) * n_ + j]));
        if (s != (i == j ? F.one() : 0u)) return false;
      }
  } else if (!form_.empty()) {
    // M^T C M = C
    for (uint32_t i = 0; i < n_; ++i)
      for (uint32_t j = 0; j < n_; ++j) {
        uint32_t s = 0;
        for (uint32_t a = 0; a < n_; ++a) {
          uint32_t mai = e.v[size_t(a) * n_ + i];
          if (mai == 0) continue;
          for (uint32_t b = 0; b < n_; ++b)
            s = F.add(s, F.mul(F.mul(mai, form_[size_t(a) * n_ + b]), e.v[size_t(b) * n_ + j]));
        }
        if (s != form_[size_t(i) * n_ + j]) return false;
      }
  }
  uint32_t d = mat_det(*field_, n_, e.v);
  if (det_one_) return d == F.one();
  return d != 0;
}

void MatrixGroup::for_each(const std::function<void(const Element&)>& fn) const {
  const FieldSpec& F = *field_;
  uint32_t n = n_;
  std::vector<Vec> cols;
  cols.reserve(n);
  Echelon ech(F, n);

  // Gram target between columns i and j.
  auto gram = [&](uint32_t i, uint32_t j) -> uint32_t {
    if (hermitian_) return i == j ? F.one() : 0u;
    return form_[size_t(i) * n + j];
  };
  auto bform = [&](const Vec& u, const Vec& w) -> uint32_t {
    uint32_t s = 0;
    if (hermitian_) {
      for (uint32_t t = 0; t < n; ++t) s = F.add(s, F.mul(conj_entry(u[t]), w[t]));
      return s;
    }
    for (uint32_t a = 0; a < n; ++a) {
      if (u[a] == 0) continue;
      uint32_t row = 0;
      for (uint32_t b = 0; b < n; ++b) row = F.add(row, F.mul(form_[size_t(a) * n + b], w[b]));
      s = F.add(s, F.mul(u[a], row));
    }
    return s;
  };

  bool formed = hermitian_ || !form_.empty();

  std::function<void()> descend = [&]() {
    uint32_t j = static_cast<uint32_t>(cols.size());
    if (j == n) {
      Mat m(size_t(n) * n);
      for (uint32_t c = 0; c < n; ++c)
        for (uint32_t r = 0; r < n; ++r) m[size_t(r) * n + c] = cols[c][r];
      if (det_one_ && mat_det(F, n, m) != F.one()) return;
      fn(Element{std::move(m)});
      return;
    }
    auto try_candidate = [&](const Vec& w) {
      if (formed && !alternating_ && bform(w, w) != gram(j, j)) return;
      if (!ech.independent(w)) return;
      auto saved_rows = ech.rows;
      auto saved_pivots = ech.pivots;
      ech.add(w);
      cols.push_back(w);
      descend();
      cols.pop_back();
      ech.rows = std::move(saved_rows);
      ech.pivots = std::move(saved_pivots);
    };

    if (!formed || j == 0) {
      // no linear pairing constraints yet; scan the whole space
      Vec w(n, 0);
      uint64_t total = 1;
      for (uint32_t i = 0; i < n; ++i) total *= F.q();
      for (uint64_t t = 0; t < total; ++t) {
        uint64_t v = t;
        for (uint32_t i = n; i-- > 0;) {
          w[i] = static_cast<uint32_t>(v % F.q());
          v /= F.q();
        }
        try_candidate(w);
      }
      return;
    }

    // j >= 1 with a form: solve the linear pairing constraints.
    std::vector<Vec> rows;
    Vec rhs;
    rows.reserve(j);
    for (uint32_t i = 0; i < j; ++i) {
      Vec row(n, 0);
      if (hermitian_) {
        for (uint32_t t = 0; t < n; ++t) row[t] = conj_entry(cols[i][t]);
      } else {
        for (uint32_t t = 0; t < n; ++t) {
          uint32_t s = 0;
          for (uint32_t b = 0; b < n; ++b) s = F.add(s, F.mul(cols[i][b], form_[size_t(b) * n + t]));
          row[t] = s;
        }
      }
      rows.push_back(std::move(row));
      rhs.push_back(gram(i, j));
    }
    AffineSolutions sol = solve_affine(F, n, std::move(rows), std::move(rhs));
    if (!sol.consistent) return;
    size_t dim = sol.basis.size();
    uint64_t combos = 1;
    for (size_t i = 0; i < dim; ++i) combos *= F.q();
    Vec w(n);
    for (uint64_t t = 0; t < combos; ++t) {
      w = sol.particular;
      uint64_t v = t;
      for (size_t i = dim; i-- > 0;) {
        uint32_t coef = static_cast<uint32_t>(v % F.q());
        v /= F.q();
        if (coef != 0)
          for (uint32_t s = 0; s < n; ++s) w[s] = F.add(w[s], F.mul(coef, sol.basis[i][s]));
      }
      try_candidate(w);
    }
  };
  descend();
}

std::string MatrixGroup::format(const Element& e) const {
  std::ostringstream out;
  out << '[';
  for (uint32_t i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << '[';
    for (uint32_t j = 0; j < n_; ++j) {
      if (j) out << ',';
      if (field_->k() == 1)
        out << e.v[size_t(i) * n_ + j];
      else
        out << field_->format(e.v[size_t(i) * n_ + j]);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// projective quotient

namespace {

class ProjectiveGroup final : public Group {
 public:
  ProjectiveGroup(std::shared_ptr<const MatrixGroup> inner, const Caps& caps) : inner_(std::move(inner)) {
    (void)caps;
    const FieldSpec& F = *inner_->field();
    uint32_t n = inner_->dim();
    for (uint64_t code = 1; code < F.q(); ++code) {
      Element scalar{Mat(size_t(n) * n, 0)};
      for (uint32_t i = 0; i < n; ++i) scalar.v[size_t(i) * n + i] = static_cast<uint32_t>(code);
      if (inner_->contains(scalar)) scalars_.push_back(static_cast<uint32_t>(code));
    }
    identity_ = canon(inner_->identity());
  }

  std::string describe() const override { return "P" + inner_->describe(); }
  uint64_t order() const override { return inner_->order() / scalars_.size(); }
  size_t payload_size() const override { return inner_->payload_size(); }
  Element identity() const override { return identity_; }
  Element mul(const Element& a, const Element& b) const override { return canon(inner_->mul(a, b)); }
  Element inv(const Element& a) const override { return canon(inner_->inv(a)); }
  void for_each(const std::function<void(const Element&)>& fn) const override {
    std::unordered_set<Element, ElementHash> seen;
    seen.reserve(order() * 2);
    inner_->for_each([&](const Element& e) {
      Element c = canon(e);
      if (seen.insert(c).second) fn(c);
    });
  }
  std::string format(const Element& e) const override { return "P" + inner_->format(e); }

  Element canon(Element m) const {
    const FieldSpec& F = *inner_->field();
    uint32_t first = 0;
    for (uint32_t v : m.v)
      if (v != 0) {
        first = v;
        break;
      }
    uint32_t best_scalar = scalars_[0];
    uint64_t best_rank = F.lex_rank(F.mul(best_scalar, first));
    for (size_t i = 1; i < scalars_.size(); ++i) {
      uint64_t r = F.lex_rank(F.mul(scalars_[i], first));
      if (r < best_rank) {
        best_rank = r;
        best_scalar = scalars_[i];
      }
    }
    if (best_scalar != F.one())
      for (uint32_t& v : m.v) v = F.mul(best_scalar, v);
    return m;
  }

  const MatrixGroup& inner() const { return *inner_; }
  size_t scalar_count() const { return scalars_.size(); }

 private:
  std::shared_ptr<const MatrixGroup> inner_;
  std::vector<uint32_t> scalars_;
  Element identity_;
};

// ---------------------------------------------------------------------------
// direct products

class ProductGroup final : public Group {
 public:
  explicit ProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
    offsets_.push_back(0);
    for (const auto& f : factors_) offsets_.push_back(offsets_.back() + f->payload_size());
  }
  std::string describe() const override {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += factors_[i]->describe();
    }
    return s;
  }
  uint64_t order() const override {
    uint64_t o = 1;
    for (const auto& f : factors_) o = mulck(o, f->order());
    return o;
  }
  size_t payload_size() const override { return offsets_.back(); }
  Element identity() const override {
    Element e;
    for (const auto& f : factors_) {
      Element fe = f->identity();
      e.v.insert(e.v.end(), fe.v.begin(), fe.v.end());
    }
    return e;
  }
  Element mul(const Element& a, const Element& b) const override {
    Element out;
    out.v.reserve(payload_size());
    for (size_t i = 0; i < factors_.size(); ++i) {
      Element fa = slice(a, i), fb = slice(b, i);
      Element fc = factors_[i]->mul(fa, fb);
      out.v.insert(out.v.end(), fc.v.begin(), fc.v.end());
    }
    return out;
  }
  Element inv(const Element& a) const override {
    Element out;
    out.v.reserve(payload_size());
    for (size_t i = 0; i < factors_.size(); ++i) {
      Element fc = factors_[i]->inv(slice(a, i));
      out.v.insert(out.v.end(), fc.v.begin(), fc.v.end());
    }
    return out;
  }
  void for_each(const std::function<void(const Element&)>& fn) const override {
    std::vector<std::vector<Element>> parts;
    for (const auto& f : factors_) parts.push_back(f->elements(UINT64_MAX));
    std::vector<size_t> idx(factors_.size(), 0);
    for (;;) {
      Element e;
      e.v.reserve(payload_size());
      for (size_t i = 0; i < factors_.size(); ++i)
        e.v.insert(e.v.end(), parts[i][idx[i]].v.begin(), parts[i][idx[i]].v.end());
      fn(e);
      size_t pos = factors_.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < parts[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return;
      }
    }
  }
  Element sample(Rng& rng) const override {
    Element e;
    for (const auto& f : factors_) {
      Element fe = f->sample(rng);
      e.v.insert(e.v.end(), fe.v.begin(), fe.v.end());
    }
    return e;
  }
  std::string format(const Element& e) const override {
    std::string s = "(";
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "|";
      s += factors_[i]->format(slice(e, i));
    }
    return s + ")";
  }

 private:
  Element slice(const Element& e, size_t i) const {
    Element out;
    out.v.assign(e.v.begin() + offsets_[i], e.v.begin() + offsets_[i + 1]);
    return out;
  }
  std::vector<GroupPtr> factors_;
  std::vector<size_t> offsets_;
};

// ---------------------------------------------------------------------------
// materialized subgroups (closure of a generating set)

class SubgroupGroup final : public Group {
 public:
  SubgroupGroup(GroupPtr parent, std::vector<Element> elems, std::string label)
      : parent_(std::move(parent)), elems_(std::move(elems)), label_(std::move(label)) {}
  std::string describe() const override {
    if (!label_.empty()) return label_;
    return "Subgroup(" + parent_->describe() + ",order=" + std::to_string(elems_.size()) + ")";
  }
  uint64_t order() const override { return elems_.size(); }
  size_t payload_size() const override { return parent_->payload_size(); }
  Element identity() const override { return parent_->identity(); }
  Element mul(const Element& a, const Element& b) const override { return parent_->mul(a, b); }
  Element inv(const Element& a) const override { return parent_->inv(a); }
  void for_each(const std::function<void(const Element&)>& fn) const override {
    for (const Element& e : elems_) fn(e);
  }
  Element sample(Rng& rng) const override { return elems_[rng.below(elems_.size())]; }
  std::string format(const Element& e) const override { return parent_->format(e); }

 private:
  GroupPtr parent_;
  std::vector<Element> elems_;
  std::string label_;
};

}  // namespace

GroupPtr make_cyclic(uint64_t n) { return std::make_shared<CyclicGroup>(n); }

GroupPtr make_sym(uint32_t n, bool alternating) { return std::make_shared<PermGroup>(n, alternating); }

GroupPtr make_matrix(MatrixKind kind, uint32_t n, uint64_t q0, const Caps& caps) {
  return std::make_shared<MatrixGroup>(kind, n, q0, caps);
}

GroupPtr make_projective(std::shared_ptr<const MatrixGroup> inner, const Caps& caps) {
  return std::make_shared<ProjectiveGroup>(std::move(inner), caps);
}

GroupPtr make_product(std::vector<GroupPtr> factors) {
  if (factors.empty()) fail(Errc::invalid, "empty product");
  if (factors.size() == 1) return factors[0];
  return std::make_shared<ProductGroup>(std::move(factors));
}

GroupPtr make_subgroup(GroupPtr parent, const std::vector<Element>& gens, const Caps& caps,
                       const std::string& label) {
  std::vector<Element> elems = closure(*parent, gens, caps.closure_cap);
  return std::make_shared<SubgroupGroup>(std::move(parent), std::move(elems), label);
}

std::vector<Element> closure(const Group& g, const std::vector<Element>& gens, uint64_t cap) {
  std::vector<Element> step;
  for (const Element& e : gens) {
    g.check_payload(e);
    step.push_back(e);
    Element ei = g.inv(e);
    if (ei != e) step.push_back(ei);
  }
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  out.push_back(g.identity());
  seen.insert(out.back());
  for (size_t qi = 0; qi < out.size(); ++qi) {
    for (const Element& s : step) {
      Element next = g.mul(out[qi], s);
      if (seen.insert(next).second) {
        if (out.size() >= cap) fail(Errc::cap, "closure exceeds the cap " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

bool is_generating_pair(const Group& g, const Element& a, const Element& b, const Caps& caps) {
  return closure(g, {a, b}, caps.closure_cap).size() == g.order();
}

Element evaluate(const Word& w, const Group& g, const Element& a, const Element& b) {
  g.check_payload(a);
  g.check_payload(b);
  Element acc = g.identity();
  for (const Word::Block& blk : w.blocks()) {
    const Element& base = blk.gen == Gen::x ? a : b;
    acc = g.mul(acc, g.power(base, blk.exp));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// descriptor parsing

namespace {

GroupPtr parse_atom(const std::string& text, const Caps& caps) {
  size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    fail(Errc::parse, "bad group descriptor '" + text + "'");
  std::string name = text.substr(0, open);
  std::string args = text.substr(open + 1, text.size() - open - 2);
  std::vector<uint64_t> nums;
  std::istringstream in(args);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(Errc::parse, "bad numeric argument in '" + text + "'");
    try {
      nums.push_back(std::stoull(part));
    } catch (const std::exception&) {
      fail(Errc::parse, "bad numeric argument in '" + text + "'");
    }
  }
  auto need = [&](size_t n) {
    if (nums.size() != n) fail(Errc::parse, "'" + name + "' expects " + std::to_string(n) + " argument(s)");
  };
  if (name == "C") {
    need(1);
    return make_cyclic(nums[0]);
  }
  if (name == "Sym" || name == "Alt") {
    need(1);
    if (nums[0] > 20) fail(Errc::unsupported, "Sym/Alt degree must be in 1..20");
    return make_sym(static_cast<uint32_t>(nums[0]), name == "Alt");
  }
  bool projective = false;
  std::string kind_name = name;
  if (!kind_name.empty() && kind_name[0] == 'P') {
    projective = true;
    kind_name = kind_name.substr(1);
  }
  MatrixKind kind;
  if (kind_name == "GL")
    kind = MatrixKind::GL;
  else if (kind_name == "SL")
    kind = MatrixKind::SL;
  else if (kind_name == "GU")
    kind = MatrixKind::GU;
  else if (kind_name == "SU")
    kind = MatrixKind::SU;
  else if (kind_name == "Sp")
    kind = MatrixKind::Sp;
  else if (kind_name == "SOplus")
    kind = MatrixKind::SOplus;
  else if (kind_name == "SOminus")
    kind = MatrixKind::SOminus;
  else if (kind_name == "SOcircle")
    kind = MatrixKind::SOcircle;
  else
    fail(Errc::parse, "unknown group family '" + name + "'");
  need(2);
  if (nums[0] > 16) fail(Errc::unsupported, "matrix dimension must be in 1..16");
  auto inner = std::make_shared<MatrixGroup>(kind, static_cast<uint32_t>(nums[0]), nums[1], caps);
  if (projective) return make_projective(inner, caps);
  return inner;
}

}  // namespace

GroupPtr parse_group(const std::string& text, const Caps& caps) {
  std::vector<std::string> atoms;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0 && !cur.empty() && cur.back() == ')') {
      atoms.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) fail(Errc::parse, "unbalanced parentheses in '" + text + "'");
  if (!cur.empty()) atoms.push_back(cur);
  if (atoms.empty()) fail(Errc::parse, "empty group descriptor");
  std::vector<GroupPtr> factors;
  for (const std::string& a : atoms) factors.push_back(parse_atom(a, caps));
  return make_product(std::move(factors));
}

}  // namespace lawforge

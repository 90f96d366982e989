#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace cliff {

// Default cap on the ambient dimension n = p + q for algebra operations.
inline constexpr int kDefaultDimensionCap = 12;

// Hard cap for dense 2^n x 2^n representation matrices (4096 x 4096 at 12).
inline constexpr int kMatrixDimensionCap = 12;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different ambient algebras.
class mismatch_error : public error {
 public:
  using error::error;
};

// An operation got input of the wrong grade (e.g. a non-vector where a
// grade-1 element is required).
class grade_error : public error {
 public:
  using error::error;
};

// Index or dimension outside the valid range / configured cap.
class range_error : public error {
 public:
  using error::error;
};

// Diagonal signature (p, q) of a non-degenerate quadratic form: p entries
// +1 followed by q entries -1 on the diagonal. Only unit diagonal entries
// are representable, so degenerate forms cannot be constructed; n = 0 is
// rejected as well.
class Signature {
 public:
  Signature(int p, int q, int cap = kDefaultDimensionCap) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw range_error("signature counts must be non-negative");
    const int n = p + q;
    if (n < 1) throw range_error("signature must have dimension at least 1");
    if (cap < 1 || cap > 32) throw range_error("dimension cap out of range");
    if (n > cap) {
      throw range_error("dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
    }
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  // Diagonal entry for generator i, 1-based: +1 for i <= p, -1 otherwise.
  int eps(int i) const {
    if (i < 1 || i > n()) throw range_error("generator index out of range");
    return i <= p_ ? 1 : -1;
  }

  std::size_t basis_size() const { return std::size_t{1} << n(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

  std::string str() const {
    return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

 private:
  int p_;
  int q_;
};

inline void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw mismatch_error("ambient mismatch: " + a.str() + " vs " + b.str());
  }
}

}  // namespace cliff

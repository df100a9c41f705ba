#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linvol {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

bool isSquarefree(unsigned long d);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), with a, b
/// exact rationals. d == 0 means a plain rational (b is then forced to 0);
/// otherwise d is a squarefree integer >= 2. Elements with b == 0 normalize
/// to d == 0 and combine with elements of any radicand, so rational constants
/// never trip the mismatch check. Immutable value type, safe to share across
/// threads.
class FieldElem {
 public:
  FieldElem() : a_(0), b_(0), d_(0) {}
  FieldElem(long v) : a_(v), b_(0), d_(0) {}  // NOLINT: implicit by design

  static FieldElem rational(const mpq_class& a);
  static FieldElem rational(long num, long den);
  /// sqrt(d) itself; d must be squarefree and >= 2.
  static FieldElem sqrtOf(unsigned long d);
  static FieldElem make(const mpq_class& a, const mpq_class& b, unsigned long d);

  const mpq_class& ratPart() const { return a_; }
  const mpq_class& quadPart() const { return b_; }
  unsigned long radicand() const { return d_; }

  bool isZero() const { return a_ == 0 && b_ == 0; }
  bool isRational() const { return b_ == 0; }
  /// -1, 0 or +1; decided by sign analysis of a and b plus one integer
  /// comparison of a^2 against b^2 d, no root extraction.
  int sign() const;
  FieldElem inverse() const;

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

  friend bool operator==(const FieldElem& x, const FieldElem& y);
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
  friend bool operator<(const FieldElem& x, const FieldElem& y);
  friend bool operator<=(const FieldElem& x, const FieldElem& y);
  friend bool operator>(const FieldElem& x, const FieldElem& y) { return y < x; }
  friend bool operator>=(const FieldElem& x, const FieldElem& y) { return y <= x; }

  double toDouble() const;

  /// Canonical form "p/q + r/s*sqrtD", zero terms omitted, unit denominators
  /// and unit sqrt coefficients dropped. Parses back with parse().
  std::string str() const;

  /// Expression grammar: integers, '+', '-', '*', '/', parentheses and the
  /// token sqrtD where D equals the context radicand d (no sqrt tokens are
  /// accepted when d == 0).
  static FieldElem parse(std::string_view text, unsigned long d);

 private:
  mpq_class a_, b_;
  unsigned long d_;

  void normalize();
  static unsigned long mergedRadicand(const FieldElem& x, const FieldElem& y);
};

Cmp fieldCmp(const FieldElem& x, const FieldElem& y);

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace linvol

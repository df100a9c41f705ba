#include "linvol/field.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace linvol {

bool isSquarefree(unsigned long d) {
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

static void requireValidRadicand(unsigned long d) {
  if (d == 1 || (d >= 2 && !isSquarefree(d)))
    throw FieldError("radicand must be 0 or a squarefree integer >= 2, got " + std::to_string(d));
}

void FieldElem::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 0;
}

FieldElem FieldElem::rational(const mpq_class& a) {
  FieldElem x;
  x.a_ = a;
  x.normalize();
  return x;
}

FieldElem FieldElem::rational(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  return rational(mpq_class(num, den));
}

FieldElem FieldElem::sqrtOf(unsigned long d) {
  requireValidRadicand(d);
  if (d == 0) return FieldElem(0);
  FieldElem x;
  x.b_ = 1;
  x.d_ = d;
  return x;
}

FieldElem FieldElem::make(const mpq_class& a, const mpq_class& b, unsigned long d) {
  requireValidRadicand(d);
  if (b != 0 && d < 2) throw FieldError("irrational part requires a radicand >= 2");
  FieldElem x;
  x.a_ = a;
  x.b_ = b;
  x.d_ = d;
  x.normalize();
  return x;
}

unsigned long FieldElem::mergedRadicand(const FieldElem& x, const FieldElem& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw FieldError("mismatched radicands: sqrt" + std::to_string(x.d_) + " vs sqrt" +
                   std::to_string(y.d_));
}

int FieldElem::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b of opposite signs: compare a^2 with b^2 d.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * static_cast<unsigned long>(d_);
  const int c = cmp(lhs, rhs);
  if (c == 0)
    throw FieldError("sqrt" + std::to_string(d_) + " behaved rationally; invalid radicand");
  return c > 0 ? sa : sb;
}

FieldElem FieldElem::inverse() const {
  if (isZero()) throw FieldError("division by zero");
  if (b_ == 0) {
    FieldElem r;
    r.a_ = 1 / a_;
    return r;
  }
  // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
  mpq_class den = a_ * a_ - b_ * b_ * static_cast<unsigned long>(d_);
  if (den == 0)
    throw FieldError("sqrt" + std::to_string(d_) + " behaved rationally; invalid radicand");
  FieldElem r;
  r.a_ = a_ / den;
  r.b_ = -b_ / den;
  r.d_ = d_;
  r.normalize();
  return r;
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.d_ = FieldElem::mergedRadicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.normalize();
  return r;
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.d_ = FieldElem::mergedRadicand(x, y);
  r.a_ = x.a_ - y.a_;
  r.b_ = x.b_ - y.b_;
  r.normalize();
  return r;
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.d_ = FieldElem::mergedRadicand(x, y);
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * static_cast<unsigned long>(r.d_);
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.normalize();
  return r;
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

bool operator<(const FieldElem& x, const FieldElem& y) { return (x - y).sign() < 0; }
bool operator<=(const FieldElem& x, const FieldElem& y) { return (x - y).sign() <= 0; }

Cmp fieldCmp(const FieldElem& x, const FieldElem& y) {
  const int s = (x - y).sign();
  return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

double FieldElem::toDouble() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

static std::string rationalStr(const mpq_class& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

std::string FieldElem::str() const {
  if (isZero()) return "0";
  std::string out;
  if (a_ != 0) out = rationalStr(a_);
  if (b_ != 0) {
    mpq_class mag = abs(b_);
    std::string term;
    if (mag != 1) term = rationalStr(mag) + "*";
    term += "sqrt" + std::to_string(d_);
    if (out.empty()) {
      out = (sgn(b_) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(b_) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

namespace {

// Recursive-descent parser for the field expression grammar.
class ExprParser {
 public:
  ExprParser(std::string_view text, unsigned long d) : text_(text), d_(d) {}

  FieldElem run() {
    FieldElem v = expr();
    skipWs();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view text_;
  unsigned long d_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw FieldError("parse error at offset " + std::to_string(pos_) + ": " + msg + " in \"" +
                     std::string(text_) + "\"");
  }

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipWs();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v = v / unary();
      else
        return v;
    }
  }

  FieldElem unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  FieldElem primary() {
    skipWs();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem::rational(number());
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      const unsigned long rad = number().get_ui();
      if (rad != d_ || d_ == 0)
        fail("sqrt" + std::to_string(rad) + " not available in this field (d = " +
             std::to_string(d_) + ")");
      return FieldElem::sqrtOf(rad);
    }
    fail("expected number, sqrt token or '('");
  }

  mpz_class number() {
    skipWs();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text, unsigned long d) {
  if (d != 0) requireValidRadicand(d);
  return ExprParser(text, d).run();
}

}  // namespace linvol

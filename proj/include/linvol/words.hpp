#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linvol {

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letter of A u A^-1; base indexes the alphabet, pos = false marks the
/// formal inverse. Text form: 'a' + base lowercase for positive letters,
/// uppercase for inverses.
struct SignedLetter {
  uint8_t base = 0;
  bool pos = true;

  SignedLetter inverse() const { return {base, !pos}; }
  char toChar() const { return static_cast<char>((pos ? 'a' : 'A') + base); }
  static SignedLetter fromChar(char c);

  friend bool operator==(SignedLetter, SignedLetter) = default;
};

/// Canonical letter order: all positive letters before all inverses,
/// alphabetical within each block (a < b < ... < a^-1 < b^-1 < ...).
bool letterLess(SignedLetter x, SignedLetter y);

/// Freely reduced word over A u A^-1. Construction reduces, so the
/// no-adjacent-x-x^-1 invariant always holds. The empty word prints as "1".
class RWord {
 public:
  RWord() = default;
  static RWord single(SignedLetter x) { return RWord(std::string(1, x.toChar())); }
  /// Reduces its input; "1" and "" both denote the empty word.
  static RWord parse(std::string_view text, int alphabetSize = 26);
  static RWord fromLetters(std::span<const SignedLetter> letters);

  int size() const { return static_cast<int>(w_.size()); }
  bool empty() const { return w_.empty(); }
  SignedLetter letter(int i) const { return SignedLetter::fromChar(w_[static_cast<size_t>(i)]); }
  SignedLetter front() const { return letter(0); }
  SignedLetter back() const { return letter(size() - 1); }

  RWord inverse() const;
  RWord prefix(int n) const { return RWord(w_.substr(0, static_cast<size_t>(n))); }
  RWord suffix(int n) const { return RWord(w_.substr(w_.size() - static_cast<size_t>(n))); }
  RWord factor(int pos, int len) const {
    return RWord(w_.substr(static_cast<size_t>(pos), static_cast<size_t>(len)));
  }
  RWord appended(SignedLetter x) const;  // right-extend without cancellation check

  bool startsWith(const RWord& p) const { return w_.compare(0, p.w_.size(), p.w_) == 0; }
  bool endsWith(const RWord& s) const {
    return w_.size() >= s.w_.size() && w_.compare(w_.size() - s.w_.size(), s.w_.size(), s.w_) == 0;
  }
  /// Factor occurrence positions, overlaps included.
  std::vector<int> occurrences(const RWord& x) const;

  /// Concatenation with free reduction.
  friend RWord operator*(const RWord& u, const RWord& v);

  std::string str() const { return w_.empty() ? "1" : w_; }
  const std::string& chars() const { return w_; }

  friend bool operator==(const RWord&, const RWord&) = default;

 private:
  explicit RWord(std::string raw) : w_(std::move(raw)) {}
  std::string w_;  // reduced
  friend struct ShortlexLess;
  friend RWord reduceChars(std::string_view);
};

/// Shortlex over the canonical letter order; total order used everywhere a
/// deterministic word list is emitted.
struct ShortlexLess {
  bool operator()(const RWord& u, const RWord& v) const;
};

inline bool shortlexLess(const RWord& u, const RWord& v) { return ShortlexLess{}(u, v); }

}  // namespace linvol

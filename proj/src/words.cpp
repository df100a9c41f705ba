#include "linvol/words.hpp"

#include <algorithm>

namespace linvol {

SignedLetter SignedLetter::fromChar(char c) {
  if (c >= 'a' && c <= 'z') return {static_cast<uint8_t>(c - 'a'), true};
  if (c >= 'A' && c <= 'Z') return {static_cast<uint8_t>(c - 'A'), false};
  throw WordError(std::string("invalid letter '") + c + "'");
}

bool letterLess(SignedLetter x, SignedLetter y) {
  if (x.pos != y.pos) return x.pos;
  return x.base < y.base;
}

static bool cancels(char x, char y) {
  // same base, opposite case
  return x != y && (x ^ 0x20) == y;
}

RWord reduceChars(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (!out.empty() && cancels(out.back(), c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return RWord(std::move(out));
}

RWord RWord::parse(std::string_view text, int alphabetSize) {
  if (text == "1") return RWord();
  for (char c : text) {
    SignedLetter x = SignedLetter::fromChar(c);  // validates
    if (x.base >= alphabetSize)
      throw WordError(std::string("letter '") + c + "' outside alphabet of size " +
                      std::to_string(alphabetSize));
  }
  return reduceChars(text);
}

RWord RWord::fromLetters(std::span<const SignedLetter> letters) {
  std::string raw;
  raw.reserve(letters.size());
  for (SignedLetter x : letters) raw.push_back(x.toChar());
  return reduceChars(raw);
}

RWord RWord::inverse() const {
  std::string out;
  out.reserve(w_.size());
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) out.push_back(*it ^ 0x20);
  return RWord(std::move(out));
}

RWord RWord::appended(SignedLetter x) const {
  std::string out = w_;
  out.push_back(x.toChar());
  if (out.size() >= 2 && cancels(out[out.size() - 2], out.back()))
    throw WordError("appended letter cancels; use operator* for reducing concatenation");
  return RWord(std::move(out));
}

std::vector<int> RWord::occurrences(const RWord& x) const {
  std::vector<int> pos;
  if (x.empty() || x.size() > size()) return pos;
  for (int i = 0; i + x.size() <= size(); ++i)
    if (w_.compare(static_cast<size_t>(i), x.w_.size(), x.w_) == 0) pos.push_back(i);
  return pos;
}

RWord operator*(const RWord& u, const RWord& v) { return reduceChars(u.w_ + v.w_); }

bool ShortlexLess::operator()(const RWord& u, const RWord& v) const {
  if (u.w_.size() != v.w_.size()) return u.w_.size() < v.w_.size();
  for (size_t i = 0; i < u.w_.size(); ++i) {
    if (u.w_[i] != v.w_[i])
      return letterLess(SignedLetter::fromChar(u.w_[i]), SignedLetter::fromChar(v.w_[i]));
  }
  return false;
}

}  // namespace linvol

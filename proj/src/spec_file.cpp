#include "linvol/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace linvol {

namespace {

std::string trim(std::string s) {
  const auto notSpace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notSpace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notSpace).base(), s.end());
  return s;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

SpecData parseSpecText(std::string_view text, const std::string& origin) {
  SpecData spec;
  std::vector<std::string> topTok, bottomTok, flipTok;
  std::vector<std::tuple<char, std::string, size_t>> lenExprs;  // letter, expression, line
  std::string intervalExpr;
  bool coherent = false, sawFlips = false;
  std::string section;

  auto fail = [&](size_t lineNo, const std::string& msg) -> void {
    throw SpecError(origin + ":" + std::to_string(lineNo) + ": " + msg);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineNo, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "field" && section != "involution")
        fail(lineNo, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineNo, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "field") {
      if (key != "d") fail(lineNo, "unknown field key '" + key + "'");
      try {
        spec.d = std::stoul(value);
      } catch (...) {
        fail(lineNo, "bad radicand '" + value + "'");
      }
    } else if (section == "involution") {
      if (key == "alphabet") {
        for (const std::string& t : tokens(value)) {
          if (t.size() != 1 || !std::islower(static_cast<unsigned char>(t[0])))
            fail(lineNo, "alphabet names must be single lowercase letters");
          if (std::count(spec.names.begin(), spec.names.end(), t[0]))
            fail(lineNo, std::string("duplicate letter '") + t[0] + "'");
          spec.names.push_back(t[0]);
        }
      } else if (key == "top") {
        topTok = tokens(value);
      } else if (key == "bottom") {
        bottomTok = tokens(value);
      } else if (key == "flips") {
        sawFlips = true;
        flipTok = tokens(value);
        coherent = flipTok.size() == 1 && flipTok[0] == "coherent";
      } else if (key.rfind("len.", 0) == 0 && key.size() == 5) {
        lenExprs.emplace_back(key[4], value, lineNo);
      } else if (key == "interval") {
        intervalExpr = value;
      } else {
        fail(lineNo, "unknown involution key '" + key + "'");
      }
    } else {
      fail(lineNo, "key outside of a section");
    }
  }

  if (spec.names.empty()) throw SpecError(origin + ": missing alphabet");
  auto indexOf = [&](char c) -> uint8_t {
    const auto it = std::find(spec.names.begin(), spec.names.end(), c);
    if (it == spec.names.end())
      throw SpecError(origin + ": letter '" + std::string(1, c) + "' not in the alphabet");
    return static_cast<uint8_t>(it - spec.names.begin());
  };

  spec.lengths.assign(spec.names.size(), FieldElem());
  std::vector<bool> haveLen(spec.names.size(), false);
  for (const auto& [c, expr, ln] : lenExprs) {
    const uint8_t b = indexOf(c);
    if (haveLen[b]) fail(ln, std::string("duplicate length for '") + c + "'");
    spec.lengths[b] = FieldElem::parse(expr, spec.d);
    haveLen[b] = true;
  }
  for (size_t i = 0; i < spec.names.size(); ++i)
    if (!haveLen[i])
      throw SpecError(origin + ": missing length for '" + std::string(1, spec.names[i]) + "'");

  auto parseRow = [&](const std::vector<std::string>& tok) {
    std::vector<SignedLetter> row;
    for (const std::string& t : tok) {
      if (t.size() != 1) throw SpecError(origin + ": row entries must be single letters");
      const char c = t[0];
      const bool pos = std::islower(static_cast<unsigned char>(c)) != 0;
      row.push_back(
          {indexOf(static_cast<char>(std::tolower(static_cast<unsigned char>(c)))), pos});
    }
    return row;
  };
  spec.perm.top = parseRow(topTok);
  spec.perm.bottom = parseRow(bottomTok);

  if (!sawFlips) throw SpecError(origin + ": missing flips line (use 'flips = coherent')");
  if (coherent) {
    spec.flips = std::nullopt;
  } else {
    std::set<uint8_t> fl;
    for (const std::string& t : flipTok) {
      if (t.size() != 1 || !std::islower(static_cast<unsigned char>(t[0])))
        throw SpecError(origin + ": flip entries must be lowercase letters");
      fl.insert(indexOf(t[0]));
    }
    spec.flips = std::move(fl);
  }
  if (!intervalExpr.empty()) spec.interval = FieldElem::parse(intervalExpr, spec.d);
  return spec;
}

LinearInvolution SpecData::toInvolution() const {
  if (flips) return LinearInvolution::build(perm, lengths, *flips, interval);
  return LinearInvolution::build(perm, lengths, kCoherentFlips, interval);
}

RWord SpecData::parseWord(std::string_view text) const {
  if (text == "1") return RWord();
  std::vector<SignedLetter> letters;
  for (char c : text) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto it = std::find(names.begin(), names.end(), lower);
    if (it == names.end())
      throw WordError(std::string("letter '") + c + "' not in the spec's alphabet");
    letters.push_back({static_cast<uint8_t>(it - names.begin()),
                       std::islower(static_cast<unsigned char>(c)) != 0});
  }
  RWord w = RWord::fromLetters(letters);
  if (w.size() != static_cast<int>(letters.size()))
    throw WordError("word '" + std::string(text) + "' is not reduced");
  return w;
}

std::string SpecData::formatWord(const RWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    const SignedLetter x = w.letter(i);
    const char c = nameOf(x.base);
    out.push_back(x.pos ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

SpecData parseSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseSpecText(buf.str(), path);
}

}  // namespace linvol

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linvol/involution.hpp"

namespace linvol {

/// Parsed involution spec file. Sectioned key-value format:
///
///   [field]
///   d = 5
///
///   [involution]
///   alphabet = a b c
///   top = a b B
///   bottom = c C A
///   flips = coherent        # or an explicit list: flips = b c
///   len.a = sqrt5 - 2
///   len.b = (3 - sqrt5)/2
///   len.c = (3 - sqrt5)/2
///   interval = 1            # optional, must equal the row sum
///
/// '#' starts a comment. Alphabet names are distinct lowercase letters;
/// uppercase always denotes the inverse. The [field] section is optional
/// and defaults to d = 0 (plain rationals).
struct SpecData {
  unsigned long d = 0;
  std::vector<char> names;  // alphabet letter names, in declaration order
  GenPerm perm;
  std::vector<FieldElem> lengths;
  std::optional<std::set<uint8_t>> flips;  // nullopt = coherent marker
  std::optional<FieldElem> interval;

  LinearInvolution toInvolution() const;

  /// Word I/O in the spec's letter names ("1" = empty word).
  RWord parseWord(std::string_view text) const;
  std::string formatWord(const RWord& w) const;
  char nameOf(uint8_t base) const { return names.at(base); }
};

SpecData parseSpecText(std::string_view text, const std::string& origin);
SpecData parseSpecFile(const std::string& path);

}  // namespace linvol

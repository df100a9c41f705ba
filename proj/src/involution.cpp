#include "linvol/involution.hpp"

#include <algorithm>
#include <sstream>

namespace linvol {

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  if (a.comp != b.comp) return std::nullopt;
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi), a.comp};
  if (r.isEmpty()) return std::nullopt;
  return r;
}

Pt AffineBranch::map(const Pt& z) const {
  return {sign > 0 ? z.x + offset : offset - z.x, to};
}

Interval AffineBranch::mapInterval(const Interval& iv) const {
  if (sign > 0) return {iv.lo + offset, iv.hi + offset, to};
  return {offset - iv.hi, offset - iv.lo, to};
}

FieldElem AffineBranch::pullback(const FieldElem& image) const {
  return sign > 0 ? image - offset : offset - image;
}

AffineBranch AffineBranch::inverted() const {
  AffineBranch r;
  r.sign = sign;
  r.offset = sign > 0 ? -offset : offset;
  r.from = to;
  r.to = from;
  return r;
}

AffineBranch AffineBranch::composeAfter(const AffineBranch& g) const {
  AffineBranch r;
  r.sign = sign * g.sign;
  r.offset = (sign > 0 ? g.offset : -g.offset) + offset;
  r.from = g.from;
  r.to = to;
  return r;
}

int GenPerm::alphabetSize() const {
  int k = 0;
  for (auto& row : {top, bottom})
    for (SignedLetter x : row) k = std::max(k, x.base + 1);
  return k;
}

LinearInvolution LinearInvolution::build(GenPerm perm, std::vector<FieldElem> lengths,
                                         std::set<uint8_t> flips,
                                         std::optional<FieldElem> intervalLength) {
  LinearInvolution t;
  t.k_ = perm.alphabetSize();
  if (perm.top.empty() || perm.bottom.empty()) throw SpecError("both rows must be nonempty");
  if (static_cast<int>(perm.top.size() + perm.bottom.size()) != 2 * t.k_)
    throw SpecError("rows must hold exactly 2k signed letters");
  std::vector<int> seen(static_cast<size_t>(2 * t.k_), 0);
  for (auto& row : {perm.top, perm.bottom})
    for (SignedLetter x : row) seen[t.slot(x)]++;
  for (int i = 0; i < 2 * t.k_; ++i)
    if (seen[static_cast<size_t>(i)] != 1)
      throw SpecError("each letter and its inverse must occur exactly once across the two rows");

  if (static_cast<int>(lengths.size()) != t.k_)
    throw SpecError("need one length per letter, got " + std::to_string(lengths.size()));
  for (int i = 0; i < t.k_; ++i)
    if (lengths[static_cast<size_t>(i)].sign() <= 0)
      throw SpecError(std::string("length of letter '") + char('a' + i) + "' must be positive");
  for (uint8_t f : flips)
    if (f >= t.k_) throw SpecError("flip letter outside alphabet");

  FieldElem topSum, bottomSum;
  for (SignedLetter x : perm.top) topSum += lengths[x.base];
  for (SignedLetter x : perm.bottom) bottomSum += lengths[x.base];
  if (topSum != bottomSum)
    throw SpecError("row sums differ: top " + topSum.str() + " vs bottom " + bottomSum.str());
  if (intervalLength && *intervalLength != topSum)
    throw SpecError("interval length " + intervalLength->str() + " does not match row sum " +
                    topSum.str());

  t.perm_ = std::move(perm);
  t.lengths_ = std::move(lengths);
  t.flips_ = std::move(flips);
  t.length_ = topSum;
  t.deriveLayout();
  return t;
}

LinearInvolution LinearInvolution::build(GenPerm perm, std::vector<FieldElem> lengths,
                                         CoherentFlips, std::optional<FieldElem> intervalLength) {
  // Coherent flip set: exactly the letters whose two intervals share a
  // component, i.e. whose sigma1 restriction must be a symmetry.
  std::set<uint8_t> flips;
  const int k = perm.alphabetSize();
  std::vector<int> compOf(static_cast<size_t>(2 * k), -1);
  auto slotOf = [&](SignedLetter x) { return static_cast<size_t>(x.base) * 2 + (x.pos ? 0 : 1); };
  for (SignedLetter x : perm.top) compOf[slotOf(x)] = 0;
  for (SignedLetter x : perm.bottom) compOf[slotOf(x)] = 1;
  for (int b = 0; b < k; ++b) {
    size_t p = static_cast<size_t>(b) * 2;
    if (compOf[p] >= 0 && compOf[p] == compOf[p + 1]) flips.insert(static_cast<uint8_t>(b));
  }
  return build(std::move(perm), std::move(lengths), std::move(flips), std::move(intervalLength));
}

void LinearInvolution::deriveLayout() {
  intervals_.assign(static_cast<size_t>(2 * k_), Interval{});
  branches_.assign(static_cast<size_t>(2 * k_), AffineBranch{});
  rowOf_[0] = perm_.top;
  rowOf_[1] = perm_.bottom;
  for (int c = 0; c < 2; ++c) {
    divisions_[c].clear();
    FieldElem cursor;
    const auto& row = rowOf_[c];
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) divisions_[c].push_back(cursor);
      Interval& iv = intervals_[slot(row[i])];
      iv.lo = cursor;
      cursor += lengths_[row[i].base];
      iv.hi = cursor;
      iv.comp = static_cast<Component>(c);
    }
  }
  for (int b = 0; b < k_; ++b) {
    for (bool pos : {true, false}) {
      SignedLetter x{static_cast<uint8_t>(b), pos};
      const Interval& src = intervals_[slot(x)];
      const Interval& dst = intervals_[slot(x.inverse())];
      AffineBranch& br = branches_[slot(x)];
      br.from = src.comp;
      br.to = dst.comp;
      if (flipped(x.base)) {
        br.sign = -1;
        br.offset = src.lo + dst.hi;
      } else {
        br.sign = 1;
        br.offset = dst.lo - src.lo;
      }
    }
  }
}

AffineBranch LinearInvolution::tBranch(SignedLetter x) const {
  AffineBranch br = branches_[slot(x)];
  br.to = mirrorOf(br.to);
  return br;
}

std::vector<Pt> LinearInvolution::divisionPoints() const {
  std::vector<Pt> out;
  for (int c = 0; c < 2; ++c)
    for (const FieldElem& d : divisions_[c]) out.push_back({d, static_cast<Component>(c)});
  return out;
}

bool LinearInvolution::isDivisionPoint(const Pt& z) const {
  for (const FieldElem& d : divisions_[static_cast<int>(z.comp)])
    if (d == z.x) return true;
  return false;
}

SignedLetter LinearInvolution::locate(const Pt& z) const {
  if (z.x.sign() <= 0 || !(z.x < length_))
    throw std::out_of_range("point outside the open interval");
  if (isDivisionPoint(z)) throw SingularPointError("point is a division point");
  for (SignedLetter x : rowOf_[static_cast<int>(z.comp)])
    if (z.x < intervals_[slot(x)].hi) return x;
  throw std::logic_error("locate: unreachable");
}

Pt LinearInvolution::sigma1(const Pt& z) const {
  return branches_[slot(locate(z))].map(z);
}

Pt LinearInvolution::sigma2(const Pt& z) const { return {z.x, mirrorOf(z.comp)}; }

Pt LinearInvolution::apply(const Pt& z) const { return sigma2(sigma1(z)); }

Pt LinearInvolution::applyInv(const Pt& z) const {
  try {
    return sigma1(sigma2(z));
  } catch (const SingularPointError&) {
    throw SingularPointError("point is a mirror of a division point (singular for T^-1)");
  }
}

std::optional<LinearInvolution::WordCell> LinearInvolution::wordCell(const RWord& w) const {
  if (w.empty()) throw std::invalid_argument("wordCell requires a nonempty word");
  for (int i = 0; i < w.size(); ++i)
    if (w.letter(i).base >= k_) return std::nullopt;

  // I_w by the pullback recursion I_{au} = I_a n T^-1(I_u).
  Interval j = letterInterval(w.back());
  for (int i = w.size() - 2; i >= 0; --i) {
    const SignedLetter x = w.letter(i);
    const AffineBranch br = tBranch(x);
    auto hit = intersect(br.mapInterval(letterInterval(x)), j);
    if (!hit) return std::nullopt;
    j = br.inverted().mapInterval(*hit);
  }
  // Forward images of I_w stay inside one letter interval at every step.
  Interval m = j;
  for (int i = 0; i + 1 < w.size(); ++i) m = tBranch(w.letter(i)).mapInterval(m);
  return WordCell{j, m};
}

std::optional<Interval> LinearInvolution::wordInterval(const RWord& w) const {
  auto cell = wordCell(w);
  if (!cell) return std::nullopt;
  return cell->iw;
}

std::optional<LabeledInterval> LinearInvolution::labeledWordInterval(const RWord& w) const {
  auto iv = wordInterval(w);
  if (!iv) return std::nullopt;
  return LabeledInterval{*iv, w};
}

bool LinearInvolution::evenLetter(uint8_t base) const {
  SignedLetter x{base, true};
  return intervals_[slot(x)].comp != intervals_[slot(x.inverse())].comp;
}

Classification LinearInvolution::classify() const {
  Classification c;
  c.orientable = true;
  c.coherent = true;
  for (int b = 0; b < k_; ++b) {
    const bool even = evenLetter(static_cast<uint8_t>(b));
    if (!even) c.orientable = false;
    if (flipped(static_cast<uint8_t>(b)) == even) c.coherent = false;
  }
  return c;
}

std::optional<Connection> LinearInvolution::detectConnection(int horizon) const {
  for (int c = 0; c < 2; ++c) {
    for (const FieldElem& d : divisions_[c]) {
      // sigma2 image of a division point is a singularity of T^-1
      const Pt start{d, mirrorOf(static_cast<Component>(c))};
      Pt z = start;
      for (int n = 0; n <= horizon; ++n) {
        if (isDivisionPoint(z)) return Connection{start, z, n};
        if (n == horizon) break;
        z = apply(z);
      }
    }
  }
  return std::nullopt;
}

LinearInvolution LinearInvolution::relabeled(std::span<const SignedLetter> imageOfPositive) const {
  if (static_cast<int>(imageOfPositive.size()) != k_)
    throw SpecError("relabeling must provide an image for every positive letter");
  std::vector<int> hit(static_cast<size_t>(k_), 0);
  for (SignedLetter x : imageOfPositive) {
    if (x.base >= k_) throw SpecError("relabeling image outside alphabet");
    hit[x.base]++;
  }
  for (int b = 0; b < k_; ++b)
    if (hit[static_cast<size_t>(b)] != 1) throw SpecError("relabeling is not a bijection");

  auto imageOf = [&](SignedLetter x) {
    SignedLetter y = imageOfPositive[x.base];
    return x.pos ? y : y.inverse();
  };
  GenPerm p;
  for (SignedLetter x : perm_.top) p.top.push_back(imageOf(x));
  for (SignedLetter x : perm_.bottom) p.bottom.push_back(imageOf(x));
  std::vector<FieldElem> len(static_cast<size_t>(k_));
  std::set<uint8_t> fl;
  for (int b = 0; b < k_; ++b) {
    const uint8_t nb = imageOfPositive[static_cast<size_t>(b)].base;
    len[nb] = lengths_[static_cast<size_t>(b)];
    if (flipped(static_cast<uint8_t>(b))) fl.insert(nb);
  }
  return build(std::move(p), std::move(len), std::move(fl), length_);
}

LinearInvolution LinearInvolution::swappedComponents() const {
  GenPerm p;
  p.top = perm_.bottom;
  p.bottom = perm_.top;
  return build(std::move(p), lengths_, flips_, length_);
}

LinearInvolution LinearInvolution::rescaled(const FieldElem& newIntervalLength) const {
  if (newIntervalLength.sign() <= 0) throw SpecError("interval length must be positive");
  const FieldElem factor = newIntervalLength / length_;
  std::vector<FieldElem> len;
  len.reserve(lengths_.size());
  for (const FieldElem& l : lengths_) len.push_back(l * factor);
  return build(perm_, std::move(len), flips_, newIntervalLength);
}

bool operator==(const LinearInvolution& s, const LinearInvolution& t) {
  return s.k_ == t.k_ && s.perm_.top == t.perm_.top && s.perm_.bottom == t.perm_.bottom &&
         s.lengths_ == t.lengths_ && s.flips_ == t.flips_ && s.length_ == t.length_;
}

std::string LinearInvolution::describe() const {
  std::ostringstream os;
  os << "alphabet =";
  for (int b = 0; b < k_; ++b) os << ' ' << char('a' + b);
  os << "\ntop =";
  for (SignedLetter x : perm_.top) os << ' ' << x.toChar();
  os << "\nbottom =";
  for (SignedLetter x : perm_.bottom) os << ' ' << x.toChar();
  os << "\nflips =";
  for (uint8_t f : flips_) os << ' ' << char('a' + f);
  for (int b = 0; b < k_; ++b)
    os << "\nlen." << char('a' + b) << " = " << lengths_[static_cast<size_t>(b)].str();
  os << "\ninterval = " << length_.str() << "\n";
  return os.str();
}

Pt samplePoint(const Interval& iv, int attempt) {
  const FieldElem den(attempt + 2);
  return {iv.lo + iv.length() / den, iv.comp};
}

}  // namespace linvol

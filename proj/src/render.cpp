#include "linvol/render.hpp"

#include <cstdio>
#include <sstream>

namespace linvol {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string renderSvg(const LinearInvolution& t, const std::vector<char>& names) {
  const double left = 30, width = 780, rowY[2] = {60, 140};
  const double scale = width / t.intervalLength().toDouble();
  auto xPos = [&](const FieldElem& v) { return left + scale * v.toDouble(); };
  auto nameOf = [&](SignedLetter x) {
    const char c = x.base < names.size() ? names[x.base] : static_cast<char>('a' + x.base);
    return std::string(1, x.pos ? c : static_cast<char>(c - 'a' + 'A'));
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"200\" "
        "viewBox=\"0 0 840 200\">\n";
  os << "  <style>text{font:14px sans-serif;} .tick{stroke:#333;} .row{stroke:#333;"
        "stroke-width:1.5;}</style>\n";

  std::string flips;
  for (uint8_t f : t.flips()) flips += nameOf({f, true});
  os << "  <text x=\"" << num(left) << "\" y=\"24\">flips: " << (flips.empty() ? "-" : flips)
     << "</text>\n";

  const std::vector<SignedLetter>* rows[2] = {&t.perm().top, &t.perm().bottom};
  for (int c = 0; c < 2; ++c) {
    const double y = rowY[c];
    os << "  <line class=\"row\" x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\""
       << num(left + width) << "\" y2=\"" << num(y) << "\"/>\n";
    // end ticks plus one per division point
    std::vector<double> ticks{left, left + width};
    for (const FieldElem& d : t.divisionCoords(static_cast<Component>(c)))
      ticks.push_back(xPos(d));
    for (double x : ticks)
      os << "  <line class=\"tick\" x1=\"" << num(x) << "\" y1=\"" << num(y - 6) << "\" x2=\""
         << num(x) << "\" y2=\"" << num(y + 6) << "\"/>\n";
    for (SignedLetter x : *rows[c]) {
      const Interval& iv = t.letterInterval(x);
      const double mid = xPos(iv.lo + iv.length() / FieldElem(2));
      os << "  <text x=\"" << num(mid - 4) << "\" y=\"" << num(y - 12) << "\">" << nameOf(x)
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace linvol

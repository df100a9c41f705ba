#include "support/fixtures.hpp"

namespace linvol::fixtures {

LinearInvolution golden() {
  const FieldElem s5 = FieldElem::sqrtOf(5);
  const FieldElem lb = (FieldElem(3) - s5) / FieldElem(2);
  GenPerm p;
  p.top = {{0, true}, {1, true}, {1, false}};
  p.bottom = {{2, true}, {2, false}, {0, false}};
  return LinearInvolution::build(p, {s5 - FieldElem(2), lb, lb}, kCoherentFlips);
}

namespace {

GenPerm fourLetterPerm() {
  GenPerm p;
  p.top = {{0, true}, {1, true}, {0, false}, {2, true}};
  p.bottom = {{2, false}, {3, false}, {1, false}, {3, true}};
  return p;
}

}  // namespace

LinearInvolution fourLetter() {
  std::vector<FieldElem> len = {FieldElem::rational(3, 20), FieldElem::rational(3, 10),
                                FieldElem::rational(2, 5), FieldElem::rational(3, 20)};
  return LinearInvolution::build(fourLetterPerm(), std::move(len), std::set<uint8_t>{0, 3});
}

LinearInvolution fourLetterPeriodic() {
  std::vector<FieldElem> len = {FieldElem::rational(1, 4), FieldElem::rational(1, 8),
                                FieldElem::rational(3, 8), FieldElem::rational(1, 4)};
  return LinearInvolution::build(fourLetterPerm(), std::move(len), std::set<uint8_t>{0, 2, 3});
}

LinearInvolution rotation() {
  const FieldElem s5 = FieldElem::sqrtOf(5);
  GenPerm p;
  p.top = {{0, true}, {1, true}};
  p.bottom = {{1, false}, {0, false}};
  return LinearInvolution::build(
      p, {(FieldElem(3) - s5) / FieldElem(2), (s5 - FieldElem(1)) / FieldElem(2)},
      std::set<uint8_t>{});
}

LinearInvolution rotationFlipped() {
  const FieldElem s5 = FieldElem::sqrtOf(5);
  GenPerm p;
  p.top = {{0, true}, {1, true}};
  p.bottom = {{1, false}, {0, false}};
  return LinearInvolution::build(
      p, {(FieldElem(3) - s5) / FieldElem(2), (s5 - FieldElem(1)) / FieldElem(2)},
      std::set<uint8_t>{0});
}

}  // namespace linvol::fixtures

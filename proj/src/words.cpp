#include "g2rs/words.hpp"

namespace g2rs {

int normal_order_position(Root r) {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), r);
  if (it == positive_roots.end()) throw UnsupportedWord("not a positive root: " + to_string(r));
  return static_cast<int>(it - positive_roots.begin());
}

WeylSigns::WeylSigns(const AdjointModel &model) {
  for (int s = 0; s < 12; ++s)
    for (int r = 0; r < 12; ++r) table_[s][r] = model.weyl_sign(all_roots()[s], all_roots()[r]);
}

const WeylSigns &WeylSigns::calibrated() {
  static const WeylSigns signs(AdjointModel::calibrated());
  return signs;
}

} // namespace g2rs

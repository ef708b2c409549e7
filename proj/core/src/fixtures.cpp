#include "starforge/fixtures.hpp"

namespace starforge::fixtures {

using Spec = SpectralForest::NodeSpec;

ForestRef fx_a() {
  return SpectralForest::create({
      Spec{"M1", std::nullopt, RankOneGroup::rationals()},
      Spec{"M2", std::nullopt, RankOneGroup::integers()},
  });
}

ForestRef fx_b() {
  return SpectralForest::create({
      Spec{"P", std::nullopt, RankOneGroup::integers()},
      Spec{"M1", 0, RankOneGroup::rationals()},
      Spec{"M2", 0, RankOneGroup::integers()},
  });
}

ForestRef fx_c() {
  return SpectralForest::create({
      Spec{"P", std::nullopt, RankOneGroup::integers()},
      Spec{"M", 0, RankOneGroup::rationals()},
  });
}

ForestRef fx_d() {
  return SpectralForest::create({
      Spec{"P", std::nullopt, RankOneGroup::integers()},
      Spec{"M1", 0, RankOneGroup::integers()},
      Spec{"M2", 0, RankOneGroup::integers()},
  });
}

ForestRef fx_e5() {
  return SpectralForest::create({
      Spec{"M1", std::nullopt, RankOneGroup::rationals()},
      Spec{"M2", std::nullopt, RankOneGroup::n_adic(2)},
      Spec{"M3", std::nullopt, RankOneGroup::quadratic(0, 1, 2)},
      Spec{"M4", std::nullopt, RankOneGroup::integers()},
      Spec{"M5", std::nullopt, RankOneGroup::integers()},
  });
}

ForestRef chain_z() {
  return SpectralForest::create({Spec{"M", std::nullopt, RankOneGroup::integers()}});
}

ForestRef chain_zz() {
  return SpectralForest::create({
      Spec{"P", std::nullopt, RankOneGroup::integers()},
      Spec{"M", 0, RankOneGroup::integers()},
  });
}

ForestRef chain_qz() {
  return SpectralForest::create({
      Spec{"P", std::nullopt, RankOneGroup::rationals()},
      Spec{"M", 0, RankOneGroup::integers()},
  });
}

}  // namespace starforge::fixtures

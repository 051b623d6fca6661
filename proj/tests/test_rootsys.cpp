#include "g2rs/rootsys.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace g2rs;
using namespace g2rs::roots;

namespace {

WeylElement sa() { return WeylElement::simple(SimpleReflection::alpha); }
WeylElement sb() { return WeylElement::simple(SimpleReflection::beta); }

} // namespace

TEST_CASE("root membership") {
  int count = 0;
  for (int m = -4; m <= 4; ++m)
    for (int n = -3; n <= 3; ++n)
      if (is_root({m, n})) ++count;
  CHECK(count == 12);
  for (Root r : positive_roots) {
    CHECK(is_root(r));
    CHECK(is_root(-r));
  }
  CHECK_FALSE(is_root({0, 0}));
  CHECK_FALSE(is_root({2, 2}));
  CHECK_THROWS_AS(root_index({1, 2}), std::domain_error);
}

TEST_CASE("pairings") {
  CHECK(pairing(alpha, beta) == -1);
  CHECK(pairing(beta, alpha) == -3);
  CHECK(pairing(alpha, alpha) == 2);
  for (Root r : all_roots()) CHECK(pairing(r, r) == 2);
  CHECK_THROWS_AS(pairing(alpha, Root{1, 2}), std::domain_error);
  CHECK(inner_product(alpha, alpha) == 2);
  CHECK(inner_product(beta, beta) == 6);
  CHECK(inner_product(alpha, beta) == -3);
}

TEST_CASE("reflections") {
  CHECK(reflect(beta, alpha) == three_alpha_beta);
  CHECK(reflect(alpha, beta) == alpha_beta);
  CHECK(reflect(alpha, alpha) == -alpha);
  CHECK_THROWS_AS(reflect(alpha, Root{0, 0}), std::domain_error);
  for (Root g1 : all_roots())
    for (Root g2 : all_roots()) {
      CHECK(is_root(reflect(g1, g2)));
      CHECK(reflect(reflect(g1, g2), g2) == g1);
    }
}

TEST_CASE("weyl group") {
  auto W = weyl_group();
  CHECK(W.size() == 12);
  WeylElement p = sa() * sb();
  WeylElement r;
  for (int i = 0; i < 6; ++i) r = r * p;
  CHECK(r.is_identity());
  CHECK((sa() * sa()).is_identity());
  for (const auto &w : W) {
    std::set<Root> image;
    for (Root g : all_roots()) {
      CHECK(is_root(w.apply(g)));
      image.insert(w.apply(g));
    }
    CHECK(image.size() == 12);
    for (const auto &v : W) CHECK(std::find(W.begin(), W.end(), w * v) != W.end());
    CHECK((w * w.inverse()).is_identity());
    CHECK(WeylElement::from_word(w.word()) == w);
  }
}

TEST_CASE("double cosets") {
  auto cosets = double_coset_reps();
  REQUIRE(cosets.size() == 3);
  CHECK(cosets[0].representative.is_identity());
  CHECK(cosets[1].representative == sb() * sa());
  CHECK(cosets[2].representative == sb() * sa() * sb() * sa());
  std::size_t total = 0;
  std::vector<WeylElement> seen;
  for (const auto &c : cosets) {
    total += c.members.size();
    for (const auto &m : c.members) {
      CHECK(std::find(seen.begin(), seen.end(), m) == seen.end());
      seen.push_back(m);
    }
  }
  CHECK(total == 12);
  for (const auto &w : weyl_group()) CHECK(std::find(seen.begin(), seen.end(), w) != seen.end());
}

TEST_CASE("stabilizer data") {
  auto gamma = sb() * sa() * sb() * sa();
  auto g = stabilizer_data(gamma);
  CHECK(g.v_roots == std::vector<Root>{alpha_beta});
  CHECK(g.levi == LeviIntersection::borel);
  CHECK(gamma.apply(beta).positive());
  CHECK(in_p_prime(gamma.apply(beta)));

  auto one = stabilizer_data(WeylElement());
  CHECK(one.v_roots == std::vector<Root>(v_roots.begin(), v_roots.end()));

  auto delta = stabilizer_data(sb() * sa());
  for (Root r : delta.v_roots) CHECK(in_p_prime((sb() * sa()).apply(r)));

  CHECK_THROWS_AS(stabilizer_data(sa()), std::domain_error);
}

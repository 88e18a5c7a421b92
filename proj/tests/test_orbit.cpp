#include <catch_amalgamated.hpp>

#include <set>

#include "gradcount/gradcount.hpp"
#include "test_support.hpp"

using namespace gradcount;

namespace {

std::vector<WeightMap> collect(GammaEnumerator& en) {
  std::vector<WeightMap> out;
  WeightMap a;
  while (en.next(a)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("gamma enumeration on tiny cases") {
  // Z2, one block of size 2: the three weight vectors in ascending order
  GammaEnumerator en(2, BlockShape{2});
  CHECK(en.size() == 3);
  auto maps = collect(en);
  REQUIRE(maps.size() == 3);
  CHECK(maps[0].values == std::vector<std::uint32_t>{0, 2});
  CHECK(maps[1].values == std::vector<std::uint32_t>{1, 1});
  CHECK(maps[2].values == std::vector<std::uint32_t>{2, 0});

  // Z2, shape (1, 1): two choices per block
  GammaEnumerator en2(2, BlockShape{1, 1});
  CHECK(en2.size() == 4);
  CHECK(collect(en2).size() == 4);

  // |gamma((2), Z2xZ2)| = C(5, 2) = 10
  GammaEnumerator en3(4, BlockShape{2});
  CHECK(en3.size() == 10);
  CHECK(collect(en3).size() == 10);
}

TEST_CASE("gamma stream is strictly ascending with correct row sums") {
  for (const BlockShape& shape : {BlockShape{3}, BlockShape{2, 2}, BlockShape{1, 2, 1}}) {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      GammaEnumerator en(n, shape);
      std::vector<WeightMap> maps = collect(en);
      CHECK(Int(maps.size()) == en.size());
      for (std::size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1] < maps[i]);
      for (const auto& a : maps) {
        for (std::size_t b = 0; b < shape.blocks.size(); ++b) {
          std::uint64_t sum = 0;
          for (std::size_t g = 0; g < n; ++g) sum += a.values[b * n + g];
          CHECK(sum == shape.blocks[b]);
        }
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(GammaEnumerator(4, BlockShape{2}, 9), domain_error);
  CHECK_NOTHROW(GammaEnumerator(4, BlockShape{2}, 10));
  CHECK_THROWS_AS(count_orbits(GroupSpec(make_abelian("Z4")), BlockShape{3},
                               OrbitMethod::partition, 5),
                  domain_error);
}

TEST_CASE("the translation action") {
  CayleyGroup z2 = cayley_from_abelian(make_abelian("Z2"));
  WeightMap a{{2, 0}};

  // identity fixes everything
  CHECK(act(a, 0, z2, 1) == a);
  // translating by the nonidentity element swaps the two columns
  CHECK(act(a, 1, z2, 1).values == std::vector<std::uint32_t>{0, 2});

  // right-action law act(act(a,h),h') = act(a, hh') on all of gamma((2), Z2xZ2)
  CayleyGroup v4 = cayley_from_abelian(make_abelian("Z2xZ2"));
  GammaEnumerator en(4, BlockShape{2});
  WeightMap w;
  while (en.next(w)) {
    for (unsigned h = 0; h < 4; ++h)
      for (unsigned h2 = 0; h2 < 4; ++h2)
        CHECK(act(act(w, h, v4, 1), h2, v4, 1) == act(w, v4.mul(h, h2), v4, 1));
  }
}

TEST_CASE("orbit counts on frozen examples") {
  GroupSpec z2(make_abelian("Z2"));
  CHECK(count_orbits(z2, BlockShape{2}, OrbitMethod::partition) == 2);
  CHECK(count_orbits(z2, BlockShape{2}, OrbitMethod::burnside) == 2);

  GroupSpec v4(make_abelian("Z2xZ2"));
  CHECK(count_orbits(v4, BlockShape{2}, OrbitMethod::partition) == 4);
  CHECK(count_orbits(v4, BlockShape{2}, OrbitMethod::burnside) == 4);

  // trivial group: every weight map is its own orbit
  GroupSpec trivial{AbelianGroupType()};
  for (const BlockShape& shape : {BlockShape{4}, BlockShape{2, 3}}) {
    Int size = gamma_size(Int(1), shape);
    CHECK(count_orbits(trivial, shape, OrbitMethod::partition) == size);
    CHECK(count_orbits(trivial, shape, OrbitMethod::burnside) == size);
  }
}

TEST_CASE("oracle equivalence against the closed formula") {
  for (std::uint64_t order = 1; order <= 6; ++order) {
    for (const auto& type : abelian_types_of_order(order)) {
      GroupSpec g(type);
      for (std::uint64_t total = 1; total <= 5; ++total) {
        // all compositions of `total`
        std::vector<std::vector<std::uint64_t>> comps;
        std::vector<std::uint64_t> cur;
        auto rec = [&](auto&& self, std::uint64_t rest) -> void {
          if (rest == 0) {
            comps.push_back(cur);
            return;
          }
          for (std::uint64_t next = 1; next <= rest; ++next) {
            cur.push_back(next);
            self(self, rest - next);
            cur.pop_back();
          }
        };
        rec(rec, total);
        for (const auto& blocks : comps) {
          BlockShape shape(blocks);
          Int formula = count_elementary(g, shape);
          CHECK(count_orbits(g, shape, OrbitMethod::partition) == formula);
          CHECK(count_orbits(g, shape, OrbitMethod::burnside) == formula);
        }
      }
    }
  }
}

TEST_CASE("fixed point counts match the closed fixed-point shape") {
  std::vector<GroupSpec> groups;
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (const auto& t : abelian_types_of_order(n)) groups.emplace_back(t);
  groups.emplace_back(testsupport::symmetric_group_table(3));

  for (const auto& g : groups) {
    CayleyGroup table = oracle_table(g);
    Int n = g.order();
    for (const BlockShape& shape : {BlockShape{4}, BlockShape{2, 2}, BlockShape{1, 2, 3}}) {
      for (unsigned h = 0; h < table.order(); ++h) {
        std::uint64_t t = table.element_order(h);
        bool divides_all = true;
        for (std::uint64_t m : shape.blocks) divides_all = divides_all && (m % t == 0);
        Int expected = 0;
        if (divides_all) {
          expected = 1;
          for (std::uint64_t m : shape.blocks)
            expected *= binomial(Int(m / t) + n / t - 1, Int(m / t));
        }
        CHECK(fixed_point_count(g, shape, h) == expected);
      }
    }
  }
}

TEST_CASE("orbit sizes divide the group order and partition gamma") {
  for (const char* name : {"Z4", "Z2xZ2", "Z6", "Z8"}) {
    GroupSpec g(make_abelian(name));
    CayleyGroup table = oracle_table(g);
    BlockShape shape{4};
    auto reps = orbit_representatives(g, shape);
    Int covered = 0;
    for (const auto& rep : reps) {
      std::set<WeightMap> orbit;
      for (unsigned h = 0; h < table.order(); ++h) orbit.insert(act(rep, h, table, 1));
      CHECK(table.order() % orbit.size() == 0);
      // the representative is the lexicographic minimum of its orbit
      CHECK(*orbit.begin() == rep);
      covered += Int(orbit.size());
    }
    CHECK(covered == gamma_size(g.order(), shape));
    CHECK(Int(reps.size()) == count_orbits(g, shape, OrbitMethod::partition));
  }
}

TEST_CASE("orbit representatives are sorted and reproducible") {
  GroupSpec g(make_abelian("Z3xZ3"));
  BlockShape shape{3};
  auto first = orbit_representatives(g, shape);
  auto second = orbit_representatives(g, shape);
  CHECK(first == second);
  for (std::size_t i = 1; i < first.size(); ++i) CHECK(first[i - 1] < first[i]);
}

#include <catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "gradcount/gradcount.hpp"

using namespace gradcount;

TEST_CASE("square type detection") {
  CHECK(is_square_type(AbelianGroupType()));
  CHECK(is_square_type(make_abelian("Z2xZ2")));
  CHECK(is_square_type(make_abelian("Z4xZ4")));
  CHECK(is_square_type(make_abelian("Z2xZ2xZ3xZ3")));
  CHECK(is_square_type(make_abelian("Z2xZ2xZ2xZ2")));
  CHECK_FALSE(is_square_type(make_abelian("Z2")));
  CHECK_FALSE(is_square_type(make_abelian("Z4")));
  CHECK_FALSE(is_square_type(make_abelian("Z4xZ2")));
  CHECK_FALSE(is_square_type(make_abelian("Z4xZ2xZ2")));
  CHECK_FALSE(is_square_type(make_abelian("Z4xZ9")));
}

TEST_CASE("square-type subgroup selection") {
  CHECK(square_type_subgroups(make_abelian("Z2"), 2).empty());
  CHECK(square_type_subgroups(make_abelian("Z4"), 2).empty());

  auto v4 = make_abelian("Z2xZ2");
  auto ts = square_type_subgroups(v4, 2);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].elements.size() == 4);
  CHECK(ts[0].iso_type == v4);

  // k = 1 always selects exactly the trivial subgroup
  for (const char* name : {"Z1", "Z2", "Z6", "Z2xZ2", "Z12"}) {
    auto g = make_abelian(name);
    auto t1 = square_type_subgroups(g, 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].elements == std::vector<std::uint64_t>{0});
  }

  // Z4xZ4 contains Z2xZ2 (one copy) and itself
  auto z4z4 = make_abelian("Z4xZ4");
  CHECK(square_type_subgroups(z4z4, 2).size() == 1);
  CHECK(square_type_subgroups(z4z4, 4).size() == 1);
}

TEST_CASE("nondegenerate alternating bicharacter counts") {
  CHECK(count_nondegenerate_alternating(AbelianGroupType()) == 1);
  CHECK(count_nondegenerate_alternating(make_abelian("Z2")) == 0);
  CHECK(count_nondegenerate_alternating(make_abelian("Z4")) == 0);
  CHECK(count_nondegenerate_alternating(make_abelian("Z2xZ2")) == 1);

  // Z_p x Z_p: the pairing of the two generators must be a primitive p-th root
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    auto g = make_abelian("Z" + std::to_string(p) + "xZ" + std::to_string(p));
    CHECK(count_nondegenerate_alternating(g) == p - 1);
  }

  // Z4 x Z4: c_12 must be an odd residue mod 4
  CHECK(count_nondegenerate_alternating(make_abelian("Z4xZ4")) == 2);

  // Z_2^4: 28 symplectic forms over F_2, |GL(4,2)| / |Sp(4,2)| = 20160 / 720
  CHECK(count_nondegenerate_alternating(make_abelian("Z2xZ2xZ2xZ2")) == 28);

  CHECK_THROWS_AS(count_nondegenerate_alternating(make_abelian("Z512")), domain_error);
}

TEST_CASE("bicharacters built from the matrix are alternating") {
  Bicharacter b;
  b.generator_orders = {2, 2};
  b.exponent = 2;
  b.entries = {0, 1, 1, 0};
  CHECK(b.nondegenerate());
  for (std::uint64_t x = 0; x < 2; ++x)
    for (std::uint64_t y = 0; y < 2; ++y) CHECK(b.pairing_exponent({x, y}, {x, y}) == 0);

  Bicharacter zero;
  zero.generator_orders = {2, 2};
  zero.exponent = 2;
  zero.entries = {0, 0, 0, 0};
  CHECK_FALSE(zero.nondegenerate());
}

TEST_CASE("the count is an invariant of the isomorphism type") {
  // every order-4 square-type subgroup, however embedded, reports the same count
  for (const char* ambient : {"Z2xZ2xZ2", "Z4xZ4", "Z2xZ2xZ4"}) {
    auto g = make_abelian(ambient);
    for (const auto& t : square_type_subgroups(g, 2)) {
      CHECK(t.iso_type == make_abelian("Z2xZ2"));
      CHECK(count_nondegenerate_alternating(t.iso_type) == 1);
      CHECK(division_count_of_type(t.iso_type) == 1);
    }
  }
}

TEST_CASE("positive count exactly on square types") {
  // brute-force count vs the structural square-type test, independent routes
  for (const char* name : {"Z2xZ2xZ2", "Z4xZ2", "Z12", "Z2xZ2xZ9", "Z6xZ6"}) {
    auto g = make_abelian(name);
    for (const auto& h : enumerate_subgroups(g)) {
      Int d = count_nondegenerate_alternating(h.iso_type);
      CHECK((d > 0) == is_square_type(h.iso_type));
    }
  }
}

TEST_CASE("memoized counts are stable under concurrent access") {
  // D factors across primes: on Z6xZ6 the 2-part admits 1 nondegenerate
  // choice and the 3-part admits 2, so D = 2.
  auto g = make_abelian("Z6xZ6");
  Int serial = count_nondegenerate_alternating(g);
  CHECK(serial == 2);

  std::vector<std::thread> workers;
  std::vector<Int> results(8);
  for (std::size_t i = 0; i < results.size(); ++i)
    workers.emplace_back([&results, &g, i] { results[i] = division_count_of_type(g); });
  for (auto& w : workers) w.join();
  for (const Int& r : results) CHECK(r == serial);
}

TEST_CASE("division census") {
  auto v4 = make_abelian("Z2xZ2");
  auto census = division_census(v4, 2);
  REQUIRE(census.size() == 1);
  CHECK(census[0].first.elements.size() == 4);
  CHECK(census[0].second == 1);

  auto z3z3 = make_abelian("Z3xZ3");
  auto census3 = division_census(z3z3, 3);
  REQUIRE(census3.size() == 1);
  CHECK(census3[0].second == 2);

  CHECK(division_census(make_abelian("Z4"), 2).empty());
}

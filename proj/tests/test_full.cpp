#include <catch_amalgamated.hpp>

#include "gradcount/gradcount.hpp"

using namespace gradcount;

TEST_CASE("full counts on frozen examples") {
  // Z2, shape (2): T(Z2, 2) is empty, so N = E = 2
  CHECK(count_all(make_abelian("Z2"), BlockShape{2}) == 2);

  // Z2xZ2, shape (2): 4 elementary classes plus the one division grading
  CHECK(count_all(make_abelian("Z2xZ2"), BlockShape{2}) == 5);
  CHECK(count_all_matrix(make_abelian("Z2xZ2"), 2) == 5);

  // trivial group: only the trivial grading
  CHECK(count_all(AbelianGroupType(), BlockShape{5}) == 1);
  CHECK(count_all(AbelianGroupType(), BlockShape{2, 4}) == 1);

  // m = 1: only k = 1 contributes and E(G, 1) = 1
  for (const char* name : {"Z2", "Z2xZ2", "Z12", "Z3xZ3"})
    CHECK(count_all_matrix(make_abelian(name), 1) == 1);
}

TEST_CASE("Z3xZ3 at m = 3 decomposes into the elementary count plus two") {
  auto g = make_abelian("Z3xZ3");
  Int e = count_elementary_matrix(GroupSpec(g), 3);
  // oracle validation of the elementary part
  CHECK(e == count_orbits(GroupSpec(g), BlockShape{3}, OrbitMethod::partition));
  CHECK(e == 21);
  CHECK(count_all_matrix(g, 3) == e + 2);
}

TEST_CASE("block-shape census equals elementary count plus division terms") {
  // Z2xZ2 on UT(2,2): the k=2 term contributes D(Z2xZ2,2) * E(Z1,(1,1)) = 1
  auto g = make_abelian("Z2xZ2");
  Int e = count_elementary(GroupSpec(g), BlockShape{2, 2});
  CHECK(e == count_orbits(GroupSpec(g), BlockShape{2, 2}, OrbitMethod::burnside));
  CHECK(count_all(g, BlockShape{2, 2}) == e + 1);

  // odd blocks kill every k > 1
  CHECK(count_all(g, BlockShape{3, 5}) == count_elementary(GroupSpec(g), BlockShape{3, 5}));
}

TEST_CASE("every census term fires on Z6xZ6 at m = 6") {
  // k = 1: E(Z6xZ6, 6); k = 2: D(Z2xZ2) * E(Z3xZ3, 3) = 21;
  // k = 3: D(Z3xZ3) * E(Z2xZ2, 2) = 2 * 4; k = 6: D(Z6xZ6) * E(Z1, 1) = 2.
  auto g = make_abelian("Z6xZ6");
  Int e = count_elementary_matrix(GroupSpec(g), 6);
  CHECK(e == 125016);
  CHECK(count_all_matrix(g, 6) == e + 21 + 8 + 2);
}

TEST_CASE("N equals E for cyclic groups of squarefree order") {
  for (const char* name : {"Z6", "Z10", "Z15", "Z30"}) {
    auto g = make_abelian(name);
    GroupSpec spec(g);
    for (std::uint64_t m = 1; m <= 30; ++m)
      CHECK(count_all_matrix(g, m) == count_elementary_matrix(spec, m));
  }
}

TEST_CASE("N dominates E everywhere") {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for (const auto& type : abelian_types_of_order(n)) {
      GroupSpec spec(type);
      for (std::uint64_t m = 1; m <= 12; ++m)
        CHECK(count_all_matrix(type, m) >= count_elementary_matrix(spec, m));
    }
  }
}

TEST_CASE("sandwich reports") {
  // Z2 at odd m: no k > 1 divides m, so N = E
  for (std::uint64_t m : {1ull, 3ull, 5ull, 9ull}) {
    auto rep = sandwich_check(make_abelian("Z2"), m);
    CHECK(rep.elementary == rep.all);
    CHECK(rep.correction == 0);
    CHECK(rep.bounds_hold);
    CHECK(rep.correction_matches);
    CHECK(rep.ratio == 1);
  }

  // Z2xZ2 at m = 2: exactly one excess class
  auto rep = sandwich_check(make_abelian("Z2xZ2"), 2);
  CHECK(rep.elementary == 4);
  CHECK(rep.all == 5);
  CHECK(rep.correction == 1);
  CHECK(rep.bounds_hold);
  CHECK(rep.correction_matches);
  CHECK(rep.ratio == Rat(5, 4));

  // trivial group
  auto rep1 = sandwich_check(AbelianGroupType(), 4);
  CHECK(rep1.elementary == 1);
  CHECK(rep1.all == 1);

  // property sweep
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for (const auto& type : abelian_types_of_order(n)) {
      for (std::uint64_t m = 1; m <= 10; ++m) {
        auto r = sandwich_check(type, m);
        CHECK(r.bounds_hold);
        CHECK(r.correction_matches);
        CHECK(r.ratio >= 1);
      }
    }
  }
}

TEST_CASE("the excess is eventually negligible") {
  // (N - E) * |G|! / m^(|G|-1) shrinks along m = 10^3, 10^4, 10^5 (all in the
  // gcd-4 class, keeping the k = 2 census term active for Z2xZ2)
  auto g = make_abelian("Z2xZ2");
  GroupSpec spec(g);
  Rat prev;
  bool first = true;
  for (std::uint64_t m : {1'000ull, 10'000ull, 100'000ull}) {
    Int diff = count_all_matrix(g, m) - count_elementary_matrix(spec, m);
    CHECK(diff > 0);
    Rat scaled = Rat(diff * factorial(4), int_pow(Int(m), 3));
    if (!first) CHECK(scaled < prev);
    prev = scaled;
    first = false;
  }
  CHECK(prev < Rat(1, 1'000'000));
}

#include <doctest.h>

#include "residuum/errors.hpp"
#include "residuum/sweep.hpp"

using namespace residuum;

namespace {

const MonomialSeq ex41(2, {{5, 0}, {4, 1}, {2, 2}, {0, 3}});
const MonomialSeq ex54(2, {{2, 0}, {1, 1}, {0, 2}});

MonomialIdeal pure(std::int64_t a, std::int64_t b) { return MonomialIdeal::pure_powers(ExpVec{a, b}); }

}  // namespace

TEST_CASE("nine annihilators for the four-monomial example, stable from pmax 6 to 8") {
  const auto six = enumerate_annihilators(ex41, 6);
  CHECK(six.weights == 1296);
  CHECK(six.classes.size() == 9);
  CHECK(six.classes.front().representative == Weight::ones(4));
  const auto eight = enumerate_annihilators(ex41, 8);
  CHECK(eight.classes.size() == 9);
  std::uint64_t total = 0;
  for (const auto& c : six.classes) total += c.count;
  CHECK(total == six.weights);
}

TEST_CASE("three essentiality patterns for the square of the maximal ideal") {
  const auto s = enumerate_annihilators(ex54, 3);
  REQUIRE(s.classes.size() == 3);
  const auto all_three = intersect(intersect(pure(3, 1), pure(2, 2)), pure(1, 3));
  const auto only_13 = pure(2, 2);
  const auto pair = intersect(pure(3, 1), pure(1, 3));
  CHECK(s.classes[0].ideal == all_three);
  CHECK(s.classes[0].representative == Weight({1, 1, 1}));
  CHECK(s.classes[1].ideal == pair);
  CHECK(s.classes[2].ideal == only_13);
}

TEST_CASE("regular sequences have a single annihilator") {
  for (std::int64_t pmax = 1; pmax <= 5; ++pmax)
    CHECK(enumerate_annihilators(MonomialSeq(2, {{5, 0}, {0, 3}}), pmax).classes.size() == 1);
}

TEST_CASE("threaded sweep is identical to the serial sweep") {
  const auto serial = enumerate_annihilators(ex41, 5);
  for (unsigned t : {2u, 3u, 8u}) {
    SweepOptions o;
    o.threads = t;
    const auto par = enumerate_annihilators(ex41, 5, o);
    REQUIRE(par.classes.size() == serial.classes.size());
    for (std::size_t k = 0; k < par.classes.size(); ++k) {
      CHECK(par.classes[k].ideal == serial.classes[k].ideal);
      CHECK(par.classes[k].representative == serial.classes[k].representative);
      CHECK(par.classes[k].count == serial.classes[k].count);
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(enumerate_annihilators(ex41, 57), ScaleRefusedError);
  SweepOptions small;
  small.guard = 10;
  CHECK_THROWS_AS(enumerate_annihilators(ex54, 3, small), ScaleRefusedError);
  small.force = true;
  CHECK(enumerate_annihilators(ex54, 3, small).classes.size() == 3);
  CHECK_THROWS_AS(enumerate_annihilators(ex54, 0), DomainError);
}

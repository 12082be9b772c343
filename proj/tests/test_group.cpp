#include <doctest.h>

#include <random>

#include "palinwidth/errors.hpp"
#include "palinwidth/group.hpp"

using namespace palinwidth;

namespace {

Element s(long long v) { return Element::scalar(v); }
Element w(std::vector<int> letters) { return Element::word(std::move(letters)); }

// S3 as permutations of {0,1,2}, indexed lexicographically.
GroupSpec s3_spec() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupSpec::finite_table(table, {"e", "p", "q", "r", "u", "v"});
}

}  // namespace

TEST_CASE("integer arithmetic") {
  const Group z(GroupSpec::integer());
  CHECK(z.multiply(s(3), s(4)) == s(7));
  CHECK(z.invert(s(5)) == s(-5));
  CHECK(z.contains(SubgroupSpec::index(2), s(6)));
  CHECK_FALSE(z.contains(SubgroupSpec::index(2), s(3)));
  const BigInt huge("123456789012345678901234567890");
  CHECK(z.multiply(Element::scalar(huge), Element::scalar(huge)).value() == huge * 2);
}

TEST_CASE("cyclic arithmetic") {
  const Group c4(GroupSpec::cyclic(4));
  CHECK(c4.multiply(s(3), s(2)) == s(1));
  CHECK(c4.is_identity(s(0)));
  CHECK(c4.contains(SubgroupSpec::index(2), s(2)));
  CHECK(c4.index(SubgroupSpec::index(2)) == BigInt(2));
  CHECK_THROWS_AS(c4.multiply(s(7), s(1)), UsageError);
  CHECK(c4.parse("x x x x^2") == s(1));
}

TEST_CASE("free group reduction") {
  const Group f2(GroupSpec::free(2, {"x", "y"}));
  CHECK(f2.multiply(w({1, -2}), w({2, 1})) == w({1, 1}));
  CHECK(f2.equals(f2.parse("x^2"), f2.parse("x x")));
  CHECK(f2.format(w({1, 1, -2, 1})) == "x^2 y^-1 x");
  CHECK_THROWS_AS(f2.check(w({1, -1})), UsageError);
}

TEST_CASE("finite table validation") {
  CHECK_NOTHROW(Group{s3_spec()});
  auto bad = s3_spec();
  std::swap(bad.table[1][2], bad.table[1][3]);
  CHECK_THROWS_AS(Group{bad}, UsageError);
  auto no_identity = s3_spec();
  no_identity.table[0][0] = 1;
  CHECK_THROWS_AS(Group{no_identity}, UsageError);
}

TEST_CASE("group axioms on samples") {
  const Group s3(s3_spec());
  const Group f2(GroupSpec::free(2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pick = [&] { return s(static_cast<long long>(rng() % 6)); };
    const Element a = pick(), b = pick(), c = pick();
    CHECK(s3.multiply(s3.multiply(a, b), c) == s3.multiply(a, s3.multiply(b, c)));
    CHECK(s3.invert(s3.invert(a)) == a);
    CHECK(s3.is_identity(s3.multiply(a, s3.invert(a))));

    const auto word = [&] {
      Element x = f2.identity();
      for (int i = 0; i < 6; ++i) x = f2.multiply(x, f2.generator_power(rng() % 2, static_cast<long long>(rng() % 5) - 2));
      return x;
    };
    const Element x = word(), y = word(), z = word();
    CHECK(f2.multiply(f2.multiply(x, y), z) == f2.multiply(x, f2.multiply(y, z)));
    CHECK(f2.is_identity(f2.multiply(x, f2.invert(x))));
  }
}

TEST_CASE("coset splits recombine") {
  const Group z(GroupSpec::integer());
  const Group s3(s3_spec());
  const Group f1(GroupSpec::free(1, {"g"}));
  const SubgroupSpec three = SubgroupSpec::index(3);
  for (long long v = -20; v <= 20; ++v) {
    const CosetSplit r = z.right_coset_split(three, s(v));
    CHECK(z.contains(three, r.part));
    CHECK(z.multiply(r.part, r.rep) == s(v));
    CHECK(z.right_coset_split(three, r.rep).rep == r.rep);
  }
  const SubgroupSpec order2 = SubgroupSpec::cyclic_generated(s(1));
  for (long long v = 0; v < 6; ++v) {
    const CosetSplit r = s3.right_coset_split(order2, s(v));
    CHECK(s3.contains(order2, r.part));
    CHECK(s3.multiply(r.part, r.rep) == s(v));
    const CosetSplit l = s3.left_coset_split(order2, s(v));
    CHECK(s3.multiply(l.rep, l.part) == s(v));
  }
  const SubgroupSpec g3 = SubgroupSpec::cyclic_generated(f1.generator_power(0, 3));
  for (long long k = -7; k <= 7; ++k) {
    const Element x = f1.generator_power(0, k);
    const CosetSplit r = f1.right_coset_split(g3, x);
    CHECK(f1.multiply(r.part, r.rep) == x);
    CHECK(f1.contains(g3, r.part));
  }
}

TEST_CASE("subgroup membership and index") {
  const Group s3(s3_spec());
  const auto sub = SubgroupSpec::element_list({s(0), s(3), s(4)});
  CHECK_NOTHROW(s3.validate(sub));
  CHECK(s3.index(sub) == BigInt(2));
  CHECK_THROWS_AS(s3.validate(SubgroupSpec::element_list({s(0), s(1), s(2)})), UsageError);
  const Group z(GroupSpec::integer());
  CHECK_FALSE(z.index(SubgroupSpec::trivial()).has_value());
  CHECK_FALSE(z.is_proper(SubgroupSpec::index(1)));
}

TEST_CASE("index-pair isomorphism") {
  const Isomorphism phi(IsoSpec::index_pair(2, 3));
  CHECK(phi.apply(Direction::Forward, s(4)) == s(6));
  CHECK(phi.apply(Direction::Backward, s(3)) == s(2));
  CHECK(phi.apply(Direction::Forward, s(0)) == s(0));
  CHECK_THROWS_AS(phi.apply(Direction::Forward, s(3)), DomainError);
  for (long long k = -10; k <= 10; ++k) {
    CHECK(phi.apply(Direction::Backward, phi.apply(Direction::Forward, s(2 * k))) == s(2 * k));
    CHECK(phi.apply(Direction::Forward, s(2 * k + 4)).value() ==
          phi.apply(Direction::Forward, s(2 * k)).value() + phi.apply(Direction::Forward, s(4)).value());
  }
}

TEST_CASE("isomorphism tables are validated") {
  const Group c4(GroupSpec::cyclic(4));
  const auto c = SubgroupSpec::index(2);
  CHECK_NOTHROW(validate_isomorphism(c4, c, c4, c, IsoSpec::from_pairs({{s(0), s(0)}, {s(2), s(2)}})));
  CHECK_THROWS_AS(validate_isomorphism(c4, c, c4, c, IsoSpec::from_pairs({{s(0), s(2)}, {s(2), s(0)}})),
                  UsageError);
  CHECK_THROWS_AS(validate_isomorphism(c4, c, c4, c, IsoSpec::from_pairs({{s(0), s(0)}})), UsageError);
}

TEST_CASE("double coset factorization") {
  const Group z(GroupSpec::integer());
  const auto c = SubgroupSpec::index(3);
  auto f = double_coset_factor(z, c, s(1), s(7));
  REQUIRE(f);
  CHECK(f->u == s(6));
  CHECK(f->eps == 1);
  CHECK(f->u_prime == s(0));
  f = double_coset_factor(z, c, s(1), s(2));
  REQUIRE(f);
  CHECK(f->u == s(3));
  CHECK(f->eps == -1);
  CHECK_FALSE(double_coset_factor(z, c, s(1), s(3)));
  CHECK_THROWS_AS(double_coset_factor(z, SubgroupSpec::index(2), s(1), s(3)), UnsupportedCase);
  CHECK_THROWS_AS(double_coset_factor(z, c, s(3), s(3)), DomainError);
}

TEST_CASE("double coset factors reproduce x and invert") {
  const Group s3(s3_spec());
  const auto c = SubgroupSpec::cyclic_generated(s(1));
  const Group f2(GroupSpec::free(2, {"x", "y"}));
  const auto fc = SubgroupSpec::cyclic_generated(f2.parse("x^2"));
  const Element a = f2.parse("y");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Element u = f2.generator_power(0, static_cast<long long>(rng() % 7) * 2 - 6);
    const Element v = f2.generator_power(0, static_cast<long long>(rng() % 7) * 2 - 6);
    const int eps = rng() % 2 ? 1 : -1;
    const Element x = f2.multiply(f2.multiply(u, f2.power(a, eps)), v);
    const auto f = double_coset_factor(f2, fc, a, x);
    REQUIRE(f);
    CHECK(f->eps == eps);
    CHECK(f2.contains(fc, f->u));
    CHECK(f2.contains(fc, f->u_prime));
    CHECK(f2.multiply(f2.multiply(f->u, f2.power(a, f->eps)), f->u_prime) == x);
    const auto g = double_coset_factor(f2, fc, a, f2.invert(x));
    REQUIRE(g);
    CHECK(g->eps == -eps);
  }
  for (long long v = 0; v < 6; ++v) {
    if (s3.contains(c, s(v)) || double_cosets_coincide(s3, c, s(v))) continue;
    for (long long x = 0; x < 6; ++x) {
      if (const auto f = double_coset_factor(s3, c, s(v), s(x))) {
        CHECK(s3.multiply(s3.multiply(f->u, s3.power(s(v), f->eps)), f->u_prime) == s(x));
      }
    }
  }
}

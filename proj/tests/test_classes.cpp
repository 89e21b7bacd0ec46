#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "support/random_spaces.hpp"
#include "symclass/classes.hpp"
#include "symclass/error.hpp"

using namespace symclass;
using S = SubgroupClass;

namespace {

ClassSet cyclic_range(int lo, int hi) {
  ClassSet out;
  for (int n = lo; n <= hi; ++n)
    out.insert(S::cyclic(n));
  return out;
}

ClassSet dihedral_range(int lo, int hi) {
  ClassSet out;
  for (int n = lo; n <= hi; ++n)
    out.insert(S::dihedral(n));
  return out;
}

ClassSet join(std::initializer_list<ClassSet> parts) {
  ClassSet out;
  for (const auto& p : parts)
    merge_into(out, p);
  return out;
}

// Classes of 2 H^k, listed directly.
ClassSet doubled_irreducible(int k) {
  const ClassSet irr = irreducible_classes(k);
  ClassSet out = join({{S::identity(), S::so3()}, cyclic_range(2, k), dihedral_range(2, k)});
  for (auto c : {S::tetrahedral(), S::octahedral(), S::icosahedral(), S::so2(), S::o2()})
    if (irr.count(c))
      out.insert(c);
  return out;
}

} // namespace

TEST_CASE("irreducible classes") {
  CHECK(irreducible_classes(0) == ClassSet{S::so3()});
  CHECK(irreducible_classes(1) == ClassSet{S::so2(), S::so3()});
  CHECK(irreducible_classes(2) == ClassSet{S::dihedral(2), S::o2(), S::so3()});
  CHECK(irreducible_classes(3) == join({{S::identity(), S::tetrahedral(), S::so2(), S::so3()},
                                        cyclic_range(2, 3), dihedral_range(2, 3)}));
  CHECK(irreducible_classes(4) == ClassSet{S::identity(), S::cyclic(2), S::dihedral(2), S::dihedral(3),
                                           S::dihedral(4), S::o2(), S::octahedral(), S::so3()});
  CHECK_THROWS_AS(irreducible_classes(-1), DomainError);
  CHECK_THROWS_AS(irreducible_classes(max_axial_order + 1), DomainError);

  auto has = [](int k, S c) { return irreducible_classes(k).count(c) == 1; };
  const std::vector<int> with_t{3, 6, 7, 9, 10, 11, 12, 13};
  const std::vector<int> without_o{1, 2, 3, 5, 7, 11};
  const std::vector<int> with_i{6, 10, 12, 15, 18, 20, 21, 22, 24, 28, 30};
  const std::vector<int> without_i{1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 14, 16, 17, 19, 23, 29};
  for (int k : with_t)
    CHECK(has(k, S::tetrahedral()));
  for (int k : {1, 2, 4, 5, 8})
    CHECK_FALSE(has(k, S::tetrahedral()));
  for (int k : without_o)
    CHECK_FALSE(has(k, S::octahedral()));
  for (int k : {4, 6, 8, 9, 10, 12, 13})
    CHECK(has(k, S::octahedral()));
  for (int k : with_i)
    CHECK(has(k, S::icosahedral()));
  for (int k : without_i)
    CHECK_FALSE(has(k, S::icosahedral()));
  for (int k = 1; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(has(k, S::so2()) == (k % 2 == 1));
    CHECK(has(k, S::o2()) == (k % 2 == 0));
    CHECK(has(k, S::identity()) == (k >= 3));
    CHECK(has(k, S::dihedral(std::max(k, 2))) == (k >= 2));
    CHECK(has(k, S::cyclic(k)) == (k % 2 == 1 && k >= 3));
    if (k % 2 == 0 && k >= 4) {
      CHECK(has(k, S::cyclic(k / 2)));
      CHECK_FALSE(has(k, S::cyclic(k / 2 + 1)));
    }
  }
}

TEST_CASE("direct sums") {
  CHECK(isotypic_classes(Isotypic{{2, 2}}) == ClassSet{S::identity(), S::cyclic(2), S::dihedral(2), S::o2(), S::so3()});
  CHECK(isotypic_classes(Isotypic{{0, 5}}) == ClassSet{S::so3()});
  CHECK(isotypic_classes(Isotypic{{0, 2}, {2, 2}, {4, 1}}) ==
        ClassSet{S::identity(), S::cyclic(2), S::dihedral(2), S::dihedral(3), S::dihedral(4), S::o2(),
                 S::octahedral(), S::so3()});
  CHECK(isotypic_classes(Isotypic{{3, 1}}) == irreducible_classes(3));
  CHECK_THROWS_AS(isotypic_classes(Isotypic{}), DomainError);
}

TEST_CASE("repeated irreducibles") {
  for (int k = 1; k <= 12; ++k) {
    CAPTURE(k);
    const ClassSet two = isotypic_classes(Isotypic{{k, 2}});
    CHECK(two == doubled_irreducible(k));
    for (int n = 3; n <= 4; ++n) {
      CHECK(isotypic_classes(Isotypic{{k, static_cast<Multiplicity>(n)}}) == two);
      CHECK(isotypic_classes(Isotypic{{k, static_cast<Multiplicity>(n)}}, {ClipsTable::Geometric, true}) == two);
    }
  }
}

TEST_CASE("pairs of even irreducibles") {
  const ClassSet base{S::identity(), S::o2(), S::so3()};
  CHECK(isotypic_classes(Isotypic{{2, 1}, {4, 1}}) ==
        join({base, cyclic_range(2, 2), dihedral_range(2, 4), {S::octahedral()}}));
  CHECK(isotypic_classes(Isotypic{{4, 1}, {6, 1}}) ==
        join({base, cyclic_range(2, 4), dihedral_range(2, 6), {S::tetrahedral(), S::octahedral(), S::icosahedral()}}));
  CHECK(isotypic_classes(Isotypic{{2, 1}, {6, 1}}) ==
        join({base, cyclic_range(2, 3), dihedral_range(2, 6), {S::tetrahedral(), S::octahedral(), S::icosahedral()}}));
}

TEST_CASE("naive and stabilized folds agree") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> order(0, 8), mult(1, 5);
  for (int i = 0; i < 60; ++i) {
    Isotypic a;
    for (int j = 0; j < 3; ++j)
      a.add(order(rng), static_cast<Multiplicity>(mult(rng)));
    CHECK(isotypic_classes(a) == isotypic_classes(a, {ClipsTable::Geometric, true}));
  }
}

TEST_CASE("fold order does not matter") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> order(0, 9);
  for (int i = 0; i < 40; ++i) {
    std::vector<int> parts;
    for (int j = 0; j < 4; ++j)
      parts.push_back(order(rng));
    Isotypic a;
    for (int k : parts)
      a.add(k, 1);
    const ClassSet expected = isotypic_classes(a);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(parts.begin(), parts.end(), rng);
      ClassSet acc{S::so3()};
      for (int k : parts)
        acc = clips_sets(acc, irreducible_classes(k));
      CHECK(acc == expected);
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(sym_space_classes(1) == ClassSet{S::dihedral(2), S::o2(), S::so3()});
  CHECK(sym_space_classes(2).size() == 8);
  CHECK(sym_space_classes(2) == isotypic_classes(Isotypic{{0, 2}, {2, 2}, {4, 1}}));
  CHECK(sym_space_classes(4).size() == 18);
  CHECK(generic_space_classes(1) ==
        ClassSet{S::identity(), S::cyclic(2), S::dihedral(2), S::so2(), S::o2(), S::so3()});
  CHECK(generic_space_classes(2).size() == 12);
  CHECK(generic_space_classes(3).size() == 17);
  for (int n = 3; n <= 10; ++n) {
    CHECK(sym_space_classes(n).size() == static_cast<std::size_t>(2 * (2 * n + 1)));
    CHECK(generic_space_classes(n).size() == static_cast<std::size_t>(4 * n + 5));
  }
  for (int n = 1; n <= 10; ++n) {
    CHECK(is_subset(sym_space_classes(n), generic_space_classes(n)));
    CHECK(sym_space_classes(n) == isotypic_classes(sym_power_vector(2 * n)));
    CHECK(generic_space_classes(n) == isotypic_classes(generic(2 * n)));
  }
  CHECK_THROWS_AS(sym_space_classes(0), DomainError);
  CHECK_THROWS_AS(generic_space_classes(-2), DomainError);
}

TEST_CASE("classifying spaces") {
  auto report = [](const char* text) { return classify_space(parse_space(text)); };
  const ClassReport ela = report("Ela");
  CHECK(ela.count() == 8);
  CHECK(ela.even_harmonic);
  CHECK(ela.order == 4);
  CHECK(ela.closed_form == ClosedForm::SymmetricSpace);
  CHECK(ela.classes.count(S::so3()) == 1);

  const ClassReport ces = report("Ces");
  CHECK(ces.count() == 17);
  CHECK_FALSE(ces.even_harmonic);
  CHECK(ces.closed_form == ClosedForm::GenericSpace);
  CHECK(ces.classes == join({{S::identity(), S::so2(), S::o2(), S::tetrahedral(), S::octahedral(),
                              S::icosahedral(), S::so3()},
                             cyclic_range(2, 6), dihedral_range(2, 6)}));

  const ClassReport sgr = report("S2(Sym(2)*Sym(2))");
  CHECK(sgr.count() == 21);
  CHECK(sgr.closed_form == ClosedForm::GenericSpace);
  CHECK(sgr.classes == generic_space_classes(4));

  CHECK(report("Photo").count() == 12);
  CHECK(report("Photo").closed_form == ClosedForm::GenericSpace);
  CHECK(report("Flex").count() == 12);
  CHECK(report("Fgr").count() == 17);

  const ClassReport h = report("H(6)");
  CHECK(h.closed_form == ClosedForm::None);
  CHECK(report("H(4)").closed_form == ClosedForm::SymmetricSpace);
  CHECK(report("H(0)").closed_form == ClosedForm::None);
  CHECK(report("H(0)").order == 0);

  CHECK_THROWS_AS(report("V"), DomainError);
  CHECK_THROWS_AS(report("Sym(3)*Sym(2)"), DomainError);
  CHECK_THROWS_AS(report("S2(Sym(40))"), DomainError);
}

TEST_CASE("random spaces fall into one of the two closed forms") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const SpaceExpr e = testing::random_even_space(rng, 10);
    const ClassReport r = classify_space(e);
    CAPTURE(e.str());
    const int n = r.order / 2;
    CHECK(r.order == 2 * n);
    CHECK(r.closed_form != ClosedForm::None);
    CHECK((r.closed_form == ClosedForm::SymmetricSpace) == r.even_harmonic);
    CHECK(is_subset(sym_space_classes(n), r.classes));
    CHECK(is_subset(r.classes, generic_space_classes(n)));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvechain/bounds.hpp"
#include "curvechain/errors.hpp"

using namespace curvechain;

namespace {

int val(const Bound& b) {
  REQUIRE(b.value.has_value());
  return *b.value;
}

}  // namespace

TEST_CASE("cyclic chain anchors") {
  CHECK(val(max_cyclic_chain(Surface{0, 5, 0})) == 5);
  CHECK(val(max_cyclic_chain(Surface{0, 9, 0})) == 9);
  CHECK(val(max_cyclic_chain(Surface{1, 1, 0})) == 3);
  CHECK(val(max_cyclic_chain(Surface{1, 2, 0})) == 5);
  CHECK(val(max_cyclic_chain(Surface{1, 4, 0})) == 6);
  CHECK(val(max_cyclic_chain(Surface{2, 0, 0})) == 6);
  CHECK(val(max_cyclic_chain(Surface{2, 1, 0})) == 6);
  CHECK(val(max_cyclic_chain(Surface{3, 1, 0})) == 8);
  CHECK(val(max_cyclic_chain(Surface{2, 3, 0})) == 7);
  CHECK(max_cyclic_chain(Surface{0, 4, 0}).kind == BoundKind::OutOfTableRange);
  CHECK(max_cyclic_chain(Surface{1, 0, 0}).kind == BoundKind::OutOfTableRange);
  for (int g = 0; g <= 4; ++g)
    for (int p = 0; p <= 8; ++p) {
      auto b = max_cyclic_chain(Surface{g, p, 0});
      if (b.kind == BoundKind::Exact) CHECK(val(b) >= 3);
    }
}

TEST_CASE("boundary folds into punctures for every table") {
  for (int g = 0; g <= 4; ++g)
    for (int p = 0; p <= 6; ++p)
      for (int b = 1; b <= 3; ++b) {
        Surface holed{g, p, b};
        Surface folded{g, p + b, 0};
        CHECK(max_cyclic_chain(holed).value == max_cyclic_chain(folded).value);
        CHECK(max_cyclic_join_k1(holed).value == max_cyclic_join_k1(folded).value);
        CHECK(max_y_quadruple(holed).value == max_y_quadruple(folded).value);
        CHECK(max_linear_chain(holed).value == max_linear_chain(folded).value);
      }
}

TEST_CASE("apex rows sit below the bare chain rows") {
  CHECK(val(max_cyclic_join_k1(Surface{0, 5, 0})) == 3);
  CHECK(val(max_cyclic_join_k1(Surface{1, 2, 0})) == 3);
  CHECK(val(max_cyclic_join_k1(Surface{0, 8, 0})) == 7);
  CHECK(val(max_cyclic_join_k1(Surface{1, 3, 0})) == 5);
  CHECK(val(max_cyclic_join_k1(Surface{2, 0, 0})) == 5);
  CHECK(val(max_cyclic_join_k1(Surface{2, 2, 0})) == 6);
  for (int g = 0; g <= 5; ++g)
    for (int p = 0; p <= 9; ++p) {
      auto with_apex = max_cyclic_join_k1(Surface{g, p, 0});
      auto bare = max_cyclic_chain(Surface{g, p, 0});
      if (with_apex.value && bare.value) {
        // adding the apex constraint can only shrink the chain
        CHECK(val(with_apex) <= val(bare));
      }
    }
}

TEST_CASE("chained triple rows") {
  CHECK(val(max_chained_triple(Surface{0, 3, 0}, TripleVariant::Plain)) == 0);
  CHECK(val(max_chained_triple(Surface{0, 6, 0}, TripleVariant::Plain)) == 4);
  CHECK(val(max_chained_triple(Surface{1, 1, 0}, TripleVariant::Plain)) == 2);
  CHECK(val(max_chained_triple(Surface{1, 2, 0}, TripleVariant::Plain)) == 3);
  CHECK(val(max_chained_triple(Surface{1, 5, 0}, TripleVariant::Plain)) == 5);
  CHECK(val(max_chained_triple(Surface{2, 1, 0}, TripleVariant::Plain)) == 4);
  CHECK(val(max_chained_triple(Surface{2, 3, 0}, TripleVariant::Plain)) == 5);
  CHECK(max_chained_triple(Surface{2, 0, 0}, TripleVariant::Plain).kind ==
        BoundKind::OutOfTableRange);

  CHECK(max_chained_triple(Surface{0, 2, 0}, TripleVariant::Star).kind ==
        BoundKind::NoneExists);
  CHECK(val(max_chained_triple(Surface{0, 4, 0}, TripleVariant::Star)) == 1);
  CHECK(val(max_chained_triple(Surface{0, 7, 0}, TripleVariant::Star)) == 4);
  CHECK(val(max_chained_triple(Surface{1, 2, 0}, TripleVariant::Star)) == 2);

  CHECK(val(max_chained_triple(Surface{1, 2, 0}, TripleVariant::RecursiveEnd)) == 2);
  CHECK(val(max_chained_triple(Surface{3, 2, 0}, TripleVariant::RecursiveEnd)) == 6);

  // the stricter variants never beat the plain bound where both exist
  for (int g = 0; g <= 4; ++g)
    for (int p = 0; p <= 8; ++p) {
      auto plain = max_chained_triple(Surface{g, p, 0}, TripleVariant::Plain);
      for (auto variant : {TripleVariant::Star, TripleVariant::RecursiveEnd}) {
        auto strict = max_chained_triple(Surface{g, p, 0}, variant);
        if (plain.value && strict.value) CHECK(val(strict) <= val(plain));
      }
    }
}

TEST_CASE("y quadruple rows") {
  CHECK(max_y_quadruple(Surface{0, 3, 0}).kind == BoundKind::NoneExists);
  CHECK(val(max_y_quadruple(Surface{0, 4, 0})) == 1);
  CHECK(val(max_y_quadruple(Surface{0, 8, 0})) == 5);
  CHECK(max_y_quadruple(Surface{1, 1, 0}).kind == BoundKind::NoneExists);
  CHECK(val(max_y_quadruple(Surface{1, 2, 0})) == 2);
  CHECK(val(max_y_quadruple(Surface{1, 4, 0})) == 3);
  CHECK(val(max_y_quadruple(Surface{2, 2, 0})) == 3);
  CHECK(max_y_quadruple(Surface{2, 1, 0}).kind == BoundKind::OutOfTableRange);
  // a Y-quadruple contains a chained triple, so its bound cannot exceed it
  for (int g = 0; g <= 4; ++g)
    for (int p = 0; p <= 8; ++p) {
      auto y = max_y_quadruple(Surface{g, p, 0});
      auto triple = max_chained_triple(Surface{g, p, 0}, TripleVariant::Plain);
      if (y.value && triple.value) CHECK(val(y) <= val(triple));
    }
}

TEST_CASE("path joins and linear chains") {
  CHECK(val(max_clique_joined_to_path(Surface{0, 6, 0}, PathJoinMode::K2Fixed)) == 3);
  CHECK(val(max_clique_joined_to_path(Surface{1, 3, 0}, PathJoinMode::K2Fixed)) == 3);
  CHECK(val(max_clique_joined_to_path(Surface{3, 2, 0}, PathJoinMode::Path2gp1)) == 1);
  CHECK(val(max_clique_joined_to_path(Surface{3, 2, 0}, PathJoinMode::Path2gp)) == 2);
  CHECK(max_clique_joined_to_path(Surface{1, 1, 0}, PathJoinMode::Path2gp).kind ==
        BoundKind::OutOfTableRange);

  CHECK(max_linear_chain(Surface{0, 5, 0}).kind == BoundKind::ImportedUpper);
  CHECK(val(max_linear_chain(Surface{0, 5, 0})) == 4);
  CHECK(val(max_linear_chain(Surface{1, 2, 0})) == 4);
  CHECK(val(max_linear_chain(Surface{2, 1, 0})) == 6);
  // a cyclic chain of length m contains a linear chain of length m - 1
  for (int g = 0; g <= 4; ++g)
    for (int p = 0; p <= 8; ++p) {
      auto cyc = max_cyclic_chain(Surface{g, p, 0});
      auto lin = max_linear_chain(Surface{g, p, 0});
      if (cyc.value && lin.value) CHECK(val(cyc) - 1 <= val(lin));
    }
}

TEST_CASE("unit chain genus demand") {
  CHECK_THROWS_AS(min_genus_unit_chain(2), BadParameter);
  CHECK(min_genus_unit_chain(3) == 1);
  CHECK(min_genus_unit_chain(4) == 1);
  CHECK(min_genus_unit_chain(5) == 2);
  CHECK(min_genus_unit_chain(6) == 2);
  // the closed-surface chain bound saturates the genus demand
  for (int g = 2; g <= 8; ++g)
    CHECK(min_genus_unit_chain(val(max_cyclic_chain(Surface{g, 0, 0}))) == g);
}

TEST_CASE("tables are total and never throw on sane input") {
  for (int g = 0; g <= 64; ++g)
    for (int p = 0; p <= 256; p += (p < 12 ? 1 : 17)) {
      Surface s{g, p, 0};
      CHECK_NOTHROW(max_cyclic_chain(s));
      CHECK_NOTHROW(max_cyclic_join_k1(s));
      CHECK_NOTHROW(max_chained_triple(s, TripleVariant::Plain));
      CHECK_NOTHROW(max_chained_triple(s, TripleVariant::Star));
      CHECK_NOTHROW(max_chained_triple(s, TripleVariant::RecursiveEnd));
      CHECK_NOTHROW(max_y_quadruple(s));
      CHECK_NOTHROW(max_clique_joined_to_path(s, PathJoinMode::K2Fixed));
      CHECK_NOTHROW(max_clique_joined_to_path(s, PathJoinMode::Path2gp1));
      CHECK_NOTHROW(max_clique_joined_to_path(s, PathJoinMode::Path2gp));
      CHECK_NOTHROW(max_linear_chain(s));
    }
}

#include <doctest.h>

#include <cmath>

#include "cxbox/directions.hpp"

using cxbox::DirectionSet;

TEST_CASE("validation accepts and rejects") {
  const auto id2 = DirectionSet::validate({{1, 0}, {0, 1}});
  CHECK(id2.dim() == 2);
  CHECK(id2.count() == 2);
  CHECK(id2.square());
  CHECK(id2.integer_columns());
  CHECK(id2.sign_convention_ok());

  CHECK_THROWS_AS((void)DirectionSet::validate({{1, 0}, {0, 0}}),
                  cxbox::ValidationError);
  CHECK_THROWS_AS((void)DirectionSet::validate({{1, 2}, {2, 4}}),
                  cxbox::ValidationError);
  CHECK_THROWS_AS((void)DirectionSet::validate({{1, 0}}),
                  cxbox::ValidationError);
}

TEST_CASE("sign convention is a flag, not an error") {
  const auto m = DirectionSet::validate({{-1, 0}, {0, 1}});
  CHECK_FALSE(m.sign_convention_ok());
  CHECK(m.integer_columns());
}

TEST_CASE("determinant and inverse") {
  const auto diag = DirectionSet::validate({{2, 0}, {0, 3}});
  const auto [det, inv] = cxbox::det_and_inverse(diag);
  CHECK(det == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(inv[0][0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(inv[1][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto id3 = DirectionSet::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id3.determinant() == doctest::Approx(1.0));

  // Columns (1,0) and (1,1): inverse [[1,-1],[0,1]].
  const auto shear = DirectionSet::validate({{1, 0}, {1, 1}});
  const auto di = cxbox::det_and_inverse(shear);
  CHECK(di.det == doctest::Approx(1.0));
  CHECK(di.inverse[0][0] == doctest::Approx(1.0));
  CHECK(di.inverse[0][1] == doctest::Approx(-1.0));
  CHECK(di.inverse[1][0] == doctest::Approx(0.0));
  CHECK(di.inverse[1][1] == doctest::Approx(1.0));

  // M * M^{-1} = I within 1e-12.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 2; ++k) {
        sum += shear.column(k)[i] * di.inverse[k][j];
      }
      CHECK(std::abs(sum - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }

  const auto mesh = DirectionSet::validate({{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS((void)mesh.determinant(), cxbox::NotSquareError);
  CHECK_THROWS_AS((void)cxbox::det_and_inverse(mesh), cxbox::NotSquareError);
}

TEST_CASE("support box vertices") {
  const auto id2 = DirectionSet::validate({{1, 0}, {0, 1}});
  const auto unit = id2.support_box();
  REQUIRE(unit.size() == 4);
  CHECK(unit[3][0] == doctest::Approx(1.0));
  CHECK(unit[3][1] == doctest::Approx(1.0));

  const auto rect = DirectionSet::validate({{2, 0}, {0, 3}}).support_box();
  CHECK(rect[3][0] == doctest::Approx(2.0));
  CHECK(rect[3][1] == doctest::Approx(3.0));

  const auto hex =
      DirectionSet::validate({{1, 0}, {0, 1}, {1, 1}}).support_box();
  CHECK(hex.size() == 8);
  CHECK(hex[7][0] == doctest::Approx(2.0));
  CHECK(hex[7][1] == doctest::Approx(2.0));
}

TEST_CASE("dropping a column can break the span") {
  const auto mesh = DirectionSet::validate({{1, 0}, {0, 1}, {1, 1}});
  CHECK_NOTHROW((void)mesh.drop_last());
  const auto id2 = DirectionSet::validate({{1, 0}, {0, 1}});
  CHECK_THROWS_AS((void)id2.drop_last(), cxbox::ValidationError);
}

TEST_CASE("validation is idempotent") {
  const auto m = DirectionSet::validate({{2, 0}, {0, 3}});
  const auto again = DirectionSet::validate(m.columns());
  CHECK(again.columns() == m.columns());
  CHECK(again.determinant() == m.determinant());
}

TEST_CASE("JSON round trip") {
  const std::string text = R"({"d":2, "columns":[[2,0],[0,3]]})";
  const auto m = DirectionSet::from_json_string(text);
  CHECK(m.dim() == 2);
  CHECK(m.determinant() == doctest::Approx(6.0));
  const auto back = DirectionSet::from_json_string(m.to_json_string());
  CHECK(back.columns() == m.columns());

  CHECK_THROWS_AS((void)DirectionSet::from_json_string(R"({"columns":[[1]]})"),
                  cxbox::ValidationError);
  CHECK_THROWS_AS(
      (void)DirectionSet::from_json_string(R"({"d":2, "columns":[[1,0]]})"),
      cxbox::ValidationError);
}

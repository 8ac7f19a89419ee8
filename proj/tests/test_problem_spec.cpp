#include <doctest.h>

#include "cxbox/problem_spec.hpp"

TEST_CASE("problem spec parsing") {
  const std::string text = R"({
    "degrees": [[3, 1], [2, 1]],
    "directions": {"d": 2, "columns": [[2, 0], [0, 3]]},
    "grid": {"omega_max": 50.0, "bins": 512},
    "eps": 1e-9
  })";
  const auto spec = cxbox::ProblemSpec::from_json_string(text);
  CHECK(spec.degrees.size() == 2);
  CHECK(spec.degrees.z[0] == cxbox::Complex(3.0, 1.0));
  CHECK(spec.directions.determinant() == doctest::Approx(6.0));
  REQUIRE(spec.grid.has_value());
  CHECK(spec.grid->bins == 512);
  CHECK(spec.eps == 1e-9);
}

TEST_CASE("problem spec rejections") {
  CHECK_THROWS_AS((void)cxbox::ProblemSpec::from_json_string("not json"),
                  cxbox::ValidationError);
  // Degree count must match the column count.
  CHECK_THROWS_AS((void)cxbox::ProblemSpec::from_json_string(R"({
        "degrees": [[1, 0]],
        "directions": {"d": 2, "columns": [[1, 0], [0, 1]]}
      })"),
                  cxbox::ValidationError);
  // Re(z) <= -1 is outside every construction.
  CHECK_THROWS_AS((void)cxbox::ProblemSpec::from_json_string(R"({
        "degrees": [[-1.5, 0]],
        "directions": {"d": 1, "columns": [[1]]}
      })"),
                  cxbox::ValidationError);
  // Odd bin counts cannot center the DC sample.
  CHECK_THROWS_AS((void)cxbox::ProblemSpec::from_json_string(R"({
        "degrees": [[1, 0]],
        "directions": {"d": 1, "columns": [[1]]},
        "grid": {"omega_max": 10.0, "bins": 511}
      })"),
                  cxbox::ValidationError);
}

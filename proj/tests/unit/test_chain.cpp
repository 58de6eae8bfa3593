#include <cmath>
#include <numbers>

#include "dising/chain.hpp"
#include "dising/error.hpp"
#include "doctest.h"

using namespace dising;
using std::numbers::pi;

namespace {

Errc code_of(const ChainParams& p) {
  try {
    validate(p);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;  // sentinel: no throw
}

}  // namespace

TEST_CASE("pekar grid values") {
  const auto one = pekar_grid(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].k == pi / 2);

  const auto three = pekar_grid(3);
  CHECK(three.k(1) == pi / 4);
  CHECK(three.k(2) == pi / 2);
  CHECK(three.k(3) == 3 * pi / 4);

  const double last = pekar_momentum(9999, 9999);
  CHECK(last == 9999 * pi / 10000);
  CHECK(last < pi);
}

TEST_CASE("pekar grid is increasing, inside the zone and symmetric") {
  for (int n : {2, 7, 100, 1001}) {
    const auto g = pekar_grid(n);
    REQUIRE(g.size() == static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) {
      CHECK(g.k(l) > 0.0);
      CHECK(g.k(l) < pi);
      if (l > 1) CHECK(g.k(l) > g.k(l - 1));
      CHECK(std::abs(g.k(l) + g.k(n + 1 - l) - pi) <= 4e-16 * pi);
    }
  }
  CHECK_THROWS_AS((void)pekar_grid(3).k(0), Error);
  CHECK_THROWS_AS((void)pekar_grid(3).k(4), Error);
}

TEST_CASE("pekar index inverts the grid") {
  for (int l = 1; l <= 50; ++l) CHECK(pekar_index(pekar_momentum(l, 50), 50) == l);
  CHECK_THROWS_AS(pekar_index(0.1234, 50), Error);
}

TEST_CASE("validation") {
  CHECK(validate({10, 1.0, 0.25}) == ChainParams{10, 1.0, 0.25});
  CHECK(validate({10, 1.0, -0.25}).eta == -0.25);
  CHECK(code_of({10, 1.0, 0.3}) == Errc::out_of_normal_phase);
  CHECK(code_of({10, 1.0, -0.2500001}) == Errc::out_of_normal_phase);
  CHECK(code_of({1, 1.0, 0.1}) == Errc::chain_too_short);
  CHECK(code_of({10, 0.0, 0.1}) == Errc::non_positive_frequency);
  CHECK(code_of({10, -2.0, 0.1}) == Errc::non_positive_frequency);
  CHECK(code_of({10, 1.0, std::nan("")}) == Errc::out_of_normal_phase);
  CHECK(is_validation_error(Errc::out_of_normal_phase));
  CHECK_FALSE(is_validation_error(Errc::no_crossing));
}

TEST_CASE("validation is idempotent") {
  const ChainParams ok{12, 2.5, -0.1};
  CHECK(validate(validate(ok)) == ok);
  const ChainParams bad{12, 2.5, 0.26};
  CHECK(code_of(bad) == code_of(bad));
}

TEST_CASE("error messages name the field") {
  try {
    validate({10, 1.0, 0.3});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("eta") != std::string::npos);
    CHECK(std::string(e.what()).find("OutOfNormalPhase") != std::string::npos);
  }
}

TEST_CASE("bogoliubov pair helpers") {
  const auto p = BogoliubovPair::bosonic(0.3, -0.2);
  CHECK(p.canonical_defect() < 1e-15);
  CHECK(p.coupling_factor() == doctest::Approx(std::sqrt(1.04) + 0.2));
  CHECK(to_string(Approximation::HolsteinPrimakoff1FullLM) == "HP1LM");
}

#include <doctest.h>

#include <numeric>
#include <random>

#include "fatpoints/errors.hpp"
#include "fatpoints/picard.hpp"
#include "fatpoints/resolution.hpp"

using namespace fatpoints;

namespace {

const FatPointScheme seven_simple({1, 1, 1, 1, 1, 1, 1});
const FatPointScheme double_point({2});
const FatPointScheme six_double({2, 2, 2, 2, 2, 2, 1});

int total(const DegreeTable& t) {
  return std::accumulate(t.begin(), t.end(), 0, [](int a, const auto& kv) { return a + kv.second; });
}

}  // namespace

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(FatPointScheme({1, -1}), ArgumentError);
  CHECK_THROWS_AS(FatPointScheme(std::vector<int>(9, 1)), UnsupportedError);
  CHECK(FatPointScheme({0, 0}).is_zero());
  CHECK(six_double.length() == 19);
  CHECK(six_double.total_multiplicity() == 13);
}

TEST_CASE("degree_class and hilbert_function") {
  CHECK(degree_class(double_point, 2) == DivisorClass(2, {2}));
  CHECK(degree_class(seven_simple, 3) == -canonical_class(7));
  CHECK(degree_class(FatPointScheme(), 0).is_zero());
  CHECK(hilbert_function(seven_simple, 3) == 3);
  CHECK(hilbert_function(double_point, 2) == 3);
  CHECK(hilbert_function(FatPointScheme({3, 2}), 4) == 6);
  CHECK(hilbert_function(seven_simple, 2) == 0);
  CHECK(hilbert_function(FatPointScheme(std::vector<int>(8, 1)), 3) == 2);
}

TEST_CASE("alpha and beta") {
  CHECK(alpha(double_point) == 2);
  CHECK(beta(double_point) == 2);
  CHECK(alpha(seven_simple) == 3);
  CHECK(beta(seven_simple) == 3);
  CHECK(alpha(six_double) == 5);
  CHECK(beta(six_double) == 5);
  CHECK(alpha(FatPointScheme({0, 0, 0})) == 0);
  // two double points: the doubled line is the only conic and divides every cubic
  CHECK(alpha(FatPointScheme({2, 2})) == 2);
  CHECK(beta(FatPointScheme({2, 2})) == 4);
}

TEST_CASE("generator and syzygy degrees") {
  CHECK(generator_degrees(seven_simple) == DegreeTable{{3, 3}});
  CHECK(generator_degrees(double_point) == DegreeTable{{2, 3}});
  CHECK(generator_degrees(six_double) == DegreeTable{{5, 2}, {6, 3}});
  CHECK(syzygy_degrees(seven_simple) == DegreeTable{{4, 1}, {5, 1}});
  CHECK(syzygy_degrees(double_point) == DegreeTable{{3, 2}});
  CHECK(syzygy_degrees(six_double) == DegreeTable{{7, 4}});
}

TEST_CASE("syzygies_from_hilbert rejects inconsistent data") {
  // one generator in degree 1 cannot account for two forms in degree 1
  CHECK_THROWS_AS(syzygies_from_hilbert({{2, 1}}, {{0, 0}, {1, 0}, {2, 3}, {3, 6}}, 3),
                  InvariantError);
}

TEST_CASE("rendering") {
  CHECK(render_resolution({{3, 3}}, {{4, 1}, {5, 1}}) == "0 -> R(-4)+R(-5) -> 3R(-3) -> I -> 0");
  CHECK(render_resolution({{0, 1}}, {}) == "0 -> 0 -> R -> I -> 0");
}

TEST_CASE("golden resolutions") {
  CHECK(resolve(seven_simple).display == "0 -> R(-4)+R(-5) -> 3R(-3) -> I -> 0");
  CHECK(resolve(double_point).display == "0 -> 2R(-3) -> 3R(-2) -> I -> 0");
  CHECK(resolve(six_double).display == "0 -> 4R(-7) -> 2R(-5)+3R(-6) -> I -> 0");
  const auto unit = resolve(FatPointScheme({0, 0}));
  CHECK(unit.degenerate);
  CHECK(unit.generators == DegreeTable{{0, 1}});
  CHECK(unit.syzygies.empty());
  CHECK_THROWS_AS(resolve(FatPointScheme(std::vector<int>(8, 1))), UnsupportedError);
}

TEST_CASE("rank and Hilbert identities on random schemes") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int r = static_cast<int>(rng() % 8);
    std::vector<int> m(static_cast<std::size_t>(r));
    for (auto& x : m) x = static_cast<int>(rng() % 7);
    const FatPointScheme z(m);
    const auto s = resolve(z);
    CAPTURE(format_class(degree_class(z, 0)));
    CHECK(total(s.generators) - total(s.syzygies) == 1);
    for (const auto& [t, v] : s.hilbert) {
      int expect = 0;
      for (const auto& [g, n] : s.generators) expect += n * forms_of_degree(t - g);
      for (const auto& [g, n] : s.syzygies) expect -= n * forms_of_degree(t - g);
      CHECK(v == expect);
    }
    CHECK(s.alpha <= s.beta);
    if (!z.is_zero()) {
      CHECK(s.generators.begin()->first == s.alpha);
      CHECK(s.generators.rbegin()->first <= s.beta + 1);
      CHECK(s.syzygies.rbegin()->first <= s.beta + 2);
    }
  }
}

#include <doctest.h>

#include <random>

#include "csmcalc/cfun.hpp"
#include "csmcalc/error.hpp"
#include "oracles.hpp"

using namespace csmcalc;
using namespace csmcalc::cfun;
using chow::AmbientSpace;
using RepS = std::vector<std::int64_t>;

namespace {

const AmbientSpace P2({2});

ScenePtr nodal_scene() {
  return make_scene(P2, {{3}},
                    {Stratum{.id = "smooth", .dim = 1, .chi_c = 0},
                     Stratum{.id = "node", .dim = 0, .chi_c = 1, .parents = {"smooth"}}});
}

}  // namespace

TEST_CASE("scene validation") {
  CHECK_NOTHROW(nodal_scene());
  CHECK(nodal_scene()->stratum(0).closure_chi == 1);
  CHECK(nodal_scene()->is_below(1, 0));
  CHECK_THROWS_AS(make_scene(P2, {{3}}, {Stratum{.id = "a", .dim = 1}, Stratum{.id = "a", .dim = 0}}),
                  ValidationError);
  CHECK_THROWS_AS(make_scene(P2, {{3}}, {Stratum{.id = "a", .dim = 0, .parents = {"b"}}}), ValidationError);
  CHECK_THROWS_AS(make_scene(P2, {{3}},
                             {Stratum{.id = "a", .dim = 1, .parents = {"b"}},
                              Stratum{.id = "b", .dim = 1, .parents = {"a"}}}),
                  ValidationError);
  CHECK_THROWS_AS(make_scene(P2, {{3}}, {Stratum{.id = "a", .dim = 0}, Stratum{.id = "b", .dim = 1, .parents = {"a"}}}),
                  ValidationError);
  // closure_chi must equal the sum of chi_c over the closure.
  CHECK_THROWS_AS(make_scene(P2, {{3}},
                             {Stratum{.id = "smooth", .dim = 1, .chi_c = 0, .closure_chi = 2},
                              Stratum{.id = "node", .dim = 0, .chi_c = 1, .parents = {"smooth"}}}),
                  ValidationError);
  // A closed stratum has closure_chi = chi_c.
  CHECK_THROWS_AS(make_scene(P2, {{3}}, {Stratum{.id = "p", .dim = 0, .chi_c = 1, .closure_chi = 2}}),
                  ValidationError);
}

TEST_CASE("representation conversion examples") {
  ScenePtr s = nodal_scene();
  ConstructibleFunction whole = ConstructibleFunction::closure_indicator(s, "smooth");
  CHECK(whole.to_stratumwise().values() == RepS{1, 1});
  ConstructibleFunction point(s, Representation::Stratumwise, RepS{0, 1});
  CHECK(point.to_indicator().values() == RepS{0, 1});
  CHECK(point.to_indicator().representation() == Representation::Indicator);
  CHECK(ConstructibleFunction(s, Representation::Stratumwise, RepS{1, 0}).to_indicator().values() == RepS{1, -1});
  CHECK(ConstructibleFunction::one(s) == whole);
  CHECK_THROWS_AS(ConstructibleFunction(s, Representation::Stratumwise, RepS{1}), ValidationError);
  CHECK_THROWS_AS(ConstructibleFunction(s, Representation::Stratumwise, std::map<std::string, std::int64_t>{{"q", 1}}),
                  ValidationError);
}

TEST_CASE("indicator and stratum-wise forms round-trip on random posets") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    ScenePtr s = oracle::random_scene(rng, trial % 2 ? 5 : 6, false);
    auto up = oracle::ancestors(*s);
    RepS v = oracle::random_values(rng, s->size());
    ConstructibleFunction alpha(s, Representation::Stratumwise, v);
    ConstructibleFunction ind = alpha.to_indicator();
    // alpha(S) = sum of n_T over T with S in closure(T).
    for (std::size_t i = 0; i < s->size(); ++i) {
      std::int64_t sum = ind.values()[i];
      for (std::size_t t : up[i]) sum += ind.values()[t];
      REQUIRE(sum == v[i]);
    }
    REQUIRE(ind.to_stratumwise().values() == v);
    REQUIRE(ind.converted().converted().values() == ind.values());
    ConstructibleFunction from_ind(s, Representation::Indicator, v);
    REQUIRE(from_ind.to_stratumwise().to_indicator().values() == v);
    REQUIRE(from_ind == from_ind.to_stratumwise());
  }
}

TEST_CASE("Euler characteristics") {
  ScenePtr p2 = make_scene(AmbientSpace({2}), {},
                           {Stratum{.id = "C2", .dim = 2, .chi_c = 1},
                            Stratum{.id = "C1", .dim = 1, .chi_c = 1, .parents = {"C2"}},
                            Stratum{.id = "pt", .dim = 0, .chi_c = 1, .parents = {"C1"}}});
  CHECK(euler(ConstructibleFunction::one(p2)) == 3);
  CHECK(euler(ConstructibleFunction::one(point_scene())) == 1);
  CHECK(euler(ConstructibleFunction::one(nodal_scene())) == 1);
  CHECK(euler(ConstructibleFunction::closure_indicator(nodal_scene(), "node")) == 1);
  CHECK_THROWS_AS(euler(ConstructibleFunction::one(smooth_scene(P2, {{2}}))), ValidationError);
}

TEST_CASE("Euler characteristic is linear") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    ScenePtr s = oracle::random_scene(rng, 5 + trial % 2, true);
    ConstructibleFunction a(s, Representation::Stratumwise, oracle::random_values(rng, s->size()));
    ConstructibleFunction b(s, Representation::Indicator, oracle::random_values(rng, s->size()));
    std::int64_t p = static_cast<std::int64_t>(rng() % 11) - 5, q = static_cast<std::int64_t>(rng() % 11) - 5;
    REQUIRE(euler(p * a + q * b) == p * euler(a) + q * euler(b));
    REQUIRE(euler(a - b) == euler(a) - euler(b));
  }
}

TEST_CASE("pushforward and pullback") {
  ScenePtr x = nodal_scene();
  ConstructibleFunction to_pt = pushforward(ConstructibleFunction::one(x), SceneMap::to_point(x));
  CHECK(to_pt.values() == RepS{1});

  ScenePtr xp = product_with_projective(x, 1);
  SceneMap pr = SceneMap::projection(xp, x, 1);
  CHECK(pushforward(ConstructibleFunction::one(xp), pr) == 2 * ConstructibleFunction::one(x));

  ConstructibleFunction alpha = ConstructibleFunction::closure_indicator(x, "node");
  CHECK(pullback(alpha, pr) == ConstructibleFunction::closure_indicator(xp, "nodexP1"));
  CHECK(pullback(ConstructibleFunction::one(x), pr) == ConstructibleFunction::one(xp));

  std::mt19937 rng(4);
  ConstructibleFunction beta(x, Representation::Stratumwise, oracle::random_values(rng, x->size()));
  SceneMap id = SceneMap::identity(x);
  CHECK(pushforward(beta, id) == beta);
  CHECK(pullback(beta, id) == beta);
}

TEST_CASE("functoriality along a chain of projections") {
  std::mt19937 rng(12);
  ScenePtr x = nodal_scene();
  ScenePtr y = product_with_projective(x, 1);
  ScenePtr z = product_with_projective(y, 2);
  SceneMap f = SceneMap::projection(z, y, 2);
  SceneMap g = SceneMap::projection(y, x, 1);
  SceneMap gf = compose(g, f);
  for (int trial = 0; trial < 500; ++trial) {
    ConstructibleFunction a(x, Representation::Stratumwise, oracle::random_values(rng, x->size()));
    REQUIRE(pullback(a, gf) == pullback(pullback(a, g), f));
    ConstructibleFunction c(z, Representation::Indicator, oracle::random_values(rng, z->size()));
    REQUIRE(pushforward(c, gf) == pushforward(pushforward(c, f), g));
    // Pushing to a point preserves the Euler characteristic.
    REQUIRE(euler(pushforward(c, gf)) == euler(c));
  }
  CHECK_THROWS_AS(compose(f, g), ValidationError);
}

TEST_CASE("vanishing-cycle function of isolated singularities") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  IsolatedMu node = mu_isolated(testing::P("y^2*z - x^3 - x^2*z", xyz), P2, 2);
  CHECK(node.mu.value("sing") == -1);
  CHECK(node.mu.value("smooth") == 0);
  CHECK(node.milnor.total_milnor == 1);

  IsolatedMu cusp = mu_isolated(testing::P("y^2*z - x^3", xyz), P2, 2);
  CHECK(cusp.mu.value("sing") == -2);

  IsolatedMu conic = mu_isolated(testing::P("x^2 + y^2 - z^2", xyz), P2, 2);
  CHECK(conic.mu.is_zero());
  CHECK(!conic.mu.scene()->contains("sing"));

  const std::vector<std::string> xyzw{"x", "y", "z", "w"};
  IsolatedMu surf =
      mu_isolated(testing::P("w^2*x^2 + w^2*y^2 + w^2*z^2 + x^4 + y^4 + z^4", xyzw), AmbientSpace({3}), 3);
  CHECK(surf.mu.value("sing") == 1);
  CHECK(surf.mu.scene()->stratum(surf.mu.scene()->index_of("smooth")).dim == 2);
}

TEST_CASE("monodromic functions") {
  ScenePtr x = nodal_scene();
  ConstructibleFunction zero = ConstructibleFunction::zero(x);
  MonodromicCF phi0 = phi_codim1(zero);
  CHECK(phi0.pi_part().is_zero());
  CHECK(phi0.zero_part().is_zero());

  ConstructibleFunction mu = -ConstructibleFunction::closure_indicator(x, "node");
  MonodromicCF phi = phi_codim1(mu);
  CHECK(phi.value_off_zero("node") == -1);
  CHECK(phi.value_at_zero("node") == 0);
  CHECK(phi.value_off_zero("smooth") == 0);

  MonodromicCF pi_one(ConstructibleFunction::one(x), zero);
  CHECK(restrict_to_vertex(pi_one) == ConstructibleFunction::one(x));
}

TEST_CASE("vertex restriction of the monodromic function vanishes and is linear") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    ScenePtr s = oracle::random_scene(rng, 5 + trial % 2, false);
    ConstructibleFunction a(s, Representation::Stratumwise, oracle::random_values(rng, s->size()));
    ConstructibleFunction b(s, Representation::Indicator, oracle::random_values(rng, s->size()));
    REQUIRE(restrict_to_vertex(phi_codim1(a)).is_zero());
    std::int64_t p = static_cast<std::int64_t>(rng() % 9) - 4;
    MonodromicCF u(a, b), v(b, a);
    ConstructibleFunction lhs = restrict_to_vertex(u + p * v);
    REQUIRE(lhs == restrict_to_vertex(u) + p * restrict_to_vertex(v));
  }
}

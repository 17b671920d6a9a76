#include <doctest.h>

#include <memory>
#include <stdexcept>

#include "mahonian/jacobi_rogers.hpp"
#include "mahonian/permstats.hpp"
#include "oracle.hpp"

using namespace mahonian;

namespace {

Poly v(const char* name, std::uint32_t e = 1) { return Poly::variable(name, e); }

std::vector<JRParams> every_preset() {
  std::vector<JRParams> out;
  for (const auto& name : preset_names()) {
    out.push_back(preset(name));
  }
  return out;
}

}  // namespace

TEST_CASE("preset coefficients") {
  CHECK(preset("euler").gamma(1) == Poly(3));
  CHECK(preset("euler").beta(3) == Poly(9));
  CHECK(preset("beta_q").gamma(0) == v("b"));
  CHECK(preset("beta_q").beta(1) == v("q") * v("b"));
  CHECK(preset("digraph").beta(1) == v("b") * v("u1") * v("u2"));
  CHECK(preset("digraph").gamma(0) == v("a") * v("b"));
  CHECK(preset("alternating").gamma(4).is_zero());
  CHECK(preset("alternating").beta(2) == Poly(2) * (v("b") + Poly(1)));
  const Poly shifted = v("la") + v("d") * v("x");
  CHECK(preset("zhu").gamma(0) == v("a2") * shifted + v("b2") * v("x"));
  CHECK(preset("zhu").beta(1) == (v("a2") * v("b1") + v("a1") * v("b2")) * v("x") * shifted);
  CHECK(generic_params().gamma(2) == v("g2"));
  CHECK(generic_params().beta(3) == v("B3"));
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("cycle and digraph packs coincide") {
  // beta_{k+1} = (k + b)(k + 1) u1 u2 is the digraph beta shifted by one
  for (int k = 0; k <= 8; ++k) {
    CHECK(preset("cyc").gamma(k) == preset("digraph").gamma(k));
    CHECK(preset("cyc").beta(k + 1) ==
          (Poly(static_cast<long>(k)) + v("b")) * Poly(static_cast<long>(k) + 1) * v("u1") *
              v("u2"));
  }
}

TEST_CASE("moment table basics") {
  const MuTable euler = mu_table(preset("euler"), 8);
  CHECK(euler.at(2, 1) == Poly(4));
  CHECK(euler.at(3, 0) == Poly(6));
  CHECK(euler.at(0, 0).is_one());
  CHECK(euler.at(3, 4).is_zero());
  CHECK(euler.at(3, -1).is_zero());
  for (const auto& params : every_preset()) {
    const MuTable mu = mu_table(params, 6);
    for (int n = 0; n <= 6; ++n) {
      CHECK(mu.at(n, n).is_one());
    }
  }
  CHECK(mu_table(generic_params(), 2).to_json() ==
        R"({"N":2,"entries":[["1"],["g0","1"],["B1+g0^2","g0+g1","1"]]})");
}

TEST_CASE("euler closed forms up to N = 8") {
  const MuTable mu = mu_table(preset("euler"), 8);
  const Series cf = cf_taylor(preset("euler"), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(mu.at(n, 0) == Poly(factorial(n)));
    CHECK(cf[static_cast<std::size_t>(n)] == Poly(factorial(n)));
    for (int k = 0; k <= n; ++k) {
      CHECK(mu.at(n, k) == Poly(Integer(binomial(n, k) * factorial(n) / factorial(k))));
    }
  }
}

TEST_CASE("motzkin paths") {
  CHECK(motzkin_paths(3, 3).size() == 1);
  CHECK(motzkin_paths(2, 0).size() == 2);
  CHECK(motzkin_paths(4, 0).size() == 9);  // Motzkin number
  CHECK(motzkin_paths(2, 3).empty());
  for (const auto& path : motzkin_paths(6, 2)) {
    int h = 0;
    for (MotzkinStep s : path) {
      h += s == MotzkinStep::rise ? 1 : s == MotzkinStep::fall ? -1 : 0;
      CHECK(h >= 0);
    }
    CHECK(h == 2);
  }
  const JRParams g = generic_params();
  CHECK(motzkin_mu(g, 2, 0) == v("g0", 2) + v("B1"));
  CHECK(motzkin_mu(g, 3, 3).is_one());
  CHECK(motzkin_mu(preset("euler"), 2, 1) == Poly(4));
}

TEST_CASE("moment table equals the path oracle") {
  const JRParams g = generic_params();
  const MuTable generic = mu_table(g, 6);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(generic.at(n, k) == motzkin_mu(g, n, k));
    }
  }
  for (const auto& params : every_preset()) {
    const MuTable mu = mu_table(params, 8);
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(mu.at(n, k) == motzkin_mu(params, n, k));
      }
    }
  }
}

TEST_CASE("continued fraction expansion") {
  const JRParams g = generic_params();
  const Series two = cf_taylor(g, 2);
  CHECK(two[0].is_one());
  CHECK(two[1] == v("g0"));
  CHECK(two[2] == v("g0", 2) + v("B1"));
  const Series bq = cf_taylor(preset("beta_q"), 2);
  CHECK(bq[1] == v("b"));
  CHECK(bq[2] == v("b", 2) + v("b") * v("q"));

  std::vector<JRParams> all = every_preset();
  all.push_back(g);
  for (const auto& params : all) {
    const int order = params.name == "generic" ? 6 : 8;
    const MuTable mu = mu_table(params, order);
    const Series cf = cf_taylor(params, order);
    CHECK(cf == cf_taylor(params, order, (order + 1) / 2 + 2));
    for (int n = 0; n <= order; ++n) {
      CHECK(cf[static_cast<std::size_t>(n)] == mu.at(n, 0));
    }
  }
  // too shallow a truncation is visible
  CHECK_FALSE(cf_taylor(g, 4, 1) == cf_taylor(g, 4));
}

TEST_CASE("beta_q moments") {
  const MuTable mu = mu_table(preset("beta_q"), 7);
  const VarId b = var("b");
  for (int n = 0; n <= 7; ++n) {
    CHECK(mu.at(n, 0) == bq_factorial(n));
    CHECK(mu.at(n, 0).substitute(b, Poly(1)) == q_factorial(n));
  }
  // the statistic realizes the whole table
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(mu.at(n, k) == distribution(n, k, {QStatistic::maj, true}));
    }
  }
}

TEST_CASE("orthogonal polynomials") {
  const OrthoSeq euler = ortho_seq(preset("euler"), 3);
  CHECK(euler.coefficients(0) == std::vector<Poly>{Poly(1)});
  CHECK(euler.coefficients(1) == std::vector<Poly>{Poly(-1), Poly(1)});
  CHECK(euler.coefficients(2) == std::vector<Poly>{Poly(2), Poly(-4), Poly(1)});
  CHECK(euler.as_poly(2, var("x")) == v("x", 2) - Poly(4) * v("x") + Poly(2));
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      Integer closed = binomial(n, k) * factorial(n) / factorial(k);
      if ((n - k) % 2 == 1) {
        closed = -closed;
      }
      CHECK(euler.coefficients(n)[static_cast<std::size_t>(k)] == Poly(closed));
    }
  }
  for (const auto& params : every_preset()) {
    const OrthoSeq p = ortho_seq(params, 5);
    for (int n = 0; n <= 5; ++n) {
      CHECK(p.coefficients(n).size() == static_cast<std::size_t>(n) + 1);
      CHECK(p.coefficients(n).back().is_one());
    }
  }
}

TEST_CASE("unitriangular inverse") {
  const LowerTriangular id = {{Poly(1)}, {Poly(), Poly(1)}};
  CHECK(unitriangular_inverse(id) == id);
  const LowerTriangular t = {{Poly(1)}, {v("g0"), Poly(1)}};
  CHECK(unitriangular_inverse(t) == LowerTriangular{{Poly(1)}, {-v("g0"), Poly(1)}});
  CHECK_THROWS_AS(unitriangular_inverse({{Poly(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(unitriangular_inverse({{Poly(1), Poly()}}), std::invalid_argument);

  const LowerTriangular euler = mu_table(preset("euler"), 3).rows();
  const LowerTriangular inv = unitriangular_inverse(euler);
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      Integer closed = binomial(n, k) * factorial(n) / factorial(k);
      if ((n - k) % 2 == 1) {
        closed = -closed;
      }
      CHECK(inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == Poly(closed));
    }
  }
  // random unitriangular matrices: T * T^{-1} = I
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    LowerTriangular m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        m[i].push_back(oracle::random_poly(rng, {"a", "q"}, 3, 2));
      }
      m[i].push_back(Poly(1));
    }
    const LowerTriangular mi = unitriangular_inverse(m);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Poly sum;
        for (std::size_t l = j; l <= i; ++l) {
          sum += m[i][l] * mi[l][j];
        }
        CHECK(sum == Poly(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("duality between moments and orthogonal polynomials") {
  CHECK(duality_check(preset("euler"), 4).pass);
  CHECK(duality_check(preset("euler"), 0).pass);
  CHECK(duality_check(generic_params(), 5).pass);
  for (const auto& params : every_preset()) {
    const CheckReport r = duality_check(params, 7);
    CHECK_MESSAGE(r.pass, params.name << ": " << r.detail);
  }
  // x^2 = p_2 + (g0 + g1) p_1 + (g0^2 + B1) p_0
  const JRParams g = generic_params();
  const OrthoSeq p = ortho_seq(g, 2);
  const VarId x = var("x");
  CHECK(p.as_poly(2, x) + (v("g0") + v("g1")) * p.as_poly(1, x) + v("g0", 2) + v("B1") ==
        v("x", 2));
}

TEST_CASE("a broken pack fails the duality check") {
  // count the beta requests of the moment table, then perturb every later one
  // so the orthogonal polynomials see different data
  const JRParams euler = preset("euler");
  auto calls = std::make_shared<int>(0);
  JRParams counting = euler;
  counting.beta = [beta = euler.beta, calls](int k) {
    ++*calls;
    return beta(k);
  };
  mu_table(counting, 4);
  const int table_calls = *calls;
  *calls = 0;
  JRParams broken = euler;
  broken.beta = [beta = euler.beta, calls, table_calls](int k) {
    return ++*calls > table_calls ? beta(k) + Poly(1) : beta(k);
  };
  const CheckReport r = duality_check(broken, 4);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("little q-Laguerre closed forms") {
  const OrthoSeq p = ortho_seq(preset("beta_q"), 1);
  CHECK(p.coefficients(1)[0] == -v("b"));
  const CheckReport r = little_q_laguerre_check(7);
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(little_q_laguerre_check(5).pass);
}

TEST_CASE("exponential generating function system") {
  const CheckReport r = egf_consistency(6);
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(egf_consistency(0).pass);
}

TEST_CASE("zero beta is rejected") {
  JRParams bad = preset("euler");
  bad.beta = [](int) { return Poly(); };
  CHECK_THROWS_AS(mu_table(bad, 3), std::invalid_argument);
}

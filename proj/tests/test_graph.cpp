#include <doctest.h>

#include <random>

#include "smp/graph.hpp"
#include "smp/linalg.hpp"
#include "smp/passage.hpp"
#include "helpers.hpp"

using namespace smp;
using namespace smp::graph;

TEST_CASE("digraph_of edge semantics") {
  Digraph g = digraph_of(testutil::example_p());
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 2));
  CHECK_FALSE(g.has_edge(0, 0));
  CHECK_FALSE(g.has_edge(0, 2));

  Digraph empty = digraph_of(Matrix(3, 3, 0.0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK_FALSE(empty.has_edge(i, j));

  Digraph loops = digraph_of(Matrix::identity(3));
  for (int i = 0; i < 3; ++i) CHECK(loops.has_edge(i, i));

  CHECK_THROWS_AS(digraph_of(Matrix::from_rows({{0, -1}, {0, 0}})),
                  DomainError);
}

TEST_CASE("accessibility requires a path of length >= 1") {
  Digraph g = digraph_of(testutil::example_p());
  CHECK(accessible(g, 0, 2));       // 1 -> 2 -> 3
  CHECK_FALSE(accessible(g, 2, 0)); // state 3 absorbs
  CHECK(accessible(g, 2, 2));       // self-loop counts as a cycle

  // chain 1 -> 2 -> 3 only: no cycle through 1
  Digraph chain(3);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2);
  CHECK_FALSE(accessible(chain, 0, 0));
  CHECK(accessible(chain, 0, 2));

  CHECK_THROWS_AS(accessible(chain, 0, 5), DomainError);
}

TEST_CASE("universal accessibility") {
  Digraph g = digraph_of(testutil::example_p());
  CHECK(is_ua(g, 2));
  CHECK_FALSE(is_ua(g, 0));
  CHECK(unreachable_sources(g, 0) == std::vector<int>{2});

  // complete digraph: everything UA
  Digraph complete(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) complete.add_edge(i, j);
  for (int j = 0; j < 4; ++j) CHECK(is_ua(complete, j));
}

TEST_CASE("strong connectivity") {
  Digraph cycle(2);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 0);
  CHECK(strongly_connected(cycle));

  CHECK_FALSE(strongly_connected(digraph_of(testutil::example_p())));

  Digraph lone(1);
  CHECK(strongly_connected(lone));  // one SCC by convention
}

TEST_CASE("structure of the example model") {
  StructureReport report = structure(testutil::example_p());
  REQUIRE(report.classes.size() == 2);
  CHECK(report.classes[0] == std::vector<int>{0, 1});
  CHECK(report.kinds[0] == BlockKind::transient);
  CHECK(report.radii[0] < 1.0);
  CHECK(report.classes[1] == std::vector<int>{2});
  CHECK(report.kinds[1] == BlockKind::recurrent);
  CHECK(report.radii[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(report.ua_states == std::vector<int>{2});
  CHECK_FALSE(report.irreducible);
}

TEST_CASE("structure edge cases") {
  StructureReport cyc = structure(Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(cyc.irreducible);
  REQUIRE(cyc.classes.size() == 1);
  CHECK(cyc.ua_states == std::vector<int>{0, 1});

  StructureReport id = structure(Matrix::identity(3));
  CHECK(id.classes.size() == 3);
  for (auto kind : id.kinds) CHECK(kind == BlockKind::recurrent);
  CHECK(id.ua_states.empty());

  CHECK_THROWS_AS(structure(Matrix::from_rows({{0.5, 0.4}, {0, 1}})),
                  DomainError);
}

TEST_CASE("Prop 4: irreducible iff every state UA") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    Matrix p = testutil::random_stochastic(rng, m);
    Digraph g = digraph_of(p);
    bool all_ua = true;
    for (int j = 0; j < m; ++j)
      if (!is_ua(g, j)) all_ua = false;
    CHECK(strongly_connected(g) == all_ua);
  }
}

TEST_CASE("Lemma: [I - p I(-j)] nonsingular iff j UA") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    Matrix p = testutil::random_stochastic(rng, m);
    Digraph g = digraph_of(p);
    for (int j = 0; j < m; ++j) {
      Matrix system = Matrix::identity(static_cast<std::size_t>(m));
      Matrix masked = passage::masked_transition(p, j);
      for (std::size_t a = 0; a < system.rows(); ++a)
        for (std::size_t b = 0; b < system.cols(); ++b)
          system(a, b) -= masked(a, b);
      bool solver_ok = true;
      try {
        linalg::LuFactorization lu(system);
      } catch (const SingularMatrixError&) {
        solver_ok = false;
      }
      CHECK(solver_ok == is_ua(g, j));
    }
  }
}

TEST_CASE("canonical form properties over random matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    Matrix p = testutil::random_stochastic(rng, m);
    StructureReport report = structure(p);

    // permuted p is block upper triangular
    std::vector<int> new_pos(static_cast<std::size_t>(m));
    for (int pos = 0; pos < m; ++pos)
      new_pos[static_cast<std::size_t>(report.permutation[
          static_cast<std::size_t>(pos)])] = pos;
    std::vector<int> class_of_pos;
    for (std::size_t c = 0; c < report.classes.size(); ++c)
      for (std::size_t t = 0; t < report.classes[c].size(); ++t)
        class_of_pos.push_back(static_cast<int>(c));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        int pa = new_pos[static_cast<std::size_t>(a)];
        int pb = new_pos[static_cast<std::size_t>(b)];
        if (class_of_pos[static_cast<std::size_t>(pa)] >
                class_of_pos[static_cast<std::size_t>(pb)] &&
            p(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) > 0)
          FAIL("entry below the block diagonal");
      }

    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      if (report.kinds[c] == BlockKind::transient) {
        CHECK(report.radii[c] < 1.0);
      } else {
        CHECK(report.radii[c] == doctest::Approx(1.0).epsilon(1e-8));
        // closed class: rows restricted to the class sum to 1
        for (int a : report.classes[c]) {
          double sum = 0.0;
          for (int b : report.classes[c])
            sum += p(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("Prop 3: whole-matrix radius equals max diagonal block radius") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    Matrix p = testutil::random_stochastic(rng, m);
    for (int j = 0; j < m; ++j) {
      Matrix a = passage::masked_transition(p, j);
      double rho_full = linalg::spectral_radius(a);
      double rho_blocks = 0.0;
      for (const auto& comp : tarjan_scc(digraph_of(a))) {
        Matrix block(comp.size(), comp.size());
        for (std::size_t s = 0; s < comp.size(); ++s)
          for (std::size_t t = 0; t < comp.size(); ++t)
            block(s, t) = a(static_cast<std::size_t>(comp[s]),
                            static_cast<std::size_t>(comp[t]));
        rho_blocks = std::max(rho_blocks, linalg::spectral_radius(block));
      }
      CHECK(rho_full == doctest::Approx(rho_blocks).epsilon(1e-8));
    }
  }
}

TEST_CASE("Prop 2: irreducible blocks that lost mass have radius < 1") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    Matrix p = testutil::random_stochastic(rng, m);
    for (int j = 0; j < m; ++j) {
      Matrix a = passage::masked_transition(p, j);
      for (const auto& comp : tarjan_scc(digraph_of(a))) {
        Matrix block(comp.size(), comp.size());
        bool lost_mass = false;
        for (std::size_t s = 0; s < comp.size(); ++s) {
          double row_sum = 0.0;
          for (std::size_t t = 0; t < comp.size(); ++t) {
            block(s, t) = a(static_cast<std::size_t>(comp[s]),
                            static_cast<std::size_t>(comp[t]));
            row_sum += block(s, t);
          }
          if (row_sum < 1.0 - 1e-9) lost_mass = true;
        }
        if (lost_mass) CHECK(linalg::spectral_radius(block) < 1.0);
      }
    }
  }
}

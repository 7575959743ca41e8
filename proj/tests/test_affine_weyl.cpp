#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace rootcomb;

namespace {

// Integral points of the open alcove C_l: 0 < <lambda+rho, alpha^vee> < l, rank <= 3.
std::vector<Weight> open_alcove_points(const RootSystem& rs, Int l) {
  std::vector<Weight> out;
  Weight lambda(rs.rank());
  for (;;) {
    if (alcove_position(rs, lambda, l).in_open()) out.push_back(lambda);
    std::size_t k = 0;
    while (k < rs.rank() && lambda[k] == l) lambda[k++] = 0;
    if (k == rs.rank()) break;
    ++lambda[k];
  }
  return out;
}

}  // namespace

TEST(AffineWeyl, DotAction) {
  const RootSystem& a1 = root_system("A1");
  const AffineElement s{simple_reflection(a1, 1), Weight(1), 5};
  EXPECT_EQ(dot_apply(a1, s, Weight{0}), Weight{-2});
  EXPECT_EQ(dot_apply(a1, s, Weight{-1}), Weight{-1});
  const AffineElement t{WeylElement::identity(1), Weight{1}, 5};
  EXPECT_EQ(dot_apply(a1, t, Weight{0}), Weight{5});
  EXPECT_THROW(dot_apply(a1, t, Weight{0}, 7), DomainError);
  EXPECT_THROW(dot_apply(a1, t, Weight{0, 0}), DomainError);
}

TEST(AffineWeyl, AlcovePositions) {
  const RootSystem& a2 = root_system("A2");
  EXPECT_EQ(alcove_position(a2, Weight{0, 0}, 5).position, AlcovePosition::interior);
  EXPECT_EQ(alcove_position(a2, Weight{1, 1}, 5).position, AlcovePosition::interior);
  EXPECT_EQ(alcove_position(a2, Weight{2, 1}, 5).position, AlcovePosition::boundary);
  EXPECT_EQ(alcove_position(a2, Weight{-1, 0}, 5).position, AlcovePosition::boundary);
  EXPECT_EQ(alcove_position(a2, Weight{3, 1}, 5).position, AlcovePosition::exterior);
  EXPECT_EQ(alcove_position(a2, Weight{1, 0}, 3, LevelPolicy{true}).position, AlcovePosition::boundary);
  EXPECT_THROW(alcove_position(a2, Weight{0, 0}, 3), DomainError);
  EXPECT_THROW(alcove_position(a2, Weight{0, 0}, 2, LevelPolicy{true}), DomainError);
}

TEST(AffineWeyl, ReductionExamples) {
  const RootSystem& a1 = root_system("A1");
  EXPECT_EQ(reduce_to_closed_alcove(a1, Weight{8}, 5).weight, Weight{0});
  EXPECT_EQ(reduce_to_closed_alcove(a1, Weight{-3}, 5).weight, Weight{1});
  const RootSystem& a2 = root_system("A2");
  const auto r0 = reduce_to_closed_alcove(a2, Weight{0, 0}, 7);
  EXPECT_EQ(r0.weight, (Weight{0, 0}));
  EXPECT_TRUE(r0.witness.is_identity());
  EXPECT_TRUE(r0.steps.empty());
  // boundary point: canonical identity witness
  const auto rb = reduce_to_closed_alcove(a2, Weight{2, 1}, 5);
  EXPECT_EQ(rb.weight, (Weight{2, 1}));
  EXPECT_TRUE(rb.witness.is_identity());
  const Weight far{10, -5};
  const auto r = reduce_to_closed_alcove(a2, far, 5);
  EXPECT_EQ(r.weight, *support::bfs_alcove_representative(a2, far, 5, 40));
  EXPECT_EQ(dot_apply(a2, r.witness, far), r.weight);
  EXPECT_THROW(reduce_to_closed_alcove(a2, far, 3), DomainError);
}

TEST(AffineWeyl, ReductionMatchesCoxeterBfs) {
  for (const auto& t : all_types(3)) {
    const RootSystem& rs = root_system(t);
    support::Rng rng(support::seed_for(t, 23));
    for (Int l : {rs.coxeter_number() + 1, rs.coxeter_number() + 4}) {
      for (int trial = 0; trial < 40; ++trial) {
        const Weight lambda = rng.weight(rs.rank(), -2 * l, 2 * l);
        const auto oracle = support::bfs_alcove_representative(rs, lambda, l, 12 * l);
        ASSERT_TRUE(oracle.has_value()) << t.name() << " " << lambda.to_string();
        EXPECT_EQ(reduce_to_closed_alcove(rs, lambda, l).weight, *oracle) << t.name() << " " << lambda.to_string();
      }
    }
  }
}

TEST(AffineWeyl, OrbitOfZeroExamples) {
  const RootSystem& a1 = root_system("A1");
  EXPECT_TRUE(in_orbit_of_zero(a1, Weight{8}, 5, false));
  EXPECT_FALSE(in_orbit_of_zero(a1, Weight{3}, 5, false));
  EXPECT_TRUE(in_orbit_of_zero(a1, Weight{3}, 5, true));
  const RootSystem& a3 = root_system("A3");
  EXPECT_TRUE(in_orbit_of_zero(a3, Weight{0, 1, 0}, 5, true));
  EXPECT_FALSE(in_orbit_of_zero(a3, Weight{0, 1, 0}, 5, false));
  EXPECT_FALSE(in_orbit_of_zero(a3, Weight{0, 2, 0}, 5, true));
  EXPECT_THROW(in_orbit_of_zero(a3, Weight{0, 0, 0}, 4, true), DomainError);
}

TEST(AffineWeyl, OrbitMethodsAgreeWithBfs) {
  for (const auto& t : all_types(3)) {
    const RootSystem& rs = root_system(t);
    support::Rng rng(support::seed_for(t, 31));
    for (Int l = rs.coxeter_number() + 1; l <= 12; ++l) {
      const auto plain = bfs_dot_orbit_of_zero(rs, l, false, 4 * l);
      const auto ext = bfs_dot_orbit_of_zero(rs, l, true, 4 * l);
      for (int trial = 0; trial < 60; ++trial) {
        // stay well inside the box so the truncated BFS sees the whole local orbit
        const Weight lambda = rng.weight(rs.rank(), -2 * l, 2 * l);
        const bool bp = plain.count(lambda) > 0, be = ext.count(lambda) > 0;
        EXPECT_EQ(in_orbit_of_zero(rs, lambda, l, false), bp) << t.name() << " l=" << l << " " << lambda;
        EXPECT_EQ(in_orbit_of_zero(rs, lambda, l, true), be) << t.name() << " l=" << l << " " << lambda;
        EXPECT_EQ(in_orbit_of_zero(rs, lambda, l, true, OrbitMethod::coset), be);
      }
      // orbit points themselves, so positive verdicts are exercised too
      std::size_t k = 0;
      for (const Weight& w : ext) {
        if (w.max_abs() > 2 * l || ++k > 40) continue;
        EXPECT_TRUE(in_orbit_of_zero(rs, w, l, true)) << t.name() << " " << w;
        EXPECT_EQ(in_orbit_of_zero(rs, w, l, false), plain.count(w) > 0) << t.name() << " " << w;
      }
    }
  }
}

TEST(AffineWeyl, OmegaElements) {
  EXPECT_EQ(omega_elements(root_system("E8"), 31).size(), 1u);
  EXPECT_EQ(omega_elements(root_system("A2"), 5).size(), 3u);
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    const Int l = rs.coxeter_number() + 2;
    const auto om = omega_elements(rs, l);
    EXPECT_EQ(static_cast<Int>(om.size()), rs.fundamental_group_order());
    for (std::size_t i : rs.minuscule_indices()) {
      const auto g = gamma(rs, i, l);
      EXPECT_EQ(dot_apply(rs, g, Weight(rs.rank())), (l - rs.coxeter_number()) * Weight::fundamental(rs.rank(), i))
          << t.name() << " i=" << i;
      EXPECT_FALSE(in_affine_weyl_group(rs, g));
    }
  }
  EXPECT_THROW(gamma(root_system("B3"), 1, 7), DomainError);
  EXPECT_THROW(omega_elements(root_system("A2"), 3), DomainError);
}

TEST(AffineWeyl, OmegaStabilizesAlcove) {
  for (const auto& t : all_types(3)) {
    const RootSystem& rs = root_system(t);
    for (Int l = rs.coxeter_number() + 1; l <= rs.coxeter_number() + 4; ++l)
      for (const auto& g : omega_elements(rs, l))
        for (const Weight& w : open_alcove_points(rs, l))
          EXPECT_TRUE(alcove_position(rs, dot_apply(rs, g, w), l).in_open()) << t.name() << " " << w;
  }
  for (const auto& t : all_types(6)) {
    const RootSystem& rs = root_system(t);
    support::Rng rng(support::seed_for(t, 37));
    const Int l = rs.coxeter_number() + 3;
    for (const auto& g : omega_elements(rs, l)) {
      int tested = 0;
      for (int trial = 0; trial < 2000 && tested < 100; ++trial) {
        const Weight w = rng.dominant(rs.rank(), 3);
        if (!alcove_position(rs, w, l).in_open()) continue;
        ++tested;
        EXPECT_TRUE(alcove_position(rs, dot_apply(rs, g, w), l).in_open()) << t.name() << " " << w;
      }
      EXPECT_GT(tested, 0);
    }
  }
}

TEST(AffineWeyl, OmegaGroupLaw) {
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    const Int l = rs.coxeter_number() + 1;
    const auto om = omega_elements(rs, l);
    const auto pts = extended_orbit_alcove_points(rs, l);
    auto index_of = [&](const AffineElement& g) {
      const Weight red = reduce_to_closed_alcove(rs, dot_apply(rs, g, Weight(rs.rank())), l).weight;
      const auto it = std::find(pts.begin(), pts.end(), red);
      return it == pts.end() ? pts.size() : static_cast<std::size_t>(it - pts.begin());
    };
    const std::size_t n = om.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = index_of(compose(om[a], om[b]));
        ASSERT_LT(table[a][b], n) << t.name();
      }
    // Latin square with identity row/column and associativity: a group of order |J| + 1.
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> row(table[a].begin(), table[a].end()), col;
      for (std::size_t b = 0; b < n; ++b) col.insert(table[b][a]);
      EXPECT_EQ(row.size(), n);
      EXPECT_EQ(col.size(), n);
      EXPECT_EQ(table[0][a], a);
      EXPECT_EQ(table[a][0], a);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(table[table[a][b]][c], table[a][table[b][c]]);
    }
  }
}

TEST(AffineWeyl, InverseAndComposition) {
  const RootSystem& b2 = root_system("B2");
  const auto g = gamma(b2, 2, 7);
  const auto id = compose(g, affine_inverse(b2, g));
  EXPECT_TRUE(id.is_identity());
  const AffineElement other{simple_reflection(b2, 1), Weight{1, 0}, 9};
  EXPECT_THROW(compose(g, other), DomainError);
}

TEST(AffineWeyl, CosetRepresentatives) {
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    EXPECT_EQ(static_cast<Int>(coset_representatives(rs).size()), rs.fundamental_group_order());
  }
}

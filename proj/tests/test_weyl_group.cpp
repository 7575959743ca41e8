#include <gtest/gtest.h>

#include "support.hpp"

using namespace rootcomb;

TEST(WeylGroup, SimpleReflections) {
  const RootSystem& a1 = root_system("A1");
  EXPECT_EQ(simple_reflection(a1, 1)(Weight{1}), Weight{-1});
  const RootSystem& a2 = root_system("A2");
  // s_1(alpha_2) = alpha_1 + alpha_2
  const Weight a12 = a2.simple_root(1).weight + a2.simple_root(2).weight;
  EXPECT_EQ(simple_reflection(a2, 1)(a2.simple_root(2).weight), a12);
  for (const auto& t : all_types(6))
    for (std::size_t i = 1; i <= t.rank; ++i) {
      const RootSystem& rs = root_system(t);
      const auto s = simple_reflection(rs, i);
      EXPECT_TRUE(compose(s, s).is_identity());
      EXPECT_EQ(length(rs, s), 1u);
    }
  EXPECT_THROW(simple_reflection(a2, 3), DomainError);
}

TEST(WeylGroup, LongestElement) {
  EXPECT_EQ(length(root_system("A3"), longest_element(root_system("A3"))), 6u);
  EXPECT_EQ(length(root_system("B2"), longest_element(root_system("B2"))), 4u);
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    const auto w0 = longest_element(rs);
    EXPECT_EQ(length(rs, w0), rs.num_positive_roots()) << t.name();
    EXPECT_EQ(w0.word->size(), rs.num_positive_roots()) << t.name();
    EXPECT_EQ(from_word(rs, *w0.word), w0);
    EXPECT_TRUE(compose(w0, w0).is_identity()) << t.name();
    for (const Root& a : rs.positive_roots()) EXPECT_TRUE(rs.is_negative_root(w0(a.weight)));
    EXPECT_EQ(w0(rs.rho()), -rs.rho());
  }
}

TEST(WeylGroup, RootReflections) {
  for (const auto& t : all_types(5)) {
    const RootSystem& rs = root_system(t);
    for (const Root& a : rs.positive_roots()) {
      const auto s = root_reflection(rs, a);
      EXPECT_EQ(s(a.weight), -a.weight);
      EXPECT_EQ(from_word(rs, *s.word), s);
      EXPECT_TRUE(compose(s, s).is_identity());
      EXPECT_EQ(length(rs, s) % 2, 1u);
    }
  }
}

TEST(WeylGroup, LengthOfW0Wi) {
  EXPECT_EQ(l_w0wi(root_system("A5"), 1), 5u);
  EXPECT_EQ(l_w0wi(root_system("C3"), 1), 5u);
  EXPECT_EQ(l_w0wi(root_system("A1"), 1), 1u);
  EXPECT_EQ(l_w0wi(root_system("E6"), 1), 16u);
  EXPECT_EQ(l_w0wi(root_system("E7"), 7), 27u);
  EXPECT_THROW(l_w0wi(root_system("B3"), 1), DomainError);
  EXPECT_THROW(l_w0wi(root_system("E8"), 1), DomainError);
}

TEST(WeylGroup, W0WiSendsRhoToRhoMinusHVarpi) {
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    for (std::size_t i : rs.minuscule_indices())
      EXPECT_EQ(w0_wi(rs, i)(rs.rho()), rs.rho() - rs.coxeter_number() * Weight::fundamental(rs.rank(), i))
          << t.name() << " i=" << i;
  }
}

TEST(WeylGroup, LengthOfW0WiMatchesLevelProfile) {
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    for (std::size_t i : rs.minuscule_indices())
      EXPECT_EQ(static_cast<Int>(l_w0wi(rs, i)), level_profile(rs, i).total()) << t.name() << " i=" << i;
  }
}

TEST(WeylGroup, EqualityWithHMinusOne) {
  // compared after canonicalization, so B_2 varpi_2 counts as C_2 varpi_1
  std::set<std::string> hits, expected;
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    for (std::size_t i : rs.minuscule_indices()) {
      const auto c = canonicalize(TypedWeight{t, Weight::fundamental(t.rank, i)});
      if (static_cast<Int>(l_w0wi(rs, i)) == rs.coxeter_number() - 1) hits.insert(c.to_string());
      const std::size_t r = c.type.rank;
      const bool predicted = (c.type.family == Family::A && (c.weight[0] == 1 || c.weight[r - 1] == 1)) ||
                             (c.type.family == Family::C && c.weight[0] == 1);
      if (predicted) expected.insert(c.to_string());
    }
  }
  EXPECT_EQ(hits, expected);
  EXPECT_TRUE(hits.count("C2:1,0"));
  EXPECT_TRUE(hits.count("A1:1"));
}

TEST(WeylGroup, MakeDominant) {
  const RootSystem& a1 = root_system("A1");
  auto [mu, w] = make_dominant(a1, Weight{-3});
  EXPECT_EQ(mu, Weight{3});
  EXPECT_EQ(*w.word, (std::vector<std::size_t>{1}));
  const RootSystem& a2 = root_system("A2");
  auto [mu2, w2] = make_dominant(a2, Weight{2, 1});
  EXPECT_EQ(mu2, (Weight{2, 1}));
  EXPECT_TRUE(w2.is_identity());
  const auto w0 = longest_element(a2);
  auto [mu3, w3] = make_dominant(a2, w0(a2.rho()));
  EXPECT_EQ(mu3, a2.rho());
  EXPECT_EQ(w3, w0);
}

TEST(WeylGroupProperties, RandomWordsLength) {
  for (const auto& t : all_types(6)) {
    const RootSystem& rs = root_system(t);
    support::Rng rng(support::seed_for(t, 11));
    for (int trial = 0; trial < 200; ++trial) {
      const auto word = rng.word(rs.rank(), 30);
      const auto w = from_word(rs, word);
      const std::size_t len = length(rs, w);
      // inversion count of w^{-1} equals the number of greedy steps taking w(rho) to rho
      auto [mu, u] = make_dominant(rs, w(rs.rho()));
      EXPECT_EQ(mu, rs.rho());
      EXPECT_EQ(u.word->size(), len);
      EXPECT_EQ(compose(u, w), WeylElement::identity(rs.rank()));
      EXPECT_LE(len, word.size());
      EXPECT_EQ(len % 2, word.size() % 2);
      if (word.empty()) continue;
      auto shorter = word;
      shorter.pop_back();
      const std::size_t l2 = length(rs, from_word(rs, shorter));
      EXPECT_EQ(l2 + 1 == len || len + 1 == l2, true);
      // deleting any letter multiplies by a reflection: the length changes by an odd amount
      const std::size_t pos = rng.index(word.size());
      auto deleted = word;
      deleted.erase(deleted.begin() + static_cast<long>(pos));
      const std::size_t l3 = length(rs, from_word(rs, deleted));
      EXPECT_EQ((l3 + len) % 2, 1u);
    }
  }
}

TEST(WeylGroupProperties, LengthEqualsCayleyDistance) {
  for (const auto& t : all_types(3)) {
    const RootSystem& rs = root_system(t);
    const auto dist = support::cayley_lengths(rs);
    std::size_t longest = 0;
    for (const auto& [key, d] : dist) {
      IntMatrix m(rs.rank());
      for (std::size_t r = 0; r < rs.rank(); ++r)
        for (std::size_t c = 0; c < rs.rank(); ++c) m(r, c) = key[r * rs.rank() + c];
      EXPECT_EQ(length(rs, WeylElement{m, std::nullopt}), d);
      longest = std::max(longest, d);
    }
    EXPECT_EQ(longest, rs.num_positive_roots());
  }
}

TEST(WeylGroup, InverseWithoutWord) {
  const RootSystem& b3 = root_system("B3");
  const auto w = from_word(b3, {1, 2, 3, 2});
  const WeylElement bare{w.matrix, std::nullopt};
  EXPECT_TRUE(compose(inverse(b3, bare), w).is_identity());
  EXPECT_TRUE(compose(inverse(b3, w), w).is_identity());
}

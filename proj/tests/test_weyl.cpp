#include <gtest/gtest.h>

#include <random>
#include <set>

#include "weylwords/error.hpp"
#include "weylwords/weyl.hpp"

using namespace weylwords;

namespace {

RootSystem sys_of(const char* t) { return RootSystem::build(TypeLabel::parse(t)); }

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> pick(1, rank);
  Word w;
  for (int k = 0; k < len; ++k) w.letters.push_back(pick(rng));
  return w;
}

// {s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})}; for a reduced word this is N(w^{-1}).
std::set<Root> prefix_images(const RootSystem& sys, const Word& w) {
  std::set<Root> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Root b = sys.simple(w.letters[j]);
    for (std::size_t k = j; k-- > 0;) b = apply_simple(sys, w.letters[k], b);
    out.insert(b);
  }
  return out;
}

// {s_{i_k} ... s_{i_{j+1}}(alpha_{i_j})}; for a reduced word this is N(w).
std::set<Root> suffix_images(const RootSystem& sys, const Word& w) { return prefix_images(sys, w.reversed()); }

const char* kTypes[] = {"A3", "B3", "C4", "D4", "G2", "F4", "E6"};

}  // namespace

TEST(Word, RenderAndParse) {
  EXPECT_EQ(render_word(Word{1, 3, 4, 5, 4, 3, 1}), "s1345431");
  EXPECT_EQ(render_word(Word{}), "s[]");
  EXPECT_EQ(render_word(Word{1, 10, 3}), "s[1,10,3]");
  EXPECT_EQ(parse_word("s24342"), (Word{2, 4, 3, 4, 2}));
  EXPECT_EQ(parse_word("s_{2}s_4s_3s_4s_2"), (Word{2, 4, 3, 4, 2}));
  EXPECT_EQ(parse_word("s2·s434·s2"), (Word{2, 4, 3, 4, 2}));
  EXPECT_EQ(parse_word("[1,10,3]"), (Word{1, 10, 3}));
  EXPECT_EQ(parse_word("s[]"), Word{});
  EXPECT_THROW(parse_word("s1x2"), Error);
  for (const Word& w : {Word{}, Word{3}, Word{1, 2, 1}, Word{11, 2, 13}})
    EXPECT_EQ(parse_word(render_word(w)), w);
}

TEST(Word, Palindromes) {
  EXPECT_TRUE(is_palindrome(Word{1, 2, 1}));
  EXPECT_TRUE(is_palindrome(Word{}));
  EXPECT_FALSE(is_palindrome(Word{1, 2}));
}

TEST(Word, InvalidGenerator) {
  const auto sys = sys_of("A2");
  EXPECT_THROW(matrix(sys, Word{1, 3}), Error);
  EXPECT_THROW(apply_simple(sys, 0, sys.simple(1)), Error);
  try {
    check_word(Word{4}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGenerator);
  }
}

TEST(Matrix, EmptyWordIsIdentity) {
  const auto sys = sys_of("F4");
  EXPECT_EQ(matrix(sys, Word{}), WeylMatrix::identity(4));
}

TEST(Matrix, SimpleReflectionColumns) {
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int i = 1; i <= sys.rank(); ++i) {
      const WeylMatrix m = simple_matrix(sys, i);
      EXPECT_EQ(m, matrix(sys, Word{i}));
      EXPECT_EQ(m, reflection_matrix(sys, sys.simple(i)));
      for (int j = 1; j <= sys.rank(); ++j)
        EXPECT_EQ(m.apply(sys.simple(j)), apply_simple(sys, i, sys.simple(j)));
    }
  }
}

TEST(Matrix, G2Example) {
  const auto sys = sys_of("G2");
  const WeylMatrix m = matrix(sys, Word{1, 2, 1, 2, 1});
  EXPECT_EQ(m, reflection_matrix(sys, Root({2, 1})));
  for (const auto& a : sys.positives()) {
    const bool fixed = m.apply(a) == a;
    EXPECT_EQ(fixed, sys.inner(a, Root({2, 1})) == Rational(0)) << render_root(a);
  }
}

TEST(Matrix, WordTimesReverseIsIdentity) {
  std::mt19937 rng(7);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int trial = 0; trial < 30; ++trial) {
      const Word w = random_word(rng, sys.rank(), 1 + trial % 15);
      EXPECT_EQ(matrix(sys, w) * matrix(sys, w.reversed()), WeylMatrix::identity(sys.rank()));
      EXPECT_EQ(matrix(sys, w + w.reversed()), WeylMatrix::identity(sys.rank()));
    }
  }
}

TEST(Matrix, PermutesRoots) {
  std::mt19937 rng(11);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    const WeylMatrix m = matrix(sys, random_word(rng, sys.rank(), 9));
    std::set<Root> images;
    for (const auto& a : sys.positives()) {
      const Root b = m.apply(a);
      EXPECT_TRUE(sys.is_root(b));
      images.insert(b);
      images.insert(m.apply(-a));
    }
    EXPECT_EQ(images.size(), 2 * sys.positives().size());
  }
}

TEST(Matrix, MatchesLetterByLetterAction) {
  std::mt19937 rng(3);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    const Word w = random_word(rng, sys.rank(), 12);
    const WeylMatrix m = matrix(sys, w);
    for (const auto& a : sys.positives()) {
      Root b = a;
      for (std::size_t k = w.size(); k-- > 0;) b = apply_simple(sys, w.letters[k], b);
      EXPECT_EQ(m.apply(a), b);
    }
  }
}

TEST(ApplySimple, Involutive) {
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int i = 1; i <= sys.rank(); ++i)
      for (const auto& a : sys.positives()) EXPECT_EQ(apply_simple(sys, i, apply_simple(sys, i, a)), a);
  }
}

TEST(InversionSet, Examples) {
  const auto c4 = sys_of("C4");
  EXPECT_TRUE(inversion_set(c4, Word{}).empty());
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(inversion_set(c4, Word{i}), std::set<Root>{c4.simple(i)});
  // 2e_1 in C4 = 2a1+2a2+2a3+a4; its inversion set is {e1-ej} u {e1+ej} u {2e1}.
  const Word w{1, 2, 3, 4, 3, 2, 1};
  const std::set<Root> want{Root({1, 0, 0, 0}), Root({1, 1, 0, 0}), Root({1, 1, 1, 0}),
                            Root({1, 2, 2, 1}), Root({1, 1, 2, 1}), Root({1, 1, 1, 1}),
                            Root({2, 2, 2, 1})};
  EXPECT_EQ(inversion_set(c4, w), want);
}

TEST(InversionSet, MatchesExchangeImagesOnReducedWords) {
  std::mt19937 rng(5);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = reduce(sys, random_word(rng, sys.rank(), 14));
      const auto n = inversion_set(sys, w);
      EXPECT_EQ(n.size(), w.size());
      EXPECT_EQ(n, suffix_images(sys, w)) << t << " " << render_word(w);
      EXPECT_EQ(inversion_set(sys, w.reversed()), prefix_images(sys, w)) << t << " " << render_word(w);
    }
  }
}

TEST(Length, Examples) {
  const auto e6 = sys_of("E6");
  EXPECT_EQ(length(e6, parse_word("s243154652434256451342")), 21);
  EXPECT_EQ(length(e6, Word{}), 0);
  const auto c4 = sys_of("C4");
  EXPECT_EQ(length(c4, Word{2, 3, 1, 2, 4, 3, 4, 2, 1, 3, 2}), 11);
}

TEST(Length, ReverseAndStep) {
  std::mt19937 rng(13);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, sys.rank(), trial % 17);
      const int l = length(sys, w);
      EXPECT_EQ(l, length(sys, w.reversed()));
      EXPECT_EQ(l, length(sys, matrix(sys, w)));
      EXPECT_LE(l, static_cast<int>(w.size()));
      EXPECT_EQ(l % 2, static_cast<int>(w.size()) % 2);
      for (int i = 1; i <= sys.rank(); ++i) EXPECT_EQ(std::abs(length(sys, w + Word{i}) - l), 1);
    }
  }
}

TEST(IsReduced, Examples) {
  const auto c4 = sys_of("C4");
  EXPECT_FALSE(is_reduced(c4, Word{1, 1}));
  EXPECT_TRUE(is_reduced(c4, Word{2, 3, 1, 2, 4, 3, 4, 2, 1, 3, 2}));
  EXPECT_TRUE(is_reduced(c4, Word{}));
  const auto a2 = sys_of("A2");
  EXPECT_FALSE(is_reduced(a2, Word{1, 2, 1, 2}));
}

TEST(Reflection, Lengths) {
  const auto c4 = sys_of("C4");
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(reflection_length(c4, c4.simple(i)), 1);
    // 2e_i = 2a_i + ... + 2a_3 + a_4.
    std::vector<int> c(4, 0);
    for (int k = i; k <= 3; ++k) c[static_cast<std::size_t>(k - 1)] = 2;
    c[3] = 1;
    EXPECT_EQ(reflection_length(c4, Root(c)), 2 * (4 - i) + 1);
  }
  EXPECT_THROW(reflection_length(c4, Root({-1, 0, 0, 0})), Error);
  EXPECT_THROW(reflection_matrix(c4, Root({1, 0, 1, 0})), Error);
}

TEST(Reflection, MatrixProperties) {
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    const auto id = WeylMatrix::identity(sys.rank());
    for (const auto& a : sys.positives()) {
      const WeylMatrix m = reflection_matrix(sys, a);
      EXPECT_EQ(m * m, id);
      EXPECT_EQ(m.apply(a), -a);
      EXPECT_EQ(m, reflection_matrix(sys, -a));
      EXPECT_EQ(length(sys, m), reflection_length(sys, a));
    }
  }
}

TEST(Reduce, Examples) {
  const auto sys = sys_of("A3");
  EXPECT_EQ(reduce(sys, Word{1, 1}), Word{});
  EXPECT_EQ(reduce(sys, Word{1, 2, 1}), (Word{1, 2, 1}));
}

TEST(Reduce, ProducesReducedEquivalentWords) {
  std::mt19937 rng(17);
  for (const char* t : kTypes) {
    const auto sys = sys_of(t);
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, sys.rank(), 20);
      const Word r = reduce(sys, w);
      EXPECT_TRUE(is_reduced(sys, r));
      EXPECT_EQ(static_cast<int>(r.size()), length(sys, w));
      EXPECT_EQ(matrix(sys, r), matrix(sys, w));
    }
  }
}

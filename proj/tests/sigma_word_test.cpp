#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snakecone/sigma_word.hpp"
#include "snakecone/snake_pi1.hpp"

using namespace snakecone;

namespace {

const GroupDescriptor F2 = GroupDescriptor::free(2);
const GroupDescriptor F1 = GroupDescriptor::free(1);

GroupElement a(const GroupDescriptor& d = F2) { return GroupElement::generator(d, 0); }
GroupElement b(const GroupDescriptor& d = F2) { return GroupElement::generator(d, 1); }

Letter C(std::int64_t n, GroupElement g) { return {Family::C, n, std::move(g)}; }

bool is_reduced(const SigmaWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letters()[i].element.is_identity()) return false;
    if (i > 0 && w.letters()[i].same_factor(w.letters()[i - 1])) return false;
  }
  return true;
}

std::vector<Letter> random_raw(const GroupDescriptor& d, std::mt19937_64& rng, std::size_t max_len,
                               std::int64_t max_index) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::int64_t> idx(1, max_index);
  std::uniform_int_distribution<int> fam(0, 2);
  const Family fs[] = {Family::C, Family::A, Family::B};
  std::vector<Letter> raw(len(rng));
  for (auto& l : raw) l = {fs[fam(rng)], idx(rng), random_element(d, rng, 2, 2)};
  return raw;
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce({C(1, a()), C(1, a().inverse())}, F2).empty());

  SigmaWord ab = reduce({C(1, a()), C(1, b())}, F2);
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab.letters()[0], C(1, a() * b()));
  EXPECT_EQ(ab.letters(), oracle::naive_reduce({C(1, a()), C(1, b())}));

  SigmaWord merged = reduce({C(2, a()), C(3, identity(F2)), C(2, b())}, F2);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged.letters()[0], C(2, a() * b()));
}

TEST(Reduce, Errors) {
  EXPECT_THROW(reduce({C(1, a(F1))}, F2), DescriptorMismatch);
  EXPECT_THROW(reduce({C(0, a())}, F2), DomainError);
}

TEST(Reduce, AgreesWithRepeatedPassOracle) {
  std::mt19937_64 rng(1);
  for (const auto& d : {F2, GroupDescriptor::cyclic(2), GroupDescriptor::free_abelian(1)}) {
    for (int t = 0; t < 10000; ++t) {
      auto raw = random_raw(d, rng, 64, 3);
      SigmaWord w = reduce(raw, d);
      ASSERT_EQ(w.letters(), oracle::naive_reduce(raw));
      ASSERT_TRUE(is_reduced(w));
      ASSERT_EQ(reduce(w.letters(), d), w);  // idempotent
    }
  }
}

TEST(Concat, Examples) {
  SigmaWord w = reduce({C(1, a()), C(2, b())}, F2);
  EXPECT_EQ(concat(w, SigmaWord(F2)), w);
  EXPECT_TRUE(concat(reduce({C(1, a())}, F2), reduce({C(1, a().inverse())}, F2)).empty());
  EXPECT_EQ(concat(reduce({C(1, a())}, F2), reduce({C(2, b())}, F2)).letters(),
            (std::vector<Letter>{C(1, a()), C(2, b())}));
  EXPECT_THROW(concat(SigmaWord(F2), SigmaWord(F1)), DescriptorMismatch);
}

TEST(InvertWord, Examples) {
  EXPECT_TRUE(invert_word(SigmaWord(F2)).empty());
  EXPECT_EQ(invert_word(reduce({C(1, a()), C(2, b())}, F2)).letters(),
            (std::vector<Letter>{C(2, b().inverse()), C(1, a().inverse())}));
  auto a2 = a(F1) * a(F1);
  EXPECT_EQ(invert_word(reduce({C(3, a2)}, F1)).letters(),
            (std::vector<Letter>{C(3, a2.inverse())}));
}

TEST(FreeProductLaws, ConcatInvert) {
  std::mt19937_64 rng(2);
  for (const auto& d : {F2, GroupDescriptor::cyclic(6), GroupDescriptor::free_abelian(2)}) {
    for (int t = 0; t < 3000; ++t) {
      SigmaWord u = reduce(random_raw(d, rng, 12, 4), d);
      SigmaWord v = reduce(random_raw(d, rng, 12, 4), d);
      SigmaWord x = reduce(random_raw(d, rng, 12, 4), d);
      ASSERT_EQ(concat(concat(u, v), x), concat(u, concat(v, x)));
      ASSERT_TRUE(concat(u, invert_word(u)).empty());
      ASSERT_EQ(invert_word(invert_word(u)), u);
      ASSERT_EQ(invert_word(concat(u, v)), concat(invert_word(v), invert_word(u)));
    }
  }
}

TEST(ApplyHom, Examples) {
  const auto& maps = snake_maps();
  auto g = a();
  EXPECT_TRUE(apply_hom(maps.i0, reduce({C(2, g.inverse()), C(3, g)}, F2)).empty());
  EXPECT_TRUE(apply_hom(maps.i0, SigmaWord(F2)).empty());
  SigmaWord w = reduce({C(1, a()), C(4, b()), C(2, a())}, F2);
  EXPECT_EQ(apply_hom(StandardHom::identity(), w), w);
}

TEST(ApplyHom, OutsideDomain) {
  SigmaWord w = reduce({Letter{Family::A, 1, a()}}, F2);
  EXPECT_THROW(apply_hom(snake_maps().i0, w), DomainError);
}

TEST(ApplyHom, NonRelabelingImagesAndHomomorphismLaw) {
  // Conjugation by a fixed letter: images have three letters and the map is
  // a homomorphism on every factor.
  const Letter x{Family::B, 1, b()};
  StandardHom conjugate("conj", [x](const Letter& l) {
    return reduce({x, l, x.inverse()}, l.element.descriptor());
  });
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    SigmaWord u = random_word(F2, 6, 8, rng), v = random_word(F2, 6, 8, rng);
    for (const StandardHom* h : std::vector<const StandardHom*>{&conjugate, &snake_maps().i0, &snake_maps().i1}) {
      ASSERT_EQ(apply_hom(*h, concat(u, v)), concat(apply_hom(*h, u), apply_hom(*h, v)));
      ASSERT_EQ(apply_hom(*h, invert_word(u)), invert_word(apply_hom(*h, u)));
    }
  }
}

TEST(ProjectHorizon, Examples) {
  auto g = a(), h = b();
  Letter B1{Family::B, 1, g}, B3{Family::B, 3, g};
  EXPECT_EQ(project_horizon(reduce({B1, B3}, F2), 2).letters(), std::vector<Letter>{B1});

  std::vector<Letter> raw = {{Family::A, 1, g}, {Family::A, 5, h}, {Family::A, 1, g.inverse()}};
  EXPECT_TRUE(project_horizon(reduce(raw, F2), 4).empty());
  EXPECT_TRUE(oracle::naive_project(raw, 4).empty());

  std::mt19937_64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    SigmaWord w = random_word(F2, 9, 10, rng);
    ASSERT_EQ(project_horizon(w, std::max<std::int64_t>(1, max_index(w))), w);
  }
  EXPECT_THROW(project_horizon(SigmaWord(F2), 0), DomainError);
}

TEST(ProjectHorizon, IdempotentMonotoneMultiplicative) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5000; ++t) {
    SigmaWord u = random_word(F2, 8, 12, rng), v = random_word(F2, 8, 12, rng);
    std::uniform_int_distribution<std::int64_t> hz(1, 9);
    std::int64_t M = hz(rng), M2 = hz(rng);
    if (M2 > M) std::swap(M, M2);
    auto pu = project_horizon(u, M);
    ASSERT_EQ(project_horizon(pu, M), pu);
    ASSERT_EQ(project_horizon(pu, M2), project_horizon(u, M2));
    ASSERT_EQ(project_horizon(concat(u, v), M), concat(pu, project_horizon(v, M)));
    ASSERT_EQ(pu.letters(), oracle::naive_project(u.letters(), M));
  }
}

TEST(MaxIndex, Examples) {
  EXPECT_EQ(max_index(SigmaWord(F2)), 0);
  EXPECT_EQ(max_index(reduce({C(1, a()), C(7, b())}, F2)), 7);
  EXPECT_EQ(max_index(reduce({C(3, a())}, F2)), 3);
}

TEST(RandomWord, DeterministicAndReduced) {
  EXPECT_TRUE(random_word(F2, 5, 0, std::uint64_t{1}).empty());
  EXPECT_EQ(random_word(F2, 5, 9, std::uint64_t{42}), random_word(F2, 5, 9, std::uint64_t{42}));
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    SigmaWord w = random_word(GroupDescriptor::cyclic(6), 6, 12, seed);
    ASSERT_TRUE(is_reduced(w));
    ASSERT_EQ(w.size(), 12u);
    ASSERT_LE(max_index(w), 6);
    for (const auto& l : w) ASSERT_EQ(l.family, Family::C);
  }
  EXPECT_LE(random_word(F2, 1, 5, std::uint64_t{3}).size(), 1u);
  EXPECT_TRUE(random_word(GroupDescriptor::trivial(), 4, 5, std::uint64_t{3}).empty());
}

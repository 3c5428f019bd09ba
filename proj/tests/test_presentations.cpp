#include <doctest.h>

#include <set>

#include "braids/braid_core.hpp"
#include "braids/presentations.hpp"

using namespace braids;

namespace {

std::set<std::string> relation_lines(Presentation const& p) {
  std::set<std::string> out;
  for (auto const& r : p.relations) {
    out.insert(format_relation(p, r));
  }
  return out;
}

bool has_relation(Presentation const& p, std::string const& lhs, std::string const& rhs) {
  auto l = p.word(lhs);
  auto r = p.word(rhs);
  for (auto const& rel : p.relations) {
    if ((rel.lhs == l && rel.rhs == r) || (rel.lhs == r && rel.rhs == l)) {
      return true;
    }
  }
  return false;
}

Permutation transposition(int n, int i, int j) {
  auto p = Permutation::identity(n);
  std::swap(p.image[static_cast<std::size_t>(i - 1)], p.image[static_cast<std::size_t>(j - 1)]);
  return p;
}

Assignment permutation_assignment(std::map<std::string, Permutation> images, int n) {
  auto inverses = images;
  for (auto& [label, p] : inverses) {
    p = p.inverse();
  }
  return make_assignment(
      "S_" + std::to_string(n), Permutation::identity(n), std::move(images), std::move(inverses),
      [](Permutation const& a, Permutation const& b) { return a.then(b); },
      [](Permutation const& a, Permutation const& b) { return a == b; });
}

std::vector<FamilyParams> sample_params(FamilyInfo const& info) {
  std::vector<FamilyParams> out;
  std::vector<int> ns = info.needs_n ? std::vector<int>{2, 3, 4, 5} : std::vector<int>{0};
  std::vector<int> es = info.needs_e ? std::vector<int>{2, 3} : std::vector<int>{0};
  for (int n : ns) {
    for (int e : es) {
      out.push_back({n, 0, e});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Artin presentation on three strands") {
  auto p = builtin_presentation("artin", {3});
  CHECK(p.gens.size() == 2);
  REQUIRE(p.relations.size() == 1);
  CHECK(format_relation(p, p.relations[0]) == "s1 s2 s1 = s2 s1 s2");
}

TEST_CASE("Artin presentation: far commutations and braid relations") {
  auto p = builtin_presentation("artin", {5});
  CHECK(p.gens.size() == 4);
  // 3 braid relations, 3 commutations
  CHECK(p.relations.size() == 6);
  CHECK(has_relation(p, "s1 s3", "s3 s1"));
  CHECK(has_relation(p, "s2 s4", "s4 s2"));
  CHECK_FALSE(has_relation(p, "s1 s2", "s2 s1"));
}

TEST_CASE("two-generator presentation on four strands") {
  auto p = builtin_presentation("artin-2gen", {4});
  CHECK(p.gens.size() == 2);
  CHECK(p.relations.size() == 2);
  CHECK(has_relation(p, "s1 S^2 s1 S^-2", "S^2 s1 S^-2 s1"));
  CHECK(has_relation(p, "S^4", "S s1 S s1 S s1"));
}

TEST_CASE("IVB drops exactly one mixed relation family from IBP") {
  for (int n = 2; n <= 6; ++n) {
    auto ibp = builtin_presentation("ibp", {n});
    auto ivb = builtin_presentation("ivb", {n});
    CHECK(ibp.relations.size() - ivb.relations.size() == static_cast<std::size_t>(n - 2));
    auto all = relation_lines(ibp);
    for (auto const& line : relation_lines(ivb)) {
      CHECK(all.count(line) == 1);
    }
  }
}

TEST_CASE("every family with a model verifies in it") {
  for (auto const& info : builtin_families()) {
    if (!info.has_model) {
      continue;
    }
    for (auto const& params : sample_params(info)) {
      Presentation p;
      try {
        p = builtin_presentation(info.name, params);
      } catch (std::invalid_argument const&) {
        continue;  // below the family's minimum n
      }
      auto a = builtin_model(info.name, params);
      REQUIRE(a.has_value());
      auto report = verify_homomorphism(p, *a);
      INFO(info.name << " n=" << params.n << " in " << report.model);
      CHECK(report.all_hold());
      CHECK(report.holds == static_cast<int>(p.relations.size()));
    }
  }
}

TEST_CASE("families without a model pass their quotient checks") {
  int checked = 0;
  for (auto const& info : builtin_families()) {
    if (!info.has_quotient) {
      continue;
    }
    for (auto const& params : sample_params(info)) {
      Presentation p;
      try {
        p = builtin_presentation(info.name, params);
      } catch (std::invalid_argument const&) {
        continue;
      }
      auto a = builtin_quotient(info.name, params);
      REQUIRE(a.has_value());
      auto report = verify_homomorphism(p, *a);
      INFO(info.name << " n=" << params.n << " e=" << params.e << " in " << report.model);
      CHECK(report.all_hold());
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("complex reflection families with d > 2") {
  for (int d : {3, 4}) {
    for (int e : {2, 3}) {
      FamilyParams params{3, d, e};
      auto p = builtin_presentation("complex-b2ee", params);
      auto report = verify_homomorphism(p, *builtin_quotient("complex-b2ee", params));
      INFO("d=" << d << " e=" << e);
      CHECK(report.all_hold());
    }
  }
}

TEST_CASE("model-less families are structurally sound") {
  for (auto const& info : builtin_families()) {
    for (auto const& params : sample_params(info)) {
      Presentation p;
      try {
        p = builtin_presentation(info.name, params);
      } catch (std::invalid_argument const&) {
        continue;
      }
      CHECK_NOTHROW(p.validate());
      CHECK_FALSE(p.gens.empty());
      // every relation re-parses from its printed form
      for (auto const& r : p.relations) {
        CHECK(p.word(format_word(p, r.lhs)) == r.lhs);
        CHECK(p.word(format_word(p, r.rhs)) == r.rhs);
      }
    }
  }
}

TEST_CASE("G34 generates without a quotient") {
  auto p = builtin_presentation("g34", {});
  CHECK(p.gens.size() == 3);
  CHECK_FALSE(builtin_model("g34", {}).has_value());
  CHECK_FALSE(builtin_quotient("g34", {}).has_value());
}

TEST_CASE("type B three-generator form needs t to commute with s2") {
  // s_i -> (i, i+1), t -> (1 2) satisfies every relation except the i = 1
  // commutation, so that relation cannot be left out.
  for (int n = 3; n <= 6; ++n) {
    auto p = builtin_presentation("type-b-3gen", {n});
    auto S = Permutation::identity(n);
    for (int i = 1; i < n; ++i) {
      S = S.then(transposition(n, i, i + 1));
    }
    auto a = permutation_assignment(
        {{"s1", transposition(n, 1, 2)}, {"S", S}, {"t", transposition(n, 1, 2)}}, n);
    auto report = verify_homomorphism(p, a);
    REQUIRE(report.fails == 1);
    for (auto const& v : report.verdicts) {
      if (v.verdict == Verdict::fails) {
        CHECK(v.witness == "t S s1 S' = S s1 S' t");
      }
    }
  }
}

TEST_CASE("G30: t commutes with s2 and s3, not with s4") {
  auto p = builtin_presentation("g30", {});
  auto h4 = builtin_quotient("g30", {});
  REQUIRE(h4.has_value());
  CHECK(verify_homomorphism(p, *h4).all_hold());
  // the relation for S^3 s1 S^-3 = s4 fails in the reflection representation
  CHECK_FALSE(h4->equal(p, p.word("t S^3 s1 S^-3"), p.word("S^3 s1 S^-3 t")));
  CHECK(h4->equal(p, p.word("t S^2 s1 S^-2"), p.word("S^2 s1 S^-2 t")));
}

TEST_CASE("words: powers, primes and the empty word") {
  auto p = builtin_presentation("sb", {3});
  CHECK(p.word("s1^3") == p.word("s1 s1 s1"));
  CHECK(p.word("s1^-2") == p.word("s1' s1'"));
  CHECK(p.word("1").empty());
  CHECK(format_word(p, {}) == "1");
  CHECK_THROWS_AS(p.word("s9"), std::invalid_argument);
  CHECK_THROWS_AS(p.word("x1'"), std::invalid_argument);
  CHECK(format_word(p, p.word("s2^-1 x1")) == "s2' x1");
}

TEST_CASE("relate deduplicates in either orientation") {
  Presentation p;
  p.add_generator("a", true);
  p.add_generator("b", true);
  CHECK(p.relate("a b a", "b a b", "AR"));
  CHECK_FALSE(p.relate("b a b", "a b a", "AR"));
  CHECK_FALSE(p.relate("a b a", "b a b", "other"));
  CHECK(p.relations.size() == 1);
  CHECK(export_text(p) == "a b a = b a b\n");
  CHECK_THROWS_AS(p.add_generator("a", true), std::invalid_argument);
}

TEST_CASE("validate rejects malformed relations") {
  Presentation p;
  p.add_generator("x", false);
  p.relations.push_back({{{0, -1}}, {}, "bad"});
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.relations = {{{{3, 1}}, {}, "bad"}};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("verify_homomorphism: missing images and skipped relations") {
  auto p = builtin_presentation("artin", {3});
  auto a = permutation_assignment({{"s1", transposition(3, 1, 2)}}, 3);
  CHECK_THROWS_AS(verify_homomorphism(p, a), std::invalid_argument);

  Assignment none;
  none.model = "none";
  none.labels = {"s1", "s2"};
  auto report = verify_homomorphism(p, none);
  CHECK(report.skipped == 1);
  CHECK_FALSE(report.all_hold());
}

TEST_CASE("a wrong assignment is reported with its witness") {
  auto p = builtin_presentation("artin", {3});
  // s1 and s2 both to (1 2): the braid relation holds, so use a 3-cycle
  auto c = transposition(3, 1, 2).then(transposition(3, 2, 3));
  auto a = permutation_assignment({{"s1", transposition(3, 1, 2)}, {"s2", c}}, 3);
  auto report = verify_homomorphism(p, a, false);
  CHECK(report.fails == 1);
  CHECK(report.verdicts[0].witness == "s1 s2 s1 = s2 s1 s2");
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(builtin_presentation("no-such-family", {3}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_presentation("artin", {0}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_presentation("artin", {65}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_presentation("complex-bee", {3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_presentation("type-d", {2}), std::invalid_argument);
}

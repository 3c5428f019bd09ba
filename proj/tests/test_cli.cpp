#include <doctest.h>

#include <json.hpp>

#include <random>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = braids::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(std::string const& name) {
  return std::string(BRAIDS_DATA_DIR) + "/graphs/" + name;
}

// The line after "word: " in `nf --word` output.
std::string printed_word(std::string const& out) {
  auto at = out.find("word: ");
  REQUIRE(at != std::string::npos);
  auto end = out.find('\n', at);
  return out.substr(at + 6, end - at - 6);
}

std::string random_word(std::mt19937& rng, int n, int len,
                        std::vector<std::string> const& kinds) {
  std::string w;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kinds.size()) - 1);
  for (int k = 0; k < len; ++k) {
    std::string kind = kinds[static_cast<std::size_t>(pick(rng))];
    std::string tok;
    if (kind == "s" || kind == "x" || kind == "e") {
      int hi = kind == "e" ? n : n - 1;
      tok = kind + std::to_string(std::uniform_int_distribution<int>(1, hi)(rng));
      if (kind == "s" && rng() % 2) {
        tok += "'";
      }
    } else {
      int t = std::uniform_int_distribution<int>(2, n)(rng);
      int s = std::uniform_int_distribution<int>(1, t - 1)(rng);
      bool inv = kind == "a" && rng() % 2;
      tok = kind + (inv ? "'" : "") + "(" + std::to_string(t) + ","
            + std::to_string(s) + ")";
    }
    w += (w.empty() ? "" : " ") + tok;
  }
  return w;
}

}  // namespace

TEST_CASE("documented examples") {
  auto eq = call({"eq", "n=3", "s1 s2 s1", "s2 s1 s2"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");

  auto brun = call({"brunnian", "n=2", "s1 s1"});
  CHECK(brun.code == 0);
  CHECK(brun.out == "brunnian: true\n");

  auto nf = call({"nf", "--kind=singular", "n=2", "a'(2,1)"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "power=-1 base=\n");
}

TEST_CASE("false verdicts exit with 1") {
  auto eq = call({"eq", "n=3", "s1 s2", "s2 s1"});
  CHECK(eq.code == 1);
  CHECK(eq.out == "not equal\n");
  // sigma_1 survives deletion of strand 3
  CHECK(call({"brunnian", "n=2", "s1"}).out == "brunnian: false\n");
  CHECK(call({"brunnian", "n=3", "s1 s1"}).code == 1);
  CHECK(call({"brunnian", "--strand", "3", "n=3", "s1 s1"}).code == 1);
  CHECK(call({"brunnian", "--strand", "1", "n=3", "s1 s1"}).code == 0);
}

TEST_CASE("input errors exit with 2 and name the offending token") {
  auto bad = call({"eq", "n=3", "s1 q2", "s1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'q2'") != std::string::npos);
  CHECK(bad.err.find("column 4") != std::string::npos);

  CHECK(call({"eq", "n=3", "s1 s9", "s1"}).code == 2);
  CHECK(call({"eq", "s1"}).code == 2);
  // a lone bare header stands for the identity
  CHECK(call({"eq", "n=3", "n=3"}).code == 0);
  CHECK(call({"eq", "n=3", "s1", "n=4 s1"}).code == 2);
  CHECK(call({"nf", "--kind=wrong", "s1"}).code == 2);
  CHECK(call({"nf", "--greedy=right", "a(3,1)"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"delete", "--strand", "4", "n=3", "s1"}).code == 2);
  CHECK(call({"pres", "gen", "no-such-family", "n=3"}).code == 2);
  CHECK(call({"pres", "verify", "g34"}).code == 2);
  CHECK(call({"pres", "gen", "--graph", data("missing.json")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("kind detection") {
  CHECK(nlohmann::json::parse(call({"--json", "nf", "s1"}).out)["kind"] == "garside");
  CHECK(nlohmann::json::parse(call({"--json", "nf", "a(3,1)"}).out)["kind"] == "bkl");
  CHECK(nlohmann::json::parse(call({"--json", "nf", "x1"}).out)["kind"] == "singular");
  CHECK(nlohmann::json::parse(call({"--json", "nf", "e1 s1"}).out)["kind"] == "ib");
}

TEST_CASE("printed normal forms re-parse to equal elements") {
  std::mt19937 rng(7);
  struct Case {
    std::string kind;
    std::vector<std::string> letters;
  };
  std::vector<Case> cases{{"garside", {"s"}},
                          {"garside", {"s", "a"}},
                          {"bkl", {"s", "a"}},
                          {"singular", {"s", "a", "x", "b"}},
                          {"ib", {"s", "e"}}};
  for (auto const& c : cases) {
    for (int trial = 0; trial < 30; ++trial) {
      int n = std::uniform_int_distribution<int>(2, 5)(rng);
      int len = std::uniform_int_distribution<int>(0, 8)(rng);
      auto w = random_word(rng, n, len, c.letters);
      auto header = "n=" + std::to_string(n);
      auto nf = call({"nf", "--word", "--kind=" + c.kind, header, w});
      REQUIRE(nf.code == 0);
      auto again = printed_word(nf.out);
      INFO(c.kind << ": " << w << " -> " << again);
      CHECK(call({"eq", "--kind=" + c.kind, header, w, again}).code == 0);
      // the normal form of the printed word is the same normal form
      auto nf2 = call({"nf", "--word", "--kind=" + c.kind, again});
      CHECK(nf2.out == nf.out);
    }
  }
}

TEST_CASE("right-greedy form describes the same braid") {
  auto left = call({"nf", "n=4", "s1 s3' s2 s2 s1"});
  auto right = call({"nf", "--greedy=right", "n=4", "s1 s3' s2 s2 s1"});
  CHECK(left.code == 0);
  CHECK(right.code == 0);
  CHECK(right.out.find("D^") != std::string::npos);
  CHECK(left.out != right.out);
}

TEST_CASE("conjugacy verdicts and C+ sets") {
  auto yes = call({"conj", "n=3", "a(2,1)", "a(3,2)"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("conjugate: true") == 0);
  CHECK(yes.out.find("C+(u): 3") != std::string::npos);

  // different b-letter counts
  CHECK(call({"conj", "n=3", "b(2,1) a(3,1)", "a(3,2) a(2,1)"}).code == 1);

  // negative words are shifted by a central power of delta
  auto shifted = call({"--json", "conj", "n=3", "a'(2,1) b(3,2)", "b(3,1) a'(3,2)"});
  auto j = nlohmann::json::parse(shifted.out);
  CHECK(j["shift"] == 3);
  CHECK(j["conjugate"] == (shifted.code == 0));

  CHECK(call({"conj", "--max-set", "2", "n=4", "b(2,1) b(4,3)", "b(3,2)"}).code == 2);
}

TEST_CASE("strand deletion and conversions") {
  // deleting the middle strand of s1 s2 s1 leaves one crossing
  auto d = call({"delete", "--strand", "2", "n=3", "s1 s2 s1"});
  CHECK(d.code == 0);
  CHECK(d.out == "n=2 s1\n");

  auto band = call({"convert", "n=4", "s1 s3' s2"});
  CHECK(band.out == "n=4 a(2,1) a'(4,3) a(3,2)\n");
  auto back = call({"convert", "a(3,1)"});
  CHECK(back.out == "n=3 s2 s1 s2'\n");
  CHECK(call({"eq", "n=3", "a(3,1)", "s2 s1 s2'"}).code == 0);

  auto sing = call({"convert", "x1 s2"});
  CHECK(sing.out == "n=3 b(2,1) a(3,2)\n");
  auto classical = call({"convert", "b(3,1)"});
  CHECK(classical.code == 0);
  auto word = classical.out.substr(0, classical.out.size() - 1);
  CHECK(call({"eq", word, "b(3,1)"}).code == 0);
}

TEST_CASE("presentation generation and verification") {
  auto gen = call({"pres", "gen", "artin", "n=3"});
  CHECK(gen.code == 0);
  CHECK(gen.out == "s1 s2 s1 = s2 s1 s2\n");

  auto j = nlohmann::json::parse(call({"--json", "pres", "gen", "artin", "n=4"}).out);
  CHECK(j["generators"].size() == 3);
  CHECK(j["relations"].size() == 3);

  auto ver = call({"pres", "verify", "artin", "n=5"});
  CHECK(ver.code == 0);
  CHECK(ver.out == "model Br_5: 6 hold, 0 fail, 0 skipped\n");

  auto q = nlohmann::json::parse(call({"--json", "pres", "verify", "g30"}).out);
  CHECK(q["quotient"] == true);
  CHECK(q["fails"] == 0);

  auto list = call({"pres", "list"});
  CHECK(list.out.find("artin ") == 0);
  CHECK(list.out.find("g34") != std::string::npos);
}

TEST_CASE("graph files in every variant") {
  auto pr = call({"pres", "gen", "--graph", data("pendant.json")});
  CHECK(pr.code == 0);
  CHECK(pr.out.find("s1 s2 s3 s3 = s2 s3 s3 s4") != std::string::npos);

  for (std::string v : {"plane", "annulus", "sphere", "singular-plane", "singular-annulus",
                        "inverse-plane"}) {
    auto r = call({"pres", "verify", "--graph", data("fan.json"), "--variant", v});
    INFO(v << ": " << r.out << r.err);
    CHECK(r.code == 0);
  }
  CHECK(call({"pres", "verify", "--graph", data("triangle.json"), "--variant", "sphere",
              "--minimal"})
            .code == 0);
  CHECK(call({"pres", "gen", "--graph", data("triangle.json"), "--variant", "torus"}).code == 2);
}

TEST_CASE("bench checks agreement before printing timings") {
  auto text = call({"bench", "--m", "20,60", "--n", "3,6", "--pairs", "4", "--seed", "11"});
  CHECK(text.code == 0);
  CHECK(text.out.find("all 16 pairs agree") != std::string::npos);

  auto j = nlohmann::json::parse(
      call({"--json", "bench", "--m", "30", "--n", "2,5", "--pairs", "2"}).out);
  CHECK(j["agree"] == true);
  CHECK(j["rows"].size() == 2);
  CHECK(call({"bench", "--n", "1"}).code == 2);
}

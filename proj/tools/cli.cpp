#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "braids/bkl_band.hpp"
#include "braids/braid_core.hpp"
#include "braids/inverse_braid.hpp"
#include "braids/presentations.hpp"
#include "braids/singular_monoid.hpp"
#include "braids/word.hpp"

namespace braids::cli {
namespace {

using json = nlohmann::json;

// Bad arguments detected after CLI11 has accepted the command line.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Kind { automatic, garside, bkl, singular, ib };

std::map<std::string, Kind> const kind_names{{"auto", Kind::automatic},
                                             {"garside", Kind::garside},
                                             {"bkl", Kind::bkl},
                                             {"singular", Kind::singular},
                                             {"ib", Kind::ib}};

std::string kind_name(Kind k) {
  for (auto const& [name, kind] : kind_names) {
    if (kind == k) {
      return name;
    }
  }
  return "?";
}

bool uses(std::vector<Token> const& toks, std::initializer_list<Gen> gens) {
  return std::any_of(toks.begin(), toks.end(), [&](Token const& t) {
    return std::find(gens.begin(), gens.end(), t.gen) != gens.end();
  });
}

// Positional arguments: an optional "n=K" header and the words themselves.
// A word may carry its own header; all headers must agree. A bare header
// doubles as the empty word when words are missing, so the identity's
// printed form "n=K" reads back.
struct Words {
  int n = 0;
  std::vector<std::vector<Token>> words;

  bool any(std::initializer_list<Gen> gens) const {
    return std::any_of(words.begin(), words.end(),
                       [&](auto const& w) { return uses(w, gens); });
  }
};

Words read_words(std::vector<std::string> const& raw, std::size_t expected,
                 int min_n = 1) {
  std::optional<int> n;
  std::vector<ParsedWord> parsed;
  std::size_t words = 0;
  for (auto const& text : raw) {
    parsed.push_back(parse_word(text));
    auto const& p = parsed.back();
    if (p.n) {
      if (n && *n != *p.n) {
        throw UsageError("conflicting strand counts n=" + std::to_string(*n)
                         + " and n=" + std::to_string(*p.n));
      }
      n = p.n;
    }
    words += p.n && p.tokens.empty() ? 0 : 1;
  }
  std::vector<bool> is_word(parsed.size());
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    is_word[k] = !parsed[k].n || !parsed[k].tokens.empty();
  }
  for (std::size_t k = parsed.size(); k-- > 0 && words < expected;) {
    if (!is_word[k]) {
      is_word[k] = true;
      ++words;
    }
  }
  if (words != expected) {
    throw UsageError("expected " + std::to_string(expected) + " word"
                     + (expected == 1 ? "" : "s") + ", got "
                     + std::to_string(words));
  }
  Words out;
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    if (is_word[k]) {
      out.words.push_back(std::move(parsed[k].tokens));
    }
  }
  if (n) {
    out.n = *n;
  } else {
    out.n = min_n;
    for (auto const& w : out.words) {
      out.n = std::max(out.n, min_strands(w));
    }
  }
  return out;
}

Kind detect(Words const& w, Kind requested) {
  if (requested != Kind::automatic) {
    return requested;
  }
  if (w.any({Gen::x, Gen::b})) {
    return Kind::singular;
  }
  if (w.any({Gen::eps, Gen::tau})) {
    return Kind::ib;
  }
  return w.any({Gen::a}) ? Kind::bkl : Kind::garside;
}

BraidWord as_braid(int n, std::vector<Token> const& toks) {
  if (uses(toks, {Gen::a})) {
    return band_to_artin(band_from_tokens(n, toks));
  }
  return braid_from_tokens(n, toks);
}

PartialBraid as_partial(int n, std::vector<Token> const& toks) {
  auto w = ib_from_tokens(n, toks);
  return uses(toks, {Gen::tau}) ? typeb_embed(w) : pb_from_word(w);
}

std::string with_header(int n, std::string const& word) {
  return "n=" + std::to_string(n) + (word.empty() ? "" : " " + word);
}

// Normal form of one word: display text, an explicit word for the same
// element, and the strand count that word lives on.
struct Normal {
  std::string text;
  std::string word;
  int n = 0;
};

Normal normal_form(Kind kind, int n, std::vector<Token> const& toks,
                   Greedy side) {
  switch (kind) {
    case Kind::garside: {
      auto nf = garside_nf(as_braid(n, toks));
      return {format_nf(nf, side), to_string(to_word(nf)), n};
    }
    case Kind::bkl: {
      auto nf = bkl_nf(band_from_tokens(n, toks));
      return {format_nf(nf), to_string(to_word(nf)), n};
    }
    case Kind::singular: {
      auto nf = singular_nf(sband_from_tokens(n, toks));
      return {format_nf(nf), to_string(to_word(nf)), n};
    }
    case Kind::ib: {
      auto pb = as_partial(n, toks);
      return {format_pb(pb), to_string(pb_to_word(pb)), pb.n};
    }
    case Kind::automatic:
      break;
  }
  throw std::logic_error("normal_form: unresolved kind");
}

bool equal(Kind kind, int n, std::vector<Token> const& u,
           std::vector<Token> const& v) {
  switch (kind) {
    case Kind::garside:
      return braid_equal(as_braid(n, u), as_braid(n, v));
    case Kind::bkl:
      return band_equal(band_from_tokens(n, u), band_from_tokens(n, v));
    case Kind::singular:
      return singular_equal(sband_from_tokens(n, u), sband_from_tokens(n, v));
    case Kind::ib: {
      bool type_b = uses(u, {Gen::tau}) || uses(v, {Gen::tau});
      auto lift = [&](std::vector<Token> const& t) {
        auto w = ib_from_tokens(n, t);
        return type_b ? typeb_embed(w) : pb_from_word(w);
      };
      return lift(u) == lift(v);
    }
    case Kind::automatic:
      break;
  }
  throw std::logic_error("equal: unresolved kind");
}

void emit(std::ostream& out, bool as_json, json const& j,
          std::string const& text) {
  if (as_json) {
    out << j.dump() << "\n";
  } else {
    out << text;
  }
}

// ---------------------------------------------------------------------------
// Presentations

struct PresArgs {
  std::string family;
  std::vector<std::string> positional;
  std::string graph_file;
  std::string variant = "plane";
  bool minimal = false;
  std::size_t max_trees = SergiescuOptions{}.max_trees;
  int d = 0;
  int e = 0;
  bool quotient = false;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyParams family_params(PresArgs const& a) {
  FamilyParams params;
  params.d = a.d;
  params.e = a.e;
  for (auto const& text : a.positional) {
    auto parsed = parse_word(text);
    if (!parsed.n || !parsed.tokens.empty()) {
      throw UsageError("unexpected argument '" + text + "'");
    }
    params.n = *parsed.n;
  }
  return params;
}

// A presentation together with the assignment `pres verify` checks it in.
struct Loaded {
  Presentation p;
  std::optional<Assignment> model;
  bool is_quotient = false;
};

Loaded load_presentation(PresArgs const& a, bool want_model) {
  Loaded out;
  if (!a.graph_file.empty()) {
    if (!a.family.empty() || !a.positional.empty()) {
      throw UsageError("--graph takes no family or strand count");
    }
    auto g = parse_graph_json(read_file(a.graph_file));
    auto variant = parse_variant(a.variant);
    out.p = sergiescu(g, variant, {a.minimal, a.max_trees});
    if (want_model) {
      out.model = graph_model(g, variant);
      out.is_quotient = variant == GraphVariant::sphere;
    }
    return out;
  }
  if (a.family.empty()) {
    throw UsageError("a family name or --graph is required");
  }
  auto params = family_params(a);
  out.p = builtin_presentation(a.family, params);
  if (want_model) {
    if (!a.quotient) {
      out.model = builtin_model(a.family, params);
    }
    if (!out.model) {
      out.model = builtin_quotient(a.family, params);
      out.is_quotient = true;
    }
    if (!out.model) {
      throw UsageError(std::string(a.quotient ? "no quotient" : "no model or quotient")
                       + " is implemented for " + a.family);
    }
  }
  return out;
}

json presentation_json(Presentation const& p) {
  json gens = json::array();
  for (auto const& g : p.gens) {
    gens.push_back({{"label", g.label}, {"invertible", g.invertible}});
  }
  json rels = json::array();
  for (auto const& r : p.relations) {
    rels.push_back({{"lhs", format_word(p, r.lhs)},
                    {"rhs", format_word(p, r.rhs)},
                    {"kind", r.kind}});
  }
  return {{"family", p.family}, {"generators", gens}, {"relations", rels}};
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchArgs {
  std::vector<int> lengths{100, 500, 2000};
  std::vector<int> strands{10, 25, 50};
  int pairs = 3;
  std::uint64_t seed = 20240601;
};

// Rewrites random letters with the braid relation in the form
// s_i = s_j s_i s_j s_i^-1 s_j^-1, |i - j| = 1; the element is unchanged.
BraidWord disguise(BraidWord const& w, std::mt19937_64& rng, int rewrites) {
  auto letters = w.letters;
  for (int r = 0; r < rewrites && !letters.empty(); ++r) {
    std::uniform_int_distribution<std::size_t> at(0, letters.size() - 1);
    auto pos = at(rng);
    auto [i, e] = letters[pos];
    int j = i + 1 < w.n ? i + 1 : i - 1;
    if (j < 1) {
      continue;  // n = 2 has no neighbour to rewrite with
    }
    std::vector<Letter> rep{{j, 1}, {i, 1}, {j, 1}, {i, -1},
                                         {j, -1}};
    if (e < 0) {
      // inverse of the identity above: s_i^-1 = s_j s_i s_j^-1 s_i^-1 s_j^-1
      rep = {{j, 1}, {i, 1}, {j, -1}, {i, -1}, {j, -1}};
    }
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                   rep.begin(), rep.end());
  }
  return BraidWord(w.n, std::move(letters));
}

BraidWord random_braid(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    letters.push_back({gen(rng), inv(rng) ? -1 : 1});
  }
  return BraidWord(n, std::move(letters));
}

struct BenchRow {
  int n = 0;
  int m = 0;
  int pairs = 0;
  double garside_ms = 0;  // mean per normal form
  double bkl_ms = 0;
};

int bench(BenchArgs const& a, bool as_json, std::ostream& out,
          std::ostream& err) {
  if (a.pairs < 1) {
    throw UsageError("--pairs must be positive");
  }
  for (int n : a.strands) {
    if (n < 2) {
      throw UsageError("bench needs n >= 2");
    }
  }
  std::mt19937_64 rng(a.seed);
  std::vector<BenchRow> rows;
  int disagreements = 0;
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  for (int n : a.strands) {
    for (int m : a.lengths) {
      BenchRow row{n, m, a.pairs, 0, 0};
      for (int k = 0; k < a.pairs; ++k) {
        auto u = random_braid(n, m, rng);
        auto v = disguise(u, rng, 4);
        bool expect_equal = k % 2 == 0;
        if (!expect_equal && !v.letters.empty()) {
          // flipping one letter changes the exponent sum by 2
          v.letters[0].sign = -v.letters[0].sign;
        }
        auto t0 = clock::now();
        bool g = garside_nf(u) == garside_nf(v);
        auto t1 = clock::now();
        bool b = bkl_nf(artin_to_band(u)) == bkl_nf(artin_to_band(v));
        auto t2 = clock::now();
        row.garside_ms += ms(t1 - t0) / 2;
        row.bkl_ms += ms(t2 - t1) / 2;
        if (g != b || g != expect_equal) {
          ++disagreements;
          err << "disagreement at n=" << n << " m=" << m << " pair " << k
              << ": garside " << g << ", bkl " << b << ", expected "
              << expect_equal << "\n";
        }
      }
      row.garside_ms /= a.pairs;
      row.bkl_ms /= a.pairs;
      rows.push_back(row);
    }
  }
  if (disagreements > 0) {
    return verdict_false;
  }
  if (as_json) {
    json j = json::array();
    for (auto const& r : rows) {
      j.push_back({{"n", r.n},
                   {"m", r.m},
                   {"pairs", r.pairs},
                   {"garside_ms", r.garside_ms},
                   {"bkl_ms", r.bkl_ms}});
    }
    out << json{{"seed", a.seed}, {"agree", true}, {"rows", j}}.dump() << "\n";
    return ok;
  }
  out << "seed " << a.seed << ", all " << rows.size() * a.pairs
      << " pairs agree\n";
  out << std::setw(4) << "n" << std::setw(7) << "m" << std::setw(14)
      << "garside_ms" << std::setw(10) << "bkl_ms" << std::setw(8) << "ratio"
      << "\n";
  out << std::fixed;
  for (auto const& r : rows) {
    out << std::setw(4) << r.n << std::setw(7) << r.m << std::setprecision(2)
        << std::setw(14) << r.garside_ms << std::setw(10) << r.bkl_ms
        << std::setw(8) << (r.bkl_ms > 0 ? r.garside_ms / r.bkl_ms : 0.0)
        << "\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct Options {
  bool as_json = false;
  std::string kind_text = "auto";
  std::string greedy = "left";
  bool show_word = false;
  std::vector<std::string> words;
  int strand = 0;
  std::string to = "auto";
  std::size_t max_set = ConjugacyOptions{}.max_set;
  bool summary = false;
  PresArgs pres;
  BenchArgs bench;
};

int dispatch(CLI::App& app, Options const& o, std::ostream& out,
             std::ostream& err) {
  auto* sub = app.get_subcommands().empty() ? nullptr
                                            : app.get_subcommands().front();
  if (sub == nullptr) {
    err << app.help();
    return input_error;
  }
  std::string const name = sub->get_name();

  if (name == "nf") {
    auto w = read_words(o.words, 1);
    auto kind = detect(w, kind_names.at(o.kind_text));
    auto side = o.greedy == "right" ? Greedy::right : Greedy::left;
    if (o.greedy == "right" && kind != Kind::garside) {
      throw UsageError("--greedy applies to --kind=garside only");
    }
    auto nf = normal_form(kind, w.n, w.words[0], side);
    std::string text = nf.text + "\n";
    if (o.show_word) {
      text += "word: " + with_header(nf.n, nf.word) + "\n";
    }
    emit(out, o.as_json,
         {{"kind", kind_name(kind)},
          {"n", w.n},
          {"nf", nf.text},
          {"word", with_header(nf.n, nf.word)}},
         text);
    return ok;
  }

  if (name == "eq") {
    auto w = read_words(o.words, 2);
    auto kind = detect(w, kind_names.at(o.kind_text));
    bool same = equal(kind, w.n, w.words[0], w.words[1]);
    emit(out, o.as_json, {{"kind", kind_name(kind)}, {"n", w.n}, {"equal", same}},
         same ? "equal\n" : "not equal\n");
    return same ? ok : verdict_false;
  }

  if (name == "conj") {
    auto w = read_words(o.words, 2, 2);
    auto u = sband_from_tokens(w.n, w.words[0]);
    auto v = sband_from_tokens(w.n, w.words[1]);
    auto nu = singular_nf(u);
    auto nv = singular_nf(v);
    // central delta^(nk) makes both positive without changing the verdict
    long deficit = std::max({0L, -nu.power, -nv.power});
    long k = (deficit + w.n - 1) / w.n;
    long shift = w.n * k;
    nu.power += shift;
    nv.power += shift;
    ConjugacyOptions copts{o.max_set};
    auto cu = positive_conjugates(nu, copts);
    auto cv = positive_conjugates(nv, copts);
    bool conj = cu == cv;
    json j{{"n", w.n}, {"conjugate", conj}, {"shift", shift}};
    std::string text = std::string("conjugate: ") + (conj ? "true" : "false")
                       + "\n";
    if (k > 0) {
      text += "shifted by d^" + std::to_string(shift) + "\n";
    }
    auto list = [&](char const* label, std::vector<SingularNF> const& set) {
      json arr = json::array();
      text += std::string("C+(") + label + "): " + std::to_string(set.size())
              + "\n";
      for (auto const& c : set) {
        arr.push_back(format_nf(c));
        if (!o.summary) {
          text += "  " + format_nf(c) + "\n";
        }
      }
      j[std::string("C+(") + label + ")"] = arr;
    };
    list("u", cu);
    list("v", cv);
    emit(out, o.as_json, j, text);
    return conj ? ok : verdict_false;
  }

  if (name == "delete") {
    auto w = read_words(o.words, 1);
    auto b = as_braid(w.n, w.words[0]);
    if (o.strand < 1 || o.strand > w.n) {
      throw UsageError("--strand must lie in 1.." + std::to_string(w.n));
    }
    auto d = delete_strand(b, o.strand);
    auto text = with_header(d.n, to_string(d));
    emit(out, o.as_json, {{"n", d.n}, {"word", to_string(d)}}, text + "\n");
    return ok;
  }

  if (name == "brunnian") {
    auto w = read_words(o.words, 1);
    auto b = as_braid(w.n, w.words[0]);
    bool yes;
    if (o.strand != 0) {
      if (o.strand < 1 || o.strand > w.n) {
        throw UsageError("--strand must lie in 1.." + std::to_string(w.n));
      }
      yes = brunnian_test(b, o.strand);
    } else {
      yes = brunnian_test(b);
    }
    emit(out, o.as_json, {{"n", w.n}, {"brunnian", yes}},
         std::string("brunnian: ") + (yes ? "true" : "false") + "\n");
    return yes ? ok : verdict_false;
  }

  if (name == "convert") {
    auto w = read_words(o.words, 1);
    auto const& toks = w.words[0];
    bool band_input = uses(toks, {Gen::a, Gen::b});
    bool singular = uses(toks, {Gen::x, Gen::b});
    std::string to = o.to == "auto" ? (band_input ? "artin" : "band") : o.to;
    std::string result;
    if (singular) {
      result = to == "band" ? to_string(sband_from_tokens(w.n, toks))
                            : to_string(band_to_classical(
                                  sband_from_tokens(w.n, toks)));
    } else {
      result = to == "band" ? to_string(artin_to_band(as_braid(w.n, toks)))
                            : to_string(as_braid(w.n, toks));
    }
    emit(out, o.as_json, {{"n", w.n}, {"to", to}, {"word", result}},
         with_header(w.n, result) + "\n");
    return ok;
  }

  if (name == "pres") {
    auto* action = sub->get_subcommands().empty()
                       ? nullptr
                       : sub->get_subcommands().front();
    if (action == nullptr) {
      err << sub->help();
      return input_error;
    }
    std::string const act = action->get_name();
    if (act == "list") {
      json j = json::array();
      std::string text;
      for (auto const& f : builtin_families()) {
        std::string check = f.has_model      ? "model"
                            : f.has_quotient ? "quotient"
                                             : "none";
        j.push_back({{"name", f.name},
                     {"description", f.description},
                     {"needs_n", f.needs_n},
                     {"needs_e", f.needs_e},
                     {"check", check}});
        std::ostringstream line;
        line << std::left << std::setw(20) << f.name << std::setw(10) << check
             << f.description << "\n";
        text += line.str();
      }
      emit(out, o.as_json, j, text);
      return ok;
    }
    if (act == "gen") {
      auto loaded = load_presentation(o.pres, false);
      emit(out, o.as_json, presentation_json(loaded.p), export_text(loaded.p));
      return ok;
    }
    // verify
    auto loaded = load_presentation(o.pres, true);
    auto report = verify_homomorphism(loaded.p, *loaded.model);
    json fails = json::array();
    std::string text = (loaded.is_quotient ? "quotient " : "model ")
                       + report.model + ": " + std::to_string(report.holds)
                       + " hold, " + std::to_string(report.fails) + " fail, "
                       + std::to_string(report.skipped) + " skipped\n";
    for (auto const& v : report.verdicts) {
      if (v.verdict == Verdict::fails) {
        fails.push_back(v.witness);
        text += "FAIL " + v.witness + "\n";
      }
    }
    emit(out, o.as_json,
         {{"model", report.model},
          {"quotient", loaded.is_quotient},
          {"holds", report.holds},
          {"fails", report.fails},
          {"skipped", report.skipped},
          {"failures", fails}},
         text);
    return report.all_hold() ? ok : verdict_false;
  }

  if (name == "bench") {
    return bench(o.bench, o.as_json, out, err);
  }
  throw std::logic_error("unhandled subcommand " + name);
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Normal forms, word and conjugacy problems for braid groups "
               "and monoids, and a presentation generator/verifier."};
  app.name("braids-cli");
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable output");

  auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind_text, "Normal-form engine")
        ->check(CLI::IsMember({"auto", "garside", "bkl", "singular", "ib"}));
  };
  auto words_opt = [&](CLI::App* sub, char const* what) {
    sub->add_option("words", o.words, what)->required();
  };

  auto* nf = app.add_subcommand("nf", "Print a normal form");
  kind_opt(nf);
  nf->add_option("--greedy", o.greedy, "Garside factor order")
      ->check(CLI::IsMember({"left", "right"}));
  nf->add_flag("--word", o.show_word,
               "Also print a word for the normal form");
  words_opt(nf, "[n=K] word");

  auto* eq = app.add_subcommand("eq", "Decide whether two words are equal");
  kind_opt(eq);
  words_opt(eq, "[n=K] u v");

  auto* conj = app.add_subcommand(
      "conj", "Conjugacy in the singular braid monoid, with C+ sets");
  conj->add_option("--max-set", o.max_set, "Bound on |C+|")
      ->check(CLI::PositiveNumber);
  conj->add_flag("--summary", o.summary, "Print set sizes only");
  words_opt(conj, "[n=K] u v");

  auto* del = app.add_subcommand("delete", "Delete one strand of a braid");
  del->add_option("--strand", o.strand, "Strand to delete")->required();
  words_opt(del, "[n=K] word");

  auto* brun = app.add_subcommand(
      "brunnian", "Test whether a braid is (i-)Brunnian in IB_n");
  brun->add_option("--strand", o.strand, "Test deletion of this strand only");
  words_opt(brun, "[n=K] word");

  auto* conv = app.add_subcommand(
      "convert", "Convert between Artin (sigma/x) and band (a/b) letters");
  conv->add_option("--to", o.to, "Target alphabet")
      ->check(CLI::IsMember({"auto", "band", "artin"}));
  words_opt(conv, "[n=K] word");

  auto* pres = app.add_subcommand("pres", "Presentation families and graphs");
  pres->require_subcommand(1);
  pres->add_subcommand("list", "List builtin families");
  for (auto [act, help] : {std::pair{"gen", "Print a presentation"},
                           std::pair{"verify", "Check it in a model"}}) {
    auto* s = pres->add_subcommand(act, help);
    s->add_option("family", o.pres.family, "Builtin family name");
    s->add_option("params", o.pres.positional, "n=K");
    s->add_option("--graph", o.pres.graph_file, "Graph file (JSON)");
    s->add_option("--variant", o.pres.variant, "Graph presentation variant");
    s->add_flag("--minimal", o.pres.minimal,
                "Sphere: tree relations of one maximal tree");
    s->add_option("--max-trees", o.pres.max_trees,
                  "Sphere: bound on enumerated maximal trees");
    s->add_option("--d", o.pres.d, "Complex reflection parameter d");
    s->add_option("--e", o.pres.e, "Complex reflection parameter e");
    if (std::string(act) == "verify") {
      s->add_flag("--quotient", o.pres.quotient,
                  "Use the quotient check even when a model exists");
    }
  }

  auto* bench = app.add_subcommand(
      "bench", "Time garside_nf against bkl_nf on random words");
  bench->add_option("--m", o.bench.lengths, "Word lengths")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--n", o.bench.strands, "Strand counts")->delimiter(',');
  bench->add_option("--pairs", o.bench.pairs, "Word pairs per cell");
  bench->add_option("--seed", o.bench.seed, "Random seed");

  std::vector<char const*> argv{"braids-cli"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (ClosureOverflow const& e) {
    err << "error: " << e.what() << " (raise --max-set)\n";
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << "\n";
  }
  return input_error;
}

}  // namespace braids::cli

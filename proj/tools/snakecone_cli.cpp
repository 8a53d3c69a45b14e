// Command-line front end: parses words, sequences and matrices, runs one
// scenario and prints its report. Exit status 0 iff the verdict is true,
// 1 for a false verdict, 2 for usage, parse or admissibility errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snakecone/snakecone.hpp"

namespace {

struct Options {
  std::string group = "free:1";
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;

  std::string word;
  std::int64_t depth = 0, horizon = 0;
  std::size_t count = 1000;
  std::int64_t max_index = 6;
  std::size_t max_len = 12;

  std::size_t length = 0;
  std::string v, w;
  std::size_t trials = 1000;

  std::string matrix;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw snakecone::DomainError("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace snakecone;
  CLI::App app{"Word and sequence identity checks for the Snake cone"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "base group: free:r, abelian:r, cyclic:k, finabelian:d1,...,dt, trivial")
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_flag("--json", o.json, "emit the report as json");
    sub->add_option("--out", o.out, "write the report to this path instead of stdout");
  };

  auto* pi1 = app.add_subcommand("verify-pi1", "check the four word identities for one word");
  auto* pi1r = app.add_subcommand("verify-pi1-random", "check the word identities on random words");
  auto* h2 = app.add_subcommand("verify-h2", "telescoping preimage for one pair (v, w)");
  auto* h2r = app.add_subcommand("verify-h2-random", "round-trip campaign over random pairs");
  auto* h2x = app.add_subcommand("verify-h2-exhaustive", "brute-force image of i0 + i1 over a finite group");
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  for (auto* sub : {pi1, pi1r, h2, h2r, h2x, snf}) common(sub);

  for (auto* sub : {pi1, pi1r}) {
    sub->add_option("--depth", o.depth, "tail depth k (each tail has 2k letters)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--horizon", o.horizon, "horizon M")->check(CLI::PositiveNumber);
  }
  pi1->add_option("--word", o.word, "word, e.g. 'C1[a] C2[b^-1]'")->required();
  pi1r->add_option("--count", o.count, "number of random words")->capture_default_str();
  pi1r->add_option("--max-index", o.max_index, "largest C-index drawn")
      ->check(CLI::PositiveNumber)->capture_default_str();
  pi1r->add_option("--max-len", o.max_len, "largest word length drawn")->capture_default_str();

  h2->add_option("--v", o.v, "sequence over H_n(Y0), e.g. '(1);(2)'")->required();
  h2->add_option("--w", o.w, "sequence over H_n(Y1)")->required();
  for (auto* sub : {h2, h2r, h2x})
    sub->add_option("--length", o.length, "truncation length N")->check(CLI::PositiveNumber);
  for (auto* sub : {h2r, h2x})
    sub->add_option("--trials", o.trials, "random trials")->capture_default_str();

  snf->add_option("--matrix", o.matrix, "matrix file: rows of space-separated integers")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Scenario s;
    s.group = parse_descriptor(o.group);
    s.seed = o.seed;
    if (o.depth > 0) s.depth = o.depth;
    if (o.horizon > 0) s.horizon = o.horizon;
    s.count = o.count;
    s.max_index = o.max_index;
    s.max_len = o.max_len;
    if (o.length > 0) s.length = o.length;
    s.trials = o.trials;

    if (pi1->parsed()) {
      s.kind = ScenarioKind::pi1_single;
      s.word = parse_word(o.word, s.group);
    } else if (pi1r->parsed()) {
      s.kind = ScenarioKind::pi1_random;
    } else if (h2->parsed()) {
      s.kind = ScenarioKind::h2_single;
      s.v = parse_sequence(o.v, s.group);
      s.w = parse_sequence(o.w, s.group);
    } else if (h2r->parsed()) {
      s.kind = ScenarioKind::h2_random;
    } else if (h2x->parsed()) {
      s.kind = ScenarioKind::h2_exhaustive;
    } else {
      s.kind = ScenarioKind::snf;
      s.matrix = parse_matrix(read_file(o.matrix));
    }

    ScenarioReport r = run_scenario(s);
    if (s.kind == ScenarioKind::snf) r.replay = "snf --matrix " + o.matrix;
    const std::string text = emit_report(r, o.json ? ReportFormat::json : ReportFormat::human);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw DomainError("cannot write report to '" + o.out + "'");
      f << text;
    }
    return r.verdict ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

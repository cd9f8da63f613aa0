#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"

#include "dimtrace/cli/query.hpp"
#include "dimtrace/error.hpp"

namespace {

// Exit statuses: a computed verdict (true or false) is success.
constexpr int kExitVerdict = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitEnvelope = 3;
constexpr int kExitOtherError = 4;

struct Settings {
  std::string input = "-";
  bool oracle = false;
  unsigned long n_max = 64;
  unsigned long bound = 3;
  std::string ledger;
  std::string format = "human";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw dimtrace::InvalidInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

int run(dimtrace::cli::Kind kind, const Settings& s, const CLI::App& sub) {
  using namespace dimtrace::cli;
  try {
    Query q;
    q.kind = kind;
    try {
      q.payload = json::parse(read_input(s.input));
    } catch (const json::parse_error& e) {
      throw dimtrace::InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    q.options.oracle = s.oracle;
    if (sub.count("--nmax")) q.options.n_max = s.n_max;
    if (sub.count("--bound")) q.options.bound = s.bound;
    const VerdictRecord rec = run_query(q);
    if (!s.ledger.empty()) append_ledger(s.ledger, rec);
    if (s.format == "record") std::cout << to_json(rec).dump() << "\n";
    else std::cout << format_human(rec);
    return kExitVerdict;
  } catch (const dimtrace::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const dimtrace::SizeEnvelopeExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnvelope;
  } catch (const dimtrace::FactorizationIncomplete& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnvelope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOtherError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using dimtrace::cli::Kind;
  CLI::App app{"Exact goodness and order-unit goodness of traces on dimension groups"};
  app.set_version_flag("--version", std::string(dimtrace::cli::version()));
  app.require_subcommand(1);

  Settings s;
  struct Entry {
    const char* name;
    Kind kind;
    const char* help;
  };
  const Entry entries[] = {
      {"trace1d", Kind::kTrace1d, "Trace on R_P at a one-variable algebraic point"},
      {"tracerat", Kind::kTraceRational, "Trace on R_P at a rational point"},
      {"fit", Kind::kFitting, "Fitting of candidate polynomials with respect to P"},
      {"simp", Kind::kSimplicial, "Trace on a simplicial group Z^k"},
      {"dsum", Kind::kDirectSum, "Trace on a strict direct sum of rank-one groups"},
      {"splx", Kind::kSimplex, "Goodness of a convex subset of a simplex"},
      {"poly", Kind::kPolytopeInfo, "Newton polytope summary of P"},
  };
  std::vector<std::pair<CLI::App*, Kind>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("input", s.input, "JSON payload file, - for standard input")->capture_default_str();
    sub->add_flag("--oracle", s.oracle, "Also run the brute-force oracle and report agreement");
    sub->add_option("--nmax", s.n_max, "Largest boost exponent N for fit")->capture_default_str();
    sub->add_option("--bound", s.bound, "Order-unit entry bound for the simp oracle")->capture_default_str();
    sub->add_option("--ledger", s.ledger, "Append the verdict record to this file");
    sub->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"human", "record"}))
        ->capture_default_str();
    subs.emplace_back(sub, e.kind);
  }

  CLI11_PARSE(app, argc, argv);
  for (const auto& [sub, kind] : subs)
    if (sub->parsed()) return run(kind, s, *sub);
  return kExitOtherError;
}

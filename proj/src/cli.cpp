#include "fractalseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fractalseq/construction.hpp"
#include "fractalseq/inverse.hpp"
#include "fractalseq/signature.hpp"
#include "fractalseq/theta_parser.hpp"

namespace fractalseq::cli {

namespace {

constexpr std::size_t kDefaultMaxTerms = 1'000'000;

// Bad input: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t max_terms() {
  const char* raw = std::getenv("FRACTALSEQ_MAX_TERMS");
  if (!raw || !*raw) return kDefaultMaxTerms;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("FRACTALSEQ_MAX_TERMS must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

void check_cap(std::size_t requested, const char* what) {
  const std::size_t cap = max_terms();
  if (requested > cap) {
    throw UsageError(std::string(what) + " " + std::to_string(requested) + " exceeds FRACTALSEQ_MAX_TERMS=" +
                     std::to_string(cap));
  }
}

ExactNumber theta_arg(const std::string& text) {
  try {
    return parse_theta(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Sequence read_input(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return parse_sequence(in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read '" + path + "'");
    return parse_sequence(file);
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad sequence input: ") + e.what());
  }
}

void print_terms(std::ostream& out, const Sequence& s) {
  for (Term v : s) out << v << '\n';
}

struct GenerateOpts {
  std::string theta;
  long long count = 0;
  bool ranks = false;
  bool json = false;
  bool bfile = false;
};

int do_generate(const GenerateOpts& o, std::ostream& out) {
  const ExactNumber theta = theta_arg(o.theta);
  if (o.count < 1) throw UsageError("--count must be positive");
  check_cap(static_cast<std::size_t>(o.count), "--count");
  SignatureGenerator gen(theta);
  for (long long h = 1; h <= o.count; ++h) {
    const AnnotatedTerm t = gen.next();
    if (o.json) {
      nlohmann::ordered_json rec;
      rec["index"] = h;
      rec["value"] = t.value;
      rec["rank"] = t.rank;
      out << rec.dump() << '\n';
    } else if (o.bfile) {
      out << h << ' ' << t.value << '\n';
    } else if (o.ranks) {
      out << t.value << ' ' << t.rank << '\n';
    } else {
      out << t.value << '\n';
    }
  }
  return kExitOk;
}

int do_trim(bool upper, bool lower, const std::string& file, std::istream& in, std::ostream& out) {
  if (upper == lower) throw UsageError("trim needs exactly one of --upper or --lower");
  const Sequence s = read_input(file, in);
  print_terms(out, upper ? upper_trim(s) : lower_trim(s));
  return kExitOk;
}

std::string index_or_none(const std::optional<std::size_t>& idx) { return idx ? std::to_string(*idx) : "none"; }

int do_check(const std::string& file, std::istream& in, std::ostream& out) {
  const Sequence s = read_input(file, in);
  const FractalReport r = check_doubly_fractal_prefix(s);
  out << "length " << s.size() << '\n'
      << "segment " << to_string(classify_initial_segment(s)) << '\n'
      << "upper_ok " << (r.upper_ok ? "true" : "false") << '\n'
      << "lower_ok " << (r.lower_ok ? "true" : "false") << '\n'
      << "first_violation " << index_or_none(r.first_violation_index) << '\n';
  return r.ok() ? kExitOk : kExitDomain;
}

struct ConstructOpts {
  long long n = 0;
  long long blocks = 5;
  std::string branches;
  bool type2 = false;
  bool enumerate = false;
  bool trace = false;
  long long length = 0;
};

void trace_merges(const ConstructionState& state, std::ostream& err) {
  std::size_t block = 3;
  for (const auto& m : state.merges()) {
    err << "block " << block++ << ": t=(" << to_string(m.t) << ") t'=(" << to_string(m.t_prime) << ") P=("
        << to_string(m.merged) << ") d=" << m.offset;
    if (m.branch) err << " branch=" << branch_digit(*m.branch);
    err << '\n';
  }
}

int do_construct(const ConstructOpts& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (o.blocks < 1) throw UsageError("--blocks must be positive");
  if (o.length < 0) throw UsageError("--length must be positive");
  if (o.enumerate && !o.branches.empty()) throw UsageError("--enumerate and --branches are exclusive");
  if (o.length > 0 && !o.type2) throw UsageError("--length applies to --type2 output");
  // Each block adds fewer than 3n terms.
  check_cap(static_cast<std::size_t>(o.blocks) * static_cast<std::size_t>(3 * o.n), "construction size");
  if (o.length > 0) check_cap(static_cast<std::size_t>(o.length), "--length");

  BranchPolicy policy = Branch::OneFirst;
  if (o.enumerate) {
    policy = AllBranches{};
  } else if (!o.branches.empty()) {
    try {
      policy = ExplicitBranches{parse_branches(o.branches)};
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<Constructed> outcomes;
  Sequence type2_seq;
  try {
    if (o.type2 && o.length > 0 && !o.enumerate) {
      type2_seq = translate_type2(o.n, static_cast<std::size_t>(o.length), policy);
    } else {
      outcomes = construct_type1(o.n, static_cast<std::size_t>(o.blocks), policy);
    }
  } catch (const ConstructionError& e) {
    err << "construct: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  if (!outcomes.empty() || o.enumerate) {
    for (const auto& c : outcomes) {
      if (o.trace) trace_merges(c.state, err);
      const Sequence s = o.type2 ? rank_stream(c.state.seq()) : c.state.seq();
      if (o.enumerate) {
        const std::string bits = branch_string(c.branches);
        out << (bits.empty() ? "-" : bits) << ' ' << to_string(s) << '\n';
      } else {
        print_terms(out, s);
      }
    }
  } else {
    print_terms(out, type2_seq);
  }
  return kExitOk;
}

int do_invert(const std::string& file, bool expect_nonempty, bool witness, std::istream& in, std::ostream& out) {
  const Sequence s = read_input(file, in);
  if (s.empty()) throw UsageError("invert needs a nonempty sequence");
  const ThetaInterval iv = theta_interval_from_prefix(s);
  out << iv.to_string() << '\n';
  if (witness && !iv.is_empty()) out << "witness " << to_string(simplest_rational(iv)) << '\n';
  return (expect_nonempty && iv.is_empty()) ? kExitDomain : kExitOk;
}

int do_diverge(const std::string& t1, const std::string& t2, long long max, std::ostream& out) {
  const ExactNumber a = theta_arg(t1);
  const ExactNumber b = theta_arg(t2);
  if (max < 1) throw UsageError("--max must be positive");
  check_cap(static_cast<std::size_t>(max), "--max");
  if (a == b) throw UsageError("diverge needs two distinct numbers");
  const auto idx = first_divergence(a, b, static_cast<std::size_t>(max));
  out << (idx ? std::to_string(*idx) : "NONE") << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature sequences, trimming operators and doubly fractal constructions", "fractalseq"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "First N terms of the signature of theta");
  generate->add_option("--theta", gen.theta, "p/q, integer, or (a+b*sqrt(d))/c")->required();
  generate->add_option("--count", gen.count, "number of terms")->required();
  generate->add_flag("--ranks", gen.ranks, "also print occurrence ranks");
  auto* json_flag = generate->add_flag("--json", gen.json, "JSON lines {index,value,rank}");
  generate->add_flag("--bfile", gen.bfile, "b-file lines 'index value'")->excludes(json_flag);

  bool upper = false;
  bool lower = false;
  std::string trim_file;
  auto* trim = app.add_subcommand("trim", "Upper or lower trim of a sequence");
  trim->add_flag("--upper", upper, "drop first occurrences");
  trim->add_flag("--lower", lower, "subtract 1 and drop zeros");
  trim->add_option("file", trim_file, "input file (default stdin)");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Doubly fractal prefix report");
  check->add_option("file", check_file, "input file (default stdin)");

  ConstructOpts con;
  auto* construct = app.add_subcommand("construct", "Block-extension construction");
  construct->add_option("--n", con.n, "number of main terms")->required();
  construct->add_option("--blocks", con.blocks, "number of blocks")->capture_default_str();
  construct->add_option("--branches", con.branches, "fork choices, e.g. 0,1 (0 = one first, 1 = fresh first)");
  construct->add_flag("--type2", con.type2, "emit the type-2 (rank stream) translation");
  construct->add_option("--length", con.length, "type-2 output length (overrides --blocks)");
  construct->add_flag("--enumerate", con.enumerate, "every branch outcome");
  construct->add_flag("--trace", con.trace, "print t, t', P and d per step to stderr");

  std::string invert_file;
  bool expect_nonempty = false;
  bool witness = false;
  auto* invert = app.add_subcommand("invert", "Interval of theta consistent with a prefix");
  invert->add_option("file", invert_file, "input file (default stdin)");
  invert->add_flag("--expect-nonempty", expect_nonempty, "exit 1 when EMPTY");
  invert->add_flag("--witness", witness, "also print the simplest rational inside");

  std::string div_a;
  std::string div_b;
  long long div_max = 0;
  auto* diverge = app.add_subcommand("diverge", "First index where two signatures differ");
  diverge->add_option("theta1", div_a)->required();
  diverge->add_option("theta2", div_b)->required();
  diverge->add_option("--max", div_max, "maximum terms to scan")->required();

  std::vector<const char*> argv{"fractalseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "fractalseq: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return do_generate(gen, out);
    if (trim->parsed()) return do_trim(upper, lower, trim_file, in, out);
    if (check->parsed()) return do_check(check_file, in, out);
    if (construct->parsed()) return do_construct(con, out, err);
    if (invert->parsed()) return do_invert(invert_file, expect_nonempty, witness, in, out);
    if (diverge->parsed()) return do_diverge(div_a, div_b, div_max, out);
  } catch (const UsageError& e) {
    err << "fractalseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "fractalseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fractalseq: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace fractalseq::cli

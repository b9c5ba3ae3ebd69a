#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "tourney/canonical.hpp"
#include "tourney/codes.hpp"
#include "tourney/errors.hpp"
#include "tourney/json.hpp"
#include "tourney/parallel.hpp"
#include "tourney/verify.hpp"

namespace tourney::cli {

namespace {

struct Options {
  std::string format = "json";
  std::vector<std::string> inputs;
  int d = 0;
  int n = 0;
  bool check = false;
  std::string level = "quick";
  std::string catalog;
  Tolerances tol;
};

struct Input {
  std::string source;  // "arg", file path or "stdin"
  int line = 0;
  Tournament tournament;
};

double env_or(const char* name, double fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw InputError(std::string("cannot parse ") + name + "='" + v + "'");
    }
  }
  return fallback;
}

std::vector<Input> read_inputs(const std::vector<std::string>& inputs, std::istream& in,
                               std::string& digest_text) {
  static const std::regex line_form(R"(\s*\d+:[01]*\s*)");
  std::vector<Input> out;
  const auto consume = [&](std::istream& stream, const std::string& source) {
    std::string text;
    int number = 0;
    while (std::getline(stream, text)) {
      ++number;
      const auto first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos || text[first] == '#') continue;
      try {
        out.push_back({source, number, Tournament::parse(text)});
      } catch (const InputError& e) {
        throw ParseError(number, source + ": " + e.what());
      }
      digest_text += out.back().tournament.to_line() + "\n";
    }
  };
  if (inputs.empty()) {
    consume(in, "stdin");
    return out;
  }
  for (const auto& item : inputs) {
    if (item == "-") {
      consume(in, "stdin");
    } else if (std::regex_match(item, line_form)) {
      std::istringstream one(item);
      consume(one, "arg");
    } else {
      std::ifstream file(item);
      if (!file) throw InputError("cannot open input file '" + item + "'");
      consume(file, item);
    }
  }
  return out;
}

std::vector<Tournament> load_catalog(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open catalog file '" + path + "'");
  return read_catalog(file);
}

Json envelope(const std::string& command, const Options& opt, const std::string& digest_text) {
  Json report;
  report["command"] = command;
  report["version"] = kVersion;
  report["input_digest"] = "fnv1a64:" + fnv1a_hex(digest_text);
  report["tolerances"] = to_json(opt.tol);
  return report;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

// Evaluates fn on every input in parallel; results keep input order and the
// first failure in input order is rethrown.
template <typename R, typename F>
std::vector<R> map_inputs(const std::vector<Input>& inputs, F fn) {
  std::vector<std::optional<R>> slots(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  parallel_chunks(inputs.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        slots[i].emplace(fn(inputs[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  });
  std::vector<R> out;
  out.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

int cmd_analyze(const Options& opt, std::istream& in, std::ostream& out) {
  std::string digest;
  const auto inputs = read_inputs(opt.inputs, in, digest);
  const auto reports =
      map_inputs<RepReport>(inputs, [&](const Input& x) { return analyze(x.tournament, opt.tol); });
  if (opt.format == "tsv") {
    out << "input\tn\ttype\trep_dim\talpha_re\talpha_im\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << inputs[i].tournament.to_line() << '\t' << r.n << '\t'
          << static_cast<int>(r.type.type) << '\t' << r.rep_dim << '\t' << fmt(r.alpha.real())
          << '\t' << fmt(r.alpha.imag()) << '\n';
    }
    return kSuccess;
  }
  Json report = envelope("analyze", opt, digest);
  Json results = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    Json item;
    item["input"] = inputs[i].tournament.to_line();
    item.update(to_json(reports[i]));
    results.push_back(std::move(item));
  }
  report["results"] = std::move(results);
  out << report.dump(2) << '\n';
  return kSuccess;
}

int cmd_embed(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err,
              const EmbeddingHook& hook) {
  std::string digest;
  const auto inputs = read_inputs(opt.inputs, in, digest);
  struct Row {
    RepReport report;
    Embedding embedding;
    EmbeddingVerdict verdict;
  };
  auto rows = map_inputs<Row>(inputs, [&](const Input& x) {
    Row row{analyze(x.tournament, opt.tol), embed(x.tournament, opt.tol), {}};
    row.verdict = verify_embedding(row.embedding, x.tournament, opt.tol.embedding);
    return row;
  });
  int code = kSuccess;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (hook) hook(rows[i].embedding);
    if (opt.check) {
      rows[i].verdict = verify_embedding(rows[i].embedding, inputs[i].tournament, opt.tol.embedding);
      if (!rows[i].verdict.pass) {
        err << "embedding check failed for " << inputs[i].tournament.to_line()
            << ": max deviation " << rows[i].verdict.max_deviation << '\n';
        code = kConsistencyError;
      }
    }
  }
  if (opt.format == "tsv") {
    out << "input\tvertex\tcoord\tre\tim\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& e = rows[i].embedding;
      for (std::size_t v = 0; v < e.vectors.size(); ++v) {
        for (std::size_t k = 0; k < e.vectors[v].size(); ++k) {
          out << inputs[i].tournament.to_line() << '\t' << v << '\t' << k << '\t'
              << fmt(e.vectors[v][k].real()) << '\t' << fmt(e.vectors[v][k].imag()) << '\n';
        }
      }
    }
    return code;
  }
  Json report = envelope("embed", opt, digest);
  Json results = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json item;
    item["input"] = inputs[i].tournament.to_line();
    item.update(to_json(rows[i].report, rows[i].embedding));
    item["max_deviation"] = rows[i].verdict.max_deviation;
    item["verified"] = rows[i].verdict.pass;
    results.push_back(std::move(item));
  }
  report["results"] = std::move(results);
  out << report.dump(2) << '\n';
  return code;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto classes = enumerate_tournaments(opt.n);
  if (opt.format == "tsv") {
    for (const auto& t : classes) out << t.to_line() << '\n';
    return kSuccess;
  }
  Json report = envelope("enumerate", opt, "n=" + std::to_string(opt.n));
  report["n"] = opt.n;
  report["count"] = classes.size();
  Json lines = Json::array();
  for (const auto& t : classes) lines.push_back(t.to_line());
  report["results"] = std::move(lines);
  out << report.dump(2) << '\n';
  return kSuccess;
}

int cmd_switching_class(const Options& opt, std::istream& in, std::ostream& out) {
  std::string digest;
  const auto inputs = read_inputs(opt.inputs, in, digest);
  Json report = envelope("switching-class", opt, digest);
  Json results = Json::array();
  for (const auto& x : inputs) {
    const auto cls = switching_class(x.tournament);
    if (opt.format == "tsv") {
      for (const auto& key : cls) out << x.tournament.to_line() << '\t' << key.representative().to_line() << '\n';
      continue;
    }
    Json members = Json::array();
    for (const auto& key : cls) members.push_back(key.representative().to_line());
    results.push_back({{"input", x.tournament.to_line()},
                       {"classes", cls.size()},
                       {"members", std::move(members)}});
  }
  if (opt.format != "tsv") {
    report["results"] = std::move(results);
    out << report.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_count_tight(const Options& opt, std::ostream& out) {
  std::optional<std::vector<Tournament>> catalog;
  if (!opt.catalog.empty()) catalog = load_catalog(opt.catalog);
  const TightCount count = count_tight_codes(opt.d, catalog ? &*catalog : nullptr);
  if (opt.format == "tsv") {
    out << "d\tcount\tcatalog_trusted\n"
        << count.d << '\t' << count.count << '\t' << (count.catalog_trusted ? "true" : "false")
        << '\n';
    return kSuccess;
  }
  Json report = envelope("count-tight", opt, "d=" + std::to_string(opt.d) + ";catalog=" + opt.catalog);
  report["results"] = Json::array({to_json(count)});
  out << report.dump(2) << '\n';
  return kSuccess;
}

int cmd_verify_paper(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.level != "quick" && opt.level != "full") {
    throw InputError("--level must be quick or full, got '" + opt.level + "'");
  }
  const auto results =
      verify_paper(opt.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick, opt.tol);
  std::vector<std::string> failed;
  for (const auto& r : results) {
    if (!r.pass) failed.push_back(r.id);
  }
  if (opt.format == "tsv") {
    out << "check\tverdict\tseconds\tdetail\n";
    for (const auto& r : results) {
      out << r.id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << fmt(r.seconds) << '\t'
          << r.detail << '\n';
    }
  } else {
    Json report = envelope("verify-paper", opt, "level=" + opt.level);
    Json checks = Json::array();
    // timings are left out so the report stays byte-identical across runs
    for (const auto& r : results) {
      checks.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    }
    report["results"] = std::move(checks);
    report["failed"] = failed;
    out << report.dump(2) << '\n';
  }
  if (failed.empty()) return kSuccess;
  err << "failed checks:";
  for (const auto& id : failed) err << ' ' << id;
  err << '\n';
  return kVerificationFailed;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const EmbeddingHook& hook) {
  Options opt;
  CLI::App app{"Minimum complex spherical embedding dimensions of tournaments", "tourney-codes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  try {
    opt.tol.eig_cluster = env_or("TOURNEY_CODES_EIG_TOL", opt.tol.eig_cluster);
    opt.tol.beta_zero = env_or("TOURNEY_CODES_BETA_TOL", opt.tol.beta_zero);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--eig-tol", opt.tol.eig_cluster, "Relative eigenvalue clustering tolerance");
    sub->add_option("--beta-tol", opt.tol.beta_zero, "Main angle zero threshold");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, type, dimension and angle");
  analyze_cmd->add_option("inputs", opt.inputs, "Tournament lines or files (default stdin)");
  common(analyze_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "Explicit unit vectors realising the angle");
  embed_cmd->add_option("inputs", opt.inputs, "Tournament lines or files (default stdin)");
  embed_cmd->add_flag("--check", opt.check, "Re-verify the vectors; exit 3 on deviation");
  common(embed_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "One tournament per isomorphism class");
  enum_cmd->add_option("--n", opt.n, "Order (1-7)")->required();
  common(enum_cmd);

  auto* switch_cmd = app.add_subcommand("switching-class", "Isomorphism classes under switching");
  switch_cmd->add_option("inputs", opt.inputs, "Tournament lines or files (default stdin)");
  common(switch_cmd);

  auto* count_cmd = app.add_subcommand("count-tight", "Number of tight 2-codes in dimension d");
  count_cmd->add_option("--d", opt.d, "Dimension")->required();
  count_cmd->add_option("--catalog", opt.catalog, "Doubly regular tournament catalog file");
  common(count_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Reproduce published values and theorems");
  verify_cmd->add_option("--level", opt.level, "quick or full");
  common(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(opt, in, out);
    if (embed_cmd->parsed()) return cmd_embed(opt, in, out, err, hook);
    if (enum_cmd->parsed()) return cmd_enumerate(opt, out);
    if (switch_cmd->parsed()) return cmd_switching_class(opt, in, out);
    if (count_cmd->parsed()) return cmd_count_tight(opt, out);
    if (verify_cmd->parsed()) return cmd_verify_paper(opt, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kConsistencyError;
  }
  return kInputError;
}

}  // namespace tourney::cli

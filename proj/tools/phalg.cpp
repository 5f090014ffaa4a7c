// phalg: command line front end for the word algebras, the translations and
// the applicative engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "phalg/bound.hpp"
#include "phalg/compile.hpp"
#include "phalg/errors.hpp"
#include "phalg/eval.hpp"
#include "phalg/parser.hpp"
#include "phalg/props.hpp"
#include "phalg/term.hpp"
#include "phalg/translate.hpp"

using namespace phalg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

constexpr std::size_t kMaxLenCap = 10;

struct RunConfig {
  std::size_t budget = kDefaultMaxSteps;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::size_t maxLen = 4;
  bool json() const { return format == "json"; }
  EvalBudget evalBudget() const { return EvalBudget{budget}; }
};

// One line per result: plain text, or a JSON object with the fields
// command, input, value, steps, status (plus `trace` for eval --trace).
class Reporter {
 public:
  Reporter(const RunConfig& cfg, std::string command) : cfg_(cfg), command_(std::move(command)) {}

  void result(const std::string& input, const json& value, std::optional<std::uint64_t> steps,
              const std::string& status, const std::string& text, json extra = json::object()) {
    if (cfg_.json()) {
      json o{{"command", command_}, {"input", input}, {"value", value},
             {"steps", steps ? json(*steps) : json(nullptr)}, {"status", status}};
      o.update(extra);
      std::cout << o.dump() << '\n';
    } else if (!text.empty()) {
      std::cout << text << '\n';
    }
  }

  void note(const std::string& text) {
    if (!cfg_.json()) std::cout << text << '\n';
  }

 private:
  const RunConfig& cfg_;
  std::string command_;
};

DefTable loadChecked(const std::string& path) {
  DefTable t = loadFile(path);
  checkTable(t);
  return t;
}

std::string showArgs(const std::vector<Word>& args) {
  std::string s;
  for (const Word& w : args) s += " " + w.display();
  return s;
}

std::size_t arityOf(const Definition& d) {
  return d.isSorted() ? d.sorted().sig.total() : d.unsorted().arity;
}

std::string signatureOf(const Definition& d) {
  return d.isSorted() ? toString(d.sorted().sig) : std::to_string(d.unsorted().arity);
}

bool usesPrn(const SDef& def) {
  if (def->op == SOp::PRN) return true;
  for (const SDef& k : def->kids) {
    if (usesPrn(k)) return true;
  }
  return false;
}

bool isHelper(const std::string& name) { return name.rfind("__", 0) == 0; }

// Exhaustive tuples up to maxLen, then `random` tuples with lengths up to
// maxLen + 3.
std::vector<std::vector<Word>> samplesFor(std::size_t arity, std::size_t maxLen, std::size_t random,
                                          std::mt19937_64& rng, bool exhaustive = true) {
  std::vector<std::vector<Word>> out;
  if (exhaustive) out = tuplesUpTo(arity, maxLen);
  for (std::size_t i = 0; i < random && arity > 0; ++i) {
    std::vector<Word> t;
    for (std::size_t j = 0; j < arity; ++j) {
      std::size_t len = rng() % (maxLen + 4);
      std::string bits;
      for (std::size_t b = 0; b < len; ++b) bits.push_back(rng() % 2 ? '1' : '0');
      t.push_back(Word::fromBits(bits));
    }
    out.push_back(std::move(t));
  }
  return out;
}

void writeOut(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

// ------------------------------------------------------------- commands

int runCheck(const RunConfig& cfg, const std::string& file) {
  Reporter out(cfg, "check");
  DefTable t = loadChecked(file);
  bool prn = false;
  for (const Definition& d : t) {
    out.result(d.name, signatureOf(d), std::nullopt, "ok", d.name + " : " + signatureOf(d));
    prn = prn || (d.isSorted() && usesPrn(d.sorted().body));
  }
  if (prn) {
    out.note("note: PRN steps pass the safe arguments y unchanged, f(zi,x;y) = h_i(z,x;y,f(z,x;y)).");
  }
  return kOk;
}

int runEval(const RunConfig& cfg, const std::string& file, const std::string& name,
            const std::vector<std::string>& rawArgs, bool trace) {
  Reporter out(cfg, "eval");
  DefTable t = loadChecked(file);
  std::vector<Word> args;
  for (const std::string& a : rawArgs) args.push_back(Word::parse(a));
  EvalOutcome r = evalNamed(t, name, args, cfg.evalBudget(), trace);
  json extra = json::object();
  std::string text = r.value.display() + "\nsteps: " + std::to_string(r.steps);
  if (trace && r.trace) {
    json points = json::array();
    for (const TracePoint& p : *r.trace) {
      points.push_back({{"index", p.index}, {"y", p.y.display()}, {"value", p.value.display()}, {"steps", p.steps}});
      text += "\n" + std::to_string(p.index) + " " + p.y.display() + " " + p.value.display() + " " +
              std::to_string(p.steps);
    }
    extra["trace"] = points;
  }
  out.result(name + showArgs(args), r.value.display(), r.steps, "ok", text, extra);
  return kOk;
}

int runTranslate(const RunConfig& cfg, const std::string& file, const std::string& to, std::size_t verify,
                 const std::string& outPath) {
  Reporter out(cfg, "translate");
  DefTable src = loadChecked(file);
  DefTable dst = to == "sorted" ? unsortedToSorted(src) : sortedToUnsorted(src);
  checkTable(dst);
  std::string text = printTable(dst);
  if (outPath.empty()) {
    if (cfg.json()) {
      out.result(file, text, std::nullopt, "ok", "");
    } else {
      std::cout << text;
    }
  } else {
    writeOut(outPath, text);
    out.result(file, outPath, std::nullopt, "ok", "wrote " + outPath);
  }
  if (verify == 0) return kOk;
  std::mt19937_64 rng(cfg.seed);
  bool ok = true;
  for (const Definition& d : src) {
    if (isHelper(d.name)) continue;
    std::size_t agree = 0;
    std::string first;
    auto cases = samplesFor(arityOf(d), cfg.maxLen, verify, rng, false);
    for (const auto& a : cases) {
      Word x = evalNamed(src, d.name, a, cfg.evalBudget()).value;
      Word y = evalNamed(dst, d.name, a, cfg.evalBudget()).value;
      if (x == y) {
        ++agree;
      } else if (first.empty()) {
        first = showArgs(a) + ": " + x.display() + " vs " + y.display();
      }
    }
    bool good = agree == cases.size();
    ok = ok && good;
    std::string summary = std::to_string(agree) + "/" + std::to_string(cases.size()) + " agree";
    out.result(d.name, summary, std::nullopt, good ? "ok" : "fail",
               "verify " + d.name + ": " + summary + (good ? "" : ", first mismatch at" + first));
  }
  return ok ? kOk : kFailed;
}

int runBound(const RunConfig& cfg, const std::string& file, const std::string& name, std::optional<std::size_t> check) {
  Reporter out(cfg, "bound");
  DefTable t = loadChecked(file);
  const Definition& d = t.resolve(name);
  BoundPoly q = d.isSorted() ? synthBound(d.sorted().body, t) : lengthBound(d.unsorted().body, t);
  std::string form = d.isSorted() ? "|f(x;y)| <= max(q(|x|), |y|)" : "|f(x)| <= q(|x|)";
  if (!check) {
    out.result(name, q.toString(), std::nullopt, "ok", "q = " + q.toString() + "   (" + form + ")");
    return kOk;
  }
  std::mt19937_64 rng(cfg.seed);
  auto cases = samplesFor(arityOf(d), cfg.maxLen, *check, rng);
  std::size_t violations = 0;
  std::string first;
  if (d.isSorted()) {
    const SortedEntry& e = d.sorted();
    std::vector<ArgSample> samples;
    for (const auto& a : cases) {
      samples.push_back({{a.begin(), a.begin() + e.sig.normal}, {a.begin() + e.sig.normal, a.end()}});
    }
    BoundReport r = checkBound(e.body, t, q, samples, cfg.evalBudget());
    violations = r.violations.size();
    if (violations) {
      const BoundViolation& v = r.violations[0];
      first = showArgs(v.normals) + " ;" + showArgs(v.safes) + ": length " + std::to_string(v.length) + " > " +
              std::to_string(v.bound);
    }
  } else {
    for (const auto& a : cases) {
      std::vector<std::size_t> lens;
      for (const Word& w : a) lens.push_back(w.size());
      std::size_t len = evalNamed(t, name, a, cfg.evalBudget()).value.size();
      if (len > q.eval(lens) && violations++ == 0) {
        first = showArgs(a) + ": length " + std::to_string(len) + " > " + std::to_string(q.eval(lens));
      }
    }
  }
  std::string summary = std::to_string(cases.size()) + " samples, " + std::to_string(violations) + " violations";
  out.result(name, q.toString(), std::nullopt, violations ? "fail" : "ok",
             "q = " + q.toString() + "   (" + form + ")\n" + summary + (first.empty() ? "" : ", first at" + first),
             json{{"checked", cases.size()}, {"violations", violations}});
  return violations ? kFailed : kOk;
}

int runCompile(const RunConfig& cfg, const std::string& file, const std::string& name, const std::string& outPath) {
  Reporter out(cfg, "compile");
  DefTable t = loadChecked(file);
  CompiledFn fn = compile(t, name);
  std::string text = printTerm(fn.term);
  if (outPath.empty()) {
    out.result(name, text, std::nullopt, "ok", text);
  } else {
    writeOut(outPath, text + "\n");
    out.result(name, outPath, std::nullopt, "ok",
               "wrote " + outPath + " (" + std::to_string(termSize(fn.term)) + " nodes, arity " +
                   std::to_string(fn.arity) + ")");
  }
  return kOk;
}

int runReduce(const RunConfig& cfg, const std::string& text) {
  Reporter out(cfg, "reduce");
  Reduction r = reduce(parseTerm(text), cfg.evalBudget());
  std::string nf = printTerm(r.term);
  out.result(text, nf, r.steps, "ok", nf + "\nsteps: " + std::to_string(r.steps));
  return kOk;
}

int runVerify(const RunConfig& cfg, const std::string& file, const std::string& name,
              std::optional<std::size_t> exhaustive, std::optional<std::size_t> random) {
  Reporter out(cfg, "verify");
  DefTable t = loadChecked(file);
  CompiledFn fn = compile(t, name);
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<Word>> samples;
  if (random) {
    samples = samplesFor(fn.arity, cfg.maxLen, *random, rng, false);
  } else {
    samples = tuplesUpTo(fn.arity, exhaustive.value_or(3));
  }
  VerifyReport r = verifyCompiled(fn, t, samples, cfg.evalBudget());
  for (const CompiledMismatch& m : r.mismatches) {
    out.result(name + showArgs(m.args), m.got, std::nullopt, "fail",
               "mismatch at" + showArgs(m.args) + ": expected " + m.expected.display() + ", got " + m.got,
               json{{"expected", m.expected.display()}});
  }
  std::string summary = std::to_string(r.checked) + " checked, " + std::to_string(r.mismatches.size()) +
                        " mismatches, max steps " + std::to_string(r.maxSteps);
  out.result(name, summary, r.totalSteps, r.ok() ? "ok" : "fail", summary);
  return r.ok() ? kOk : kFailed;
}

int runProps(const RunConfig& cfg, const std::vector<std::string>& suites, std::size_t samples) {
  Reporter out(cfg, "props");
  PropConfig pc;
  pc.maxLen = cfg.maxLen;
  pc.samples = samples;
  pc.seed = cfg.seed;
  pc.budget = cfg.evalBudget();
  bool ok = true;
  for (const std::string& s : suites.empty() ? propSuites() : suites) {
    for (const PropResult& r : runSuite(s, pc)) {
      ok = ok && r.ok();
      std::string text = std::string(r.ok() ? "ok    " : "FAIL  ") + r.suite + "/" + r.name + "  " +
                         std::to_string(r.cases) + " cases";
      if (!r.ok()) text += ", " + std::to_string(r.failures) + " failed, first: " + r.firstFailure;
      json value{{"cases", r.cases}, {"failures", r.failures}};
      if (!r.ok()) value["first"] = r.firstFailure;
      out.result(r.suite + "/" + r.name, value, std::nullopt, r.ok() ? "ok" : "fail", text);
    }
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word algebras, their translations and the applicative engine"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "Step budget for evaluation and reduction")
      ->envname("PHALG_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random samples");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-len", cfg.maxLen, "Length cap for exhaustive inputs")->check(CLI::Range(std::size_t{0}, kMaxLenCap));

  std::string file;
  std::string name;
  std::string outPath;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Parse and sort-check a file, print signatures");
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return runCheck(cfg, file); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a definition on words (0/1 strings, eps)");
  std::vector<std::string> evalArgs;
  bool trace = false;
  eval->add_option("file", file)->required();
  eval->add_option("name", name)->required();
  eval->add_option("args", evalArgs);
  eval->add_flag("--trace", trace, "Print the outermost recursion chain");
  eval->callback([&] { action = [&] { return runEval(cfg, file, name, evalArgs, trace); }; });

  auto* translate = app.add_subcommand("translate", "Translate a file into the other algebra");
  std::string to;
  std::size_t verify = 0;
  translate->add_option("file", file)->required();
  translate->add_option("--to", to)->required()->check(CLI::IsMember({"sorted", "unsorted"}));
  translate->add_option("--verify", verify, "Cross-evaluate N random inputs per definition");
  translate->add_option("-o,--output", outPath);
  translate->callback([&] { action = [&] { return runTranslate(cfg, file, to, verify, outPath); }; });

  auto* bound = app.add_subcommand("bound", "Print the length bound of a definition");
  std::optional<std::size_t> boundCheck;
  bound->add_option("file", file)->required();
  bound->add_option("name", name)->required();
  bound->add_option("--check", boundCheck, "Validate on exhaustive inputs plus N random ones");
  bound->callback([&] { action = [&] { return runBound(cfg, file, name, boundCheck); }; });

  auto* comp = app.add_subcommand("compile", "Compile an unsorted definition to a closed term");
  comp->add_option("file", file)->required();
  comp->add_option("name", name)->required();
  comp->add_option("-o,--output", outPath);
  comp->callback([&] { action = [&] { return runCompile(cfg, file, name, outPath); }; });

  auto* red = app.add_subcommand("reduce", "Reduce a term to normal form");
  std::string termText;
  red->add_option("term", termText)->required();
  red->callback([&] { action = [&] { return runReduce(cfg, termText); }; });

  auto* ver = app.add_subcommand("verify", "Check a compiled term against the interpreter");
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random;
  ver->add_option("file", file)->required();
  ver->add_option("name", name)->required();
  auto* ex = ver->add_option("--exhaustive", exhaustive, "All inputs up to length L (default 3)")
                 ->check(CLI::Range(std::size_t{0}, kMaxLenCap));
  ver->add_option("--random", random, "N random inputs")->excludes(ex);
  ver->callback([&] { action = [&] { return runVerify(cfg, file, name, exhaustive, random); }; });

  auto* props = app.add_subcommand("props", "Run the invariant suites");
  std::vector<std::string> suites;
  std::size_t samples = 50;
  props->add_option("--suite", suites)->check(CLI::IsMember(propSuites()));
  props->add_option("--samples", samples, "Random cases per sampled property");
  props->callback([&] { action = [&] { return runProps(cfg, suites, samples); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto fail = [&](const std::string& status, const std::string& msg, int code) {
    if (cfg.json()) {
      std::cout << json{{"command", app.get_subcommands().front()->get_name()}, {"input", nullptr},
                        {"value", msg}, {"steps", nullptr}, {"status", status}}
                       .dump()
                << '\n';
    } else {
      std::cerr << "error: " << msg << '\n';
    }
    return code;
  };
  try {
    return action();
  } catch (const BudgetExhausted& e) {
    return fail("budget", e.what(), kBudget);
  } catch (const Error& e) {
    return fail("error", e.what(), kUsage);
  }
}

// wpocalc: ordinal invariants (o, h, w, sot) of well-partial-order expressions,
// plus the exhaustive verification suites.
//
// Exit codes: 0 known result / all checks pass, 1 usage or input error,
//             2 unknown result, 3 verification failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpo/algebra.hpp"
#include "wpo/errors.hpp"
#include "wpo/ordinal_text.hpp"
#include "wpo/term_parser.hpp"
#include "wpo/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitVerifyFailed = 3;

ordered_json valueJson(const wpo::InvariantValue& v) {
  ordered_json out;
  out["status"] = v.known() ? "known" : "unknown";
  if (v.known()) out["value"] = wpo::renderOrdinal(*v.value);
  if (!v.known()) out["reason"] = v.reason;
  if (v.lowerBound || v.upperBound) {
    ordered_json bounds;
    if (v.lowerBound) bounds["lower"] = wpo::renderOrdinal(*v.lowerBound);
    if (v.upperBound) bounds["upper"] = wpo::renderOrdinal(*v.upperBound);
    out["bounds"] = bounds;
  }
  return out;
}

const wpo::InvariantValue& selectInvariant(const wpo::InvariantTuple& tuple,
                                           wpo::QueryFunction f) {
  switch (f) {
    case wpo::QueryFunction::MaxOrderType: return tuple.o;
    case wpo::QueryFunction::Height: return tuple.h;
    case wpo::QueryFunction::Width: return tuple.w;
    default: return tuple.sot;
  }
}

int runEval(const std::string& queryText, bool withTrace, bool asJson) {
  const wpo::Query query = wpo::parseQuery(queryText);
  const auto [tuple, trace] = wpo::invariants(query.term);

  bool allKnown = true;
  if (query.function == wpo::QueryFunction::All) {
    for (const wpo::InvariantValue* v : {&tuple.o, &tuple.h, &tuple.w, &tuple.sot})
      allKnown = allKnown && v->known();
  } else {
    allKnown = selectInvariant(tuple, query.function).known();
  }

  if (asJson) {
    ordered_json doc;
    doc["query"] = queryText;
    doc["function"] = query.functionName;
    doc["status"] = allKnown ? "known" : "unknown";
    if (query.function == wpo::QueryFunction::All) {
      ordered_json values;
      values["o"] = valueJson(tuple.o);
      values["h"] = valueJson(tuple.h);
      values["w"] = valueJson(tuple.w);
      values["sot"] = valueJson(tuple.sot);
      doc["tuple"] = values;
    } else {
      const wpo::InvariantValue& v = selectInvariant(tuple, query.function);
      if (v.known()) doc["value"] = wpo::renderOrdinal(*v.value);
      if (!v.known()) doc["reason"] = v.reason;
      if (v.lowerBound || v.upperBound) {
        ordered_json bounds;
        if (v.lowerBound) bounds["lower"] = wpo::renderOrdinal(*v.lowerBound);
        if (v.upperBound) bounds["upper"] = wpo::renderOrdinal(*v.upperBound);
        doc["bounds"] = bounds;
      }
    }
    if (withTrace) {
      ordered_json lines = ordered_json::array();
      for (const wpo::TraceEntry& e : trace) {
        ordered_json line;
        line["node"] = e.node;
        line["rule"] = e.rule;
        line["o"] = wpo::compactString(e.tuple.o);
        line["h"] = wpo::compactString(e.tuple.h);
        line["w"] = wpo::compactString(e.tuple.w);
        line["sot"] = wpo::compactString(e.tuple.sot);
        lines.push_back(line);
      }
      doc["trace"] = lines;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    if (query.function == wpo::QueryFunction::All) {
      std::cout << "o = " << wpo::toString(tuple.o) << "\n";
      std::cout << "h = " << wpo::toString(tuple.h) << "\n";
      std::cout << "w = " << wpo::toString(tuple.w) << "\n";
      std::cout << "sot = " << wpo::toString(tuple.sot) << "\n";
    } else {
      std::cout << wpo::toString(selectInvariant(tuple, query.function)) << "\n";
    }
    if (withTrace) {
      std::cout << "trace:\n";
      for (const wpo::TraceEntry& e : trace)
        std::cout << std::string(static_cast<std::size_t>(2 * (e.depth + 1)), ' ') << e.node
                  << " [" << e.rule << "] " << wpo::tupleString(e.tuple) << "\n";
    }
  }
  return allKnown ? kExitOk : kExitUnknown;
}

int runVerify(const wpo::VerifyConfig& config, bool asJson) {
  const wpo::VerifyReport report = wpo::runVerifySuite(config);
  if (asJson) {
    ordered_json doc;
    doc["suite"] = report.suite;
    doc["seed"] = report.config.seed;
    doc["max_size"] = report.config.maxSize;
    doc["samples"] = report.config.samples;
    doc["size_bound"] = report.config.sizeBound;
    ordered_json props = ordered_json::array();
    for (const wpo::PropertyOutcome& p : report.properties) {
      ordered_json entry;
      entry["name"] = p.name;
      entry["instances"] = p.instances;
      entry["failures"] = p.failures;
      if (!p.counterexample.empty()) entry["counterexample"] = p.counterexample;
      if (!p.notes.empty()) entry["notes"] = p.notes;
      props.push_back(entry);
    }
    doc["properties"] = props;
    doc["pass"] = report.pass();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "suite: " << report.suite << " (seed=" << report.config.seed
              << ", max-size=" << report.config.maxSize << ", samples=" << report.config.samples
              << ", size-bound=" << report.config.sizeBound << ")\n";
    for (const wpo::PropertyOutcome& p : report.properties) {
      std::cout << "  " << p.name << ": " << p.instances << " instances, " << p.failures
                << " failures\n";
      if (!p.counterexample.empty())
        std::cout << "    counterexample: " << p.counterexample << "\n";
      for (const std::string& note : p.notes) std::cout << "    note: " << note << "\n";
    }
    std::cout << "result: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  }
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal invariant calculator for well-partial-order expressions"};
  app.require_subcommand(1);

  std::string queryText;
  bool withTrace = false;
  bool evalJson = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an invariant query, e.g. \"w(Md(Gamma(3)))\"");
  eval->add_option("query", queryText, "query: ('o'|'h'|'w'|'sot'|'all') '(' expr ')'")
      ->required();
  eval->add_flag("--trace", withTrace, "print the per-node rule applications");
  eval->add_flag("--json", evalJson, "structured output");

  std::string suiteName = "all";
  wpo::VerifyConfig config;
  bool verifyJson = false;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suiteName,
                     "residuals | sot | multiset-iso | ordinal-arith | relations | all")
      ->required();
  verify->add_option("--max-size", config.maxSize, "largest poset size (default 4)");
  verify->add_option("--samples", config.samples, "random instance budget (default 200)");
  verify->add_option("--seed", config.seed, "random seed (default 1)");
  verify->add_option("--size-bound", config.sizeBound, "multiset truncation bound (default 3)");
  verify->add_flag("--json", verifyJson, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (eval->parsed()) return runEval(queryText, withTrace, evalJson);
    config.suite = wpo::parseSuiteName(suiteName);
    return runVerify(config, verifyJson);
  } catch (const wpo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const wpo::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const wpo::PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
}

// raagkit — computing in right-angled Artin groups and their extension graphs.
// Command-line front end: parse graphs and words, run the library, and emit
// deterministic JSON, DOT, or plain tables.
//
// Exit codes: 0 success; 1 computation failure (caps, guards, internal
// checks); 2 usage error (bad flags, malformed words or graph specs);
// 3 reproduction mismatch.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/ext_graph.hpp"
#include "raag/graph.hpp"
#include "raag/lemma_suite.hpp"
#include "raag/reproduce.hpp"
#include "raag/serialize.hpp"
#include "raag/syllables.hpp"
#include "raag/translation.hpp"
#include "raag/word.hpp"

namespace {

using raag::json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Extension-graph vertex syntax: "u_1" (a vertex of the defining graph) or
// "u_1 ^ (t v u)" (its image under conjugation by the parenthesized word).
raag::ExtVertex parse_target(const raag::SimplicialGraph& g,
                             const std::string& text) {
  size_t caret = text.find('^');
  std::string name = trim(caret == std::string::npos ? text
                                                     : text.substr(0, caret));
  if (name.empty())
    throw std::invalid_argument("target: missing vertex name in '" + text +
                                "'");
  int v = g.index(name);
  if (caret == std::string::npos)
    return raag::ExtVertex(g, v, raag::Element::identity(g));
  std::string rest = trim(text.substr(caret + 1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw std::invalid_argument(
        "target: conjugator must be parenthesized, e.g. \"u_1 ^ (t v u)\"");
  raag::Element w = raag::Element::parse(g, rest.substr(1, rest.size() - 2));
  return raag::ExtVertex(g, v, w);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
  std::string graph_spec;
  std::string format = "json";
  int lambda_cap = raag::kDefaultDecompositionCap;
  long long guard = static_cast<long long>(raag::kDefaultSubgraphGuard);

  raag::SimplicialGraph graph() const { return raag::resolve_graph(graph_spec); }
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--graph", c.graph_spec,
                  "graph family (path:N, cycle:N, star:N, gamma:N) or JSON "
                  "file path")
      ->required();
  if (with_format)
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "table", "dot"}))
        ->capture_default_str();
  cmd->add_option("--lambda-cap", c.lambda_cap,
                  "cap on enumerated syllable decompositions")
      ->envname("RAAG_LAMBDA_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--guard", c.guard,
                  "cap on constructed subgraph vertices")
      ->envname("RAAG_SUBGRAPH_GUARD")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "raagkit: exact computation in right-angled Artin groups and their "
      "extension graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs,
                 "worker threads (reserved; computations currently run "
                 "single-threaded and deterministically)")
      ->check(CLI::PositiveNumber);

  std::function<int()> run;

  // ---- classify -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "classify", "elliptic/loxodromic classification with witnesses");
    auto c = std::make_shared<Common>();
    auto word = std::make_shared<std::string>();
    add_common(cmd, *c);
    cmd->add_option("--word", *word, "element, e.g. \"a b^-2 c\"")->required();
    cmd->callback([&run, c, word] {
      run = [c, word]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::Classification cls =
            raag::classify(raag::Element::parse(g, *word));
        if (c->format == "table")
          std::cout << (cls.loxodromic ? "loxodromic" : "elliptic") << "\n";
        else
          emit(raag::classification_to_json(cls));
        return 0;
      };
    });
  }

  // ---- nf -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "nf", "canonical normal form of an element");
    auto c = std::make_shared<Common>();
    auto word = std::make_shared<std::string>();
    add_common(cmd, *c);
    cmd->add_option("--word", *word, "element")->required();
    cmd->callback([&run, c, word] {
      run = [c, word]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::Element x = raag::Element::parse(g, *word);
        if (c->format == "table") {
          std::cout << x.str() << "\n";
          return 0;
        }
        json j;
        j["input"] = *word;
        j["normal_form"] = x.str();
        j["syllables"] = raag::element_to_json(x);
        j["syllable_count"] = x.syllable_count();
        j["word_length"] = x.word_length();
        json sup = json::array();
        for (int v : x.support()) sup.push_back(g.name(v));
        j["support"] = std::move(sup);
        emit(j);
        return 0;
      };
    });
  }

  // ---- syllables ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "syllables",
        "syllable decompositions, cyclic reduction, and star length");
    auto c = std::make_shared<Common>();
    auto word = std::make_shared<std::string>();
    auto list_cap = std::make_shared<int>(20);
    add_common(cmd, *c);
    cmd->add_option("--word", *word, "element")->required();
    cmd->add_option("--list-cap", *list_cap,
                    "max decompositions to list explicitly")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([&run, c, word, list_cap] {
      run = [c, word, list_cap]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::Element x = raag::Element::parse(g, *word);
        raag::DecompositionSet ds =
            raag::enumerate_syllable_decompositions(x, c->lambda_cap);
        raag::CyclicReduction cr = raag::cyclic_syllable_reduce(x);
        json j;
        j["normal_form"] = x.str();
        j["syllable_count"] = x.syllable_count();
        j["decomposition_count"] = ds.seqs.size();
        j["decomposition_overflow"] = ds.overflow;
        json list = json::array();
        for (size_t i = 0; i < ds.seqs.size() &&
                           i < static_cast<size_t>(*list_cap); ++i)
          list.push_back(ds.seqs[i].str());
        j["decompositions"] = std::move(list);
        json red;
        red["reduced"] = cr.reduced.str();
        red["conjugator"] = cr.conjugator.str();
        red["syllable_count"] = cr.reduced.syllable_count();
        j["cyclic_reduction"] = std::move(red);
        j["star_length"] = raag::star_length(x);
        if (c->format == "table")
          std::cout << x.str() << "  [" << ds.seqs.size()
                    << " decompositions, star length "
                    << raag::star_length(x) << "]\n";
        else
          emit(j);
        return 0;
      };
    });
  }

  // ---- dist ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "dist", "exact distance between two extension-graph vertices");
    auto c = std::make_shared<Common>();
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("auto");
    add_common(cmd, *c);
    cmd->add_option("--from", *from, "vertex, e.g. u_1")->required();
    cmd->add_option("--to", *to, "vertex, e.g. \"u_1 ^ (t v u)\"")->required();
    cmd->add_option("--mode", *mode, "search subgraph")
        ->check(CLI::IsMember({"auto", "chain", "lambda"}))
        ->capture_default_str();
    cmd->callback([&run, c, from, to, mode] {
      run = [c, from, to, mode]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::ExtVertex a = parse_target(g, *from);
        raag::ExtVertex b = parse_target(g, *to);
        raag::DistanceMode m = raag::DistanceMode::Auto;
        if (*mode == "chain") m = raag::DistanceMode::Chain;
        if (*mode == "lambda") m = raag::DistanceMode::Lambda;
        int d = raag::ext_distance(a, b, m, c->lambda_cap,
                                   static_cast<size_t>(c->guard));
        if (c->format == "table") {
          std::cout << d << "\n";
          return 0;
        }
        json j;
        j["from"] = a.str();
        j["to"] = b.str();
        j["distance"] = d;
        j["exact"] = true;
        emit(j);
        return 0;
      };
    });
  }

  // ---- tau ----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "tau", "exact asymptotic translation length with certificate");
    auto c = std::make_shared<Common>();
    auto word = std::make_shared<std::string>();
    auto powers = std::make_shared<int>(3);
    add_common(cmd, *c);
    cmd->add_option("--word", *word, "element")->required();
    cmd->add_option("--powers", *powers,
                    "powers tried by the bound-only fallback")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([&run, c, word, powers] {
      run = [c, word, powers]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::TauOptions opts;
        opts.lambda_cap = c->lambda_cap;
        opts.bounds_powers = *powers;
        opts.guard = static_cast<size_t>(c->guard);
        raag::TauResult t = raag::tau(raag::Element::parse(g, *word), opts);
        if (c->format == "table") {
          std::cout << "tau = " << t.value.str() << "  ["
                    << raag::tau_method_name(t.method)
                    << (t.exact ? ", exact" : ", upper bound") << "]\n";
          return 0;
        }
        emit(raag::tau_to_json(t));
        return 0;
      };
    });
  }

  // ---- spectrum -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "spectrum",
        "translation lengths over all elements within a syllable budget");
    auto c = std::make_shared<Common>();
    auto budget = std::make_shared<raag::SpectrumBudget>();
    auto exps = std::make_shared<std::string>("1,-1");
    add_common(cmd, *c);
    cmd->add_option("--max-syllables", budget->max_syllables,
                    "syllable budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--exponents", *exps, "comma-separated exponent set")
        ->capture_default_str();
    cmd->add_flag("--injective", budget->injective_support,
                  "use each vertex at most once");
    cmd->add_option("--max-sequences", budget->max_sequences,
                    "enumeration guard")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([&run, c, budget, exps] {
      run = [c, budget, exps]() -> int {
        raag::SimplicialGraph g = c->graph();
        budget->exponents.clear();
        std::stringstream ss(*exps);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          tok = trim(tok);
          if (!tok.empty()) budget->exponents.push_back(std::stoll(tok));
        }
        if (budget->exponents.empty())
          throw std::invalid_argument("spectrum: empty exponent set");
        raag::TauOptions opts;
        opts.lambda_cap = c->lambda_cap;
        opts.guard = static_cast<size_t>(c->guard);
        raag::SpectrumReport r = raag::spectrum_scan(g, *budget, opts);
        if (c->format == "table") {
          for (const raag::SpectrumEntry& e : r.entries)
            std::cout << e.tau.value.str() << "  " << e.representative.str()
                      << "\n";
          return 0;
        }
        emit(raag::spectrum_to_json(r));
        return 0;
      };
    });
  }

  // ---- ball ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "ball", "union of copies around a vertex (distances above are "
                "upper bounds)");
    auto c = std::make_shared<Common>();
    auto center = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(2);
    add_common(cmd, *c);
    cmd->add_option("--center", *center, "vertex, e.g. \"a ^ (b c)\"")
        ->required();
    cmd->add_option("--radius", *radius, "word-length radius")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->callback([&run, c, center, radius] {
      run = [c, center, radius]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::ExtSubgraph s = raag::build_ball(
            g, parse_target(g, *center), *radius,
            static_cast<size_t>(c->guard));
        if (c->format == "dot")
          std::cout << raag::ext_subgraph_to_dot(s);
        else
          emit(raag::ext_subgraph_to_json(s));
        return 0;
      };
    });
  }

  // ---- axial --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "axial",
        "window of copies along the axis of a loxodromic element");
    auto c = std::make_shared<Common>();
    auto word = std::make_shared<std::string>();
    auto window = std::make_shared<int>(1);
    add_common(cmd, *c);
    cmd->add_option("--word", *word, "cyclically reduced loxodromic element")
        ->required();
    cmd->add_option("--window", *window, "copies of the period on each side")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->callback([&run, c, word, window] {
      run = [c, word, window]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::Element x = raag::Element::parse(g, *word);
        raag::SyllableSeq s{&g, x.syllables()};
        raag::ExtSubgraph sub = raag::build_axial(
            g, s, *window, static_cast<size_t>(c->guard));
        if (c->format == "dot")
          std::cout << raag::ext_subgraph_to_dot(sub);
        else
          emit(raag::ext_subgraph_to_json(sub));
        return 0;
      };
    });
  }

  // ---- export-dot ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("export-dot",
                                   "defining graph in DOT format");
    auto c = std::make_shared<Common>();
    auto out_path = std::make_shared<std::string>();
    add_common(cmd, *c, /*with_format=*/false);
    cmd->add_option("--out", *out_path, "output file (default: stdout)");
    cmd->callback([&run, c, out_path] {
      run = [c, out_path]() -> int {
        std::string dot = raag::graph_to_dot(c->graph());
        if (out_path->empty()) {
          std::cout << dot;
        } else {
          std::ofstream f(*out_path);
          if (!f)
            throw std::runtime_error("cannot write file: " + *out_path);
          f << dot;
        }
        return 0;
      };
    });
  }

  // ---- lemma-suite --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "lemma-suite",
        "structural invariant checks plus oracle agreement on one graph");
    auto c = std::make_shared<Common>();
    auto words = std::make_shared<std::vector<std::string>>();
    auto skip_agreement = std::make_shared<bool>(false);
    add_common(cmd, *c);
    cmd->add_option("--words", *words, "extra test words");
    cmd->add_flag("--skip-agreement", *skip_agreement,
                  "run only the structural checks");
    cmd->callback([&run, c, words, skip_agreement] {
      run = [c, words, skip_agreement]() -> int {
        raag::SimplicialGraph g = c->graph();
        raag::LemmaSuiteParams params;
        params.words = *words;
        params.guard = static_cast<size_t>(c->guard);
        std::vector<raag::OracleReport> reports =
            raag::run_lemma_suite(g, params);
        if (!*skip_agreement) {
          std::vector<raag::OracleReport> more =
              raag::run_oracle_agreement(g);
          reports.insert(reports.end(), more.begin(), more.end());
        }
        int failures = 0;
        for (const raag::OracleReport& r : reports)
          if (!r.pass) ++failures;
        if (c->format == "table") {
          for (const raag::OracleReport& r : reports)
            std::cout << (r.pass ? "pass  " : "FAIL  ") << r.check << "  ("
                      << r.instance << ")\n";
          std::cout << reports.size() << " checks, " << failures
                    << " failures\n";
        } else {
          emit(raag::reports_to_json(reports));
        }
        return failures == 0 ? 0 : 1;
      };
    });
  }

  // ---- reproduce ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "reproduce",
        "recompute the headline exact values and compare");
    auto format = std::make_shared<std::string>("table");
    cmd->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->callback([&run, format] {
      run = [format]() -> int {
        std::vector<raag::ReproRow> rows = raag::run_reproduction();
        if (*format == "json") {
          json arr = json::array();
          for (const raag::ReproRow& r : rows) {
            json one;
            one["instance"] = r.instance;
            one["expected"] = r.expected;
            one["computed"] = r.computed;
            one["match"] = r.match;
            arr.push_back(std::move(one));
          }
          json j;
          j["rows"] = std::move(arr);
          j["clean"] = raag::reproduction_clean(rows);
          emit(j);
        } else {
          size_t width = 0;
          for (const raag::ReproRow& r : rows)
            width = std::max(width, r.instance.size());
          for (const raag::ReproRow& r : rows)
            std::cout << (r.match ? "ok    " : "MISMATCH  ") << r.instance
                      << std::string(width - r.instance.size() + 2, ' ')
                      << "expected " << r.expected << ", computed "
                      << r.computed << "\n";
        }
        return raag::reproduction_clean(rows) ? 0 : 3;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run ? run() : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

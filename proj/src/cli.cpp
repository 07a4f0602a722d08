#include "biheyt/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "biheyt/biheyting.hpp"
#include "biheyt/daseinisation.hpp"
#include "biheyt/dot.hpp"
#include "biheyt/io.hpp"
#include "biheyt/oracle.hpp"

namespace biheyt::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string builtin;
  std::string output;
  std::size_t max_subobjects = Limits{}.max_subobjects;
  std::uint64_t search_budget = Limits{}.search_budget;
  std::string format = "json";
  std::vector<std::string> subobjects;
  std::string element;
  std::string context;
  bool heyting = false;
  bool twice = false;
  bool oracle = false;
  bool list = false;
  bool count_only = false;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {
    limits_.max_subobjects = opts.max_subobjects;
    limits_.search_budget = opts.search_budget;
  }

  const Limits& limits() const { return limits_; }

  const OrthoStructure& structure() {
    if (!structure_) {
      if (opts_.input.empty() == opts_.builtin.empty()) {
        throw UsageError("exactly one of --input or --builtin is required");
      }
      auto s = opts_.input.empty() ? builtin_structure(opts_.builtin, limits_)
                                   : load_structure(opts_.input, limits_);
      structure_ = std::make_shared<const OrthoStructure>(std::move(s));
    }
    return *structure_;
  }

  const PosetPtr& poset() {
    if (!poset_) {
      structure();
      poset_ = enumerate_contexts(structure_, limits_);
    }
    return poset_;
  }

  /// "top", "bottom", "das:<label>" or a subobject JSON file.
  ClopenSubobject subobject(const std::string& arg) {
    const auto& p = poset();
    if (arg == "top") return top(p);
    if (arg == "bottom") return bottom(p);
    if (arg.rfind("das:", 0) == 0) return daseinise(p, structure().at(arg.substr(4)));
    return subobject_from_json(p, read_json_file(arg));
  }

  std::vector<ClopenSubobject> subobjects() {
    std::vector<ClopenSubobject> out;
    for (const auto& arg : opts_.subobjects) out.push_back(subobject(arg));
    return out;
  }

  ClopenSubobject single_subobject() {
    if (opts_.subobjects.size() != 1) throw UsageError("expected exactly one --subobject");
    return subobject(opts_.subobjects.front());
  }

  std::pair<ClopenSubobject, ClopenSubobject> pair_of_subobjects() {
    if (opts_.subobjects.size() != 2) throw UsageError("expected exactly two --subobject arguments");
    return {subobject(opts_.subobjects[0]), subobject(opts_.subobjects[1])};
  }

  const Oracle& oracle() {
    if (!oracle_) oracle_.emplace(poset(), limits_.max_subobjects);
    return *oracle_;
  }

  void emit(const std::string& text) {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opts_.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + opts_.output);
    file << text;
  }

  void emit(const Json& doc) { emit(doc.dump() + "\n"); }

 private:
  const Options& opts_;
  std::ostream& out_;
  Limits limits_;
  std::shared_ptr<const OrthoStructure> structure_;
  PosetPtr poset_;
  std::optional<Oracle> oracle_;
};

Json report_to_json(const LawReport& report) {
  Json out;
  out["mode"] = report.sampled ? "sampled" : "exhaustive";
  out["universe"] = report.universe_size;
  out["passed"] = report.passed();
  Json laws = Json::array();
  for (const auto& law : report.laws) {
    Json entry;
    entry["name"] = law.name;
    entry["checked"] = law.checked;
    entry["failures"] = law.failures;
    if (!law.passed()) entry["counterexample"] = law.counterexample;
    laws.push_back(std::move(entry));
  }
  out["laws"] = std::move(laws);
  return out;
}

void print_error(std::ostream& err, std::string_view name, const std::string& message) {
  Json doc;
  doc["error"] = name;
  doc["message"] = message;
  err << doc.dump() << "\n";
}

using Handler = std::function<int(Session&)>;

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Bi-Heyting algebra of clopen subobjects over finite orthomodular structures", "biheyt"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Handler>> leaves;

  auto add_source = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", opts.input, "structure JSON (oml-explicit or greechie)");
    auto* bi = cmd->add_option("--builtin", opts.builtin, "boolean:n | mo:n | cabello18");
    in->excludes(bi);
    cmd->add_option("--output", opts.output, "write the result here instead of stdout");
    cmd->add_option("--max-subobjects", opts.max_subobjects, "enumeration guard")
        ->envname("BIHEYT_MAX_SUBOBJECTS");
    cmd->add_option("--search-budget", opts.search_budget, "global-section search node budget");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler handler) {
    auto* cmd = parent->add_subcommand(name, help);
    add_source(cmd);
    leaves.emplace_back(cmd, std::move(handler));
    return cmd;
  };
  auto add_subobjects = [&](CLI::App* cmd) {
    cmd->add_option("--subobject", opts.subobjects, "subobject JSON file, top, bottom or das:<label>");
  };

  leaf(&app, "validate", "validate a structure and print its canonical form",
       [](Session& s) {
         s.emit(structure_to_json(s.structure()));
         return kOk;
       });

  auto* contexts = leaf(&app, "contexts", "list the contexts", [&](Session& s) {
    if (opts.format == "dot") {
      s.emit(contexts_dot(*s.poset()));
    } else {
      s.emit(contexts_to_json(*s.poset()));
    }
    return kOk;
  });
  contexts->add_option("--format", opts.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

  auto* spectrum_cmd = leaf(&app, "spectrum", "atoms of each context", [&](Session& s) {
    const auto& p = *s.poset();
    if (opts.context.empty()) {
      s.emit(spectrum_to_json(p));
      return kOk;
    }
    Json points = Json::array();
    for (const auto& point : spectrum(p, p.at(opts.context))) points.push_back(p.structure().label(point.atom));
    s.emit(points);
    return kOk;
  });
  spectrum_cmd->add_option("--context", opts.context, "restrict to one context id");

  auto* das = leaf(&app, "das", "outer daseinisation of an element", [&](Session& s) {
    s.emit(subobject_to_json(daseinise(s.poset(), s.structure().at(opts.element))));
    return kOk;
  });
  das->add_option("--element", opts.element, "element label")->required();

  auto* op = app.add_subcommand("op", "bi-Heyting operations");
  op->require_subcommand(1);
  add_subobjects(leaf(op, "meet", "stagewise meet (empty family gives top)", [](Session& s) {
    s.emit(subobject_to_json(meet(s.poset(), s.subobjects())));
    return kOk;
  }));
  add_subobjects(leaf(op, "join", "stagewise join (empty family gives bottom)", [](Session& s) {
    s.emit(subobject_to_json(join(s.poset(), s.subobjects())));
    return kOk;
  }));
  auto* implies = leaf(op, "implies", "Heyting implication S => T", [&](Session& s) {
    auto [a, b] = s.pair_of_subobjects();
    s.emit(subobject_to_json(opts.oracle ? brute_heyting_implies(s.oracle(), a, b) : heyting_implies(a, b)));
    return kOk;
  });
  add_subobjects(implies);
  implies->add_flag("--oracle", opts.oracle, "use the brute-force definition");
  auto* subtract = leaf(op, "subtract", "co-Heyting subtraction S <= T", [&](Session& s) {
    auto [a, b] = s.pair_of_subobjects();
    s.emit(subobject_to_json(opts.oracle ? brute_coheyting_subtract(s.oracle(), a, b)
                                         : coheyting_subtract(a, b)));
    return kOk;
  });
  add_subobjects(subtract);
  subtract->add_flag("--oracle", opts.oracle, "use the brute-force definition");
  auto* neg = leaf(op, "not", "Heyting negation", [&](Session& s) {
    auto a = s.single_subobject();
    ClopenSubobject r = opts.oracle ? brute_negations(s.oracle(), a).first : heyting_not(a);
    if (opts.twice) r = opts.oracle ? brute_negations(s.oracle(), r).first : double_heyting_not(a);
    s.emit(subobject_to_json(r));
    return kOk;
  });
  add_subobjects(neg);
  neg->add_flag("--heyting", opts.heyting, "Heyting negation (the default)");
  neg->add_flag("--double", opts.twice, "apply twice");
  neg->add_flag("--oracle", opts.oracle, "use the brute-force definition");
  auto* conot = leaf(op, "conot", "co-Heyting negation", [&](Session& s) {
    auto a = s.single_subobject();
    ClopenSubobject r = opts.oracle ? brute_negations(s.oracle(), a).second : coheyting_not(a);
    if (opts.twice) r = opts.oracle ? brute_negations(s.oracle(), r).second : double_coheyting_not(a);
    s.emit(subobject_to_json(r));
    return kOk;
  });
  add_subobjects(conot);
  conot->add_flag("--double", opts.twice, "apply twice");
  conot->add_flag("--oracle", opts.oracle, "use the brute-force definition");

  auto* check = app.add_subcommand("check", "predicates and law suites");
  check->require_subcommand(1);
  auto predicate = [&](const std::string& name, const std::string& key, bool (*test)(const ClopenSubobject&)) {
    add_subobjects(leaf(check, name, key, [key, test](Session& s) {
      Json doc;
      doc[key] = test(s.single_subobject());
      s.emit(doc);
      return kOk;
    }));
  };
  predicate("regular", "heyting_regular", &is_heyting_regular);
  predicate("coregular", "coheyting_regular", &is_coheyting_regular);
  predicate("tight", "tight", &is_tight);
  auto* laws = leaf(check, "laws", "bi-Heyting law suite", [&](Session& s) {
    LawReport report;
    if (opts.sample > 0) {
      if (opts.oracle) throw UsageError("--oracle needs the exhaustive family; drop --sample");
      auto family = sample_subobjects(s.poset(), opts.sample, opts.seed);
      report = check_laws(family, true);
    } else {
      report = check_laws(s.oracle().universe(), false);
      if (opts.oracle) {
        auto agreement = check_oracle_agreement(s.oracle());
        for (auto& law : agreement.laws) report.laws.push_back(std::move(law));
      }
    }
    s.emit(report_to_json(report));
    return report.passed() ? kOk : kValidation;
  });
  laws->add_flag("--oracle", opts.oracle, "also compare against the brute-force definitions");
  laws->add_option("--sample", opts.sample, "check a random family of this size instead");
  laws->add_option("--seed", opts.seed, "seed for --sample");

  auto* sections = leaf(&app, "sections", "global sections of the spectral presheaf", [&](Session& s) {
    auto search = global_sections(*s.poset(), s.limits().search_budget);
    s.emit(sections_to_json(*s.poset(), search, opts.list));
    return kOk;
  });
  sections->add_flag("--list", opts.list, "print every section");

  auto* enumerate = leaf(&app, "enumerate", "all clopen subobjects", [&](Session& s) {
    auto all = enumerate_subobjects(s.poset(), s.limits().max_subobjects);
    Json doc;
    doc["count"] = all.size();
    if (!opts.count_only) {
      Json list = Json::array();
      for (const auto& sub : all) list.push_back(subobject_to_json(sub));
      doc["subobjects"] = std::move(list);
    }
    s.emit(doc);
    return kOk;
  });
  enumerate->add_flag("--count-only", opts.count_only, "print only the count");

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz output");
  export_dot->require_subcommand(1);
  leaf(export_dot, "contexts", "Hasse diagram of the context poset", [](Session& s) {
    s.emit(contexts_dot(*s.poset()));
    return kOk;
  });
  add_subobjects(leaf(export_dot, "subobject", "Hasse diagram annotated by a subobject", [](Session& s) {
    s.emit(subobject_dot(s.single_subobject()));
    return kOk;
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kUsage;
  }

  for (auto& [cmd, handler] : leaves) {
    if (!cmd->parsed()) continue;
    try {
      Session session(opts, out);
      return handler(session);
    } catch (const UsageError& e) {
      print_error(err, "UsageError", e.what());
      return kUsage;
    } catch (const Error& e) {
      print_error(err, e.name(), e.what());
      return e.code() == ErrorCode::SizeGuard ? kSizeGuard : kValidation;
    } catch (const std::invalid_argument& e) {
      print_error(err, "InvalidArgument", e.what());
      return kValidation;
    }
  }
  print_error(err, "UsageError", "no command given");
  return kUsage;
}

}  // namespace biheyt::cli

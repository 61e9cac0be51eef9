#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ballmodal/error.hpp"
#include "ballmodal/frames.hpp"
#include "ballmodal/io.hpp"
#include "ballmodal/kripke.hpp"
#include "ballmodal/prop4.hpp"
#include "ballmodal/proofs.hpp"
#include "ballmodal/syntax.hpp"

namespace ballmodal::cli {

namespace {

using nlohmann::ordered_json;

struct Limits {
  std::uint64_t max_valuations = std::uint64_t{1} << 32;
  std::uint64_t max_frames = std::uint64_t{1} << 40;
  double time_budget = 0;
  unsigned workers = 1;

  SearchLimits resolve() const {
    SearchLimits l;
    l.max_valuations = max_valuations;
    l.max_frames = max_frames;
    l.workers = workers;
    if (time_budget > 0) {
      l.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(time_budget));
    }
    return l;
  }
};

struct UfChoice {
  std::string name = "e1";
  bool all = false;

  std::vector<Ultrafilter> resolve() const {
    if (all) return {kAllUltrafilters.begin(), kAllUltrafilters.end()};
    auto uf = ultrafilter_from_name(name);
    if (!uf) throw InputError("unknown ultrafilter '" + name + "'");
    return {*uf};
  }
};

unsigned default_workers() {
  if (const char* env = std::getenv("BALLMODAL_WORKERS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_limits(CLI::App* sub, Limits& limits) {
  sub->add_option("--max-valuations", limits.max_valuations,
                  "Cap on valuations per frame")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-frames", limits.max_frames, "Cap on enumerated frames")
      ->check(CLI::PositiveNumber);
  sub->add_option("--time-budget", limits.time_budget,
                  "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  sub->add_option("--workers", limits.workers,
                  "Worker threads (default: BALLMODAL_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
}

void add_ultrafilters(CLI::App* sub, UfChoice& choice) {
  auto* one = sub->add_option("--ultrafilter", choice.name,
                              "Ultrafilter generator: e1, e2 or e3")
                  ->check(CLI::IsMember({"e1", "e2", "e3"}));
  sub->add_flag("--all-ultrafilters", choice.all, "Use all three ultrafilters")
      ->excludes(one);
}

void add_format(CLI::App* sub, std::string& format,
                std::vector<std::string> allowed) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(allowed)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Frame load_frame(const std::string& spec) {
  constexpr std::string_view prefix = "fixture:";
  if (spec.starts_with(prefix)) {
    const std::string name = spec.substr(prefix.size());
    if (auto f = fixture(name)) return *f;
    std::string known;
    for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown fixture '" + name + "' (known: " + known + ")");
  }
  try {
    return frame_from_json(read_file(spec));
  } catch (const InputError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

std::string frame_label(const std::string& spec) {
  constexpr std::string_view prefix = "fixture:";
  return spec.starts_with(prefix) ? spec.substr(prefix.size()) : spec;
}

FrameProperty parse_property(const std::string& name) {
  if (auto p = property_from_name(name)) return *p;
  throw InputError("unknown property '" + name + "'");
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

ordered_json model_json(const Model& m) {
  return ordered_json::parse(model_to_json(m));
}

// ---------------------------------------------------------------------------

struct EvalCmd {
  std::string model;
  std::string world;
  std::string formula;
  std::string ultrafilter;
  bool default_bottom = false;

  int run(std::ostream& out) const {
    Model m = model_from_json(read_file(model));
    if (!ultrafilter.empty()) m.set_ultrafilter(*ultrafilter_from_name(ultrafilter));
    if (default_bottom) m.set_unknown_variables(UnknownVariables::DefaultToBottom);
    const Formula f = parse(formula);
    const Element value = eval(m, world, f);
    out << to_string(value) << ", "
        << (is_designated(value, m.ultrafilter()) ? "designated" : "not designated")
        << '\n';
    return kOk;
  }
};

struct ValidCmd {
  std::string frame;
  std::string formula;
  UfChoice ufs;
  Limits limits;
  std::string format = "human";

  int run(std::ostream& out) const {
    const Frame fr = load_frame(frame);
    const Formula f = parse(formula);
    const auto chosen = ufs.resolve();
    const auto results = frame_validity(fr, f, chosen, limits.resolve());
    bool all_valid = true;
    ordered_json doc = ordered_json::array();
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto& r = results[k];
      all_valid = all_valid && r.valid;
      if (format == "json") {
        ordered_json entry;
        entry["ultrafilter"] = to_string(chosen[k]);
        entry["valid"] = r.valid;
        if (r.countermodel) entry["countermodel"] = model_json(*r.countermodel);
        doc.push_back(entry);
        continue;
      }
      out << (r.valid ? "valid" : "invalid") << " under " << to_string(chosen[k])
          << '\n';
      if (r.countermodel) out << "countermodel:\n" << model_to_json(*r.countermodel) << '\n';
    }
    if (format == "json") out << doc.dump(2) << '\n';
    return all_valid ? kOk : kNegative;
  }
};

struct Taut4Cmd {
  std::string formula;

  int run(std::ostream& out) const {
    const auto r = consequence4({}, parse(formula));
    if (r.holds) {
      out << "tautology\n";
      return kOk;
    }
    out << "not a tautology; witness " << to_string(*r.witness) << '\n';
    return kNegative;
  }
};

struct Cons4Cmd {
  std::vector<std::string> premises;
  std::string goal;

  int run(std::ostream& out) const {
    const auto r = consequence4(parse_all(premises), parse(goal));
    if (r.holds) {
      out << "consequence\n";
      return kOk;
    }
    out << "not a consequence; witness " << to_string(*r.witness) << '\n';
    return kNegative;
  }
};

struct SearchCmd {
  std::vector<std::string> premises;
  std::string goal;
  std::size_t max_worlds = 2;
  std::vector<std::string> required;
  UfChoice ufs;
  Limits limits;
  std::string format = "human";

  int run(std::ostream& out) const {
    std::vector<FrameProperty> props;
    for (const auto& r : required) props.push_back(parse_property(r));
    FrameFilter filter;
    if (!props.empty()) {
      filter = [props](const Frame& f) {
        for (auto p : props) {
          if (!holds(p, f)) return false;
        }
        return true;
      };
    }
    const auto chosen = ufs.resolve();
    const auto m = countermodel_search(parse_all(premises), parse(goal), max_worlds,
                                       chosen, limits.resolve(), filter);
    if (format == "json") {
      ordered_json doc;
      doc["max_worlds"] = max_worlds;
      doc["countermodel"] = m ? model_json(*m) : ordered_json();
      out << doc.dump(2) << '\n';
    } else if (m) {
      out << "countermodel with " << m->frame().size() << " world"
          << (m->frame().size() == 1 ? "" : "s") << " (" << frame_encoding(m->frame())
          << "):\n"
          << model_to_json(*m) << '\n';
    } else {
      out << "no countermodel up to " << max_worlds << " worlds\n";
    }
    return m ? kNegative : kOk;
  }
};

struct CorrespondCmd {
  std::string property;
  std::string formula;
  std::size_t max_worlds = 3;
  bool modulo_isomorphism = false;
  UfChoice ufs;
  Limits limits;
  std::string format = "human";

  int run(std::ostream& out) const {
    const FrameProperty p = parse_property(property);
    const Formula f = parse(formula);
    const auto chosen = ufs.resolve();
    const auto report = correspondence_check(p, f, max_worlds, chosen,
                                             limits.resolve(),
                                             {modulo_isomorphism});
    if (format == "csv") {
      out << correspondence_csv(report);
    } else if (format == "json") {
      ordered_json doc;
      doc["property"] = to_string(p);
      doc["formula"] = print(f);
      doc["max_worlds"] = max_worlds;
      ordered_json names = ordered_json::array();
      for (const auto& uf : chosen) names.push_back(to_string(uf));
      doc["ultrafilters"] = names;
      doc["frames_per_size"] = report.frames_per_size;
      doc["frames_checked"] = report.frames_checked;
      ordered_json list = ordered_json::array();
      for (const auto& m : report.mismatches) {
        ordered_json e;
        e["frame"] = frame_encoding(m.frame);
        e["ultrafilter"] = to_string(m.ultrafilter);
        e["direction"] = to_string(m.direction);
        e["witness"] = m.witness;
        if (m.countermodel) e["countermodel"] = model_json(*m.countermodel);
        list.push_back(e);
      }
      doc["mismatches"] = list;
      out << doc.dump(2) << '\n';
    } else {
      std::string sizes;
      for (auto it = report.frames_per_size.rbegin();
           it != report.frames_per_size.rend(); ++it) {
        sizes += (sizes.empty() ? "" : "+") + std::to_string(*it);
      }
      out << to_string(p) << ", " << formula << ": " << sizes << " frames × "
          << chosen.size() << " ultrafilter" << (chosen.size() == 1 ? "" : "s")
          << ", " << report.mismatches.size() << " mismatch"
          << (report.mismatches.size() == 1 ? "" : "es") << '\n';
      for (const auto& m : report.mismatches) {
        out << "  " << frame_encoding(m.frame) << " under " << to_string(m.ultrafilter)
            << ": " << to_string(m.direction) << ": " << m.witness << '\n';
      }
    }
    return report.holds() ? kOk : kNegative;
  }
};

struct EnumerateCmd {
  std::size_t worlds = 1;
  bool modulo_isomorphism = false;
  std::vector<std::string> properties;
  std::string format = "human";

  int run(std::ostream& out) const {
    std::vector<FrameProperty> props;
    for (const auto& p : properties) props.push_back(parse_property(p));
    if (format == "csv") {
      out << "frame_encoding,index";
      for (auto p : props) out << ',' << to_string(p);
      out << '\n';
    }
    ordered_json doc = ordered_json::array();
    std::uint64_t count = 0;
    for_each_frame(worlds, {modulo_isomorphism}, [&](const Frame& f) {
      ++count;
      if (format == "json") {
        ordered_json e;
        e["frame"] = frame_encoding(f);
        e["index"] = frame_index(f);
        for (auto p : props) e[to_string(p)] = holds(p, f);
        doc.push_back(e);
        return true;
      }
      const char sep = format == "csv" ? ',' : ' ';
      out << frame_encoding(f);
      if (format == "csv") out << sep << frame_index(f);
      for (auto p : props) {
        out << sep << (format == "csv" ? "" : to_string(p) + "=")
            << (holds(p, f) ? "true" : "false");
      }
      out << '\n';
      return true;
    });
    if (format == "json") out << doc.dump(2) << '\n';
    if (format == "human") out << count << " frames\n";
    return kOk;
  }
};

struct IndiscernCmd {
  std::string first = "fixture:soob_F";
  std::string second = "fixture:soob_Fprime";
  std::size_t depth = 3;
  std::vector<std::string> vars{"p"};
  UfChoice ufs{"e1", true};
  bool one_uf = false;
  Limits limits;
  std::string format = "human";

  int run(std::ostream& out) const {
    const Frame a = load_frame(first);
    const Frame b = load_frame(second);
    const auto corpus = generate_corpus(vars, depth);
    const auto report =
        indiscernibility_check(a, b, corpus, ufs.resolve(), limits.resolve());
    const std::string na = frame_label(first);
    const std::string nb = frame_label(second);
    if (format == "csv") {
      out << "formula,ultrafilter,valid_in_first,valid_in_second\n";
      for (const auto& d : report.disagreements) {
        out << '"' << print(d.formula) << "\"," << to_string(d.ultrafilter) << ','
            << (d.valid_in_first ? "true" : "false") << ','
            << (d.valid_in_second ? "true" : "false") << '\n';
      }
    } else if (report.agree()) {
      out << na << " and " << nb << " agree on all " << report.formulas_checked
          << " corpus formulas\n";
    } else {
      out << na << " and " << nb << " disagree on " << report.disagreements.size()
          << " of " << report.formulas_checked << " corpus formulas\n";
      for (const auto& d : report.disagreements) {
        out << "  " << print(d.formula) << " under " << to_string(d.ultrafilter)
            << ": " << (d.valid_in_first ? "valid" : "invalid") << " in " << na
            << ", " << (d.valid_in_second ? "valid" : "invalid") << " in " << nb
            << '\n';
      }
    }
    return report.agree() ? kOk : kNegative;
  }
};

struct CheckProofCmd {
  std::string proof;
  std::size_t crosscheck = 0;
  Limits limits;

  int run(std::ostream& out) const {
    const Derivation d = derivation_from_json(read_file(proof));
    const auto result = check(d);
    if (!result.accepted()) {
      out << "rejected at step " << result.violation->step << ": "
          << result.violation->reason << '\n';
      return kNegative;
    }
    out << "accepted: " << to_string(*result.conclusion) << '\n';
    if (crosscheck == 0) return kOk;
    const auto report = semantic_crosscheck(*result.conclusion, crosscheck,
                                            limits.resolve());
    if (report.sound()) {
      out << "crosscheck up to " << crosscheck << " worlds: no countermodel\n";
      return kOk;
    }
    out << "crosscheck up to " << crosscheck << " worlds: countermodel found\n"
        << model_to_json(*report.countermodel) << '\n';
    return kNegative;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Many-logics modal workbench over the eight-valued ball algebra",
               "ballmodal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const unsigned workers = default_workers();
  std::function<int(std::ostream&)> action;
  auto bind = [&](CLI::App* sub, auto& cmd) {
    sub->callback([&action, &cmd] {
      action = [&cmd](std::ostream& o) { return cmd.run(o); };
    });
  };

  EvalCmd eval_cmd;
  auto* eval_sub = app.add_subcommand("eval", "Value of a formula at a world");
  eval_sub->add_option("--model", eval_cmd.model, "Model file")->required();
  eval_sub->add_option("--world", eval_cmd.world, "World name")->required();
  eval_sub->add_option("--formula", eval_cmd.formula, "Formula")->required();
  eval_sub->add_option("--ultrafilter", eval_cmd.ultrafilter,
                       "Override the model's ultrafilter")
      ->check(CLI::IsMember({"e1", "e2", "e3"}));
  eval_sub->add_flag("--default-bottom", eval_cmd.default_bottom,
                     "Read unassigned variables as 0");
  bind(eval_sub, eval_cmd);

  ValidCmd valid_cmd;
  valid_cmd.limits.workers = workers;
  auto* valid_sub = app.add_subcommand("valid", "Frame validity of a formula");
  valid_sub->add_option("--frame", valid_cmd.frame, "Frame file or fixture:NAME")
      ->required();
  valid_sub->add_option("--formula", valid_cmd.formula, "Formula")->required();
  add_ultrafilters(valid_sub, valid_cmd.ufs);
  add_limits(valid_sub, valid_cmd.limits);
  add_format(valid_sub, valid_cmd.format, {"human", "json"});
  bind(valid_sub, valid_cmd);

  Taut4Cmd taut4_cmd;
  auto* taut4_sub = app.add_subcommand("taut4", "Four-valued validity");
  taut4_sub->add_option("--formula", taut4_cmd.formula, "Formula")->required();
  bind(taut4_sub, taut4_cmd);

  Cons4Cmd cons4_cmd;
  auto* cons4_sub = app.add_subcommand("cons4", "Four-valued consequence");
  cons4_sub->add_option("--premises", cons4_cmd.premises, "Premise formulas");
  cons4_sub->add_option("--goal", cons4_cmd.goal, "Goal formula")->required();
  bind(cons4_sub, cons4_cmd);

  SearchCmd search_cmd;
  search_cmd.limits.workers = workers;
  auto* search_sub =
      app.add_subcommand("search", "Bounded countermodel search for global consequence");
  search_sub->add_option("--premises", search_cmd.premises, "Premise formulas");
  search_sub->add_option("--goal", search_cmd.goal, "Goal formula")->required();
  search_sub->add_option("--max-worlds", search_cmd.max_worlds, "World bound")
      ->check(CLI::Range(1, 7));
  search_sub->add_option("--require", search_cmd.required,
                         "Only frames with these properties");
  add_ultrafilters(search_sub, search_cmd.ufs);
  add_limits(search_sub, search_cmd.limits);
  add_format(search_sub, search_cmd.format, {"human", "json"});
  bind(search_sub, search_cmd);

  CorrespondCmd correspond_cmd;
  correspond_cmd.limits.workers = workers;
  auto* correspond_sub = app.add_subcommand(
      "correspond", "Check a frame property against frame validity of a formula");
  correspond_sub->add_option("--property", correspond_cmd.property, "Frame property")
      ->required();
  correspond_sub->add_option("--formula", correspond_cmd.formula, "Formula")
      ->required();
  correspond_sub->add_option("--max-worlds", correspond_cmd.max_worlds, "World bound")
      ->check(CLI::Range(1, 7));
  correspond_sub->add_flag("--modulo-isomorphism", correspond_cmd.modulo_isomorphism,
                           "Visit one frame per isomorphism class");
  add_ultrafilters(correspond_sub, correspond_cmd.ufs);
  add_limits(correspond_sub, correspond_cmd.limits);
  add_format(correspond_sub, correspond_cmd.format, {"human", "csv", "json"});
  bind(correspond_sub, correspond_cmd);

  EnumerateCmd enumerate_cmd;
  auto* enumerate_sub = app.add_subcommand("enumerate", "List frames in canonical order");
  enumerate_sub->add_option("--worlds", enumerate_cmd.worlds, "World count")
      ->required()
      ->check(CLI::Range(1, 7));
  enumerate_sub->add_flag("--modulo-isomorphism", enumerate_cmd.modulo_isomorphism,
                          "Visit one frame per isomorphism class");
  enumerate_sub->add_option("--property", enumerate_cmd.properties,
                            "Report these properties per frame");
  add_format(enumerate_sub, enumerate_cmd.format, {"human", "csv", "json"});
  bind(enumerate_sub, enumerate_cmd);

  IndiscernCmd indiscern_cmd;
  indiscern_cmd.limits.workers = workers;
  auto* indiscern_sub = app.add_subcommand(
      "indiscern", "Compare frame validity of a formula corpus on two frames");
  indiscern_sub->add_option("--first", indiscern_cmd.first, "Frame file or fixture:NAME");
  indiscern_sub->add_option("--second", indiscern_cmd.second,
                            "Frame file or fixture:NAME");
  indiscern_sub->add_option("--corpus-depth", indiscern_cmd.depth,
                            "Maximum connectives per corpus formula");
  indiscern_sub->add_option("--vars", indiscern_cmd.vars, "Corpus variables");
  auto* one = indiscern_sub->add_option("--ultrafilter", indiscern_cmd.ufs.name,
                                        "Use one ultrafilter instead of all three")
                  ->check(CLI::IsMember({"e1", "e2", "e3"}));
  one->each([&](const std::string&) { indiscern_cmd.ufs.all = false; });
  add_limits(indiscern_sub, indiscern_cmd.limits);
  add_format(indiscern_sub, indiscern_cmd.format, {"human", "csv"});
  bind(indiscern_sub, indiscern_cmd);

  CheckProofCmd checkproof_cmd;
  checkproof_cmd.limits.workers = workers;
  auto* checkproof_sub = app.add_subcommand("checkproof", "Check a derivation file");
  checkproof_sub->add_option("--proof", checkproof_cmd.proof, "Proof file")->required();
  checkproof_sub->add_option("--crosscheck", checkproof_cmd.crosscheck,
                             "Also search countermodels up to this many worlds")
      ->check(CLI::Range(1, 7));
  add_limits(checkproof_sub, checkproof_cmd.limits);
  bind(checkproof_sub, checkproof_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }

  try {
    return action(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  }
}

}  // namespace ballmodal::cli

// psn: command-line front end to the word calculus, the space builder and
// the flag queries.  Exit status: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psn/error.hpp"
#include "psn/flags.hpp"
#include "psn/oracle.hpp"
#include "psn/space_io.hpp"
#include "psn/word.hpp"

namespace {

using nlohmann::json;
using namespace psn;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, what + ": " + e.what());
  }
}

ColoredSpace load(const std::string& path) { return load_space(parse_json(read_input(path), path)); }

// "#k" picks the k-th flag of `psn flags`; anything else is a JSON array.
Flag parse_flag(const ColoredSpace& space, const std::string& text) {
  Flag F;
  if (!text.empty() && text[0] == '#') {
    std::size_t k = 0;
    try {
      k = std::stoul(text.substr(1));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad flag index " + text);
    }
    auto flags = enumerate_flags(space);
    if (k >= flags.size()) {
      throw Error(Errc::invalid_flag, "flag index " + text + " out of range (" +
                                          std::to_string(flags.size()) + " flags)");
    }
    F = flags[k];
  } else {
    F = flag_from_json(parse_json(text, "flag"));
  }
  check_flag(space, F);
  return F;
}

VertexSet parse_set(const ColoredSpace& space, const std::string& text) {
  json j = parse_json(text, "vertex set");
  if (!j.is_array()) throw Error(Errc::parse_error, "vertex set must be a JSON array");
  VertexSet X;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(Errc::parse_error, "vertex ids are non-negative integers");
    auto id = v.get<VertexId>();
    space.check_vertex(id);
    X.push_back(id);
  }
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  return X;
}

json set_json(IndexSet s) { return s.members(); }

struct Options {
  bool as_json = false;
  int n = -1;
  std::vector<std::string> args;
  bool left = false, right = false, symmetric = false;
  std::size_t split_len = kDefaultSplitLen;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string set, out, suite;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  int n_max = 3;
};

Word word_arg(const Options& o, std::size_t i) { return Word::parse(o.args.at(i), o.n); }

void print_word(const Options& o, const Word& w) {
  if (o.as_json) {
    std::cout << json{{"word", w.to_string()}}.dump() << "\n";
  } else {
    std::cout << w.to_string() << "\n";
  }
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "reduce") {
    print_word(o, reduce(word_arg(o, 0)));
  } else if (cmd == "nf") {
    print_word(o, normal_form(word_arg(o, 0)));
  } else if (cmd == "inverse") {
    print_word(o, inverse(word_arg(o, 0)));
  } else if (cmd == "product") {
    print_word(o, concat_reduce(word_arg(o, 0), word_arg(o, 1)));
  } else if (cmd == "wobble" || cmd == "stab") {
    IndexSet s = cmd == "wobble" ? wobbling(word_arg(o, 0), word_arg(o, 1))
                 : o.left        ? left_stabilizer(word_arg(o, 0))
                                 : right_stabilizer(word_arg(o, 0));
    if (o.as_json) {
      std::cout << json{{"levels", set_json(s)}}.dump() << "\n";
    } else {
      std::cout << s.to_string() << "\n";
    }
  } else if (cmd == "decompose") {
    Word u = word_arg(o, 0), v = word_arg(o, 1);
    FineDecomposition d = o.symmetric ? decompose_symmetric(u, v) : decompose_fine(u, v);
    Word reduct = concat_reduce(u, v);
    if (o.as_json) {
      json j{{"u1", d.u1.to_string()},
             {"u_prime", d.u_prime.to_string()},
             {"v_prime", d.v_prime.to_string()},
             {"v1", d.v1.to_string()},
             {"reduct", reduct.to_string()}};
      if (o.symmetric) j["w"] = d.w.to_string();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "u1 = " << d.u1.to_string() << "\nu' = " << d.u_prime.to_string() << "\n";
      if (o.symmetric) std::cout << "w  = " << d.w.to_string() << "\n";
      std::cout << "v' = " << d.v_prime.to_string() << "\nv1 = " << d.v1.to_string()
                << "\nreduct = " << reduct.to_string() << "\n";
    }
  } else if (cmd == "rank") {
    TypeRank r = type_rank(word_arg(o, 0));
    std::string rd = r.u_rank ? r.u_rank->to_string() : "none";
    if (o.as_json) {
      std::cout << json{{"ord", r.ord_bound.to_string()},
                        {"rd", r.u_rank ? json(rd) : json(nullptr)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "ord = " << r.ord_bound.to_string() << "\nrd = " << rd << "\n";
    }
  } else if (cmd == "strong") {
    StrongReducts r = strong_reducts_bounded(word_arg(o, 0), o.split_len, o.max_steps);
    bool complete = r.status == SearchStatus::complete;
    if (o.as_json) {
      json list = json::array();
      for (const Word& w : r.reducts) list.push_back(w.to_string());
      std::cout << json{{"reducts", list},
                        {"status", complete ? "complete" : "budget-exhausted"},
                        {"steps", r.steps}}
                       .dump()
                << "\n";
    } else {
      for (const Word& w : r.reducts) std::cout << w.to_string() << "\n";
      if (!complete) std::cerr << "note: step budget exhausted, list may be partial\n";
    }
  } else if (cmd == "build") {
    std::cout << space_to_json(space_from_script(parse_json(read_input(o.args.at(0)), "script")))
                     .dump(2)
              << "\n";
  } else if (cmd == "export-dot") {
    std::cout << to_dot(load(o.args.at(0)));
  } else if (cmd == "flags") {
    ColoredSpace space = load(o.args.at(0));
    auto flags = enumerate_flags(space);
    if (o.as_json) {
      json list = json::array();
      for (const Flag& F : flags) list.push_back(flag_to_json(F));
      std::cout << list.dump() << "\n";
    } else {
      for (std::size_t k = 0; k < flags.size(); ++k) {
        std::cout << "#" << k << " " << flag_to_string(flags[k]) << "\n";
      }
    }
  } else if (cmd == "word") {
    ColoredSpace space = load(o.args.at(0));
    FlagPath P = flag_path(space, parse_flag(space, o.args.at(1)), parse_flag(space, o.args.at(2)));
    if (o.as_json) {
      json flags = json::array();
      for (const Flag& F : P.flags) flags.push_back(flag_to_json(F));
      std::cout << json{{"word", P.word.to_string()}, {"path", flags}}.dump() << "\n";
    } else {
      std::cout << P.word.to_string() << "\n";
    }
  } else if (cmd == "basepoint" || cmd == "canbase") {
    ColoredSpace space = load(o.args.at(0));
    Flag F = parse_flag(space, o.args.at(1));
    VertexSet X = parse_set(space, o.set);
    if (cmd == "basepoint") {
      Basepoint b = basepoint(space, F, X);
      if (o.as_json) {
        std::cout << json{{"flag", flag_to_json(b.flag)}, {"word", b.word.to_string()}}.dump()
                  << "\n";
      } else {
        std::cout << flag_to_string(b.flag) << " " << b.word.to_string() << "\n";
      }
    } else {
      FlagClass cb = canonical_base(space, F, X);
      if (o.as_json) {
        std::cout << json{{"flag", flag_to_json(cb.flag)}, {"modulus", set_json(cb.modulus)}}.dump()
                  << "\n";
      } else {
        std::cout << flag_to_string(cb.flag) << " modulo " << cb.modulus.to_string() << "\n";
      }
    }
  } else if (cmd == "indep") {
    ColoredSpace space = load(o.args.at(0));
    bool r = indep(space, parse_flag(space, o.args.at(1)), parse_flag(space, o.args.at(2)),
                   parse_flag(space, o.args.at(3)));
    std::cout << (o.as_json ? json{{"indep", r}}.dump() : std::string(r ? "true" : "false"))
              << "\n";
  } else if (cmd == "realize") {
    ColoredSpace space = load(o.args.at(0));
    Flag G = parse_flag(space, o.args.at(1));
    Flag F = realize_type(space, G, Word::parse(o.args.at(2), space.dim()));
    if (!o.out.empty()) {
      std::ofstream file(o.out);
      if (!file) throw Error(Errc::parse_error, "cannot write " + o.out);
      file << space_to_json(space).dump(2) << "\n";
    }
    if (o.as_json) {
      std::cout << json{{"flag", flag_to_json(F)}, {"space", space_to_json(space)}}.dump() << "\n";
    } else {
      std::cout << flag_to_string(F) << "\n";
    }
  } else if (cmd == "ample") {
    auto records = ample_report(o.n);
    bool all = true;
    json list = json::array();
    for (const CheckRecord& r : records) {
      all = all && r.pass;
      list.push_back({{"check", r.check}, {"pass", r.pass}, {"witness", r.witness}});
      if (!o.as_json) std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
    }
    if (o.as_json) std::cout << list.dump(2) << "\n";
    return all ? 0 : 1;
  } else if (cmd == "verify") {
    SuiteConfig config;
    config.suite = o.suite;
    config.seed = o.seed;
    config.cases = o.cases;
    config.n_max = o.n_max;
    SuiteReport report = run_suite(config);
    if (o.as_json) {
      std::cout << report_to_json(report) << "\n";
    } else {
      std::cout << report.suite << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.cases
                << " cases)\n";
      for (const LawStats& s : report.laws) {
        std::cout << "  " << (s.failed ? "FAIL " : "ok   ") << s.law << ": " << s.checked
                  << " checked";
        if (s.failed) std::cout << ", " << s.failed << " failed";
        if (s.undecided) std::cout << ", " << s.undecided << " undecided";
        if (s.bounded) std::cout << " [sampled/bounded]";
        std::cout << "\n";
      }
      for (const Failure& f : report.failures) {
        std::cout << "  failure: " << f.law << "\n    inputs: " << f.inputs
                  << "\n    observed: " << f.observed << "\n";
      }
    }
    return report.pass() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free pseudospace calculator: words, colored spaces and flags"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable output");

  auto needs_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Dimension N")->required()->check(CLI::Range(0, kMaxDimension));
  };
  auto words = [&](const char* name, const char* help, std::size_t count, const char* names) {
    CLI::App* sub = app.add_subcommand(name, help);
    needs_n(sub);
    sub->add_option(names, o.args, "Words, letters joined by '.', empty word '1'")
        ->required()
        ->expected(static_cast<int>(count))
        ->allow_extra_args(false);
    return sub;
  };
  words("reduce", "Reduct in normal form", 1, "word");
  words("nf", "Normal form", 1, "word");
  words("inverse", "Inverse word", 1, "word");
  words("product", "Reduct of the product U·V", 2, "words");
  words("wobble", "Wobbling set sr(U) ∩ sL(V)", 2, "words");
  CLI::App* stab = words("stab", "Left or right stabilizer", 1, "word");
  auto* l = stab->add_flag("--left", o.left, "Left stabilizer");
  auto* r = stab->add_flag("--right", o.right, "Right stabilizer");
  l->excludes(r);
  stab->callback([&] {
    if (!o.left && !o.right) throw CLI::RequiredError("--left or --right");
  });
  CLI::App* dec = words("decompose", "Fine (or symmetric) decomposition of U, V", 2, "words");
  dec->add_flag("--symmetric", o.symmetric, "Symmetric decomposition with w");
  words("rank", "ord rank and, for monotone words, the closed-form rank", 1, "word");
  CLI::App* strong = words("strong", "Bounded strong reducts", 1, "word");
  strong->add_option("--split-len", o.split_len, "Longest splitting product")->check(CLI::PositiveNumber);
  strong->add_option("--max-steps", o.max_steps, "Rewrite step budget")->check(CLI::PositiveNumber);

  auto graph = [&](const char* name, const char* help, std::size_t count, const char* names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option(names, o.args, "Space file ('-' for stdin), then flags as JSON arrays or #k")
        ->required()
        ->expected(static_cast<int>(count))
        ->allow_extra_args(false);
    return sub;
  };
  graph("build", "Replay a build script and print the space", 1, "script");
  graph("export-dot", "Graphviz rendering of a space or script", 1, "space");
  graph("flags", "List all flags", 1, "space");
  graph("word", "Reduced path word from F to G", 3, "args");
  graph("basepoint", "Basepoint of F over a vertex set", 2, "args")
      ->add_option("--set", o.set, "Vertex ids as a JSON array")
      ->required();
  graph("canbase", "Canonical base of F over a vertex set", 2, "args")
      ->add_option("--set", o.set, "Vertex ids as a JSON array")
      ->required();
  graph("indep", "Is F independent from H over G", 4, "args");
  graph("realize", "Realize the type of a word over G", 3, "args")
      ->add_option("--out", o.out, "Write the extended space here");
  CLI::App* ample = app.add_subcommand("ample", "Canonical-base identities for dimension N");
  ample->add_option("--n", o.n, "Dimension N")->required()->check(CLI::Range(1, kMaxDimension));
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify->add_option("--suite", o.suite, "One of: " + suites)->required();
  verify->add_option("--n", o.n_max, "Largest dimension")->check(CLI::Range(1, kMaxDimension));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--cases", o.cases, "Number of random cases")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

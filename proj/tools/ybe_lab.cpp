#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ybe/catalog.hpp"
#include "ybe/derive.hpp"
#include "ybe/factorization.hpp"
#include "ybe/io.hpp"
#include "ybe/suite.hpp"

namespace fs = std::filesystem;
using namespace ybe;

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_order = kMaxGroupOrder;
  std::string out;  // empty: current directory (suite: no artifacts)
  bool roundtrip = false;
  bool tilde = false;
  std::string format = "text";
  std::string inject;

  std::string name;
  std::vector<std::size_t> params;
  std::string kind;
  std::string file;
  std::vector<Element> gens;
};

class Output {
 public:
  void step(Step const& s) {
    std::cout << format_step(s) << '\n';
    _report.steps.push_back(s);
  }
  void step(std::string name, std::function<std::string()> const& body) {
    step(timed_step(0, std::move(name), body));
  }
  void note(std::string const& name, std::string const& value) {
    std::cout << "NOTE " << name << ' ' << value << '\n';
  }
  void write(fs::path const& path, std::string const& text) {
    write_file(path, text);
    note("wrote", path.string());
  }
  int status() const { return _report.passed() ? 0 : 1; }
  RunReport const& report() const { return _report; }

 private:
  RunReport _report;
};

std::string failed(Report const& rep) {
  auto const* bad = rep.first_failure();
  if (!bad) return {};
  return bad->name + (bad->witness.empty() ? "" : " at " + format_witness(bad->witness));
}

void report_checks(Output& out, Report const& rep) {
  for (auto const& c : rep.checks) {
    Step s;
    s.name = c.name;
    s.passed = c.passed;
    if (!c.passed && !c.witness.empty()) s.witness = format_witness(c.witness);
    out.step(s);
  }
}

void report_solution(Output& out, SolutionReport const& rep) {
  Step s;
  s.name = "braid";
  s.passed = rep.braid.holds;
  s.witness = format_witness(rep.braid.witness);
  out.step(s);
  auto note = [&](std::string const& name, Property const& p) {
    out.note(name, p.holds ? "yes" : "no " + format_witness(p.witness));
  };
  note("bijective", rep.bijective);
  note("involutive", rep.involutive);
  note("left-nondegenerate", rep.left_nondegenerate);
  note("right-nondegenerate", rep.right_nondegenerate);
}

FiniteGroup load_group(std::string const& file) {
  auto raw = parse_group(read_file(file));
  return FiniteGroup::from_table(raw.order, std::move(raw.table), raw.name);
}

SkewBracoid load_bracoid(std::string const& file) {
  auto raw = parse_bracoid(read_file(file));
  return make_bracoid(FiniteGroup::from_table(raw.g_order, std::move(raw.g), "G"),
                      FiniteGroup::from_table(raw.n_order, std::move(raw.n), "N"),
                      GroupAction{raw.g_order, raw.n_order, std::move(raw.act)});
}

Semibrace load_semibrace(std::string const& file) {
  auto raw = parse_semibrace(read_file(file));
  return Semibrace::make(FiniteGroup::from_table(raw.order, std::move(raw.dot), "G"),
                         std::move(raw.plus));
}

ContainedBrace require_brace(SkewBracoid const& b) {
  auto search = contains_brace(b);
  if (!search.found()) {
    fail(ErrorCode::PreconditionFailed,
         "bracoid contains no brace: Stab(e) of order " +
             std::to_string(search.stabilizer.size()) + " has no complement");
  }
  return *search.brace;
}

int cmd_example(Options const& o) {
  Output out;
  auto ex = std::make_optional(build_example(o.name, o.params, o.seed));
  fs::path dir = o.out.empty() ? "." : o.out;
  out.note("G", std::to_string(ex->bracoid.g.order()));
  out.note("N", std::to_string(ex->bracoid.n.order()));
  if (ex->attempts) out.note("attempts", std::to_string(ex->attempts));
  if (ex->brace) {
    out.step("verify-brace", [&] {
      return failed(verify_skew_brace(ex->brace->order(), ex->brace->star().table(),
                                      ex->brace->dot().table()));
    });
  }
  out.step("verify-bracoid", [&] {
    return failed(verify_bracoid(ex->bracoid.g, ex->bracoid.n, ex->bracoid.act));
  });
  std::optional<BraceSearch> search;
  out.step("contains-brace", [&] {
    search = contains_brace(ex->bracoid);
    return std::string();
  });
  if (search) {
    out.note("S", std::to_string(search->stabilizer.size()));
    out.note("complements", std::to_string(search->complements.size()));
    out.note("contains-brace", search->found()
                                   ? "H=" + format_witness(search->brace->h.elements)
                                   : std::string("NotFound"));
  }
  out.write(dir / (ex->name + ".group"), format_group(ex->bracoid.g));
  if (ex->brace) out.write(dir / (ex->name + ".brace"), format_brace(*ex->brace));
  out.write(dir / (ex->name + ".bracoid"), format_bracoid(ex->bracoid));
  write_file(dir / (ex->name + ".report.txt"), out.report().format(false));
  return out.status();
}

int cmd_verify(Options const& o) {
  Output out;
  auto text = read_file(o.file);
  if (o.kind == "group") {
    auto raw = parse_group(text);
    report_checks(out, check_group_table(raw.order, raw.table));
  } else if (o.kind == "brace") {
    auto raw = parse_brace(text);
    report_checks(out, verify_skew_brace(raw.order, raw.star, raw.dot));
  } else if (o.kind == "bracoid") {
    auto raw = parse_bracoid(text);
    Report rep;
    rep.append(check_group_table(raw.g_order, raw.g), "G:");
    rep.append(check_group_table(raw.n_order, raw.n), "N:");
    if (rep.passed()) {
      auto g = FiniteGroup::from_table(raw.g_order, raw.g, "G");
      auto n = FiniteGroup::from_table(raw.n_order, raw.n, "N");
      rep.append(verify_bracoid(g, n, GroupAction{raw.g_order, raw.n_order, raw.act}));
    }
    report_checks(out, rep);
  } else if (o.kind == "semibrace") {
    auto raw = parse_semibrace(text);
    report_checks(out, verify_semibrace(raw.order, raw.dot, raw.plus));
  } else if (o.kind == "solution") {
    report_solution(out, check_braid(parse_solution(text)));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown kind '" + o.kind + "'");
  }
  return out.status();
}

int cmd_derive(Options const& o, std::string const& pipeline) {
  Output out;
  fs::path dir = o.out.empty() ? "." : o.out;
  std::string stem = fs::path(o.file).stem().string();

  if (pipeline == "semibrace-from-bracoid") {
    auto cb = require_brace(load_bracoid(o.file));
    auto sb = bracoid_to_semibrace(cb);
    auto d = decompose(sb);
    out.note("E", std::to_string(d.e_part.size()));
    out.note("G+e", std::to_string(d.h_part.size()));
    out.step("correspondence", [&] { return failed(check_correspondence(cb, sb)); });
    if (o.roundtrip) {
      out.step("roundtrip", [&] {
        return roundtrip_check(cb) ? std::string() : "bracoid round trip differs";
      });
    }
    out.write(dir / (stem + ".semibrace"), format_semibrace(sb));
  } else if (pipeline == "bracoid-from-semibrace") {
    auto sb = load_semibrace(o.file);
    auto cb = semibrace_to_bracoid(sb);
    out.note("N", std::to_string(cb.h.size()));
    out.note("S", std::to_string(cb.s.size()));
    out.step("verify-bracoid", [&] { return failed(check_contained_brace(cb)); });
    if (o.roundtrip) {
      out.step("roundtrip", [&] {
        return roundtrip_check(sb) ? std::string() : "semibrace round trip differs";
      });
    }
    out.write(dir / (stem + ".bracoid"), format_bracoid(cb.bracoid()));
  } else if (pipeline == "solution-from-bracoid") {
    auto cb = require_brace(load_bracoid(o.file));
    LambdaRho lr(cb);
    auto r = o.tilde ? tilde_solution_from_bracoid(cb, lr) : solution_from_bracoid(cb, lr);
    report_solution(out, check_braid(r));
    if (o.roundtrip) {
      out.step("roundtrip", [&] {
        return roundtrip_check(cb) ? std::string() : "bracoid round trip differs";
      });
    }
    out.write(dir / (stem + (o.tilde ? "-tilde.ybe" : ".ybe")), format_solution(r));
  } else if (pipeline == "solution-from-brace") {
    auto raw = parse_brace(read_file(o.file));
    auto b = SkewBrace::make(FiniteGroup::from_table(raw.order, std::move(raw.star), "G*"),
                             FiniteGroup::from_table(raw.order, std::move(raw.dot), "G"));
    auto r = brace_solution(b);
    report_solution(out, check_braid(r));
    out.write(dir / (stem + ".ybe"), format_solution(r));
  } else if (pipeline == "solution-from-semibrace") {
    auto sb = load_semibrace(o.file);
    auto r = solution_from_semibrace(sb);
    report_solution(out, check_braid(r));
    if (o.roundtrip) {
      out.step("roundtrip", [&] {
        return roundtrip_check(sb) ? std::string() : "semibrace round trip differs";
      });
    }
    out.write(dir / (stem + ".ybe"), format_solution(r));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown pipeline '" + pipeline + "'");
  }
  return out.status();
}

int cmd_suite(Options const& o, std::string const& scope) {
  if (scope != "quick" && scope != "full") {
    fail(ErrorCode::InvalidArgument, "scope must be quick or full");
  }
  SuiteOptions so;
  so.full = scope == "full";
  so.seed = o.seed;
  if (!o.out.empty()) so.out = o.out;
  if (!o.inject.empty()) so.inject_fault = o.inject;
  so.live = &std::cout;
  auto rep = run_suite(so);
  std::cout << rep.format().substr(rep.format().rfind("SUMMARY"));
  return rep.passed() ? 0 : 1;
}

int cmd_holomorph(Options const& o) {
  auto g = load_group(o.file);
  auto hol = holomorph(g, {kAutomorphismCap, o.max_order});
  std::cout << "NOTE order " << hol.group.order() << '\n'
            << "NOTE aut " << hol.aut.maps.size() << '\n'
            << "NOTE transitive " << (is_transitive(hol.action) ? "yes" : "no") << '\n';
  std::string stem = fs::path(o.file).stem().string();
  write_file(fs::path(o.out.empty() ? "." : o.out) / (stem + ".hol.group"), format_group(hol.group));
  write_file(fs::path(o.out.empty() ? "." : o.out) / (stem + ".hol.action"), format_action(hol.action));
  return 0;
}

int cmd_complements(Options const& o) {
  auto g = load_group(o.file);
  for (Element x : o.gens) {
    if (x >= g.order()) fail(ErrorCode::InvalidArgument, "generator out of range");
  }
  auto s = subgroup_generated(g, o.gens);
  auto found = find_complements(g, s);
  std::cout << "NOTE S " << s.size() << '\n' << "NOTE complements " << found.size() << '\n';
  for (auto const& h : found) std::cout << "COMPLEMENT " << format_witness(h.elements) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew braces, bracoids, semibraces and Yang-Baxter solutions"};
  app.require_subcommand(1);
  Options o;
  std::string pipeline, scope;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--max-order", o.max_order, "largest group order");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text"}));
  };

  auto* example = app.add_subcommand("example", "build a catalog example");
  example->add_option("name", o.name)->required();
  example->add_option("params", o.params);
  common(example);

  auto* verify = app.add_subcommand("verify", "verify a file");
  verify->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"group", "brace", "bracoid", "semibrace", "solution"}));
  verify->add_option("file", o.file)->required();
  common(verify);

  auto* derive = app.add_subcommand("derive", "derive a structure from a file");
  derive->add_option("pipeline", pipeline)
      ->required()
      ->check(CLI::IsMember({"semibrace-from-bracoid", "bracoid-from-semibrace",
                             "solution-from-bracoid", "solution-from-brace",
                             "solution-from-semibrace"}));
  derive->add_option("file", o.file)->required();
  derive->add_flag("--roundtrip", o.roundtrip, "assert the conversions are mutually inverse");
  derive->add_flag("--tilde", o.tilde, "right nondegenerate variant");
  common(derive);

  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  suite->add_option("scope", scope)->required()->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--inject-fault", o.inject, "corrupt one action row of an instance");
  common(suite);

  auto* hol = app.add_subcommand("holomorph", "holomorph of a group file");
  hol->add_option("groupfile", o.file)->required();
  common(hol);

  auto* comp = app.add_subcommand("complements", "complements of <gens> in a group file");
  comp->add_option("groupfile", o.file)->required();
  comp->add_option("gens", o.gens);
  common(comp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*example) return cmd_example(o);
    if (*verify) return cmd_verify(o);
    if (*derive) return cmd_derive(o, pipeline);
    if (*suite) return cmd_suite(o, scope);
    if (*hol) return cmd_holomorph(o);
    if (*comp) return cmd_complements(o);
  } catch (Error const& e) {
    std::cerr << "ERROR " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

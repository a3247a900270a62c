#include "ybe/suite.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "ybe/catalog.hpp"
#include "ybe/derive.hpp"
#include "ybe/factorization.hpp"
#include "ybe/io.hpp"

namespace ybe {

bool RunReport::passed() const {
  for (auto const& s : steps) {
    if (!s.passed) return false;
  }
  return true;
}

std::string format_step(Step const& s, bool timings) {
  std::string line = "STEP " + s.name + (s.passed ? " PASS " : " FAIL ") +
                     std::to_string(timings ? s.micros : 0);
  if (!s.witness.empty()) line += " " + s.witness;
  return line;
}

std::string RunReport::format(bool timings) const {
  std::string out;
  std::size_t ok = 0;
  for (auto const& s : steps) {
    out += format_step(s, timings) + "\n";
    ok += s.passed;
  }
  out += std::string("SUMMARY ") + (passed() ? "PASS " : "FAIL ") + std::to_string(ok) + "/" +
         std::to_string(steps.size()) + "\n";
  return out;
}

Step timed_step(int criterion, std::string name, std::function<std::string()> const& body,
                std::optional<std::int64_t> limit_micros) {
  Step step;
  step.criterion = criterion;
  step.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  try {
    step.witness = body();
    step.passed = step.witness.empty();
  } catch (Error const& e) {
    step.witness = std::string(to_string(e.code())) + ": " + e.what();
  } catch (std::exception const& e) {
    step.witness = std::string("exception: ") + e.what();
  }
  step.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (step.passed && limit_micros && step.micros > *limit_micros) {
    step.passed = false;
    step.witness = "time limit " + std::to_string(*limit_micros) + "us exceeded";
  }
  return step;
}

namespace {

constexpr std::int64_t kSecond = 1000000;

std::string failed(Report const& rep) {
  auto const* bad = rep.first_failure();
  if (!bad) return {};
  return bad->name + (bad->witness.empty() ? "" : " at " + format_witness(bad->witness));
}

std::string property(std::string const& what, Property const& p) {
  return p.holds ? std::string() : what + " fails at " + format_witness(p.witness);
}

// Everything derived from one catalog instance.
struct Prepared {
  std::optional<ExampleInstance> ex;
  std::optional<BraceSearch> search;
  std::optional<LambdaRho> lr;
  std::optional<Semibrace> sb;
  std::optional<SolutionMap> r;
  std::optional<SolutionMap> tilde;

  ContainedBrace const* cb() const {
    return search && search->brace ? &*search->brace : nullptr;
  }
};

class Runner {
 public:
  explicit Runner(SuiteOptions const& options) : _options(options) {}

  void step(int criterion, std::string name, std::function<std::string()> const& body,
            std::optional<std::int64_t> limit = std::nullopt) {
    _report.steps.push_back(timed_step(criterion, std::move(name), body, limit));
    if (_options.live) *_options.live << format_step(_report.steps.back()) << std::endl;
  }

  void instance(std::string const& label, std::function<ExampleInstance()> const& build,
                bool scan_solutions = true) {
    Prepared p;
    instance_steps(label, build, scan_solutions, p);
    if (_options.out && p.ex) write_artifacts(label, p);
  }

  void instance_steps(std::string const& label, std::function<ExampleInstance()> const& build,
                      bool scan_solutions, Prepared& p) {
    step(0, "build:" + label, [&] {
      p.ex = build();
      return std::string();
    });
    if (!p.ex) return;
    if (_options.inject_fault == label) {
      auto& act = p.ex->bracoid.act;
      if (act.actor_order > 1 && act.points > 1) {
        std::swap(act.table[act.points], act.table[act.points + 1]);
      }
    }
    auto const& ex = *p.ex;

    step(1, "axioms:" + label, [&]() -> std::string {
      if (ex.brace) {
        auto rep = verify_skew_brace(ex.brace->order(), ex.brace->star().table(),
                                     ex.brace->dot().table());
        if (!rep.passed()) return "brace " + failed(rep);
      }
      auto rep = verify_bracoid(ex.bracoid.g, ex.bracoid.n, ex.bracoid.act);
      if (!rep.passed()) return "bracoid " + failed(rep);
      p.search = contains_brace(ex.bracoid);
      if (auto const* cb = p.cb()) {
        p.lr.emplace(*cb);
        p.sb = bracoid_to_semibrace(*cb, *p.lr);
        auto srep = verify_semibrace(p.sb->order(), p.sb->dot().table(), p.sb->plus_table());
        if (!srep.passed()) return "semibrace " + failed(srep);
      }
      return {};
    }, 10 * kSecond);

    exact_counts(label, p);
    auto const* cb = p.cb();
    if (!cb || !p.lr || !p.sb) return;
    auto const& lr = *p.lr;
    auto const& sb = *p.sb;

    step(2, "roundtrip:" + label, [&]() -> std::string {
      if (!roundtrip_check(*cb)) return "bracoid->semibrace->bracoid differs";
      if (!roundtrip_check(sb)) return "semibrace->bracoid->semibrace differs";
      return {};
    });
    step(3, "lemmas:" + label, [&] {
      return failed(check_lambda_rho(*cb, lr, {24, 10000, _options.seed}));
    });
    step(7, "semibrace-structure:" + label, [&] { return failed(check_correspondence(*cb, sb)); });
    step(0, "gamma:" + label, [&]() -> std::string {
      if (auto w = failed(check_bracoid_gamma(*cb)); !w.empty()) return w;
      if (ex.brace) return failed(check_brace_gamma(*ex.brace));
      return {};
    });
    step(0, "l-maps:" + label, [&]() -> std::string {
      auto rep = check_l_maps(sb);
      for (auto const& c : rep.checks) {
        if (!c.passed && c.name != "l-bijective") return c.name + " at " + format_witness(c.witness);
      }
      return {};
    });
    step(0, "matched-pair:" + label, [&]() -> std::string {
      auto mp = to_matched_pair(*cb);
      auto rep = check_matched_pair(mp.pair);
      if (!rep.passed()) return failed(rep);
      if (!is_factorization_isomorphism(cb->g, cb->h, cb->s, mp.product)) {
        return "(h,s) -> hs is not an isomorphism";
      }
      return {};
    });
    if (ex.brace && ex.brace->order() <= 24) brace_solution_step(label, *ex.brace);
    if (cb->h.size() <= 24) brace_solution_step(label + "/H", contained_skew_brace(*cb));

    if (!scan_solutions) return;
    step(4, "solutions:" + label, [&]() -> std::string {
      p.r = solution_from_bracoid(*cb, lr);
      p.tilde = tilde_solution_from_bracoid(*cb, lr);
      auto rep = check_braid(*p.r);
      if (auto w = property("braid", rep.braid); !w.empty()) return w;
      if (auto w = property("left nondegeneracy", rep.left_nondegenerate); !w.empty()) return w;
      auto trep = check_braid(*p.tilde);
      if (auto w = property("tilde braid", trep.braid); !w.empty()) return w;
      if (auto w = property("tilde right nondegeneracy", trep.right_nondegenerate); !w.empty()) {
        return w;
      }
      if (!solutions_equal(tau_iota_conjugate(*p.r), *p.tilde)) return "tau iota r iota tau != r~";
      if (!solutions_equal(*p.r, solution_from_semibrace(sb))) return "r != semibrace solution";
      return {};
    }, 60 * kSecond);
    if (p.r) restriction_step(label, *cb, *p.r);
  }

  void random_braces(std::size_t count) {
    step(2, "roundtrip:random-" + std::to_string(count), [&]() -> std::string {
      BraceSampler sampler(_options.seed);
      for (std::size_t i = 0; i < count; ++i) {
        std::string label;
        auto b = sampler.bracoid(&label);
        std::string where = std::to_string(i) + ":" + label;
        auto rep = verify_bracoid(b.g, b.n, b.act);
        if (!rep.passed()) return where + " " + failed(rep);
        auto search = contains_brace(b);
        if (!search.found()) return where + " has no contained brace";
        auto const& cb = *search.brace;
        auto sb = bracoid_to_semibrace(cb);
        if (!roundtrip_check(cb)) return where + " bracoid round trip";
        if (!roundtrip_check(sb)) return where + " semibrace round trip";
        if (auto w = failed(check_correspondence(cb, sb)); !w.empty()) return where + " " + w;
      }
      return {};
    });
  }

  void module_checks() {
    step(0, "strong-ideals:abelianmap-3-5", [&]() -> std::string {
      auto ex = abelianmap_example(3, 5);
      std::size_t ideals = 0;
      for (auto const& s : all_subgroups(ex.brace->dot())) {
        bool def = is_strong_left_ideal(*ex.brace, s);
        if (def != commutator_criterion(*ex.brace, s)) return "disagreement at " + format_witness(s.elements);
        ideals += def;
      }
      if (!is_strong_left_ideal(*ex.brace, *ex.ideal)) return "<x^q, z> is not a strong left ideal";
      return ideals ? std::string() : "no strong left ideals";
    });
    if (!_options.full) return;
    step(0, "holomorph:abelianmap-3-5", [&]() -> std::string {
      auto ex = abelianmap_example(3, 5);
      auto img = regular_rep_in_holomorph(*ex.brace, {kAutomorphismCap, 2880});
      return img.image.size() == 60 ? std::string() : "image order " + std::to_string(img.image.size());
    });
  }

  RunReport finish() {
    if (_options.out) write_file(*_options.out / "report.txt", _report.format(false));
    return std::move(_report);
  }

 private:
  void exact_counts(std::string const& label, Prepared const& p) {
    auto const& ex = *p.ex;
    if (label == "gl3f2") {
      step(6, "counts:gl3f2", [&]() -> std::string {
        if (ex.bracoid.g.order() != 168) return "|J| = " + std::to_string(ex.bracoid.g.order());
        if (!p.search) return "no search";
        if (p.search->stabilizer.size() != 21) {
          return "|S| = " + std::to_string(p.search->stabilizer.size());
        }
        bool order8 = false;
        for (auto const& h : p.search->complements) order8 |= h.size() == 8;
        if (!order8) return "no complement of order 8";
        if (!p.search->found()) return "contains_brace failed";
        return {};
      });
    } else if (label.rfind("cyclic-pq", 0) == 0) {
      step(6, "counts:" + label, [&]() -> std::string {
        if (ex.bracoid.g.order() != 20) return "|J| = " + std::to_string(ex.bracoid.g.order());
        if (!p.search) return "no search";
        if (p.search->stabilizer.size() != 2) {
          return "|S| = " + std::to_string(p.search->stabilizer.size());
        }
        if (!p.search->complements.empty() || p.search->found()) return "complement found";
        return {};
      });
    } else if (ex.expected_complement) {
      step(0, "complement:" + label, [&]() -> std::string {
        if (!p.search) return "no search";
        for (auto const& h : p.search->complements) {
          if (h == *ex.expected_complement) return {};
        }
        return "expected complement missing";
      });
    }
  }

  void brace_solution_step(std::string const& label, SkewBrace const& b) {
    step(5, "brace-solution:" + label, [&]() -> std::string {
      auto rep = check_braid(brace_solution(b));
      for (auto const& [what, prop] :
           {std::pair{"braid", &rep.braid}, {"bijectivity", &rep.bijective},
            {"left nondegeneracy", &rep.left_nondegenerate},
            {"right nondegeneracy", &rep.right_nondegenerate}}) {
        if (auto w = property(what, *prop); !w.empty()) return w;
      }
      return {};
    });
  }

  void restriction_step(std::string const& label, ContainedBrace const& cb, SolutionMap const& r) {
    step(0, "restrictions:" + label, [&]() -> std::string {
      auto on_h = restrict_solution(r, cb.h.elements);
      if (auto const* nc = std::get_if<NotClosed>(&on_h)) {
        return "not closed on H at " + format_witness(std::vector<Element>{nc->x, nc->y});
      }
      auto brace = SkewBrace::make(opposite_group(cb.star_h), cb.dot_h);
      auto expected = brace_solution(brace);
      auto const& got = std::get<SolutionMap>(on_h);
      if (got.left != expected.left || got.right != expected.right) {
        return "restriction to H is not the brace solution";
      }
      auto on_s = restrict_solution(r, cb.s.elements);
      if (std::holds_alternative<NotClosed>(on_s)) return "not closed on S";
      auto const& rs = std::get<SolutionMap>(on_s);
      std::size_t m = cb.s.size();
      for (Element i = 0; i < m; ++i) {
        for (Element j = 0; j < m; ++j) {
          auto [l, rr] = rs(i, j);
          if (cb.s.elements[l] != cb.g.mul(cb.s.elements[i], cb.s.elements[j]) || rr != 0) {
            return "restriction to S differs from (xy, e) at " +
                   format_witness(std::vector<Element>{cb.s.elements[i], cb.s.elements[j]});
          }
        }
      }
      return {};
    });
  }

  void write_artifacts(std::string const& label, Prepared const& p) {
    auto const& dir = *_options.out;
    if (p.ex->brace) write_file(dir / (label + ".brace"), format_brace(*p.ex->brace));
    write_file(dir / (label + ".bracoid"), format_bracoid(p.ex->bracoid));
    if (p.sb) write_file(dir / (label + ".semibrace"), format_semibrace(*p.sb));
    if (p.r) write_file(dir / (label + ".ybe"), format_solution(*p.r));
    if (p.tilde) write_file(dir / (label + "-tilde.ybe"), format_solution(*p.tilde));
  }

  SuiteOptions _options;
  RunReport _report;
};

}  // namespace

RunReport run_suite(SuiteOptions const& options) {
  Runner run(options);
  for (std::size_t n = 2; n <= 6; ++n) {
    run.instance("trivial-brace-" + std::to_string(n) + "-0",
                 [n] { return trivial_brace_example(n, 0); });
  }
  run.instance("trivial-brace-6-1", [] { return trivial_brace_example(6, 1); });
  run.instance("semidirect-3-2", [] { return semidirect_example(3, 2); });
  run.instance("abelianmap-3-5", [] { return abelianmap_example(3, 5); });
  run.instance("gl3f2", [&] { return gl3f2_example(options.seed); }, options.full);
  run.instance("cyclic-pq-5-2", [] { return cyclic_pq_example(5, 2); });
  run.random_braces(options.full ? 100 : 25);
  run.module_checks();
  return run.finish();
}

}  // namespace ybe

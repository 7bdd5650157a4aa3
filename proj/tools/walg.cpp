#include <CLI11.hpp>

#include <iostream>

#include "walg/errors.hpp"
#include "walg/parallel.hpp"
#include "walg/pipelines.hpp"

using namespace walg;

namespace {

struct Common {
  std::string out, format = "table";
  bool strict = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "write the JSON report here");
  sub->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "table"}));
  sub->add_flag("--strict", c.strict, "exit 1 when a computed result differs from a displayed formula");
}

int emit(const VerificationReport& r, const Common& c) {
  if (!c.out.empty()) save_report(r, c.out);
  if (c.format == "json")
    std::cout << dump(r.to_json());
  else
    std::cout << r.table();
  if (!r.structural_ok()) return 1;
  if (c.strict && !r.comparisons_ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walg: Whittaker vectors and the tensor structure for the subregular W-algebra of gl_N"};
  app.require_subcommand(1);
  Common common;

  ComputeTArgs targs;
  bool literal = false;
  auto* ct = app.add_subcommand("compute-T", "one T generator, optionally truncated");
  ct->add_option("--pyramid", targs.pyramid, "column heights \"1,3,2,1\" or \"subreg:N\"")->required();
  ct->add_option("--i", targs.i)->required();
  ct->add_option("--j", targs.j)->required();
  ct->add_option("--x", targs.x)->required();
  ct->add_option("--r", targs.r)->required()->check(CLI::NonNegativeNumber);
  ct->add_option("--truncate", targs.truncate, "drop this many columns")->check(CLI::NonNegativeNumber);
  ct->add_flag("--literal-signs", literal, "sigma weights without the target row");
  add_common(ct, common);

  int N = 3;
  bool canonical = false, semiclassical = false, compare = false;
  auto* vw = app.add_subcommand("verify-whittaker", "build and check the vectors v~_i (and the canonical v_i)");
  vw->add_option("--N", N)->required()->check(CLI::Range(2, kMaxN));
  vw->add_flag("--canonical", canonical);
  add_common(vw, common);

  auto* cj = app.add_subcommand("compute-J", "the J matrix on C^N (x) C^N");
  cj->add_option("--N", N)->required()->check(CLI::Range(2, kMaxN));
  cj->add_flag("--semiclassical", semiclassical, "also compute the first hbar order");
  cj->add_flag("--compare", compare, "compare the first hbar order with the closed forms");
  add_common(cj, common);

  auto* co = app.add_subcommand("check-omega", "wonderbolic form and its inverse");
  co->add_option("--N", N)->required()->check(CLI::Range(3, kMaxN));
  add_common(co, common);

  auto* st = app.add_subcommand("selftest", "engine health and every pipeline at one N");
  st->add_option("--N", N)->required()->check(CLI::Range(2, 8));
  add_common(st, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    configure_threads_from_env();
    if (*ct) {
      targs.convention = literal ? SignConvention::Literal : SignConvention::IncludeTarget;
      return emit(run_compute_t(targs), common);
    }
    if (*vw) return emit(run_verify_whittaker(N, canonical), common);
    if (*cj) return emit(run_compute_j(N, semiclassical, compare), common);
    if (*co) return emit(run_check_omega(N), common);
    if (*st) return emit(run_selftest(N), common);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

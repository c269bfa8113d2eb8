// Runs the full verification twice with the default configuration and prints
// one PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lg36/verify.hpp"

namespace {

using lg36::VerificationReport;

struct Criterion {
  std::string name;
  std::vector<std::string> checks;
  std::vector<std::string> suites;  // whose time counts against the limit
  double limit_seconds;
  std::string what;
};

const lg36::SuiteReport* suite(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.suites)
    if (s.name == name) return &s;
  return nullptr;
}

bool report(const Criterion& c, const VerificationReport& r) {
  bool ok = true;
  double check_secs = 0;
  std::string detail;
  for (const auto& id : c.checks) {
    const auto* chk = r.find(id);
    if (!chk) {
      ok = false;
      detail += " " + id + "=missing";
      continue;
    }
    ok = ok && chk->ok();
    check_secs += chk->seconds;
    detail += " " + id + "=" + std::to_string(chk->passed) + "/" + std::to_string(chk->total);
  }
  double secs = c.suites.empty() ? check_secs : 0;
  for (const auto& s : c.suites)
    if (const auto* sr = suite(r, s)) secs += sr->seconds;
  const bool in_time = secs < c.limit_seconds;
  std::printf("%s %s  %s  [%.2fs < %.0fs]%s\n", c.name.c_str(), ok && in_time ? "PASS" : "FAIL", c.what.c_str(), secs,
              c.limit_seconds, detail.c_str());
  return ok && in_time;
}

}  // namespace

int main() {
  const lg36::SessionConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport a = lg36::run_suite(cfg, "all");
  const VerificationReport b = lg36::run_suite(cfg, "all");
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::vector<Criterion> criteria{
      {"AC1", {"core.w_dim"}, {}, 1, "W has dimension 14"},
      {"AC2", {"core.exp_chart", "core.n_quad"}, {"core"}, 30, "exp chart lands in the quadrics, 21 quadrics"},
      {"AC3", {"secants.bisecant", "secants.length2", "secants.tangent"}, {"secants"}, 60, "bisecant decomposition"},
      {"AC4", {"secants.omega"}, {"secants"}, 60, "omega witnesses"},
      {"AC5", {"cubics.net_secant", "cubics.net_secant_degenerate"}, {"cubics"}, 30, "unique secant through net points"},
      {"AC6", {"cubics.orderings", "cubics.sigma_roundtrip"}, {"cubics"}, 60, "cubic through a triple"},
      {"AC7",
       {"fibration.proportionality", "fibration.permutation", "fibration.distinct"},
       {"fibration"},
       60,
       "fibration map"},
      {"AC8",
       {"dual-quartic.kernel", "dual-quartic.heldout", "dual-quartic.lines", "dual-quartic.seeds"},
       {"dual-quartic"},
       300,
       "dual quartic interpolation"},
      {"AC9", {"group.residual", "group.involution", "group.marks_on_fx"}, {"group"}, 180, "residual cubics"},
      {"AC10",
       {"group.reversal", "group.involution", "group.block_commute", "group.block_inverse", "group.chain_point",
        "group.fiber"},
       {"group"},
       180,
       "chain identities"},
  };

  bool all = true;
  for (const auto& c : criteria) all = report(c, a) && all;

  const bool same = a.body_text() == b.body_text();
  const bool ac11 = a.ok() && b.ok() && same && total < 600;
  std::printf("AC11 %s  full run twice, identical reports  [%.2fs < 600s] ok=%d/%d identical=%d\n",
              ac11 ? "PASS" : "FAIL", total, a.ok(), b.ok(), same);
  all = all && ac11;
  if (!all) std::fputs(a.text().c_str(), stdout);
  return all ? 0 : 1;
}

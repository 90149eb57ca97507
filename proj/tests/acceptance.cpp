// One line per acceptance criterion. Exit status is 0 when every FAIL is on the
// list of analysed failures below.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

#include "tama/suites.hpp"

namespace {

using tama::CheckRecord;
using tama::RunConfig;

struct Group {
  std::string label;
  std::string family;
  int rank;
  int ambient;
};

const Group kS3{"S3 on C^3", "A", 2, 3};
const Group kS4{"S4 on C^4", "A", 3, 4};
const Group kS5{"S5 on C^5", "A", 4, 5};
const Group kB3{"B3", "B", 3, 0};
const Group kA13{"A1^3", "A1^3", 3, 0};
const Group kA14{"A1^4", "A1^4", 4, 0};
const Group kA16{"A1^6", "A1^6", 6, 0};

struct Run {
  std::string label;
  std::vector<CheckRecord> checks;
  std::vector<tama::Finding> findings;
  int dim = 0;
};

Run run(const Group& g, std::vector<std::string> suites, const std::function<void(RunConfig&)>& tweak = {}) {
  RunConfig cfg;
  cfg.family = g.family;
  cfg.rank = g.rank;
  cfg.ambient = g.ambient;
  cfg.suites = std::move(suites);
  if (tweak) tweak(cfg);
  tama::Context ctx(cfg);
  auto [checks, findings] = tama::run_suites(ctx);
  return {g.label, std::move(checks), std::move(findings), ctx.dim()};
}

using Pred = std::function<bool(const CheckRecord&)>;

Pred named(std::set<std::string> names) {
  return [names](const CheckRecord& c) { return names.count(c.check) > 0; };
}

Pred prefixed(std::string p) {
  return [p](const CheckRecord& c) { return c.check.rfind(p, 0) == 0; };
}

/// Tally of selected checks across runs.
struct Tally {
  int pass = 0;
  int total = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;

  void add(const Run& r, const Pred& p) {
    for (const auto& c : r.checks) {
      if (!p(c)) continue;
      ++total;
      if (c.status == "pass")
        ++pass;
      else if (c.status == "fail")
        failures.push_back(r.label + ": " + c.check + " [" + c.witness.substr(0, 90) + "]");
      else
        skipped.push_back(r.label + ": " + c.check);
    }
  }
  bool ok() const { return failures.empty() && total > 0; }
};

const tama::Finding* find(const Run& r, const std::string& topic_prefix) {
  for (const auto& f : r.findings)
    if (f.topic.rfind(topic_prefix, 0) == 0) return &f;
  return nullptr;
}

// Criteria whose failure comes from the identity as printed and is analysed in the report.
const std::map<int, std::string> kExpected{
    {3, "[O_ij,O_ki] as printed carries [Oc_i,Oc_j]; the verified reading is [Oc_j,Oc_k]"},
    {6, "the bullet is conjugate-linear with e_j -> -e_j, so D^bullet = (-1)^d D and d odd fails"},
};

int unexpected = 0;

void line(int n, const std::string& title, bool ok, const std::string& detail, double seconds) {
  std::string status = ok ? "PASS" : "FAIL";
  if (!ok) {
    auto it = kExpected.find(n);
    if (it != kExpected.end())
      status += " (expected: " + it->second + ")";
    else
      ++unexpected;
  }
  std::printf("%-4s criterion %2d  %s  |  %s  |  %.1f s\n", status.substr(0, 4).c_str(), n, title.c_str(), detail.c_str(),
              seconds);
  if (status.size() > 4) std::printf("      %s\n", status.substr(5).c_str());
  std::fflush(stdout);
}

std::string tally_detail(const Tally& t) {
  std::string s = std::to_string(t.pass) + "/" + std::to_string(t.total) + " checks pass";
  for (const auto& f : t.failures) s += "\n      fail: " + f;
  return s;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::set<std::string> brackets{"[F+,F-] = H", "[H,F+] = F+", "[H,F-] = -F-", "[F+,F+] = 2E+", "[F-,F-] = -2E-",
                                       "[E+,E-] = H", "[H,E+] = 2E+", "[H,E-] = -2E-", "[F+,E-] = F-", "[F-,E+] = F+"};

  // 1 and 2 share the osp runs
  auto t0 = clock::now();
  std::vector<Run> osp_runs;
  for (const Group& g : {kS3, kS4, kB3, kA16}) osp_runs.push_back(run(g, {"osp"}));
  double osp_time = since(t0);
  {
    Tally t;
    for (const auto& r : osp_runs) t.add(r, named(brackets));
    line(1, "osp(1|2) bracket table, symbolic c, S3/C^3 S4/C^4 B3 A1^6", t.ok(), tally_detail(t), osp_time);
  }
  {
    Tally t;
    for (const auto& r : osp_runs) t.add(r, named({"S^2 = Omega + 1/4"}));
    line(2, "S^2 = Omega + 1/4, same four groups", t.ok(), tally_detail(t), osp_time);
  }

  // 3
  {
    t0 = clock::now();
    std::vector<Run> runs;
    runs.push_back(run(kS4, {"relations"}, [](RunConfig& c) { c.max_arity = 4; }));
    runs.push_back(run(kB3, {"relations"}, [](RunConfig& c) { c.max_arity = 4; }));
    runs.push_back(run(kA16, {"relations"}, [](RunConfig& c) { c.single_c = true; }));
    std::set<std::string> printed, corrected;
    for (const auto& rel : tama::relation_catalogue()) (rel.as_printed ? printed : corrected).insert(rel.id);
    Tally t;
    Tally tc;
    for (const auto& r : runs) {
      t.add(r, named(printed));
      tc.add(r, named(corrected));
    }
    std::string detail = tally_detail(t) + "\n      corrected reading: " + std::to_string(tc.pass) + "/" + std::to_string(tc.total) + " pass";
    for (const auto& s : t.skipped) detail += "\n      skipped: " + s;
    line(3, "relation catalogue, all distinct index tuples, S4/C^4 B3 (<= 4 indices), A1^6 single c", t.ok(), detail, since(t0));
  }

  // 4
  {
    t0 = clock::now();
    Run r = run(kS4, {"osp"});
    Tally t;
    t.add(r, [](const CheckRecord& c) {
      return c.check == "P(S) = -2(Omega + 1/4)" || c.check == "P(Omega_sl2) = 3 Omega" || c.check.rfind("-(t/2) P(e_A) = O_A", 0) == 0;
    });
    line(4, "projection identities on S4/C^4 (d = 4, |A| <= 3)", t.ok(), tally_detail(t), since(t0));
  }

  // 5
  {
    t0 = clock::now();
    Run s4 = run(kS4, {"centre"});
    Tally t;
    t.add(s4, named({"Omega central"}));
    std::string which;
    for (const Group& g : {kA13, kB3}) {
      Run r = run(g, {"centre"});
      t.add(r, named({"Omega central", "second central generator"}));
      for (const auto& c : r.checks)
        if (c.check == "second central generator") which += "\n      " + g.label + " " + c.witness;
    }
    line(5, "centre: Omega on S4/C^4, A1^3, B3; second generator in the w0 = -1 branch", t.ok(), tally_detail(t) + which, since(t0));
  }

  // 6
  {
    t0 = clock::now();
    Tally t;
    std::string notes;
    for (const Group& g : {kS4, kA13}) {
      Run r = run(g, {"vogan"});
      t.add(r, [](const CheckRecord& c) { return c.check != "D rho(w~) = eps rho(w~) D"; });
      if (const auto* f = find(r, "self-adjointness of D"))
        notes += "\n      " + g.label + ": D^bullet = -D is " + (f->detail["D^bullet = -D"].get<bool>() ? "true" : "false");
    }
    line(6, "D^bullet = D, D^2, D_w^2 identity, decomposition, D_w^bullet, on S4/C^4 and A1^3", t.ok(), tally_detail(t) + notes,
         since(t0));
  }

  // 7
  {
    t0 = clock::now();
    Tally t;
    for (const Group& g : {kS3, kS4, kS5, kA13, kA14}) t.add(run(g, {"admissible"}), named({"class sums span the epsilon-centre"}));
    line(7, "epsilon-centre basis equals brute force, S3 S4 S5 (natural), A1^3, A1^4", t.ok(), tally_detail(t), since(t0));
  }

  // 8
  {
    t0 = clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5; ++n)
      for (int d : {n, n + 1}) {
        Run r = run({"S" + std::to_string(n) + " on C^" + std::to_string(d), "A", n - 1, d}, {"admissible"});
        const auto* f = find(r, "S_" + std::to_string(n) + " cycle types");
        auto brute = f->detail["brute_force"].get<std::vector<std::string>>();
        auto rule = f->detail["parity_rule"].get<std::vector<std::string>>();
        auto schur = f->detail["splitting_criterion"].get<std::vector<std::string>>();
        auto join = [](const std::vector<std::string>& v) {
          std::string s;
          for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
          return s.empty() ? std::string("none") : s;
        };
        detail += "\n      S" + std::to_string(n) + ", d = " + std::to_string(d) + ": brute force " + join(brute);
        if (d % 2 == 0) {
          ok = ok && rule == brute;
          if (rule != brute) detail += "; MISMATCH with rule " + join(rule);
          if (n == 4) {
            ok = ok && brute == std::vector<std::string>{"(3,1)"};
            detail += " (exactly (3,1): " + std::string(brute == std::vector<std::string>{"(3,1)"} ? "yes" : "no") + ")";
          }
        } else {
          ok = ok && schur == brute;
          detail += "; splitting criterion " + std::string(schur == brute ? "agrees" : "DISAGREES");
          if (rule != brute) detail += "; DISCREPANCY: the no-even-parts rule predicts " + join(rule);
        }
      }
    line(8, "S_n admissible classes vs brute force, n = 3,4,5, d = n and n+1", ok, "d even: rule; d odd: splitting criterion" + detail,
         since(t0));
  }

  // 9
  {
    t0 = clock::now();
    Tally t;
    std::string nz;
    for (const Group& g : {kS3, kA13}) {
      Run r = run(g, {"filtration"});
      t.add(r, named({"filtration property"}));
      if (const auto* f = find(r, "random monomial pairs"))
        nz += "\n      " + g.label + ": " + f->detail["nonzero differences"].dump() + " nonzero differences of " + f->detail["pairs"].dump();
    }
    line(9, "filtration property, 100 random pairs of degree <= 3, S3/C^3 and A1^3", t.ok(), tally_detail(t) + nz, since(t0));
  }

  // 10
  {
    t0 = clock::now();
    Run r = run(kA13, {"cohomology"}, [](RunConfig& c) { c.max_degree = 4; });
    Tally sq;
    sq.add(r, prefixed("D^2 = Omega + 1/4 on degree"));
    Tally imp;
    imp.add(r, named({"ker cap im = 0 under a positive Hermitian form"}));
    bool table = find(r, "cohomology table") != nullptr;
    bool ok = sq.ok() && sq.total == 5 && table && imp.failures.empty();
    std::string detail = "D^2: " + tally_detail(sq) + "; cohomology table " + (table ? "produced" : "missing");
    for (const auto& c : r.checks)
      if (c.check == "ker cap im = 0 under a positive Hermitian form") detail += "; implication " + c.status + " (" + c.witness + ")";
    line(10, "polynomial spinors on A1^3, degrees 0..4, symbolic c", ok, detail, since(t0));
  }

  return unexpected ? 1 : 0;
}

#pragma once

// Verification suites: each suite turns a configured group into a list of check
// records and findings.

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "tama/admissible.hpp"
#include "tama/polyspinor.hpp"
#include "tama/report.hpp"
#include "tama/tama.hpp"

namespace tama {

/// Rational values for s and the c_k.
struct Specialisation {
  Rational s{1};
  std::vector<Rational> c;
};

/// Parses "s=1,c1=1/3,c2=2"; missing c_k default to 0 only if no c is given.
inline Specialisation parse_specialisation(const std::string& text) {
  Specialisation sp;
  bool have_s = false;
  std::map<int, Rational> cs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("expected key=value in specialisation, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    Rational q;
    if (val.empty() || q.set_str(val, 10) != 0) throw Error("not a rational number: '" + val + "'");
    q.canonicalize();
    if (key == "s") {
      if (sgn(q) <= 0) throw Error("s must be positive");
      sp.s = q;
      have_s = true;
    } else if (key.size() >= 2 && key[0] == 'c') {
      int k = 0;
      try {
        std::size_t pos = 0;
        k = std::stoi(key.substr(1), &pos);
        if (pos + 1 != key.size()) k = 0;
      } catch (const std::exception&) {
        k = 0;
      }
      if (k < 1 || k > 7) throw Error("bad parameter name '" + key + "'");
      cs[k] = q;
    } else {
      throw Error("bad parameter name '" + key + "'");
    }
  }
  if (!have_s) throw Error("specialisation needs a value for s");
  for (const auto& [k, v] : cs) {
    if (std::size_t(k) != sp.c.size() + 1) throw Error("c values must be given as c1, c2, ... without gaps");
    sp.c.push_back(v);
  }
  return sp;
}

inline std::string specialisation_string(const Specialisation& sp) {
  std::string out = "s=" + sp.s.get_str();
  for (std::size_t k = 0; k < sp.c.size(); ++k) out += ",c" + std::to_string(k + 1) + "=" + sp.c[k].get_str();
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"osp", "relations", "centre", "vogan", "admissible", "cohomology", "filtration"};
  return names;
}

struct RunConfig {
  std::string family = "A";
  int rank = 2;
  int ambient = 0;
  bool single_c = false;
  std::optional<Specialisation> specialize;
  std::vector<std::string> suites{"all"};
  int max_degree = 3;
  int max_arity = 6;
  std::size_t max_group = 5000;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  int filtration_pairs = 100;
  bool timing = false;

  /// Suites to run, expanded and in canonical order.
  std::vector<std::string> resolved_suites() const {
    std::vector<std::string> out;
    bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
    for (const auto& n : suite_names())
      if (all || std::find(suites.begin(), suites.end(), n) != suites.end()) out.push_back(n);
    return out;
  }

  void validate() const {
    for (const auto& s : suites)
      if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw Error("unknown suite '" + s + "'");
    if (rank < 1) throw Error("rank must be positive");
    if (max_degree < 0 || max_arity < 1 || max_group < 1 || jobs < 1 || filtration_pairs < 0)
      throw Error("bounds must be positive");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["rank"] = rank;
    j["ambient"] = ambient;
    j["single_c"] = single_c;
    j["specialize"] = specialize ? nlohmann::ordered_json(specialisation_string(*specialize)) : nlohmann::ordered_json(nullptr);
    j["suites"] = resolved_suites();
    j["max_degree"] = max_degree;
    j["max_arity"] = max_arity;
    j["max_group"] = max_group;
    j["seed"] = seed;
    j["filtration_pairs"] = filtration_pairs;
    return j;
  }
};

/// Everything built once per run.
class Context {
 public:
  explicit Context(const RunConfig& cfg) : cfg_(cfg) {
    RootDatum rd = RootDatum::parse(cfg.family, cfg.rank, cfg.ambient);
    Parameters params = cfg.specialize ? Parameters::rational(rd, cfg.specialize->s, cfg.specialize->c)
                                       : Parameters::symbolic(rd, cfg.single_c);
    A_ = std::make_unique<Algebra>(rd, params, cfg.max_group);
    osp_ = std::make_unique<Osp>(*A_);
    T_ = std::make_unique<Tama>(*A_, *osp_);
    P_ = std::make_unique<PinGroup>(A_->root_datum(), A_->group());
  }

  const RunConfig& config() const { return cfg_; }
  const Algebra& algebra() const { return *A_; }
  const Osp& osp() const { return *osp_; }
  const Tama& tama() const { return *T_; }
  const PinGroup& pin() const { return *P_; }
  int dim() const { return A_->dim(); }

 private:
  RunConfig cfg_;
  std::unique_ptr<Algebra> A_;
  std::unique_ptr<Osp> osp_;
  std::unique_ptr<Tama> T_;
  std::unique_ptr<PinGroup> P_;
};

struct Outcome {
  std::string status = "pass";
  std::string witness;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string w) { return {"fail", std::move(w)}; }
  static Outcome skip(std::string why) { return {"skipped", std::move(why)}; }
  static Outcome of(bool ok, std::string w) { return ok ? pass() : fail(std::move(w)); }
};

inline Outcome residual_outcome(const Algebra& A, const HCElement& r, const std::string& prefix = "") {
  if (r.is_zero()) return Outcome::pass();
  return Outcome::fail(prefix + hc_witness(A, r));
}

struct CheckTask {
  std::string suite;
  std::string check;
  std::string anchor;
  std::function<Outcome()> run;
};

/// Runs tasks on `jobs` threads; records come back in task order.
inline std::vector<CheckRecord> run_tasks(const std::vector<CheckTask>& tasks, int jobs, bool timing) {
  std::vector<CheckRecord> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const auto& t = tasks[k];
      auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = t.run();
      } catch (const PreconditionFailed& e) {
        o = Outcome::fail(std::string(e.what()) + ": " + e.witness());
      } catch (const Error& e) {
        o = Outcome::fail(e.what());
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      out[k] = CheckRecord{t.suite, t.check, t.anchor, o.status, timing ? ms : 0, o.witness};
    }
  };
  int n = std::max(1, std::min<int>(jobs, int(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

inline std::string indices_string(const Indices& u) {
  std::string s = "(";
  for (std::size_t k = 0; k < u.size(); ++k) s += (k ? "," : "") + std::to_string(u[k] + 1);
  return s + ")";
}

/// Sorted index tuples of length n.
inline std::vector<Indices> sorted_tuples(int d, int n) {
  std::vector<Indices> out;
  for (const auto& u : distinct_tuples(d, n))
    if (std::is_sorted(u.begin(), u.end())) out.push_back(u);
  return out;
}

/// Checks f over tuples, failing on the first nonzero residual.
inline Outcome over_tuples(const Algebra& A, const std::vector<Indices>& tuples,
                           const std::function<HCElement(const Indices&)>& f) {
  for (const auto& u : tuples) {
    HCElement r = f(u);
    if (!r.is_zero()) return Outcome::fail("u=" + indices_string(u) + ": " + hc_witness(A, r));
  }
  return Outcome::pass();
}

/// Number of tuples on which f is nonzero.
inline std::size_t count_failures(const std::vector<Indices>& tuples, const std::function<HCElement(const Indices&)>& f) {
  std::size_t n = 0;
  for (const auto& u : tuples)
    if (!f(u).is_zero()) ++n;
  return n;
}

// ---------------------------------------------------------------- osp

inline void osp_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const Osp& osp = ctx.osp();
  const Tama& T = ctx.tama();
  const std::string suite = "osp";
  auto table = std::make_shared<std::vector<BracketCheck>>(osp.bracket_table());
  for (std::size_t k = 0; k < table->size(); ++k)
    tasks.push_back({suite, (*table)[k].name, "osp(1|2) bracket relation " + (*table)[k].name,
                     [&A, table, k] { return residual_outcome(A, (*table)[k].residual); }});
  tasks.push_back({suite, "S^2 = Omega + 1/4", "the Scasimir squares to the Casimir plus 1/4",
                   [&A, &osp] { return residual_outcome(A, osp.scasimir_square_residual()); }});
  tasks.push_back({suite, "P(S) = -2(Omega + 1/4)", "projection of the Scasimir",
                   [&A, &osp] {
                     HCElement r = osp.project(osp.scasimir()) +
                                   (osp.casimir() + hc_scalar(A, Scalar::frac(1, 4))) * Scalar(2);
                     return residual_outcome(A, r);
                   }});
  tasks.push_back({suite, "P(Omega_sl2) = 3 Omega", "projection of the sl(2) Casimir",
                   [&A, &osp] {
                     return residual_outcome(A, osp.project(osp.casimir_sl2()) - osp.casimir() * Scalar(3));
                   }});
  int d = ctx.dim();
  for (int n = 1; n <= std::min(3, d); ++n)
    tasks.push_back({suite, "-(t/2) P(e_A) = O_A, |A| = " + std::to_string(n),
                     "projected Clifford blades give the O_A generators",
                     [&A, &T, d, n] {
                       return over_tuples(A, sorted_tuples(d, n), [&](const Indices& u) {
                         return T.projected_blade(u) - T.O(u);
                       });
                     }});
  tasks.push_back({suite, "O_A in the graded centraliser, |A| <= 3", "O_A supercommutes with F+, F-, E+, E-, H",
                   [&A, &T, &osp, d] {
                     for (int n = 1; n <= std::min(3, d); ++n)
                       for (const auto& u : sorted_tuples(d, n)) {
                         auto [g, w] = osp.centraliser_witness(T.O(u));
                         if (!g.empty()) return Outcome::fail("O" + indices_string(u) + " against " + g + ": " + hc_witness(A, w));
                       }
                     return Outcome::pass();
                   }});

  // Readings of the generators, decided by the projection identity.
  nlohmann::ordered_json oc;
  for (auto [name, norm] : {std::pair{"coroot", CorootNormalisation::coroot}, std::pair{"unit_coroot", CorootNormalisation::unit_coroot}}) {
    bool plus = true;
    bool minus = true;
    for (int j = 0; j < d; ++j) {
      HCElement target = T.projected_blade({j});
      HCElement f = ocheck_closed_form(A, j, norm);
      plus = plus && (f - target).is_zero();
      minus = minus && (f + target).is_zero();
    }
    oc[name] = plus ? "matches" : (minus ? "matches with overall sign -1" : "does not match");
  }
  oc["used"] = "coroot, overall sign -1";
  findings.push_back({suite, "Oc_j normalisation against -(t/2) P(e_j)", oc});
  if (d >= 2) {
    nlohmann::ordered_json oa;
    for (int msign : {+1, -1}) {
      std::size_t bad = 0;
      std::size_t total = 0;
      for (int n = 2; n <= std::min(3, d); ++n)
        for (const auto& u : sorted_tuples(d, n)) {
          ++total;
          if (!(T.O_formula(u, msign) - T.projected_blade(u)).is_zero()) ++bad;
        }
      oa[msign > 0 ? "+M_ab e_ab (as printed)" : "-M_ab e_ab"] = std::to_string(total - bad) + "/" + std::to_string(total) + " subsets match";
    }
    bool disp = (T.O2_display(0, 1) - T.O({0, 1})).is_zero();
    if (d >= 3) disp = disp && (T.O3_display(0, 1, 2) - T.O({0, 1, 2})).is_zero();
    oa["explicit O_ij, O_ijk agree with -M reading"] = disp;
    findings.push_back({suite, "sign of the M_ab term in the general O_A formula", oa});
  }
}

// ---------------------------------------------------------------- relations

inline void relations_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const Tama& T = ctx.tama();
  const PinGroup& P = ctx.pin();
  const std::string suite = "relations";
  int d = ctx.dim();
  int max_arity = ctx.config().max_arity;
  for (const auto& rel : relation_catalogue()) {
    std::string anchor = rel.anchor + (rel.as_printed ? "" : " (corrected reading)");
    if (rel.arity > d || rel.arity > max_arity) {
      tasks.push_back({suite, rel.id, anchor, [arity = rel.arity, d] {
                         return Outcome::skip("needs " + std::to_string(arity) + " distinct indices, d = " + std::to_string(d));
                       }});
      continue;
    }
    auto residual = rel.residual;
    tasks.push_back({suite, rel.id, anchor, [&A, &T, residual, d, arity = rel.arity] {
                       return over_tuples(A, distinct_tuples(d, arity), [&](const Indices& u) { return residual(T, u); });
                     }});
  }
  tasks.push_back({suite, "S Gamma = i^{d(d-1)/2} O_{1..d} / t", "the Scasimir times the pseudo-scalar",
                   [&A, &T] { return residual_outcome(A, sgamma_residual(T)); }});
  if (d >= 3)
    tasks.push_back({suite, "S^2 expansion", "S^2 = (d-1)(d-2)/8 - (d-2)/t^2 sum Oc_j^2 - 1/t^2 sum O_jk^2",
                     [&A, &T] { return residual_outcome(A, ssquare_expansion_residual(T)); }});
  tasks.push_back({suite, "covariance", "rho(w~) O_u = (-1)^{|w~| n} O_{w u} rho(w~), simple lifts, |u| <= 3",
                   [&A, &T, &P, d] {
                     for (std::size_t g = 0; g < P.generators().size(); ++g)
                       for (int n = 1; n <= std::min(3, d); ++n)
                         for (const auto& u : distinct_tuples(d, n)) {
                           HCElement r = covariance_residual(T, P, P.generator_index(g), u);
                           if (!r.is_zero())
                             return Outcome::fail("s" + std::to_string(g + 1) + ", u=" + indices_string(u) + ": " + hc_witness(A, r));
                         }
                     return Outcome::pass();
                   }});
  tasks.push_back({suite, "skew-symmetry", "O_{..u..v..} = -O_{..v..u..}, |A| <= 3",
                   [&A, &T, d] {
                     for (int n = 2; n <= std::min(3, d); ++n)
                       for (const auto& u : distinct_tuples(d, n)) {
                         Indices v = u;
                         std::swap(v[0], v[1]);
                         HCElement r = T.O(u) + T.O(v);
                         if (!r.is_zero()) return Outcome::fail("u=" + indices_string(u) + ": " + hc_witness(A, r));
                       }
                     return Outcome::pass();
                   }});
  struct Rec {
    std::string id;
    std::string anchor;
    int arity;
    std::function<HCElement(const Indices&)> f;
  };
  std::vector<Rec> recs{
      {"O_klmn = 6 A(O_kl O_mn) - 8 A(O_klm Oc_n)", "four-index reconstruction as printed", 4,
       [&T](const Indices& u) { return reconstruction4_residual(T, u, 0); }},
      {"t O_klmn = 6 A(O_kl O_mn) - 8 A(O_klm Oc_n)", "four-index reconstruction with the t-scaling restored", 4,
       [&T](const Indices& u) { return reconstruction4_residual(T, u, 1); }},
      {"O_jklmn = 4 A(O_jkl O_mn) + 48 A(O_jkl Oc_m Oc_n) - 36 A(O_jk O_lm Oc_n)", "five-index reconstruction as printed", 5,
       [&T](const Indices& u) { return reconstruction5_residual(T, u, 0); }},
      {"O_jklmn = 4 A(..)/t + 48 A(..)/t^2 - 36 A(..)/t^2", "five-index reconstruction with the t-scaling restored", 5,
       [&T](const Indices& u) { return reconstruction5_residual(T, u, 1); }},
  };
  for (const auto& rec : recs) {
    if (rec.arity > d || rec.arity > max_arity) {
      tasks.push_back({suite, rec.id, rec.anchor, [arity = rec.arity, d] {
                         return Outcome::skip("needs " + std::to_string(arity) + " distinct indices, d = " + std::to_string(d));
                       }});
      continue;
    }
    // both sides are alternating in the indices, so sorted tuples suffice
    tasks.push_back({suite, rec.id, rec.anchor, [&A, f = rec.f, d, arity = rec.arity] {
                       return over_tuples(A, sorted_tuples(d, arity), f);
                     }});
  }
  if (d >= 4 && max_arity >= 4) {
    nlohmann::ordered_json ex;
    auto tuples = sorted_tuples(d, 4);
    for (auto [name, variant] : {std::pair{"{O_kn,O_ln} (as displayed)", 0}, std::pair{"{O_kn,O_lm}", 1}}) {
      std::size_t bad = count_failures(tuples, [&](const Indices& u) { return reconstruction4_expanded_residual(T, u, variant, 1); });
      ex[name] = bad == 0 ? "verifies" : "fails on " + std::to_string(bad) + "/" + std::to_string(tuples.size()) + " tuples";
    }
    findings.push_back({suite, "third term of the expanded four-index reconstruction (t-scaled)", ex});
  }
  if (d >= 3) {
    nlohmann::ordered_json e;
    auto tuples = distinct_tuples(d, 3);
    const char* names[] = {"i", "j", "k"};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        std::size_t bad = count_failures(tuples, [&](const Indices& u) { return o17_residual(T, u, a, b); });
        e[std::string("[Oc_") + names[a] + ",Oc_" + names[b] + "]"] =
            bad == 0 ? "verifies" : "fails on " + std::to_string(bad) + "/" + std::to_string(tuples.size()) + " tuples";
      }
    findings.push_back({suite, "Oc commutator term in [O_ij,O_ki]", e});
  }
}

// ---------------------------------------------------------------- centre

inline void centre_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const Tama& T = ctx.tama();
  const PinGroup& P = ctx.pin();
  const std::string suite = "centre";
  tasks.push_back({suite, "Omega central", "Omega_osp lies in O and supercommutes with rho(s~), O_ij, O_ijk",
                   [&A, &T, &P] {
                     CentreVerdict v = centre_verdict(T, P, "Omega", T.osp().casimir());
                     if (v.in_O && v.central) return Outcome::pass();
                     return Outcome::fail((v.in_O ? "not central against " : "not in O, fails against ") + v.failed_against + ": " +
                                          hc_witness(A, v.witness));
                   }});
  bool branch = A.group().minus_identity().has_value();
  if (!branch) {
    tasks.push_back({suite, "second central generator", "w0 = -1 branch", [] { return Outcome::skip("w0 is not -1 on V"); }});
    tasks.push_back({suite, "P(w0) = -2 S w0", "projection of the longest element", [] { return Outcome::skip("w0 is not -1 on V"); }});
    return;
  }
  auto verdicts = std::make_shared<std::vector<CentreVerdict>>(sbb_candidates(T, P));
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& v : *verdicts)
    table.push_back({{"candidate", v.name}, {"in_O", v.in_O}, {"central", v.central}, {"fails_against", v.failed_against}});
  findings.push_back({suite, "candidates for the second central generator", table});
  tasks.push_back({suite, "second central generator", "some reading of S w0 or D w0 is in O and central",
                   [verdicts] {
                     std::string ok;
                     for (const auto& v : *verdicts)
                       if (v.in_O && v.central) ok += (ok.empty() ? "" : "; ") + v.name;
                     if (ok.empty()) return Outcome::fail("no candidate passes");
                     return Outcome{"pass", "passing: " + ok};
                   }});
  tasks.push_back({suite, "P(w0) = -2 S w0", "projection of the longest element",
                   [&A, &T] { return residual_outcome(A, projected_longest_residual(T)); }});
}

// ---------------------------------------------------------------- vogan

inline void vogan_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const Tama& T = ctx.tama();
  const PinGroup& P = ctx.pin();
  const std::string suite = "vogan";
  int d = ctx.dim();
  tasks.push_back({suite, "D^bullet = D", "the projected chirality operator is self-adjoint",
                   [&A, &T] { return residual_outcome(A, hc_bullet(A, T.dirac()) - T.dirac()); }});
  tasks.push_back({suite, "D^2 = Omega + 1/4", "D is a square root of the Casimir plus 1/4",
                   [&A, &T] { return residual_outcome(A, T.mul(T.dirac(), T.dirac()) - T.osp().casimir() - T.scalar(Scalar::frac(1, 4))); }});
  tasks.push_back({suite, "D rho(w~) = eps rho(w~) D", "epsilon-commutation with the cover, all w~",
                   [&A, &T, &P] {
                     for (int p = 0; p < int(P.size()); p += 2) {
                       HCElement r = epsilon_residual(T, P, p);
                       if (!r.is_zero()) return Outcome::fail("w=" + std::to_string(p / 2) + ": " + hc_witness(A, r));
                     }
                     return Outcome::pass();
                   }});
  nlohmann::ordered_json dsa;
  HCElement Db = hc_bullet(A, T.dirac());
  dsa["D^bullet = D"] = (Db - T.dirac()).is_zero();
  dsa["D^bullet = -D"] = (Db + T.dirac()).is_zero();
  dsa["Gamma^bullet = Gamma"] = (hc_bullet(A, T.gamma()) - T.gamma()).is_zero();
  dsa["S^bullet = S"] = (hc_bullet(A, T.osp().scasimir()) - T.osp().scasimir()).is_zero();
  findings.push_back({suite, "self-adjointness of D with the conjugate-linear bullet, d = " + std::to_string(d), dsa});

  auto elements = std::make_shared<std::vector<ClassElement>>(class_elements(P));
  for (std::size_t k = 0; k < elements->size(); ++k) {
    const ClassElement& ce = (*elements)[k];
    if (!ce.nonzero) continue;
    std::string tag = "omega" + ce.label;
    auto res = [&T, &P, elements, k] {
      const ClassElement& e = (*elements)[k];
      return std::make_shared<VoganResiduals>(
          vogan_residuals(T, minus_to_hc(P, e.admissible), epsilon_of(T.dim(), e.parity)));
    };
    auto cache = std::make_shared<std::shared_ptr<VoganResiduals>>();
    auto once = std::make_shared<std::once_flag>();
    auto get = [res, cache, once]() -> const VoganResiduals& {
      std::call_once(*once, [&] { *cache = res(); });
      return **cache;
    };
    tasks.push_back({suite, tag + " admissible", "epsilon-central, homogeneous and bullet-fixed",
                     [&P, elements, k] {
                       const ClassElement& e = (*elements)[k];
                       if (minus_parity(P, e.admissible) < 0) return Outcome::fail("not homogeneous");
                       if (!e.self_adjoint) return Outcome::fail("not bullet-fixed");
                       return Outcome::of(is_epsilon_central(P, e.admissible), "not epsilon-central");
                     }});
    tasks.push_back({suite, tag + " D_w^2", "D_w^2 = Omega + rho(w)^2 + (1+eps) rho(w) D + 1/4",
                     [&A, get] { return residual_outcome(A, get().domega_square); }});
    tasks.push_back({suite, tag + " decomposition", "Omega = D_w a + a D_w + rho(w)^2 - 1/4 with a = D_w/2 - rho(w)",
                     [&A, get] { return residual_outcome(A, get().decomposition); }});
    tasks.push_back({suite, tag + " D_w^bullet = D_w", "D_w is self-adjoint",
                     [&A, get] { return residual_outcome(A, get().domega_self_adjoint); }});
  }
}

// ---------------------------------------------------------------- admissible

inline void admissible_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const PinGroup& P = ctx.pin();
  const std::string suite = "admissible";
  int d = ctx.dim();
  tasks.push_back({suite, "class sums span the epsilon-centre", "epsilon-centre basis equals the brute-force solution",
                   [&P] {
                     CentreComparison c = compare_epsilon_centres(P);
                     return Outcome::of(c.spans_equal, "class sums " + std::to_string(c.class_sum_dim) + ", brute force " +
                                                           std::to_string(c.brute_force_dim));
                   }});
  tasks.push_back({suite, "admissible elements", "every class element is homogeneous, epsilon-central and bullet-fixed",
                   [&P] {
                     for (const auto& ce : class_elements(P)) {
                       if (!ce.nonzero) continue;
                       if (minus_parity(P, ce.admissible) < 0) return Outcome::fail(ce.label + " not homogeneous");
                       if (!ce.self_adjoint) return Outcome::fail(ce.label + " not bullet-fixed");
                       if (!is_epsilon_central(P, ce.admissible)) return Outcome::fail(ce.label + " not epsilon-central");
                     }
                     return Outcome::pass();
                   }});
  tasks.push_back({suite, "products of epsilon-central elements are central", "omega v commutes with every lift",
                   [&P] {
                     auto basis = epsilon_centre_basis(P);
                     for (std::size_t a = 0; a < basis.size(); ++a)
                       for (std::size_t b = 0; b < basis.size(); ++b) {
                         MinusElement prod = minus_mul(P, basis[a], basis[b]);
                         for (std::size_t g = 0; g < P.generators().size(); ++g) {
                           int p = P.generator_index(g);
                           MinusElement s = minus_basis(P, p / 2, (p & 1) ? Qir(-1) : Qir(1));
                           MinusElement l = minus_mul(P, prod, s);
                           MinusElement r = minus_mul(P, s, prod);
                           if (!(l == r)) return Outcome::fail("basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
                         }
                       }
                     return Outcome::pass();
                   }});
  if (d % 2 == 0)
    tasks.push_back({suite, "admissible elements are even", "no odd epsilon-central elements for d even",
                     [&P] {
                       for (const auto& v : brute_force_epsilon_centre(P))
                         if (minus_parity(P, v) != 0) return Outcome::fail("odd or mixed element in the epsilon-centre");
                       return Outcome::pass();
                     }});

  nlohmann::ordered_json cat = nlohmann::ordered_json::array();
  for (const auto& ce : class_elements(P))
    cat.push_back({{"class", ce.label},
                   {"parity", ce.parity},
                   {"splits_in_cover", ce.splits_in_cover},
                   {"splits_in_even_cover", ce.splits_in_even_cover},
                   {"sum", ce.kind == SumKind::T ? "T" : "T_theta"},
                   {"nonzero", ce.nonzero},
                   {"admissible", ce.nonzero && ce.self_adjoint},
                   {"factor", ce.uses_i ? "i" : "1"},
                   {"grading_factor_self_adjoint", ce.grading_factor_self_adjoint},
                   {"reason", ce.reason}});
  findings.push_back({suite, "admissible catalogue, d " + std::string(d % 2 ? "odd" : "even"), cat});

  const RootDatum& rd = ctx.algebra().root_datum();
  if (rd.family() == Family::A) {
    int n = rd.rank() + 1;
    auto pred = std::make_shared<PartitionPrediction>(sn_partition_predictions(n, d % 2));
    auto brute = std::make_shared<std::vector<std::string>>(brute_force_admissible_types(P));
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
      return s.empty() ? std::string("none") : s;
    };
    std::string rule = d % 2 ? "d odd: no even parts" : "d even: distinct parts, even permutation";
    tasks.push_back({suite, "partition rule matches brute force", "S_" + std::to_string(n) + " admissible cycle types, " + rule,
                     [pred, brute, join] {
                       return Outcome::of(pred->parity_rule == *brute, "predicted " + join(pred->parity_rule) + "; brute force " + join(*brute));
                     }});
    if (d % 2)
      tasks.push_back({suite, "splitting criterion matches brute force",
                       "S_" + std::to_string(n) + " admissible cycle types, d odd: all parts odd, or odd with distinct parts",
                       [pred, brute, join] {
                         return Outcome::of(pred->schur == *brute, "predicted " + join(pred->schur) + "; brute force " + join(*brute));
                       }});
    findings.push_back({suite, "S_" + std::to_string(n) + " cycle types",
                        {{"brute_force", *brute}, {"parity_rule", pred->parity_rule}, {"splitting_criterion", pred->schur}}});
  }
}

// ---------------------------------------------------------------- cohomology

inline Specialisation default_specialisation() {
  Specialisation sp;
  sp.s = Rational(1);
  sp.c = {Rational(1, 3)};
  return sp;
}

inline void cohomology_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const Tama& T = ctx.tama();
  const std::string suite = "cohomology";
  int maxdeg = ctx.config().max_degree;
  auto X = std::make_shared<PolySpinor>(A);
  for (int k = 0; k <= maxdeg; ++k)
    tasks.push_back({suite, "D^2 = Omega + 1/4 on degree " + std::to_string(k), "matrix of D squared on polynomial spinors",
                     [X, &T, k] { return Outcome::of(is_zero_matrix(dirac_square_matrix_residual(*X, T, k)), "nonzero residual matrix"); }});

  // cohomology needs rational parameters
  const RunConfig& cfg = ctx.config();
  Specialisation sp = cfg.specialize ? *cfg.specialize : default_specialisation();
  RunConfig rc = cfg;
  rc.specialize = sp;
  auto rctx = std::make_shared<Context>(rc);
  auto RX = std::make_shared<PolySpinor>(rctx->algebra());
  std::vector<std::pair<std::string, MinusElement>> omegas{{"0", MinusElement(rctx->pin().weyl().size(), Qir())}};
  for (const auto& ce : class_elements(rctx->pin()))
    if (ce.nonzero) omegas.emplace_back(ce.label, ce.admissible);

  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  bool inv = true;
  bool cc = true;
  std::string inv_w;
  std::string cc_w;
  std::map<std::string, bool> kerim_zero;
  for (const auto& [label, om] : omegas) {
    bool all_zero = true;
    for (int k = 0; k <= maxdeg; ++k) {
      CohomologyRow r = cohomology_row(*RX, rctx->tama(), rctx->pin(), om, k);
      table.push_back({{"omega", label}, {"degree", k}, {"dim_X", r.dim_x}, {"dim_ker", r.dim_ker},
                       {"dim_ker_cap_im", r.dim_ker_im}, {"dim_H", r.dim_h}, {"cover_invariant", r.cover_invariant},
                       {"central_character", r.central_character}});
      if (!r.cover_invariant && inv) {
        inv = false;
        inv_w = "omega=" + label + ", degree " + std::to_string(k);
      }
      if (!r.central_character && cc) {
        cc = false;
        cc_w = "omega=" + label + ", degree " + std::to_string(k);
      }
      if (r.dim_ker_im) all_zero = false;
    }
    kerim_zero[label] = all_zero;
  }
  findings.push_back({suite, "cohomology table at " + specialisation_string(sp), table});
  tasks.push_back({suite, "cover acts on D_w-cohomology", "D_w rho(s~) = eps rho(s~) D_w as matrices",
                   [inv, inv_w] { return Outcome::of(inv, inv_w); }});
  tasks.push_back({suite, "Omega acts by rho(w)^2 - 1/4 on D_w-cohomology", "central character on the kernel modulo the image",
                   [cc, cc_w] { return Outcome::of(cc, cc_w); }});

  nlohmann::ordered_json herm = nlohmann::ordered_json::array();
  bool poly_herm = true;
  bool spinor_form = true;
  bool spinor_pos = true;
  for (int k = 0; k <= std::min(maxdeg, 2); ++k) {
    HermitianReport h = hermitian_form_check(*RX, k);
    herm.push_back({{"degree", k}, {"fischer_hermitian", h.poly_hermitian}, {"fischer_minors_positive", h.poly_positive},
                    {"fischer_minors", h.minors}, {"spinor_form_exists", h.spinor_form_exists},
                    {"spinor_hermitian", h.spinor_hermitian}, {"spinor_form_positive", h.spinor_positive}});
    poly_herm = poly_herm && h.poly_hermitian;
    spinor_form = spinor_form && h.spinor_form_exists && h.spinor_hermitian;
    spinor_pos = spinor_pos && h.spinor_positive;
  }
  findings.push_back({suite, "bullet-Hermitian forms at " + specialisation_string(sp) +
                                 " (sesquilinear, conjugate-linear in the first slot)",
                      herm});
  tasks.push_back({suite, "Fischer pairing is bullet-Hermitian", "(x_i u, v) = (u, y_i v) and (w u, v) = (u, w^-1 v)",
                   [poly_herm] { return Outcome::of(poly_herm, "pairing fails for some generator"); }});
  bool premise = spinor_form && spinor_pos;
  tasks.push_back({suite, "ker cap im = 0 under a positive Hermitian form", "unitary modules have H = ker D_w",
                   [premise, kerim_zero] {
                     if (!premise)
                       return Outcome::skip("no positive definite bullet-Hermitian form on the spinor factor "
                                            "((e_j v, e_j v) = -(v, v))");
                     for (const auto& [l, z] : kerim_zero)
                       if (!z) return Outcome::fail("omega=" + l);
                     return Outcome::pass();
                   }});

  // nonzero cohomology for some rescaling of an admissible element
  nlohmann::ordered_json scan = nlohmann::ordered_json::array();
  for (std::size_t w = 1; w < omegas.size(); ++w) {
    std::string found = "not found";
    for (long num : {1L, 2L, 3L, 4L, -1L, -2L, -3L, -4L}) {
      for (long den : {1L, 2L, 3L, 4L}) {
        MinusElement scaled = omegas[w].second;
        for (auto& v : scaled) v = v * Qir::frac(num, den);
        for (int k = 0; k <= std::min(maxdeg, 2) && found == "not found"; ++k)
          if (cohomology_row(*RX, rctx->tama(), rctx->pin(), scaled, k).dim_ker > 0)
            found = "lambda=" + std::to_string(num) + "/" + std::to_string(den) + ", degree " + std::to_string(k);
        if (found != "not found") break;
      }
      if (found != "not found") break;
    }
    scan.push_back({{"omega", omegas[w].first}, {"nonzero kernel", found}});
  }
  findings.push_back({suite, "rescalings lambda omega with nonzero kernel", scan});
}

// ---------------------------------------------------------------- filtration

inline void filtration_suite(const Context& ctx, std::vector<CheckTask>& tasks, std::vector<Finding>& findings) {
  const Algebra& A = ctx.algebra();
  const std::string suite = "filtration";
  if (A.params().specialised) {
    tasks.push_back({suite, "filtration property", "bracket difference lies in lower filtration with positive c-degree",
                     [] { return Outcome::skip("needs symbolic c"); }});
    return;
  }
  auto A0 = std::make_shared<Algebra>(A.root_datum(), A.params().with_zero_c(), ctx.config().max_group);
  std::mt19937_64 rng(ctx.config().seed);
  auto pairs = std::make_shared<std::vector<std::pair<HKey, HKey>>>();
  for (int n = 0; n < ctx.config().filtration_pairs; ++n) {
    HKey a = random_h_monomial(A, rng, 3);
    HKey b = random_h_monomial(A, rng, 3);
    pairs->emplace_back(a, b);
  }
  tasks.push_back({suite, "filtration property", "[xi,eta]_c - [xi,eta]_0 has degree <= m+n-2 and positive c-degree",
                   [&A, A0, pairs] {
                     for (const auto& [a, b] : *pairs) {
                       FiltrationResult r = filtration_check(A, *A0, a, b);
                       if (!r.ok)
                         return Outcome::fail(A.key_to_string(a) + " , " + A.key_to_string(b) + ": " + r.reason + " at " +
                                              A.key_to_string(r.term) + " coefficient " + r.coefficient.to_string());
                     }
                     return Outcome::pass();
                   }});
  std::size_t nz = 0;
  for (const auto& [a, b] : *pairs) {
    HElement x(a, Scalar(1));
    HElement y(b, Scalar(1));
    if (!((A.h_mul(x, y) - A.h_mul(y, x)) - (A0->h_mul(x, y) - A0->h_mul(y, x))).is_zero()) ++nz;
  }
  findings.push_back({suite, "random monomial pairs", {{"pairs", pairs->size()}, {"nonzero differences", nz}, {"seed", ctx.config().seed}}});
}

/// Builds every selected suite, runs the checks and returns records and findings in canonical order.
inline std::pair<std::vector<CheckRecord>, std::vector<Finding>> run_suites(const Context& ctx) {
  std::vector<CheckTask> tasks;
  std::vector<Finding> findings;
  for (const auto& s : ctx.config().resolved_suites()) {
    if (s == "osp") osp_suite(ctx, tasks, findings);
    if (s == "relations") relations_suite(ctx, tasks, findings);
    if (s == "centre") centre_suite(ctx, tasks, findings);
    if (s == "vogan") vogan_suite(ctx, tasks, findings);
    if (s == "admissible") admissible_suite(ctx, tasks, findings);
    if (s == "cohomology") cohomology_suite(ctx, tasks, findings);
    if (s == "filtration") filtration_suite(ctx, tasks, findings);
  }
  return {run_tasks(tasks, ctx.config().jobs, ctx.config().timing), std::move(findings)};
}

}  // namespace tama

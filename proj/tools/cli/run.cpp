#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "padyn/beverton.hpp"
#include "padyn/binomial.hpp"
#include "padyn/dynamics.hpp"
#include "padyn/hensel.hpp"
#include "padyn/integer.hpp"
#include "padyn/verify.hpp"

#ifndef PADYN_VERSION
#define PADYN_VERSION "0.0.0"
#endif

namespace padyn::cli {

std::string_view version() noexcept { return PADYN_VERSION; }

int default_precision() {
  if (const char* env = std::getenv("PADYN_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
  }
  return 40;
}

namespace {

json valuation_json(long v) {
  if (v >= PadicNumber::kExact) return "inf";
  return v;
}

json evidence_json(const Evidence& e) {
  json j;
  j["claim"] = e.claim;
  j["exactness"] = std::string(to_string(e.exactness));
  if (e.depth) j["depth"] = *e.depth;
  j["holds"] = e.holds;
  json data = json::object();
  for (const auto& [key, value] : e.data) {
    std::visit([&, k = key](const auto& v) { data[k] = v; }, value);
  }
  j["data"] = std::move(data);
  return j;
}

Evidence evidence(std::string claim, Exactness ex, bool holds, std::optional<int> depth = {}) {
  Evidence e;
  e.claim = std::move(claim);
  e.exactness = ex;
  e.holds = holds;
  e.depth = depth;
  return e;
}

struct Outcome {
  std::string verdict = "OK";
  json result = json::object();
  std::vector<Evidence> evidence;
};

void require_prime(const Request& req) {
  if (req.p < 2 || !is_prime(static_cast<u64>(req.p))) {
    throw Error(ErrorCode::ParseError, "--p: " + std::to_string(req.p) + " is not prime");
  }
}

FamilyParams family(const Request& req) {
  require_prime(req);
  if (!req.N) throw Error(ErrorCode::ParseError, "--N is required");
  if (req.a.empty()) throw Error(ErrorCode::ParseError, "--a is required");
  if (*req.N < 2) throw Error(ErrorCode::ParseError, "--N: must be >= 2");
  return FamilyParams::make(req.p, *req.N, parse_rational(req.a, "a"));
}

PadicPolynomial map_polynomial(const Request& req) {
  require_prime(req);
  if (!req.poly.empty()) return PadicPolynomial::parse(req.p, req.poly, "poly");
  const FamilyParams fp = family(req);
  if (req.map == "f") return conjugate_to_polynomial(fp.p, fp.N, fp.a);
  if (req.map == "g") return build_gN(fp);
  if (req.map == "h") return build_hN(fp);
  throw Error(ErrorCode::ParseError, "--map: expected f, g or h, got '" + req.map + "'");
}

json residues(const std::vector<u64>& xs) {
  json out = json::array();
  for (u64 x : xs) out.push_back(x);
  return out;
}

json cycle_json(const CycleRecord& c) {
  json j;
  j["level"] = c.level;
  j["length"] = c.length();
  j["elements"] = residues(c.elements);
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["A"] = c.A.to_string();
  j["B"] = c.B.to_string();
  j["class"] = std::string(to_string(c.cls));
  return j;
}

json family_json(const FamilyParams& fp) {
  json j;
  j["p"] = fp.p;
  j["N"] = fp.N;
  j["q"] = fp.q;
  j["m"] = fp.m;
  j["a"] = fp.a.get_str();
  j["v_a"] = fp.v_a;
  j["a0"] = fp.a0;
  j["a1"] = fp.a1;
  return j;
}

json regime_json(const RegimeVerdict& v) {
  json j;
  j["tag"] = std::string(to_string(v.regime));
  if (v.sphere_exponent) j["sphere_exponent"] = *v.sphere_exponent;
  if (v.ell) j["ell"] = *v.ell;
  if (v.k) j["k"] = *v.k;
  j["notes"] = v.notes;
  return j;
}

Outcome analyze(const Request& req) {
  const FamilyParams fp = family(req);
  const RegimeVerdict v = classify_regime(fp);
  Outcome o;
  o.result["family"] = family_json(fp);
  o.result["regime"] = regime_json(v);
  o.result["f_N"] = conjugate_to_polynomial(fp.p, fp.N, fp.a).to_string();
  try {
    json fps = json::array();
    for (const auto& x : fixed_points_of_fN(fp.p, fp.N, fp.a, req.precision)) fps.push_back(x.to_string());
    o.result["fixed_points"] = std::move(fps);
  } catch (const Error& e) {
    o.result["fixed_points"] = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  Evidence e = evidence("regime " + std::string(to_string(v.regime)) +
                            " from v_p(a), v_p(N) and gcd(p-1, q)",
                        Exactness::Exact, true);
  e.data.emplace_back("v_a", fp.v_a);
  e.data.emplace_back("m", static_cast<long>(fp.m));
  o.evidence.push_back(std::move(e));
  return o;
}

Outcome orbit_cmd(const Request& req) {
  const FamilyParams fp = family(req);
  if (req.x.empty()) throw Error(ErrorCode::ParseError, "--x is required");
  const int work = orbit_working_precision(fp, req.iterations, req.precision);
  const Extended x0 = req.x == "inf" ? Extended::infinity(fp.p)
                                     : Extended(parse_padic(fp.p, req.x, work));
  const OrbitReport r = orbit(fp, x0, req.iterations, req.precision);
  Outcome o;
  const std::string verdict(to_string(r.verdict));
  o.result["start"] = req.x;
  o.result["verdict"] = verdict;
  o.result["steps"] = r.steps;
  o.result["reason"] = r.reason;
  json vals = json::array();
  for (const auto& v : r.valuations) vals.push_back(v ? valuation_json(*v) : json("infinity"));
  o.result["valuations"] = std::move(vals);
  if (r.limit) {
    o.result["limit"] = r.limit->to_string();
    o.result["distances"] = r.distances;
    o.result["monotone"] = r.monotone;
  }
  o.evidence.push_back(evidence("orbit " + verdict + ": " + r.reason, Exactness::Exact,
                                r.verdict != OrbitVerdict::Undecided));
  return o;
}

Outcome cycles_cmd(const Request& req) {
  const PadicPolynomial f = map_polynomial(req);
  const ResidueSet domain = ResidueSet::parse(f.prime(), req.domain);
  if (req.level < 1) throw Error(ErrorCode::ParseError, "--level: must be >= 1");
  const LevelMap m = build_level_map(f, domain, req.level);
  const LevelCycles lc = cycles_at_level(m);
  Outcome o;
  o.result["polynomial"] = f.to_string();
  o.result["domain"] = domain.to_string();
  o.result["level"] = req.level;
  o.result["states"] = m.size();
  json cycles = json::array();
  long lifts_checked = 0;
  for (const auto& c : lc.cycles) {
    json j = cycle_json(c);
    const CycleLifts lifts = lift_cycles(f, c);
    json lj = json::array();
    for (const auto& l : lifts.lifts) {
      lj.push_back({{"length", l.length()}, {"first", l.first()}, {"class", std::string(to_string(l.cls))}});
      ++lifts_checked;
    }
    j["lifts"] = std::move(lj);
    j["grows_forever"] = grows_forever(c, f.prime());
    cycles.push_back(std::move(j));
  }
  o.result["cycles"] = std::move(cycles);
  o.result["tail_states"] = lc.tails.size();
  Evidence e = evidence("cycles of f mod p^" + std::to_string(req.level) + " on " + domain.to_string(),
                        Exactness::Exact, true);
  e.data.emplace_back("cycles", static_cast<long>(lc.cycles.size()));
  o.evidence.push_back(std::move(e));
  Evidence l = evidence("lifts follow the lift table", Exactness::DepthBounded, true, req.level + 1);
  l.data.emplace_back("lifts_checked", lifts_checked);
  o.evidence.push_back(std::move(l));
  return o;
}

std::string class_string(const ResidueClass& c, long p) {
  return std::to_string(c.residue) + " mod " + std::to_string(p) + "^" + std::to_string(c.exponent);
}

Outcome decompose_cmd(const Request& req) {
  const PadicPolynomial f = map_polynomial(req);
  const ResidueSet domain = ResidueSet::parse(f.prime(), req.domain);
  const int n_max = req.n_max ? static_cast<int>(*req.n_max) : default_depth(f.prime());
  if (n_max < 1) throw Error(ErrorCode::ParseError, "--n-max: must be >= 1");
  const DecompositionReport d =
      minimal_decomposition(f, domain, n_max, req.precision, req.samples / 5 > 0 ? req.samples / 5 : 1, req.seed);
  Outcome o;
  o.result["polynomial"] = f.to_string();
  o.result["domain"] = d.domain;
  o.result["n_max"] = d.n_max;
  json periodic = json::array();
  for (const auto& pc : d.periodic) {
    json orbit = json::array();
    for (const auto& x : pc.basin.orbit) orbit.push_back(x.get_str());
    periodic.push_back({{"cycle", cycle_json(pc.basin.cycle)},
                        {"balls", pc.balls.to_string()},
                        {"orbit", std::move(orbit)},
                        {"precision", pc.basin.precision},
                        {"samples", pc.basin.samples},
                        {"converged", pc.basin.converged},
                        {"monotone", pc.basin.monotone}});
  }
  json minimal = json::array();
  bool certified = true;
  for (const auto& mc : d.minimal) {
    minimal.push_back({{"set", mc.set.to_string()},
                       {"level", mc.level},
                       {"cycle_length", mc.cycle_length},
                       {"certificate", std::string(to_string(mc.certificate))},
                       {"depth_checked", mc.depth_checked}});
    certified = certified && mc.certified();
  }
  json basins = json::array();
  for (const auto& b : d.basins) basins.push_back({{"class", class_string(b.cls, f.prime())}, {"target", b.target}});
  json undecided = json::array();
  for (const auto& u : d.undecided) undecided.push_back(class_string(u, f.prime()));
  o.result["periodic"] = std::move(periodic);
  o.result["minimal"] = std::move(minimal);
  o.result["basins"] = std::move(basins);
  o.result["undecided"] = std::move(undecided);
  o.result["lifts_checked"] = d.lifts_checked;
  o.result["split_then_grow_checked"] = d.split_then_grow_checked;
  Evidence e = evidence("decomposition into periodic, minimal and basin parts", Exactness::DepthBounded,
                        true, n_max);
  e.data.emplace_back("periodic", static_cast<long>(d.periodic.size()));
  e.data.emplace_back("minimal", static_cast<long>(d.minimal.size()));
  e.data.emplace_back("undecided", static_cast<long>(d.undecided.size()));
  e.data.emplace_back("all_minimal_certified", certified);
  o.evidence.push_back(std::move(e));
  return o;
}

Outcome repeller_cmd(const Request& req) {
  const FamilyParams fp = family(req);
  const int depth = req.depth.value_or(6);
  const RepellerReport r = repeller_analysis(fp, depth, req.samples, req.seed);
  Outcome o;
  json fps = json::array();
  for (const auto& w : r.fixed_points) fps.push_back(w.to_string());
  json disks = json::array();
  for (const auto& d : r.disks) disks.push_back(d.to_string());
  json images = json::array();
  for (const auto& d : r.image_disks) images.push_back(d.to_string());
  json coding = json::array();
  for (const auto& [c, w] : r.coding_sample) coding.push_back({{"residue", c.get_str()}, {"word", w}});
  bool ones = true;
  for (const auto& row : r.incidence) {
    for (int v : row) ones = ones && v == 1;
  }
  o.result["ell"] = r.ell;
  o.result["fixed_points"] = std::move(fps);
  o.result["disks"] = std::move(disks);
  o.result["image_disks"] = std::move(images);
  o.result["tau"] = r.tau;
  o.result["incidence"] = r.incidence;
  o.result["irreducible"] = r.irreducible;
  o.result["depth"] = r.depth;
  o.result["coding_precision"] = r.coding_precision;
  o.result["cylinders_expected"] = r.cylinders_expected;
  o.result["cylinders_realized"] = r.cylinders_realized;
  o.result["coding_sample"] = std::move(coding);
  o.result["shift_checked"] = r.shift_checked;
  o.result["shift_equivariant"] = r.shift_equivariant;
  o.result["K_f_equals_A_f"] = r.invariant_set_is_unit_orbit_set;
  if (r.ell_formula) o.result["ell_formula"] = *r.ell_formula;
  o.result["notes"] = r.notes;
  Evidence ex = evidence("|f(x) - f(y)|_p = p^tau |x - y|_p on every disk", Exactness::Sampled,
                         r.expansion_exact);
  ex.data.emplace_back("samples", r.expansion_samples);
  o.evidence.push_back(std::move(ex));
  o.evidence.push_back(evidence("incidence matrix all ones and irreducible", Exactness::Exact,
                                ones && r.irreducible));
  Evidence cyl = evidence("all l^d cylinders nonempty", Exactness::DepthBounded,
                          r.cylinders_realized == r.cylinders_expected, depth);
  cyl.data.emplace_back("realized", r.cylinders_realized);
  o.evidence.push_back(std::move(cyl));
  Evidence sh = evidence("coding is shift-equivariant", Exactness::Sampled, r.shift_equivariant, depth - 1);
  sh.data.emplace_back("checked", r.shift_checked);
  o.evidence.push_back(std::move(sh));
  return o;
}

Outcome verify_cmd(const Request& req) {
  if (req.theorem.empty()) throw Error(ErrorCode::ParseError, "--theorem is required");
  const auto& tags = theorem_tags();
  if (std::find(tags.begin(), tags.end(), req.theorem) == tags.end()) {
    throw Error(ErrorCode::ParseError, "--theorem: unknown tag '" + req.theorem + "'");
  }
  const FamilyParams fp = family(req);
  Budget b;
  b.depth = req.depth.value_or(6);
  b.iterations = req.iterations;
  b.samples = req.samples;
  b.precision = req.precision;
  VerificationReport r = verify_theorem(req.theorem, fp, b, req.seed);
  Outcome o;
  o.verdict = r.pass ? "PASS" : "FAIL";
  o.result["theorem"] = r.theorem;
  o.result["regime"] = r.regime;
  o.result["pass"] = r.pass;
  o.evidence = std::move(r.evidence);
  return o;
}

Outcome binomial_cmd(const Request& req) {
  require_prime(req);
  Outcome o;
  if (req.N) {
    if (!req.K) throw Error(ErrorCode::ParseError, "--K is required with --N");
    const long v = vp_binomial(*req.N, *req.K, req.p);
    o.result["N"] = *req.N;
    o.result["K"] = *req.K;
    o.result["v"] = v;
    Evidence e = evidence("v_p(C(N,K)) = (wt(K) + wt(N-K) - wt(N)) / (p-1)", Exactness::Exact, true);
    e.data.emplace_back("wt_N", wt_p(*req.N, req.p));
    o.evidence.push_back(std::move(e));
    if (*req.N >= 2 && *req.K <= *req.N - 2) {
      const BinomialValuationRecord rec = lemma24_check(*req.N, *req.K, req.p);
      o.result["lhs_exponent"] = rec.lhs_exponent;
      o.result["rhs_exponent"] = rec.rhs_exponent;
      o.result["equality"] = rec.equality;
    }
    return o;
  }
  const long n_max = req.n_max.value_or(100);
  if (n_max < 2) throw Error(ErrorCode::ParseError, "--n-max: must be >= 2");
  const BinomialSweep s = binomial_sweep(req.p, n_max);
  bool shape = true;
  std::vector<long> eq_n;
  for (const auto& r : s.equalities) {
    shape = shape && r.p == 2 && r.K == r.N - 2 && r.N % 2 == 0;
    eq_n.push_back(r.N);
  }
  o.verdict = s.violations == 0 && shape ? "PASS" : "FAIL";
  o.result["p"] = s.p;
  o.result["n_max"] = s.n_max;
  o.result["checked"] = s.checked;
  o.result["violations"] = s.violations;
  o.result["equalities"] = s.equalities.size();
  o.result["equality_N"] = eq_n;
  Evidence e = evidence("|C(N,K)|_p p^(1-(N-K)) <= |N|_p for 0 <= K <= N-2", Exactness::Exact,
                        s.violations == 0);
  e.data.emplace_back("checked", s.checked);
  o.evidence.push_back(std::move(e));
  o.evidence.push_back(evidence("equality only at p = 2, K = N-2 with N even", Exactness::Exact, shape));
  return o;
}

Outcome hensel_cmd(const Request& req) {
  require_prime(req);
  if (req.poly.empty()) throw Error(ErrorCode::ParseError, "--poly is required");
  if (req.x.empty()) throw Error(ErrorCode::ParseError, "--x is required");
  const PadicPolynomial F = PadicPolynomial::parse(req.p, req.poly, "poly");
  mpz_class x0;
  if (x0.set_str(req.x, 10) != 0) throw Error(ErrorCode::ParseError, "--x: '" + req.x + "' is not an integer");
  const HenselReport h = check_hensel_hypothesis(F, x0, req.L.value_or(0), req.s.value_or(0));
  Outcome o;
  json checks = json::array();
  for (const auto& c : h.checks) {
    checks.push_back({{"name", c.name}, {"k", c.k}, {"lhs", valuation_json(c.lhs)},
                      {"rhs", valuation_json(c.rhs)}, {"relation", c.relation}, {"holds", c.holds}});
  }
  o.result["polynomial"] = F.to_string();
  o.result["x0"] = h.x0.get_str();
  o.result["L"] = h.L;
  o.result["s"] = h.s;
  o.result["v_F"] = valuation_json(h.v_F);
  o.result["v_dF"] = valuation_json(h.v_dF);
  o.result["checks"] = std::move(checks);
  o.result["hl_pass"] = h.hl_pass;
  o.result["phl_pass"] = h.phl_pass;
  if (h.locating_ball) o.result["locating_ball"] = h.locating_ball->to_string();
  Evidence e = evidence("root certificate hypothesis at x0", Exactness::Exact, h.pass);
  o.evidence.push_back(std::move(e));
  if (!h.pass) {
    o.verdict = "FAIL";
    return o;
  }
  const HenselCertificate cert = hensel_lift(F, x0, req.precision, req.L.value_or(0), req.s.value_or(0));
  o.result["root"] = cert.root.to_string();
  o.result["root_residue"] = cert.root_residue.get_str();
  o.result["precision"] = cert.precision;
  json prog = json::array();
  for (long v : cert.progress) prog.push_back(valuation_json(v));
  o.result["progress"] = std::move(prog);
  o.evidence.push_back(evidence("F(root) = 0 mod p^" + std::to_string(cert.precision) +
                                    ", root in the locating ball",
                                Exactness::Exact, true));
  o.verdict = "PASS";
  return o;
}

}  // namespace

json request_json(const Request& req) {
  json j;
  j["command"] = req.command;
  if (req.p != 0) j["p"] = req.p;
  if (req.N) j["N"] = *req.N;
  if (!req.a.empty()) j["a"] = req.a;
  if (!req.poly.empty()) j["poly"] = req.poly;
  if (req.command == "cycles" || req.command == "decompose") {
    if (req.poly.empty()) j["map"] = req.map;
    j["domain"] = req.domain;
  }
  if (req.command == "cycles") j["level"] = req.level;
  if (!req.x.empty()) j["x"] = req.x;
  if (!req.theorem.empty()) j["theorem"] = req.theorem;
  if (req.depth) j["depth"] = *req.depth;
  if (req.n_max) j["n_max"] = *req.n_max;
  if (req.K) j["K"] = *req.K;
  if (req.L) j["L"] = *req.L;
  if (req.s) j["s"] = *req.s;
  j["precision"] = req.precision;
  j["seed"] = req.seed;
  if (req.command == "verify" || req.command == "orbit") j["iterations"] = req.iterations;
  if (req.command == "verify" || req.command == "repeller" || req.command == "decompose") {
    j["samples"] = req.samples;
  }
  return j;
}

json run(const Request& req) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  if (req.command == "analyze") o = analyze(req);
  else if (req.command == "orbit") o = orbit_cmd(req);
  else if (req.command == "cycles") o = cycles_cmd(req);
  else if (req.command == "decompose") o = decompose_cmd(req);
  else if (req.command == "repeller") o = repeller_cmd(req);
  else if (req.command == "verify") o = verify_cmd(req);
  else if (req.command == "binomial") o = binomial_cmd(req);
  else if (req.command == "hensel") o = hensel_cmd(req);
  else throw Error(ErrorCode::ParseError, "unknown command '" + req.command + "'");
  if (o.verdict == "OK" && !o.evidence.empty()) {
    const bool all = std::all_of(o.evidence.begin(), o.evidence.end(), [](const Evidence& e) { return e.holds; });
    if (!all && req.command == "repeller") o.verdict = "FAIL";
  }
  json report;
  report["tool"] = {{"name", "padyn"}, {"version", std::string(version())}};
  report["request"] = request_json(req);
  report["verdict"] = o.verdict;
  report["result"] = std::move(o.result);
  json ev = json::array();
  for (const auto& e : o.evidence) ev.push_back(evidence_json(e));
  report["evidence"] = std::move(ev);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timing_ms"] = ms;
  return report;
}

json error_report(ErrorCode code, std::string_view message) {
  json j;
  const std::string prefix = std::string(to_string(code)) + ": ";
  if (message.substr(0, prefix.size()) == prefix) message.remove_prefix(prefix.size());
  j["error"] = {{"code", std::string(to_string(code))}, {"message", std::string(message)}};
  return j;
}

int exit_code(const json& report) {
  return report.value("verdict", std::string()) == "FAIL" ? 1 : 0;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::InternalInconsistency: return 3;
    default: return 1;
  }
}

json without_timing(json report) {
  report.erase("timing_ms");
  return report;
}

namespace {

void flatten(std::ostringstream& out, const json& j, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(out, *it, key);
    } else {
      out << "  " << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  if (report.contains("error")) {
    out << "error " << report["error"]["code"].get<std::string>() << ": "
        << report["error"]["message"].get<std::string>() << "\n";
    return out.str();
  }
  out << "padyn " << report["request"]["command"].get<std::string>() << ": "
      << report["verdict"].get<std::string>() << "\n";
  flatten(out, report["result"], "");
  for (const auto& e : report["evidence"]) {
    out << (e["holds"].get<bool>() ? "  [ok]   " : "  [FAIL] ") << e["claim"].get<std::string>()
        << " (" << e["exactness"].get<std::string>();
    if (e.contains("depth")) out << ", depth " << e["depth"].get<int>();
    out << ")\n";
  }
  return out.str();
}

}  // namespace padyn::cli

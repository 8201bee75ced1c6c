// fusion-positivity: command-line front end for the coinvariant divisor engine.
//
// Exit status: 0 computed / all checks passed, 1 a counterexample or failed
// check was found, 2 usage or domain error.

#include "algebra.hpp"
#include "output.hpp"

#include "fusion_positivity/affine_instances.hpp"
#include "fusion_positivity/fusion_core.hpp"
#include "fusion_positivity/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace fpos::cli {
namespace {

struct Request {
  std::string verb;
  std::optional<std::string> algebra;
  std::optional<int> level;
  std::optional<int> rank;
  std::string subring = "full";
  std::string format = "table";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int max_level = 0;
  std::string curve;
  std::string suite;
  std::vector<std::string> modules;
};

struct Outcome {
  Output output;
  int exit_code = 0;
};

/// "{1,2}|{3}|{4}|{5}" with 1-based points.
FCurve parse_curve(const std::string& text, std::size_t n) {
  if (text.empty()) throw PartitionError("intersect needs --curve, e.g. \"{1,2}|{3}|{4}|{5}\"");
  std::vector<PointSet> blocks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t bar = std::min(text.find('|', pos), text.size());
    std::string_view block = detail::trim(std::string_view(text).substr(pos, bar - pos));
    if (block.size() < 2 || block.front() != '{' || block.back() != '}') {
      throw PartitionError("malformed block '" + std::string(block) + "' in curve '" + text + "'");
    }
    PointSet points;
    try {
      for (long long p : detail::parse_int_list(block.substr(1, block.size() - 2), text)) {
        if (p < 1) throw PartitionError("points are numbered from 1 in curve '" + text + "'");
        points.push_back(static_cast<std::size_t>(p - 1));
      }
    } catch (const LabelError&) {
      throw PartitionError("malformed block '" + std::string(block) + "' in curve '" + text + "'");
    }
    blocks.push_back(std::move(points));
    pos = bar + 1;
  }
  return FCurve(n, std::move(blocks));
}

std::vector<std::string> label_strings(const auto& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}

Output scalar(const std::string& column, const Rational& value) {
  return {rational_json(value), {column}, {{to_string(value)}}};
}

void require_count(const Request& req, std::size_t min, std::size_t max = 0) {
  const std::size_t n = req.modules.size();
  if (n < min || (max != 0 && n > max)) {
    const std::string want = max == min ? std::to_string(min) : (max == 0 ? "at least " + std::to_string(min) : std::to_string(min) + ".." + std::to_string(max));
    throw ArityError(req.verb + " needs " + want + " module labels, got " + std::to_string(n));
  }
}

template <FusionRing Ring>
Outcome run_on(const Ring& ring, const Request& req) {
  std::vector<label_t<Ring>> modules;
  for (const auto& m : req.modules) modules.push_back(parse_label(ring, m));
  for (const auto& m : modules) ring.index_of(m);  // rejects labels of another level or rank

  const std::string& verb = req.verb;
  if (verb == "cw") {
    require_count(req, 1);
    Output out{json::array(), {"module", "cw"}, {}};
    for (const auto& m : modules) {
      const Rational& w = ring.cw(ring.index_of(m));
      out.result.push_back({{"module", to_string(m)}, {"cw", rational_json(w)}});
      out.rows.push_back({to_string(m), to_string(w)});
    }
    return {out};
  }
  if (verb == "fuse") {
    require_count(req, 2, 2);
    Output out{json::array(), {"module", "multiplicity"}, {}};
    for (const auto& [l, mult] : expand_fusion(ring, modules[0], modules[1])) {
      out.result.push_back({{"module", to_string(l)}, {"multiplicity", mult}});
      out.rows.push_back({to_string(l), std::to_string(mult)});
    }
    return {out};
  }
  if (verb == "rank") {
    require_count(req, 2);
    const Multiplicity mu = rank_n(ring, modules);
    return {Output{json(mu), {"rank"}, {{std::to_string(mu)}}}};
  }
  if (verb == "degree") {
    require_count(req, 4, 4);
    return {scalar("degree", degree_04(ring, modules))};
  }
  if (verb == "class") {
    require_count(req, 4);
    const DivisorClass dc = divisor_class(ring, modules);
    Output out;
    out.header = {"term", "coefficient"};
    json psi = json::array(), boundary = json::array();
    out.rows.push_back({"mu", std::to_string(dc.mu)});
    for (std::size_t i = 0; i < dc.psi_coeffs.size(); ++i) {
      psi.push_back(rational_json(dc.psi_coeffs[i]));
      out.rows.push_back({"psi_" + std::to_string(i + 1), to_string(dc.psi_coeffs[i])});
    }
    for (const auto& [subset, coeff] : dc.boundary_coeffs) {
      std::vector<std::size_t> one_based;
      std::string name = "delta_{";
      for (std::size_t p : subset) {
        one_based.push_back(p + 1);
        name += (one_based.size() > 1 ? "," : "") + std::to_string(p + 1);
      }
      boundary.push_back({{"subset", one_based}, {"coefficient", rational_json(coeff)}});
      out.rows.push_back({name + "}", to_string(coeff)});
    }
    out.result = {{"n", dc.n}, {"mu", dc.mu}, {"psi", psi}, {"boundary", boundary}};
    return {out};
  }
  if (verb == "intersect") {
    require_count(req, 4);
    const FCurve curve = parse_curve(req.curve, modules.size());
    return {scalar("intersection", fcurve_intersect(ring, modules, curve))};
  }
  if (verb == "trivial") {
    require_count(req, 4);
    const bool trivial = is_trivial(ring, modules);
    return {Output{json(trivial), {"trivial"}, {{trivial ? "true" : "false"}}}};
  }

  const auto subring = subring_labels(ring, req.subring);
  if (verb == "scan") {
    const auto report = scan_f_positivity(ring, subring, {req.jobs});
    Output out;
    json negatives = json::array();
    out.header = {"m1", "m2", "m3", "m4", "degree"};
    for (const auto& [tuple, d] : report.counterexamples) {
      negatives.push_back({{"modules", label_strings(tuple)}, {"degree", rational_json(d)}});
      out.rows.push_back({to_string(tuple[0]), to_string(tuple[1]), to_string(tuple[2]), to_string(tuple[3]), to_string(d)});
    }
    out.result = {{"tuples_examined", report.tuples_examined},
                  {"min_degree", rational_json(report.min_degree)},
                  {"counterexamples", negatives}};
    if (req.format == "table") {
      std::cout << "tuples examined: " << report.tuples_examined << "\nmin degree: " << to_string(report.min_degree)
                << "\ncounterexamples: " << report.counterexamples.size() << "\n";
      if (out.rows.empty()) out.header.clear();
    }
    return {out, report.counterexamples.empty() ? 0 : 1};
  }
  if (verb == "certificate") {
    const PositivityCertificate cert = positivity_certificate(ring, subring);
    Output out;
    out.header = {"field", "value"};
    out.rows = {{"status", to_string(cert.status)},
                {"abelian", cert.abelian ? "true" : "false"},
                {"f_min", to_string(cert.f_min)},
                {"f_max", to_string(cert.f_max)}};
    json interval = nullptr;
    if (cert.c_interval) {
      interval = json::array({rational_json(cert.c_interval->first), rational_json(cert.c_interval->second)});
      out.rows.push_back({"c_interval", "[" + to_string(cert.c_interval->first) + ", " + to_string(cert.c_interval->second) + "]"});
    }
    out.result = {{"status", to_string(cert.status)},
                  {"abelian", cert.abelian},
                  {"nonnegative_weights", cert.nonnegative_weights},
                  {"f_min", rational_json(cert.f_min)},
                  {"f_max", rational_json(cert.f_max)},
                  {"c_interval", interval}};
    return {out};
  }
  if (verb == "lambda") {
    const Rational t = lambda_threshold(ring, subring);
    if (modules.empty()) return {scalar("threshold", t)};
    Output out{json{{"threshold", rational_json(t)}, {"degree_11", json::array()}}, {"term", "value"}, {{"threshold", to_string(t)}}};
    for (const auto& m : modules) {
      const Rational d = degree_11(ring, m);
      out.result["degree_11"].push_back({{"module", to_string(m)}, {"degree", rational_json(d)}});
      out.rows.push_back({"degree_11 " + to_string(m), to_string(d)});
    }
    return {out};
  }
  if (verb == "pairing") {
    if constexpr (std::is_same_v<Ring, Sl2Parafermion>) {
      const int k = ring.level();
      auto render = [&](const auto& report) {
        Output out;
        out.header = {"field", "value"};
        out.rows.push_back({"fusion_injection", report.is_fusion_injection ? "true" : "false"});
        json witness = nullptr;
        if (report.eta) out.rows.push_back({"eta", to_string(*report.eta)});
        if (report.failure_witness) {
          const auto& w = *report.failure_witness;
          witness = {{"labels", {to_string(w.first), to_string(w.second)}}, {"description", w.description}};
          out.rows.push_back({"witness", to_string(w.first) + " x " + to_string(w.second) + ": " + w.description});
        }
        out.result = {{"is_fusion_injection", report.is_fusion_injection},
                      {"eta", report.eta ? rational_json(*report.eta) : json(nullptr)},
                      {"failure_witness", witness}};
        return Outcome{out, report.is_fusion_injection ? 0 : 1};
      };
      if (req.subring == "T") return render(verify_pairing(ring, subring_T(k), AffineSl2(k), pairing_T_to_affine(k)));
      if (req.subring == "S1") return render(verify_pairing(ring, subring_S1(k), CyclicRing(k), pairing_S1_to_cyclic(k)));
      throw DomainError("pairing needs --subring T (to affine sl2) or S1 (to Z/k)");
    } else {
      throw DomainError("pairing is defined for --algebra sl2 only");
    }
  }
  throw DomainError("unknown verb '" + verb + "'");
}

Outcome run_verify(const Request& req) {
  const auto result = checks::run_suite(req.suite, {req.max_level, req.jobs});
  if (!result) throw DomainError("unknown suite '" + req.suite + "'");
  Output out;
  out.header = {"status", "assertion", "detail"};
  json assertions = json::array();
  for (const auto& a : result->assertions) {
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    out.rows.push_back({a.passed ? "PASS" : "FAIL", a.name, a.detail});
  }
  out.result = {{"suite", req.suite}, {"passed", result->passed()}, {"assertions", assertions}};
  return {out, result->passed() ? 0 : 1};
}

json inputs_json(const Request& req) {
  json in = json::object();
  if (req.algebra) in["algebra"] = *req.algebra;
  if (req.level) in["level"] = *req.level;
  if (req.rank) in["rank"] = *req.rank;
  if (!req.modules.empty()) in["modules"] = req.modules;
  if (!req.curve.empty()) in["curve"] = req.curve;
  if (!req.suite.empty()) in["suite"] = req.suite;
  if (req.max_level) in["max_level"] = req.max_level;
  in["subring"] = req.subring;
  in["jobs"] = req.jobs;
  return in;
}

int execute(const Request& req) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  if (req.verb == "verify") {
    outcome = run_verify(req);
  } else {
    const AlgebraSpec spec = resolve_algebra(req.algebra, req.level, req.rank, req.modules);
    const AnyRing ring = make_ring(spec);
    outcome = std::visit([&](const auto& r) { return run_on(r, req); }, ring);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (req.format == "json") {
    const json doc{{"command", req.verb}, {"inputs", inputs_json(req)}, {"result", outcome.output.result}, {"elapsed_ms", ms}};
    std::cout << doc.dump(2) << '\n';
  } else if (req.format == "csv") {
    print_csv(std::cout, outcome.output);
  } else if (!outcome.output.header.empty()) {
    print_table(std::cout, outcome.output);
  }
  return outcome.exit_code;
}

}  // namespace
}  // namespace fpos::cli

int main(int argc, char** argv) {
  using fpos::cli::Request;
  Request req;
  CLI::App app{"Exact fusion-ring, coinvariant divisor and F-curve positivity calculator"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"cw", "conformal weights of the given modules"},
      {"fuse", "fusion product of two modules"},
      {"rank", "rank of the n-pointed coinvariant bundle"},
      {"degree", "degree of the divisor on M_{0,4}"},
      {"class", "psi and boundary coefficients of the divisor on M_{0,n}"},
      {"intersect", "intersection with an F-curve given by --curve"},
      {"trivial", "whether the divisor meets every F-curve trivially"},
      {"scan", "F-positivity scan over a subring"},
      {"certificate", "cK+E positivity certificate for an abelian subring"},
      {"lambda", "lambda-twist threshold of a subring (and degree_11 of given modules)"},
      {"pairing", "verify the proportional pairing of T(k) or S1(k)"},
      {"verify", "run a named verification suite"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&req, name = name] { req.verb = name; });
    sub->add_option("--algebra", req.algebra, "sl2 | slr | affine | cyclic")
        ->check(CLI::IsMember({"sl2", "slr", "affine", "cyclic"}));
    sub->add_option("--level", req.level, "level k (modulus m for cyclic)");
    sub->add_option("--rank", req.rank, "rank r for slr");
    sub->add_option("--subring", req.subring, "full | T | S1")->check(CLI::IsMember({"full", "T", "S1"}));
    sub->add_option("--format", req.format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--jobs", req.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
    sub->add_option("--max-level", req.max_level, "upper level for verify suites")->check(CLI::NonNegativeNumber);
    if (name == "intersect") sub->add_option("--curve", req.curve, "F-curve blocks, e.g. \"{1,2}|{3}|{4}|{5}\"");
    if (name == "verify") {
      std::string suites;
      for (const auto& s : fpos::checks::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
      sub->add_option("suite", req.suite, "one of: " + suites)->required();
    } else {
      sub->add_option("modules", req.modules, "module labels: M[i,j]@k, S[a1,...,ar]@r,k, A[l]@k, Z[a]@m");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return fpos::cli::execute(req);
  } catch (const fpos::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

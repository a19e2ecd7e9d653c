// hopfrec: command-line front end for the reconstruction engine.
//
// Exit status: 0 when every check passes, 1 when an axiom check fails,
// 2 for unreadable, malformed or ill-shaped input and usage errors.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/fusion.hpp"
#include "hopfrec/hopf.hpp"
#include "hopfrec/io.hpp"
#include "hopfrec/reconstruct.hpp"
#include "hopfrec/repcat.hpp"

using namespace hopfrec;

namespace {

enum class Format { text, json };

struct Outcome {
  Report report;
  std::vector<std::string> written;
};

void print_text(const Report& r, const std::vector<std::string>& written, double ms) {
  std::cout << "command: " << r.command() << "\n";
  for (const CheckRecord& c : r.records()) {
    if (c.informational) {
      std::cout << "INFO " << c.name << ": " << c.note << "\n";
      continue;
    }
    std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name;
    if (!c.passed()) std::cout << " (" << c.failure_count << " failing tuples)";
    std::cout << "\n";
    for (const Failure& f : c.failures) {
      std::cout << "  at (";
      for (std::size_t i = 0; i < f.indices.size(); ++i)
        std::cout << (i ? "," : "") << f.indices[i];
      std::cout << "): lhs = " << f.lhs << ", rhs = " << f.rhs << "\n";
    }
    if (c.failure_count > c.failures.size())
      std::cout << "  ... " << c.failure_count - c.failures.size() << " more\n";
  }
  for (const std::string& w : written) std::cout << "wrote " << w << "\n";
  std::cout << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  std::cout << "time_ms: " << ms << "\n";
}

void print_json(const Report& r, const std::vector<std::string>& written, double ms) {
  nlohmann::ordered_json j;
  j["command"] = r.command();
  j["passed"] = r.passed();
  j["time_ms"] = ms;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.records()) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.informational ? "info" : (c.passed() ? "pass" : "fail");
    if (!c.note.empty()) cj["note"] = c.note;
    cj["failure_count"] = c.failure_count;
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const Failure& f : c.failures)
      fs.push_back({{"indices", f.indices}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    cj["failures"] = fs;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["written"] = written;
  std::cout << j.dump(2) << "\n";
}

void print_error(Format fmt, const std::string& command, const std::string& what) {
  std::cerr << "error: " << what << "\n";
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["passed"] = false;
    j["error"] = what;
    std::cout << j.dump(2) << "\n";
  }
}

Outcome cmd_check_hopf(const std::string& file) {
  HopfDocument d = load_as<HopfDocument>(file);
  validate_shapes(d.hopf);
  Report r("check-hopf");
  r.append(check_hopf(d.hopf));
  return {r, {}};
}

Outcome cmd_check_category(const std::string& fusion, const std::string& fiber) {
  FusionSkeleton k = load_as<FusionSkeleton>(fusion);
  Report r("check-category");
  if (fiber.empty()) {
    validate_shapes(k);
    r.append(verify_category(k, nullptr));
  } else {
    FiberData f = load_as<FiberData>(fiber);
    validate_shapes(k, f);
    r.append(verify_category(k, &f));
  }
  return {r, {}};
}

Outcome cmd_reconstruct(const std::string& fusion, const std::string& fiber,
                        const std::string& out) {
  FusionSkeleton k = load_as<FusionSkeleton>(fusion);
  FiberData f = load_as<FiberData>(fiber);
  validate_shapes(k, f);
  Report r("reconstruct");
  r.append(verify_category(k, &f));
  if (!r.passed()) return {r, {}};
  try {
    HopfDocument d{reconstruct_hopf(k, f), {}};
    const MatrixUnitBasis basis(f.dims);
    for (std::size_t p = 0; p < basis.size(); ++p) d.basis.push_back(basis.label(p));
    r.append(check_hopf(d.hopf));
    save_document(out, d);
    return {r, {out}};
  } catch (const ReconstructionAxiomFailure& e) {
    r.append(e.report());
    return {r, {}};
  }
}

Outcome cmd_repcat(const std::string& hopf, const std::string& modules, const std::string& out) {
  HopfDocument h = load_as<HopfDocument>(hopf);
  ModulesDocument m = load_as<ModulesDocument>(modules);
  validate_shapes(h.hopf);
  Report r("repcat");
  r.append(verify_irreps(h.hopf, m.modules));
  if (!r.passed()) return {r, {}};
  try {
    auto [k, f] = skeletalize(h.hopf, m.modules);
    r.append(verify_category(k, &f));
    const std::string fusion_path = out + ".fusion.json";
    const std::string fiber_path = out + ".fiber.json";
    save_document(fusion_path, k);
    save_document(fiber_path, f);
    return {r, {fusion_path, fiber_path}};
  } catch (const SkeletalizationFailure& e) {
    r.append(e.report());
    return {r, {}};
  }
}

Outcome cmd_roundtrip(const std::string& hopf, const std::string& modules) {
  HopfDocument h = load_as<HopfDocument>(hopf);
  ModulesDocument m = load_as<ModulesDocument>(modules);
  validate_shapes(h.hopf);
  Report r("roundtrip");
  r.append(verify_irreps(h.hopf, m.modules));
  if (!r.passed()) return {r, {}};
  try {
    RoundTrip rt = gamma_roundtrip(h.hopf, m.modules);
    r.append(rt.report);
  } catch (const SkeletalizationFailure& e) {
    r.append(e.report());
  } catch (const ReconstructionAxiomFailure& e) {
    r.append(e.report());
  }
  return {r, {}};
}

Outcome cmd_example(const std::string& name, const std::string& out) {
  save_document(out, named_example(name));
  return {Report("example"), {out}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tannaka-Krein reconstruction of split semisimple Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string report_format = "text";
  app.add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string a, b, out, name;
  std::function<Outcome()> run;
  std::string command;

  auto* check_hopf_cmd = app.add_subcommand("check-hopf", "Check the Hopf algebra axioms");
  check_hopf_cmd->add_option("FILE", a)->required();
  check_hopf_cmd->callback([&] {
    command = "check-hopf";
    run = [&] { return cmd_check_hopf(a); };
  });

  auto* check_cat = app.add_subcommand(
      "check-category", "Check pentagon, and with a fiber functor the tensorator and duality");
  check_cat->add_option("FUSION_FILE", a)->required();
  check_cat->add_option("FIBER_FILE", b);
  check_cat->callback([&] {
    command = "check-category";
    run = [&] { return cmd_check_category(a, b); };
  });

  auto* recon = app.add_subcommand("reconstruct", "Build End(F) as a Hopf algebra");
  recon->add_option("FUSION_FILE", a)->required();
  recon->add_option("FIBER_FILE", b)->required();
  recon->add_option("-o,--output", out, "Output Hopf document")->required();
  recon->callback([&] {
    command = "reconstruct";
    run = [&] { return cmd_reconstruct(a, b, out); };
  });

  auto* repcat = app.add_subcommand(
      "repcat", "Skeletalize Mod(H); writes OUT.fusion.json and OUT.fiber.json");
  repcat->add_option("HOPF_FILE", a)->required();
  repcat->add_option("MODULES_FILE", b)->required();
  repcat->add_option("-o,--output", out, "Output prefix")->required();
  repcat->callback([&] {
    command = "repcat";
    run = [&] { return cmd_repcat(a, b, out); };
  });

  auto* roundtrip = app.add_subcommand("roundtrip", "Certify gamma: H -> End(Forget)");
  roundtrip->add_option("HOPF_FILE", a)->required();
  roundtrip->add_option("MODULES_FILE", b)->required();
  roundtrip->callback([&] {
    command = "roundtrip";
    run = [&] { return cmd_roundtrip(a, b); };
  });

  auto* example = app.add_subcommand("example", "Write a shipped example");
  example->add_option("NAME", name)->required()->check(CLI::IsMember(example_names()));
  example->add_option("-o,--output", out, "Output document")->required();
  example->callback([&] {
    command = "example";
    run = [&] { return cmd_example(name, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = report_format == "json" ? Format::json : Format::text;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = run();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (fmt == Format::json)
      print_json(o.report, o.written, ms);
    else
      print_text(o.report, o.written, ms);
    return o.report.passed() ? 0 : 1;
  } catch (const Error& e) {
    print_error(fmt, command, e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error(fmt, command, e.what());
    return 2;
  }
}

// f4orbit: classify elements of the exceptional Jordan algebra J^1 under
// F4(-20), build explicit transporter words, verify operators, and emit
// stabilizer witnesses. JSON in, JSON out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "albert/json_io.hpp"
#include "albert/selftest.hpp"

namespace {

using albert::json;

json read_json(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw albert::ParseError("cannot open input file: " + path);
    in = &file;
  }
  json j;
  try {
    *in >> j;
  } catch (const std::exception& e) {
    throw albert::ParseError(std::string("bad JSON: ") + e.what());
  }
  return j;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw albert::ParseError("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit classification in the exceptional Jordan algebra J^1 under F4(-20)"};
  app.require_subcommand(1);

  std::string input = "-", output;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int case_id = 0;
  std::string suite;
  int digits = 17;

  auto* classify_cmd = app.add_subcommand("classify", "classify a Jordan element (exact)");
  classify_cmd->add_option("--input", input, "JSON file with a Jordan element (default stdin)");
  classify_cmd->add_option("--output", output, "output path (default stdout)");
  classify_cmd->add_option("--digits", digits, "decimal digits for symbolic renderings");

  auto* reduce_cmd = app.add_subcommand("reduce", "construct a transporter to the canonical form");
  reduce_cmd->add_option("--input", input, "JSON file with a Jordan element (default stdin)");
  reduce_cmd->add_option("--output", output, "output path (default stdout)");
  reduce_cmd->add_option("--tol", tol, "float-path residual tolerance (default 1e-8)");

  auto* verify_cmd = app.add_subcommand("verify", "check that an operator is an automorphism");
  verify_cmd->add_option("--input", input, "JSON file with an operator (default stdin)");
  verify_cmd->add_option("--output", output, "output path (default stdout)");

  auto* witness_cmd = app.add_subcommand("witness", "emit a stabilizer witness for a case");
  witness_cmd->add_option("--case", case_id, "orbit case 1..12")->required();
  witness_cmd->add_option("--output", output, "output path (default stdout)");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suites");
  selftest_cmd->add_option("--suite", suite, "substring filter on suite names");
  selftest_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  selftest_cmd->add_option("--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      const auto X = albert::jordan_from_json<albert::Rational>(read_json(input));
      json rep = albert::to_json(albert::classify(X));
      if (digits != 17) {
        // re-render decimal approximations at the requested precision
        std::function<void(json&)> walk = [&](json& node) {
          if (node.is_object()) {
            for (auto& [k, v] : node.items()) {
              if (k == "approx" && v.is_string()) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.*g", digits, std::stod(v.get<std::string>()));
                v = std::string(buf);
              } else {
                walk(v);
              }
            }
          } else if (node.is_array()) {
            for (auto& v : node) walk(v);
          }
        };
        walk(rep);
      }
      write_output(rep, output);
    } else if (*reduce_cmd) {
      const auto X = albert::jordan_from_json<albert::Rational>(read_json(input));
      const auto oc = albert::classify(X);
      auto res = albert::reduce(X, oc);
      if (!res.exact && res.residual > tol)
        throw albert::ResidualTooLarge("residual above --tol");
      write_output(albert::to_json(res), output);
    } else if (*verify_cmd) {
      const json j = read_json(input);
      json rep;
      // decide backend: rational unless any scalar fails exact parsing
      try {
        auto g = albert::operator_from_json<albert::Rational>(j);
        const auto v = albert::verify_automorphism(g);
        rep = json{{"ok", v.ok}, {"backend", "exact"}};
        if (!v.ok) rep["first_violated_pair"] = json::array({v.bi, v.bj});
        if (!v.ok) rep["residual"] = albert::scalar_ops<double>::str(v.residual);
      } catch (const albert::ParseError&) {
        auto g = albert::operator_from_json<double>(j);
        const auto v = albert::verify_automorphism(g);
        rep = json{{"ok", v.ok}, {"backend", "float"}};
        if (!v.ok) rep["first_violated_pair"] = json::array({v.bi, v.bj});
        if (!v.ok) rep["residual"] = albert::scalar_ops<double>::str(v.residual);
      }
      write_output(rep, output);
      if (!rep["ok"].get<bool>()) return 1;
    } else if (*witness_cmd) {
      if (case_id < 1 || case_id > 12) throw albert::DomainError("--case must be 1..12");
      albert::OrbitClass oc;
      oc.case_id = case_id;
      using albert::AlgebraicReal;
      using albert::rat;
      if (case_id <= 3)
        oc.params = albert::ParamsDistinct{
            {AlgebraicReal(rat(3)), AlgebraicReal(rat(2)), AlgebraicReal(rat(1))}, case_id};
      else if (case_id == 4)
        oc.params = albert::ParamsComplexPair{AlgebraicReal(rat(-1)), AlgebraicReal(rat(1, 2)),
                                              AlgebraicReal(rat(4))};
      else if (case_id <= 8)
        oc.params = albert::ParamsDoubleRoot{rat(5), rat(2)};
      else
        oc.params = albert::ParamsTripleRoot{rat(2)};
      write_output(albert::to_json(albert::stabilizer_witness(oc)), output);
    } else if (*selftest_cmd) {
      const auto results = albert::selftest::run_all(seed, suite);
      json out = json::array();
      bool ok = true;
      for (const auto& r : results) {
        out.push_back(json{{"suite", r.name},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"status", r.failures == 0 ? "pass" : "fail"}});
        if (r.failures) ok = false;
      }
      write_output(out, output);
      if (!ok) return 1;
    }
  } catch (const albert::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const albert::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// schubert: command-line front end to the Schubert calculus engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "schubert/errors.hpp"
#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/halving.hpp"
#include "schubert/json_io.hpp"
#include "schubert/problem.hpp"
#include "schubert/schur.hpp"
#include "schubert/selftest.hpp"

using namespace schubert;

namespace {

struct Output {
  std::string format = "json";
  bool timing = false;
};

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Schema, what + ": " + e.what());
  }
}

// "2,1", "[2,1]", "()" and "" all name partitions.
Partition parse_partition(std::string text) {
  if (text == "()" || text == "[]" || text.empty()) return Partition{};
  if (text.front() != '[') text = "[" + text + "]";
  return partition_from_json(parse_json_text(text, "partition"));
}

void emit(const Output& out, const Json& json, const std::string& text) {
  if (out.format == "json")
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string class_text(const Json& cls) {
  std::ostringstream s;
  bool first = true;
  for (const auto& t : cls.at("terms")) {
    s << (first ? "" : " + ") << t.at("coeff").get<std::string>() << "*s";
    for (const char* key : {"partition", "permutation"})
      if (t.contains(key)) s << t.at(key).dump();
    first = false;
  }
  return first ? "0" : s.str();
}

Json class_json(const std::variant<GrassmannClass, FlagClass, HalvingClass>& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

std::variant<GrassmannClass, FlagClass, HalvingClass> basis_class(const SpaceDescriptor& space,
                                                                   const OrderedSetPartition& index) {
  return std::visit(
      [&](const auto& s) -> std::variant<GrassmannClass, FlagClass, HalvingClass> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GrassmannianDescriptor>)
          return GrassmannClass::schubert(s, osp_to_partition(index));
        else if constexpr (std::is_same_v<T, FlagDescriptor>)
          return FlagClass::schubert(s, index);
        else
          return HalvingClass::schubert(s, index);
      },
      space);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int cmd_solve(const Output& out, const std::string& input, const std::string& mode, int jobs) {
  const Json document = parse_json_text(read_input(input), input);
  const auto problems = problems_from_json(document);
  std::optional<SolveMode> override;
  if (!mode.empty()) override = parse_mode(mode);
  const auto reports = solve_batch(problems, override, jobs);
  const bool batch = document.is_array() || document.contains("problems");
  int code = 0;
  Json all = Json::array();
  std::string text;
  for (const auto& r : reports) {
    if (code == 0) code = exit_code(r);
    all.push_back(report_to_json(r, out.timing));
    text += report_to_text(r, out.timing);
    if (r.error) std::cerr << "error: " << r.error->message << "\n";
  }
  if (!text.empty() && text.back() == '\n') text.pop_back();
  emit(out, batch ? all : all.front(), text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert calculus on complex, real even, quaternionic and octonionic flag manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", out.timing, "Include wall-clock timings in reports");

  std::string input, mode;
  int jobs = 1;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file (or a batch of problems)");
  solve_cmd->add_option("--input", input, "Problem file, or - for stdin")->required();
  solve_cmd->add_option("--mode", mode, "Override the mode: count, class or lower_bound");
  solve_cmd->add_option("--jobs", jobs, "Worker threads for batches")->check(CLI::PositiveNumber);

  std::string lambda_text, mu_text, nu_text;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}, or the full product");
  lr->add_option("lambda", lambda_text, "Partition, e.g. 2,1")->required();
  lr->add_option("mu", mu_text, "Partition")->required();
  lr->add_option("nu", nu_text, "Partition; omit for the whole expansion");

  std::string space_text, a_text, b_text;
  auto* mult = app.add_subcommand("mult", "Product of two Schubert classes");
  mult->add_option("--space", space_text, "Space, e.g. gr:2:4, fl:1,1,1, rgr:4:8 or JSON")->required();
  mult->add_option("a", a_text, "Index: partition, permutation or OSP as JSON")->required();
  mult->add_option("b", b_text, "Index")->required();

  auto* giam = app.add_subcommand("giambelli", "Evaluate the Giambelli determinant for sigma_lambda");
  giam->add_option("--space", space_text, "Complex Grassmannian, e.g. gr:3:6")->required();
  giam->add_option("lambda", lambda_text, "Partition")->required();

  int e = 0, f = 0, rho = 0, maps = 0;
  auto* port = app.add_subcommand("porteous", "Count points where m generic maps S -> Q drop to rank <= rho");
  port->add_option("--space", space_text, "Complex or real even Grassmannian")->required();
  port->add_option("e", e, "Rank of the source")->required();
  port->add_option("f", f, "Rank of the target")->required();
  port->add_option("rho", rho, "Rank bound")->required();
  port->add_option("m", maps, "Number of maps")->required();

  std::string class_text_arg;
  auto* kap = app.add_subcommand("kappa", "Apply kappa to a class on a halving space");
  kap->add_option("--space", space_text, "Halving space, e.g. rgr:4:8, hgr:2:4, ofl")->required();
  kap->add_option("class", class_text_arg, "JSON list of {index, coeff} terms, or a full class object")->required();

  std::string level;
  std::string fault;
  auto* self = app.add_subcommand("selftest", "Run the oracle-equivalence and invariant suites");
  self->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->default_val("quick");
  self->add_option("--inject-fault", fault, "Deliberately break a kernel result (lr-sign)")
      ->check(CLI::IsMember({"lr-sign"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(out, input, mode, jobs);

    if (*lr) {
      const auto lambda = parse_partition(lambda_text);
      const auto mu = parse_partition(mu_text);
      Json j = {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
      if (!nu_text.empty()) {
        const auto nu = parse_partition(nu_text);
        const auto c = lr_coefficient(lambda, mu, nu);
        j["nu"] = to_json(nu);
        j["result"] = to_json(c);
        emit(out, j, c.get_str());
      } else {
        const auto product = schur_multiply(SchurExpansion::basis(lambda), SchurExpansion::basis(mu));
        j["result"] = to_json(product);
        emit(out, j, product.to_string());
      }
      return 0;
    }

    if (*mult) {
      const auto space = parse_space(space_text);
      const auto a = basis_class(space, index_from_json(parse_json_text(a_text, "a"), space));
      const auto b = basis_class(space, index_from_json(parse_json_text(b_text, "b"), space));
      const auto product = std::visit(
          [&](const auto& x) -> std::variant<GrassmannClass, FlagClass, HalvingClass> {
            using T = std::decay_t<decltype(x)>;
            return x * std::get<T>(b);
          },
          a);
      const Json j = {{"space", to_json(space)}, {"result", class_json(product)}};
      emit(out, j, class_text(j.at("result")));
      return 0;
    }

    if (*giam) {
      const auto space = parse_space(space_text);
      const auto* g = std::get_if<GrassmannianDescriptor>(&space);
      if (!g) throw Error(ErrorKind::Schema, "giambelli needs a complex Grassmannian");
      const auto lambda = parse_partition(lambda_text);
      const auto value = giambelli(lambda, *g);
      const Json j = {{"space", to_json(space)}, {"lambda", to_json(lambda)}, {"result", to_json(value)}};
      emit(out, j, class_text(j.at("result")));
      return 0;
    }

    if (*port) {
      Json problem = {{"space", to_json(parse_space(space_text))},
                      {"degeneracy", {{"e", e}, {"f", f}, {"rho", rho}, {"maps", maps}}}};
      const auto file = problem_from_json(problem);
      const auto mode = std::holds_alternative<HalvingSpaceDescriptor>(file.problem.space) ? SolveMode::LowerBound
                                                                                            : SolveMode::Count;
      const auto report = solve(file, mode);
      if (report.error) std::cerr << "error: " << report.error->message << "\n";
      else emit(out, report_to_json(report, out.timing), report_to_text(report, out.timing));
      return exit_code(report);
    }

    if (*kap) {
      const auto space = parse_space(space_text);
      const auto* h = std::get_if<HalvingSpaceDescriptor>(&space);
      if (!h) throw Error(ErrorKind::Schema, "kappa needs a real even, quaternionic or octonionic space");
      Json cls = parse_json_text(class_text_arg, "class");
      if (cls.is_array()) cls = {{"space", to_json(space)}, {"terms", cls}};
      const auto parsed = class_from_json(cls);
      const auto* a = std::get_if<HalvingClass>(&parsed);
      if (!a || !(a->space() == *h)) throw Error(ErrorKind::Schema, "class does not live on " + h->to_string());
      const auto image = kappa(*a);
      const Json result = std::visit([](const auto& x) { return to_json(x); }, image);
      const Json j = {{"input", class_json(parsed)}, {"result", result}};
      emit(out, j, class_text(result));
      return 0;
    }

    if (*self) {
      SelfTestOptions options;
      options.flip_lr_sign = fault == "lr-sign";
      const auto report = run_selftest(level == "full" ? SelfTestLevel::Full : SelfTestLevel::Quick, options);
      print_selftest(std::cout, report);
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code(err.kind());
  }
  return 0;
}

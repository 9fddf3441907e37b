#include "schubert/problem.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace schubert {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

int space_dimension(const SpaceDescriptor& space) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalvingSpaceDescriptor>)
          return s.fixed_dimension();
        else
          return s.complex_dimension();
      },
      space);
}

// Halving spaces count codimension in units of the fixed-point space, so a
// doubled index DI contributes |I|.
int condition_degree(const SpaceDescriptor& space, const OrderedSetPartition& index) {
  const int length = osp_length(index);
  if (const auto* h = std::get_if<HalvingSpaceDescriptor>(&space); h && h->kind == HalvingKind::RealEven)
    return length / 4;
  return length;
}

// Partitions read better than OSPs on Grassmannians.
std::string index_label(const SpaceDescriptor& space, const OrderedSetPartition& index) {
  const auto* h = std::get_if<HalvingSpaceDescriptor>(&space);
  if (std::holds_alternative<GrassmannianDescriptor>(space) || (h && h->is_grassmannian()))
    return osp_to_partition(index).to_string();
  return index.to_string();
}

void check_dimension(const SchubertProblem& problem) {
  const int dim = space_dimension(problem.space);
  int total = 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < problem.conditions.size(); ++i) {
    const auto& cond = problem.conditions[i];
    const int degree = condition_degree(problem.space, cond.index);
    total += degree * cond.count;
    detail << (i ? ", " : "") << "condition " << i << " " << index_label(problem.space, cond.index) << " x" << cond.count
           << " (degree " << degree << ")";
  }
  if (total != dim)
    throw Error(ErrorKind::DimensionMismatch, detail.str() + " add up to degree " + std::to_string(total) + " but " +
                                                  to_string(problem.space) + " needs " + std::to_string(dim));
}

void check_doubled(const SchubertProblem& problem) {
  const auto* h = std::get_if<HalvingSpaceDescriptor>(&problem.space);
  if (!h || h->kind != HalvingKind::RealEven) return;
  for (std::size_t i = 0; i < problem.conditions.size(); ++i)
    if (!is_double(problem.conditions[i].index))
      throw Error(ErrorKind::NotADoubleIndex, "condition " + std::to_string(i) + " " +
                                                  index_label(problem.space, problem.conditions[i].index) +
                                                  " is not a doubled index");
}

Json problem_to_json(const SchubertProblem& problem) {
  Json conditions = Json::array();
  const bool grass = std::holds_alternative<GrassmannianDescriptor>(problem.space);
  for (const auto& cond : problem.conditions) {
    Json index = grass ? to_json(osp_to_partition(cond.index)) : to_json(cond.index);
    conditions.push_back({{"index", index}, {"count", cond.count}});
  }
  return {{"space", to_json(problem.space)}, {"conditions", conditions}, {"mode", to_string(problem.mode)}};
}

ComplexClass complex_product(const FixedPointSpace& space, const std::vector<Condition>& conditions) {
  ComplexClass acc = complex_one(space);
  for (const auto& cond : conditions) {
    const auto factor = complex_schubert(space, cond.index);
    for (int i = 0; i < cond.count; ++i) acc = complex_multiply(acc, factor);
  }
  return acc;
}

FixedPointSpace as_fixed(const SpaceDescriptor& space) {
  if (const auto* g = std::get_if<GrassmannianDescriptor>(&space)) return *g;
  return std::get<FlagDescriptor>(space);
}

GrassmannClass porteous_locus(const GrassmannianDescriptor& space, const DegeneracySpec& d) {
  if (d.e != space.k || d.f != space.l())
    throw Error(ErrorKind::InvalidArgument, "degeneracy maps must be Hom(S, Q) with ranks (" + std::to_string(space.k) +
                                                ", " + std::to_string(space.l()) + ")");
  const int top = std::max(d.f - d.rho + d.e - d.rho - 1, 0);
  return thom_porteous(space, d.e, d.f, d.rho,
                       virtual_chern_classes(BundleSpec::sub(), BundleSpec::quot(), top, space));
}

void solve_degeneracy(const ProblemFile& file, SolveMode mode, Report& report) {
  const auto& d = *file.degeneracy;
  const auto& space = file.problem.space;
  if (!file.problem.conditions.empty()) schema("a degeneracy problem takes no Schubert conditions");
  if (d.maps < 0) schema("\"maps\" must be nonnegative");
  if (const auto* g = std::get_if<GrassmannianDescriptor>(&space)) {
    if (mode == SolveMode::Count) {
      report.result = to_json(degeneracy_count(*g, d.e, d.f, d.rho, d.maps));
      report.provenance = "Thom-Porteous determinant in c(Q - S), raised to the number of maps and integrated";
    } else if (mode == SolveMode::Class) {
      report.result = to_json(gr_power(porteous_locus(*g, d), static_cast<unsigned>(d.maps)));
      report.provenance = "Thom-Porteous determinant in c(Q - S), raised to the number of maps";
    } else {
      schema("mode lower_bound applies to real even spaces");
    }
    return;
  }
  const auto* h = std::get_if<HalvingSpaceDescriptor>(&space);
  if (!h || h->kind != HalvingKind::RealEven || !h->is_grassmannian())
    schema("degeneracy problems need a complex or real even Grassmannian");
  if (mode != SolveMode::LowerBound) schema("degeneracy problems on real spaces only support mode lower_bound");
  report.result = to_json(real_degeneracy_lower_bound(*h, d.e, d.f, d.rho, d.maps));
  report.provenance =
      "real ranks halved; Thom-Porteous count of the halved problem on the complex fixed-point Grassmannian";
  report.halved_problem = {{"space", to_json(SpaceDescriptor(std::get<GrassmannianDescriptor>(h->fixed_point)))},
                           {"degeneracy", {{"e", d.e / 2}, {"f", d.f / 2}, {"rho", d.rho / 2}, {"maps", d.maps}}},
                           {"mode", "count"}};
}

void solve_conditions(const ProblemFile& file, SolveMode mode, Report& report) {
  SchubertProblem problem = file.problem;
  problem.mode = mode;
  const auto& space = problem.space;
  const auto* h = std::get_if<HalvingSpaceDescriptor>(&space);
  check_doubled(problem);
  if (mode != SolveMode::Class) check_dimension(problem);

  if (!h) {
    const auto fixed = as_fixed(space);
    const bool grass = std::holds_alternative<GrassmannianDescriptor>(space);
    if (mode == SolveMode::LowerBound) schema("mode lower_bound applies to real even spaces");
    if (mode == SolveMode::Count) {
      report.result = to_json(complex_intersection_number(fixed, problem.conditions));
      report.provenance = grass ? "Littlewood-Richardson products integrated against the point class"
                                : "Schubert polynomial products integrated against the point class";
    } else {
      report.result = to_json(complex_product(fixed, problem.conditions));
      report.provenance = grass ? "Littlewood-Richardson products in the Schubert basis"
                                : "Schubert polynomial products in the Schubert basis";
    }
    return;
  }

  const auto halved = halved_problem(problem);
  report.halved_problem = problem_to_json(halved);
  if (h->kind == HalvingKind::RealEven) {
    if (mode == SolveMode::Count)
      schema("real problems have no exact count; use mode lower_bound");
    if (mode == SolveMode::LowerBound) {
      report.result = to_json(real_lower_bound(problem));
      report.provenance =
          "doubled indices halved by kappa; the signed real count equals the complex intersection number";
      return;
    }
  } else if (mode != SolveMode::Class) {
    report.result = to_json(quaternionic_count(problem));
    report.provenance = h->kind == HalvingKind::Quaternionic
                            ? "kappa identifies the count with the complex problem on the fixed-point space"
                            : "kappa to Fl(H^3) composed with kappa to Fl(C^3); all multiplicities are 1";
    return;
  }
  HalvingClass acc = HalvingClass::one(*h);
  for (const auto& cond : problem.conditions) {
    const auto factor = HalvingClass::schubert(*h, cond.index);
    for (int i = 0; i < cond.count; ++i) acc = halving_multiply(acc, factor);
  }
  report.result = to_json(acc);
  report.provenance = "products of the halved classes in the complex fixed-point ring, re-indexed on the halving side";
}

}  // namespace

std::string_view to_string(SolveMode mode) noexcept {
  switch (mode) {
    case SolveMode::Count: return "count";
    case SolveMode::Class: return "class";
    case SolveMode::LowerBound: return "lower_bound";
  }
  return "count";
}

SolveMode parse_mode(const std::string& text) {
  if (text == "count") return SolveMode::Count;
  if (text == "class") return SolveMode::Class;
  if (text == "lower_bound") return SolveMode::LowerBound;
  schema("unknown mode \"" + text + "\"");
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) schema("a problem must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "space" && key != "conditions" && key != "mode" && key != "degeneracy" && key != "name")
      schema("unknown field \"" + key + "\"");
  if (!j.contains("space")) schema("missing field \"space\"");
  ProblemFile file;
  file.echo = j;
  file.problem.space = space_from_json(j.at("space"));
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) schema("\"mode\" must be a string");
    file.problem.mode = parse_mode(j.at("mode").get<std::string>());
  }
  if (j.contains("conditions")) {
    const auto& conds = j.at("conditions");
    if (!conds.is_array()) schema("\"conditions\" must be an array");
    for (const auto& c : conds) {
      if (!c.is_object() || !c.contains("index")) schema("every condition needs an \"index\"");
      Condition cond{index_from_json(c.at("index"), file.problem.space), 1};
      if (c.contains("count")) {
        if (!c.at("count").is_number_integer() || c.at("count").get<long long>() < 1 ||
            c.at("count").get<long long>() > 1 << 20)
          schema("\"count\" must be a positive integer");
        cond.count = c.at("count").get<int>();
      }
      file.problem.conditions.push_back(std::move(cond));
    }
  }
  if (j.contains("degeneracy")) {
    const auto& d = j.at("degeneracy");
    auto field = [&](const char* key) {
      if (!d.is_object() || !d.contains(key) || !d.at(key).is_number_integer())
        schema(std::string("degeneracy needs an integer \"") + key + "\"");
      return d.at(key).get<int>();
    };
    file.degeneracy = DegeneracySpec{field("e"), field("f"), field("rho"), field("maps")};
  } else if (!j.contains("conditions")) {
    schema("a problem needs \"conditions\" or \"degeneracy\"");
  }
  return file;
}

std::vector<ProblemFile> problems_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("problems")) list = &j.at("problems");
  std::vector<ProblemFile> out;
  if (list->is_array()) {
    if (list->empty()) schema("empty problem list");
    for (const auto& p : *list) out.push_back(problem_from_json(p));
  } else {
    out.push_back(problem_from_json(*list));
  }
  return out;
}

Report solve(const ProblemFile& file, std::optional<SolveMode> mode_override) {
  Report report;
  report.echo = file.echo;
  const auto start = std::chrono::steady_clock::now();
  const SolveMode mode = mode_override.value_or(file.problem.mode);
  try {
    if (file.degeneracy)
      solve_degeneracy(file, mode, report);
    else
      solve_conditions(file, mode, report);
  } catch (const Error& e) {
    report.result = nullptr;
    report.provenance.clear();
    report.error = ReportError{e.kind(), e.what()};
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> solve_batch(const std::vector<ProblemFile>& files, std::optional<SolveMode> mode_override,
                                int jobs) {
  std::vector<Report> reports(files.size());
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, std::max(1, static_cast<int>(files.size()))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) reports[i] = solve(files[i], mode_override);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  return reports;
}

Json report_to_json(const Report& report, bool timing) {
  Json out = {{"input", report.echo}};
  if (report.error) {
    out["error"] = {{"kind", to_string(report.error->kind)}, {"message", report.error->message}};
  } else {
    out["result"] = report.result;
    out["provenance"] = report.provenance;
    if (!report.halved_problem.is_null()) out["halved_problem"] = report.halved_problem;
  }
  if (timing) out["seconds"] = report.seconds;
  return out;
}

std::string report_to_text(const Report& report, bool timing) {
  std::ostringstream out;
  if (report.echo.contains("space")) out << "space: " << report.echo.at("space").dump() << "\n";
  if (report.error) {
    out << "error: " << report.error->message << "\n";
  } else {
    out << "result: " << (report.result.is_string() ? report.result.get<std::string>() : report.result.dump()) << "\n";
    out << "provenance: " << report.provenance << "\n";
    if (!report.halved_problem.is_null()) out << "halved problem: " << report.halved_problem.dump() << "\n";
  }
  if (timing) out << "seconds: " << report.seconds << "\n";
  return out.str();
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotADouble:
    case ErrorKind::BoxOverflow:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DegreeOutOfRange: return 2;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotADoubleIndex: return 3;
    default: return 4;
  }
}

int exit_code(const Report& report) noexcept { return report.error ? exit_code(report.error->kind) : 0; }

}  // namespace schubert

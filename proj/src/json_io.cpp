#include "schubert/json_io.hpp"

#include <charconv>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

// Runs a constructor, reporting validation failures as schema violations.
template <class F>
auto validated(F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::BoxOverflow ||
        e.kind() == ErrorKind::NotADouble)
      schema(e.what());
    throw;
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) schema(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) schema(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> dims_field(const Json& j) {
  if (!j.contains("dims")) schema("missing field \"dims\"");
  return int_array(j.at("dims"), "dims");
}

bool is_array_of_arrays(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& v : j)
    if (!v.is_array()) return false;
  return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0) schema("\"" + text + "\" is not a decimal integer");
  return n;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) schema("\"" + text + "\" is not a rational number");
  q.canonicalize();
  return q;
}

// Writers ---------------------------------------------------------------------------

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const OrderedSetPartition& osp) { return Json(osp.blocks()); }

Json to_json(const Permutation& w) { return Json(w.one_line()); }

Json to_json(const Integer& n) { return n.get_str(); }

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : e.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

Json to_json(const SpaceDescriptor& space) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GrassmannianDescriptor>) {
          return {{"type", "complex_grassmannian"}, {"k", s.k}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, FlagDescriptor>) {
          return {{"type", "complex_flag"}, {"dims", s.dims}};
        } else {
          const auto sizes = s.index_block_sizes();
          int total = 0;
          for (int d : sizes) total += d;
          switch (s.kind) {
            case HalvingKind::RealEven:
              if (s.is_grassmannian()) return {{"type", "real_even_grassmannian"}, {"k", sizes[0]}, {"n", total}};
              return {{"type", "real_even_flag"}, {"dims", sizes}};
            case HalvingKind::Quaternionic:
              if (s.is_grassmannian()) return {{"type", "quaternionic_grassmannian"}, {"k", sizes[0]}, {"n", total}};
              return {{"type", "quaternionic_flag"}, {"dims", sizes}};
            case HalvingKind::Octonionic: return {{"type", "octonionic_flag"}};
          }
          return {};
        }
      },
      space);
}

Json to_json(const GrassmannClass& a) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : a.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"space", to_json(SpaceDescriptor(a.space()))}, {"terms", terms}};
}

Json to_json(const FlagClass& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms()) terms.push_back({{"permutation", to_json(w)}, {"coeff", to_json(c)}});
  return {{"space", to_json(SpaceDescriptor(a.space()))}, {"terms", terms}};
}

Json to_json(const HalvingClass& a) {
  const auto& space = a.space();
  Json terms = Json::array();
  for (const auto& [index, c] : a.terms()) {
    if (space.is_grassmannian())
      terms.push_back({{"partition", to_json(osp_to_partition(index))}, {"coeff", to_json(c)}});
    else
      terms.push_back({{"permutation", to_json(osp_to_permutation(index))}, {"coeff", to_json(c)}});
  }
  return {{"space", to_json(SpaceDescriptor(space))}, {"terms", terms}};
}

Json to_json(const ComplexClass& a) {
  return std::visit([](const auto& c) { return to_json(c); }, a);
}

// Readers ---------------------------------------------------------------------------

Partition partition_from_json(const Json& j) {
  auto parts = int_array(j, "partition");
  return validated([&] { return Partition(std::move(parts)); });
}

OrderedSetPartition osp_from_json(const Json& j) {
  if (!j.is_array()) schema("an ordered set partition must be an array of arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) blocks.push_back(int_array(b, "an OSP block"));
  return validated([&] { return OrderedSetPartition(std::move(blocks)); });
}

Permutation permutation_from_json(const Json& j) {
  auto one_line = int_array(j, "permutation");
  return validated([&] { return Permutation(std::move(one_line)); });
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  schema("expected an integer or a decimal string");
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema("expected a rational number as a string or an integer");
}

SpaceDescriptor space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) schema("space needs a string \"type\"");
  const auto type = j.at("type").get<std::string>();
  return validated([&]() -> SpaceDescriptor {
    if (type == "complex_grassmannian") return GrassmannianDescriptor(int_field(j, "k"), int_field(j, "n"));
    if (type == "complex_flag") return FlagDescriptor(dims_field(j));
    if (type == "real_even_grassmannian")
      return HalvingSpaceDescriptor::real_even_grassmannian(int_field(j, "k"), int_field(j, "n"));
    if (type == "real_even_flag") return HalvingSpaceDescriptor::real_even_flag(dims_field(j));
    if (type == "quaternionic_grassmannian")
      return HalvingSpaceDescriptor::quaternionic_grassmannian(int_field(j, "k"), int_field(j, "n"));
    if (type == "quaternionic_flag") return HalvingSpaceDescriptor::quaternionic_flag(dims_field(j));
    if (type == "octonionic_flag") return HalvingSpaceDescriptor::octonionic_flag();
    schema("unknown space type \"" + type + "\"");
  });
}

SpaceDescriptor parse_space(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      schema(std::string("space: ") + e.what());
    }
    return space_from_json(j);
  }
  const auto colon = text.find(':');
  const std::string tag = text.substr(0, colon);
  std::vector<int> numbers;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    for (char& ch : rest)
      if (ch == ':' || ch == ',') ch = ' ';
    std::istringstream in(rest);
    std::string token;
    while (in >> token) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) schema("bad number \"" + token + "\" in space " + text);
      numbers.push_back(v);
    }
  }
  auto two = [&]() {
    if (numbers.size() != 2) schema("space " + text + " needs K:N");
  };
  Json j;
  if (tag == "gr" || tag == "rgr" || tag == "hgr") {
    two();
    j = {{"type", tag == "gr" ? "complex_grassmannian"
                  : tag == "rgr" ? "real_even_grassmannian"
                                 : "quaternionic_grassmannian"},
         {"k", numbers[0]},
         {"n", numbers[1]}};
  } else if (tag == "fl" || tag == "rfl" || tag == "hfl") {
    j = {{"type", tag == "fl" ? "complex_flag" : tag == "rfl" ? "real_even_flag" : "quaternionic_flag"}, {"dims", numbers}};
  } else if (tag == "ofl") {
    j = {{"type", "octonionic_flag"}};
  } else {
    schema("unknown space \"" + text + "\"");
  }
  return space_from_json(j);
}

std::vector<int> index_block_sizes(const SpaceDescriptor& space) {
  return std::visit(
      [](const auto& s) -> std::vector<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GrassmannianDescriptor>) {
          return {s.k, s.l()};
        } else if constexpr (std::is_same_v<T, FlagDescriptor>) {
          return s.dims;
        } else {
          return s.index_block_sizes();
        }
      },
      space);
}

namespace {

bool is_grassmannian_space(const SpaceDescriptor& space) {
  if (std::holds_alternative<GrassmannianDescriptor>(space)) return true;
  if (const auto* h = std::get_if<HalvingSpaceDescriptor>(&space)) return h->is_grassmannian();
  return false;
}

}  // namespace

OrderedSetPartition index_from_json(const Json& j, const SpaceDescriptor& space) {
  const auto sizes = index_block_sizes(space);
  OrderedSetPartition osp;
  if (is_array_of_arrays(j)) {
    osp = osp_from_json(j);
  } else if (is_grassmannian_space(space)) {
    const auto lambda = partition_from_json(j);
    osp = validated([&] { return partition_to_osp(lambda, sizes[0], sizes[1]); });
  } else {
    const auto w = permutation_from_json(j);
    int n = 0;
    for (int d : sizes) n += d;
    if (w.size() > n) schema(w.to_string() + " is not in S_" + std::to_string(n));
    if (!w.is_minimal_coset_rep(sizes)) schema(w.to_string() + " is not a minimal coset representative");
    osp = permutation_to_osp(w, sizes);
  }
  if (osp.block_sizes() != sizes) schema(osp.to_string() + " does not have the block sizes of " + to_string(space));
  return osp;
}

std::variant<GrassmannClass, FlagClass, HalvingClass> class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("terms") || !j.at("terms").is_array())
    schema("a class needs \"space\" and \"terms\"");
  const auto space = space_from_json(j.at("space"));
  std::vector<std::pair<OrderedSetPartition, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff")) schema("every term needs a \"coeff\"");
    const Json* index = nullptr;
    for (const char* key : {"index", "partition", "permutation"})
      if (t.contains(key)) index = &t.at(key);
    if (!index) schema("every term needs an \"index\", \"partition\" or \"permutation\"");
    terms.emplace_back(index_from_json(*index, space), rational_from_json(t.at("coeff")));
  }
  auto integral = [](const Rational& q) {
    if (q.get_den() != 1) schema("complex class coefficients must be integers");
    return Integer(q.get_num());
  };
  return std::visit(
      [&](const auto& s) -> std::variant<GrassmannClass, FlagClass, HalvingClass> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GrassmannianDescriptor>) {
          GrassmannClass c(s);
          for (const auto& [osp, q] : terms) c.add_term(osp_to_partition(osp), integral(q));
          return c;
        } else if constexpr (std::is_same_v<T, FlagDescriptor>) {
          FlagClass c(s);
          for (const auto& [osp, q] : terms) c.add_term(osp_to_permutation(osp), integral(q));
          return c;
        } else {
          HalvingClass c(s);
          for (const auto& [osp, q] : terms) c.add_term(osp, q);
          return c;
        }
      },
      space);
}

}  // namespace schubert

#include "levi_slope/group_spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace levi_slope {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("bad " + what + ": '" + s + "'");
  return std::stoi(s);
}

IntMatrix matrix_from_json(const nlohmann::json& rows, const std::string& what) {
  if (!rows.is_array()) throw InvalidInput(what + " must be an array of rows");
  std::vector<IntVector> out;
  std::size_t width = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidInput(what + " must be an array of rows");
    IntVector r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidInput(what + " entries must be integers");
      r.emplace_back(static_cast<long>(x.get<long long>()));
    }
    if (!out.empty() && r.size() != width) throw InvalidInput(what + " rows differ in length");
    width = r.size();
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out, width);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::pair<char, int> parse_simple_type(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.size() < 2) throw InvalidInput("bad simple type '" + raw + "' (expected e.g. E7)");
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
  const int rank = parse_positive(digits, "rank in '" + raw + "'");
  standard_cartan(t, rank);  // validates the pair
  return {t, rank};
}

RootDatum parse_group_token(const std::string& raw, Isogeny default_isogeny) {
  const std::string token = trim(raw);
  if (token.empty()) throw InvalidInput("empty group token");
  const std::string low = lower(token);
  if (low.rfind("gl", 0) == 0) return build_gl(parse_positive(low.substr(2), "GL size"));
  Isogeny iso = default_isogeny;
  std::string type = token;
  if (auto colon = token.find(':'); colon != std::string::npos) {
    type = token.substr(0, colon);
    auto parsed = parse_isogeny(lower(trim(token.substr(colon + 1))));
    if (!parsed) throw InvalidInput("bad isogeny in '" + token + "'");
    iso = *parsed;
  }
  const auto [t, r] = parse_simple_type(type);
  return build_simple(t, r, iso);
}

RootDatum datum_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("root datum JSON must be an object");
  const std::string builder = j.value("builder", "");
  try {
    if (builder == "simple") {
      const std::string type = j.at("type").get<std::string>();
      const int rank = j.at("rank").get<int>();
      auto iso = parse_isogeny(j.value("isogeny", "adjoint"));
      if (!iso) throw InvalidInput("bad isogeny in datum JSON");
      if (type.size() != 1) throw InvalidInput("datum JSON type must be one letter");
      return build_simple(type[0], rank, *iso);
    }
    if (builder == "gl") return build_gl(j.at("n").get<int>());
    if (builder == "product") {
      const auto& factors = j.at("factors");
      if (!factors.is_array() || factors.empty())
        throw InvalidInput("product needs a nonempty factors array");
      RootDatum acc = datum_from_json(factors[0]);
      for (std::size_t k = 1; k < factors.size(); ++k) acc = product(acc, datum_from_json(factors[k]));
      return acc;
    }
    if (builder == "explicit") {
      IntMatrix coroots = matrix_from_json(j.at("coroots"), "coroots");
      IntMatrix roots = matrix_from_json(j.at("roots"), "roots");
      // A lattice with no simple roots is written as n empty rows of coroots.
      return RootDatum(j.value("name", "explicit"), coroots, roots);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("datum JSON: ") + e.what());
  }
  throw InvalidInput("datum JSON builder must be simple, gl, product or explicit");
}

RootDatum load_datum_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read datum file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("datum file '" + path + "' is not valid JSON: " + e.what());
  }
  return datum_from_json(j);
}

nlohmann::json datum_to_json(const RootDatum& d) {
  return {{"builder", "explicit"},
          {"name", d.name()},
          {"coroots", matrix_to_json(d.coroots())},
          {"roots", matrix_to_json(d.roots())}};
}

RootDatum resolve_group(const GroupRequest& req) {
  const int sources = req.gl.has_value() + req.simple.has_value() + req.product.has_value() +
                      req.datum_json.has_value();
  if (sources != 1)
    throw InvalidInput("give exactly one of --gl, --simple, --product, --datum-json");
  if (req.gl) return build_gl(*req.gl);
  if (req.simple) {
    const auto [t, r] = parse_simple_type(*req.simple);
    return build_simple(t, r, req.isogeny);
  }
  if (req.product) {
    std::stringstream ss(*req.product);
    std::string tok;
    std::optional<RootDatum> acc;
    while (std::getline(ss, tok, ',')) {
      RootDatum f = parse_group_token(tok, req.isogeny);
      acc = acc ? product(*acc, f) : f;
    }
    if (!acc) throw InvalidInput("--product needs at least one factor");
    return *acc;
  }
  return load_datum_json(*req.datum_json);
}

std::vector<long> parse_int_list(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + tok + "' in '" + csv + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad integer '" + tok + "' in '" + csv + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

std::optional<std::pair<char, int>> standard_adjoint_type(const RootDatum& d) {
  if (d.components().size() != 1 || d.rank() != d.num_simple()) return std::nullopt;
  const auto& c = d.components()[0];
  const RootDatum ref = build_simple(c.type, c.rank, Isogeny::adjoint);
  if (ref.coroots() == d.coroots() && ref.roots() == d.roots())
    return std::make_pair(c.type, c.rank);
  return std::nullopt;
}

bool is_standard_gl(const RootDatum& d) {
  if (d.rank() == 0) return false;
  const RootDatum ref = build_gl(static_cast<int>(d.rank()));
  return ref.coroots() == d.coroots() && ref.roots() == d.roots();
}

namespace {

enum class Convention { gl, fundamental, d_even, trivial, snf };

struct ConventionInfo {
  Convention kind;
  std::size_t coweight = 0;  // 0-based index of the generating coweight
};

ConventionInfo convention_for(const RootDatum& d) {
  if (is_standard_gl(d)) return {Convention::gl};
  if (pi1(d).torsion_invariants().empty() && pi1(d).free_rank() == 0) return {Convention::trivial};
  if (auto t = standard_adjoint_type(d)) {
    const auto [type, rank] = *t;
    const std::size_t n = static_cast<std::size_t>(rank);
    switch (type) {
      case 'A':
      case 'B': return {Convention::fundamental, 0};
      case 'C': return {Convention::fundamental, n - 1};
      // D_{2m}: the spin generator is the one whose minimal Levi sits on the odd nodes.
      case 'D':
        if (rank % 2 == 1) return {Convention::fundamental, n - 1};
        return {Convention::d_even, rank % 4 == 0 ? n - 1 : n - 2};
      case 'E': return {Convention::fundamental, rank == 6 ? 0u : 6u};
      default: break;
    }
  }
  return {Convention::snf};
}

}  // namespace

IntVector degree_lift(const RootDatum& d, const std::vector<long>& k) {
  const auto info = convention_for(d);
  const std::size_t n = d.rank();
  IntVector lift(n, Int(0));
  auto need = [&](std::size_t count) {
    if (k.size() != count)
      throw InvalidInput("--degree for " + d.name() + " takes " + std::to_string(count) +
                         " coordinate(s): " + degree_convention(d));
  };
  switch (info.kind) {
    case Convention::gl:
      need(1);
      lift[n - 1] = k[0];
      return lift;
    case Convention::trivial:
      return lift;
    case Convention::fundamental:
      need(1);
      lift[info.coweight] = k[0];
      return lift;
    case Convention::d_even:
      need(2);
      lift[info.coweight] = k[0];
      lift[0] = k[1];
      return lift;
    case Convention::snf: {
      const auto gens = pi1(d).generator_lifts();
      need(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t a = 0; a < n; ++a) lift[a] += Int(k[g]) * gens[g][a];
      return lift;
    }
  }
  return lift;
}

std::string degree_convention(const RootDatum& d) {
  const auto info = convention_for(d);
  switch (info.kind) {
    case Convention::gl: return "k -> k*e_n";
    case Convention::trivial: return "trivial fundamental group: every k gives the zero lift";
    case Convention::fundamental:
      return "k -> k*coweight_" + std::to_string(info.coweight + 1);
    case Convention::d_even:
      return "a,b -> a*coweight_" + std::to_string(info.coweight + 1) + " + b*coweight_1";
    case Convention::snf: {
      std::string s = "coordinates on the Smith generators of pi1:";
      for (const auto& g : pi1(d).generator_lifts()) {
        s += " (";
        for (std::size_t a = 0; a < g.size(); ++a) s += (a ? "," : "") + g[a].get_str();
        s += ")";
      }
      return s;
    }
  }
  return "";
}

}  // namespace levi_slope

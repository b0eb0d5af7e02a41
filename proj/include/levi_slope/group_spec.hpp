#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "levi_slope/root_datum.hpp"

namespace levi_slope {

/// "E7" -> ('E', 7). Throws InvalidInput.
std::pair<char, int> parse_simple_type(const std::string& s);

/// One factor of --product: "gl3", "E7", "A2:adjoint", "B4:sc".
RootDatum parse_group_token(const std::string& token, Isogeny default_isogeny);

/// JSON schema:
/// {"builder": "simple"|"gl"|"product"|"explicit", "type", "rank", "isogeny",
///  "n", "factors": [...], "coroots": [[...]] (n x r rows), "roots": [[...]]
///  (r x n rows), "name"}
RootDatum datum_from_json(const nlohmann::json& j);
RootDatum load_datum_json(const std::string& path);
nlohmann::json datum_to_json(const RootDatum& d);

/// Exactly one group source must be set.
struct GroupRequest {
  std::optional<int> gl;
  std::optional<std::string> simple;
  std::optional<std::string> product;  // comma-separated tokens
  std::optional<std::string> datum_json;
  Isogeny isogeny = Isogeny::adjoint;
};

RootDatum resolve_group(const GroupRequest& req);

/// "1,0,-2" -> (1,0,-2). Throws InvalidInput.
std::vector<long> parse_int_list(const std::string& csv);

/// Standard adjoint simple datum (coweight basis) that d equals, if any.
std::optional<std::pair<char, int>> standard_adjoint_type(const RootDatum& d);
bool is_standard_gl(const RootDatum& d);

/// Lift for --degree: GL_n: k e_n. Adjoint simple types: k times a fixed
/// fundamental coweight (A, B: w1; C: wn; D odd: wn; E6: w1; E7: w7). D_n with
/// n even takes (a, b) -> a ws + b w1, with s = n for n = 0 mod 4 and s = n-1
/// for n = 2 mod 4, so that (1,0) has its Levi on the odd nodes. Trivial pi1:
/// zero lift. Otherwise the
/// coordinates refer to the SNF generators of pi1.
IntVector degree_lift(const RootDatum& d, const std::vector<long>& k);
/// Text describing the generator convention used by degree_lift for d.
std::string degree_convention(const RootDatum& d);

}  // namespace levi_slope

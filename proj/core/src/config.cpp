#include "laxalg/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"

namespace lax {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

template <typename T>
T get_number(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("config.") + key + ": expected an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (v.is_number_unsigned()) return v.get<T>();
    if (v.get<long long>() < 0) throw ParseError(std::string("config.") + key + ": must be nonnegative");
  }
  return v.get<T>();
}

Vector isotropic_vector(Rng& rng, std::size_t size) {
  // a + i b = t, a - i b = -x^t x / t, so a^2 + b^2 = -x^t x.
  Vector x = rng.vector(size - 2);
  const GaussianRational t = rng.nonzero_gaussian();
  const GaussianRational u = -dot(x, x) / t;
  const GaussianRational half(Rational(1, 2));
  Vector alpha{(t + u) * half, (t - u) * half * -GaussianRational::i()};
  alpha.insert(alpha.end(), x.begin(), x.end());
  return alpha;
}

}  // namespace

DegreeRange parse_degrees(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("degrees must look like a..b, got '" + std::string(text) + "'");
  DegreeRange r{parse_int(text.substr(0, dots), "degree"), parse_int(text.substr(dots + 2), "degree")};
  if (r.lo > r.hi) throw ParseError("empty degree range '" + std::string(text) + "'");
  return r;
}

RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  static const char* const known[] = {"family", "n", "tyurin", "random_points", "seed", "degrees", "max_pole", "trials"};
  for (const auto& [key, _] : j.items())
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError("config: unknown key \"" + key + "\"");

  RunConfig out;
  Family family = Family::sl;
  int n = 2;
  if (j.contains("family")) {
    if (!j.at("family").is_string()) throw ParseError("config.family: expected a string");
    family = parse_family(j.at("family").get<std::string>());
  }
  if (j.contains("n")) n = get_number<int>(j, "n");
  out.spec = AlgebraSpec(family, n);

  if (j.contains("tyurin") && j.contains("random_points"))
    throw ParseError("config: give either tyurin or random_points, not both");
  if (j.contains("tyurin")) {
    const Json& pts = j.at("tyurin");
    if (!pts.is_array()) throw ParseError("config.tyurin: expected an array");
    std::vector<TyurinPoint> points;
    for (std::size_t s = 0; s < pts.size(); ++s) {
      const std::string where = "config.tyurin[" + std::to_string(s) + "]";
      if (!pts[s].is_object()) throw ParseError(where + ": expected an object");
      for (const auto& [key, _] : pts[s].items())
        if (key != "z" && key != "alpha") throw ParseError(where + ": unknown key \"" + key + "\"");
      if (!pts[s].contains("z") || !pts[s].contains("alpha")) throw ParseError(where + ": needs z and alpha");
      GaussianRational z = gaussian_from_json(pts[s].at("z"), where + ".z");
      Vector alpha = vector_from_json(pts[s].at("alpha"), out.spec.size(), where + ".alpha");
      try {
        points.emplace_back(out.spec, std::move(z), std::move(alpha));
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
    SphereConfig check(out.spec, points);  // rejects duplicate positions
    out.tyurin = std::move(points);
  }
  if (j.contains("random_points")) out.random_points = get_number<std::size_t>(j, "random_points");
  if (j.contains("seed")) out.seed = get_number<std::uint64_t>(j, "seed");
  if (j.contains("degrees")) {
    const Json& d = j.at("degrees");
    if (d.is_string())
      out.degrees = parse_degrees(d.get<std::string>());
    else if (d.is_array() && d.size() == 2 && d[0].is_number_integer() && d[1].is_number_integer())
      out.degrees = {d[0].get<int>(), d[1].get<int>()};
    else
      throw ParseError("config.degrees: expected \"a..b\" or [a, b]");
    if (out.degrees.lo > out.degrees.hi) throw ParseError("config.degrees: empty range");
  }
  if (j.contains("max_pole")) out.max_pole = get_number<int>(j, "max_pole");
  if (out.max_pole < 0) throw ValidationError("config.max_pole must be nonnegative");
  if (j.contains("trials")) out.trials = get_number<std::size_t>(j, "trials");
  return out;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_config(j);
}

std::vector<TyurinPoint> random_tyurin_points(const AlgebraSpec& spec, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<TyurinPoint> points;
  std::vector<GaussianRational> used;
  while (points.size() < count) {
    GaussianRational z = rng.nonzero_gaussian();
    if (std::find(used.begin(), used.end(), z) != used.end()) continue;
    Vector alpha = spec.family() == Family::so ? isotropic_vector(rng, spec.size()) : rng.vector(spec.size());
    if (is_zero(alpha)) continue;
    used.push_back(z);
    points.emplace_back(spec, std::move(z), std::move(alpha));
  }
  return points;
}

ConfigPtr materialize(const RunConfig& config, std::size_t attempt) {
  if (config.tyurin) return make_config(config.spec, *config.tyurin);
  return make_config(config.spec, random_tyurin_points(config.spec, config.random_points, derive_seed(config.seed, attempt)));
}

Json to_json(const RunConfig& config) {
  Json out{{"family", std::string(family_name(config.spec.family()))}, {"n", config.spec.n()}};
  if (config.tyurin) {
    out["tyurin"] = to_json(SphereConfig(config.spec, *config.tyurin))["tyurin"];
  } else {
    out["random_points"] = config.random_points;
  }
  out["seed"] = config.seed;
  out["degrees"] = std::to_string(config.degrees.lo) + ".." + std::to_string(config.degrees.hi);
  out["max_pole"] = config.max_pole;
  out["trials"] = config.trials;
  return out;
}

}  // namespace lax

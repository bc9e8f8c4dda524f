#include "cardrec/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cardrec/csv.hpp"

namespace cardrec {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("unknown key '" + it.key() + "' in " + where);
}

BlockProfile parse_profile(const json& j) {
  require_keys(j, {"block", "profile", "value", "coefficients", "beta"},
               "test_function entry");
  BlockProfile p;
  const std::string kind = j.at("profile").get<std::string>();
  if (kind == "constant") {
    p.kind = ProfileKind::constant;
    p.value = j.value("value", 1.0);
  } else if (kind == "cosine") {
    p.kind = ProfileKind::cosine;
    p.coefficients = j.at("coefficients").get<std::vector<double>>();
  } else if (kind == "hat") {
    p.kind = ProfileKind::hat;
  } else if (kind == "gauss") {
    p.kind = ProfileKind::gauss;
    p.beta = j.value("beta", 1.0);
  } else {
    throw std::invalid_argument("unknown profile kind '" + kind + "'");
  }
  return p;
}

}  // namespace

InterpolatorFamily RunConfig::make_family(double parameter) const {
  if (family_kind == "polyharmonic") {
    const double rounded = std::round(parameter);
    if (std::abs(parameter - rounded) > 1e-12)
      throw std::invalid_argument("polyharmonic parameter must be a positive integer");
    return InterpolatorFamily::polyharmonic(dimension, static_cast<int>(rounded));
  }
  if (family_kind == "gaussian")
    return InterpolatorFamily::gaussian(dimension, parameter, allow_small_alpha);
  if (family_kind == "multiquadric")
    return InterpolatorFamily::multiquadric(dimension, parameter, mq_exponent);
  if (family_kind == "synthetic-h2fail")
    return InterpolatorFamily::synthetic_h2fail(dimension);
  throw std::invalid_argument("unknown family kind '" + family_kind + "'");
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os << "dim=" << dimension << ";grid=" << grid << ";family=" << family_kind;
  for (double p : parameters) os << "," << format_double(p);
  os << ";mq=" << format_double(mq_exponent)
     << ";W=" << block_window << ";outW=" << out_window
     << ";Js=" << sample_window << ";tol=" << format_double(tolerance)
     << ";parts=" << test_function.parts.size()
     << ";evals=" << eval_points.size();
  return os.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }

  require_keys(j,
               {"dimension", "grid", "family", "windows", "tolerance",
                "test_function", "eval_points", "eval_range", "output"},
               "config root");

  RunConfig cfg;
  cfg.dimension = j.value("dimension", 1);
  if (cfg.dimension < 1) throw std::invalid_argument("field 'dimension' must be >= 1");
  cfg.grid = j.value("grid", 64);
  if (cfg.grid < 2 || cfg.grid % 2 != 0)
    throw std::invalid_argument("field 'grid' must be even and >= 2");

  const auto& fam = j.at("family");
  require_keys(fam,
               {"kind", "parameter", "parameters", "mq_exponent",
                "allow_small_alpha"},
               "family");
  cfg.family_kind = fam.at("kind").get<std::string>();
  if (fam.contains("parameter")) cfg.parameters = {fam.at("parameter").get<double>()};
  if (fam.contains("parameters"))
    cfg.parameters = fam.at("parameters").get<std::vector<double>>();
  if (cfg.parameters.empty() && cfg.family_kind != "synthetic-h2fail")
    throw std::invalid_argument("family needs 'parameter' or 'parameters'");
  if (cfg.parameters.empty()) cfg.parameters = {1.0};
  cfg.mq_exponent = fam.value("mq_exponent", 0.5);
  cfg.allow_small_alpha = fam.value("allow_small_alpha", false);

  if (j.contains("windows")) {
    const auto& w = j.at("windows");
    require_keys(w, {"block", "out", "sample"}, "windows");
    cfg.block_window = w.value("block", 3);
    cfg.out_window = w.value("out", 0);
    cfg.sample_window = w.value("sample", 8);
    if (cfg.block_window < 1) throw std::invalid_argument("field 'windows.block' must be >= 1");
    if (cfg.sample_window < 1) throw std::invalid_argument("field 'windows.sample' must be >= 1");
  }
  cfg.tolerance = j.value("tolerance", 1e-12);
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("field 'tolerance' must be > 0");

  if (!j.contains("test_function") || !j.at("test_function").is_array() ||
      j.at("test_function").empty())
    throw std::invalid_argument("field 'test_function' must be a nonempty array");
  for (const auto& part : j.at("test_function")) {
    const auto block = part.at("block").get<std::vector<int>>();
    if (static_cast<int>(block.size()) != cfg.dimension)
      throw std::invalid_argument("test_function block index has wrong dimension");
    cfg.test_function.parts.emplace_back(block, parse_profile(part));
  }

  if (j.contains("eval_points")) {
    for (const auto& p : j.at("eval_points")) {
      const auto pt = p.get<std::vector<double>>();
      if (static_cast<int>(pt.size()) != cfg.dimension)
        throw std::invalid_argument("eval point has wrong dimension");
      cfg.eval_points.push_back(pt);
    }
  }
  if (j.contains("eval_range"))
    cfg.eval_points = parse_range(j.at("eval_range").get<std::string>(), cfg.dimension);
  if (cfg.eval_points.empty())
    cfg.eval_points = parse_range("-2:2:0.5", cfg.dimension);

  if (j.contains("output")) {
    const auto& o = j.at("output");
    require_keys(o, {"errors", "points"}, "output");
    cfg.out_errors = o.value("errors", cfg.out_errors);
    cfg.out_points = o.value("points", cfg.out_points);
  }
  return cfg;
}

std::vector<std::vector<double>> parse_range(const std::string& range, int dim) {
  double a = 0.0, b = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream is(range);
  if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0))
    throw std::invalid_argument("range must have the form a:b:step with step > 0");
  if (b < a) throw std::invalid_argument("range must be increasing");
  std::vector<double> axis;
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  if (std::pow(static_cast<double>(count), dim) > 1e6)
    throw std::invalid_argument("range too fine");
  for (long i = 0; i < count; ++i) axis.push_back(a + i * step);
  std::vector<std::vector<double>> pts;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    std::vector<double> p(dim);
    for (int d = 0; d < dim; ++d) p[d] = axis[idx[d]];
    pts.push_back(p);
    int axis_i = dim - 1;
    while (axis_i >= 0 && ++idx[axis_i] == axis.size()) idx[axis_i--] = 0;
    if (axis_i < 0) break;
  }
  return pts;
}

}  // namespace cardrec

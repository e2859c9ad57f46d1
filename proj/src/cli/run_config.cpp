#include "hamfrac/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hamfrac/cli/csv.hpp"
#include "hamfrac/errors.hpp"
#include "hamfrac/ham.hpp"

namespace hamfrac::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long parse_integer(std::string_view text) {
  text = trim(text);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text) {
  const long long v = parse_integer(text);
  if (v < 0) throw ConfigError("expected a nonnegative count, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

SpatialBackend parse_backend(std::string_view text) {
  text = trim(text);
  if (text == "exact") return SpatialBackend::Exact;
  if (text == "grid") return SpatialBackend::Grid;
  throw ConfigError("spatial backend must be 'exact' or 'grid', got '" + std::string(text) + "'");
}

std::string normalize_key(std::string_view key) {
  std::string k(trim(key));
  for (auto& c : k) {
    if (c == '-') c = '_';
  }
  if (k == "m_terms" || k == "m") k = "terms";
  if (k == "x") k = "probe_x";
  return k;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ConfigError("expected a finite real number, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view backend_name(SpatialBackend backend) {
  return backend == SpatialBackend::Exact ? "exact" : "grid";
}

RunConfig defaults_for(std::string_view problem) {
  RunConfig cfg;
  const ProblemDef* def = nullptr;
  try {
    def = &find_problem(problem);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  cfg.problem = def->name;
  cfg.x_min = def->x_min;
  cfg.x_max = def->x_max;
  cfg.probe_x = def->probe_x;
  return cfg;
}

void apply_setting(RunConfig& cfg, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view v = trim(value);
  if (key == "problem") {
    cfg.problem = std::string(v);
  } else if (key == "alpha") {
    cfg.alpha = parse_real(v);
  } else if (key == "psi") {
    cfg.psi = std::string(v);
  } else if (key == "a") {
    cfg.a = parse_real(v);
  } else if (key == "hbar") {
    cfg.hbar = parse_real(v);
  } else if (key == "terms") {
    cfg.m_terms = static_cast<int>(parse_integer(v));
  } else if (key == "x_min") {
    cfg.x_min = parse_real(v);
  } else if (key == "x_max") {
    cfg.x_max = parse_real(v);
  } else if (key == "n_points") {
    cfg.n_points = parse_count(v);
  } else if (key == "probe_x") {
    cfg.probe_x = parse_real(v);
  } else if (key == "t_min") {
    cfg.t_min = parse_real(v);
  } else if (key == "t_max") {
    cfg.t_max = parse_real(v);
  } else if (key == "t_samples") {
    cfg.t_samples = parse_count(v);
  } else if (key == "output") {
    cfg.output = std::string(v);
  } else if (key == "spatial") {
    cfg.spatial = parse_backend(v);
  } else {
    throw ConfigError("unknown setting '" + std::string(raw_key) + "'");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

RunConfig config_from_text(std::string_view text) {
  RunConfig probe;
  apply_config_text(probe, text);
  RunConfig cfg = defaults_for(probe.problem);
  apply_config_text(cfg, text);
  return cfg;
}

std::string format_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "problem=" << cfg.problem << '\n'
      << "alpha=" << format_real(cfg.alpha) << '\n'
      << "psi=" << cfg.psi << '\n'
      << "a=" << format_real(cfg.a) << '\n'
      << "hbar=" << format_real(cfg.hbar) << '\n'
      << "terms=" << cfg.m_terms << '\n'
      << "x_min=" << format_real(cfg.x_min) << '\n'
      << "x_max=" << format_real(cfg.x_max) << '\n'
      << "n_points=" << cfg.n_points << '\n'
      << "probe_x=" << format_real(cfg.probe_x) << '\n';
  if (cfg.t_min) out << "t_min=" << format_real(*cfg.t_min) << '\n';
  if (cfg.t_max) out << "t_max=" << format_real(*cfg.t_max) << '\n';
  out << "t_samples=" << cfg.t_samples << '\n';
  if (!cfg.output.empty()) out << "output=" << cfg.output << '\n';
  out << "spatial=" << backend_name(cfg.spatial) << '\n';
  return out.str();
}

HamConfig to_ham_config(const RunConfig& cfg) {
  try {
    HamConfig ham;
    ham.alpha = cfg.alpha;
    ham.psi = PsiFunction::from_name(cfg.psi);
    ham.a = cfg.a;
    ham.hbar = cfg.hbar;
    ham.m_terms = cfg.m_terms;
    ham.grid = GridSpec{cfg.x_min, cfg.x_max, cfg.n_points};
    return ham;
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void validate(const RunConfig& cfg) {
  try {
    find_problem(cfg.problem);
    const HamConfig ham = to_ham_config(cfg);
    ham.validate();
    validate_probe(ham, Probe{cfg.probe_x, cfg.t_lo()});
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (cfg.t_hi() < cfg.t_lo()) throw ConfigError("t_max must not precede t_min");
  if (cfg.t_samples < 1) throw ConfigError("t_samples must be at least 1");
}

std::vector<double> time_samples(const RunConfig& cfg) {
  const double lo = cfg.t_lo();
  const double hi = cfg.t_hi();
  const std::size_t n = cfg.t_samples;
  std::vector<double> ts(n, lo);
  if (n == 1) return ts;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) ts[i] = lo + static_cast<double>(i) * step;
  ts.back() = hi;
  return ts;
}

}  // namespace hamfrac::cli

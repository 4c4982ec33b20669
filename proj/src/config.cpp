#include "bbmb/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bbmb {
namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& value, int line, const std::string& key) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    fail(line, "field '" + key + "': expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    fail(line, "field '" + key + "': trailing characters in '" + value + "'");
  return v;
}

int parse_int(const std::string& value, int line, const std::string& key) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    fail(line, "field '" + key + "': expected an integer, got '" + value + "'");
  }
  if (pos != value.size())
    fail(line, "field '" + key + "': trailing characters in '" + value + "'");
  return v;
}

}  // namespace

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::ncd: return "ncd";
    case SchemeKind::ttcd: return "ttcd";
    case SchemeKind::both: return "both";
  }
  return "?";
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::none: return "none";
    case SweepAxis::time: return "time";
    case SweepAxis::space: return "space";
  }
  return "?";
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string raw, section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (const size_t hash = line.find('#'); hash != std::string::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "problem" && section != "grid" && section != "scheme" &&
          section != "sweep" && section != "output")
        fail(line_no, "unknown section '" + section + "'");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) fail(line_no, "key '" + key + "' outside any [section]");
    if (value.empty()) fail(line_no, "field '" + key + "': empty value");

    if (section == "problem") {
      if (key == "name") {
        if (value != "manufactured" && value != "soliton" && value != "custom")
          fail(line_no, "field 'name': unknown problem '" + value + "'");
        cfg.problem = value;
      } else if (key == "a") {
        cfg.a = parse_double(value, line_no, key);
      } else if (key == "L") {
        cfg.length = parse_double(value, line_no, key);
      } else if (key == "mu") {
        cfg.mu = parse_double(value, line_no, key);
      } else if (key == "lambda") {
        cfg.lambda = parse_double(value, line_no, key);
      } else if (key == "amplitude") {
        cfg.amplitude = parse_double(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [problem]");
      }
    } else if (section == "grid") {
      if (key == "T") {
        cfg.horizon = parse_double(value, line_no, key);
      } else if (key == "M") {
        cfg.node_count = parse_int(value, line_no, key);
      } else if (key == "N_c") {
        cfg.coarse_steps = parse_int(value, line_no, key);
      } else if (key == "beta_tau") {
        cfg.beta_tau = parse_int(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [grid]");
      }
    } else if (section == "scheme") {
      if (key == "type") {
        if (value == "ncd") cfg.scheme = SchemeKind::ncd;
        else if (value == "ttcd") cfg.scheme = SchemeKind::ttcd;
        else if (value == "both") cfg.scheme = SchemeKind::both;
        else fail(line_no, "field 'type': unknown scheme '" + value + "'");
      } else if (key == "tol") {
        cfg.policy.tol = parse_double(value, line_no, key);
      } else if (key == "max_iter") {
        cfg.policy.max_iter = parse_int(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [scheme]");
      }
    } else if (section == "sweep") {
      if (key == "axis") {
        if (value == "none") cfg.axis = SweepAxis::none;
        else if (value == "time") cfg.axis = SweepAxis::time;
        else if (value == "space") cfg.axis = SweepAxis::space;
        else fail(line_no, "field 'axis': unknown axis '" + value + "'");
      } else if (key == "levels") {
        cfg.levels = parse_int(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [sweep]");
      }
    } else {  // output
      if (key == "path") {
        cfg.output_path = value;
      } else if (key == "threads") {
        cfg.threads = parse_int(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [output]");
      }
    }
  }

  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("config: " + msg);
  };
  require(cfg.horizon > 0.0, "field 'T' must be positive");
  require(cfg.node_count >= 3, "field 'M' must be at least 3");
  require(cfg.coarse_steps >= 1, "field 'N_c' must be at least 1");
  require(cfg.beta_tau >= 1, "field 'beta_tau' must be at least 1");
  require(cfg.mu > 0.0, "field 'mu' must be positive");
  require(cfg.lambda > 0.0, "field 'lambda' must be positive");
  require(cfg.policy.tol > 0.0, "field 'tol' must be positive");
  require(cfg.policy.max_iter >= 1, "field 'max_iter' must be at least 1");
  require(cfg.levels >= 1, "field 'levels' must be at least 1");
  require(cfg.threads >= 1, "field 'threads' must be at least 1");
  if (cfg.problem == "custom")
    require(cfg.length > 0.0, "field 'L' must be positive for a custom problem");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace bbmb

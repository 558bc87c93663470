#include <geofreq/config.hpp>

#include <geofreq/csv.hpp>
#include <geofreq/error.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>

namespace geofreq {
namespace {

namespace pt = boost::property_tree;

[[noreturn]] void malformed(const std::string& origin, const std::string& what) {
  throw Error(ErrorKind::MalformedConfig, origin + ": " + what);
}

double number(const std::string& origin, const std::string& key, const std::string& text) {
  const auto x = parse_double(text);
  if (!x) malformed(origin, "'" + key + "' is not a finite number: '" + text + "'");
  return *x;
}

bool boolean(const std::string& origin, const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  malformed(origin, "'" + key + "' is not a boolean: '" + text + "'");
}

}  // namespace

RunConfig parse_config(std::istream& is, const std::string& origin) {
  pt::ptree tree;
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    malformed(origin, "line " + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      malformed(origin, "key '" + section + "' outside a section");
    }
    for (const auto& [key, node] : body) {
      const std::string value = node.get_value<std::string>();
      const std::string path = section + "." + key;
      if (section == "scenario") {
        if (key == "name") {
          cfg.scenario = value;
        } else {
          cfg.params[key] = number(origin, path, value);
        }
      } else if (section == "sampling") {
        if (key == "t0") cfg.t0 = number(origin, path, value);
        else if (key == "t1") cfg.t1 = number(origin, path, value);
        else if (key == "dt") cfg.dt = number(origin, path, value);
        else malformed(origin, "unknown key '" + path + "'");
      } else if (section == "filter") {
        if (key == "tau") cfg.filter_tau = number(origin, path, value);
        else if (key == "remove_zero_sequence") cfg.remove_zero_sequence = boolean(origin, path, value);
        else malformed(origin, "unknown key '" + path + "'");
      } else if (section == "park") {
        if (key == "w_dq") cfg.w_dq = number(origin, path, value);
        else if (key == "theta0") cfg.theta0 = number(origin, path, value);
        else malformed(origin, "unknown key '" + path + "'");
      } else if (section == "analysis") {
        if (key == "mode") cfg.mode = value;
        else if (key == "csv") cfg.csv = value;
        else if (key == "out") cfg.out = value;
        else malformed(origin, "unknown key '" + path + "'");
      } else {
        malformed(origin, "unknown section '" + section + "'");
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config '" + path + "'");
  return parse_config(in, path);
}

}  // namespace geofreq

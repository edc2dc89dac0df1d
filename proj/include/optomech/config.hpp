#pragma once

#include <array>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

enum class Model { full, rwa, ideal };
enum class Engine { gaussian, fock, hybrid, automatic };
enum class EpsConvention { angular, cyclic };

inline Model parse_model(const std::string& s) {
  if (s == "full") return Model::full;
  if (s == "rwa") return Model::rwa;
  if (s == "ideal") return Model::ideal;
  throw InvalidModelError("unknown model tag: " + s);
}

inline std::string model_name(Model m) {
  switch (m) {
    case Model::full: return "full";
    case Model::rwa: return "rwa";
    case Model::ideal: return "ideal";
  }
  return "?";
}

inline Engine parse_engine(const std::string& s) {
  if (s == "gaussian") return Engine::gaussian;
  if (s == "fock") return Engine::fock;
  if (s == "hybrid") return Engine::hybrid;
  if (s == "auto") return Engine::automatic;
  throw InvalidSpecError("unknown engine tag: " + s);
}

// All physical rates of the three-mode model, stored as angular frequencies
// (rad/s) with hbar = 1. Mode indices: 0 and 1 are the two optical modes.
struct SystemConfig {
  double omega_m = kTwoPi * 100e6;
  std::array<double, 2> kappa{kTwoPi * 1e6, kTwoPi * 1e6};
  double q_m = 1e4;
  double gamma_m = kTwoPi * 100e6 / 1e4;
  std::array<double, 2> G{kTwoPi * 1e4, kTwoPi * 1e4};
  std::array<std::complex<double>, 2> E{0.0, 0.0};
  std::array<double, 2> Delta{0.0, 0.0};
  double bath_temperature_k = 0.0;
  bool mech_damping = false;
  // Extra rotation of each optical mode relative to the red-sideband
  // resonance, rad/s (0 = resonant driving).
  std::array<double, 2> detuning_offset{0.0, 0.0};

  double hbar_omega_over_kb() const { return kHbarOverKb * omega_m; }
  double bath_occupation() const {
    return thermal_occupation(omega_m, bath_temperature_k);
  }
  // Free rotation frequency of optical mode i in the shifted frame.
  double cavity_rotation(int i, double q_s) const {
    return -Delta[i] - G[i] * q_s;
  }

  void validate() const {
    if (!(omega_m > 0)) throw InvalidSpecError("omega_m must be positive");
    if (kappa[0] < 0 || kappa[1] < 0) throw InvalidSpecError("kappa must be >= 0");
    if (gamma_m < 0) throw InvalidSpecError("gamma_m must be >= 0");
    if (bath_temperature_k < 0) throw InvalidSpecError("bath temperature must be >= 0");
  }
};

// One entry of the pulse schedule. Swap pulses drive one optical mode at the
// red sideband for a finite duration; prep pulses are instantaneous state
// injections/resets in the shifted frame.
struct Pulse {
  enum class Role { swap, prep };
  int target_mode = 0;  // optical mode index, 0 or 1
  Role role = Role::swap;
  double detuning = 0.0;                     // rad/s
  std::complex<double> drive_amplitude = 0.0;  // rad/s
  double duration = 0.0;                     // seconds (0 for prep)
  Model model = Model::full;
  // Beam-splitter phase phi of the effective coupling; the swap maps the
  // transferred state through exp(-i*phi)-type factors (see protocol).
  double coupling_phase = 0.0;
};

// Raw key-value run settings as read from a config file. Keys suffixed
// `_over_2pi_hz` are cyclic frequencies and are multiplied by 2*pi when the
// SystemConfig is built; `g{1,2}_eps_hz` follows `eps_convention`.
struct Settings {
  double omega_m_over_2pi_hz = 100e6;
  double kappa1_over_2pi_hz = 1e6;
  double kappa2_over_2pi_hz = 1e6;
  double q_m = 1e4;
  double g1_eps_hz = 10e6;
  double g2_eps_hz = 7e6;
  EpsConvention eps_convention = EpsConvention::angular;
  double g1_coupling_const_over_2pi_hz = 1e4;
  double g2_coupling_const_over_2pi_hz = 1e4;
  double bath_temperature_k = 2.0;
  bool mech_damping = false;
  Model model = Model::full;
  double detuning_offset_hz = 0.0;  // from detuning_mode = offset:<hz>

  Engine engine = Engine::automatic;
  std::string state = "coherent:1";
  bool skip_cooling = false;
  int fock_dim_mech = 30;
  int fock_dim_opt = 20;

  // sweep section
  std::string sweep_variable;  // bath_temperature | kappa | alpha | r0 | detuning_offset
  double sweep_min = 0.0;
  double sweep_max = 0.0;
  int sweep_count = 0;
  bool sweep_log = false;
  std::vector<double> sweep_values;       // explicit grid, overrides min/max
  std::vector<std::string> sweep_states;  // state labels
  std::string with_cooling = "on";        // on | off | both

  double eps_target(int mode) const {
    const double hz = mode == 0 ? g1_eps_hz : g2_eps_hz;
    return eps_convention == EpsConvention::cyclic ? kTwoPi * hz : hz;
  }

  SystemConfig system_config() const {
    SystemConfig c;
    c.omega_m = kTwoPi * omega_m_over_2pi_hz;
    c.kappa = {kTwoPi * kappa1_over_2pi_hz, kTwoPi * kappa2_over_2pi_hz};
    c.q_m = q_m;
    c.gamma_m = q_m > 0 ? c.omega_m / q_m : 0.0;
    c.G = {kTwoPi * g1_coupling_const_over_2pi_hz,
           kTwoPi * g2_coupling_const_over_2pi_hz};
    c.bath_temperature_k = bath_temperature_k;
    c.mech_damping = mech_damping;
    c.detuning_offset = {kTwoPi * detuning_offset_hz, kTwoPi * detuning_offset_hz};
    c.validate();
    return c;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw InvalidSpecError("config key '" + key + "': cannot parse boolean '" + v + "'");
}

inline double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw InvalidSpecError("config key '" + key + "': cannot parse number '" + v + "'");
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace detail

inline Settings parse_settings(std::istream& in) {
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidSpecError("config line " + std::to_string(lineno) +
                             ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    using detail::parse_bool;
    using detail::parse_double;

    if (key == "omega_m_over_2pi_hz") s.omega_m_over_2pi_hz = parse_double(val, key);
    else if (key == "kappa1_over_2pi_hz") s.kappa1_over_2pi_hz = parse_double(val, key);
    else if (key == "kappa2_over_2pi_hz") s.kappa2_over_2pi_hz = parse_double(val, key);
    else if (key == "q_m") s.q_m = parse_double(val, key);
    else if (key == "g1_eps_hz") s.g1_eps_hz = parse_double(val, key);
    else if (key == "g2_eps_hz") s.g2_eps_hz = parse_double(val, key);
    else if (key == "eps_convention") {
      if (val == "angular") s.eps_convention = EpsConvention::angular;
      else if (val == "cyclic") s.eps_convention = EpsConvention::cyclic;
      else throw InvalidSpecError("eps_convention must be angular or cyclic");
    } else if (key == "g1_coupling_const_over_2pi_hz") s.g1_coupling_const_over_2pi_hz = parse_double(val, key);
    else if (key == "g2_coupling_const_over_2pi_hz") s.g2_coupling_const_over_2pi_hz = parse_double(val, key);
    else if (key == "bath_temperature_k") s.bath_temperature_k = parse_double(val, key);
    else if (key == "mech_damping") s.mech_damping = parse_bool(val, key);
    else if (key == "model") s.model = parse_model(val);
    else if (key == "detuning_mode") {
      if (val == "resonant") s.detuning_offset_hz = 0.0;
      else if (val.rfind("offset:", 0) == 0)
        s.detuning_offset_hz = parse_double(val.substr(7), key);
      else throw InvalidSpecError("detuning_mode must be resonant or offset:<hz>");
    } else if (key == "engine") s.engine = parse_engine(val);
    else if (key == "state") s.state = val;
    else if (key == "skip_cooling") s.skip_cooling = parse_bool(val, key);
    else if (key == "fock_dim_mech") s.fock_dim_mech = static_cast<int>(parse_double(val, key));
    else if (key == "fock_dim_opt") s.fock_dim_opt = static_cast<int>(parse_double(val, key));
    else if (key == "sweep_variable") s.sweep_variable = val;
    else if (key == "sweep_min") s.sweep_min = parse_double(val, key);
    else if (key == "sweep_max") s.sweep_max = parse_double(val, key);
    else if (key == "sweep_count") s.sweep_count = static_cast<int>(parse_double(val, key));
    else if (key == "sweep_scale") {
      if (val == "log") s.sweep_log = true;
      else if (val == "linear") s.sweep_log = false;
      else throw InvalidSpecError("sweep_scale must be linear or log");
    } else if (key == "sweep_values") {
      for (const auto& v : detail::split(val, ',')) s.sweep_values.push_back(parse_double(v, key));
    } else if (key == "states") {
      s.sweep_states = detail::split(val, ',');
    } else if (key == "with_cooling") {
      if (val != "on" && val != "off" && val != "both")
        throw InvalidSpecError("with_cooling must be on, off or both");
      s.with_cooling = val;
    } else {
      throw InvalidSpecError("unknown config key '" + key + "'");
    }
  }
  return s;
}

inline Settings load_settings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  try {
    return parse_settings(in);
  } catch (const InvalidSpecError& e) {
    throw InvalidSpecError(path + ": " + e.what());
  }
}

}  // namespace optomech

#include "qmono/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qmono {

PureState parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
    throw std::invalid_argument("state file: missing integer field 'n_qubits'");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
    throw std::invalid_argument("state file: missing array field 'amplitudes'");

  const int n = doc["n_qubits"].get<int>();
  if (n < 1 || n > 24) throw std::invalid_argument("state file: n_qubits out of range");
  const auto& arr = doc["amplitudes"];
  const std::size_t expected = std::size_t{1} << n;
  if (arr.size() != expected)
    throw std::invalid_argument("state file: expected " + std::to_string(expected) + " amplitudes, got " +
                                std::to_string(arr.size()));

  std::vector<cplx> amps;
  amps.reserve(expected);
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw std::invalid_argument("state file: each amplitude must be [re, im]");
    amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }

  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "norm " << std::sqrt(norm2) << " outside tolerance";
    throw std::invalid_argument(msg.str());
  }
  return PureState(n, std::move(amps));
}

PureState load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("state file: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string to_state_json(const PureState& psi) {
  nlohmann::ordered_json doc;
  doc["n_qubits"] = psi.n_qubits();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : psi.amplitudes()) arr.push_back({a.real(), a.imag()});
  doc["amplitudes"] = std::move(arr);
  return doc.dump();
}

void save_state_file(const PureState& psi, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_state_json(psi) << '\n';
}

}  // namespace qmono

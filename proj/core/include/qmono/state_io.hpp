#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qmono/state.hpp"

namespace qmono {

/// State file: {"n_qubits": N, "amplitudes": [[re, im], ...]} with 2^N entries,
/// index convention as PureState. Amplitudes are never renormalized: a file
/// whose norm is off by more than kNormTolerance is rejected.
PureState parse_state_json(std::string_view text);
PureState load_state_file(const std::filesystem::path& path);

/// Round-trippable JSON (17 significant digits).
std::string to_state_json(const PureState& psi);
void save_state_file(const PureState& psi, const std::filesystem::path& path);

}  // namespace qmono

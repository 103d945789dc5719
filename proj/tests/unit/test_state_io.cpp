#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "qmono/state_io.hpp"

namespace qmono {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_state_json(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

TEST(StateJson, ParsesValidFile) {
  const PureState psi = parse_state_json(R"({"n_qubits": 1, "amplitudes": [[0.6, 0], [0, 0.8]]})");
  EXPECT_EQ(psi.n_qubits(), 1);
  EXPECT_EQ(psi[0], cplx(0.6, 0));
  EXPECT_EQ(psi[1], cplx(0, 0.8));
}

TEST(StateJson, RejectsNonNormalized) {
  // norm sqrt(0.9604) = 0.98
  const std::string msg = error_of(R"({"n_qubits": 1, "amplitudes": [[0.98, 0], [0, 0]]})");
  EXPECT_NE(msg.find("norm 0.98 outside tolerance"), std::string::npos) << msg;
}

TEST(StateJson, RejectsMalformed) {
  EXPECT_NE(error_of("{not json"), "");
  EXPECT_NE(error_of(R"({"amplitudes": [[1, 0], [0, 0]]})"), "");
  EXPECT_NE(error_of(R"({"n_qubits": 1})"), "");
  EXPECT_NE(error_of(R"({"n_qubits": 2, "amplitudes": [[1, 0], [0, 0]]})"), "");
  EXPECT_NE(error_of(R"({"n_qubits": 1, "amplitudes": [[1, 0, 0], [0, 0]]})"), "");
  EXPECT_NE(error_of(R"({"n_qubits": 1, "amplitudes": [1, 0]})"), "");
}

TEST(StateJson, RoundTripIsExact) {
  const PureState psi = haar_random_pure(4, 12);
  const PureState back = parse_state_json(to_state_json(psi));
  ASSERT_EQ(back.dim(), psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) EXPECT_EQ(back[i], psi[i]);
  EXPECT_EQ(back.fingerprint(), psi.fingerprint());
}

TEST(StateJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "qmono_state_io_test.json";
  const PureState psi = state_family(StateFamily::w, 3);
  save_state_file(psi, path);
  const PureState back = load_state_file(path);
  EXPECT_EQ(back.fingerprint(), psi.fingerprint());
  std::filesystem::remove(path);
  EXPECT_THROW(load_state_file(path), std::invalid_argument);
}

}  // namespace
}  // namespace qmono

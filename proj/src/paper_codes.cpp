#include <array>

#include "sogc/code_io.hpp"
#include "sogc/constructions.hpp"
#include "sogc/error.hpp"

namespace sogc {

namespace {

struct PaperMatrix {
  std::string_view name;
  std::string_view text;
};

// Same content as data/paper_codes/<name>.code.
constexpr std::array kPaperMatrices = {
    PaperMatrix{"so_18_6_8",
                "18 6\n"
                "100000101010111001\n"
                "010000111100010011\n"
                "001000110111000110\n"
                "000100011011100011\n"
                "000010100100111110\n"
                "000001010010011111\n"
                "# self-orthogonal [18,6,8] code\n"
                "# the 6x18 block to the right of S_6 in the [82,7,40] generator\n"},
    PaperMatrix{"so_82_7_40",
                "82 7\n"
                "1111111111111111111111111111111111111111111111111111111111111111000000000000000000\n"
                "0101010101010101010101010101010101010101010101010101010101010101100000101010111001\n"
                "0011001100110011001100110011001100110011001100110011001100110011010000111100010011\n"
                "0000111100001111000011110000111100001111000011110000111100001111001000110111000110\n"
                "0000000011111111000000001111111100000000111111110000000011111111000100011011100011\n"
                "0000000000000000111111111111111100000000000000001111111111111111000010100100111110\n"
                "0000000000000000000000000000000011111111111111111111111111111111000001010010011111\n"
                "# self-orthogonal [82,7,40] code\n"
                "# R(1,6) followed by the [18,6,8] block under a zero top row; S_6 columns in increasing integer order\n"},
    PaperMatrix{"so_95_7_46",
                "95 7\n"
                "10000001001011000101111001001000111101101001011100111000001010011010111011010001010111101001010\n"
                "01000001111010010000001100000111001101111011010110101010101101101101100101101110011001101001111\n"
                "00100000000110001010011001100001000011101111110101110110011111101000010101010000101101111111011\n"
                "00010000100111111100010111010101001110100000111111100100100001110111100010010001011001001111101\n"
                "00001001000000101101010000110001111011110000111010111111111111011111100000110110100011110000000\n"
                "00000101110000000111100010011101000011111100000100100101001110000111100101011011111110011110010\n"
                "00000010110011101100110110100011010101100101011101001111100010100100111101000111000010110010100\n"
                "# self-orthogonal [95,7,46] code found by computer search\n"
                "# G = [I_7 | M]\n"},
};

const PaperMatrix& find(std::string_view name) {
  for (const auto& m : kPaperMatrices) {
    if (m.name == name) return m;
  }
  throw LookupError("unknown paper code '" + std::string(name) + "'; known: so_18_6_8, so_82_7_40, so_95_7_46");
}

}  // namespace

LinearCode paper_code(std::string_view name) { return LinearCode(parse_code_text(find(name).text).generator); }

std::vector<std::string> paper_code_names() {
  std::vector<std::string> out;
  for (const auto& m : kPaperMatrices) out.emplace_back(m.name);
  return out;
}

std::string paper_code_text(std::string_view name) { return std::string(find(name).text); }

}  // namespace sogc

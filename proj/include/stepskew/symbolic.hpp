#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stepskew/errors.hpp"
#include "stepskew/rng.hpp"

namespace stepskew {

// Finite binary word over {0,1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}
  static Word parse(const std::string& s);
  static Word zeros(size_t n) { return Word(std::vector<uint8_t>(n, 0)); }

  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  uint8_t operator[](size_t i) const { return bits_[i]; }
  void push_back(uint8_t b) { bits_.push_back(b); }
  std::span<const uint8_t> bits() const { return bits_; }

  Word concat(const Word& other) const;
  Word power(size_t k) const;
  Word reversed() const;
  size_t count(uint8_t symbol) const;
  std::string str() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<uint8_t> bits_;
};

// Symbol of the 4-letter alphabet {0_L, 1_L, 0_R, 1_R}, in that order.
// index = symbol + 2*side, side 0 = L (fiber 0), side 1 = R (fiber 1).
struct ExSymbol {
  uint8_t index = 0;

  static ExSymbol make(int symbol, int side) {
    return ExSymbol{static_cast<uint8_t>((symbol & 1) | (side << 1))};
  }
  int symbol() const { return index & 1; }
  int side() const { return index >> 1; }
  ExSymbol mirrored() const { return ExSymbol{static_cast<uint8_t>(index ^ 2)}; }
  std::string str() const;
  bool operator==(const ExSymbol&) const = default;
};

using ExWord = std::vector<ExSymbol>;

ExWord parse_ex_word(const std::string& s);
std::string ex_word_str(const ExWord& w);

// The transition matrix of the exposed subshift: rows/cols ordered
// (0_L, 1_L, 0_R, 1_R).
inline constexpr std::array<std::array<int, 4>, 4> kTransitionMatrix = {{
    {1, 1, 0, 0},
    {0, 0, 1, 1},
    {0, 0, 1, 1},
    {1, 1, 0, 0},
}};

bool is_admissible_cyclic(const ExWord& w);
bool is_admissible_path(const ExWord& w);

ExWord mirror(const ExWord& w);
Word project_pi(const ExWord& w);

// Encodes the fiber orbit of x0 in {0,1} under the word as an admissible
// ex-word; throws NotPeriodic when the orbit does not close up with the
// word's period.
ExWord encode_ex_orbit(const Word& xi, int x0);

struct ParryData {
  double eigenvalue = 0;                       // Perron root
  std::array<double, 4> pi{};                  // stationary vector
  std::array<std::array<double, 4>, 4> P{};    // transition probabilities
  double entropy = 0;                          // -sum pi_i P_ij log P_ij
};

// Markov chain on the 4-symbol alphabet with the fixed transition matrix.
class MarkovChain {
 public:
  MarkovChain();

  // Perron data by power iteration to tolerance 1e-14.
  const ParryData& parry() const { return parry_; }

  // Stationary-start sample path of the chain.
  ExWord sample_path(uint64_t seed, size_t length) const;

 private:
  ParryData parry_;
};

// Enumerates all A-admissible cyclic ex-words of exactly the given period,
// one representative per cyclic orbit (least rotation kept).
std::vector<ExWord> enumerate_admissible_cycles(int period);

}  // namespace stepskew

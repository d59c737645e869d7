#include "stepskew/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stepskew {

Word Word::parse(const std::string& s) {
  std::vector<uint8_t> bits;
  for (char ch : s) {
    if (ch == '0')
      bits.push_back(0);
    else if (ch == '1')
      bits.push_back(1);
    else if (ch == ' ' || ch == ',')
      continue;
    else
      throw Error(ErrorKind::InvalidArgument,
                  std::string("bad symbol in word: ") + ch);
  }
  return Word(std::move(bits));
}

Word Word::concat(const Word& other) const {
  std::vector<uint8_t> bits = bits_;
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  return Word(std::move(bits));
}

Word Word::power(size_t k) const {
  std::vector<uint8_t> bits;
  bits.reserve(size() * k);
  for (size_t i = 0; i < k; ++i)
    bits.insert(bits.end(), bits_.begin(), bits_.end());
  return Word(std::move(bits));
}

Word Word::reversed() const {
  std::vector<uint8_t> bits(bits_.rbegin(), bits_.rend());
  return Word(std::move(bits));
}

size_t Word::count(uint8_t symbol) const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), symbol));
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string ExSymbol::str() const {
  std::string s;
  s.push_back(symbol() ? '1' : '0');
  s.push_back(side() ? 'R' : 'L');
  return s;
}

ExWord parse_ex_word(const std::string& s) {
  ExWord w;
  int pending = -1;
  for (char ch : s) {
    if (ch == '0' || ch == '1') {
      if (pending >= 0)
        throw Error(ErrorKind::InvalidArgument, "ex-word symbol missing side marker");
      pending = ch - '0';
    } else if (ch == 'L' || ch == 'l' || ch == 'R' || ch == 'r') {
      if (pending < 0)
        throw Error(ErrorKind::InvalidArgument, "ex-word side marker without symbol");
      w.push_back(ExSymbol::make(pending, (ch == 'R' || ch == 'r') ? 1 : 0));
      pending = -1;
    } else if (ch == ' ' || ch == ',' || ch == '_') {
      continue;
    } else {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("bad character in ex-word: ") + ch);
    }
  }
  if (pending >= 0)
    throw Error(ErrorKind::InvalidArgument, "trailing symbol without side marker");
  return w;
}

std::string ex_word_str(const ExWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(' ');
    s += w[i].str();
  }
  return s;
}

bool is_admissible_path(const ExWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!kTransitionMatrix[w[i].index][w[i + 1].index]) return false;
  return true;
}

bool is_admissible_cyclic(const ExWord& w) {
  if (w.empty()) return false;
  if (!is_admissible_path(w)) return false;
  return kTransitionMatrix[w.back().index][w.front().index] != 0;
}

ExWord mirror(const ExWord& w) {
  ExWord out;
  out.reserve(w.size());
  for (ExSymbol s : w) out.push_back(s.mirrored());
  return out;
}

Word project_pi(const ExWord& w) {
  std::vector<uint8_t> bits;
  bits.reserve(w.size());
  for (ExSymbol s : w) bits.push_back(static_cast<uint8_t>(s.symbol()));
  return Word(std::move(bits));
}

ExWord encode_ex_orbit(const Word& xi, int x0) {
  if (xi.empty())
    throw Error(ErrorKind::InvalidArgument, "encode_ex_orbit needs a nonempty word");
  if (x0 != 0 && x0 != 1)
    throw Error(ErrorKind::InvalidArgument, "x0 must be 0 or 1");
  ExWord out;
  out.reserve(xi.size());
  int side = x0;
  for (size_t i = 0; i < xi.size(); ++i) {
    out.push_back(ExSymbol::make(xi[i], side));
    if (xi[i] == 1) side = 1 - side;  // f1 swaps the endpoints, f0 fixes them
  }
  if (side != x0)
    throw Error(ErrorKind::NotPeriodic,
                "fiber orbit does not close up with the word's period");
  return out;
}

MarkovChain::MarkovChain() {
  const auto& A = kTransitionMatrix;
  // Power iteration for the Perron eigenvalue and right eigenvector.
  std::array<double, 4> v{1, 1, 1, 1}, u{1, 1, 1, 1};
  double rho = 0;
  for (int it = 0; it < 100000; ++it) {
    std::array<double, 4> nv{}, nu{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        nv[i] += A[i][j] * v[j];
        nu[j] += u[i] * A[i][j];
      }
    double norm = 0, unorm = 0;
    for (double x : nv) norm = std::max(norm, std::abs(x));
    for (double x : nu) unorm = std::max(unorm, std::abs(x));
    double delta = 0;
    for (int i = 0; i < 4; ++i) {
      nv[i] /= norm;
      nu[i] /= unorm;
      delta = std::max(delta, std::abs(nv[i] - v[i]) + std::abs(nu[i] - u[i]));
    }
    v = nv;
    u = nu;
    rho = norm;
    if (delta < 1e-15 && it > 2) break;
  }
  parry_.eigenvalue = rho;
  double dot = 0;
  for (int i = 0; i < 4; ++i) dot += u[i] * v[i];
  for (int i = 0; i < 4; ++i) {
    parry_.pi[i] = u[i] * v[i] / dot;
    for (int j = 0; j < 4; ++j)
      parry_.P[i][j] = A[i][j] ? A[i][j] * v[j] / (rho * v[i]) : 0.0;
  }
  double h = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (parry_.P[i][j] > 0)
        h -= parry_.pi[i] * parry_.P[i][j] * std::log(parry_.P[i][j]);
  parry_.entropy = h;
}

ExWord MarkovChain::sample_path(uint64_t seed, size_t length) const {
  CounterRng rng(seed);
  ExWord out;
  out.reserve(length);
  // Stationary start.
  double r = rng.next_double(), acc = 0;
  int state = 3;
  for (int i = 0; i < 4; ++i) {
    acc += parry_.pi[i];
    if (r < acc) {
      state = i;
      break;
    }
  }
  for (size_t k = 0; k < length; ++k) {
    out.push_back(ExSymbol{static_cast<uint8_t>(state)});
    double t = rng.next_double(), a = 0;
    int next = -1;
    for (int j = 0; j < 4; ++j) {
      a += parry_.P[state][j];
      if (t < a) {
        next = j;
        break;
      }
    }
    state = next >= 0 ? next : state;
  }
  return out;
}

std::vector<ExWord> enumerate_admissible_cycles(int period) {
  std::vector<ExWord> out;
  if (period < 1) return out;
  ExWord cur(period, ExSymbol{0});
  auto is_least_rotation = [&](const ExWord& w) {
    for (int r = 1; r < period; ++r) {
      for (int i = 0; i < period; ++i) {
        uint8_t a = w[i].index, b = w[(i + r) % period].index;
        if (b < a) return false;
        if (b > a) break;
      }
    }
    return true;
  };
  // Depth-first enumeration over admissible paths that close up.
  std::vector<int> stack(period, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == period) {
      if (kTransitionMatrix[cur[period - 1].index][cur[0].index] &&
          is_least_rotation(cur))
        out.push_back(cur);
      return;
    }
    for (int s = 0; s < 4; ++s) {
      if (depth > 0 && !kTransitionMatrix[cur[depth - 1].index][s]) continue;
      cur[depth] = ExSymbol{static_cast<uint8_t>(s)};
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  (void)stack;
  return out;
}

}  // namespace stepskew

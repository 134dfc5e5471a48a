// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qcsim/bits.hpp"

namespace qcsim {

namespace {

struct OpcodeInfo {
  Opcode op;
  std::string_view name;
  int arity;  // qubit operands for gates, -1 for directives
};

constexpr std::array<OpcodeInfo, 32> kOpcodes = {{
    {Opcode::kI, "I", 1},
    {Opcode::kH, "H", 1},
    {Opcode::kX, "X", 1},
    {Opcode::kY, "Y", 1},
    {Opcode::kZ, "Z", 1},
    {Opcode::kS, "S", 1},
    {Opcode::kSDag, "S+", 1},
    {Opcode::kT, "T", 1},
    {Opcode::kTDag, "T+", 1},
    {Opcode::kU1, "U1", 1},
    {Opcode::kU2, "U2", 1},
    {Opcode::kU3, "U3", 1},
    {Opcode::kPlusX, "+X", 1},
    {Opcode::kMinusX, "-X", 1},
    {Opcode::kPlusY, "+Y", 1},
    {Opcode::kMinusY, "-Y", 1},
    {Opcode::kR, "R", 1},
    {Opcode::kRDag, "R", 1},
    {Opcode::kCnot, "CNOT", 2},
    {Opcode::kCPhase, "U", 2},
    {Opcode::kCPhaseDag, "U", 2},
    {Opcode::kToffoli, "TOFFOLI", 3},
    {Opcode::kBeginMeasurement, "BEGIN MEASUREMENT", -1},
    {Opcode::kGenerateEvents, "GENERATE EVENTS", -1},
    {Opcode::kMeasure, "M", -1},
    {Opcode::kQubits, "QUBITS", -1},
    {Opcode::kBitAssignment, "BIT ASSIGNMENT", -1},
    {Opcode::kShorbox, "SHORBOX", -1},
    {Opcode::kClear, "CLEAR", -1},
    {Opcode::kSet, "SET", -1},
    {Opcode::kDepolarizingChannel, "DEPOLARIZING CHANNEL", -1},
    {Opcode::kExit, "EXIT", -1},
}};

const OpcodeInfo& info(Opcode op) {
  return kOpcodes[static_cast<std::size_t>(op)];
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class LineParser {
 public:
  LineParser(int line, std::vector<std::string_view> args) : line_(line), args_(std::move(args)) {}

  void expect_count(std::size_t lo, std::size_t hi, std::string_view what) const {
    if (args_.size() < lo || args_.size() > hi) {
      std::ostringstream msg;
      msg << what << " expects ";
      if (lo == hi) {
        msg << lo;
      } else {
        msg << lo << " to " << hi;
      }
      msg << " argument(s), got " << args_.size();
      fail(msg.str());
    }
  }

  std::size_t size() const { return args_.size(); }
  std::string_view raw(std::size_t i) const { return args_[i]; }

  std::int64_t integer(std::size_t i) const {
    std::string_view tok = args_[i];
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("expected an integer, got '" + std::string(args_[i]) + "'");
    }
    return value;
  }

  double real(std::size_t i) const { return parse_real(args_[i]); }

  double parse_real(std::string_view tok) const {
    std::string_view body = tok;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      fail("expected a number, got '" + std::string(tok) + "'");
    }
    return value;
  }

  int qubit(std::size_t i, int n_qubits) const {
    const std::int64_t q = integer(i);
    if (q < 0 || q >= n_qubits) {
      fail("qubit index " + std::to_string(q) + " out of range 0.." +
           std::to_string(n_qubits - 1));
    }
    return static_cast<int>(q);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

 private:
  int line_;
  std::vector<std::string_view> args_;
};

const std::unordered_map<std::string, Opcode>& mnemonic_table() {
  static const std::unordered_map<std::string, Opcode> table = [] {
    std::unordered_map<std::string, Opcode> t;
    for (const auto& entry : kOpcodes) {
      if (entry.op == Opcode::kRDag || entry.op == Opcode::kCPhaseDag) continue;
      t.emplace(std::string(entry.name), entry.op);
    }
    return t;
  }();
  return table;
}

void check_distinct(const LineParser& p, const std::vector<int>& qubits) {
  for (std::size_t a = 0; a < qubits.size(); ++a) {
    for (std::size_t b = a + 1; b < qubits.size(); ++b) {
      if (qubits[a] == qubits[b]) {
        p.fail("duplicate qubit " + std::to_string(qubits[a]) + " in multi-qubit gate");
      }
    }
  }
}

void set_phase_exponent(const LineParser& p, std::size_t pos, Instruction& instr, Opcode dagger) {
  const std::int64_t k = p.integer(pos);
  const bool negative = !p.raw(pos).empty() && p.raw(pos).front() == '-';
  if (negative) instr.opcode = dagger;
  const std::int64_t magnitude = k < 0 ? -k : k;
  if (magnitude > 1000) p.fail("phase exponent k out of range");
  instr.ints = {magnitude};
}

NoiseConfig parse_noise(const LineParser& p, std::string_view rest) {
  // Keyword arguments in any order: P_X = a , P_Y = b , P_Z = c , SEED = k
  std::string normalized(rest);
  for (char& c : normalized) {
    if (c == ',' || c == '=') c = ' ';
  }
  const auto toks = split_ws(normalized);
  if (toks.size() % 2 != 0) p.fail("DEPOLARIZING CHANNEL expects KEY = value pairs");
  NoiseConfig noise;
  bool seen[4] = {false, false, false, false};
  for (std::size_t i = 0; i < toks.size(); i += 2) {
    const std::string key = upper(toks[i]);
    int slot = -1;
    if (key == "P_X") slot = 0;
    if (key == "P_Y") slot = 1;
    if (key == "P_Z") slot = 2;
    if (key == "SEED") slot = 3;
    if (slot < 0) p.fail("unknown DEPOLARIZING CHANNEL argument '" + std::string(toks[i]) + "'");
    if (seen[slot]) p.fail("repeated DEPOLARIZING CHANNEL argument " + key);
    seen[slot] = true;
    if (slot == 3) {
      std::int64_t seed = 0;
      std::string_view tok = toks[i + 1];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), seed);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) p.fail("SEED must be an integer");
      if (seed >= 2147483647) p.fail("SEED must be smaller than 2^31-1");
      noise.seed = seed;
    } else {
      const double v = p.parse_real(toks[i + 1]);
      (slot == 0 ? noise.p_x : slot == 1 ? noise.p_y : noise.p_z) = v;
    }
  }
  auto bad = [](double v) { return !(v >= 0.0 && v <= 1.0); };
  if (bad(noise.p_x) || bad(noise.p_y) || bad(noise.p_z)) {
    p.fail("depolarizing probabilities must lie in [0, 1]");
  }
  if (noise.p_x + noise.p_y + noise.p_z > 1.0 + 1e-12) {
    p.fail("depolarizing probabilities must sum to at most 1");
  }
  return noise;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

std::string_view mnemonic(Opcode op) { return info(op).name; }

bool is_gate(Opcode op) { return info(op).arity > 0; }

int gate_arity(Opcode op) { return std::max(info(op).arity, 0); }

BitPermutation::BitPermutation(std::vector<int> perm) : perm_(std::move(perm)) {
  if (!is_bijection(perm_)) throw std::invalid_argument("BitPermutation: not a bijection");
}

BitPermutation BitPermutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return BitPermutation(std::move(p));
}

bool BitPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

BitPermutation BitPermutation::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int i = 0; i < size(); ++i) inv[perm_[i]] = i;
  return BitPermutation(std::move(inv));
}

BitPermutation BitPermutation::then(const BitPermutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("BitPermutation: size mismatch");
  std::vector<int> out(perm_.size());
  for (int i = 0; i < size(); ++i) out[i] = next.perm_[perm_[i]];
  return BitPermutation(std::move(out));
}

void BitPermutation::swap_logical(int a, int b) { std::swap(perm_[a], perm_[b]); }

bool BitPermutation::is_bijection(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool ValidationReport::has_errors() const {
  return std::any_of(issues.begin(), issues.end(),
                     [](const ValidationIssue& i) { return i.severity == Severity::kError; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << (issue.severity == Severity::kError ? "error" : "warning");
    if (issue.line > 0) out << " (line " << issue.line << ")";
    out << ": " << issue.message << '\n';
  }
  return out.str();
}

Circuit parse_program(std::string_view text) {
  Circuit circuit;
  bool have_qubits = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '!') continue;

    auto toks = split_ws(line);
    std::string head = upper(toks[0]);
    std::size_t consumed = 1;
    if ((head == "BEGIN" || head == "GENERATE" || head == "BIT" || head == "DEPOLARIZING") &&
        toks.size() > 1) {
      head += " " + upper(toks[1]);
      consumed = 2;
    }
    const auto& table = mnemonic_table();
    auto it = table.find(head);
    if (it == table.end()) {
      throw ParseError(line_no, "unknown mnemonic '" + std::string(toks[0]) + "'");
    }
    const Opcode op = it->second;
    LineParser p(line_no, std::vector<std::string_view>(toks.begin() + consumed, toks.end()));

    if (!have_qubits) {
      if (op != Opcode::kQubits) throw ParseError(line_no, "QUBITS must be first");
      p.expect_count(1, 1, "QUBITS");
      const std::int64_t n = p.integer(0);
      if (n < 2 || n > kMaxQubits) {
        p.fail("QUBITS must be larger than 1 and smaller than 64, got " + std::to_string(n));
      }
      circuit.n_qubits = static_cast<int>(n);
      circuit.bit_assignment = BitPermutation::identity(circuit.n_qubits);
      have_qubits = true;
      continue;
    }
    if (op == Opcode::kQubits) p.fail("QUBITS may appear only once");

    const int n = circuit.n_qubits;
    Instruction instr;
    instr.opcode = op;
    instr.line = line_no;

    switch (op) {
      case Opcode::kU1:
        p.expect_count(2, 2, "U1");
        instr.qubits = {p.qubit(0, n)};
        instr.angles = {p.real(1)};
        break;
      case Opcode::kU2:
        p.expect_count(3, 3, "U2");
        instr.qubits = {p.qubit(0, n)};
        instr.angles = {p.real(1), p.real(2)};
        break;
      case Opcode::kU3:
        p.expect_count(4, 4, "U3");
        instr.qubits = {p.qubit(0, n)};
        instr.angles = {p.real(1), p.real(2), p.real(3)};
        break;
      case Opcode::kR:
        p.expect_count(2, 2, "R");
        instr.qubits = {p.qubit(0, n)};
        set_phase_exponent(p, 1, instr, Opcode::kRDag);
        break;
      case Opcode::kCnot:
        p.expect_count(2, 2, "CNOT");
        instr.qubits = {p.qubit(0, n), p.qubit(1, n)};
        check_distinct(p, instr.qubits);
        break;
      case Opcode::kCPhase:
        p.expect_count(3, 3, "U");
        instr.qubits = {p.qubit(0, n), p.qubit(1, n)};
        check_distinct(p, instr.qubits);
        set_phase_exponent(p, 2, instr, Opcode::kCPhaseDag);
        break;
      case Opcode::kToffoli:
        p.expect_count(3, 3, "TOFFOLI");
        instr.qubits = {p.qubit(0, n), p.qubit(1, n), p.qubit(2, n)};
        check_distinct(p, instr.qubits);
        break;
      case Opcode::kBeginMeasurement:
      case Opcode::kExit:
        p.expect_count(0, 0, std::string(mnemonic(op)));
        break;
      case Opcode::kGenerateEvents: {
        p.expect_count(1, 2, "GENERATE EVENTS");
        const std::int64_t events = p.integer(0);
        if (events <= 0) p.fail("GENERATE EVENTS needs a positive number of events");
        instr.ints = {events, p.size() > 1 ? p.integer(1) : 0};
        break;
      }
      case Opcode::kMeasure:
      case Opcode::kClear:
      case Opcode::kSet:
        p.expect_count(1, 1, std::string(mnemonic(op)));
        instr.qubits = {p.qubit(0, n)};
        break;
      case Opcode::kBitAssignment: {
        if (p.size() != static_cast<std::size_t>(n)) {
          p.fail("malformed permutation: BIT ASSIGNMENT needs " + std::to_string(n) +
                 " entries, got " + std::to_string(p.size()));
        }
        std::vector<int> perm;
        for (std::size_t i = 0; i < p.size(); ++i) {
          const std::int64_t v = p.integer(i);
          if (v < 0 || v >= n) p.fail("malformed permutation: entry out of range");
          perm.push_back(static_cast<int>(v));
          instr.ints.push_back(v);
        }
        if (!BitPermutation::is_bijection(perm)) {
          p.fail("malformed permutation: entries must be a permutation of 0.." +
                 std::to_string(n - 1));
        }
        circuit.bit_assignment = BitPermutation(std::move(perm));
        break;
      }
      case Opcode::kShorbox: {
        p.expect_count(3, 3, "SHORBOX");
        const std::int64_t nx = p.integer(0);
        const std::int64_t g = p.integer(1);
        const std::int64_t y = p.integer(2);
        if (nx < 1 || nx >= n) p.fail("SHORBOX n_x must satisfy 1 <= n_x < N");
        if (g < 2) p.fail("SHORBOX G must be at least 2");
        if (y < 1 || y >= g) p.fail("SHORBOX y must satisfy 1 <= y < G");
        instr.ints = {nx, g, y};
        break;
      }
      case Opcode::kDepolarizingChannel: {
        // Everything after the two keyword tokens; toks are views into line.
        const auto after = static_cast<std::size_t>(toks[1].data() - line.data()) + toks[1].size();
        NoiseConfig noise = parse_noise(p, line.substr(after));
        instr.angles = {noise.p_x, noise.p_y, noise.p_z};
        instr.ints = {noise.seed};
        circuit.noise = noise;
        break;
      }
      default:
        p.expect_count(1, 1, std::string(mnemonic(op)));
        instr.qubits = {p.qubit(0, n)};
        break;
    }
    circuit.instructions.push_back(std::move(instr));
  }
  if (!have_qubits) throw ParseError(0, "QUBITS must be first");
  return circuit;
}

std::string format_instruction(const Instruction& instr) {
  std::ostringstream out;
  out << mnemonic(instr.opcode);
  for (int q : instr.qubits) out << ' ' << q;
  switch (instr.opcode) {
    case Opcode::kRDag:
    case Opcode::kCPhaseDag:
      out << " -" << instr.ints.at(0);
      break;
    case Opcode::kDepolarizingChannel:
      out << " P_X = " << format_real(instr.angles.at(0)) << " , P_Y = "
          << format_real(instr.angles.at(1)) << " , P_Z = " << format_real(instr.angles.at(2))
          << " , SEED = " << instr.ints.at(0);
      break;
    default:
      for (double a : instr.angles) out << ' ' << format_real(a);
      for (std::int64_t v : instr.ints) out << ' ' << v;
      break;
  }
  return out.str();
}

std::string pretty_print(const Circuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.n_qubits) + "\n";
  for (const auto& instr : circuit.instructions) {
    out += format_instruction(instr);
    out += '\n';
  }
  return out;
}

ShorParams shor_params(const Instruction& shorbox) {
  if (shorbox.opcode != Opcode::kShorbox || shorbox.ints.size() != 3) {
    throw std::invalid_argument("shor_params: not a SHORBOX instruction");
  }
  return ShorParams{static_cast<int>(shorbox.ints[0]),
                    static_cast<std::uint64_t>(shorbox.ints[1]),
                    static_cast<std::uint64_t>(shorbox.ints[2])};
}

std::size_t exit_position(const Circuit& circuit) {
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    if (circuit.instructions[i].opcode == Opcode::kExit) return i;
  }
  return circuit.instructions.size();
}

ValidationReport validate(const Circuit& circuit) {
  ValidationReport report;
  auto add = [&](Severity s, const Instruction& instr, std::string msg) {
    report.issues.push_back({s, instr.line, std::move(msg)});
  };

  bool seen_gate = false;
  bool seen_state_change = false;
  bool terminated = false;
  int bit_assignments = 0;
  int noise_configs = 0;
  for (const auto& instr : circuit.instructions) {
    if (terminated) {
      add(Severity::kWarning, instr, "unreachable: " + format_instruction(instr) + " follows termination");
      continue;
    }
    const Opcode op = instr.opcode;
    switch (op) {
      case Opcode::kBitAssignment:
        if (seen_gate) add(Severity::kError, instr, "BIT ASSIGNMENT must precede the first gate instruction");
        if (++bit_assignments > 1) add(Severity::kError, instr, "BIT ASSIGNMENT given more than once");
        break;
      case Opcode::kDepolarizingChannel:
        if (seen_gate) {
          add(Severity::kError, instr, "DEPOLARIZING CHANNEL must precede the first gate instruction");
        }
        if (++noise_configs > 1) add(Severity::kError, instr, "DEPOLARIZING CHANNEL given more than once");
        break;
      case Opcode::kR:
      case Opcode::kRDag:
      case Opcode::kCPhase:
      case Opcode::kCPhaseDag:
        if (instr.ints.at(0) == 0) {
          add(Severity::kWarning, instr, "phase exponent k = 0 gives a phase of 2 pi (no-op)");
        }
        break;
      case Opcode::kShorbox: {
        const ShorParams sp = shor_params(instr);
        const int f_qubits = circuit.n_qubits - sp.n_x;
        const int needed = bits::ceil_log2(sp.modulus);
        if (f_qubits < needed) {
          add(Severity::kError, instr,
              "SHORBOX f-register (" + std::to_string(f_qubits) + " qubits) < ceil(log2 " +
                  std::to_string(sp.modulus) + ")=" + std::to_string(needed));
        }
        if (sp.modulus >= (std::uint64_t{1} << 32)) {
          add(Severity::kError, instr, "SHORBOX modulus must be below 2^32");
        }
        if (seen_state_change) {
          add(Severity::kWarning, instr, "SHORBOX expects the register to be in |0...0>");
        }
        if (sp.base == 1) {
          add(Severity::kWarning, instr, "SHORBOX base y = 1 has trivial period 1");
        } else if (std::gcd(sp.base, sp.modulus) != 1) {
          add(Severity::kWarning, instr, "SHORBOX base shares a factor with G");
        }
        if (sp.n_x < 64 && sp.modulus < (std::uint64_t{1} << 32) &&
            (std::uint64_t{1} << sp.n_x) < sp.modulus * sp.modulus) {
          add(Severity::kWarning, instr, "x-register smaller than G^2; period recovery may fail");
        }
        break;
      }
      case Opcode::kExit:
      case Opcode::kGenerateEvents:
        terminated = true;
        break;
      default:
        break;
    }
    if (is_gate(op) || op == Opcode::kShorbox || op == Opcode::kMeasure || op == Opcode::kClear ||
        op == Opcode::kSet) {
      seen_gate = true;
      seen_state_change = true;
    }
  }
  return report;
}

}  // namespace qcsim

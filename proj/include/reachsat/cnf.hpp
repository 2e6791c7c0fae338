#pragma once

// CNF substrate shared by every encoder: variables, literals, clause
// storage, Tseitin gates, cardinality constraints, little-endian bit-vector
// arithmetic and DIMACS I/O.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reachsat {

struct VarId {
  int index = 0;  // 1-based, dense per builder

  auto operator<=>(const VarId&) const = default;
};

// A variable together with a polarity, stored DIMACS-style as a signed
// integer (never zero for a valid literal).
class Lit {
 public:
  constexpr Lit() = default;

  static constexpr Lit positive(VarId v) { return Lit(v.index); }
  static constexpr Lit negative(VarId v) { return Lit(-v.index); }
  static constexpr Lit from_dimacs(int value) { return Lit(value); }

  constexpr VarId var() const { return VarId{value_ < 0 ? -value_ : value_}; }
  constexpr bool is_positive() const { return value_ > 0; }
  constexpr int to_dimacs() const { return value_; }
  constexpr bool valid() const { return value_ != 0; }

  constexpr Lit operator~() const { return Lit(-value_); }

  auto operator<=>(const Lit&) const = default;

 private:
  constexpr explicit Lit(int value) : value_(value) {}

  int value_ = 0;
};

using Clause = std::vector<Lit>;

// A finished formula. Immutable once handed out by a builder, so it may be
// shared across threads.
struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
  // Set when an empty clause was added; the clause itself is not stored.
  bool trivially_unsat = false;
};

// Unsigned integer as literals, least-significant bit first.
struct BitVec {
  std::vector<Lit> bits;

  int width() const { return static_cast<int>(bits.size()); }
};

// Threshold outputs of a Boolean sum: outputs[i] <=> (sum(inputs) >= i + 1).
// A counter built with a cap exposes only the first `cap` thresholds.
struct UnaryCount {
  std::vector<Lit> inputs;
  std::vector<Lit> outputs;

  int size() const { return static_cast<int>(inputs.size()); }
  // Literal for "sum >= k", 1 <= k <= outputs.size().
  Lit at_least(int k) const { return outputs.at(static_cast<std::size_t>(k - 1)); }
};

// x + 1 as a bit-vector plus the carry out of the top bit.
struct Increment {
  BitVec sum;
  Lit overflow;
};

class CnfBuilder {
 public:
  // Reserves variable 1 as the constant-true literal.
  CnfBuilder();

  Lit new_var();
  Lit new_var(std::string name);
  int var_count() const { return cnf_.num_vars; }

  Lit true_lit() const { return true_; }
  Lit false_lit() const { return ~true_; }
  bool is_constant(Lit l) const { return l.var() == true_.var(); }

  // Drops tautologies and duplicate literals. An empty clause marks the
  // formula as trivially unsatisfiable.
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits) {
    add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }
  // Clause `guards -> lits`, i.e. (~g1 v ... v ~gk v l1 v ... v lm).
  void add_guarded(std::span<const Lit> guards, std::span<const Lit> lits);

  bool trivially_unsat() const { return cnf_.trivially_unsat; }
  std::size_t clause_count() const { return cnf_.clauses.size(); }
  const Cnf& formula() const { return cnf_; }
  Cnf release() &&;

  void set_name(VarId v, std::string name);
  // Empty when the variable carries no name.
  const std::string& name(VarId v) const;
  // Sidecar text: one "index name" line per named variable.
  void write_var_map(std::ostream& out) const;

 private:
  Cnf cnf_;
  Lit true_;
  std::vector<std::string> names_;
  Clause scratch_;
};

// --- Tseitin gates --------------------------------------------------------

Lit gate_and(CnfBuilder& b, std::span<const Lit> lits);
Lit gate_or(CnfBuilder& b, std::span<const Lit> lits);
Lit gate_and(CnfBuilder& b, std::initializer_list<Lit> lits);
Lit gate_or(CnfBuilder& b, std::initializer_list<Lit> lits);
Lit gate_implies(CnfBuilder& b, Lit a, Lit c);
Lit gate_iff(CnfBuilder& b, Lit x, Lit y);
Lit gate_xor(CnfBuilder& b, Lit x, Lit y);

// --- Cardinality ----------------------------------------------------------

void at_least_one(CnfBuilder& b, std::span<const Lit> lits);
// Pairwise up to kPairwiseAmoLimit literals, sequential ladder above.
void at_most_one(CnfBuilder& b, std::span<const Lit> lits);
void exactly_one(CnfBuilder& b, std::span<const Lit> lits);

inline constexpr std::size_t kPairwiseAmoLimit = 6;

// Totalizer over `lits`. With a cap, only thresholds 1..min(cap, n) are
// built, which keeps the counter linear-ish for small caps.
UnaryCount unary_count(CnfBuilder& b, std::span<const Lit> lits,
                       std::optional<int> cap = std::nullopt);

void fix_count(CnfBuilder& b, const UnaryCount& count, int k);
void bound_ge(CnfBuilder& b, const UnaryCount& count, int k);
void bound_le(CnfBuilder& b, const UnaryCount& count, int k);

// --- Bit-vectors ----------------------------------------------------------

BitVec new_bitvec(CnfBuilder& b, int width, const std::string& name = {});
// Smallest width that holds 0..n-1: max(1, ceil(log2(n))).
int distance_width(int n);

// Ripple-carry x + 1. Gates are defined unconditionally, so one increment
// can serve every edge leaving the same vertex.
Increment bitvec_increment(CnfBuilder& b, const BitVec& x);
// guards -> (x == y)
void bitvec_eq(CnfBuilder& b, const BitVec& x, const BitVec& y,
               std::span<const Lit> guards);
// guard -> (y == x + 1), overflow excluded.
void bitvec_successor(CnfBuilder& b, const BitVec& x, const BitVec& y, Lit guard);
// guard -> (x == c)
void bitvec_eq_const(CnfBuilder& b, const BitVec& x, std::uint64_t c, Lit guard);
void bitvec_eq_const(CnfBuilder& b, const BitVec& x, std::uint64_t c,
                     std::span<const Lit> guards);
// x < c, unconditionally.
void bitvec_lt_const(CnfBuilder& b, const BitVec& x, std::uint64_t c);

// --- DIMACS ---------------------------------------------------------------

void emit_dimacs(const Cnf& cnf, std::ostream& out);
inline void emit_dimacs(const CnfBuilder& b, std::ostream& out) { emit_dimacs(b.formula(), out); }
// Throws ParseError on malformed input. Empty clauses set trivially_unsat.
Cnf parse_dimacs(std::istream& in);

}  // namespace reachsat

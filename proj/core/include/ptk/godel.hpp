#pragma once

#include <optional>
#include <variant>

#include "ptk/syntax.hpp"

namespace ptk {

// Gödel code of a term or formula. Terms get even codes, formulas odd ones,
// so the two sorts never collide; within a sort each constructor carries a
// small tag paired with its payload via the Cantor pairing function.
struct GodelCode {
  Nat value;

  friend bool operator==(const GodelCode& a, const GodelCode& b) { return a.value == b.value; }
  friend bool operator<(const GodelCode& a, const GodelCode& b) { return a.value < b.value; }
};

// Cantor pairing pi(a, b) = (a+b)(a+b+1)/2 + b and its inverse.
Nat cantor_pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

GodelCode godel_encode(const Term& t);
GodelCode godel_encode(const Formula& f);

// Inverse of godel_encode; nullopt when the code decodes to nothing.
std::optional<std::variant<Formula, Term>> godel_decode(const GodelCode& c);

// Raw per-sort codes, exposed for the two-sorted formula coding.
Nat term_code(const Term& t);
Nat formula_code(const Formula& f);

}  // namespace ptk

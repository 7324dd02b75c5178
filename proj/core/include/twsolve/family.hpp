#pragma once

#include <string>
#include <vector>

#include "twsolve/sequences.hpp"

namespace tws {

// Sign of the (b +/- 1) factor: Plus is the Thabit form, Minus the Williams
// form.
enum class BaseSign { Plus, Minus };
// Sign of the trailing +/- 1: Minus is the "first kind", Plus the "second
// kind".
enum class TailSign { Plus, Minus };

/// One of the twelve concrete equations T_n = (b +/- 1) * b^l +/- 1
/// (three sequences x Thabit/Williams x first/second kind).
struct EquationFamily {
  SequenceId sequence;
  BaseSign base_sign;
  TailSign tail_sign;

  bool operator==(const EquationFamily&) const = default;

  // e.g. "perrin williams-first"
  std::string name() const;
  // e.g. "E_n = (b-1)*b^l - 1"
  std::string equation() const;
};

std::string to_string(BaseSign s);
std::string to_string(TailSign s);

// All 12 families in presentation order: for each sequence, thabit-first,
// thabit-second, williams-first, williams-second.
const std::vector<EquationFamily>& all_families();

}  // namespace tws

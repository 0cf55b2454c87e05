#pragma once

#include <string>

namespace monolab {

enum class MeasureKind {
  concurrence,             // C
  tangle,                  // squared concurrence as a base measure
  negativity,              // N
  convex_roof_negativity,  // Ncr
  eof,                     // Ef
  renyi,                   // renyi:<order>
  tsallis,                 // tsallis:<order>
};

// A measure choice with a positive power and two modifiers.
//
// Text grammar (CLI form):
//   ["a:"]["~"]BASE[":"ORDER]["^"EXPONENT]
// BASE in {C, N, Ncr, Ef, tangle, renyi, tsallis}; renyi/tsallis require an
// order, the rest reject one. "a:" selects the assisted (supremum) variant;
// "~" moves the exponent inside the ensemble average, i.e. the roof is taken
// over powered pure-state values instead of powering the roof value.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::concurrence;
  double param = 0.0;     // order for renyi/tsallis
  double exponent = 1.0;  // positive power
  bool assisted = false;
  bool tilde = false;

  void validate() const;
  std::string to_string() const;
  static MeasureSpec parse(const std::string& text);

  MeasureSpec base_only() const {
    MeasureSpec m = *this;
    m.exponent = 1.0;
    m.assisted = false;
    m.tilde = false;
    return m;
  }
};

std::string measure_kind_name(MeasureKind kind);

}  // namespace monolab

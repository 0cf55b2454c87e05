#include "monolab/measure_spec.hpp"

#include <cmath>
#include <sstream>

#include "monolab/errors.hpp"

namespace monolab {

namespace {

bool needs_param(MeasureKind kind) {
  return kind == MeasureKind::renyi || kind == MeasureKind::tsallis;
}

double parse_positive(const std::string& token, const char* what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw DomainError(std::string("bad ") + what + " '" + token + "'");
  }
  if (pos != token.size() || !std::isfinite(value) || value <= 0.0)
    throw DomainError(std::string(what) + " must be a positive real, got '" +
                      token + "'");
  return value;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

std::string measure_kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::concurrence: return "C";
    case MeasureKind::tangle: return "tangle";
    case MeasureKind::negativity: return "N";
    case MeasureKind::convex_roof_negativity: return "Ncr";
    case MeasureKind::eof: return "Ef";
    case MeasureKind::renyi: return "renyi";
    case MeasureKind::tsallis: return "tsallis";
  }
  throw InternalConsistencyError("unknown measure kind");
}

void MeasureSpec::validate() const {
  if (!(exponent > 0.0) || !std::isfinite(exponent))
    throw DomainError("measure exponent must be a positive real");
  if (needs_param(kind)) {
    if (!(param > 0.0) || !std::isfinite(param))
      throw DomainError(measure_kind_name(kind) + " order must be positive");
  }
}

std::string MeasureSpec::to_string() const {
  std::string out;
  if (assisted) out += "a:";
  if (tilde) out += "~";
  out += measure_kind_name(kind);
  if (needs_param(kind)) out += ":" + format_number(param);
  if (exponent != 1.0) out += "^" + format_number(exponent);
  return out;
}

MeasureSpec MeasureSpec::parse(const std::string& text) {
  MeasureSpec m;
  std::string rest = text;

  bool progress = true;
  while (progress) {
    progress = false;
    if (rest.rfind("a:", 0) == 0) {
      if (m.assisted) throw DomainError("duplicate 'a:' prefix in '" + text + "'");
      m.assisted = true;
      rest = rest.substr(2);
      progress = true;
    } else if (!rest.empty() && rest[0] == '~') {
      if (m.tilde) throw DomainError("duplicate '~' prefix in '" + text + "'");
      m.tilde = true;
      rest = rest.substr(1);
      progress = true;
    }
  }

  if (auto caret = rest.find('^'); caret != std::string::npos) {
    m.exponent = parse_positive(rest.substr(caret + 1), "exponent");
    rest = rest.substr(0, caret);
  }

  std::string param_text;
  if (auto colon = rest.find(':'); colon != std::string::npos) {
    param_text = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }

  if (rest == "C") m.kind = MeasureKind::concurrence;
  else if (rest == "tangle") m.kind = MeasureKind::tangle;
  else if (rest == "N") m.kind = MeasureKind::negativity;
  else if (rest == "Ncr") m.kind = MeasureKind::convex_roof_negativity;
  else if (rest == "Ef") m.kind = MeasureKind::eof;
  else if (rest == "renyi") m.kind = MeasureKind::renyi;
  else if (rest == "tsallis") m.kind = MeasureKind::tsallis;
  else throw DomainError("unknown measure '" + rest + "' in '" + text + "'");

  if (needs_param(m.kind)) {
    if (param_text.empty())
      throw DomainError(measure_kind_name(m.kind) +
                        " needs an order, e.g. '" +
                        measure_kind_name(m.kind) + ":2'");
    m.param = parse_positive(param_text, "order");
  } else if (!param_text.empty()) {
    throw DomainError("measure '" + rest + "' takes no order parameter");
  }

  m.validate();
  return m;
}

}  // namespace monolab

#include "liesimp/verdicts.hpp"

namespace liesimp {

std::string to_string(LieSimplicity s) {
  switch (s) {
    case LieSimplicity::simple: return "Simple";
    case LieSimplicity::not_simple: return "NotSimple";
    case LieSimplicity::trivial: return "Trivial";
    case LieSimplicity::inapplicable: return "Inapplicable";
    case LieSimplicity::undecided: return "Undecided";
  }
  return "Unknown";
}

std::string to_string(CenterClass c) {
  switch (c) {
    case CenterClass::scalar_multiples_of_identity: return "ScalarMultiplesOfIdentity";
    case CenterClass::zero: return "Zero";
    case CenterClass::inapplicable: return "Inapplicable";
  }
  return "Unknown";
}

}  // namespace liesimp

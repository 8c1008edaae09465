#include "algdil/dilation.hpp"

namespace algdil {

std::string_view operator_tag_name(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::U:
      return "U";
    case OperatorTag::V:
      return "V";
    case OperatorTag::W1:
      return "W1";
    case OperatorTag::W2:
      return "W2";
    case OperatorTag::W:
      return "W";
    case OperatorTag::WInv:
      return "Winv";
    case OperatorTag::SzNagyU:
      return "SzNagyU";
  }
  return "unknown";
}

}  // namespace algdil

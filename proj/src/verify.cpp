#include "algdil/verify.hpp"

namespace algdil {

void CheckParams::validate() const {
  if (max_power < 1) throw InvalidParams("max power N must be at least 1");
  if (trials < 1) throw InvalidParams("trials must be at least 1");
}

void CheckParams::validate_for_ando() const {
  validate();
  if (max_trunc < max_power) {
    throw InvalidParams("truncation level K_max must be at least the max power N");
  }
}

json CheckParams::to_json() const {
  return {{"max_power", max_power}, {"trunc", max_trunc}, {"trials", trials}, {"seed", seed}};
}

}  // namespace algdil

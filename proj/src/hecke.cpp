#include "thetalab/hecke.hpp"

namespace theta {

ModVec act_Ts_plus_one(const ModelTables& t, int gen, const ModVec& x) {
  ModVec out;
  Laurent v2p1 = Laurent::v(2) + Laurent(1);
  Laurent v2 = Laurent::v(2);
  for (auto& [id, a] : x.c) {
    switch (t.type_of[gen][id]) {
      case LocalType::Toral:
        out.add(id, a * v2p1);
        break;
      case LocalType::Lower:
        out.add(id, a);
        out.add(t.star_of[gen][id], a);
        break;
      case LocalType::Raise:
        out.add(id, a * v2);
        out.add(t.star_of[gen][id], a * v2);
        break;
    }
  }
  return out;
}

ModVec act_Ts(const ModelTables& t, int gen, const ModVec& x) {
  ModVec out = act_Ts_plus_one(t, gen, x);
  out -= x;
  return out;
}

ModVec act_word(const ModelTables& t, const std::vector<int>& word, const ModVec& x) {
  ModVec cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_Ts(t, *it, cur);
  return cur;
}

int act_v1(const ModelTables& t, int gen, int label) {
  return t.type_of[gen][label] == LocalType::Toral ? label : t.star_of[gen][label];
}

long long sign_character_value(bool length_zero) { return length_zero ? 1 : -1; }

}  // namespace theta

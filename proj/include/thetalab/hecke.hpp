#pragma once

// The generic Hecke-algebra action on the free module over the orbit labels:
// each generator acts through its local type at a label, with the quadratic
// relation (T_s + 1)(T_s - v^2) = 0 on the classified generators and an
// involution for the length-zero generator handled by the bimodule layer.

#include <map>
#include <vector>

#include "thetalab/laurent.hpp"
#include "thetalab/matchings.hpp"

namespace theta {

// sparse vector in the standard (orbit indicator) basis
struct ModVec {
  std::map<int, Laurent> c;  // label id -> coefficient

  void add(int id, const Laurent& a) {
    if (a.is_zero()) return;
    Laurent& slot = c[id];
    slot += a;
    if (slot.is_zero()) c.erase(id);
  }
  Laurent coeff(int id) const {
    auto it = c.find(id);
    return it == c.end() ? Laurent() : it->second;
  }
  ModVec scaled(const Laurent& f) const {
    ModVec r;
    for (auto& [id, a] : c) r.add(id, a * f);
    return r;
  }
  ModVec& operator+=(const ModVec& o) {
    for (auto& [id, a] : o.c) add(id, a);
    return *this;
  }
  ModVec& operator-=(const ModVec& o) {
    for (auto& [id, a] : o.c) add(id, -a);
    return *this;
  }
  bool operator==(const ModVec&) const = default;
  static ModVec unit(int id) {
    ModVec r;
    r.c[id] = Laurent(1);
    return r;
  }
};

// (T_s + 1) on an indicator:
//   toral:   (v^2 + 1) * self
//   lower:   self + companion
//   raise:   v^2 * (self + companion)
ModVec act_Ts_plus_one(const ModelTables& t, int gen, const ModVec& x);
ModVec act_Ts(const ModelTables& t, int gen, const ModVec& x);
// the operator product T_{w[0]} T_{w[1]} ... applied to x (rightmost first)
ModVec act_word(const ModelTables& t, const std::vector<int>& word, const ModVec& x);

// specialization v = 1: the group action on indicators (companion or fixed)
int act_v1(const ModelTables& t, int gen, int label);

// sign of the one-dimensional sign character on a classified generator (-1)
// and on the length-zero generator (+1); provided for the character layer
long long sign_character_value(bool length_zero);

}  // namespace theta

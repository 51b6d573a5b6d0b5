#pragma once

#include <string>
#include <vector>

#include "hypoly/combinatorics.hpp"

namespace hypoly {

/// Fate of one core component U_B when crossing the wall W_S from the side
/// where S is short.
struct ComponentChange {
  enum class Variant {
    Replaced,            // B = S: U_S^- replaced by U_{S^c}^+
    Unchanged,           // B meets S but is not contained in it
    BlowUpDown_insideS,  // B strictly inside S; center U_B^- ∩ U_S^-
    BlowUpDown_inSc,     // B inside S^c; center M_B^- ∩ M_S^-
  };
  Variant variant;
  std::string center;  // human-readable description of the blow-up center
};

struct WallCrossReport {
  Wall wall;
  IndexSet S_minus_short;  // the member of {S, S^c} short on the minus side
  IndexSet removed;        // = S
  IndexSet added;          // = S^c when |S^c| >= 2, else the empty set
  std::vector<std::pair<IndexSet, ComponentChange>> component_changes;
  std::string polygon_change;
};

/// The unique wall separating two adjacent chambers: exactly one canonical
/// epsilon sign flips between the two signatures.
inline Wall identify_wall(const WeightVector& alpha_minus,
                          const WeightVector& alpha_plus) {
  if (alpha_minus.n() != alpha_plus.n())
    throw BadShape("weight vectors have different lengths");
  ChamberSignature a = chamber_signature(alpha_minus);
  ChamberSignature b = chamber_signature(alpha_plus);
  std::vector<std::uint32_t> flips;
  for (const auto& [mask, sgn] : a.signs)
    if (b.signs.at(mask) != sgn) flips.push_back(mask);
  if (flips.empty()) throw SameChamber();
  if (flips.size() > 1)
    throw NotAdjacent(std::to_string(flips.size()) +
                      " epsilon signs change; chambers are not adjacent");
  return Wall{IndexSet(flips.front(), alpha_minus.n())};
}

/// Structured report of the Mukai-transformation bookkeeping for one wall
/// crossing, oriented so the recorded S is short on the minus side.
inline WallCrossReport crossing_report(const WeightVector& alpha_minus,
                                       const WeightVector& alpha_plus) {
  Wall wall = identify_wall(alpha_minus, alpha_plus);
  const int n = alpha_minus.n();
  IndexSet S = wall.discrete_data;
  if (!is_short(alpha_minus, S)) S = S.complement();
  IndexSet Sc = S.complement();

  WallCrossReport rep;
  rep.wall = wall;
  rep.S_minus_short = S;
  rep.removed = S;
  rep.added = Sc.card() >= 2 ? Sc : IndexSet(0, n);

  for (const auto& B : short_sets(alpha_minus, 2)) {
    ComponentChange ch;
    if (B == S) {
      ch.variant = ComponentChange::Variant::Replaced;
      ch.center = "U_" + S.str() + " replaced by the component of " + Sc.str() +
                  " on the plus side";
    } else if (B.proper_subset_of(S)) {
      ch.variant = ComponentChange::Variant::BlowUpDown_insideS;
      ch.center = "blow-up/down along U_" + B.str() + " ∩ U_" + S.str();
    } else if (B.intersect(S).empty()) {
      ch.variant = ComponentChange::Variant::BlowUpDown_inSc;
      ch.center = "blow-up/down along M_" + B.str() + " ∩ M_" + S.str();
    } else {
      ch.variant = ComponentChange::Variant::Unchanged;
      ch.center = "";
    }
    rep.component_changes.emplace_back(B, ch);
  }

  bool minus_nonempty = polygon_nonempty(alpha_minus);
  bool plus_nonempty = polygon_nonempty(alpha_plus);
  if (S.card() == 1 || S.card() == n - 1) {
    rep.polygon_change =
        "vanishing wall: the polygon space is " +
        std::string(minus_nonempty ? "nonempty" : "empty") + " on the minus side and " +
        std::string(plus_nonempty ? "nonempty" : "empty") + " on the plus side";
  } else if (minus_nonempty && plus_nonempty) {
    rep.polygon_change =
        "blow up M(minus) along M_" + S.str() + " ≅ CP^" +
        std::to_string(Sc.card() - 2) + ", then blow down to M_" + Sc.str() +
        " ≅ CP^" + std::to_string(S.card() - 2) + " in M(plus)";
  } else {
    rep.polygon_change = "a polygon space on one side is empty";
  }
  return rep;
}

}  // namespace hypoly

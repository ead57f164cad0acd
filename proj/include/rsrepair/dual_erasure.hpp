#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rsrepair/code.hpp"
#include "rsrepair/linalg.hpp"
#include "rsrepair/scheme.hpp"

namespace rsrepair {

/// Symbols held by the surviving nodes, as (node index, symbol) pairs.
/// Must cover exactly the n-2 nodes outside the erased pair.
using SurvivorList = std::vector<std::pair<std::uint32_t, Felem>>;

/// Plan for repairing the two erased symbols f(a*) (star) and f(a-bar)
/// (bar). U and V are bases of the root space K_{a*,a-bar}, extended to
/// full bases; the p checks are centered at a*, the q checks at a-bar.
/// Depth-two scales every p check by tau = v_1 / p_t(a-bar).
struct DualPlan {
  std::uint32_t idx_star = 0, idx_bar = 0;
  Scheme scheme = Scheme::DepthOne;
  BBasis basis_u, basis_v;    // size t-1, bases of the root space
  BBasis u_full, v_full;      // extended to size t
  std::vector<CheckSpec> p_checks, q_checks;  // t each
  Felem tau;                  // 1 for depth-one
  std::vector<Belem> dep_p;   // depth-one: p_t(a-bar) over V
  std::vector<Belem> dep_q;   // depth-one: q_t(a*) over U
  Belem cross_star;           // Tr(u_t(a-bar - a*)), nonzero
  Belem cross_bar;            // Tr(v_t(a* - a-bar)), nonzero

  // Cached per-node data so a run is table lookups only.
  std::vector<Felem> star_demands, bar_demands;        // lambda (and tau) folded in
  std::vector<std::vector<Belem>> star_combine;        // [i][node] = Tr(u_i(a - a*))
  std::vector<std::vector<Belem>> bar_combine;         // [i][node] = Tr(v_i(a - a-bar))
  BBasis star_recovery_dual;  // dual of {p_i(a*)} resp. {p*_i(a*)}
  BBasis bar_recovery_dual;   // dual of V'
};

/// One replacement node's progress through the protocol.
struct RnState {
  enum class Role { Star, Bar };
  Role role = Role::Star;
  std::vector<std::pair<std::uint32_t, Belem>> downloaded;  // node -> repair trace
  std::vector<Belem> partial_traces;  // t-1 traces of the own scaled symbol
  std::optional<Belem> exchanged_in, exchanged_out;
  std::optional<Felem> recovered;

  int downloaded_count() const { return static_cast<int>(downloaded.size()); }
  int exchanged_in_count() const { return exchanged_in ? 1 : 0; }
  /// Sub-symbols this RN pulled in: its repair bandwidth.
  int bandwidth() const { return downloaded_count() + exchanged_in_count(); }
};

/// Builds the deterministic plan (U = V = root space basis). Throws
/// SchemeInapplicableError when n-k < |B|^(t-1), when t = 1, or for
/// depth-one when the characteristic does not divide t.
DualPlan build_dual_plan(const Code& code, std::uint32_t idx_star,
                         std::uint32_t idx_bar, Scheme scheme);

/// Same, with caller-chosen root-space bases (they are validated to span
/// K_{a*,a-bar}).
DualPlan build_dual_plan_with_bases(const Code& code, std::uint32_t idx_star,
                                    std::uint32_t idx_bar, Scheme scheme,
                                    BBasis u, BBasis v);

/// Download Phase: both RNs pull one repair trace from each of the n-2
/// surviving nodes and fold them into their t-1 partial target traces.
/// Throws IncompleteDownloadError unless the survivor list is complete.
std::pair<RnState, RnState> download_phase(const Code& code,
                                           const DualPlan& plan,
                                           const SurvivorList& survivors);

/// Depth-one Collaboration Phase, either role: the repair trace
/// Tr(lambda f(peer)/(peer - own)) the peer would have served, synthesized
/// from the own partial traces (no recovered symbol needed). Throws
/// SequencingError before the download phase completes.
Belem collab_message_depth_one(const Code& code, const DualPlan& plan,
                               const RnState& state);

/// Forms the t-th trace from the peer's message, reconstructs, and records
/// the result in the state.
Felem complete_depth_one(const Code& code, const DualPlan& plan,
                         RnState& state, Belem incoming);

/// Depth-two step 1: bar's opening message Tr(q_1(a-bar) lambda f(a-bar)),
/// which equals the star side's missing t-th term. Already among bar's
/// partial traces.
Belem depth_two_bar_message(const Code& code, const DualPlan& plan,
                            const RnState& bar);

/// Depth-two step 2: star completes from bar's message.
Felem depth_two_complete_star(const Code& code, const DualPlan& plan,
                              RnState& star, Belem incoming);

/// Depth-two step 3: star's reply Tr(lambda f(a*)/(a* - a-bar)), computed
/// from the symbol it just recovered. Throws SequencingError before
/// recovery.
Belem depth_two_star_reply(const Code& code, const DualPlan& plan,
                           const RnState& star);

/// Depth-two step 4: bar completes from star's reply.
Felem depth_two_complete_bar(const Code& code, const DualPlan& plan,
                             RnState& bar, Belem incoming);

struct DualRepairResult {
  Felem star, bar;
  int star_bandwidth = 0, bar_bandwidth = 0;
};

/// Runs the full protocol for the plan's scheme in the required order.
DualRepairResult run_dual_repair(const Code& code, const DualPlan& plan,
                                 const SurvivorList& survivors);

}  // namespace rsrepair

#ifndef DELTALAB_COMMANDS_HPP
#define DELTALAB_COMMANDS_HPP

#include "deltalab/report.hpp"

namespace deltalab::cli {

/// Exit-code contract shared by the CLI and CI: 0 all checks pass, 1 at
/// least one verification failed, 2 invalid input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadInput = 2;

/// Exact verification of the mollifier: the instance conditions (evenness,
/// unit mass, Int D^2 = s) plus the five integral identities, at every sigma
/// of the schedule.
Report cmd_verify_mollifier(const RunConfig& cfg);

/// Association extraction for the configured model/derivative order, compared
/// against the applicable closed-form oracle when the model's class order
/// admits one.
Report cmd_associate(const RunConfig& cfg);

/// The full product table: the five worked examples and the normed-power
/// grid for p <= 2, extracted vs oracle side by side.
Report cmd_table(const RunConfig& cfg);

/// Divergence of the squared canonical delta embedding.
Report cmd_divergence(const RunConfig& cfg);

}  // namespace deltalab::cli

#endif

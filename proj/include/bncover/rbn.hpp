// rbn.hpp -- coverability under reconfigurable semantics. Receives are
// stripped from the process and added back letter by letter, once some
// node can provably reach a matching broadcast; coverability of the
// target is then decided in the fully unlocked process.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bncover/order.hpp"
#include "bncover/process.hpp"

namespace bncover {

struct UnlockState {
    std::vector<std::string> sub_alphabet;  // letters whose receives are still locked
    ProcessSpec active_spec;                // the process with unlocked receives added back
    std::size_t iterations = 0;             // main loop passes, including the final empty one
};

struct RbnCoverResult {
    Verdict verdict = Verdict::Uncoverable;
    UnlockState unlock;
    // The process-level coverability run that produced the verdict; holds
    // the witness basis element on a positive answer.
    CoverabilityResult<ProcessConfig> final_check;
};

// Decides whether the target can be covered by some node in a network of
// arbitrarily many copies of the process when the communication topology
// may be reconfigured between broadcasts. The iteration cap applies to
// each inner process-level coverability call.
RbnCoverResult rbn_coverable(const ProcessSpec& spec, const ProcessConfig& target,
                             std::optional<std::size_t> max_iterations = std::nullopt);

// The letters whose receive rules were added back, in declaration order.
std::vector<std::string> unlocked_letters(const UnlockState& st);

}  // namespace bncover

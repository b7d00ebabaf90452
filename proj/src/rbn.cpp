#include "bncover/rbn.hpp"

#include <algorithm>

namespace bncover {

RbnCoverResult rbn_coverable(const ProcessSpec& spec, const ProcessConfig& target,
                             std::optional<std::size_t> max_iterations) {
    validate(spec);
    validate_config(target, spec);

    ProcessSpec active = spec;
    std::erase_if(active.transitions,
                  [](const TransitionRule& t) { return t.kind == ActionKind::Receive; });
    std::vector<std::string> sub_alphabet = spec.alphabet;

    RbnCoverResult out;
    std::size_t iterations = 0;
    for (;;) {
        ++iterations;
        std::vector<TransitionRule> added;
        Wsts<ProcessConfig> sys = process_wsts(active);
        for (const std::string& a : std::vector<std::string>(sub_alphabet)) {
            bool unlocked = false;
            for (const auto& t : active.transitions) {
                if (t.kind != ActionKind::Broadcast || t.letter != a) continue;
                for (const auto& c : min_enabling(t)) {
                    auto check = backward_coverability(
                        sys, UpwardBasis<ProcessConfig>{{c}}, max_iterations);
                    if (check.verdict == Verdict::LimitExceeded) {
                        out.verdict = Verdict::LimitExceeded;
                        out.unlock = UnlockState{sub_alphabet, active, iterations};
                        out.final_check = std::move(check);
                        return out;
                    }
                    if (check.verdict == Verdict::Coverable) {
                        unlocked = true;
                        break;
                    }
                }
                if (unlocked) break;  // one coverable rule suffices for the letter
            }
            if (unlocked) {
                for (const auto& t : spec.transitions)
                    if (t.kind == ActionKind::Receive && t.letter == a) added.push_back(t);
                std::erase(sub_alphabet, a);
            }
        }
        if (added.empty()) break;
        active.transitions.insert(active.transitions.end(),
                                  std::make_move_iterator(added.begin()),
                                  std::make_move_iterator(added.end()));
    }

    auto final_check = backward_coverability(process_wsts(active),
                                             UpwardBasis<ProcessConfig>{{target}}, max_iterations);
    out.verdict = final_check.verdict;
    out.unlock = UnlockState{std::move(sub_alphabet), std::move(active), iterations};
    out.final_check = std::move(final_check);
    return out;
}

std::vector<std::string> unlocked_letters(const UnlockState& st) {
    std::vector<std::string> out;
    for (const auto& a : st.active_spec.alphabet)
        if (std::find(st.sub_alphabet.begin(), st.sub_alphabet.end(), a) ==
            st.sub_alphabet.end())
            out.push_back(a);
    return out;
}

}  // namespace bncover

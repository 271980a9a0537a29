#pragma once

namespace lclaw {

// Paranoid mode turns on the expensive internal consistency checks (claw-free
// preconditions, per-embedding induced re-verification, post-extension member
// checks). Off by default; the unit tests switch it on. Violations throw
// std::logic_error instead of silently continuing.
void set_paranoid_checks(bool enabled);
bool paranoid_checks();

} // namespace lclaw

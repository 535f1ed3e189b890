#pragma once

namespace qbmap {

/// Project version plus `git describe` output captured at configure time.
const char* version_tag();

}  // namespace qbmap

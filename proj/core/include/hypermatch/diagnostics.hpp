#pragma once

#include <functional>
#include <string_view>

namespace hypermatch {

using WarningSink = std::function<void(std::string_view)>;

/// Routes soft precondition warnings. The default sink writes to stderr.
/// Returns the previous sink.
WarningSink set_warning_sink(WarningSink sink);

void warn(std::string_view message);

}  // namespace hypermatch

#pragma once

#include <functional>
#include <iostream>
#include <string>

namespace qtherm {

// Non-fatal diagnostics (e.g. weak-coupling limit exceeded) go through a
// process-global handler so embedders and tests can redirect or silence
// them. Replace the handler before starting parallel work; it is not
// synchronized.
inline std::function<void(const std::string&)>& warning_handler() {
    static std::function<void(const std::string&)> handler =
        [](const std::string& msg) { std::cerr << "qtherm: warning: " << msg << '\n'; };
    return handler;
}

inline void warn(const std::string& msg) {
    if (warning_handler()) warning_handler()(msg);
}

}  // namespace qtherm

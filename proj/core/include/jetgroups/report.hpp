#pragma once

#include <string>

namespace jetgroups {

// Outcome of a verification routine. A failure carries the first
// counterexample found, serialized into `detail`.
struct Report {
    bool passed = true;
    std::string detail;

    static Report ok() { return {}; }
    static Report fail(std::string what) { return {false, std::move(what)}; }
};

} // namespace jetgroups

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "binlen/sylvester.hpp"

namespace binlen {

/// One pinned identity: a representation (or identity family) that must
/// expand bit-exactly. The check throws on any mismatch.
struct IdentityRecord {
    std::string id;
    std::string description;
    std::function<void()> check;
};

const std::vector<IdentityRecord>& identity_corpus();

struct IdentityReport {
    struct Row {
        std::string id;
        std::string description;
        bool pass;
        std::string error;
    };
    std::vector<Row> rows;
    bool all_pass = true;
};

IdentityReport run_identity_suite();

}  // namespace binlen

#pragma once

// JSON certificates for good partitions.
//
//   { "blocks": [ { "kind": "singleton|doubleton|quadrupleton",
//                   "members": [[i, j], ...], "provenance": "case1", "signs": [1, -1, ...] } ],
//     "n": 2, "pattern": [-1, 1], "version": "..." }
//
// Keys are sorted and indices are 1-based. A certificate carries its sign
// pattern, so validate_partition() needs nothing else to check it.

#include <stdexcept>
#include <string>
#include <string_view>

#include "pohst/partition.hpp"

namespace pohst {

/// Version string stamped into certificates and reports.
std::string_view builder_version();

struct Certificate {
    GoodPartition partition;
    std::string version;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Malformed JSON, or JSON that does not follow the certificate schema.
class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Certificate make_certificate(GoodPartition partition);

std::string serialize_certificate(const Certificate& cert, int indent = 2);

/// Parses without validating the partition itself.
Certificate parse_certificate(std::string_view text);

}  // namespace pohst

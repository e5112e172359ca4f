// JSON codecs for the CLI: sequences as [[n_i,k_i],...], paths as vertex
// lists, connectivity results and verification reports as flat objects with
// fixed key order.  Rationals are rendered as "p/q" strings in lowest terms.

#pragma once

#include <string>

#include <json.hpp>

#include "hnstrata/connectivity.hpp"
#include "hnstrata/oracle.hpp"
#include "hnstrata/sequence.hpp"

namespace hnstrata {

using ordered_json = nlohmann::ordered_json;

ordered_json blocks_to_json(const AdmissibleSequence& mu);
ordered_json path_to_json(const ConvexPath& path);

/// Parses [[n_1,k_1],...]; shape errors raise errc::parse_error, invalid
/// sequences propagate the validation error.
AdmissibleSequence sequence_from_json(const ordered_json& j);
AdmissibleSequence sequence_from_string(const std::string& text);

std::string status_name(ConnStatus status);
ordered_json connectivity_to_json(const ConnectivityResult& result);
ordered_json report_to_json(const VerifyReport& report);

}  // namespace hnstrata

#pragma once

#include <string>
#include <string_view>

#include "mdbv/scheme.hpp"

namespace mdbv {

// Text key-value files for keys and individual signatures. Integers are
// lowercase hex, points are hex of their compressed encoding, byte strings
// are hex. Loading validates everything it can and throws DecodeError
// naming the offending key.

// Group parameter keys plus `P0`.
std::string system_params_to_text(const SystemParams& params);
SystemParams system_params_from_text(std::string_view text);

// `s`.
std::string master_key_to_text(const MasterSecretKey& msk);
MasterSecretKey master_key_from_text(std::string_view text, const BilinearGroup& group);

// `id`, `x`, `Q`, `P`, `D`. Loading checks the credential invariants,
// including the partial-key pairing equation.
std::string credentials_to_text(const Mdbv& scheme, const VehicleCredentials& creds);
VehicleCredentials credentials_from_text(std::string_view text, const Mdbv& scheme);

// One signed datum as a vehicle hands it to the RSU.
struct SignedMessage {
  StateInfo delta;
  BatchEntry entry;
  IndividualSignature sig;
};

// `delta`, `id`, `P`, `data`, `R`, `V`.
std::string signed_message_to_text(const BilinearGroup& group, const SignedMessage& msg);
SignedMessage signed_message_from_text(std::string_view text, const BilinearGroup& group);

}  // namespace mdbv

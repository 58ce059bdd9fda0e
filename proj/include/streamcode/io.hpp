#pragma once

#include <string>
#include <vector>

#include "streamcode/block_code.hpp"
#include "streamcode/channel.hpp"
#include "streamcode/streaming.hpp"

namespace sc {

/// Code descriptor: {field:{p,m,modulus}, n, k, P, construction:{tag, params}}.
/// Loading then saving reproduces the input bytes for anything this writer produced.
std::string code_to_json(const SystematicCode& code);
SystematicCode code_from_json(const std::string& text);

/// {params, per_packet:[{t, recovered, time, deadline}], success, failures, ambiguities}.
std::string report_to_json(const DecodeReport& report);

/// One pattern per line, flags comma separated ("1,0,0,1").
std::string erasures_to_csv(const std::vector<ErasurePattern>& patterns);
std::vector<ErasurePattern> erasures_from_csv(const std::string& text);

/// [{t, packet:[...]}, ...]; slots not listed carry the zero packet.
std::string errors_to_json(const ErrorPattern& errors);
ErrorPattern errors_from_json(const std::string& text, const FieldPtr& field, std::size_t packet_size,
                              std::size_t horizon);

/// Messages as a nested integer array, one row per packet.
FieldMatrix messages_from_json(const std::string& text, const FieldPtr& field, std::size_t k);

std::string read_text_file(const std::string& path);

}  // namespace sc

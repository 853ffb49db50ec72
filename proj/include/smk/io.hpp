#pragma once

// Instance JSON format, one object per file:
//   { "n": int, "budget": number, "costs": [number...],
//     "objective": { "kind": "cut"|"coverage"|"revenue"|"table", ... },
//     "label": string }
// Kind payloads: cut {"edges":[[u,v,w]...]}; coverage {"item_weights":[...],
// "covers":[[item ids]...]}; revenue {"weights":[[...]], "alpha": number};
// table {"values": [2^n numbers in subset-mask order]}.

#include <cstdint>
#include <string>

#include "smk/core.hpp"

namespace smk {

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);  // throws ParseError

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// FNV-1a over the canonical (sorted-key, fixed-format) JSON dump. Manifests
// use this to detect fixture drift.
std::uint64_t instance_digest(const Instance& inst);

}  // namespace smk

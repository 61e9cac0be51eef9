#pragma once

#include <string>
#include <string_view>

#include "ballmodal/frames.hpp"
#include "ballmodal/kripke.hpp"
#include "ballmodal/proofs.hpp"

namespace ballmodal {

// Model documents:
//   {"worlds": ["w", "u"], "lattices": {"w": "B", "u": "A"},
//    "edges": [["w", "u"]], "ultrafilter": "e1",
//    "valuation": {"w": {"p": "1"}, "u": {"p": "e1"}}}
// Frame documents are the same without valuation and ultrafilter.
// Malformed documents throw InputError naming the offending field.
Frame frame_from_json(std::string_view text);
Model model_from_json(std::string_view text);
std::string frame_to_json(const Frame& frame);
std::string model_to_json(const Model& model);

// Proof documents:
//   {"name": "...", "steps": [{"premises": ["@p"], "conclusion": "@~p",
//    "rule": "BR", "cites": [0], "params": {"lambda": [], "gamma": [],
//    "phi": "p"}}]}
Derivation derivation_from_json(std::string_view text);
std::string derivation_to_json(const Derivation& d);

// Header frame_encoding,property_holds,formula_valid,witness,ultrafilter
// and one row per mismatch.
std::string correspondence_csv(const CorrespondenceReport& report);

}  // namespace ballmodal

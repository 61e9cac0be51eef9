#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ballmodal/algebra.hpp"
#include "ballmodal/kripke.hpp"
#include "ballmodal/syntax.hpp"

namespace ballmodal {

enum class FrameProperty {
  Reflexive,
  Serial,
  Symmetric,
  Transitive,
  Euclidean,
  OutOfBubble,
  SuperOutOfBubble,
  TransitiveThroughEquality,
  TransitiveThroughDifference,
};

std::string to_string(FrameProperty property);
// Accepts the snake_case names, plus "tte" and "ttd".
std::optional<FrameProperty> property_from_name(std::string_view name);
std::span<const FrameProperty> all_properties();

// Describes one violation of the property, or nothing when it holds.
std::optional<std::string> property_violation(FrameProperty property,
                                              const Frame& frame);
bool holds(FrameProperty property, const Frame& frame);

bool is_reflexive(const Frame& frame);
bool is_serial(const Frame& frame);
bool is_symmetric(const Frame& frame);
bool is_transitive(const Frame& frame);
bool is_euclidean(const Frame& frame);
bool is_out_of_bubble(const Frame& frame);
bool is_super_out_of_bubble(const Frame& frame);
bool is_tte(const Frame& frame);
bool is_ttd(const Frame& frame);

// Canonical frame order for n worlds: index = relation_mask * 3^n + labels,
// where bit (i*n + j) of the mask is the edge wi -> wj and the label vector
// is read as a base-3 number with the first world most significant.
std::uint64_t frame_count(std::size_t n);
Frame frame_at(std::size_t n, std::uint64_t index);
std::uint64_t frame_index(const Frame& frame);

// "n:mask:labels", e.g. "2:9:AB".
std::string frame_encoding(const Frame& frame);

// True when no permutation of the worlds yields a smaller canonical index.
bool is_canonical_representative(const Frame& frame);

struct EnumerationOptions {
  bool modulo_isomorphism = false;
};

// Visits frames in canonical order; returning false from `visit` stops.
void for_each_frame(std::size_t n, const EnumerationOptions& options,
                    const std::function<bool(const Frame&)>& visit);
std::vector<Frame> enumerate_frames(std::size_t n,
                                    const EnumerationOptions& options = {});

enum class MismatchDirection {
  FormulaValidPropertyFails,  // frame validates the formula, property fails
  PropertyHoldsFormulaInvalid,
};

std::string to_string(MismatchDirection direction);

struct Mismatch {
  Frame frame;
  Ultrafilter ultrafilter;
  MismatchDirection direction;
  // Property violation description, or the countermodel summary.
  std::string witness;
  std::optional<Model> countermodel;
};

struct CorrespondenceReport {
  FrameProperty property;
  Formula formula;
  std::size_t max_worlds = 0;
  std::vector<Ultrafilter> ultrafilters;
  std::vector<std::uint64_t> frames_per_size;  // index 0 is one world
  std::uint64_t frames_checked = 0;
  std::vector<Mismatch> mismatches;  // sorted by (world count, index, uf)

  bool holds() const { return mismatches.empty(); }
  std::size_t count(MismatchDirection direction) const;
};

CorrespondenceReport correspondence_check(FrameProperty property,
                                          const Formula& f,
                                          std::size_t max_worlds,
                                          std::span<const Ultrafilter> ufs,
                                          const SearchLimits& limits = {},
                                          const EnumerationOptions& options = {});

// Named frames used to reproduce the characterization results.
// euc3: three mutually accessible worlds (self-loops included) w, u, v.
Frame euc3(Lattice w = Lattice::B, Lattice u = Lattice::B,
           Lattice v = Lattice::A);
// Root w reaching two three-world cliques; super out of the bubble.
Frame soob_f();
// Same shape with the root reaching two C-worlds; not super out of the bubble.
Frame soob_fprime();

std::vector<std::string> fixture_names();
std::optional<Frame> fixture(std::string_view name);

struct Disagreement {
  Formula formula;
  Ultrafilter ultrafilter;
  bool valid_in_first = false;
  bool valid_in_second = false;
};

struct IndiscernibilityReport {
  std::size_t formulas_checked = 0;
  std::vector<Ultrafilter> ultrafilters;
  std::vector<Disagreement> disagreements;

  bool agree() const { return disagreements.empty(); }
};

// Compares frame validity of every corpus formula on two frames.
IndiscernibilityReport indiscernibility_check(
    const Frame& first, const Frame& second, const std::vector<Formula>& corpus,
    std::span<const Ultrafilter> ufs, const SearchLimits& limits = {});

}  // namespace ballmodal

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ballmodal/algebra.hpp"
#include "ballmodal/syntax.hpp"

namespace ballmodal {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite many-logics frame: worlds, accessibility relation, and the lattice
// each world lives in.
class Frame {
 public:
  Frame(std::vector<std::string> names, std::vector<Lattice> lattices,
        const std::vector<Edge>& edges);

  // Worlds named w1 .. wn.
  static Frame with_default_names(std::vector<Lattice> lattices,
                                  const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t world) const { return names_.at(world); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Lattice lattice(std::size_t world) const { return lattices_[world]; }
  const std::vector<Lattice>& lattices() const { return lattices_; }

  std::span<const std::size_t> successors(std::size_t world) const {
    return successors_[world];
  }
  bool accesses(std::size_t from, std::size_t to) const {
    return adjacency_[from * size() + to] != 0;
  }
  // Row-major: (0,0), (0,1), ...
  std::vector<Edge> edges() const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  std::vector<std::string> names_;
  std::vector<Lattice> lattices_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<std::size_t>> successors_;
};

enum class UnknownVariables {
  Reject,           // evaluating an unassigned variable is an InputError
  DefaultToBottom,  // unassigned variables read as 0 at every world
};

class Model {
 public:
  explicit Model(Frame frame, Ultrafilter uf = {});

  const Frame& frame() const { return frame_; }
  Ultrafilter ultrafilter() const { return uf_; }
  void set_ultrafilter(Ultrafilter uf) { uf_ = uf; }

  UnknownVariables unknown_variables() const { return unknown_; }
  void set_unknown_variables(UnknownVariables policy) { unknown_ = policy; }

  // Throws InputError unless value lies in the world's carrier.
  void assign(std::size_t world, const std::string& variable, Element value);
  std::optional<Element> value(std::size_t world,
                               const std::string& variable) const;
  // Variables with at least one assignment, in sorted order.
  std::vector<std::string> variables() const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  Frame frame_;
  Ultrafilter uf_;
  UnknownVariables unknown_ = UnknownVariables::Reject;
  std::map<std::string, std::vector<std::optional<Element>>> values_;
};

// A formula flattened into post-order instructions, evaluated for every
// world of a frame at once.  Valuations are flat arrays indexed by
// world * variable_count + variable.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, std::vector<std::string> variable_order);

  const std::vector<std::string>& variables() const { return variables_; }

  // Returns the root's value at each world; the span aliases `scratch`.
  std::span<const Element> evaluate(const Frame& frame,
                                    std::span<const Element> valuation,
                                    std::vector<Element>& scratch) const;

 private:
  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t var = 0;
  };
  std::uint32_t emit(const Formula& f);

  std::vector<std::string> variables_;
  std::vector<Instr> program_;
};

// Value of f at every world of m.
std::vector<Element> evaluate_all(const Model& m, const Formula& f);
Element eval(const Model& m, std::size_t world, const Formula& f);
Element eval(const Model& m, std::string_view world, const Formula& f);

bool satisfies(const Model& m, std::size_t world, const Formula& f);
bool satisfies(const Model& m, std::string_view world, const Formula& f);

struct ModelValidity {
  bool valid = true;
  std::optional<std::size_t> failing_world;  // first one, when invalid
};
ModelValidity model_valid(const Model& m, const Formula& f);

// Caps shared by every exhaustive scan.  Exceeding one throws
// ResourceLimitExceeded.
struct SearchLimits {
  std::uint64_t max_valuations = std::uint64_t{1} << 32;  // per frame
  std::uint64_t max_frames = std::uint64_t{1} << 40;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  unsigned workers = 1;

  void check_deadline() const;
};

struct FrameValidity {
  bool valid = true;
  std::optional<Model> countermodel;  // the first refuting model
};

FrameValidity frame_valid(const Frame& frame, const Formula& f, Ultrafilter uf,
                          const SearchLimits& limits = {});

// One valuation pass answering frame validity for several ultrafilters;
// results are in the order of `ufs`.
std::vector<FrameValidity> frame_validity(const Frame& frame, const Formula& f,
                                          std::span<const Ultrafilter> ufs,
                                          const SearchLimits& limits = {});

// First model, in canonical order (frames by world count, relation mask and
// lattice labels; then ultrafilter in the given order; then valuations
// lexicographically) that validates every premise and not the goal.  An
// empty result means no countermodel up to the bound, not validity.  When
// `frame_filter` is set, frames it rejects are skipped.
using FrameFilter = std::function<bool(const Frame&)>;
std::optional<Model> countermodel_search(const std::vector<Formula>& premises,
                                         const Formula& goal,
                                         std::size_t max_worlds,
                                         std::span<const Ultrafilter> ufs,
                                         const SearchLimits& limits = {},
                                         const FrameFilter& frame_filter = {});

// Textbook two-valued Kripke semantics, kept separate from the evaluator
// above so it can serve as an oracle.  Variables map to one truth value
// per world.
using ClassicalValuation = std::map<std::string, std::vector<bool>>;

bool classical_reference_eval(const Frame& frame,
                              const ClassicalValuation& valuation,
                              std::size_t world, const Formula& f);

struct ClassicalCountermodel {
  Frame frame;
  ClassicalValuation valuation;
};

// Global-consequence countermodel search over ordinary Kripke models with at
// most max_worlds worlds.
std::optional<ClassicalCountermodel> classical_countermodel_search(
    const std::vector<Formula>& premises, const Formula& goal,
    std::size_t max_worlds);

}  // namespace ballmodal
